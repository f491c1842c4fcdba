#include "rootpair/counting.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rootpair/characters.hpp"
#include "rootpair/errors.hpp"
#include "rootpair/kernels.hpp"

namespace rootpair {

namespace {

constexpr double kImagTol = 1e-6;
constexpr double kIntegerTol = 1e-6;

uint32_t alpha_mod(int64_t alpha, uint32_t m) {
    int64_t r = alpha % static_cast<int64_t>(m);
    if (r < 0) {
        r += m;
    }
    return static_cast<uint32_t>(r);
}

// Per-instance scratch: u[n-1] = ind(n) (borrowed from the field table, never
// the sentinel), v[n] = ind(f(n)) with sentinel m at roots of f, and
// w[n-1] = (alpha*ind(n) + ind(f(n))) mod m = ind(n^alpha f(n)), sentinel
// where f(n) = 0. All hot loops below run on these three arrays.
struct IndexArrays {
    const uint32_t* u; // length p-1, entries in [0, m)
    std::vector<uint32_t> v; // length p, offset by +1 for n >= 1
    std::vector<uint32_t> w; // length p-1
};

IndexArrays build_arrays(const PrimeField& field, int64_t alpha,
                         const Polynomial& f) {
    const Kernel& kernel = active_kernel();
    const uint32_t p = field.p();
    const uint32_t m = field.group_order();
    IndexArrays arrays;
    arrays.u = field.index_table().data() + 1;
    std::vector<uint32_t> values(p);
    kernel.poly_eval(f.coeffs().data(), f.coeffs().size(), p, 0, values.data(), p);
    arrays.v.resize(p);
    kernel.gather_u32(field.index_table().data(), values.data(),
                      arrays.v.data(), p);
    arrays.w.resize(p - 1);
    kernel.affine_map(arrays.u, arrays.v.data() + 1, alpha_mod(alpha, m), m,
                      arrays.w.data(), p - 1);
    return arrays;
}

// The squarefree divisors d > 1 of p-1 flattened to per-character weights:
// one (mu(d)/phi(d), exponent) entry per character of exact order d.
struct WeightedCharacter {
    double coeff;
    uint32_t exponent;
};

std::vector<WeightedCharacter> weighted_characters(const PrimeField& field) {
    std::vector<WeightedCharacter> out;
    for (uint64_t d : divisors(field.group_order_factors())) {
        if (d == 1) {
            continue;
        }
        const Factorization fd = factorize(d);
        const int mu = mobius(fd);
        if (mu == 0) {
            continue;
        }
        const double coeff = static_cast<double>(mu) / static_cast<double>(euler_phi(fd));
        for (const Character& chi : characters_of_order(field, d)) {
            out.push_back({coeff, chi.exponent()});
        }
    }
    return out;
}

} // namespace

PairCountInstance make_instance(const PrimeField& field, int64_t alpha,
                                Polynomial f) {
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("make_instance: f must have positive degree");
    }
    const AdmissibilityResult admissibility = check_admissibility(f, field);
    if (!admissibility.coprime_to_x) {
        throw hypothesis_error("f and x are not coprime (f(0) = 0 mod p)");
    }
    if (admissibility.offending_d) {
        throw hypothesis_error("f is a " + std::to_string(*admissibility.offending_d)
                               + "-th power in F_p[x]");
    }
    return PairCountInstance(field, alpha, std::move(f), admissibility);
}

double primitivity_indicator(const PrimeField& field, uint32_t n) {
    if (n == 0 || n >= field.p()) {
        throw usage_error("primitivity_indicator: n must lie in [1, p)");
    }
    const Factorization& pm1 = field.group_order_factors();
    std::complex<double> acc;
    for (uint64_t d : divisors(pm1)) {
        const Factorization fd = factorize(d);
        const int mu = mobius(fd);
        if (mu == 0) {
            continue;
        }
        std::complex<double> inner;
        for (const Character& chi : characters_of_order(field, d)) {
            inner += eval(chi, n);
        }
        acc += (static_cast<double>(mu) / static_cast<double>(euler_phi(fd))) * inner;
    }
    acc *= static_cast<double>(euler_phi(pm1)) / static_cast<double>(field.group_order());
    if (std::abs(acc.imag()) > kImagTol) {
        throw internal_check_error(
            "primitivity_indicator: imaginary part failed to cancel");
    }
    return acc.real();
}

uint64_t count_bruteforce(const PrimeField& field, int64_t alpha,
                          const Polynomial& f) {
    const IndexArrays arrays = build_arrays(field, alpha, f);
    return active_kernel().count_pairs(field.coprime_flags().data(), arrays.u,
                                       arrays.w.data(), field.p() - 1);
}

uint64_t count_bruteforce(const PairCountInstance& inst) {
    return count_bruteforce(inst.field(), inst.alpha(), inst.f());
}

DecompositionResult count_decomposition(const PairCountInstance& inst) {
    const PrimeField& field = inst.field();
    const Kernel& kernel = active_kernel();
    const uint32_t p = field.p();
    const uint32_t m = field.group_order();
    const size_t len = p - 1;

    const IndexArrays arrays = build_arrays(field, inst.alpha(), inst.f());
    const ZetaTable& table = field.zeta();
    const ZetaView zeta{table.re.data(), table.im.data(), m};
    const std::vector<WeightedCharacter> chars = weighted_characters(field);

    const double density = static_cast<double>(euler_phi(field.group_order_factors()))
                           / static_cast<double>(m);
    const double scale = density * density;

    DecompositionResult result;
    result.main_term = static_cast<double>(p - 1 - inst.admissibility().r_f) * scale;

    // ind(xi) for the roots of f in the unit group; at most k of them.
    std::vector<uint32_t> root_indices;
    for (size_t n = 1; n < p; ++n) {
        if (arrays.v[n] == m) {
            root_indices.push_back(arrays.u[n - 1]);
        }
    }

    std::complex<double> s1, s2, s12, zero_adjust;
    for (const WeightedCharacter& c1 : chars) {
        s1 += c1.coeff * kernel.zeta_accum(arrays.u, arrays.u, c1.exponent, 0,
                                           zeta, len);
        std::complex<double> over_roots;
        for (uint32_t t : root_indices) {
            const uint32_t e = static_cast<uint32_t>(
                static_cast<uint64_t>(c1.exponent) * t % m);
            over_roots += std::complex<double>(table.re[e], table.im[e]);
        }
        zero_adjust -= c1.coeff * over_roots;
        for (const WeightedCharacter& c2 : chars) {
            s12 += c1.coeff * c2.coeff
                   * kernel.zeta_accum(arrays.u, arrays.w.data(), c1.exponent,
                                       c2.exponent, zeta, len);
        }
    }
    for (const WeightedCharacter& c2 : chars) {
        s2 += c2.coeff * kernel.zeta_accum(arrays.u, arrays.w.data(), 0,
                                           c2.exponent, zeta, len);
    }

    result.term_s1 = scale * s1;
    result.term_s2 = scale * s2;
    result.term_s12 = scale * s12;
    result.term_zero_adjust = scale * zero_adjust;

    const std::complex<double> tail = result.term_s1 + result.term_s2
                                      + result.term_s12 + result.term_zero_adjust;
    if (std::abs(tail.imag()) > kImagTol) {
        throw internal_check_error(
            "count_decomposition: imaginary parts failed to cancel");
    }
    result.total = result.main_term + tail.real();
    const double rounded = std::round(result.total);
    if (rounded < 0.0 || std::abs(result.total - rounded) > kIntegerTol) {
        throw internal_check_error(
            "count_decomposition: total is not a nonnegative integer");
    }
    return result;
}

ClaimTerms claim_terms(const PairCountInstance& inst) {
    const DecompositionResult d = count_decomposition(inst);
    return ClaimTerms{std::abs(d.term_s1), std::abs(d.term_s2),
                      std::abs(d.term_s12)};
}

std::optional<uint32_t> search_existence(const PrimeField& field,
                                         const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("search_existence: f must have positive degree");
    }
    const uint32_t p = field.p();
    for (uint32_t xi = 1; xi < p; ++xi) {
        if (!is_primitive_root(field, xi)) {
            continue;
        }
        const uint32_t value = evaluate(f, xi, field);
        if (value != 0 && is_primitive_root(field, value)) {
            return xi;
        }
    }
    return std::nullopt;
}

} // namespace rootpair
