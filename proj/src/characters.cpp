#include "rootpair/characters.hpp"

#include <numeric>

#include "rootpair/errors.hpp"
#include "rootpair/kernels.hpp"

namespace rootpair {

namespace {

// ind(f(n)) for n = 0..p-1, with the sentinel m at positions where f(n) = 0.
std::vector<uint32_t> poly_index_map(const Polynomial& f, const PrimeField& field) {
    const Kernel& kernel = active_kernel();
    const uint32_t p = field.p();
    std::vector<uint32_t> values(p);
    kernel.poly_eval(f.coeffs().data(), f.coeffs().size(), p, 0, values.data(), p);
    std::vector<uint32_t> indices(p);
    kernel.gather_u32(field.index_table().data(), values.data(), indices.data(), p);
    return indices;
}

ZetaView zeta_view(const PrimeField& field) {
    const ZetaTable& table = field.zeta();
    return ZetaView{table.re.data(), table.im.data(), field.group_order()};
}

void require_same_field(const Character& chi1, const Character& chi2) {
    if (chi1.field().p() != chi2.field().p()) {
        throw usage_error("characters live in different fields");
    }
}

} // namespace

uint64_t Character::order() const {
    const uint32_t m = field_->group_order();
    return m / std::gcd(static_cast<uint64_t>(a_), static_cast<uint64_t>(m));
}

std::vector<Character> characters_of_order(const PrimeField& field, uint64_t d) {
    const uint32_t m = field.group_order();
    if (d == 0 || m % d != 0) {
        throw usage_error("characters_of_order: d must be a positive divisor of p-1");
    }
    std::vector<Character> out;
    for (uint64_t t = 1; t <= d; ++t) {
        if (std::gcd(t, d) == 1) {
            out.emplace_back(field, (m / d) * t % m);
        }
    }
    return out;
}

std::optional<UnityExponent> eval_exponent(const Character& chi, uint32_t n) {
    const PrimeField& field = chi.field();
    if (n >= field.p()) {
        throw usage_error("eval_exponent: residue out of range");
    }
    if (n == 0) {
        return std::nullopt;
    }
    const uint64_t e = static_cast<uint64_t>(chi.exponent()) * field.index_of(n)
                       % field.group_order();
    return UnityExponent{static_cast<uint32_t>(e)};
}

std::complex<double> eval(const Character& chi, uint32_t n) {
    const auto e = eval_exponent(chi, n);
    if (!e) {
        return {0.0, 0.0};
    }
    const ZetaTable& table = chi.field().zeta();
    return {table.re[e->num], table.im[e->num]};
}

Character char_power(const Character& chi, int64_t e) {
    const int64_t m = chi.field().group_order();
    int64_t a = static_cast<int64_t>(chi.exponent()) % m * (e % m) % m;
    if (a < 0) {
        a += m;
    }
    return Character(chi.field(), static_cast<uint64_t>(a));
}

Character char_product(const Character& chi1, const Character& chi2) {
    require_same_field(chi1, chi2);
    const uint64_t m = chi1.field().group_order();
    return Character(chi1.field(),
                     (static_cast<uint64_t>(chi1.exponent()) + chi2.exponent()) % m);
}

std::complex<double> char_sum(const Character& chi, const Polynomial& f,
                              SumRange range) {
    const PrimeField& field = chi.field();
    const std::vector<uint32_t> v = poly_index_map(f, field);
    const size_t start = range == SumRange::FullField ? 0 : 1;
    return active_kernel().zeta_accum(v.data() + start, v.data() + start, 0,
                                      chi.exponent(), zeta_view(field),
                                      field.p() - start);
}

std::complex<double> twisted_sum(const Character& chi1, int64_t alpha,
                                 const Character& chi2, const Polynomial& f) {
    require_same_field(chi1, chi2);
    const PrimeField& field = chi1.field();
    if (evaluate(f, 0, field) == 0) {
        throw hypothesis_error("twisted_sum requires f coprime to x (f(0) != 0)");
    }
    const Character twisted = char_power(chi1, alpha);
    const std::vector<uint32_t> v = poly_index_map(f, field);
    // ind(n) for n >= 1 is the index table itself, and never the sentinel.
    const uint32_t* u = field.index_table().data() + 1;
    return active_kernel().zeta_accum(u, v.data() + 1, twisted.exponent(),
                                      chi2.exponent(), zeta_view(field),
                                      field.p() - 1);
}

} // namespace rootpair
