#include "rootpair/poly.hpp"

#include <algorithm>
#include <numeric>

#include "rootpair/errors.hpp"

namespace rootpair {

namespace {

void trim(std::vector<uint32_t>& c) {
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
}

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            r = r * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Remainder of a mod b, b nonzero, all arithmetic mod p.
Polynomial poly_rem(const Polynomial& a, const Polynomial& b, uint32_t p) {
    const uint32_t db = b.degree();
    std::vector<uint32_t> r(a.coeffs().begin(), a.coeffs().end());
    if (a.is_zero() || a.degree() < db) {
        return Polynomial(std::move(r));
    }
    const uint64_t lb_inv = pow_mod_u64(b.leading_coeff(), p - 2, p);
    for (size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) {
            continue;
        }
        const uint64_t q = r[i] * lb_inv % p;
        for (uint32_t j = 0; j <= db; ++j) {
            uint64_t sub = q * b.coeff(j) % p;
            uint64_t cur = r[i - db + j];
            r[i - db + j] = static_cast<uint32_t>((cur + p - sub) % p);
        }
    }
    r.resize(db);
    trim(r);
    return Polynomial(std::move(r));
}

// Exact quotient a / b (remainder known to vanish).
Polynomial poly_quotient(const Polynomial& a, const Polynomial& b, uint32_t p) {
    if (a.is_zero()) {
        return Polynomial();
    }
    const uint32_t db = b.degree();
    std::vector<uint32_t> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<uint32_t> q(a.degree() - db + 1, 0);
    const uint64_t lb_inv = pow_mod_u64(b.leading_coeff(), p - 2, p);
    for (size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) {
            continue;
        }
        const uint64_t qc = r[i] * lb_inv % p;
        q[i - db] = static_cast<uint32_t>(qc);
        for (uint32_t j = 0; j <= db; ++j) {
            uint64_t sub = qc * b.coeff(j) % p;
            uint64_t cur = r[i - db + j];
            r[i - db + j] = static_cast<uint32_t>((cur + p - sub) % p);
        }
    }
    trim(q);
    return Polynomial(std::move(q));
}

Polynomial make_monic(const Polynomial& f, uint32_t p) {
    if (f.is_zero() || f.leading_coeff() == 1) {
        return f;
    }
    const uint64_t inv = pow_mod_u64(f.leading_coeff(), p - 2, p);
    std::vector<uint32_t> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) {
        x = static_cast<uint32_t>(x * inv % p);
    }
    return Polynomial(std::move(c));
}

// (a * b) mod modulus, schoolbook; degrees stay below 2*deg(modulus).
Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus, uint32_t p) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<uint32_t> prod(a.degree() + b.degree() + 1, 0);
    for (size_t i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) {
            continue;
        }
        const uint64_t ai = a.coeff(i);
        for (size_t j = 0; j <= b.degree(); ++j) {
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + ai * b.coeff(j)) % p);
        }
    }
    trim(prod);
    return poly_rem(Polynomial(std::move(prod)), modulus, p);
}

} // namespace

Polynomial::Polynomial(std::vector<uint32_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial Polynomial::from_integers(std::span<const int64_t> coeffs, uint32_t p) {
    std::vector<uint32_t> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int64_t r = coeffs[i] % static_cast<int64_t>(p);
        if (r < 0) {
            r += p;
        }
        c[i] = static_cast<uint32_t>(r);
    }
    return Polynomial(std::move(c));
}

uint32_t Polynomial::degree() const {
    if (coeffs_.empty()) {
        throw usage_error("degree of the zero polynomial is undefined");
    }
    return static_cast<uint32_t>(coeffs_.size() - 1);
}

uint32_t Polynomial::leading_coeff() const {
    if (coeffs_.empty()) {
        throw usage_error("the zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        const uint32_t c = f.coeff(i);
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0 || c != 1) {
            out += std::to_string(c);
        }
        if (i >= 1) {
            out += "x";
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

uint32_t evaluate(const Polynomial& f, uint32_t x, const PrimeField& field) {
    const uint32_t p = field.p();
    if (f.is_zero()) {
        return 0;
    }
    uint64_t acc = f.coeffs().back();
    for (size_t i = f.coeffs().size() - 1; i-- > 0;) {
        acc = (acc * x + f.coeff(i)) % p;
    }
    return static_cast<uint32_t>(acc);
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, const PrimeField& field) {
    if (a.is_zero() && b.is_zero()) {
        throw usage_error("poly_gcd(0, 0) is undefined");
    }
    const uint32_t p = field.p();
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = poly_rem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return make_monic(r0, p);
}

Polynomial derivative(const Polynomial& f, const PrimeField& field) {
    if (f.is_constant()) {
        return Polynomial();
    }
    const uint32_t p = field.p();
    std::vector<uint32_t> c(f.degree());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<uint32_t>(static_cast<uint64_t>(i + 1) * f.coeff(i + 1) % p);
    }
    return Polynomial(std::move(c));
}

uint32_t distinct_root_count(const Polynomial& f, const PrimeField& field) {
    if (f.is_zero()) {
        throw usage_error("distinct_root_count: f must be nonzero");
    }
    if (f.is_constant()) {
        return 0;
    }
    const uint32_t p = field.p();
    if (f.degree() == 1) {
        return 1;
    }

    // x^p mod f by repeated squaring in F_p[x]/(f).
    Polynomial x_poly({0, 1});
    Polynomial result({1});
    Polynomial base = poly_rem(x_poly, f, p);
    uint32_t e = p;
    while (e > 0) {
        if (e & 1) {
            result = mul_mod(result, base, f, p);
        }
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    // gcd(f, x^p - x) is the product of the distinct linear factors of f.
    std::vector<uint32_t> diff(std::max<size_t>(result.is_zero() ? 0 : result.degree() + 1, 2), 0);
    for (size_t i = 0; i < diff.size(); ++i) {
        diff[i] = result.coeff(i);
    }
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
    Polynomial g = poly_gcd(f, Polynomial(std::move(diff)), field);
    return g.is_constant() ? 0 : g.degree();
}

bool is_dth_power(const Polynomial& f, uint64_t d, const PrimeField& field) {
    if (d < 2) {
        throw usage_error("is_dth_power: d must be at least 2");
    }
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("is_dth_power: f must have positive degree");
    }
    const uint32_t p = field.p();
    if (f.degree() >= p) {
        throw hypothesis_error("is_dth_power requires p > deg f");
    }
    if (f.degree() % d != 0) {
        return false;
    }

    // Multiplicity check via repeated gcds. With p > deg f the derivative of a
    // nonconstant factor never vanishes, so gcd(f, f') = prod q_j^{e_j - 1}.
    Polynomial rem = poly_gcd(f, derivative(f, field), field); // prod q^{e-1}
    Polynomial sqfree = poly_quotient(make_monic(f, p), rem, p); // prod q
    uint32_t mult = 1;
    while (!sqfree.is_constant()) {
        Polynomial deeper = poly_gcd(sqfree, rem, field); // factors with e > mult
        Polynomial exactly = poly_quotient(sqfree, deeper, p); // factors with e = mult
        if (!exactly.is_constant() && mult % d != 0) {
            return false;
        }
        rem = poly_quotient(rem, deeper, p);
        sqfree = std::move(deeper);
        ++mult;
    }

    // Leading coefficient must itself be a d-th power in F_p^*.
    const uint64_t g = std::gcd(d, static_cast<uint64_t>(p - 1));
    return pow_mod_u64(f.leading_coeff(), (p - 1) / g, p) == 1;
}

AdmissibilityResult check_admissibility(const Polynomial& f, const PrimeField& field) {
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("check_admissibility: f must have positive degree");
    }
    AdmissibilityResult res;
    res.coprime_to_x = f.coeff(0) != 0;
    for (auto [q, e] : field.group_order_factors().factors) {
        (void)e;
        if (is_dth_power(f, q, field)) {
            res.offending_d = q;
            break;
        }
    }
    res.r_f = distinct_root_count(f, field);
    return res;
}

} // namespace rootpair
