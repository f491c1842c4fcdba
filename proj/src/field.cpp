#include "rootpair/field.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "rootpair/errors.hpp"

namespace rootpair {

namespace detail {

struct ZetaCache {
    std::once_flag once;
    ZetaTable table;
};

} // namespace detail

namespace {

constexpr uint32_t kFieldSizeCap = 10'000'000;

bool is_odd_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (uint32_t q = 3; static_cast<uint64_t>(q) * q <= p; q += 2) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
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

// Inverse of a mod p via extended gcd; a must be nonzero mod p.
uint32_t inverse_mod(uint32_t a, uint32_t p) {
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) {
        t += p;
    }
    return static_cast<uint32_t>(t);
}

} // namespace

PrimeField build_field(uint32_t p) {
    if (p > kFieldSizeCap) {
        throw usage_error("build_field: p exceeds the 10^7 size cap");
    }
    if (!is_odd_prime(p)) {
        throw usage_error("build_field: p = " + std::to_string(p) + " is not an odd prime");
    }

    PrimeField field;
    field.p_ = p;
    const uint32_t m = p - 1;
    field.pm1_ = factorize(m);

    // Smallest primitive root: g is primitive iff g^((p-1)/q) != 1 for every
    // prime q | p-1.
    for (uint32_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto [q, e] : field.pm1_.factors) {
            (void)e;
            if (pow_mod_u64(g, m / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            field.g_ = g;
            break;
        }
    }

    field.ind_.assign(p, 0);
    field.ind_[0] = m; // sentinel: maps a zero value to the zero slot
    uint64_t cur = 1;
    for (uint32_t t = 0; t < m; ++t) {
        field.ind_[static_cast<uint32_t>(cur)] = t;
        cur = cur * field.g_ % p;
    }

    // coprime_[t] = 1 iff gcd(t, m) = 1, sieved by the prime factors of m.
    // Entry m and 3 padding bytes stay 0 (see coprime_flags()).
    field.coprime_.assign(static_cast<size_t>(m) + 4, 1);
    field.coprime_[m] = 0;
    field.coprime_[m + 1] = 0;
    field.coprime_[m + 2] = 0;
    field.coprime_[m + 3] = 0;
    for (auto [q, e] : field.pm1_.factors) {
        (void)e;
        for (uint64_t t = 0; t < m; t += q) {
            field.coprime_[t] = 0;
        }
    }

    field.zeta_cache_ = std::make_shared<detail::ZetaCache>();
    return field;
}

uint32_t PrimeField::index_of(uint32_t n) const {
    if (n == 0 || n >= p_) {
        throw usage_error("index_of: residue must lie in [1, p)");
    }
    return ind_[n];
}

const ZetaTable& PrimeField::zeta() const {
    std::call_once(zeta_cache_->once, [this] {
        ZetaTable& t = zeta_cache_->table;
        const uint32_t m = group_order();
        t.order = m;
        t.re.resize(static_cast<size_t>(m) + 1);
        t.im.resize(static_cast<size_t>(m) + 1);
        const double step = 2.0 * std::numbers::pi_v<double> / m;
        for (uint32_t j = 0; j < m; ++j) {
            t.re[j] = std::cos(step * j);
            t.im[j] = std::sin(step * j);
        }
        t.re[m] = 0.0;
        t.im[m] = 0.0;
    });
    return zeta_cache_->table;
}

uint32_t pow_mod(const PrimeField& field, uint32_t base, int64_t exp) {
    const uint32_t p = field.p();
    if (base >= p) {
        throw usage_error("pow_mod: base must lie in [0, p)");
    }
    if (exp >= 0) {
        return static_cast<uint32_t>(pow_mod_u64(base, static_cast<uint64_t>(exp), p));
    }
    if (base == 0) {
        throw usage_error("pow_mod: 0 has no inverse (negative exponent at a zero value)");
    }
    const uint32_t inv = inverse_mod(base, p);
    const uint64_t e = static_cast<uint64_t>(-(exp + 1)) + 1; // |exp| without overflow
    return static_cast<uint32_t>(pow_mod_u64(inv, e, p));
}

uint32_t element_order(const PrimeField& field, uint32_t n) {
    const uint32_t m = field.group_order();
    return m / std::gcd(field.index_of(n), m);
}

bool is_primitive_root(const PrimeField& field, uint32_t n) {
    if (n == 0 || n >= field.p()) {
        return false;
    }
    return field.coprime_index(field.index_of(n));
}

} // namespace rootpair
