#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rootpair/numtheory.hpp"

namespace rootpair {

/// Table of the (p-1)-th roots of unity zeta^j = exp(2*pi*i*j/(p-1)).
/// re/im have p-1+1 entries: index p-1 is an all-zero slot so that table
/// lookups indexed by "p-1" (the sentinel for a vanished argument) contribute
/// nothing to a character sum.
struct ZetaTable {
    uint32_t order = 0; // p-1
    std::vector<double> re;
    std::vector<double> im;
};

namespace detail {
struct ZetaCache;
} // namespace detail

/// The multiplicative structure of F_p for an odd prime p: factored group
/// order, the smallest primitive root g, and the full index (discrete-log)
/// table ind(n) with g^ind(n) = n. Immutable after construction; all queries
/// are safe for unsynchronized concurrent use.
class PrimeField {
public:
    uint32_t p() const { return p_; }
    /// p - 1, the order of the multiplicative group.
    uint32_t group_order() const { return p_ - 1; }
    uint32_t generator() const { return g_; }
    const Factorization& group_order_factors() const { return pm1_; }

    /// ind(n) for n in [1, p); ind(1) = 0, ind(g) = 1.
    uint32_t index_of(uint32_t n) const;

    /// True iff gcd(t, p-1) = 1, i.e. g^t is a primitive root. t in [0, p-1).
    bool coprime_index(uint32_t t) const { return coprime_[t] != 0; }

    /// Dense index table of size p. Entry 0 holds the sentinel p-1 so that a
    /// vanished polynomial value maps straight to the zero slot of ZetaTable.
    std::span<const uint32_t> index_table() const { return ind_; }

    /// Byte flags of size >= p: coprime_flags()[t] = 1 iff gcd(t, p-1) = 1 for
    /// t < p-1; entry p-1 and the padding behind it are 0. Padded so 4-byte
    /// gathers at any valid index stay in bounds.
    std::span<const uint8_t> coprime_flags() const { return coprime_; }

    /// Roots-of-unity table, built on first use and cached.
    const ZetaTable& zeta() const;

private:
    friend PrimeField build_field(uint32_t p);
    PrimeField() = default;

    uint32_t p_ = 0;
    uint32_t g_ = 0;
    Factorization pm1_;
    std::vector<uint32_t> ind_;
    std::vector<uint8_t> coprime_;
    std::shared_ptr<detail::ZetaCache> zeta_cache_;
};

/// Construct the field for an odd prime p, 3 <= p <= 10^7.
/// Rejects composites, p = 2, and oversized p.
PrimeField build_field(uint32_t p);

/// base^exp mod p. Negative exponents go through the modular inverse, so
/// base = 0 with exp < 0 is rejected (it marks an evaluation at a zero of f).
uint32_t pow_mod(const PrimeField& field, uint32_t base, int64_t exp);

/// Multiplicative order of n, computed as (p-1)/gcd(ind(n), p-1). Rejects n = 0.
uint32_t element_order(const PrimeField& field, uint32_t n);

/// True iff n generates the full multiplicative group. n = 0 returns false.
bool is_primitive_root(const PrimeField& field, uint32_t n);

} // namespace rootpair
