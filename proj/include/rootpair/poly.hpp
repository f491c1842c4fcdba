#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootpair/field.hpp"

namespace rootpair {

/// Dense polynomial over F_p. coeff(i) is the coefficient of x^i, already
/// reduced into [0, p); the leading coefficient is nonzero. The zero
/// polynomial is the empty coefficient vector and has no degree: degree()
/// throws on it rather than returning a -1 that could leak into arithmetic.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial

    /// Coefficients must already be reduced mod p; trailing zeros are trimmed.
    explicit Polynomial(std::vector<uint32_t> coeffs);

    /// Reduce arbitrary integer coefficients mod p.
    static Polynomial from_integers(std::span<const int64_t> coeffs, uint32_t p);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    uint32_t degree() const; // throws usage_error on the zero polynomial
    uint32_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    uint32_t leading_coeff() const;
    std::span<const uint32_t> coeffs() const { return coeffs_; }

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<uint32_t> coeffs_;
};

/// Human-readable form, highest power first, e.g. "x^2 + 4x + 1".
std::string to_string(const Polynomial& f);

/// Admissibility of f against the hypotheses of the pair-counting theorem:
/// gcd(f, x) = 1 and f not a d-th power for any divisor d > 1 of p-1.
struct AdmissibilityResult {
    bool coprime_to_x = false;
    /// Smallest prime q | p-1 with f a q-th power, when one exists.
    std::optional<uint64_t> offending_d;
    /// R(f): number of distinct roots of f in F_p.
    uint32_t r_f = 0;
};

/// f(x) mod p by Horner's scheme.
uint32_t evaluate(const Polynomial& f, uint32_t x, const PrimeField& field);

/// Monic gcd; rejects gcd(0, 0).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, const PrimeField& field);

/// Formal derivative.
Polynomial derivative(const Polynomial& f, const PrimeField& field);

/// R(f) = deg gcd(f, x^p - x), with x^p reduced mod f by repeated squaring.
/// Rejects the zero polynomial; constants have no roots.
uint32_t distinct_root_count(const Polynomial& f, const PrimeField& field);

/// True iff f = h^d for some polynomial h over F_p. Decided by (a) d dividing
/// the multiplicity of every irreducible factor (repeated-gcd squarefree
/// decomposition, valid because p > deg f is required) and (b) the leading
/// coefficient being a d-th power in F_p^*. Rejects d < 2 and deg f >= p.
bool is_dth_power(const Polynomial& f, uint64_t d, const PrimeField& field);

/// Check the theorem's hypotheses on f (deg f >= 1 required). Testing prime
/// divisors of p-1 suffices for the d-th-power condition: a d-th power is a
/// q-th power for every prime q | d.
AdmissibilityResult check_admissibility(const Polynomial& f, const PrimeField& field);

} // namespace rootpair
