#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "rootpair/field.hpp"
#include "rootpair/poly.hpp"

namespace rootpair {

// An exact character value: the root of unity zeta^num with
// zeta = exp(2*pi*i/(p-1)). Kept in exponent form until accumulation so the
// only floating-point error in a character sum is the final summation.
struct UnityExponent {
    uint32_t num; // in {0 .. p-2}

    friend bool operator==(UnityExponent, UnityExponent) = default;
};

enum class SumRange { FullField, NonzeroOnly };

// Multiplicative character chi_a mod p: chi_a(n) = zeta^(a * ind(n)) on the
// unit group, chi_a(0) = 0. Immutable; holds a reference to its field.
class Character {
public:
    Character(const PrimeField& field, uint64_t a)
        : field_(&field), a_(static_cast<uint32_t>(a % field.group_order())) {}

    const PrimeField& field() const { return *field_; }
    uint32_t exponent() const { return a_; }
    bool is_principal() const { return a_ == 0; }
    uint64_t order() const;

    friend bool operator==(const Character& lhs, const Character& rhs) {
        return lhs.field_->p() == rhs.field_->p() && lhs.a_ == rhs.a_;
    }

private:
    const PrimeField* field_;
    uint32_t a_;
};

// The phi(d) characters of exact order d, ascending by exponent; d must
// divide p-1.
std::vector<Character> characters_of_order(const PrimeField& field, uint64_t d);

// nullopt encodes the value 0 (argument n = 0).
std::optional<UnityExponent> eval_exponent(const Character& chi, uint32_t n);

std::complex<double> eval(const Character& chi, uint32_t n);

Character char_power(const Character& chi, int64_t e);
Character char_product(const Character& chi1, const Character& chi2);

// Sum of chi(f(n)) for n over the whole field or over the unit group; terms
// with f(n) = 0 contribute 0.
std::complex<double> char_sum(const Character& chi, const Polynomial& f,
                              SumRange range);

// Sum of chi1(n^alpha) * chi2(f(n)) for n in {1 .. p-1}; requires f(0) != 0
// so that every term is defined even for negative alpha.
std::complex<double> twisted_sum(const Character& chi1, int64_t alpha,
                                 const Character& chi2, const Polynomial& f);

} // namespace rootpair
