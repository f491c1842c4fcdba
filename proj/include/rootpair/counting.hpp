#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "rootpair/field.hpp"
#include "rootpair/poly.hpp"

namespace rootpair {

/// A validated pair-counting instance: f has positive degree, is coprime to
/// x, and is not a d-th power for any divisor d > 1 of p-1. Built through
/// make_instance, which enforces those hypotheses; holds a reference to the
/// field, which must outlive the instance.
class PairCountInstance {
public:
    const PrimeField& field() const { return *field_; }
    int64_t alpha() const { return alpha_; }
    const Polynomial& f() const { return f_; }
    /// deg f.
    uint32_t k() const { return k_; }
    const AdmissibilityResult& admissibility() const { return admissibility_; }

private:
    friend PairCountInstance make_instance(const PrimeField&, int64_t, Polynomial);
    PairCountInstance(const PrimeField& field, int64_t alpha, Polynomial f,
                      AdmissibilityResult admissibility)
        : field_(&field), alpha_(alpha), f_(std::move(f)),
          k_(f_.degree()), admissibility_(admissibility) {}

    const PrimeField* field_;
    int64_t alpha_;
    Polynomial f_;
    uint32_t k_;
    AdmissibilityResult admissibility_;
};

/// Validates the hypotheses and builds an instance. Throws usage_error for a
/// constant f and hypothesis_error when f shares a root with x, is a d-th
/// power for some prime d | p-1, or has degree >= p (where the d-th-power
/// screen is unavailable).
PairCountInstance make_instance(const PrimeField& field, int64_t alpha,
                                Polynomial f);

/// The character-sum split of the pair count. main_term carries the
/// density heuristic; term_s1 is the chi_1-only block summed over the whole
/// unit group (exactly zero by orthogonality); term_s2 and term_s12 are the
/// chi_2 and mixed blocks. term_zero_adjust restricts the s1 block to n with
/// f(n) != 0: the four classical summands alone miss exactly this correction
/// whenever f has roots, and total = main + Re(s1 + s2 + s12 + zero_adjust)
/// is what equals the exact count.
struct DecompositionResult {
    double main_term = 0.0;
    std::complex<double> term_s1;
    std::complex<double> term_s2;
    std::complex<double> term_s12;
    std::complex<double> term_zero_adjust;
    double total = 0.0;
};

/// Magnitudes of the three non-main blocks, in the claims' order.
struct ClaimTerms {
    double s1_mag = 0.0;
    double s2_mag = 0.0;
    double s12_mag = 0.0;
};

/// Carlitz's indicator: (phi(p-1)/(p-1)) * sum over d | p-1 of
/// (mu(d)/phi(d)) * sum over chi of order d of chi(n). Evaluates to 1 when n
/// is a primitive root and 0 otherwise; accumulated in complex arithmetic,
/// the imaginary part is checked to vanish and the real part returned.
/// Rejects n = 0.
double primitivity_indicator(const PrimeField& field, uint32_t n);

/// Exact count of xi in [1, p) with xi and xi^alpha * f(xi) both primitive
/// roots; xi with f(xi) = 0 never counts (the pair value is 0).
uint64_t count_bruteforce(const PairCountInstance& inst);

/// Same count without hypothesis validation, for diagnostics and oracles.
uint64_t count_bruteforce(const PrimeField& field, int64_t alpha,
                          const Polynomial& f);

/// Recomputes the count through the character-sum decomposition. Verifies
/// internally that the imaginary parts cancel and the total lands on a
/// nonnegative integer; a violation throws internal_check_error.
DecompositionResult count_decomposition(const PairCountInstance& inst);

ClaimTerms claim_terms(const PairCountInstance& inst);

/// Smallest xi with xi and f(xi) both primitive roots (the alpha = 0
/// question), or nullopt if no such xi exists. Requires only deg f >= 1.
std::optional<uint32_t> search_existence(const PrimeField& field,
                                         const Polynomial& f);

} // namespace rootpair
