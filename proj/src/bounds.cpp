#include "rootpair/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "rootpair/errors.hpp"
#include "rootpair/kernels.hpp"

namespace rootpair {

namespace {

constexpr double kSlackTol = 1e-6;
constexpr double kBoundaryTol = 1e-6;

BoundCheckRecord make_record(LemmaId id, double lhs, double rhs) {
    BoundCheckRecord rec;
    rec.lemma_id = id;
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.slack = rhs - lhs;
    rec.holds = rec.slack >= -kSlackTol;
    return rec;
}

SecondaryCheck make_secondary(std::string label, double lhs, double rhs) {
    return SecondaryCheck{std::move(label), lhs, rhs, rhs - lhs >= -kSlackTol};
}

std::string format_strict_note(const char* what, double lhs, double rhs) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s |sum| = %.12g vs %.12g: %s", what, lhs,
                  rhs, lhs <= rhs + kSlackTol ? "holds" : "exceeded (finding)");
    return std::string(buf);
}

void require_not_dth_power(const Polynomial& f, const Character& chi,
                           const PrimeField& field) {
    const uint64_t d = chi.order();
    if (is_dth_power(f, d, field)) {
        throw hypothesis_error("f is a " + std::to_string(d)
                               + "-th power in F_p[x] (d = ord chi)");
    }
}

TheoremReport build_report(const PrimeField& field, int64_t alpha,
                           const Polynomial& f, uint32_t r_f,
                           uint64_t exact_count, bool hypotheses_ok) {
    const Factorization& pm1 = field.group_order_factors();
    const uint32_t m = field.group_order();
    const double density = static_cast<double>(euler_phi(pm1)) / m;
    const double scale = density * density;
    const uint32_t om = omega(pm1);

    TheoremReport rep;
    rep.p = field.p();
    rep.alpha = alpha;
    rep.f_description = to_string(f);
    rep.k = f.degree();
    rep.r_f = r_f;
    rep.omega_pm1 = om;
    rep.phi_pm1 = euler_phi(pm1);
    rep.exact_count = exact_count;
    rep.main_term = static_cast<double>(m - r_f) * scale;
    rep.error_bound = static_cast<double>(rep.k)
                      * static_cast<double>(1ULL << (2 * om))
                      * std::sqrt(static_cast<double>(field.p())) * scale;
    rep.theta = (static_cast<double>(exact_count) - rep.main_term) / rep.error_bound;
    rep.theorem_holds = std::abs(rep.theta) < 1.0;
    rep.near_boundary = std::abs(std::abs(rep.theta) - 1.0) <= kBoundaryTol;
    rep.hypotheses_ok = hypotheses_ok;
    return rep;
}

} // namespace

std::string_view to_string(LemmaId id) {
    switch (id) {
    case LemmaId::Weil: return "weil";
    case LemmaId::Wan: return "wan";
    case LemmaId::Lemma4: return "lemma4";
    case LemmaId::Claim1: return "claim1";
    case LemmaId::Claim2: return "claim2";
    case LemmaId::Claim3: return "claim3";
    }
    return "unknown";
}

BoundCheckRecord verify_weil(const PrimeField& field, const Character& chi,
                             const Polynomial& f) {
    if (chi.is_principal()) {
        throw hypothesis_error("Weil bound requires a non-principal character");
    }
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("verify_weil: f must have positive degree");
    }
    require_not_dth_power(f, chi, field);

    const double sqrt_p = std::sqrt(static_cast<double>(field.p()));
    const double bound = static_cast<double>(f.degree() - 1) * sqrt_p;
    const double full = std::abs(char_sum(chi, f, SumRange::FullField));
    const double restricted = std::abs(char_sum(chi, f, SumRange::NonzeroOnly));

    BoundCheckRecord rec = make_record(LemmaId::Weil, full, bound);
    rec.secondary = make_secondary("restricted_plus_one", restricted, bound + 1.0);
    rec.note = format_strict_note("strict restricted form:", restricted, bound);
    return rec;
}

BoundCheckRecord verify_wan(const PrimeField& field,
                            const std::vector<Character>& chis,
                            const std::vector<Polynomial>& fs) {
    if (chis.empty() || chis.size() != fs.size()) {
        throw usage_error("verify_wan: need matching nonempty character and "
                          "polynomial lists");
    }
    uint64_t degree_sum = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (chis[i].is_principal()) {
            throw hypothesis_error("Wan bound: character " + std::to_string(i)
                                   + " is principal");
        }
        if (fs[i].is_zero() || fs[i].is_constant()) {
            throw usage_error("verify_wan: f_" + std::to_string(i)
                              + " must have positive degree");
        }
        require_not_dth_power(fs[i], chis[i], field);
        degree_sum += fs[i].degree();
    }
    for (size_t i = 0; i < fs.size(); ++i) {
        for (size_t j = i + 1; j < fs.size(); ++j) {
            if (!poly_gcd(fs[i], fs[j], field).is_constant()) {
                throw hypothesis_error("Wan bound: f_" + std::to_string(i)
                                       + " and f_" + std::to_string(j)
                                       + " are not coprime");
            }
        }
    }

    // Accumulated exponent of prod chi_i(f_i(n)) per n, sentinel-propagating:
    // any f_i(n) = 0 zeroes the whole product term.
    const Kernel& kernel = active_kernel();
    const uint32_t p = field.p();
    const uint32_t m = field.group_order();
    std::vector<uint32_t> acc(p - 1, 0);
    std::vector<uint32_t> values(p);
    std::vector<uint32_t> indices(p);
    for (size_t i = 0; i < fs.size(); ++i) {
        kernel.poly_eval(fs[i].coeffs().data(), fs[i].coeffs().size(), p, 0,
                         values.data(), p);
        kernel.gather_u32(field.index_table().data(), values.data(),
                          indices.data(), p);
        kernel.affine_map(indices.data() + 1, acc.data(), chis[i].exponent(), m,
                          acc.data(), p - 1);
    }
    const ZetaTable& table = field.zeta();
    const ZetaView zeta{table.re.data(), table.im.data(), m};
    const double lhs = std::abs(
        kernel.zeta_accum(acc.data(), acc.data(), 1, 0, zeta, p - 1));

    const double strict = static_cast<double>(degree_sum - 1)
                          * std::sqrt(static_cast<double>(p));
    BoundCheckRecord rec = make_record(LemmaId::Wan, lhs, strict + 1.0);
    rec.secondary = make_secondary("strict_form", lhs, strict);
    rec.note = format_strict_note("strict form:", lhs, strict);
    return rec;
}

BoundCheckRecord verify_lemma4(const PrimeField& field, const Character& chi1,
                               int64_t alpha, const Character& chi2,
                               const Polynomial& f) {
    if (chi2.is_principal()) {
        throw hypothesis_error("Lemma 4 requires non-principal chi2");
    }
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("verify_lemma4: f must have positive degree");
    }
    if (evaluate(f, 0, field) == 0) {
        throw hypothesis_error("Lemma 4 requires f coprime to x (f(0) != 0)");
    }
    require_not_dth_power(f, chi2, field);

    const double sqrt_p = std::sqrt(static_cast<double>(field.p()));
    const double lhs = std::abs(twisted_sum(chi1, alpha, chi2, f));
    const bool principal_branch = char_power(chi1, alpha).is_principal();

    if (principal_branch) {
        const double strict = static_cast<double>(f.degree() - 1) * sqrt_p;
        BoundCheckRecord rec = make_record(LemmaId::Lemma4, lhs, strict + 1.0);
        rec.secondary = make_secondary("strict_form", lhs, strict);
        rec.note = "branch=principal; "
                   + format_strict_note("strict form:", lhs, strict);
        return rec;
    }
    BoundCheckRecord rec = make_record(
        LemmaId::Lemma4, lhs, static_cast<double>(f.degree()) * sqrt_p);
    rec.note = "branch=nonprincipal";
    return rec;
}

TheoremReport verify_theorem(const PairCountInstance& inst) {
    return build_report(inst.field(), inst.alpha(), inst.f(),
                        inst.admissibility().r_f, count_bruteforce(inst), true);
}

TheoremReport verify_theorem_diagnostic(const PrimeField& field, int64_t alpha,
                                        const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("verify_theorem_diagnostic: f must have positive degree");
    }
    bool hypotheses_ok;
    try {
        const AdmissibilityResult adm = check_admissibility(f, field);
        hypotheses_ok = adm.coprime_to_x && !adm.offending_d;
    } catch (const hypothesis_error&) {
        hypotheses_ok = false; // deg f >= p: the d-th-power screen cannot run
    }
    return build_report(field, alpha, f, distinct_root_count(f, field),
                        count_bruteforce(field, alpha, f), hypotheses_ok);
}

std::vector<BoundCheckRecord> verify_claims(const PairCountInstance& inst) {
    const ClaimTerms terms = claim_terms(inst);
    const PrimeField& field = inst.field();
    const double p = static_cast<double>(field.p());
    const double sqrt_p = std::sqrt(p);
    const double scale = [&] {
        const double density =
            static_cast<double>(euler_phi(field.group_order_factors()))
            / field.group_order();
        return density * density;
    }();
    const double weight =
        static_cast<double>((1ULL << omega(field.group_order_factors())) - 1);
    const double k = inst.k();

    std::vector<BoundCheckRecord> records;
    records.push_back(make_record(LemmaId::Claim1, terms.s1_mag, 1e-9 * p));
    records.push_back(
        make_record(LemmaId::Claim2, terms.s2_mag, weight * k * sqrt_p));
    records.push_back(make_record(LemmaId::Claim3, terms.s12_mag,
                                  weight * weight * k * sqrt_p));
    const double mags[] = {terms.s1_mag, terms.s2_mag, terms.s12_mag};
    for (size_t i = 0; i < records.size(); ++i) {
        records[i].secondary = make_secondary("unscaled_sharp", mags[i] / scale,
                                              records[i].rhs);
    }
    return records;
}

} // namespace rootpair
