#include "doctest.h"

#include <cmath>
#include <complex>

#include "rootpair/bounds.hpp"
#include "rootpair/errors.hpp"

using namespace rootpair;

TEST_CASE("lemma id names") {
    CHECK(to_string(LemmaId::Weil) == "weil");
    CHECK(to_string(LemmaId::Wan) == "wan");
    CHECK(to_string(LemmaId::Lemma4) == "lemma4");
    CHECK(to_string(LemmaId::Claim1) == "claim1");
    CHECK(to_string(LemmaId::Claim2) == "claim2");
    CHECK(to_string(LemmaId::Claim3) == "claim3");
}

TEST_CASE("verify_weil fixtures") {
    SUBCASE("degree 1 gives a complete character sum") {
        const PrimeField field = build_field(5);
        const Character chi(field, 2); // quadratic
        const BoundCheckRecord rec = verify_weil(field, chi, Polynomial({1, 1}));
        CHECK(rec.lemma_id == LemmaId::Weil);
        CHECK(rec.lhs == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(rec.rhs == doctest::Approx(0.0));
        CHECK(rec.holds);
        REQUIRE(rec.secondary.has_value());
        CHECK(rec.secondary->label == "restricted_plus_one");
        // Restricted sum drops chi(f(0)) = chi(1) = 1, so |sum| = 1 = bound.
        CHECK(rec.secondary->lhs == doctest::Approx(1.0));
        CHECK(rec.secondary->rhs == doctest::Approx(1.0));
        CHECK(rec.secondary->holds);
        CHECK(rec.note.find("exceeded (finding)") != std::string::npos);
    }

    SUBCASE("quartic character, f = x^2 + 1 at p = 5 sits on the bound") {
        const PrimeField field = build_field(5);
        const Character chi(field, 1);
        const BoundCheckRecord rec = verify_weil(field, chi, Polynomial({1, 0, 1}));
        // Full sum is 1 + 2i, of magnitude sqrt(5) = (k-1) sqrt(p).
        CHECK(rec.lhs == doctest::Approx(std::sqrt(5.0)));
        CHECK(rec.rhs == doctest::Approx(std::sqrt(5.0)));
        CHECK(rec.holds);
    }

    SUBCASE("p = 3, f = x^2 + 1: the restricted form needs its +1") {
        const PrimeField field = build_field(3);
        const Character chi(field, 1);
        const BoundCheckRecord rec = verify_weil(field, chi, Polynomial({1, 0, 1}));
        CHECK(rec.lhs == doctest::Approx(1.0));
        CHECK(rec.rhs == doctest::Approx(std::sqrt(3.0)));
        CHECK(rec.holds);
        CHECK(rec.secondary->lhs == doctest::Approx(2.0));
        CHECK(rec.secondary->rhs == doctest::Approx(std::sqrt(3.0) + 1.0));
        CHECK(rec.secondary->holds);
        CHECK(rec.note.find("exceeded (finding)") != std::string::npos);
    }

    SUBCASE("hypothesis screening") {
        const PrimeField field = build_field(5);
        CHECK_THROWS_AS(verify_weil(field, Character(field, 0), Polynomial({1, 1})),
                        hypothesis_error);
        CHECK_THROWS_AS(verify_weil(field, Character(field, 2),
                                    Polynomial({1, 2, 1})), // (x+1)^2
                        hypothesis_error);
        CHECK_THROWS_AS(verify_weil(field, Character(field, 2), Polynomial({3})),
                        usage_error);
    }
}

TEST_CASE("verify_weil against the whole character table") {
    for (uint32_t p : {7u, 13u, 31u}) {
        const PrimeField field = build_field(p);
        for (const Polynomial& f :
             {Polynomial({1, 1}), Polynomial({1, 0, 1}), Polynomial({1, 1, 0, 1})}) {
            for (uint32_t a = 1; a < p - 1; ++a) {
                const Character chi(field, a);
                BoundCheckRecord rec;
                try {
                    rec = verify_weil(field, chi, f);
                } catch (const hypothesis_error&) {
                    continue;
                }
                CAPTURE(p);
                CAPTURE(a);
                CAPTURE(to_string(f));
                CHECK(rec.holds);
                CHECK(rec.secondary->holds);
            }
        }
    }
}

TEST_CASE("verify_wan fixture p = 7") {
    const PrimeField field = build_field(7);
    const std::vector<Character> chis{Character(field, 1), Character(field, 2)};
    const std::vector<Polynomial> fs{Polynomial({1, 1}), Polynomial({2, 1})};
    const BoundCheckRecord rec = verify_wan(field, chis, fs);
    CHECK(rec.lemma_id == LemmaId::Wan);

    // Oracle: sum over n of chi1(n+1) chi2(n+2), zero terms dropped.
    std::complex<double> expected;
    for (uint32_t n = 1; n < 7; ++n) {
        expected += eval(chis[0], (n + 1) % 7) * eval(chis[1], (n + 2) % 7);
    }
    CHECK(rec.lhs == doctest::Approx(std::abs(expected)).epsilon(1e-9));
    CHECK(rec.rhs == doctest::Approx(std::sqrt(7.0) + 1.0));
    CHECK(rec.holds);
    REQUIRE(rec.secondary.has_value());
    CHECK(rec.secondary->label == "strict_form");
    CHECK(rec.secondary->rhs == doctest::Approx(std::sqrt(7.0)));
}

TEST_CASE("verify_wan input screening") {
    const PrimeField field = build_field(7);
    const Character chi(field, 1);
    CHECK_THROWS_AS(verify_wan(field, {}, {}), usage_error);
    CHECK_THROWS_AS(verify_wan(field, {chi}, {Polynomial({1, 1}), Polynomial({2, 1})}),
                    usage_error);
    CHECK_THROWS_AS(verify_wan(field, {Character(field, 0)}, {Polynomial({1, 1})}),
                    hypothesis_error);
    CHECK_THROWS_AS(verify_wan(field, {chi, chi},
                               {Polynomial({1, 1}),
                                Polynomial({2, 3, 1})}), // (x+1)(x+2)
                    hypothesis_error);
    CHECK_THROWS_AS(verify_wan(field, {Character(field, 3)},
                               {Polynomial({1, 2, 1})}), // square vs order 2
                    hypothesis_error);
}

TEST_CASE("verify_wan with one factor matches verify_weil's restricted sum") {
    const PrimeField field = build_field(13);
    for (uint32_t a : {1u, 2u, 5u}) {
        const Character chi(field, a);
        const Polynomial f({1, 0, 1});
        const BoundCheckRecord wan = verify_wan(field, {chi}, {f});
        const BoundCheckRecord weil = verify_weil(field, chi, f);
        CHECK(wan.lhs == doctest::Approx(weil.secondary->lhs).epsilon(1e-9));
    }
}

TEST_CASE("verify_lemma4 branches") {
    const PrimeField field = build_field(5);
    const Character chi1(field, 1);
    const Character chi2(field, 2);
    const Polynomial f({1, 1});

    SUBCASE("principal branch at alpha = 4") {
        const BoundCheckRecord rec = verify_lemma4(field, chi1, 4, chi2, f);
        CHECK(rec.lemma_id == LemmaId::Lemma4);
        CHECK(rec.lhs == doctest::Approx(1.0));
        CHECK(rec.rhs == doctest::Approx(1.0)); // (k-1) sqrt(p) + 1
        CHECK(rec.holds);
        REQUIRE(rec.secondary.has_value());
        CHECK(rec.secondary->label == "strict_form");
        CHECK_FALSE(rec.secondary->holds); // 1 > 0: the +1 slack is necessary
        CHECK(rec.note.find("branch=principal") != std::string::npos);
    }

    SUBCASE("non-principal branch at alpha = 1") {
        const BoundCheckRecord rec = verify_lemma4(field, chi1, 1, chi2, f);
        // The sum is -1 - 2i, exactly k sqrt(p) in magnitude.
        CHECK(rec.lhs == doctest::Approx(std::sqrt(5.0)));
        CHECK(rec.rhs == doctest::Approx(std::sqrt(5.0)));
        CHECK(rec.holds);
        CHECK_FALSE(rec.secondary.has_value());
        CHECK(rec.note == "branch=nonprincipal");
    }

    SUBCASE("hypothesis screening") {
        CHECK_THROWS_AS(verify_lemma4(field, chi1, 1, Character(field, 0), f),
                        hypothesis_error);
        CHECK_THROWS_AS(verify_lemma4(field, chi1, 1, chi2, Polynomial({0, 1})),
                        hypothesis_error);
        CHECK_THROWS_AS(verify_lemma4(field, chi1, 1, chi2, Polynomial({1, 2, 1})),
                        hypothesis_error);
        CHECK_THROWS_AS(verify_lemma4(field, chi1, 1, chi2, Polynomial({2})),
                        usage_error);
    }
}

TEST_CASE("verify_lemma4 holds across a grid") {
    for (uint32_t p : {7u, 13u, 31u}) {
        const PrimeField field = build_field(p);
        const Polynomial f({1, 0, 1});
        for (int64_t alpha = -2; alpha <= 3; ++alpha) {
            for (uint32_t a1 = 0; a1 < 4; ++a1) {
                for (uint32_t a2 = 1; a2 < 5; ++a2) {
                    BoundCheckRecord rec;
                    try {
                        rec = verify_lemma4(field, Character(field, a1), alpha,
                                            Character(field, a2), f);
                    } catch (const hypothesis_error&) {
                        continue;
                    }
                    CAPTURE(p);
                    CAPTURE(alpha);
                    CAPTURE(a1);
                    CAPTURE(a2);
                    CHECK(rec.holds);
                }
            }
        }
    }
}

TEST_CASE("verify_theorem fixture p = 5") {
    const PrimeField field = build_field(5);
    const TheoremReport rep =
        verify_theorem(make_instance(field, 0, Polynomial({1, 1})));
    CHECK(rep.p == 5);
    CHECK(rep.alpha == 0);
    CHECK(rep.f_description == "x + 1");
    CHECK(rep.k == 1);
    CHECK(rep.r_f == 1);
    CHECK(rep.omega_pm1 == 1);
    CHECK(rep.phi_pm1 == 2);
    CHECK(rep.exact_count == 1);
    CHECK(rep.main_term == doctest::Approx(0.75));
    CHECK(rep.error_bound == doctest::Approx(std::sqrt(5.0)));
    CHECK(rep.theta == doctest::Approx(0.25 / std::sqrt(5.0)));
    CHECK(rep.theorem_holds);
    CHECK_FALSE(rep.near_boundary);
    CHECK(rep.hypotheses_ok);
}

TEST_CASE("verify_theorem fixture p = 7") {
    const PrimeField field = build_field(7);
    const TheoremReport rep =
        verify_theorem(make_instance(field, 0, Polynomial({1, 1})));
    CHECK(rep.exact_count == 0);
    CHECK(rep.omega_pm1 == 2);
    CHECK(rep.main_term == doctest::Approx(5.0 / 9.0));
    CHECK(rep.error_bound == doctest::Approx(16.0 * std::sqrt(7.0) / 9.0));
    CHECK(rep.theta == doctest::Approx(-5.0 / (16.0 * std::sqrt(7.0))));
    CHECK(rep.theorem_holds);
}

TEST_CASE("verify_theorem_diagnostic flags bad hypotheses") {
    const PrimeField field = build_field(7);
    const TheoremReport bad = verify_theorem_diagnostic(field, 0, Polynomial({0, 0, 1}));
    CHECK_FALSE(bad.hypotheses_ok);
    CHECK(bad.exact_count == 0);
    CHECK(bad.r_f == 1);

    const TheoremReport good = verify_theorem_diagnostic(field, 0, Polynomial({2, 1}));
    CHECK(good.hypotheses_ok);
    const TheoremReport direct =
        verify_theorem(make_instance(field, 0, Polynomial({2, 1})));
    CHECK(good.exact_count == direct.exact_count);
    CHECK(good.theta == doctest::Approx(direct.theta));

    // Degree >= p: the power screen cannot run, so hypotheses are not ok.
    const PrimeField f3 = build_field(3);
    const TheoremReport big = verify_theorem_diagnostic(f3, 0, Polynomial({1, 1, 0, 1}));
    CHECK_FALSE(big.hypotheses_ok);

    CHECK_THROWS_AS(verify_theorem_diagnostic(field, 0, Polynomial({3})),
                    usage_error);
}

TEST_CASE("verify_claims fixture p = 5") {
    const PrimeField field = build_field(5);
    const auto records =
        verify_claims(make_instance(field, 0, Polynomial({1, 1})));
    REQUIRE(records.size() == 3);

    CHECK(records[0].lemma_id == LemmaId::Claim1);
    CHECK(records[0].lhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(records[0].rhs == doctest::Approx(5e-9));
    CHECK(records[0].holds);

    CHECK(records[1].lemma_id == LemmaId::Claim2);
    CHECK(records[1].lhs == doctest::Approx(0.25));
    CHECK(records[1].rhs == doctest::Approx(std::sqrt(5.0)));
    CHECK(records[1].holds);
    REQUIRE(records[1].secondary.has_value());
    CHECK(records[1].secondary->label == "unscaled_sharp");
    CHECK(records[1].secondary->lhs == doctest::Approx(1.0));
    CHECK(records[1].secondary->holds);

    CHECK(records[2].lemma_id == LemmaId::Claim3);
    CHECK(records[2].lhs == doctest::Approx(0.25));
    CHECK(records[2].rhs == doctest::Approx(std::sqrt(5.0)));
    CHECK(records[2].secondary->lhs == doctest::Approx(1.0));
    CHECK(records[2].holds);
}

TEST_CASE("theorem and claims hold together on a grid") {
    const std::vector<Polynomial> polys{Polynomial({1, 1}), Polynomial({1, 0, 1}),
                                        Polynomial({1, 1, 0, 1})};
    for (uint32_t p : {5u, 11u, 13u, 61u}) {
        const PrimeField field = build_field(p);
        for (int64_t alpha = -1; alpha <= 2; ++alpha) {
            for (const Polynomial& f : polys) {
                std::optional<PairCountInstance> inst;
                try {
                    inst.emplace(make_instance(field, alpha, f));
                } catch (const hypothesis_error&) {
                    continue;
                }
                const TheoremReport rep = verify_theorem(*inst);
                CAPTURE(p);
                CAPTURE(alpha);
                CAPTURE(to_string(f));
                CHECK(rep.theorem_holds);
                CHECK(std::abs(rep.theta) < 1.0);
                // theta is exactly the normalized deviation.
                CHECK(rep.theta * rep.error_bound
                      == doctest::Approx(static_cast<double>(rep.exact_count)
                                         - rep.main_term));
                for (const BoundCheckRecord& rec : verify_claims(*inst)) {
                    CHECK(rec.holds);
                    CHECK(rec.secondary->holds);
                }
            }
        }
    }
}
