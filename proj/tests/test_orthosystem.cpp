#include "support.hpp"

#include "orthofield/errors.hpp"
#include "orthofield/factorize.hpp"
#include "orthofield/orthosystem.hpp"

#include <doctest.h>

#include <random>

using namespace orthofield;
using namespace orthofield::testing;

namespace {

using Poly = BivariatePolynomial<Surd>;

std::vector<Rational> rational_moments(const RadialMomentSequence<Surd>& m) {
    std::vector<Rational> out;
    for (const auto& v : m.values()) out.push_back(v.to_rational());
    return out;
}

RadialMomentSequence<Surd> exact_sequence(const std::vector<Rational>& m) {
    std::vector<Surd> values(m.begin(), m.end());
    return RadialMomentSequence<Surd>(values);
}

// Runs every exact identity on the system built from `m` up to degree n.
void check_exact_pipeline(const RadialMomentSequence<Surd>& m, int n) {
    auto gs = gram_schmidt(m, n);
    auto chol = sector_cholesky(m, n);
    auto alphas = extract_alphas(gs, m);
    CHECK(verify_orthonormality(gs, m).max_residual_text == "0");
    CHECK(verify_orthonormality(gs, m).passed());
    CHECK(verify_conjugation_symmetry(gs).passed());
    auto agreement = compare_systems(gs, chol);
    CHECK(agreement.passed());
    CHECK(agreement.max_residual_text == "0");
    auto recurrence = verify_recurrence(gs, alphas);
    CHECK(recurrence.passed());
    CHECK(recurrence.evaluated > 0);
    auto relations = verify_relations(alphas);
    CHECK(relations.positivity.passed());
    CHECK(relations.product_relation.passed());
    CHECK(relations.square_relation.passed());
    CHECK(relations.product_relation.max_residual_text == "0");
    CHECK(relations.square_relation.max_residual_text == "0");

    // Independent route: Hankel determinant ratios.
    const auto rational = rational_moments(m);
    for (const auto& [index, alpha] : alphas.entries()) {
        const auto [k, l] = index;
        CHECK((alpha * alpha) == Surd(alpha_sq_oracle(rational, k, l)));
    }
}

}  // namespace

TEST_CASE("hand-derived orthonormal polynomials") {
    auto d2 = radial_moments<Surd>(disc("1"), 2);
    auto sys = gram_schmidt(d2, 2);
    CHECK(sys.at(0, 0) == Poly::constant(Surd(1)));
    // sqrt(12) (z zb - 1/2)
    CHECK(sys.at(1, 1) ==
          Poly::monomial(1, 1, Surd::sqrt_of(12)) - Poly::constant(Surd::sqrt_of(3)));

    auto d3 = radial_moments<Surd>(disc("1"), 3);
    auto sys3 = gram_schmidt(d3, 3);
    CHECK(sys3.at(2, 1) == Poly::monomial(2, 1, Surd(6)) - Poly::monomial(1, 0, Surd(4)));
    CHECK(sector_cholesky(d3, 3).at(2, 1) == sys3.at(2, 1));
    CHECK(sys3.at(1, 2) == conjugate_swap(sys3.at(2, 1)));

    auto g = radial_moments<Surd>(gaussian("1"), 3);
    auto gs = gram_schmidt(g, 3);
    CHECK(gs.at(2, 0) == Poly::monomial(2, 0, Surd::sqrt_of(Rational(1, 2))));
    CHECK(gs.at(1, 0) == Poly::monomial(1, 0));
    CHECK_THROWS_AS(gs.at(4, 0), OutOfRange);
}

TEST_CASE("leading coefficients are positive") {
    auto m = radial_moments<Surd>(disc("1"), 6);
    auto sys = gram_schmidt(m, 6);
    for (const auto& [mono, p] : sys.polynomials()) {
        CHECK(p.coefficient(mono.z_power, mono.zbar_power).sign() > 0);
        CHECK(p.degree() == mono.degree());
    }
}

TEST_CASE("hand-derived recurrence coefficients") {
    auto g = radial_moments<Surd>(gaussian("1"), 3);
    auto ga = extract_alphas(gram_schmidt(g, 3), g);
    CHECK(ga(1, 1) == Surd::sqrt_of(2));
    CHECK(ga(-1, 2) == Surd(0));
    CHECK(ga.contains(-1, 5));
    CHECK_FALSE(ga.contains(3, 0));
    CHECK_THROWS_AS(ga(3, 0), MissingAlpha);

    auto d = radial_moments<Surd>(disc("1"), 4);
    auto da = extract_alphas(gram_schmidt(d, 4), d);
    CHECK(da(0, 0) == Surd::sqrt_of(Rational(1, 2)));
    CHECK(da(0, 1) == Surd::sqrt_of(Rational(1, 6)));
    CHECK(da(1, 0) == Surd::sqrt_of(Rational(2, 3)));
    CHECK(da(1, 1) == Surd::sqrt_of(Rational(1, 3)));
    CHECK(da(1, 2) == Surd::sqrt_of(Rational(1, 5)));
    CHECK(da(2, 1) == Surd::sqrt_of(Rational(9, 20)));
    // relation (2) at (0,1): alpha_{0,1}^2 + alpha_{0,0}^2 = alpha_{1,0}^2
    CHECK(da(0, 1) * da(0, 1) + da(0, 0) * da(0, 0) == da(1, 0) * da(1, 0));
    CHECK(da.complete_degree() == 4);
    CHECK(da.complete_square() == 1);
}

TEST_CASE("gaussian recovers alpha_{k,l}^2 = k + 1 exactly to degree 10") {
    auto m = radial_moments<Surd>(gaussian("1"), 10);
    auto alphas = extract_alphas(gram_schmidt(m, 10), m);
    CHECK(alphas.complete_degree() == 10);
    for (const auto& [index, alpha] : alphas.entries()) {
        CHECK((alpha * alpha) == Surd(index.first + 1));
    }
}

TEST_CASE("exact identities hold for the named measures") {
    SUBCASE("gaussian") { check_exact_pipeline(radial_moments<Surd>(gaussian("1"), 10), 10); }
    SUBCASE("gaussian sigma=sqrt(3)") {
        check_exact_pipeline(radial_moments<Surd>(gaussian("sqrt(3)"), 8), 8);
    }
    SUBCASE("uniform disc") { check_exact_pipeline(radial_moments<Surd>(disc("1"), 10), 10); }
    SUBCASE("uniform disc R=2/3") { check_exact_pipeline(radial_moments<Surd>(disc("2/3"), 8), 8); }
    SUBCASE("closed form q=1/2") {
        check_exact_pipeline(radial_moments<Surd>(closed_form("1/2", "1"), 10), 10);
    }
    SUBCASE("closed form q=2") {
        check_exact_pipeline(radial_moments<Surd>(closed_form("2", "1"), 10), 10);
    }
}

TEST_CASE("exact identities hold for random ring mixtures") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 4; ++trial) {
        const int rings = 4 + trial % 2;
        const int degree = 2 * rings - 2;
        auto mix = random_rings(rng, rings);
        CAPTURE(trial);
        check_exact_pipeline(exact_sequence(mix.moments(degree)), degree);
    }
}

TEST_CASE("too few rings is degenerate in the matching sector") {
    std::mt19937 rng(3);
    auto mix = random_rings(rng, 3);
    auto m = exact_sequence(mix.moments(6));
    CHECK_NOTHROW(gram_schmidt(m, 5));
    try {
        gram_schmidt(m, 6);
        FAIL("rank-3 moments accepted at degree 6");
    } catch (const DegenerateMeasure& e) {
        CHECK(e.sector() == 0);
        CHECK(e.size() == 4);
    }
    CHECK_THROWS_AS(sector_cholesky(m, 6), DegenerateMeasure);
    CHECK_THROWS_AS(gram_schmidt(radial_moments<Surd>(circle(), 2), 2), DegenerateMeasure);
    CHECK_THROWS_AS(gram_schmidt(radial_moments<Real>(circle(), 2), 2), DegenerateMeasure);
}

TEST_CASE("dilation multiplies every alpha by the scale") {
    auto base = radial_moments<Surd>(gaussian("1"), 8);
    auto wide = radial_moments<Surd>(gaussian("3/2"), 8);
    auto a = extract_alphas(gram_schmidt(base, 8), base);
    auto b = extract_alphas(gram_schmidt(wide, 8), wide);
    for (const auto& [index, alpha] : a.entries()) {
        CHECK(b(index.first, index.second) == alpha * Surd(Rational(3, 2)));
    }

    std::mt19937 rng(11);
    auto mix = random_rings(rng, 5);
    auto moments = mix.moments(8);
    std::vector<Rational> scaled = moments;
    Rational power = 1;
    for (auto& v : scaled) {
        v *= power;
        power *= Rational(4, 9);
    }
    auto m1 = exact_sequence(moments);
    auto m2 = exact_sequence(scaled);
    auto x = extract_alphas(gram_schmidt(m1, 8), m1);
    auto y = extract_alphas(gram_schmidt(m2, 8), m2);
    for (const auto& [index, alpha] : x.entries()) {
        CHECK(y(index.first, index.second) == alpha * Surd(Rational(2, 3)));
    }
}

TEST_CASE("floating mode reproduces the exact tables") {
    const MeasureSpec specs[] = {gaussian("7/10"), disc("13/10"), closed_form("1/2", "1"),
                                 closed_form("2", "1")};
    for (const auto& spec : specs) {
        CAPTURE(spec.name());
        auto me = radial_moments<Surd>(spec, 10);
        auto mf = radial_moments<Real>(spec, 10);
        auto ae = extract_alphas(gram_schmidt(me, 10), me);
        auto gs = gram_schmidt(mf, 10);
        auto af = extract_alphas(gs, mf);
        for (const auto& [index, alpha] : ae.entries()) {
            const Real expected = to_real(alpha);
            CHECK(abs(af(index.first, index.second) - expected) <= 1e-10 * expected);
        }
        CHECK(verify_orthonormality(gs, mf).passed());
        CHECK(compare_systems(gs, sector_cholesky(mf, 10)).passed());
        CHECK(verify_recurrence(gs, af).passed());
        CHECK(verify_relations(af).passed());
    }
}

TEST_CASE("a perturbed coefficient is flagged by the recurrence check") {
    auto m = radial_moments<Real>(gaussian("1"), 6);
    auto sys = gram_schmidt(m, 6);
    auto alphas = extract_alphas(sys, m);
    CHECK(verify_recurrence(sys, alphas).passed());
    auto broken = alphas;
    broken.set(0, 0, alphas(0, 0) + Real(1e-3));
    auto check = verify_recurrence(sys, broken);
    CHECK_FALSE(check.passed());
    CHECK(check.max_residual == doctest::Approx(1e-3).epsilon(1e-6));
    CHECK(check.worst[0] == 0);

    auto me = radial_moments<Surd>(disc("1"), 4);
    auto se = gram_schmidt(me, 4);
    auto ae = extract_alphas(se, me);
    ae.set(1, 1, ae(1, 1) + Surd(Rational(1, 1000)));
    CHECK_FALSE(verify_recurrence(se, ae).passed());
    CHECK_FALSE(verify_relations(ae).passed());
}

TEST_CASE("relations reject non-positive and inconsistent tables") {
    auto table = closed_form_alphas(Surd(Rational(1, 2)), Surd(1), 6);
    CHECK(verify_relations(table).passed());
    auto negative = table;
    negative.set(2, 1, -table(2, 1));
    auto report = verify_relations(negative);
    CHECK_FALSE(report.positivity.passed());
    auto skewed = table;
    skewed.set(0, 2, table(0, 2) * Surd(2));
    report = verify_relations(skewed);
    CHECK_FALSE(report.product_relation.passed());
    CHECK_FALSE(report.square_relation.passed());
}

TEST_CASE("a system checked against the wrong measure breaks the recurrence") {
    auto g = radial_moments<Surd>(gaussian("1"), 4);
    auto d = radial_moments<Surd>(disc("1"), 4);
    auto sys = gram_schmidt(g, 4);
    CHECK_FALSE(verify_orthonormality(sys, d).passed());
    CHECK_THROWS_AS(extract_alphas(sys, d), RecurrenceViolation);
}

TEST_CASE("moment coverage is checked") {
    auto m = radial_moments<Surd>(gaussian("1"), 3);
    CHECK_THROWS_AS(gram_schmidt(m, 4), OutOfRange);
    CHECK_THROWS_AS(sector_cholesky(m, 4), OutOfRange);
    CHECK_THROWS_AS(gram_schmidt(m, -1), InvalidParameter);
}
