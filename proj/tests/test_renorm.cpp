#include <cmath>

#include "doctest.h"
#include "regge/renorm.hpp"
#include "support/exact_series.hpp"

using namespace regge;
using regge::test::ExactCase;
using regge::test::ExactSeries;
using regge::test::Rat;
using regge::test::to_double;

namespace {

const double kMartinE10 = 1.2913186032; // state n=1, l=0 of V = r^0.1

double harmonic_alpha(double E, int n, double hbar, double m) {
    return E * std::sqrt(m / 2.0) - hbar * (2.0 * n + 1.5);
}

} // namespace

TEST_CASE("mass split constraint") {
    const auto me = MassExpansion::split(1.0, 0.3, 0.1);
    CHECK(me.m0 == doctest::Approx(0.6));
    CHECK(me.m0 + me.m1 * me.hbar_eval + me.m2 * me.hbar_eval * me.hbar_eval ==
          doctest::Approx(me.physical_mass).epsilon(1e-15));
    const auto half = MassExpansion::split(2.0, 0.4, 0.8, 0.5);
    CHECK(half.m0 == doctest::Approx(2.0 - 0.4 * 0.5 - 0.8 * 0.25));
    CHECK(MassExpansion::identity(1.7).m0 == 1.7);
    CHECK_THROWS_AS(MassExpansion::split(1.0, 0.8, 0.3), ValidationError);
    CHECK_THROWS_AS(MassExpansion::split(-1.0, 0.0, 0.0), ValidationError);
}

TEST_CASE("zero parameters reduce to the plain expansion exactly") {
    const auto pot = Potential::power_law(1.0, 0.1);
    const Expansion plain = expand(pot, kMartinE10, 1.0, 1, 4);
    const Expansion ren = renorm_expand(pot, kMartinE10, MassExpansion::identity(1.0), 1, 4);
    REQUIRE(plain.alpha.size() == ren.alpha.size());
    for (std::size_t k = 0; k < plain.alpha.size(); ++k)
        CHECK(plain.alpha[k] == ren.alpha[k]); // bitwise
}

TEST_CASE("renormalized series reproduces the exact harmonic mass expansion") {
    // For v = 2 the exact trajectory is E sqrt(m(hbar)/2) - hbar(2n+3/2);
    // with small (m1, m2) the order-4 truncation is accurate to the tail
    // of the binomial series, well below 1e-8 here. E = 5 puts r0 away
    // from 1, pinning the r0 powers of the source terms.
    const auto pot = Potential::power_law(1.0, 2.0);
    const double E = 5.0;
    const int n = 1;
    SUBCASE("hbar = 1") {
        const auto me = MassExpansion::split(1.0, 0.004, -0.002, 1.0);
        const Expansion e = renorm_expand(pot, E, me, n, 4);
        CHECK(e.evaluate(1.0) ==
              doctest::Approx(harmonic_alpha(E, n, 1.0, 1.0)).epsilon(1e-8));
    }
    SUBCASE("hbar = 0.5") {
        const auto me = MassExpansion::split(1.0, 0.004, -0.002, 0.5);
        const Expansion e = renorm_expand(pot, E, me, n, 4);
        CHECK(e.evaluate(0.5) ==
              doctest::Approx(harmonic_alpha(E, n, 0.5, 1.0)).epsilon(1e-8));
    }
}

TEST_CASE("exact rational renormalized case") {
    // v = 1/4, r0 = 1, m0 = 4 keeps omega and alpha0 rational; the mass
    // sources enter rationally, so all alpha~_k are exact rationals.
    ExactCase c{Rat(1), Rat(1, 4), Rat(1), Rat(1), Rat(4), Rat(3, 2), Rat(1),
                Rat(1, 3), Rat(-1, 7), 2, 4};
    ExactSeries oracle(c);
    const double m1 = 1.0 / 3.0, m2 = -1.0 / 7.0;
    const double physical = 4.0 + m1 + m2;
    const auto me = MassExpansion::split(physical, m1, m2, 1.0);
    CHECK(me.m0 == doctest::Approx(4.0).epsilon(1e-15));
    const auto pot = Potential::power_law(1.0, 0.25);
    const Expansion e = renorm_expand(pot, 9.0 / 8.0, me, 2, 4);
    for (int k = 0; k <= 4; ++k) {
        CAPTURE(k);
        CHECK(e.alpha[k] ==
              doctest::Approx(to_double(oracle.alphas()[k])).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("fastest convergence on the Martin state n=1, l=0") {
    const auto pot = Potential::power_law(1.0, 0.1);
    const SchemeResult r = solve_scheme2(pot, kMartinE10, 1.0, 1);
    CHECK(!r.degenerate);
    CHECK(std::fabs(r.alpha_tilde - 0.00165) <= 5e-4);
    const double a0 = std::fabs(r.expansion.alpha[0]);
    CHECK(std::fabs(r.residuals[0]) <= 1e-10 * a0);
    CHECK(std::fabs(r.residuals[1]) <= 1e-10 * a0);
    // root validity: re-running the expansion from scratch reproduces it
    const Expansion fresh = renorm_expand(pot, kMartinE10, r.mass, 1, 4);
    CHECK(std::fabs(fresh.alpha[3]) <= 1e-10 * a0);
    CHECK(std::fabs(fresh.alpha[4]) <= 1e-10 * a0);
    CHECK(fresh.evaluate(1.0) == doctest::Approx(r.alpha_tilde).epsilon(1e-14));
}

TEST_CASE("minimal sensitivity on the Martin state n=1, l=0") {
    const auto pot = Potential::power_law(1.0, 0.1);
    const SchemeResult r = solve_scheme1(pot, kMartinE10, 1.0, 1);
    CHECK(!r.degenerate);
    CHECK(std::fabs(r.alpha_tilde - 0.00250) <= 5e-4);

    // independent check of the stationarity with plain central differences
    auto value = [&](double m1, double m2) {
        return renorm_expand(pot, kMartinE10, MassExpansion::split(1.0, m1, m2), 1, 4)
            .evaluate(1.0);
    };
    const double h = 1e-5;
    const double d1 = (value(r.m1 + h, r.m2) - value(r.m1 - h, r.m2)) / (2.0 * h);
    const double d2 = (value(r.m1, r.m2 + h) - value(r.m1, r.m2 - h)) / (2.0 * h);
    CHECK(std::fabs(d1) <= 1e-6);
    CHECK(std::fabs(d2) <= 1e-6);
}

TEST_CASE("renormalized values improve on the plain series") {
    const auto pot = Potential::power_law(1.0, 0.1);
    const double exact = 0.0; // the state sits at integer l = 0
    const double plain = expand(pot, kMartinE10, 1.0, 1, 4).evaluate(1.0);
    const double e1 = std::fabs(solve_scheme1(pot, kMartinE10, 1.0, 1).alpha_tilde - exact);
    const double e2 = std::fabs(solve_scheme2(pot, kMartinE10, 1.0, 1).alpha_tilde - exact);
    CHECK(e1 < std::fabs(plain - exact));
    CHECK(e2 < std::fabs(plain - exact));
    // the two principles land within a factor of 3 of each other
    CHECK(std::max(e1, e2) <= 3.0 * std::min(e1, e2));
}

TEST_CASE("terminating series makes both schemes degenerate") {
    const auto pot = Potential::power_law(1.0, 2.0);
    const SchemeResult fc = solve_scheme2(pot, 2.0, 1.0, 0);
    CHECK(fc.degenerate);
    CHECK(fc.m1 == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(fc.alpha_tilde == doctest::Approx(std::sqrt(2.0) - 1.5).epsilon(1e-10));
    const SchemeResult pms = solve_scheme1(pot, 2.0, 1.0, 0);
    CHECK(pms.degenerate);
    CHECK(pms.alpha_tilde == doctest::Approx(std::sqrt(2.0) - 1.5).epsilon(1e-8));
}

TEST_CASE("multiple stationary points are reported for the n=4 state") {
    const auto pot = Potential::power_law(1.0, 0.1);
    const double E = 1.4183319954; // state n=4, l=0
    const auto roots = find_scheme_roots(pot, E, 1.0, 4, Scheme::MinimalSensitivity);
    REQUIRE(roots.size() >= 1);
    // closest-to-origin root comes first and beats the plain value
    const double plain = expand(pot, E, 1.0, 4, 4).evaluate(1.0);
    CHECK(std::fabs(roots.front().alpha_tilde) < std::fabs(plain));
    for (std::size_t i = 1; i < roots.size(); ++i)
        CHECK(std::hypot(roots[i - 1].m1, roots[i - 1].m2) <=
              std::hypot(roots[i].m1, roots[i].m2) + 1e-12);
}

TEST_CASE("scheme order restriction") {
    const auto pot = Potential::power_law(1.0, 0.5);
    CHECK_THROWS_AS(solve_scheme1(pot, 1.0, 1.0, 0, 3), ValidationError);
    CHECK_THROWS_AS(solve_scheme2(pot, 1.0, 1.0, 0, 5), ValidationError);
    CHECK_THROWS_AS(solve_scheme2(pot, 1.0, -1.0, 0), ValidationError);
}
