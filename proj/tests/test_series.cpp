#include "beltrami/series.hpp"

#include <doctest.h>

using namespace beltrami;

namespace {

// Coefficient of r^(shift + 6m) in lead * sum_m (-1)^m / (36^m m! prod_{l=1..m}(l + nu)) r^(shift + 6m).
RadialSeries bessel_oracle(const Rational& lead, unsigned shift, const Rational& nu, unsigned order)
{
    RadialSeries s;
    s.order = order;
    for (unsigned m = 0; shift + 6 * m <= order; ++m) {
        Rational den = 1;
        for (unsigned l = 1; l <= m; ++l)
            den *= Rational(36 * l) * (Rational(l) + nu);
        s.coeffs[shift + 6 * m] = (m % 2 ? -lead : lead) / den;
    }
    return s;
}

Rational coef(const RadialSeries& s, long k) { return k < 0 ? Rational(0) : s.coefficient(static_cast<unsigned>(k)); }

} // namespace

TEST_CASE("recurrence at N = 6")
{
    const auto [u, v] = solve_cylindrical_recurrence(6);
    CHECK(u.coefficient(3) == make_rational(1, 4));
    CHECK(v.coefficient(0) == 1);
    CHECK(v.coefficient(6) == make_rational(-1, 24));
    for (unsigned k : {0u, 1u, 2u, 4u, 5u, 6u})
        CHECK(u.coefficient(k) == 0);
    for (unsigned k : {1u, 2u, 3u, 4u, 5u})
        CHECK(v.coefficient(k) == 0);
}

TEST_CASE("recurrence at higher order")
{
    const auto [u, v] = solve_cylindrical_recurrence(12);
    CHECK(u.coefficient(9) == make_rational(-1, 240));
    CHECK(v.coefficient(12) == make_rational(1, 2880));
    CHECK_THROWS_AS(solve_cylindrical_recurrence(2), std::invalid_argument);
}

TEST_CASE("recurrence matches the Bessel product form")
{
    for (unsigned n : {6u, 12u, 18u, 30u, 31u}) {
        CAPTURE(n);
        const auto [u, v] = solve_cylindrical_recurrence(n);
        const auto ou = bessel_oracle(make_rational(1, 4), 3, make_rational(2, 3), n);
        const auto ov = bessel_oracle(1, 0, make_rational(-1, 3), n);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(u.coefficient(k) == ou.coefficient(k));
            CHECK(v.coefficient(k) == ov.coefficient(k));
        }
        CHECK(bessel_series_coefficients(BesselBranch::plus_two_thirds, n).coeffs == ou.coeffs);
        CHECK(bessel_series_coefficients(BesselBranch::minus_one_third, n).coeffs == ov.coeffs);

        // r^k coefficients of -v' = r^2 u and u' + u/r = r^2 v.
        for (long k = 0; k + 1 <= static_cast<long>(n); ++k) {
            CHECK(-Rational(k + 1) * coef(v, k + 1) == coef(u, k - 2));
            CHECK(Rational(k + 1) * coef(u, k + 1) + coef(u, k + 1) == coef(v, k - 2));
        }
    }
}

TEST_CASE("verification")
{
    for (unsigned n : {6u, 12u, 30u}) {
        const auto r = verify_beltrami_cylindrical(n);
        CHECK(r.order == n);
        CHECK(r.recurrence_ok);
        CHECK(r.bessel_match_ok);
        CHECK(r.cylindrical_ok);
        CHECK(r.cartesian_ok);
        CHECK(r.first_integral_ok);
        CHECK(r.critical_axis_ok);
        CHECK(r.all_ok());
    }
    CHECK_THROWS_AS(verify_beltrami_cylindrical(5), std::invalid_argument);
}

TEST_CASE("cartesian lift")
{
    const auto [u, v] = solve_cylindrical_recurrence(7);
    const auto lift = cartesian_lift(u, v);
    // (u3 r^3 / r)(-y, x, 0) = (1/4)(x^2 + y^2)(-y, x, 0) lands in degree 3.
    const auto& x3 = lift.at(3);
    const auto q = make_rational(1, 4);
    CHECK(x3.x() == HomogeneousPolynomial::term(Monomial{{2, 1, 0}}, -q) + HomogeneousPolynomial::term(Monomial{{0, 3, 0}}, -q));
    CHECK(x3.y() == HomogeneousPolynomial::term(Monomial{{3, 0, 0}}, q) + HomogeneousPolynomial::term(Monomial{{1, 2, 0}}, q));
    CHECK(lift.at(0).z() == HomogeneousPolynomial::constant(1));

    // u must be odd and v even for the lift to be polynomial.
    RadialSeries bad_u;
    bad_u.order = 4;
    bad_u.set(2, 1);
    CHECK_THROWS_AS(cartesian_lift(bad_u, v), std::domain_error);
    RadialSeries bad_v;
    bad_v.order = 4;
    bad_v.set(1, 1);
    CHECK_THROWS_AS(cartesian_lift(u, bad_v), std::domain_error);
}

TEST_CASE("radial series bookkeeping")
{
    RadialSeries s;
    s.order = 5;
    s.set(2, 3);
    s.set(2, 0);
    CHECK(s.coeffs.empty());
    CHECK(s.coefficient(4) == 0);
}
