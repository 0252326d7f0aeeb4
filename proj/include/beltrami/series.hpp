#pragma once

#include "beltrami/polynomial.hpp"
#include "beltrami/rational.hpp"

#include <map>
#include <utility>

namespace beltrami {

/// Truncated power series sum_{k <= order} c_k r^k with exact coefficients.
struct RadialSeries {
    std::map<unsigned, Rational> coeffs; // only nonzero entries, keys <= order
    unsigned order = 0;

    Rational coefficient(unsigned k) const;
    void set(unsigned k, const Rational& c);
    friend bool operator==(const RadialSeries&, const RadialSeries&) = default;
};

/// Regular solution of
///   -v'(r) = r^2 u(r),   u'(r) + u(r)/r = r^2 v(r),
/// with v(0) = 1 and u(0) = 0, truncated at order N: returns (u, v), the
/// angular and axial components of the field in cylindrical coordinates.
/// Throws std::invalid_argument for N < 3.
std::pair<RadialSeries, RadialSeries> solve_cylindrical_recurrence(unsigned order);

enum class BesselBranch {
    plus_two_thirds, // r J_{2/3}(r^3/3) component (angular), leading term r^3/4
    minus_one_third, // r J_{-1/3}(r^3/3) component (axial), leading term 1
};

/// Closed-form Bessel expansion of one component, normalized as above.
/// Successive terms follow from the exact term ratio
///   -(r^6/36) / ((m + 1)(m + 1 + nu)).
RadialSeries bessel_series_coefficients(BesselBranch branch, unsigned order);

struct BesselVerification {
    unsigned order = 0;
    bool recurrence_ok = false;     // recurrence series satisfies its recurrences
    bool bessel_match_ok = false;   // recurrence series == Bessel expansion, both branches
    bool cylindrical_ok = false;    // all four cylindrical equations vanish through order
    bool cartesian_ok = false;      // polynomial lift solves curl X = (x^2+y^2) X, div X = 0
    bool first_integral_ok = false; // <grad f, X> = 0 for the lift
    bool critical_axis_ok = false;  // grad(x^2 + y^2) vanishes on the z-axis

    bool all_ok() const
    {
        return recurrence_ok && bessel_match_ok && cylindrical_ok && cartesian_ok && first_integral_ok &&
               critical_axis_ok;
    }
};

/// Cartesian lift X = (u(r)/r)(-y, x, 0) + v(r)(0, 0, 1), one homogeneous
/// field per degree 0..order. Throws std::domain_error if u or v has a
/// term that would not give a polynomial.
std::map<unsigned, PolynomialVectorField> cartesian_lift(const RadialSeries& u, const RadialSeries& v);

/// Checks everything through `order`, using series data through order + 3.
/// Throws std::invalid_argument for order < 6.
BesselVerification verify_beltrami_cylindrical(unsigned order);

} // namespace beltrami
