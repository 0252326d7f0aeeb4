#include "beltrami/series.hpp"

#include <stdexcept>
#include <string>

namespace beltrami {

Rational RadialSeries::coefficient(unsigned k) const
{
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void RadialSeries::set(unsigned k, const Rational& c)
{
    if (k > order)
        return;
    if (c == 0)
        coeffs.erase(k);
    else
        coeffs[k] = c;
}

std::pair<RadialSeries, RadialSeries> solve_cylindrical_recurrence(unsigned order)
{
    if (order < 3)
        throw std::invalid_argument("solve_cylindrical_recurrence: order must be at least 3");
    RadialSeries u{{}, order}, v{{}, order};
    v.set(0, 1);
    // -(k+3) v_{k+3} = u_k  and  (k+4) u_{k+3} = v_k.
    for (unsigned k = 0; k + 3 <= order; ++k) {
        v.set(k + 3, Rational(-u.coefficient(k) / (k + 3)));
        u.set(k + 3, Rational(v.coefficient(k) / (k + 4)));
    }
    return {u, v};
}

RadialSeries bessel_series_coefficients(BesselBranch branch, unsigned order)
{
    const bool angular = branch == BesselBranch::plus_two_thirds;
    const Rational nu = angular ? make_rational(2, 3) : make_rational(-1, 3);
    RadialSeries s{{}, order};
    Rational c = angular ? make_rational(1, 4) : Rational(1);
    for (unsigned m = 0, k = angular ? 3u : 0u; k <= order; ++m, k += 6) {
        s.set(k, c);
        c *= make_rational(-1, 36) / (Rational(m + 1) * (Rational(m + 1) + nu));
    }
    return s;
}

std::map<unsigned, PolynomialVectorField> cartesian_lift(const RadialSeries& u, const RadialSeries& v)
{
    const unsigned order = std::max(u.order, v.order);
    std::map<unsigned, PolynomialVectorField> out;
    for (unsigned d = 0; d <= order; ++d)
        out.emplace(d, PolynomialVectorField(d));

    const auto rho = HomogeneousPolynomial(2, {{Monomial{{2, 0, 0}}, 1}, {Monomial{{0, 2, 0}}, 1}});
    const auto x = HomogeneousPolynomial::variable(Axis::x);
    const auto y = HomogeneousPolynomial::variable(Axis::y);

    for (const auto& [k, c] : u.coeffs) {
        if (k % 2 == 0)
            throw std::domain_error("u(r)/r has the non-polynomial term r^" + std::to_string(int(k) - 1));
        // (u_k r^(k-1)) (-y, x, 0)
        const auto radial = c * pow(rho, (k - 1) / 2);
        out[k] += PolynomialVectorField(k, -(radial * y), radial * x, HomogeneousPolynomial(k));
    }
    for (const auto& [k, c] : v.coeffs) {
        if (k % 2 != 0)
            throw std::domain_error("v(r) has the non-polynomial term r^" + std::to_string(k));
        out[k] += PolynomialVectorField(k, HomogeneousPolynomial(k), HomogeneousPolynomial(k), c * pow(rho, k / 2));
    }
    return out;
}

namespace {

bool recurrence_holds(const RadialSeries& u, const RadialSeries& v)
{
    if (v.coefficient(0) != 1 || u.coefficient(0) != 0)
        return false;
    for (unsigned k = 1; k < 3 && k <= u.order; ++k)
        if (u.coefficient(k) != 0 || v.coefficient(k) != 0)
            return false;
    for (unsigned k = 0; k + 3 <= u.order; ++k) {
        if (-Rational(k + 3) * v.coefficient(k + 3) != u.coefficient(k))
            return false;
        if (Rational(k + 4) * u.coefficient(k + 3) != v.coefficient(k))
            return false;
    }
    for (const auto* s : {&u, &v})
        for (const auto& [k, c] : s->coeffs)
            if (k % 3 != 0)
                return false;
    return true;
}

// Residuals of the cylindrical equations for fields depending on r only,
// X = u(r) e_phi + v(r) e_z:
//   r-component of curl - f X:  (1/r) d_phi v - d_z u
//   phi-component:              -v' - r^2 u
//   z-component:                u' + u/r - r^2 v
//   divergence:                 (1/r) d_phi u + d_z v
// The phi- and z-derivatives of r-only series vanish identically.
bool cylindrical_residuals_vanish(const RadialSeries& u, const RadialSeries& v, unsigned order)
{
    if (u.coefficient(0) != 0)
        return false; // u/r would be singular
    for (unsigned k = 0; k <= order; ++k) {
        const Rational lower_u = k >= 2 ? u.coefficient(k - 2) : Rational(0);
        const Rational lower_v = k >= 2 ? v.coefficient(k - 2) : Rational(0);
        if (-Rational(k + 1) * v.coefficient(k + 1) - lower_u != 0)
            return false;
        if (Rational(k + 2) * u.coefficient(k + 1) - lower_v != 0)
            return false;
    }
    return true;
}

} // namespace

BesselVerification verify_beltrami_cylindrical(unsigned order)
{
    if (order < 6)
        throw std::invalid_argument("verify_beltrami_cylindrical: order must be at least 6");
    BesselVerification r;
    r.order = order;
    const unsigned data_order = order + 3;
    const auto [u, v] = solve_cylindrical_recurrence(data_order);

    r.recurrence_ok = recurrence_holds(u, v);
    r.bessel_match_ok = u == bessel_series_coefficients(BesselBranch::plus_two_thirds, data_order) &&
                        v == bessel_series_coefficients(BesselBranch::minus_one_third, data_order);
    r.cylindrical_ok = cylindrical_residuals_vanish(u, v, order);

    bool support_ok = true;
    for (const auto& [k, c] : u.coeffs)
        support_ok = support_ok && k % 6 == 3;
    for (const auto& [k, c] : v.coeffs)
        support_ok = support_ok && k % 6 == 0;

    const auto f = HomogeneousPolynomial(2, {{Monomial{{2, 0, 0}}, 1}, {Monomial{{0, 2, 0}}, 1}});
    const auto grad_f = grad(f);
    bool cartesian = support_ok;
    bool first_integral = support_ok;
    if (support_ok) {
        const auto lift = cartesian_lift(u, v);
        for (unsigned d = 0; d <= order; ++d) {
            // Degree-d part of curl X - f X and of div X.
            auto residual = curl(lift.at(d + 1));
            if (d >= 2)
                residual -= scale_mul(f, lift.at(d - 2));
            cartesian = cartesian && residual.is_zero() && div(lift.at(d + 1)).is_zero();
            first_integral = first_integral && dot(grad_f, lift.at(d)).is_zero();
        }
    }
    r.cartesian_ok = cartesian;
    r.first_integral_ok = first_integral;

    // grad f vanishes on the whole z-axis: no component has a pure z^k term.
    bool axis = !grad_f.is_zero();
    for (Axis a : all_axes)
        for (const auto& [m, c] : grad_f[a].terms())
            axis = axis && (m.exponents[0] + m.exponents[1] > 0);
    r.critical_axis_ok = axis;
    return r;
}

} // namespace beltrami
