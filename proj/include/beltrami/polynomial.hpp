#pragma once

#include "beltrami/monomial.hpp"
#include "beltrami/rational.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <utility>

namespace beltrami {

/// Homogeneous polynomial in (x, y, z) with exact rational coefficients.
///
/// The degree is an explicit tag, so the zero polynomial still knows which
/// graded piece it belongs to. Zero coefficients are never stored.
class HomogeneousPolynomial {
public:
    using Terms = std::map<Monomial, Rational, GradedLexOrder>;

    explicit HomogeneousPolynomial(unsigned degree = 0) : degree_(degree) {}
    HomogeneousPolynomial(unsigned degree, std::initializer_list<std::pair<Monomial, Rational>> terms);

    static HomogeneousPolynomial constant(const Rational& c);
    static HomogeneousPolynomial variable(Axis a);
    static HomogeneousPolynomial term(const Monomial& m, const Rational& c = 1);

    unsigned degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    /// Adds c * m. Throws std::invalid_argument if deg m != degree().
    void add_term(const Monomial& m, const Rational& c);

    HomogeneousPolynomial derivative(Axis a) const;

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other);
    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& other);
    HomogeneousPolynomial& operator*=(const Rational& c);

    /// Values are compared; a zero polynomial equals any other zero.
    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

private:
    void absorb_degree(const HomogeneousPolynomial& other);

    unsigned degree_ = 0;
    Terms terms_;
};

HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b);
HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b);
HomogeneousPolynomial operator-(HomogeneousPolynomial a);
HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Rational& c);
HomogeneousPolynomial operator*(const Rational& c, HomogeneousPolynomial a);
HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
HomogeneousPolynomial pow(const HomogeneousPolynomial& a, unsigned n);

/// (X^x, X^y, X^z), all homogeneous of the same degree.
class PolynomialVectorField {
public:
    explicit PolynomialVectorField(unsigned degree = 0);
    /// Throws std::invalid_argument if a nonzero component has another degree.
    PolynomialVectorField(unsigned degree, HomogeneousPolynomial x, HomogeneousPolynomial y, HomogeneousPolynomial z);
    PolynomialVectorField(HomogeneousPolynomial x, HomogeneousPolynomial y, HomogeneousPolynomial z);

    unsigned degree() const { return degree_; }
    const HomogeneousPolynomial& operator[](Axis a) const { return components_[index(a)]; }
    const HomogeneousPolynomial& x() const { return components_[0]; }
    const HomogeneousPolynomial& y() const { return components_[1]; }
    const HomogeneousPolynomial& z() const { return components_[2]; }
    bool is_zero() const;

    void add_term(Axis a, const Monomial& m, const Rational& c);

    PolynomialVectorField& operator+=(const PolynomialVectorField& other);
    PolynomialVectorField& operator-=(const PolynomialVectorField& other);
    PolynomialVectorField& operator*=(const Rational& c);

    friend bool operator==(const PolynomialVectorField& a, const PolynomialVectorField& b);

private:
    unsigned degree_ = 0;
    std::array<HomogeneousPolynomial, 3> components_;
};

PolynomialVectorField operator+(PolynomialVectorField a, const PolynomialVectorField& b);
PolynomialVectorField operator-(PolynomialVectorField a, const PolynomialVectorField& b);
PolynomialVectorField operator*(const Rational& c, PolynomialVectorField a);

// Differential operators. Degree-0 inputs to grad/curl/div give zero
// objects of degree 0 instead of failing.
PolynomialVectorField grad(const HomogeneousPolynomial& g);
PolynomialVectorField curl(const PolynomialVectorField& v);
HomogeneousPolynomial div(const PolynomialVectorField& v);
HomogeneousPolynomial laplacian(const HomogeneousPolynomial& g);
HomogeneousPolynomial dot(const PolynomialVectorField& u, const PolynomialVectorField& v);
PolynomialVectorField scale_mul(const HomogeneousPolynomial& g, const PolynomialVectorField& v);

/// sigma1 x^2 + sigma2 y^2 + sigma3 z^2.
HomogeneousPolynomial diagonal_quadric(const Rational& s1, const Rational& s2, const Rational& s3);

} // namespace beltrami
