#include "beltrami/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace beltrami {

HomogeneousPolynomial::HomogeneousPolynomial(unsigned degree,
                                             std::initializer_list<std::pair<Monomial, Rational>> terms)
    : degree_(degree)
{
    for (const auto& [m, c] : terms)
        add_term(m, c);
}

HomogeneousPolynomial HomogeneousPolynomial::constant(const Rational& c) { return term(Monomial{}, c); }

HomogeneousPolynomial HomogeneousPolynomial::variable(Axis a)
{
    Monomial m;
    m.exponents[index(a)] = 1;
    return term(m);
}

HomogeneousPolynomial HomogeneousPolynomial::term(const Monomial& m, const Rational& c)
{
    HomogeneousPolynomial p(m.degree());
    p.add_term(m, c);
    return p;
}

Rational HomogeneousPolynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPolynomial::add_term(const Monomial& m, const Rational& c)
{
    if (m.degree() != degree_)
        throw std::invalid_argument("monomial " + to_string(m) + " does not have degree " + std::to_string(degree_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

HomogeneousPolynomial HomogeneousPolynomial::derivative(Axis a) const
{
    HomogeneousPolynomial out(degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [m, c] : terms_) {
        const unsigned k = m[a];
        if (k == 0)
            continue;
        Monomial d = m;
        d.exponents[index(a)] -= 1;
        out.terms_.emplace(d, c * k);
    }
    return out;
}

void HomogeneousPolynomial::absorb_degree(const HomogeneousPolynomial& other)
{
    if (other.degree_ == degree_ || other.is_zero())
        return;
    if (!is_zero())
        throw std::invalid_argument("cannot combine homogeneous polynomials of degrees " + std::to_string(degree_) +
                                    " and " + std::to_string(other.degree_));
    degree_ = other.degree_;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& other)
{
    absorb_degree(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator-=(const HomogeneousPolynomial& other)
{
    absorb_degree(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a += b; }
HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a -= b; }
HomogeneousPolynomial operator-(HomogeneousPolynomial a) { return a *= Rational(-1); }
HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Rational& c) { return a *= c; }
HomogeneousPolynomial operator*(const Rational& c, HomogeneousPolynomial a) { return a *= c; }

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b)
{
    HomogeneousPolynomial out(a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma * mb, ca * cb);
    return out;
}

HomogeneousPolynomial pow(const HomogeneousPolynomial& a, unsigned n)
{
    HomogeneousPolynomial out = HomogeneousPolynomial::constant(1);
    for (unsigned i = 0; i < n; ++i)
        out = out * a;
    return out;
}

PolynomialVectorField::PolynomialVectorField(unsigned degree)
    : degree_(degree),
      components_{HomogeneousPolynomial(degree), HomogeneousPolynomial(degree), HomogeneousPolynomial(degree)}
{
}

PolynomialVectorField::PolynomialVectorField(unsigned degree, HomogeneousPolynomial x, HomogeneousPolynomial y,
                                             HomogeneousPolynomial z)
    : PolynomialVectorField(degree)
{
    std::array<HomogeneousPolynomial*, 3> in{&x, &y, &z};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!in[i]->is_zero() && in[i]->degree() != degree)
            throw std::invalid_argument("vector field component of degree " + std::to_string(in[i]->degree()) +
                                        " in a field of degree " + std::to_string(degree));
        components_[i] += *in[i];
    }
}

namespace {

unsigned common_degree(const HomogeneousPolynomial& x, const HomogeneousPolynomial& y, const HomogeneousPolynomial& z)
{
    for (const auto* p : {&x, &y, &z})
        if (!p->is_zero())
            return p->degree();
    return x.degree();
}

} // namespace

PolynomialVectorField::PolynomialVectorField(HomogeneousPolynomial x, HomogeneousPolynomial y, HomogeneousPolynomial z)
    : PolynomialVectorField(common_degree(x, y, z), std::move(x), std::move(y), std::move(z))
{
}

bool PolynomialVectorField::is_zero() const
{
    return components_[0].is_zero() && components_[1].is_zero() && components_[2].is_zero();
}

void PolynomialVectorField::add_term(Axis a, const Monomial& m, const Rational& c)
{
    components_[index(a)].add_term(m, c);
}

PolynomialVectorField& PolynomialVectorField::operator+=(const PolynomialVectorField& other)
{
    if (other.degree_ != degree_ && !other.is_zero()) {
        if (!is_zero())
            throw std::invalid_argument("cannot add vector fields of different degrees");
        *this = PolynomialVectorField(other.degree_);
    }
    for (std::size_t i = 0; i < 3; ++i)
        components_[i] += other.components_[i];
    return *this;
}

PolynomialVectorField& PolynomialVectorField::operator-=(const PolynomialVectorField& other)
{
    PolynomialVectorField neg = other;
    neg *= Rational(-1);
    return *this += neg;
}

PolynomialVectorField& PolynomialVectorField::operator*=(const Rational& c)
{
    for (auto& p : components_)
        p *= c;
    return *this;
}

bool operator==(const PolynomialVectorField& a, const PolynomialVectorField& b)
{
    return a.components_ == b.components_;
}

PolynomialVectorField operator+(PolynomialVectorField a, const PolynomialVectorField& b) { return a += b; }
PolynomialVectorField operator-(PolynomialVectorField a, const PolynomialVectorField& b) { return a -= b; }
PolynomialVectorField operator*(const Rational& c, PolynomialVectorField a) { return a *= c; }

PolynomialVectorField grad(const HomogeneousPolynomial& g)
{
    if (g.degree() == 0)
        return PolynomialVectorField(0);
    return PolynomialVectorField(g.degree() - 1, g.derivative(Axis::x), g.derivative(Axis::y), g.derivative(Axis::z));
}

PolynomialVectorField curl(const PolynomialVectorField& v)
{
    if (v.degree() == 0)
        return PolynomialVectorField(0);
    return PolynomialVectorField(v.degree() - 1, v.z().derivative(Axis::y) - v.y().derivative(Axis::z),
                                 v.x().derivative(Axis::z) - v.z().derivative(Axis::x),
                                 v.y().derivative(Axis::x) - v.x().derivative(Axis::y));
}

HomogeneousPolynomial div(const PolynomialVectorField& v)
{
    if (v.degree() == 0)
        return HomogeneousPolynomial(0);
    HomogeneousPolynomial out(v.degree() - 1);
    for (Axis a : all_axes)
        out += v[a].derivative(a);
    return out;
}

HomogeneousPolynomial laplacian(const HomogeneousPolynomial& g)
{
    HomogeneousPolynomial out(g.degree() < 2 ? 0 : g.degree() - 2);
    if (g.degree() < 2)
        return out;
    for (Axis a : all_axes)
        out += g.derivative(a).derivative(a);
    return out;
}

HomogeneousPolynomial dot(const PolynomialVectorField& u, const PolynomialVectorField& v)
{
    HomogeneousPolynomial out(u.degree() + v.degree());
    for (Axis a : all_axes)
        out += u[a] * v[a];
    return out;
}

PolynomialVectorField scale_mul(const HomogeneousPolynomial& g, const PolynomialVectorField& v)
{
    return PolynomialVectorField(g.degree() + v.degree(), g * v.x(), g * v.y(), g * v.z());
}

HomogeneousPolynomial diagonal_quadric(const Rational& s1, const Rational& s2, const Rational& s3)
{
    return HomogeneousPolynomial(2, {{Monomial{{2, 0, 0}}, s1}, {Monomial{{0, 2, 0}}, s2}, {Monomial{{0, 0, 2}}, s3}});
}

} // namespace beltrami
