#include "beltrami/harmonic.hpp"

#include <stdexcept>

namespace beltrami {

namespace {

// cos(m*pi/2) and sin(m*pi/2) by m mod 4.
int cos_quarter_turns(unsigned m)
{
    static constexpr int table[4] = {1, 0, -1, 0};
    return table[m % 4];
}

int sin_quarter_turns(unsigned m)
{
    static constexpr int table[4] = {0, 1, 0, -1};
    return table[m % 4];
}

} // namespace

PlanarHarmonicPair planar_harmonics(unsigned i)
{
    if (i == 0)
        throw std::invalid_argument("planar_harmonics: degree must be at least 1");
    PlanarHarmonicPair out{i, HomogeneousPolynomial(i), HomogeneousPolynomial(i)};
    Integer binom = 1; // C(i, k)
    for (unsigned k = 0; k <= i; ++k) {
        const Monomial m{{k, i - k, 0}};
        out.re_part.add_term(m, Rational(binom * cos_quarter_turns(i - k)));
        out.im_part.add_term(m, Rational(binom * sin_quarter_turns(i - k)));
        binom = binom * (i - k) / (k + 1);
    }
    return out;
}

PolynomialVectorField lifted_field(unsigned i, HarmonicBranch which)
{
    const auto pair = planar_harmonics(i);
    const auto& p = which == HarmonicBranch::real ? pair.re_part : pair.im_part;
    return grad(p * HomogeneousPolynomial::variable(Axis::z));
}

} // namespace beltrami
