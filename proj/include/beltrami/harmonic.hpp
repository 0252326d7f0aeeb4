#pragma once

#include "beltrami/polynomial.hpp"

namespace beltrami {

/// Re and Im of (x + iy)^i; both harmonic and free of z.
struct PlanarHarmonicPair {
    unsigned degree = 0;
    HomogeneousPolynomial re_part;
    HomogeneousPolynomial im_part;
};

enum class HarmonicBranch { real = 1, imaginary = 2 };

/// Binomial expansion with cos/sin of multiples of pi/2 taken exactly.
/// Throws std::invalid_argument for i == 0.
PlanarHarmonicPair planar_harmonics(unsigned i);

/// grad(p(x, y) * z) for p = Re or Im of (x + iy)^i. Degree i; the z
/// component equals p.
PolynomialVectorField lifted_field(unsigned i, HarmonicBranch which);

} // namespace beltrami
