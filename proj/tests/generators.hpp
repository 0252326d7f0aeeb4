#pragma once

// Random inputs for property tests. Seeds are fixed so failures reproduce.

#include "beltrami/obstruction.hpp"
#include "beltrami/polynomial.hpp"

#include <random>

namespace gen {

using namespace beltrami;

inline Rational rational(std::mt19937& rng, int max_num = 9, int max_den = 6)
{
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937& rng, int max_num = 9, int max_den = 6)
{
    Rational q;
    do
        q = rational(rng, max_num, max_den);
    while (q == 0);
    return q;
}

// Each monomial is present with probability `density`.
inline HomogeneousPolynomial polynomial(std::mt19937& rng, unsigned degree, double density = 0.6)
{
    std::bernoulli_distribution keep(density);
    HomogeneousPolynomial p(degree);
    for (const auto& m : monomials_of_degree(degree))
        if (keep(rng))
            p.add_term(m, rational(rng));
    return p;
}

inline PolynomialVectorField field(std::mt19937& rng, unsigned degree, double density = 0.6)
{
    return PolynomialVectorField(degree, polynomial(rng, degree, density), polynomial(rng, degree, density),
                                 polynomial(rng, degree, density));
}

inline unsigned degree(std::mt19937& rng, unsigned lo, unsigned hi)
{
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline SigmaTriple same_sign_sigma(std::mt19937& rng)
{
    Rational s[3];
    for (auto& v : s)
        do
            v = rational(rng, 20, 7);
        while (v <= 0);
    if (std::bernoulli_distribution(0.5)(rng))
        for (auto& v : s)
            v = -v;
    return SigmaTriple(s[0], s[1], s[2]);
}

// Mixed signs and no flag from classify_spectrum.
inline SigmaTriple mixed_unflagged_sigma(std::mt19937& rng)
{
    while (true) {
        const SigmaTriple s(nonzero_rational(rng, 20, 7), nonzero_rational(rng, 20, 7), nonzero_rational(rng, 20, 7));
        const auto c = classify_spectrum(s);
        if (!c.same_sign && c.risky_degrees.empty())
            return s;
    }
}

} // namespace gen
