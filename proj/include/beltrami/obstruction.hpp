#pragma once

#include "beltrami/linear_algebra.hpp"
#include "beltrami/polynomial.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

namespace beltrami {

/// Half-eigenvalues of a diagonal Hessian: f2 = s1 x^2 + s2 y^2 + s3 z^2.
/// All three are nonzero; construction throws std::invalid_argument
/// ("degenerate Hessian") otherwise.
class SigmaTriple {
public:
    SigmaTriple(Rational s1, Rational s2, Rational s3);

    /// "1,1,-3" or "1/2, -2/3, 5".
    static SigmaTriple parse(std::string_view text);

    const Rational& operator[](std::size_t k) const { return values_.at(k); }
    const std::array<Rational, 3>& values() const { return values_; }
    HomogeneousPolynomial quadric() const;
    SigmaTriple scaled(const Rational& c) const;

    friend bool operator==(const SigmaTriple&, const SigmaTriple&) = default;

private:
    std::array<Rational, 3> values_;
};

std::string to_string(const SigmaTriple& s);

struct SpectrumClassification {
    bool same_sign = false;
    bool plus_minus_pair = false; // some s_a + s_b == 0
    bool trace_zero = false;
    // When two values coincide (alpha, alpha, tau): -tau / alpha.
    std::optional<Rational> pair_ratio;
    // pair_ratio when it is an integer >= 3.
    std::optional<unsigned> resonant_pair_degree;
    std::set<unsigned> risky_degrees;
};

/// Reports every applicable flag; overlapping categories are all listed.
SpectrumClassification classify_spectrum(const SigmaTriple& s);

/// Coefficient-matching rows of curl(X_i) = 0, div(X_i) = 0 and
/// <grad f2, X_i> = 0. Columns are coefficient_indices(i); rows are grouped
/// curl.x, curl.y, curl.z, div, fi, each in graded-lex monomial order.
ConstraintMatrix assemble_single(unsigned i, const SigmaTriple& s);

KernelBasis kernel_single(unsigned i, const SigmaTriple& s);

/// Integer triples k != 0 with |k_j| <= bound and s . k == 0, in
/// lexicographic order.
std::vector<std::array<int, 3>> resonance_search(const SigmaTriple& s, unsigned bound);

/// Splits a coefficient vector into the homogeneous fields it describes,
/// keyed by term degree.
std::map<unsigned, PolynomialVectorField> fields_from_vector(std::span<const CoefficientIndex> labels,
                                                             std::span<const Rational> v);

/// Coefficient vector of the given fields in the given column layout.
/// Throws std::invalid_argument if a field has a term with no column.
RationalVector vector_from_fields(std::span<const CoefficientIndex> labels,
                                  const std::map<unsigned, PolynomialVectorField>& fields);

} // namespace beltrami
