#pragma once

#include "beltrami/cascade.hpp"
#include "beltrami/linear_algebra.hpp"
#include "beltrami/obstruction.hpp"
#include "beltrami/polynomial.hpp"
#include "beltrami/series.hpp"

#include <json.hpp>

// JSON forms used on the command line. Rationals are strings "p/q" (or "p").
//   polynomial:   {"degree": d, "terms": [{"k": [k1, k2, k3], "c": "p/q"}, ...]}
//   vector field: {"degree": d, "x": <polynomial>, "y": ..., "z": ...}
//   factor:       {"f0": "p/q", "components": {"2": <polynomial>, ...}}
// Parsers throw std::invalid_argument on malformed input.
namespace beltrami::json_io {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const HomogeneousPolynomial& p);
HomogeneousPolynomial polynomial_from_json(const json& j);

json to_json(const PolynomialVectorField& v);
PolynomialVectorField field_from_json(const json& j);

json to_json(const TruncatedFactor& f);
TruncatedFactor factor_from_json(const json& j);

json to_json(const SigmaTriple& s);
json to_json(const SpectrumClassification& c);

/// {"dimension": n, "basis": [{"<term degree>": <vector field>, ...}, ...]}
json to_json(const KernelBasis& k);

json to_json(const CascadeReport& r);
json to_json(const BesselVerification& b);

} // namespace beltrami::json_io
