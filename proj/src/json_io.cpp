#include "beltrami/json_io.hpp"

#include <stdexcept>
#include <string>

namespace beltrami::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

unsigned natural(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(std::string(what) + " must be a non-negative integer");
    return j.get<unsigned>();
}

} // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(std::to_string(j.get<long long>()));
    fail("rational must be a string \"p/q\" or an integer");
}

json to_json(const HomogeneousPolynomial& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"k", m.exponents}, {"c", to_string(c)}});
    return {{"degree", p.degree()}, {"terms", std::move(terms)}};
}

HomogeneousPolynomial polynomial_from_json(const json& j)
{
    const unsigned degree = natural(member(j, "degree"), "degree");
    const json& terms = member(j, "terms");
    if (!terms.is_array())
        fail("'terms' must be an array");
    HomogeneousPolynomial p(degree);
    for (const auto& t : terms) {
        const json& k = member(t, "k");
        if (!k.is_array() || k.size() != 3)
            fail("'k' must be an array of three exponents");
        const Monomial m{{natural(k[0], "exponent"), natural(k[1], "exponent"), natural(k[2], "exponent")}};
        if (m.degree() != degree)
            fail("term " + to_string(m) + " does not have degree " + std::to_string(degree));
        p.add_term(m, rational_from_json(member(t, "c")));
    }
    return p;
}

json to_json(const PolynomialVectorField& v)
{
    return {{"degree", v.degree()}, {"x", to_json(v.x())}, {"y", to_json(v.y())}, {"z", to_json(v.z())}};
}

PolynomialVectorField field_from_json(const json& j)
{
    const unsigned degree = natural(member(j, "degree"), "degree");
    auto x = polynomial_from_json(member(j, "x"));
    auto y = polynomial_from_json(member(j, "y"));
    auto z = polynomial_from_json(member(j, "z"));
    for (const auto* p : {&x, &y, &z})
        if (p->degree() != degree)
            fail("vector field component degree differs from the field degree");
    return PolynomialVectorField(degree, std::move(x), std::move(y), std::move(z));
}

json to_json(const TruncatedFactor& f)
{
    json comps = json::object();
    for (const auto& [d, p] : f.components())
        comps[std::to_string(d)] = to_json(p);
    return {{"f0", to_string(f.f0())}, {"components", std::move(comps)}};
}

TruncatedFactor factor_from_json(const json& j)
{
    const Rational f0 = j.is_object() && j.contains("f0") ? rational_from_json(j.at("f0")) : Rational(0);
    const json& comps = member(j, "components");
    if (!comps.is_object())
        fail("'components' must be an object keyed by degree");
    std::map<unsigned, HomogeneousPolynomial> parsed;
    for (const auto& [key, value] : comps.items()) {
        unsigned d = 0;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(key, &used);
            if (used != key.size() || v < 0)
                throw std::invalid_argument(key);
            d = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            fail("component key '" + key + "' is not a degree");
        }
        auto p = polynomial_from_json(value);
        if (p.degree() != d)
            fail("component '" + key + "' has degree " + std::to_string(p.degree()));
        parsed.emplace(d, std::move(p));
    }
    return TruncatedFactor(f0, std::move(parsed));
}

json to_json(const SigmaTriple& s) { return json::array({to_string(s[0]), to_string(s[1]), to_string(s[2])}); }

json to_json(const SpectrumClassification& c)
{
    json out{{"same_sign", c.same_sign},
             {"plus_minus_pair", c.plus_minus_pair},
             {"trace_zero", c.trace_zero},
             {"pair_ratio", c.pair_ratio ? json(to_string(*c.pair_ratio)) : json(nullptr)},
             {"resonant_pair_degree", c.resonant_pair_degree ? json(*c.resonant_pair_degree) : json(nullptr)},
             {"risky_degrees", json(c.risky_degrees)}};
    return out;
}

json to_json(const KernelBasis& k)
{
    json basis = json::array();
    for (const auto& v : k.vectors) {
        json fields = json::object();
        for (const auto& [d, f] : fields_from_vector(k.col_labels, v))
            fields[std::to_string(d)] = to_json(f);
        basis.push_back(std::move(fields));
    }
    return {{"dimension", k.dimension()}, {"basis", std::move(basis)}};
}

json to_json(const CascadeReport& r)
{
    json risky = json::array();
    for (const auto& d : r.risky)
        risky.push_back({{"degree", d.degree},
                         {"depth", d.depth},
                         {"window_kernel_dim", d.window_kernel_dim},
                         {"projection_dim", d.projection_dim},
                         {"kernel", to_json(d.kernel)}});
    return {{"sigma", to_json(r.sigma)},
            {"classification", to_json(r.classification)},
            {"risky", std::move(risky)},
            {"verdict", to_string(r.verdict)}};
}

json to_json(const BesselVerification& b)
{
    return {{"order", b.order},
            {"recurrence_ok", b.recurrence_ok},
            {"bessel_match_ok", b.bessel_match_ok},
            {"cylindrical_ok", b.cylindrical_ok},
            {"cartesian_ok", b.cartesian_ok},
            {"first_integral_ok", b.first_integral_ok},
            {"critical_axis_ok", b.critical_axis_ok}};
}

} // namespace beltrami::json_io
