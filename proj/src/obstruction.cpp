#include "beltrami/obstruction.hpp"

#include "system_builder.hpp"

#include <stdexcept>
#include <string>

namespace beltrami {

SigmaTriple::SigmaTriple(Rational s1, Rational s2, Rational s3) : values_{std::move(s1), std::move(s2), std::move(s3)}
{
    for (const auto& v : values_)
        if (v == 0)
            throw std::invalid_argument("degenerate Hessian: sigma components must be nonzero");
}

SigmaTriple SigmaTriple::parse(std::string_view text)
{
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw std::invalid_argument("sigma needs exactly three comma-separated rationals, got '" + std::string(text) + "'");
    return SigmaTriple(parts[0], parts[1], parts[2]);
}

HomogeneousPolynomial SigmaTriple::quadric() const { return diagonal_quadric(values_[0], values_[1], values_[2]); }

SigmaTriple SigmaTriple::scaled(const Rational& c) const
{
    return SigmaTriple(values_[0] * c, values_[1] * c, values_[2] * c);
}

std::string to_string(const SigmaTriple& s)
{
    return to_string(s[0]) + "," + to_string(s[1]) + "," + to_string(s[2]);
}

SpectrumClassification classify_spectrum(const SigmaTriple& s)
{
    SpectrumClassification c;
    const auto& v = s.values();
    c.same_sign = (v[0] > 0 && v[1] > 0 && v[2] > 0) || (v[0] < 0 && v[1] < 0 && v[2] < 0);
    c.plus_minus_pair = v[0] + v[1] == 0 || v[0] + v[2] == 0 || v[1] + v[2] == 0;
    c.trace_zero = v[0] + v[1] + v[2] == 0;

    // Sort so that the repeated value comes first: (alpha, alpha, tau).
    constexpr std::array<std::array<int, 3>, 3> orders{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (const auto& o : orders) {
        if (v[o[0]] == v[o[1]]) {
            c.pair_ratio = Rational(-v[o[2]] / v[o[0]]);
            break;
        }
    }
    if (c.pair_ratio && c.pair_ratio->get_den() == 1 && *c.pair_ratio >= 3)
        c.resonant_pair_degree = static_cast<unsigned>(c.pair_ratio->get_num().get_ui());

    if (c.plus_minus_pair)
        c.risky_degrees.insert(1);
    if (c.trace_zero)
        c.risky_degrees.insert(2);
    if (c.resonant_pair_degree)
        c.risky_degrees.insert(*c.resonant_pair_degree);
    return c;
}

ConstraintMatrix assemble_single(unsigned i, const SigmaTriple& s)
{
    const auto cols = coefficient_indices(i);
    detail::SystemBuilder builder(cols);
    if (i >= 1) {
        for (const auto& eq : detail::curl_equations)
            builder.add_group(eq, i, i - 1);
        builder.add_group("div", i, i - 1);
    }
    builder.add_group("fi", i, i + 1);

    const auto grad_f2 = grad(s.quadric());
    for (std::size_t col = 0; col < cols.size(); ++col) {
        const auto unit = detail::unit_field(cols[col]);
        if (i >= 1) {
            const auto c = curl(unit);
            for (Axis a : all_axes)
                builder.add(detail::curl_equations[index(a)], i, col, c[a]);
            builder.add("div", i, col, div(unit));
        }
        builder.add("fi", i, col, dot(grad_f2, unit));
    }
    return builder.finish();
}

KernelBasis kernel_single(unsigned i, const SigmaTriple& s) { return kernel_basis(assemble_single(i, s)); }

std::vector<std::array<int, 3>> resonance_search(const SigmaTriple& s, unsigned bound)
{
    if (bound < 1)
        throw std::invalid_argument("resonance_search: bound must be at least 1");
    std::vector<std::array<int, 3>> out;
    const int b = static_cast<int>(bound);
    for (int k1 = -b; k1 <= b; ++k1)
        for (int k2 = -b; k2 <= b; ++k2)
            for (int k3 = -b; k3 <= b; ++k3) {
                if (k1 == 0 && k2 == 0 && k3 == 0)
                    continue;
                if (s[0] * k1 + s[1] * k2 + s[2] * k3 == 0)
                    out.push_back({k1, k2, k3});
            }
    return out;
}

std::map<unsigned, PolynomialVectorField> fields_from_vector(std::span<const CoefficientIndex> labels,
                                                             std::span<const Rational> v)
{
    if (labels.size() != v.size())
        throw std::invalid_argument("fields_from_vector: length mismatch");
    std::map<unsigned, PolynomialVectorField> out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto& c = labels[k];
        auto it = out.try_emplace(c.term_degree, PolynomialVectorField(c.term_degree)).first;
        it->second.add_term(c.component, c.monomial, v[k]);
    }
    return out;
}

RationalVector vector_from_fields(std::span<const CoefficientIndex> labels,
                                  const std::map<unsigned, PolynomialVectorField>& fields)
{
    RationalVector out(labels.size(), Rational(0));
    std::size_t matched = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto& c = labels[k];
        auto it = fields.find(c.term_degree);
        if (it == fields.end())
            continue;
        out[k] = it->second[c.component].coefficient(c.monomial);
        if (out[k] != 0)
            ++matched;
    }
    std::size_t total = 0;
    for (const auto& [d, f] : fields)
        for (Axis a : all_axes)
            total += f[a].terms().size();
    if (matched != total)
        throw std::invalid_argument("vector_from_fields: field has terms outside the column layout");
    return out;
}

} // namespace beltrami
