#include "beltrami/monomial.hpp"

#include <tuple>

namespace beltrami {

char axis_name(Axis a) { return "xyz"[index(a)]; }

std::vector<Monomial> monomials_of_degree(unsigned degree)
{
    std::vector<Monomial> out;
    out.reserve(monomial_count(degree));
    for (unsigned k1 = degree + 1; k1-- > 0;)
        for (unsigned k2 = degree - k1 + 1; k2-- > 0;)
            out.push_back({{k1, k2, degree - k1 - k2}});
    return out;
}

std::size_t graded_lex_rank(const Monomial& m)
{
    const std::size_t s = m.degree() - m.exponents[0];
    return s * (s + 1) / 2 + (s - m.exponents[1]);
}

std::string to_string(const Monomial& m)
{
    return "(" + std::to_string(m.exponents[0]) + "," + std::to_string(m.exponents[1]) + "," +
           std::to_string(m.exponents[2]) + ")";
}

bool operator<(const CoefficientIndex& a, const CoefficientIndex& b)
{
    if (a.term_degree != b.term_degree)
        return a.term_degree < b.term_degree;
    if (a.component != b.component)
        return a.component < b.component;
    return GradedLexOrder{}(a.monomial, b.monomial);
}

std::string to_string(const CoefficientIndex& c, bool with_degree)
{
    std::string s(1, "abc"[index(c.component)]);
    if (with_degree)
        s += std::to_string(c.term_degree);
    return s + "^" + to_string(c.monomial);
}

std::vector<CoefficientIndex> coefficient_indices(unsigned degree)
{
    std::vector<CoefficientIndex> out;
    const auto monomials = monomials_of_degree(degree);
    out.reserve(3 * monomials.size());
    for (Axis a : all_axes)
        for (const auto& m : monomials)
            out.push_back({a, m, degree});
    return out;
}

} // namespace beltrami
