#pragma once

#include "beltrami/linear_algebra.hpp"
#include "beltrami/polynomial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace beltrami::detail {

/// Accumulates coefficient-matching equations. Each row group is one
/// polynomial identity "sum = 0"; its rows are the monomials of the group's
/// degree in graded-lex order. Unknown column j contributes a polynomial to
/// a group. Rows that end up with no entries are dropped.
class SystemBuilder {
public:
    explicit SystemBuilder(std::vector<CoefficientIndex> cols) : matrix_(std::move(cols)) {}

    void add_group(const std::string& equation, unsigned order, unsigned degree)
    {
        const auto key = std::make_pair(order, equation);
        if (groups_.count(key))
            return;
        groups_[key] = {matrix_.rows(), degree};
        for (const auto& m : monomials_of_degree(degree))
            matrix_.add_row({equation, order, m});
    }

    bool has_group(const std::string& equation, unsigned order) const
    {
        return groups_.count(std::make_pair(order, equation)) != 0;
    }

    void add(const std::string& equation, unsigned order, std::size_t col, const HomogeneousPolynomial& p)
    {
        if (p.is_zero())
            return;
        const auto& [first_row, degree] = groups_.at(std::make_pair(order, equation));
        if (p.degree() != degree)
            throw std::logic_error("SystemBuilder: degree mismatch in group " + equation);
        for (const auto& [m, c] : p.terms())
            matrix_.add_to(first_row + graded_lex_rank(m), col, c);
    }

    ConstraintMatrix finish() const { return matrix_.without_empty_rows(); }

private:
    ConstraintMatrix matrix_;
    std::map<std::pair<unsigned, std::string>, std::pair<std::size_t, unsigned>> groups_;
};

inline PolynomialVectorField unit_field(const CoefficientIndex& c)
{
    PolynomialVectorField v(c.term_degree);
    v.add_term(c.component, c.monomial, 1);
    return v;
}

inline const std::array<std::string, 3> curl_equations{"curl.x", "curl.y", "curl.z"};

} // namespace beltrami::detail
