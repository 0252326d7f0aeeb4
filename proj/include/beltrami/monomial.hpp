#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace beltrami {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> all_axes{Axis::x, Axis::y, Axis::z};

constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }

char axis_name(Axis a);

/// x^k1 y^k2 z^k3. The degree is always derived from the exponents.
struct Monomial {
    std::array<unsigned, 3> exponents{};

    constexpr unsigned degree() const { return exponents[0] + exponents[1] + exponents[2]; }
    constexpr unsigned operator[](Axis a) const { return exponents[index(a)]; }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

constexpr Monomial operator*(const Monomial& a, const Monomial& b)
{
    return {{a.exponents[0] + b.exponents[0], a.exponents[1] + b.exponents[1], a.exponents[2] + b.exponents[2]}};
}

/// Graded lexicographic order with x > y > z, larger monomials first:
/// x^2, xy, xz, y^2, yz, z^2.
struct GradedLexOrder {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a.exponents > b.exponents;
    }
};

constexpr std::size_t monomial_count(unsigned degree) { return (degree + 1u) * (degree + 2u) / 2u; }

/// All monomials of the given degree in GradedLexOrder.
std::vector<Monomial> monomials_of_degree(unsigned degree);

/// Position of m inside monomials_of_degree(m.degree()).
std::size_t graded_lex_rank(const Monomial& m);

std::string to_string(const Monomial& m);

/// One unknown coefficient: the coefficient of `monomial` in component
/// `component` of the homogeneous term X_{term_degree}.
struct CoefficientIndex {
    Axis component = Axis::x;
    Monomial monomial{};
    unsigned term_degree = 0;

    friend bool operator==(const CoefficientIndex&, const CoefficientIndex&) = default;
};

/// Ordering of columns: by term degree, then component, then monomial.
bool operator<(const CoefficientIndex& a, const CoefficientIndex& b);

/// "a^(1,0,0)" style label; a, b, c denote the x, y, z components.
/// Multi-term systems append the term degree: "a3^(1,0,0)".
std::string to_string(const CoefficientIndex& c, bool with_degree = false);

/// Columns for every coefficient of X_d, component-major.
std::vector<CoefficientIndex> coefficient_indices(unsigned degree);

} // namespace beltrami
