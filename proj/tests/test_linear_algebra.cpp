#include "beltrami/linear_algebra.hpp"
#include "beltrami/obstruction.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace beltrami;

namespace {

RationalVector dense_row(const ConstraintMatrix& m, std::size_t r)
{
    RationalVector v(m.cols(), Rational(0));
    for (const auto& [c, x] : m.row(r))
        v[c] = x;
    return v;
}

oracle::Matrix dense(const ConstraintMatrix& m)
{
    oracle::Matrix out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(dense_row(m, r));
    return out;
}

ConstraintMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density)
{
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<RationalVector> data(rows, RationalVector(cols, Rational(0)));
    for (auto& row : data)
        for (auto& x : row)
            if (keep(rng))
                x = make_rational(num(rng), den(rng));
    // Plant some dependent rows so that kernels are not always trivial.
    for (std::size_t r = 1; r < rows; r += 3)
        for (std::size_t c = 0; c < cols; ++c)
            data[r][c] = data[r - 1][c] * make_rational(num(rng), den(rng)) + data[0][c];
    return ConstraintMatrix::from_rows(data, cols);
}

} // namespace

TEST_CASE("parse and print rationals")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational(" -2/1 ")) == "-2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("rank of small matrices")
{
    CHECK(rank(ConstraintMatrix(3, 3)) == 0);

    ConstraintMatrix id(3, 3);
    for (std::size_t k = 0; k < 3; ++k)
        id.set(k, k, 1);
    CHECK(rank(id) == 3);
    CHECK(kernel_basis(id).dimension() == 0);

    // Curl rows of a degree-1 field.
    const auto m = assemble_single(1, SigmaTriple(1, 2, 3));
    ConstraintMatrix curl_rows(m.col_labels());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.row_labels()[r].equation.rfind("curl", 0) != 0)
            continue;
        const auto row = curl_rows.add_row(m.row_labels()[r]);
        for (const auto& [c, v] : m.row(r))
            curl_rows.set(row, c, v);
    }
    CHECK(curl_rows.rows() == 3);
    CHECK(curl_rows.cols() == 9);
    CHECK(rank(curl_rows) == 3);
}

TEST_CASE("kernel of [1, -1]")
{
    const auto k = kernel_basis(ConstraintMatrix::from_rows({{1, -1}}, 2));
    REQUIRE(k.dimension() == 1);
    CHECK(k.vectors[0] == RationalVector{1, 1});
}

TEST_CASE("kernel vectors start with 1")
{
    const auto k = kernel_basis(ConstraintMatrix::from_rows({{0, 2, 4, -6}}, 4));
    REQUIRE(k.dimension() == 3);
    for (const auto& v : k.vectors) {
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        REQUIRE(it != v.end());
        CHECK(*it == 1);
    }
}

TEST_CASE("sparse storage keeps only nonzero entries")
{
    ConstraintMatrix m(2, 2);
    m.set(0, 0, 3);
    m.add_to(0, 0, -3);
    m.set(1, 1, 0);
    CHECK(m.entries().empty());
    CHECK_THROWS(m.set(2, 0, 1));
    m.set(1, 0, 5);
    CHECK(m.without_empty_rows().rows() == 1);
}

TEST_CASE("consistency of inhomogeneous systems")
{
    const auto m = ConstraintMatrix::from_rows({{1, 1}, {2, 2}}, 2);
    CHECK(is_consistent(m, RationalVector{1, 2}));
    CHECK_FALSE(is_consistent(m, RationalVector{1, 3}));
    CHECK(is_consistent(m, RationalVector{0, 0}));
}

TEST_CASE("span comparisons")
{
    const std::vector<RationalVector> a{{1, 0, 1}, {0, 1, 1}};
    const std::vector<RationalVector> b{{1, 1, 2}, {1, -1, 0}};
    CHECK(same_span(a, b));
    CHECK(span_contains(a, {{2, 3, 5}}));
    CHECK_FALSE(span_contains(a, {{0, 0, 1}}));
    CHECK_FALSE(same_span(a, {{1, 0, 1}}));
}

TEST_CASE("property: rank-nullity, M v = 0 and independence on random matrices")
{
    std::mt19937 rng(20240501);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        const auto m = random_matrix(rng, rows, cols, 0.45);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.dimension() == cols);
        for (const auto& v : k.vectors)
            for (const auto& x : m.apply(v))
                CHECK(x == 0);
        CHECK(rank(k.vectors) == k.dimension());
    }
}

TEST_CASE("property: fraction-free and naive elimination agree")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        const auto m = random_matrix(rng, rows, cols, 0.5);
        const auto d = dense(m);
        CHECK(rank(m) == oracle::rank(d, cols));
        const auto k = kernel_basis(m);
        CHECK(oracle::same_span(k.vectors, oracle::nullspace(d, cols), cols));
    }
}

TEST_CASE("property: kernel is unchanged by row scaling")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
        const auto m = random_matrix(rng, rows, cols, 0.5);
        ConstraintMatrix scaled(rows, cols);
        for (const auto& [rc, v] : m.entries())
            scaled.set(rc.first, rc.second, v * make_rational(static_cast<long>(rc.first) + 2, 3));
        CHECK(kernel_basis(scaled).vectors == kernel_basis(m).vectors);
    }
}

TEST_CASE("make_rational is canonical")
{
    CHECK(to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(to_string(make_rational(4, -2)) == "-2");
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}
