#include "beltrami/cascade.hpp"
#include "beltrami/harmonic.hpp"

#include "generators.hpp"
#include "window_check.hpp"

#include <doctest.h>

using namespace beltrami;

namespace {

HomogeneousPolynomial mono(unsigned a, unsigned b, unsigned c, const Rational& k = 1)
{
    return HomogeneousPolynomial::term(Monomial{{a, b, c}}, k);
}

PolynomialVectorField vf(HomogeneousPolynomial a, HomogeneousPolynomial b, HomogeneousPolynomial c)
{
    return PolynomialVectorField(std::move(a), std::move(b), std::move(c));
}

TruncatedFactor quadric_factor(const Rational& f0, const SigmaTriple& s) { return TruncatedFactor(f0, {{2, s.quadric()}}); }

TruncatedFactor cubic_counterexample()
{
    return TruncatedFactor(1, {{2, diagonal_quadric(1, 1, -1)}, {3, mono(1, 1, 1, 2)}});
}

} // namespace

TEST_CASE("truncated factor validation")
{
    CHECK_THROWS_AS(TruncatedFactor(0, {{1, mono(1, 0, 0)}}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedFactor(0, {{3, mono(2, 0, 0)}}), std::invalid_argument);
    const TruncatedFactor f(0, {{2, diagonal_quadric(1, 1, -3)}, {4, HomogeneousPolynomial(4)}});
    CHECK(f.components().size() == 1);
    CHECK(f.max_degree() == 2);
    CHECK(f.sigma() == SigmaTriple(1, 1, -3));
    CHECK_FALSE(TruncatedFactor(0, {{2, mono(1, 1, 0)}}).diagonal_sigma());
    CHECK_FALSE(TruncatedFactor(0, {{2, diagonal_quadric(1, 1, 0)}}).diagonal_sigma());
    CHECK_THROWS_WITH(TruncatedFactor(1, {}).sigma(), doctest::Contains("non-degenerate diagonal Hessian required"));
}

TEST_CASE("window assembly")
{
    const auto f = quadric_factor(0, SigmaTriple(1, 1, -3));
    const auto w = assemble_window(f, 3, 3);
    CHECK(w.unknowns.size() == 3 * (10 + 15 + 21 + 28));
    // The coupling curl(X_6) = f2 X_3 appears in the curl rows of order 6.
    bool coupled = false;
    for (const auto& [rc, v] : w.matrix.entries())
        coupled = coupled || (w.matrix.row_labels()[rc.first].order == 6 && w.unknowns[rc.second].term_degree == 3);
    CHECK(coupled);
    // Every row only touches unknowns inside the window.
    for (const auto& l : w.unknowns)
        CHECK((l.term_degree >= 3 && l.term_degree <= 6));

    CHECK_THROWS_AS(assemble_window(f, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(assemble_window(f, 14, 3), DegreeCapExceeded);
    CHECK_NOTHROW(assemble_window(f, 14, 3, 20));
}

TEST_CASE("window kernels from the examples")
{
    const auto p7 = window_kernel(quadric_factor(0, SigmaTriple(1, 1, -3)), 3, 3);
    CHECK(p7.projection_dim == 0);

    const auto p8 = window_kernel(quadric_factor(1, SigmaTriple(1, 1, -3)), 3, 1);
    CHECK(p8.projection_dim == 0);

    const auto shifted = window_kernel(quadric_factor(0, SigmaTriple(1, 1, -6)), 3, 3);
    CHECK(shifted.projection_dim == 0);
    CHECK(block_projection_dim(shifted.basis, 6) == 2);

    const auto f = cubic_counterexample();
    const auto af = window_kernel(f, 1, 1);
    CHECK(af.projection_dim >= 1);
    const auto x1 = vf(-HomogeneousPolynomial::variable(Axis::z), HomogeneousPolynomial(1),
                       -HomogeneousPolynomial::variable(Axis::x));
    const auto x2 = vf(mono(1, 1, 0), HomogeneousPolynomial(2), -mono(0, 1, 1));
    CHECK(check::solves_window(f, 1, 1, {{1, x1}, {2, x2}}));
    CHECK(span_contains(af.basis.vectors, {vector_from_fields(af.basis.col_labels, {{1, x1}, {2, x2}})}));
    CHECK(check::kernel_substitutes(f, 1, 1, af.basis));
}

TEST_CASE("epsilon windows")
{
    const auto f = cubic_counterexample();
    const TruncatedFactor without_f3(1, {{2, diagonal_quadric(1, 1, -1)}});
    CHECK(epsilon_window(f, 1, 1, 0).matrix == assemble_window(without_f3, 1, 1).matrix);
    CHECK(epsilon_window(f, 1, 1, 1).matrix == assemble_window(f, 1, 1).matrix);
    CHECK_THROWS_AS(epsilon_window(without_f3, 1, 1, 1), std::invalid_argument);

    // Projection dimension as eps runs through 1/10^k, k = 0..4.
    Rational eps = 1;
    std::string reported;
    for (int k = 0; k <= 4; ++k, eps /= 10) {
        const auto w = epsilon_window(f, 1, 1, eps);
        const auto kernel = solve_window(w);
        reported += " eps=" + to_string(eps) + ":" + std::to_string(kernel.projection_dim);
        CHECK(check::kernel_substitutes(f.with_component_scaled(3, eps), 1, 1, kernel.basis));
    }
    MESSAGE("projection dimension by eps:" << reported);
}

TEST_CASE("analyze")
{
    const auto same = analyze(TruncatedFactor(1, {{2, diagonal_quadric(1, 2, 3)}, {3, mono(1, 1, 1, 5)}}));
    CHECK(same.verdict == Verdict::TrivialOnly);
    CHECK(same.risky.empty());

    const auto r2 = mono(2, 0, 0) + mono(0, 2, 0) + mono(0, 0, 2);
    const auto quartic = analyze(TruncatedFactor(0, {{2, diagonal_quadric(1, 1, -3)}, {4, r2 * r2}}));
    REQUIRE(quartic.risky.size() == 1);
    CHECK(quartic.risky[0].degree == 3);
    CHECK(quartic.risky[0].depth == 3);
    CHECK(quartic.risky[0].projection_dim == 0);
    CHECK(quartic.verdict == Verdict::TrivialOnly);

    const auto cubic = analyze(cubic_counterexample());
    REQUIRE(cubic.risky.size() == 1);
    CHECK(cubic.risky[0].degree == 1);
    CHECK(cubic.risky[0].depth == 1);
    CHECK(cubic.risky[0].projection_dim >= 1);
    CHECK(cubic.verdict == Verdict::ObstructionInconclusive);

    CHECK_THROWS_WITH(analyze(TruncatedFactor(1, {{2, mono(1, 1, 0)}})),
                      doctest::Contains("non-degenerate diagonal Hessian required"));

    CascadeOptions deep;
    deep.depth_f0_nonzero = 2;
    CHECK(analyze(cubic_counterexample(), deep).risky[0].depth == 2);
}

TEST_CASE("window admits base: lambda test")
{
    const std::vector<std::pair<int, int>> lambdas{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}};
    for (unsigned i = 3; i <= 6; ++i) {
        const auto w = assemble_window(quadric_factor(0, SigmaTriple(1, 1, -static_cast<int>(i))), i, 3);
        CHECK(window_admits_base(w, PolynomialVectorField(i)));
        for (const auto& [l1, l2] : lambdas) {
            const auto base = Rational(l1) * lifted_field(i, HarmonicBranch::real) +
                              Rational(l2) * lifted_field(i, HarmonicBranch::imaginary);
            CHECK_FALSE(window_admits_base(w, base));
        }
    }
    // Positive control: the counterexample window does admit its X_1.
    const auto w = assemble_window(cubic_counterexample(), 1, 1);
    CHECK(window_admits_base(w, vf(HomogeneousPolynomial::variable(Axis::z), HomogeneousPolynomial(1),
                                   HomogeneousPolynomial::variable(Axis::x))));
}

TEST_CASE("property: window kernels solve the equations and project into the single kernel")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned i = gen::degree(rng, 1, 4);
        const unsigned d = gen::degree(rng, 0, 2);
        const SigmaTriple s = trial % 3 == 0   ? SigmaTriple(1, 1, -static_cast<int>(i))
                              : trial % 3 == 1 ? SigmaTriple(1, -1, gen::nonzero_rational(rng))
                                               : SigmaTriple(1, 2, -3);
        std::map<unsigned, HomogeneousPolynomial> comps{{2, s.quadric()}};
        if (rng() % 2)
            comps.emplace(3, gen::polynomial(rng, 3, 0.3));
        const TruncatedFactor f(rng() % 2 ? Rational(0) : gen::rational(rng), comps);
        const auto k = window_kernel(f, i, d);
        CHECK(check::kernel_substitutes(f, i, d, k.basis));

        // The X_i block of every window solution lies in kernel_single(i, s).
        const auto single = kernel_single(i, s);
        std::vector<RationalVector> projected;
        for (const auto& v : k.basis.vectors) {
            const auto fields = fields_from_vector(k.basis.col_labels, v);
            projected.push_back(vector_from_fields(single.col_labels, {{i, fields.at(i)}}));
        }
        CHECK(span_contains(single.vectors, projected));
        CHECK(k.projection_dim <= single.dimension());
    }
}

// f -> c f maps solutions X_m to c^(m-i) X_m, so dimensions are invariant.
TEST_CASE("property: scaling (sigma, f0) keeps window dimensions")
{
    std::mt19937 rng(22);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned i = gen::degree(rng, 1, 4);
        const SigmaTriple s = trial % 2 ? SigmaTriple(1, 1, -static_cast<int>(i)) : gen::mixed_unflagged_sigma(rng);
        const Rational f0 = trial % 3 ? Rational(1) : Rational(0);
        const Rational c = gen::nonzero_rational(rng);
        const auto a = window_kernel(quadric_factor(f0, s), i, 1);
        const auto b = window_kernel(quadric_factor(f0 * c, s.scaled(c)), i, 1);
        CHECK(a.basis.dimension() == b.basis.dimension());
        CHECK(a.projection_dim == b.projection_dim);
        CHECK(block_projection_dim(a.basis, i + 1) == block_projection_dim(b.basis, i + 1));
    }
}

TEST_CASE("window sweeps")
{
    for (unsigned i = 3; i <= 6; ++i) {
        CAPTURE(i);
        const SigmaTriple s(1, 1, -static_cast<int>(i));
        CHECK(window_kernel(quadric_factor(0, s), i, 3).projection_dim == 0);
        CHECK(window_kernel(quadric_factor(1, s), i, 1).projection_dim == 0);
    }
    for (int beta : {1, 2, 5})
        CHECK(window_kernel(quadric_factor(1, SigmaTriple(1, -1, beta)), 1, 1).projection_dim == 0);
    for (const auto& s : {SigmaTriple(1, 1, -2), SigmaTriple(1, 2, -3)})
        CHECK(window_kernel(quadric_factor(1, s), 2, 1).projection_dim == 0);
}
