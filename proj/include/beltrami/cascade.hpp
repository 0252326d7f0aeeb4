#pragma once

#include "beltrami/linear_algebra.hpp"
#include "beltrami/obstruction.hpp"
#include "beltrami/polynomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace beltrami {

inline constexpr unsigned default_degree_cap = 16;

struct DegreeCapExceeded : std::length_error {
    using std::length_error::length_error;
};

/// Taylor jet f0 + f2 + f3 + ... + fD of the proportionality factor at a
/// critical point. There is no degree-1 term.
class TruncatedFactor {
public:
    TruncatedFactor(Rational f0, std::map<unsigned, HomogeneousPolynomial> components);

    const Rational& f0() const { return f0_; }
    /// Nonzero components, keyed by degree (all keys >= 2).
    const std::map<unsigned, HomogeneousPolynomial>& components() const { return components_; }
    const HomogeneousPolynomial* component(unsigned degree) const;
    unsigned max_degree() const;

    /// The Hessian parameters when f2 is exactly s1 x^2 + s2 y^2 + s3 z^2
    /// with all s nonzero.
    std::optional<SigmaTriple> diagonal_sigma() const;
    /// As diagonal_sigma, throwing std::invalid_argument
    /// ("non-degenerate diagonal Hessian required") when absent.
    SigmaTriple sigma() const;

    TruncatedFactor with_component_scaled(unsigned degree, const Rational& c) const;

private:
    Rational f0_;
    std::map<unsigned, HomogeneousPolynomial> components_;
};

/// Coupled equations for X_i, ..., X_{i+d}, with X_j = 0 for j < i.
struct WindowSystem {
    unsigned base_degree = 0;
    unsigned depth = 0;
    std::vector<CoefficientIndex> unknowns;
    ConstraintMatrix matrix;
};

/// For each m in [i, i+d]:
///   curl(X_m) - sum_j f_j X_{m-1-j} = 0   (rows "curl.x/y/z", order m)
///   div(X_m) = 0                          (rows "div", order m)
///   sum_{j>=2} <grad f_j, X_{m+2-j}> = 0  (rows "fi", order m)
/// Every included equation only references unknowns inside the window;
/// equations led by X_{m} with m > i+d are left out.
/// Throws std::invalid_argument for i == 0 and DegreeCapExceeded when
/// i + d > max_degree.
WindowSystem assemble_window(const TruncatedFactor& f, unsigned i, unsigned d,
                             unsigned max_degree = default_degree_cap);

/// assemble_window with every term coming from f3 multiplied by eps.
/// Throws std::invalid_argument when f has no degree-3 component.
WindowSystem epsilon_window(const TruncatedFactor& f, unsigned i, unsigned d, const Rational& eps,
                            unsigned max_degree = default_degree_cap);

struct WindowKernel {
    KernelBasis basis;
    /// Dimension of the projection of the kernel onto the X_i coefficients.
    std::size_t projection_dim = 0;
};

/// Rank of the kernel vectors restricted to the columns of X_{term_degree}.
std::size_t block_projection_dim(const KernelBasis& k, unsigned term_degree);

WindowKernel solve_window(const WindowSystem& w);
WindowKernel window_kernel(const TruncatedFactor& f, unsigned i, unsigned d,
                           unsigned max_degree = default_degree_cap);

/// Whether the window equations admit a solution whose X_i equals `base`
/// (X_i moved to the right-hand side; decided by rank of [A | b] vs A).
bool window_admits_base(const WindowSystem& w, const PolynomialVectorField& base);

enum class Verdict { TrivialOnly, ObstructionInconclusive };

std::string to_string(Verdict v);

struct RiskyDegreeResult {
    unsigned degree = 0;
    unsigned depth = 0;
    std::size_t window_kernel_dim = 0;
    std::size_t projection_dim = 0;
    KernelBasis kernel;
};

struct CascadeReport {
    SigmaTriple sigma;
    SpectrumClassification classification;
    std::vector<RiskyDegreeResult> risky;
    Verdict verdict = Verdict::TrivialOnly;
};

struct CascadeOptions {
    unsigned depth_f0_zero = 3;
    unsigned depth_f0_nonzero = 1;
    unsigned max_degree = default_degree_cap;
    /// When set, the f3 coupling is scaled by this value.
    std::optional<Rational> epsilon;
};

/// Classifies the Hessian and solves one window per risky degree, with the
/// depth chosen by whether f0 vanishes. TrivialOnly iff every window forces
/// its X_i to vanish. The verdict is a statement about the truncated jet.
CascadeReport analyze(const TruncatedFactor& f, const CascadeOptions& options = {});

} // namespace beltrami
