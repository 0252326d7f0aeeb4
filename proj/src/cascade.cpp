#include "beltrami/cascade.hpp"

#include "system_builder.hpp"

#include <algorithm>

namespace beltrami {

TruncatedFactor::TruncatedFactor(Rational f0, std::map<unsigned, HomogeneousPolynomial> components) : f0_(std::move(f0))
{
    for (auto& [d, p] : components) {
        if (d < 2)
            throw std::invalid_argument("factor components must have degree >= 2 (f1 vanishes at a critical point; "
                                        "f0 is passed separately), got degree " +
                                        std::to_string(d));
        if (p.is_zero())
            continue;
        if (p.degree() != d)
            throw std::invalid_argument("factor component keyed " + std::to_string(d) + " has degree " +
                                        std::to_string(p.degree()));
        components_.emplace(d, std::move(p));
    }
}

const HomogeneousPolynomial* TruncatedFactor::component(unsigned degree) const
{
    auto it = components_.find(degree);
    return it == components_.end() ? nullptr : &it->second;
}

unsigned TruncatedFactor::max_degree() const { return components_.empty() ? 0 : components_.rbegin()->first; }

std::optional<SigmaTriple> TruncatedFactor::diagonal_sigma() const
{
    const auto* f2 = component(2);
    if (!f2)
        return std::nullopt;
    std::array<Rational, 3> s;
    for (const auto& [m, c] : f2->terms()) {
        const auto it = std::find(m.exponents.begin(), m.exponents.end(), 2u);
        if (it == m.exponents.end())
            return std::nullopt;
        s[static_cast<std::size_t>(it - m.exponents.begin())] = c;
    }
    if (s[0] == 0 || s[1] == 0 || s[2] == 0)
        return std::nullopt;
    return SigmaTriple(s[0], s[1], s[2]);
}

SigmaTriple TruncatedFactor::sigma() const
{
    auto s = diagonal_sigma();
    if (!s)
        throw std::invalid_argument("non-degenerate diagonal Hessian required");
    return *s;
}

TruncatedFactor TruncatedFactor::with_component_scaled(unsigned degree, const Rational& c) const
{
    auto comps = components_;
    if (auto it = comps.find(degree); it != comps.end())
        it->second *= c;
    return TruncatedFactor(f0_, std::move(comps));
}

WindowSystem assemble_window(const TruncatedFactor& f, unsigned i, unsigned d, unsigned max_degree)
{
    if (i == 0)
        throw std::invalid_argument("assemble_window: base degree must be at least 1");
    if (i + d > max_degree)
        throw DegreeCapExceeded("window reaches degree " + std::to_string(i + d) + ", above the cap " +
                                std::to_string(max_degree));
    const unsigned top = i + d;

    WindowSystem w{i, d, {}, {}};
    for (unsigned m = i; m <= top; ++m) {
        auto block = coefficient_indices(m);
        w.unknowns.insert(w.unknowns.end(), block.begin(), block.end());
    }

    detail::SystemBuilder builder(w.unknowns);
    for (unsigned m = i; m <= top; ++m) {
        for (const auto& eq : detail::curl_equations)
            builder.add_group(eq, m, m - 1);
        builder.add_group("div", m, m - 1);
        builder.add_group("fi", m, m + 1);
    }

    std::map<unsigned, PolynomialVectorField> grads;
    for (const auto& [j, fj] : f.components())
        grads.emplace(j, grad(fj));

    for (std::size_t col = 0; col < w.unknowns.size(); ++col) {
        const unsigned k = w.unknowns[col].term_degree;
        const auto unit = detail::unit_field(w.unknowns[col]);

        const auto c = curl(unit);
        for (Axis a : all_axes)
            builder.add(detail::curl_equations[index(a)], k, col, c[a]);
        builder.add("div", k, col, div(unit));

        // -f_j X_k enters the curl equation led by X_{k+1+j}.
        if (f.f0() != 0 && k + 1 <= top) {
            for (Axis a : all_axes)
                builder.add(detail::curl_equations[index(a)], k + 1, col, Rational(-f.f0()) * unit[a]);
        }
        for (const auto& [j, fj] : f.components()) {
            if (k + 1 + j <= top) {
                const auto term = scale_mul(fj, unit);
                for (Axis a : all_axes)
                    builder.add(detail::curl_equations[index(a)], k + 1 + j, col, -term[a]);
            }
            // <grad f_j, X_k> enters the first-integral equation led by X_{k+j-2}.
            if (k + j - 2 <= top)
                builder.add("fi", k + j - 2, col, dot(grads.at(j), unit));
        }
    }
    w.matrix = builder.finish();
    return w;
}

WindowSystem epsilon_window(const TruncatedFactor& f, unsigned i, unsigned d, const Rational& eps,
                            unsigned max_degree)
{
    if (!f.component(3))
        throw std::invalid_argument("epsilon_window: factor has no degree-3 component");
    return assemble_window(f.with_component_scaled(3, eps), i, d, max_degree);
}

std::size_t block_projection_dim(const KernelBasis& k, unsigned term_degree)
{
    std::vector<RationalVector> projected;
    for (const auto& v : k.vectors) {
        RationalVector p;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (k.col_labels[c].term_degree == term_degree)
                p.push_back(v[c]);
        projected.push_back(std::move(p));
    }
    return rank(projected);
}

WindowKernel solve_window(const WindowSystem& w)
{
    WindowKernel out;
    out.basis = kernel_basis(w.matrix);
    out.projection_dim = block_projection_dim(out.basis, w.base_degree);
    return out;
}

WindowKernel window_kernel(const TruncatedFactor& f, unsigned i, unsigned d, unsigned max_degree)
{
    return solve_window(assemble_window(f, i, d, max_degree));
}

bool window_admits_base(const WindowSystem& w, const PolynomialVectorField& base)
{
    if (base.degree() != w.base_degree && !base.is_zero())
        throw std::invalid_argument("window_admits_base: base field has the wrong degree");
    const auto& labels = w.matrix.col_labels();
    std::vector<std::size_t> rest;
    RationalVector fixed(labels.size(), Rational(0));
    for (std::size_t c = 0; c < labels.size(); ++c) {
        if (labels[c].term_degree == w.base_degree)
            fixed[c] = base[labels[c].component].coefficient(labels[c].monomial);
        else
            rest.push_back(c);
    }
    RationalVector rhs = w.matrix.apply(fixed);
    for (auto& q : rhs)
        q = -q;
    return is_consistent(w.matrix.select_columns(rest), rhs);
}

std::string to_string(Verdict v)
{
    return v == Verdict::TrivialOnly ? "TrivialOnly" : "ObstructionInconclusive";
}

CascadeReport analyze(const TruncatedFactor& f, const CascadeOptions& options)
{
    const SigmaTriple sigma = f.sigma();
    CascadeReport report{sigma, classify_spectrum(sigma), {}, Verdict::TrivialOnly};
    const unsigned depth = f.f0() == 0 ? options.depth_f0_zero : options.depth_f0_nonzero;

    for (unsigned i : report.classification.risky_degrees) {
        const WindowSystem w = options.epsilon ? epsilon_window(f, i, depth, *options.epsilon, options.max_degree)
                                               : assemble_window(f, i, depth, options.max_degree);
        WindowKernel k = solve_window(w);
        if (k.projection_dim != 0)
            report.verdict = Verdict::ObstructionInconclusive;
        report.risky.push_back({i, depth, k.basis.dimension(), k.projection_dim, std::move(k.basis)});
    }
    return report;
}

} // namespace beltrami
