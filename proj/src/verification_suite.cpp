#include "beltrami/verification_suite.hpp"

#include "beltrami/cascade.hpp"
#include "beltrami/harmonic.hpp"
#include "beltrami/series.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

namespace beltrami {

namespace {

using Outcome = std::pair<bool, std::string>;
using CheckFn = std::function<Outcome(const SigmaTriple*)>;

struct CheckSpec {
    std::string name;
    std::optional<SigmaTriple> default_sigma;
    CheckFn run;
};

SigmaTriple sigma(int a, int b, int c) { return SigmaTriple(a, b, c); }

HomogeneousPolynomial mono(unsigned a, unsigned b, unsigned c, const Rational& coeff = 1)
{
    return HomogeneousPolynomial::term(Monomial{{a, b, c}}, coeff);
}

PolynomialVectorField field(HomogeneousPolynomial x, HomogeneousPolynomial y, HomogeneousPolynomial z)
{
    return PolynomialVectorField(std::move(x), std::move(y), std::move(z));
}

HomogeneousPolynomial zero(unsigned d) { return HomogeneousPolynomial(d); }

// ---- golden rows -----------------------------------------------------------

// One term "coeff * [sigma_s] * <comp>^(k)"; s == 0 means no sigma factor.
struct GoldenTerm {
    char comp;
    std::array<unsigned, 3> k;
    int coeff;
    int s;
};
using GoldenRow = std::vector<GoldenTerm>;

struct GoldenSystem {
    std::vector<GoldenRow> curl, div, fi;
    std::vector<GoldenRow> fi_unlisted; // rows the published listing leaves out
};

GoldenSystem golden_degree1()
{
    return {{{{'b', {0, 0, 1}, -1, 0}, {'c', {0, 1, 0}, 1, 0}},
             {{'a', {0, 0, 1}, 1, 0}, {'c', {1, 0, 0}, -1, 0}},
             {{'a', {0, 1, 0}, -1, 0}, {'b', {1, 0, 0}, 1, 0}}},
            {{{'a', {1, 0, 0}, 1, 0}, {'b', {0, 1, 0}, 1, 0}, {'c', {0, 0, 1}, 1, 0}}},
            {{{'a', {0, 1, 0}, 1, 1}, {'b', {1, 0, 0}, 1, 2}},
             {{'b', {0, 0, 1}, 1, 2}, {'c', {0, 1, 0}, 1, 3}},
             {{'a', {0, 0, 1}, 1, 1}, {'c', {1, 0, 0}, 1, 3}},
             {{'c', {0, 0, 1}, 1, 3}},
             {{'b', {0, 1, 0}, 1, 2}},
             {{'a', {1, 0, 0}, 1, 1}}},
            {}};
}

GoldenSystem golden_degree2()
{
    return {{{{'c', {0, 1, 1}, 1, 0}, {'b', {0, 0, 2}, -2, 0}},
             {{'c', {0, 2, 0}, 2, 0}, {'b', {0, 1, 1}, -1, 0}},
             {{'c', {1, 1, 0}, 1, 0}, {'b', {1, 0, 1}, -1, 0}},
             {{'a', {0, 1, 1}, 1, 0}, {'c', {1, 1, 0}, -1, 0}},
             {{'a', {1, 0, 1}, 1, 0}, {'c', {2, 0, 0}, -2, 0}},
             {{'b', {1, 0, 1}, 1, 0}, {'a', {0, 1, 1}, -1, 0}},
             {{'b', {2, 0, 0}, 2, 0}, {'a', {1, 1, 0}, -1, 0}},
             {{'a', {0, 0, 2}, 2, 0}, {'c', {1, 0, 1}, -1, 0}},
             {{'b', {1, 1, 0}, 1, 0}, {'a', {0, 2, 0}, -2, 0}}},
            {{{'a', {1, 0, 1}, 1, 0}, {'b', {0, 1, 1}, 1, 0}, {'c', {0, 0, 2}, 2, 0}},
             {{'a', {1, 1, 0}, 1, 0}, {'b', {0, 2, 0}, 2, 0}, {'c', {0, 1, 1}, 1, 0}},
             {{'a', {2, 0, 0}, 2, 0}, {'b', {1, 1, 0}, 1, 0}, {'c', {1, 0, 1}, 1, 0}}},
            {{{'a', {0, 0, 2}, 1, 1}, {'c', {1, 0, 1}, 1, 3}},
             {{'a', {0, 2, 0}, 1, 1}, {'b', {1, 1, 0}, 1, 2}},
             {{'a', {0, 1, 1}, 1, 1}, {'b', {1, 0, 1}, 1, 2}, {'c', {1, 1, 0}, 1, 3}},
             {{'a', {1, 0, 1}, 1, 1}, {'c', {2, 0, 0}, 1, 3}},
             {{'a', {1, 1, 0}, 1, 1}, {'b', {2, 0, 0}, 1, 2}},
             {{'c', {0, 0, 2}, 1, 3}},
             {{'b', {0, 2, 0}, 1, 2}},
             {{'a', {2, 0, 0}, 1, 1}}},
            {{{'b', {0, 1, 1}, 1, 2}, {'c', {0, 2, 0}, 1, 3}},
             {{'b', {0, 0, 2}, 1, 2}, {'c', {0, 1, 1}, 1, 3}}}};
}

// Canonical text of a row: sorted "label=value" terms.
std::string canonical(std::vector<std::pair<std::string, Rational>> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [label, value] : terms)
        out += label + "=" + to_string(value) + ";";
    return out;
}

std::vector<std::string> golden_rows(const std::vector<GoldenRow>& rows, const SigmaTriple& s, int scale)
{
    std::vector<std::string> out;
    for (const auto& row : rows) {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& t : row) {
            Rational c = t.coeff * scale;
            if (t.s != 0)
                c *= s[static_cast<std::size_t>(t.s - 1)];
            std::ostringstream label;
            label << t.comp << "^(" << t.k[0] << ',' << t.k[1] << ',' << t.k[2] << ')';
            terms.emplace_back(label.str(), c);
        }
        out.push_back(canonical(std::move(terms)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Outcome compare_golden(unsigned i, const GoldenSystem& g, const SigmaTriple& s)
{
    const auto m = assemble_single(i, s);
    std::map<std::string, std::vector<std::string>> built;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [c, v] : m.row(r))
            terms.emplace_back(to_string(m.col_labels()[c]), v);
        const auto& eq = m.row_labels()[r].equation;
        built[eq.rfind("curl", 0) == 0 ? "curl" : eq].push_back(canonical(std::move(terms)));
    }
    for (auto& [k, v] : built)
        std::sort(v.begin(), v.end());

    // The matrix uses <grad f2, X>; the listed first-integral rows are half of that.
    const bool curl_ok = built["curl"] == golden_rows(g.curl, s, 1);
    const bool div_ok = built["div"] == golden_rows(g.div, s, 1);
    auto fi_rows = g.fi;
    fi_rows.insert(fi_rows.end(), g.fi_unlisted.begin(), g.fi_unlisted.end());
    const bool fi_ok = built["fi"] == golden_rows(fi_rows, s, 2);
    std::ostringstream d;
    d << "curl " << (curl_ok ? "match" : "MISMATCH") << ", div " << (div_ok ? "match" : "MISMATCH") << ", fi "
      << (fi_ok ? "match" : "MISMATCH") << " (" << m.rows() << " rows, " << g.fi_unlisted.size()
      << " first-integral rows missing from the listing)";
    return {curl_ok && div_ok && fi_ok, d.str()};
}

// ---- shared helpers --------------------------------------------------------

bool solves_single(unsigned i, const SigmaTriple& s, const PolynomialVectorField& x)
{
    return (i == 0 || (curl(x).is_zero() && div(x).is_zero())) && dot(grad(s.quadric()), x).is_zero();
}

bool kernel_substitutes(const KernelBasis& k, unsigned i, const SigmaTriple& s)
{
    for (const auto& v : k.vectors)
        for (const auto& [d, x] : fields_from_vector(k.col_labels, v))
            if (!solves_single(i, s, x))
                return false;
    return true;
}

RationalVector as_vector(const KernelBasis& k, unsigned degree, const PolynomialVectorField& f)
{
    return vector_from_fields(k.col_labels, {{degree, f}});
}

bool kernel_spans(const KernelBasis& k, unsigned degree, const std::vector<PolynomialVectorField>& fields)
{
    std::vector<RationalVector> expected;
    for (const auto& f : fields)
        expected.push_back(as_vector(k, degree, f));
    return same_span(k.vectors, expected);
}

bool window_solution_holds(const TruncatedFactor& f, const WindowSystem& w, const RationalVector& v)
{
    auto fields = fields_from_vector(w.unknowns, v);
    const unsigned lo = w.base_degree, hi = w.base_degree + w.depth;
    auto term = [&](unsigned k) { return fields.count(k) ? fields.at(k) : PolynomialVectorField(k); };
    for (unsigned m = lo; m <= hi; ++m) {
        auto residual = curl(term(m));
        if (m >= lo + 1 && f.f0() != 0)
            residual -= f.f0() * term(m - 1);
        for (const auto& [j, fj] : f.components())
            if (m >= lo + 1 + j)
                residual -= scale_mul(fj, term(m - 1 - j));
        if (!residual.is_zero() || !div(term(m)).is_zero())
            return false;
        HomogeneousPolynomial fi(m + 1);
        for (const auto& [j, fj] : f.components())
            if (m + 2 >= lo + j)
                fi += dot(grad(fj), term(m + 2 - j));
        if (!fi.is_zero())
            return false;
    }
    return true;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + std::to_string(v[k]);
    return out;
}

// ---- checks ----------------------------------------------------------------

Outcome check_degree0(const SigmaTriple& s)
{
    const auto dim = kernel_single(0, s).dimension();
    return {dim == 0, "kernel dimension at degree 0: " + std::to_string(dim)};
}

Outcome check_same_sign(const SigmaTriple& s)
{
    std::vector<std::size_t> dims;
    for (unsigned i = 1; i <= 8; ++i)
        dims.push_back(kernel_single(i, s).dimension());
    const bool all_zero = std::all_of(dims.begin(), dims.end(), [](auto d) { return d == 0; });
    const auto c = classify_spectrum(s);
    return {all_zero && c.same_sign && c.risky_degrees.empty(), "sigma " + to_string(s) + ", dims " + join(dims)};
}

Outcome check_classification()
{
    const auto a = classify_spectrum(sigma(1, 2, 3));
    const auto b = classify_spectrum(sigma(1, 1, -3));
    const auto c = classify_spectrum(sigma(1, 1, -2));
    const auto d = classify_spectrum(sigma(1, -1, 5));
    const bool ok = a.same_sign && a.risky_degrees.empty() && b.resonant_pair_degree == 3u &&
                    b.risky_degrees == std::set<unsigned>{3} && c.trace_zero && c.pair_ratio == Rational(2) &&
                    !c.resonant_pair_degree && c.risky_degrees == std::set<unsigned>{2} && d.plus_minus_pair &&
                    d.risky_degrees == std::set<unsigned>{1};
    return {ok, "(1,2,3) (1,1,-3) (1,1,-2) (1,-1,5)"};
}

Outcome check_resonant_pairs()
{
    std::vector<std::size_t> dims;
    bool ok = true;
    for (unsigned i = 3; i <= 8; ++i) {
        const auto k = kernel_single(i, sigma(1, 1, -static_cast<int>(i)));
        dims.push_back(k.dimension());
        ok = ok && k.dimension() == 2 && kernel_substitutes(k, i, sigma(1, 1, -static_cast<int>(i))) &&
             kernel_spans(k, i, {lifted_field(i, HarmonicBranch::real), lifted_field(i, HarmonicBranch::imaginary)});
    }
    const auto off = kernel_single(4, sigma(1, 1, -3)).dimension();
    return {ok && off == 0, "dims at (1,1,-i), i=3..8: " + join(dims) + "; degree 4 at (1,1,-3): " +
                                std::to_string(off)};
}

Outcome check_derived_table()
{
    const auto x = HomogeneousPolynomial::variable(Axis::x);
    const auto y = HomogeneousPolynomial::variable(Axis::y);
    const auto k1 = kernel_single(1, sigma(1, -1, 5));
    const auto k2 = kernel_single(2, sigma(1, 2, -3));
    const auto k3 = kernel_single(2, sigma(1, 1, -2));
    const auto k4 = kernel_single(4, sigma(1, 1, -3));
    const auto grad_xyz = grad(mono(1, 1, 1));
    const auto grad_pz = grad(mono(2, 0, 1) - mono(0, 2, 1));
    const bool substituted = kernel_substitutes(k1, 1, sigma(1, -1, 5)) && kernel_substitutes(k2, 2, sigma(1, 2, -3)) &&
                             kernel_substitutes(k3, 2, sigma(1, 1, -2));
    const bool ok = substituted && k1.dimension() == 1 && kernel_spans(k1, 1, {field(y, x, zero(1))}) && k2.dimension() == 1 &&
                    kernel_spans(k2, 2, {grad_xyz}) && k3.dimension() == 2 &&
                    kernel_spans(k3, 2, {grad_xyz, grad_pz}) && k4.dimension() == 0;
    return {ok, "dims " + join({k1.dimension(), k2.dimension(), k3.dimension(), k4.dimension()})};
}

Outcome check_f0_zero_sweep()
{
    std::vector<std::size_t> proj, shifted;
    for (unsigned i = 3; i <= 6; ++i) {
        const int n = static_cast<int>(i);
        proj.push_back(window_kernel(TruncatedFactor(0, {{2, sigma(1, 1, -n).quadric()}}), i, 3).projection_dim);
        const auto w = window_kernel(TruncatedFactor(0, {{2, sigma(1, 1, -n - 3).quadric()}}), i, 3);
        shifted.push_back(block_projection_dim(w.basis, i + 3));
        proj.back() += w.projection_dim;
    }
    const bool ok = std::all_of(proj.begin(), proj.end(), [](auto d) { return d == 0; }) &&
                    std::all_of(shifted.begin(), shifted.end(), [](auto d) { return d == 2; });
    return {ok, "X_i projections " + join(proj) + "; X_{i+3} blocks at (1,1,-(i+3)) " + join(shifted)};
}

Outcome check_f0_nonzero_sweep()
{
    std::vector<std::size_t> proj;
    for (unsigned i = 3; i <= 6; ++i)
        proj.push_back(
            window_kernel(TruncatedFactor(1, {{2, sigma(1, 1, -static_cast<int>(i)).quadric()}}), i, 1).projection_dim);
    for (int beta : {1, 2, 5})
        proj.push_back(window_kernel(TruncatedFactor(1, {{2, sigma(1, -1, beta).quadric()}}), 1, 1).projection_dim);
    for (const auto& s : {sigma(1, 1, -2), sigma(1, 2, -3)})
        proj.push_back(window_kernel(TruncatedFactor(1, {{2, s.quadric()}}), 2, 1).projection_dim);
    const bool ok = std::all_of(proj.begin(), proj.end(), [](auto d) { return d == 0; });
    return {ok, "projections (i=3..6, then i=1 beta=1,2,5, then i=2) " + join(proj)};
}

Outcome check_lambda()
{
    const std::vector<std::pair<int, int>> lambdas{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}};
    bool ok = true;
    std::size_t infeasible = 0, total = 0;
    for (unsigned i = 3; i <= 6; ++i) {
        const TruncatedFactor f(0, {{2, sigma(1, 1, -static_cast<int>(i)).quadric()}});
        const auto w = assemble_window(f, i, 3);
        ok = ok && window_admits_base(w, PolynomialVectorField(i));
        for (const auto& [l1, l2] : lambdas) {
            const auto base = Rational(l1) * lifted_field(i, HarmonicBranch::real) +
                              Rational(l2) * lifted_field(i, HarmonicBranch::imaginary);
            ++total;
            if (!window_admits_base(w, base))
                ++infeasible;
        }
    }
    ok = ok && infeasible == total;
    return {ok, std::to_string(infeasible) + "/" + std::to_string(total) + " nonzero (lambda1, lambda2) infeasible"};
}

TruncatedFactor cubic_factor(const SigmaTriple& s)
{
    return TruncatedFactor(1, {{2, s.quadric()}, {3, mono(1, 1, 1, 2)}});
}

Outcome check_cubic_counterexample(const SigmaTriple& s)
{
    const auto f = cubic_factor(s);
    const auto w = assemble_window(f, 1, 1);
    const auto k = solve_window(w);

    const auto x1 = field(-mono(0, 0, 1), zero(1), -mono(1, 0, 0));
    const auto x2 = field(mono(1, 1, 0), zero(2), -mono(0, 1, 1));
    const auto pair = vector_from_fields(w.unknowns, {{1, x1}, {2, x2}});
    const bool pair_in_kernel = span_contains(k.basis.vectors, {pair}) && window_solution_holds(f, w, pair);
    bool substitution = true;
    for (const auto& v : k.basis.vectors)
        substitution = substitution && window_solution_holds(f, w, v);

    const bool inconclusive = analyze(f).verdict == Verdict::ObstructionInconclusive;

    // The listed basis element (z, 0, y) is not curl-free; (0, z, y) is the kernel element.
    const bool listed_not_curl_free = !curl(field(mono(0, 0, 1), zero(1), mono(0, 1, 0))).is_zero();
    const auto single = kernel_single(1, s);
    const bool single_basis =
        kernel_spans(single, 1, {field(mono(0, 0, 1), zero(1), mono(1, 0, 0)), field(zero(1), mono(0, 0, 1), mono(0, 1, 0))});

    std::ostringstream d;
    d << "window dim " << k.basis.dimension() << ", projection " << k.projection_dim << ", pair "
      << (pair_in_kernel ? "found" : "MISSING") << ", verdict " << (inconclusive ? "ObstructionInconclusive" : "TrivialOnly")
      << ", degree-1 kernel " << (single_basis ? "{(z,0,x),(0,z,y)}" : "UNEXPECTED");
    return {pair_in_kernel && substitution && k.projection_dim >= 1 && inconclusive && listed_not_curl_free &&
                single_basis,
            d.str()};
}

Outcome check_bessel()
{
    const auto r = verify_beltrami_cylindrical(30);
    return {r.all_ok(), std::string("order 30: recurrence ") + (r.recurrence_ok ? "ok" : "FAIL") + ", bessel " +
                            (r.bessel_match_ok ? "ok" : "FAIL") + ", cylindrical " + (r.cylindrical_ok ? "ok" : "FAIL") +
                            ", cartesian " + (r.cartesian_ok ? "ok" : "FAIL")};
}

Outcome check_quartic_cascade(const SigmaTriple& s)
{
    const auto r2 = mono(2, 0, 0) + mono(0, 2, 0) + mono(0, 0, 2);
    const TruncatedFactor f(0, {{2, s.quadric()}, {4, r2 * r2}, {6, mono(2, 2, 2)}});
    const auto report = analyze(f);
    std::vector<std::size_t> risky;
    for (const auto& d : report.risky)
        risky.push_back(d.degree);
    return {report.verdict == Verdict::TrivialOnly && risky == std::vector<std::size_t>{3},
            "sigma " + to_string(s) + ", risky {" + join(risky) + "}, verdict " + to_string(report.verdict)};
}

Outcome check_lifted()
{
    const auto results = verify_lifted_fields(1, 10);
    std::vector<std::size_t> bad;
    for (const auto& r : results)
        if (!r.ok())
            bad.push_back(r.degree);
    return {bad.empty(), bad.empty() ? "degrees 1..10" : "failing degrees " + join(bad)};
}

const std::vector<CheckSpec>& registry()
{
    static const std::vector<CheckSpec> checks{
        {"golden_degree1_rows", sigma(2, 3, 5),
         [](const SigmaTriple* s) { return compare_golden(1, golden_degree1(), *s); }},
        {"golden_degree2_rows", sigma(2, 3, 5),
         [](const SigmaTriple* s) { return compare_golden(2, golden_degree2(), *s); }},
        {"degree0_forced_zero", sigma(1, 2, 3), [](const SigmaTriple* s) { return check_degree0(*s); }},
        {"same_sign_trivial", sigma(1, 2, 3), [](const SigmaTriple* s) { return check_same_sign(*s); }},
        {"classification_examples", std::nullopt, [](const SigmaTriple*) { return check_classification(); }},
        {"resonant_pair_kernels", std::nullopt, [](const SigmaTriple*) { return check_resonant_pairs(); }},
        {"low_degree_kernel_table", std::nullopt, [](const SigmaTriple*) { return check_derived_table(); }},
        {"lifted_fields", std::nullopt, [](const SigmaTriple*) { return check_lifted(); }},
        {"window_f0_zero_sweep", std::nullopt, [](const SigmaTriple*) { return check_f0_zero_sweep(); }},
        {"window_f0_nonzero_sweep", std::nullopt, [](const SigmaTriple*) { return check_f0_nonzero_sweep(); }},
        {"lambda_infeasible", std::nullopt, [](const SigmaTriple*) { return check_lambda(); }},
        {"cubic_counterexample", sigma(1, 1, -1), [](const SigmaTriple* s) { return check_cubic_counterexample(*s); }},
        {"bessel_series", std::nullopt, [](const SigmaTriple*) { return check_bessel(); }},
        {"quartic_cascade", sigma(1, 1, -3), [](const SigmaTriple* s) { return check_quartic_cascade(*s); }},
    };
    return checks;
}

const CheckSpec* find_check(const std::string& name)
{
    for (const auto& c : registry())
        if (c.name == name)
            return &c;
    return nullptr;
}

CheckResult run_one(const CheckSpec& spec, const SuiteConfig& config)
{
    std::optional<SigmaTriple> s = spec.default_sigma;
    if (auto it = config.sigma.find(spec.name); it != config.sigma.end())
        s = it->second;
    try {
        auto [ok, detail] = spec.run(s ? &*s : nullptr);
        return {spec.name, ok, std::move(detail)};
    } catch (const std::exception& e) {
        return {spec.name, false, std::string("exception: ") + e.what()};
    }
}

} // namespace

bool LiftedFieldCheck::ok() const
{
    return planar_harmonic && curl_free && divergence_free && first_integral && (degree < 3 || spans_kernel);
}

std::vector<LiftedFieldCheck> verify_lifted_fields(unsigned from, unsigned to)
{
    if (from == 0)
        throw std::invalid_argument("verify_lifted_fields: degrees start at 1");
    std::vector<LiftedFieldCheck> out;
    for (unsigned i = from; i <= to; ++i) {
        LiftedFieldCheck r;
        r.degree = i;
        const auto pair = planar_harmonics(i);
        r.planar_harmonic = true;
        for (const auto* p : {&pair.re_part, &pair.im_part}) {
            r.planar_harmonic = r.planar_harmonic && laplacian(*p).is_zero();
            for (const auto& [m, c] : p->terms())
                r.planar_harmonic = r.planar_harmonic && m[Axis::z] == 0;
        }
        const auto l1 = lifted_field(i, HarmonicBranch::real);
        const auto l2 = lifted_field(i, HarmonicBranch::imaginary);
        r.curl_free = curl(l1).is_zero() && curl(l2).is_zero();
        r.divergence_free = div(l1).is_zero() && div(l2).is_zero();
        const auto s = sigma(1, 1, -static_cast<int>(i));
        const auto g = grad(s.quadric());
        r.first_integral = dot(g, l1).is_zero() && dot(g, l2).is_zero();
        if (i >= 3) {
            const auto k = kernel_single(i, s);
            r.spans_kernel = k.dimension() == 2 && kernel_spans(k, i, {l1, l2});
        }
        out.push_back(r);
    }
    return out;
}

std::vector<std::string> suite_check_names()
{
    std::vector<std::string> names;
    for (const auto& c : registry())
        names.push_back(c.name);
    return names;
}

std::optional<SigmaTriple> suite_default_sigma(const std::string& check)
{
    const auto* c = find_check(check);
    if (!c)
        throw std::invalid_argument("unknown check '" + check + "'");
    return c->default_sigma;
}

SuiteConfig suite_config_from_json(const nlohmann::json& j)
{
    SuiteConfig config;
    if (!j.is_object())
        throw std::invalid_argument("suite config must be a JSON object");
    if (j.contains("parallel")) {
        if (!j.at("parallel").is_boolean())
            throw std::invalid_argument("suite config: 'parallel' must be a boolean");
        config.parallel = j.at("parallel").get<bool>();
    }
    if (j.contains("sigma")) {
        if (!j.at("sigma").is_object())
            throw std::invalid_argument("suite config: 'sigma' must be an object");
        for (const auto& [name, value] : j.at("sigma").items()) {
            if (!suite_default_sigma(name))
                throw std::invalid_argument("check '" + name + "' takes no sigma");
            if (!value.is_string())
                throw std::invalid_argument("suite config: sigma for '" + name + "' must be a string");
            config.sigma.insert_or_assign(name, SigmaTriple::parse(value.get<std::string>()));
        }
    }
    return config;
}

std::vector<CheckResult> run_paper_suite(const SuiteConfig& config)
{
    const auto& checks = registry();
    std::vector<CheckResult> results;
    if (!config.parallel) {
        for (const auto& c : checks)
            results.push_back(run_one(c, config));
        return results;
    }
    std::vector<std::future<CheckResult>> pending;
    for (const auto& c : checks)
        pending.push_back(std::async(std::launch::async, [&c, &config] { return run_one(c, config); }));
    for (auto& p : pending)
        results.push_back(p.get());
    return results;
}

} // namespace beltrami
