#include "beltrami/commands.hpp"

#include "beltrami/cascade.hpp"
#include "beltrami/json_io.hpp"
#include "beltrami/obstruction.hpp"
#include "beltrami/series.hpp"
#include "beltrami/verification_suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace beltrami {

namespace {

using nlohmann::json;

struct Outcome {
    json inputs;
    json results;
    std::string text; // human-readable summary
    int code = exit_ok;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream outf(path);
    if (!outf)
        throw std::invalid_argument("cannot write " + path);
    outf << content;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string field_text(const PolynomialVectorField& v)
{
    auto poly = [](const HomogeneousPolynomial& p) {
        if (p.is_zero())
            return std::string("0");
        std::string s;
        for (const auto& [m, c] : p.terms()) {
            if (!s.empty())
                s += " + ";
            s += to_string(c) + "*x^" + std::to_string(m[Axis::x]) + "*y^" + std::to_string(m[Axis::y]) + "*z^" +
                 std::to_string(m[Axis::z]);
        }
        return s;
    };
    return "(" + poly(v.x()) + ", " + poly(v.y()) + ", " + poly(v.z()) + ")";
}

Outcome cmd_classify(const std::string& sigma_text)
{
    const auto s = SigmaTriple::parse(sigma_text);
    const auto c = classify_spectrum(s);
    Outcome o{{{"sigma", json_io::to_json(s)}}, json_io::to_json(c), {}, exit_ok};
    std::ostringstream t;
    t << "sigma " << to_string(s) << "\n"
      << "same sign: " << yes_no(c.same_sign) << "\n"
      << "plus/minus pair: " << yes_no(c.plus_minus_pair) << "\n"
      << "trace zero: " << yes_no(c.trace_zero) << "\n"
      << "risky degrees:";
    for (auto d : c.risky_degrees)
        t << ' ' << d;
    t << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_kernel(unsigned degree, const std::string& sigma_text, unsigned max_degree)
{
    const auto s = SigmaTriple::parse(sigma_text);
    if (degree > max_degree)
        throw DegreeCapExceeded("degree " + std::to_string(degree) + " is above the cap " + std::to_string(max_degree));
    const auto m = assemble_single(degree, s);
    const auto k = kernel_basis(m);
    json results = json_io::to_json(k);
    results["equations"] = m.rows();
    results["unknowns"] = m.cols();
    Outcome o{{{"degree", degree}, {"sigma", json_io::to_json(s)}, {"max_degree", max_degree}}, results, {}, exit_ok};
    std::ostringstream t;
    t << "degree " << degree << ", sigma " << to_string(s) << ": " << m.rows() << " equations, " << m.cols()
      << " unknowns, kernel dimension " << k.dimension() << "\n";
    for (const auto& v : k.vectors)
        for (const auto& [d, f] : fields_from_vector(k.col_labels, v))
            t << "  " << field_text(f) << "\n";
    o.text = t.str();
    return o;
}

struct CascadeArgs {
    std::string factor_path;
    unsigned depth_zero = 3;
    unsigned depth_nonzero = 1;
    std::string eps;
    std::string report_path;
    unsigned max_degree = default_degree_cap;
};

Outcome cmd_cascade(const CascadeArgs& a)
{
    const auto f = json_io::factor_from_json(read_json_file(a.factor_path));
    CascadeOptions options;
    options.depth_f0_zero = a.depth_zero;
    options.depth_f0_nonzero = a.depth_nonzero;
    options.max_degree = a.max_degree;
    if (!a.eps.empty())
        options.epsilon = parse_rational(a.eps);
    const auto report = analyze(f, options);

    json inputs{{"factor_file", a.factor_path},
                {"factor", json_io::to_json(f)},
                {"depth_zero", a.depth_zero},
                {"depth_nonzero", a.depth_nonzero},
                {"max_degree", a.max_degree},
                {"eps", options.epsilon ? json(to_string(*options.epsilon)) : json(nullptr)}};
    Outcome o{inputs, json_io::to_json(report), {}, exit_ok};
    if (report.verdict == Verdict::ObstructionInconclusive)
        o.code = exit_check_failed;
    if (!a.report_path.empty())
        write_file(a.report_path, o.results.dump(2) + "\n");

    std::ostringstream t;
    t << "sigma " << to_string(report.sigma) << "\n";
    for (const auto& r : report.risky)
        t << "degree " << r.degree << " (depth " << r.depth << "): window kernel " << r.window_kernel_dim
          << ", projection onto X_" << r.degree << " " << r.projection_dim << "\n";
    if (report.risky.empty())
        t << "no risky degrees\n";
    t << "verdict " << to_string(report.verdict) << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_verify_harmonic(unsigned from, unsigned to)
{
    const auto results = verify_lifted_fields(from, to);
    json rows = json::array();
    std::ostringstream t;
    bool all = true;
    for (const auto& r : results) {
        rows.push_back({{"degree", r.degree},
                        {"planar_harmonic", r.planar_harmonic},
                        {"curl_free", r.curl_free},
                        {"divergence_free", r.divergence_free},
                        {"first_integral", r.first_integral},
                        {"spans_kernel", r.degree >= 3 ? json(r.spans_kernel) : json(nullptr)},
                        {"ok", r.ok()}});
        t << "degree " << r.degree << ": " << (r.ok() ? "ok" : "FAIL") << "\n";
        all = all && r.ok();
    }
    return {{{"from", from}, {"to", to}}, {{"degrees", rows}, {"all_ok", all}}, t.str(), all ? exit_ok : exit_check_failed};
}

Outcome cmd_verify_bessel(unsigned order)
{
    const auto r = verify_beltrami_cylindrical(order);
    std::ostringstream t;
    t << "order " << order << "\n"
      << "recurrence: " << (r.recurrence_ok ? "ok" : "FAIL") << "\n"
      << "bessel expansion: " << (r.bessel_match_ok ? "ok" : "FAIL") << "\n"
      << "cylindrical equations: " << (r.cylindrical_ok ? "ok" : "FAIL") << "\n"
      << "cartesian lift: " << (r.cartesian_ok ? "ok" : "FAIL") << "\n"
      << "first integral: " << (r.first_integral_ok ? "ok" : "FAIL") << "\n"
      << "critical z-axis: " << (r.critical_axis_ok ? "ok" : "FAIL") << "\n";
    return {{{"order", order}}, json_io::to_json(r), t.str(), r.all_ok() ? exit_ok : exit_check_failed};
}

Outcome cmd_verify_suite(const std::string& config_path, bool serial)
{
    SuiteConfig config = config_path.empty() ? SuiteConfig{} : suite_config_from_json(read_json_file(config_path));
    if (serial)
        config.parallel = false;
    const auto results = run_paper_suite(config);

    json checks = json::array();
    std::ostringstream t;
    std::size_t failed = 0;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        t << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        failed += r.passed ? 0 : 1;
    }
    json overrides = json::object();
    for (const auto& [name, s] : config.sigma)
        overrides[name] = json_io::to_json(s);
    t << results.size() - failed << "/" << results.size() << " checks passed\n";
    return {{{"config", config_path.empty() ? json(nullptr) : json(config_path)}, {"sigma_overrides", overrides}},
            {{"checks", checks}, {"passed", results.size() - failed}, {"total", results.size()}},
            t.str(),
            failed ? exit_check_failed : exit_ok};
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact obstruction analysis for Beltrami fields curl X = f X, div X = 0", "beltrami"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::string out_path;
    app.add_flag("--json", as_json, "Print the run report as JSON");
    app.add_option("--out", out_path, "Also write the JSON run report to this file");

    std::string sigma_text;
    auto* classify = app.add_subcommand("classify", "Classify a Hessian spectrum");
    classify->add_option("--sigma", sigma_text, "s1,s2,s3 (rationals)")->required();

    unsigned degree = 0;
    unsigned max_degree = default_degree_cap;
    auto* kernel = app.add_subcommand("kernel", "Kernel of the single-degree system");
    kernel->add_option("-i,--degree", degree, "Degree of X_i")->required();
    kernel->add_option("--sigma", sigma_text, "s1,s2,s3 (rationals)")->required();
    kernel->add_option("--max-degree", max_degree, "Degree cap")->capture_default_str();

    CascadeArgs cascade_args;
    auto* cascade = app.add_subcommand("cascade", "Window analysis of a truncated factor");
    cascade->add_option("--factor", cascade_args.factor_path, "Factor JSON file")->required();
    cascade->add_option("--depth-zero", cascade_args.depth_zero, "Window depth when f0 = 0")->capture_default_str();
    cascade->add_option("--depth-nonzero", cascade_args.depth_nonzero, "Window depth when f0 != 0")
        ->capture_default_str();
    cascade->add_option("--eps", cascade_args.eps, "Scale of the f3 coupling (p/q)");
    cascade->add_option("--report", cascade_args.report_path, "Write the cascade report JSON here");
    cascade->add_option("--max-degree", cascade_args.max_degree, "Degree cap")->capture_default_str();

    unsigned from = 1, to = 10;
    auto* harmonic = app.add_subcommand("verify-harmonic", "Check the lifted harmonic fields");
    harmonic->add_option("--from", from, "First degree")->capture_default_str();
    harmonic->add_option("--to", to, "Last degree")->capture_default_str();

    unsigned order = 30;
    auto* bessel = app.add_subcommand("verify-bessel", "Check the cylindrical series example");
    bessel->add_option("--order", order, "Truncation order")->capture_default_str();

    std::string config_path;
    bool serial = false;
    auto* suite = app.add_subcommand("verify-paper-suite", "Run every example check");
    suite->add_option("--config", config_path, "JSON config with per-check sigma overrides");
    suite->add_flag("--serial", serial, "Run checks one after another");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_bad_input;
    }

    std::string command;
    Outcome o;
    try {
        if (*classify) {
            command = "classify";
            o = cmd_classify(sigma_text);
        } else if (*kernel) {
            command = "kernel";
            o = cmd_kernel(degree, sigma_text, max_degree);
        } else if (*cascade) {
            command = "cascade";
            o = cmd_cascade(cascade_args);
        } else if (*harmonic) {
            command = "verify-harmonic";
            o = cmd_verify_harmonic(from, to);
        } else if (*bessel) {
            command = "verify-bessel";
            o = cmd_verify_bessel(order);
        } else {
            command = "verify-paper-suite";
            o = cmd_verify_suite(config_path, serial);
        }

        const json report{{"command", command},
                          {"inputs", o.inputs},
                          {"results", o.results},
                          {"artifact_version", artifact_version}};
        if (!out_path.empty())
            write_file(out_path, report.dump(2) + "\n");
        if (as_json)
            out << report.dump(2) << "\n";
        else
            out << o.text;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    }

    if (command == "verify-paper-suite" && o.code != exit_ok)
        for (const auto& c : o.results["checks"])
            if (!c["passed"].get<bool>())
                err << "failed check: " << c["name"].get<std::string>() << "\n";
    return o.code;
}

} // namespace beltrami
