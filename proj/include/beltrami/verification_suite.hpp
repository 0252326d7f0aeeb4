#pragma once

#include "beltrami/obstruction.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace beltrami {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Per-check overrides. Checks that are driven by a single Hessian accept a
/// replacement sigma; the expected outcome stays fixed, so an override is a
/// way to inject a fault.
struct SuiteConfig {
    std::map<std::string, SigmaTriple> sigma;
    bool parallel = true;
};

/// {"sigma": {"<check name>": "1,1,-3", ...}, "parallel": true}
/// Throws std::invalid_argument on unknown checks or checks without a
/// sigma input.
SuiteConfig suite_config_from_json(const nlohmann::json& j);

/// Names of all checks, in report order.
std::vector<std::string> suite_check_names();

/// Default sigma of a check, if it takes one.
std::optional<SigmaTriple> suite_default_sigma(const std::string& check);

/// Runs every check. Results are in suite_check_names() order whatever
/// order they finish in.
std::vector<CheckResult> run_paper_suite(const SuiteConfig& config = {});

struct LiftedFieldCheck {
    unsigned degree = 0;
    bool planar_harmonic = false; // Re and Im parts are harmonic and free of z
    bool curl_free = false;
    bool divergence_free = false;
    bool first_integral = false;  // <grad(x^2 + y^2 - i z^2), X> = 0
    bool spans_kernel = false;    // span of both lifts == kernel_single(i, (1,1,-i)); i >= 3 only

    bool ok() const;
};

/// Lifted-field checks for degrees from..to.
std::vector<LiftedFieldCheck> verify_lifted_fields(unsigned from, unsigned to);

} // namespace beltrami
