#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcadual/constructions.hpp"
#include "lcadual/document.hpp"

namespace lcadual {

/// Outcome of one CLI command: the report for standard output, diagnostics
/// (timings) for standard error, and the process exit code.
struct RunResult {
    int exit_code = 0;
    std::string output;
    std::string diagnostics;
};

Field parse_field_name(const std::string& name);

nlohmann::ordered_json configuration_to_json(const FiniteConfiguration& c);
FiniteConfiguration configuration_from_json(const Field& field, const GroupPtr& group,
                                            std::size_t n, const nlohmann::json& j);

nlohmann::ordered_json witness_to_json(const GroupPtr& group, const Witness& w);
Witness witness_from_json(const Field& field, const GroupPtr& group, std::size_t n,
                          const nlohmann::json& j);

nlohmann::ordered_json verdict_to_json(const GroupPtr& group, const Verdict& v);

/// Prints the document with the matrix replaced by its adjoint.
RunResult run_adjoint(const AutomatonDocument& doc);

/// Applies the automaton `steps` times to the named configuration (default:
/// the document's "c", or its only configuration).
RunResult run_evolve(const AutomatonDocument& doc, unsigned steps,
                     const std::string& config_name = "");

/// Evaluates the pairing of the document's "omega" and "c" configurations.
RunResult run_pair(const AutomatonDocument& doc);

struct AnalyzeOptions {
    std::optional<unsigned> radius;
    std::vector<Property> properties;
    std::size_t ball_cap = kDefaultBallCap;
};

/// Runs the selected property checks (flag, else document, else all four)
/// at the selected radius (flag, else document, else the group default).
RunResult run_analyze(const AutomatonDocument& doc, const AnalyzeOptions& options);

RunResult run_verify_finite(const AutomatonDocument& doc,
                            std::size_t cap = kDefaultFiniteCap);

struct DemoOptions {
    std::string field_name = "F2";
    /// Re-check the gallery entry's expected verdicts; mismatches change
    /// the exit code (2 when a Certified expectation came back Refuted,
    /// 1 for any other mismatch).
    bool self_check = false;
};

RunResult run_demo(const std::string& name, const DemoOptions& options);

}  // namespace lcadual
