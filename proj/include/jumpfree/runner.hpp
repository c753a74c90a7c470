#pragma once

// Batch driver behind the command-line tool. Each subcommand turns a
// RunConfig into a JSON report and an exit status:
//   0  property holds or a result was produced
//   1  usage, input or capacity error (report carries "error")
//   2  a counterexample was found (report carries "violation")

#include "jumpfree/families.hpp"
#include "jumpfree/intsets.hpp"
#include "jumpfree/subsetsum.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jumpfree {

enum class OutputFormat { Json, Csv };

struct RunConfig {
    /// gen | check-jumpfree | check-full | check-rr | search | sets | solve | experiment
    std::string command;
    std::size_t k = 2;
    std::size_t p = 2;
    UniverseSpec universe;
    FamilyKind family = FamilyKind::Max;
    GammaTriple gammas;
    Semantics semantics = Semantics::Multiset;
    SolverMethod method = SolverMethod::Dp;
    OutputFormat format = OutputFormat::Json;
    /// Serialized family, function, or multiset to use instead of generating.
    std::optional<std::string> input_path;
    /// Inline equivalent of the contents of input_path; takes precedence.
    std::optional<nlohmann::json> input;
    /// Cube elements for check-rr and sets.
    std::optional<std::vector<Nat>> cube;
    /// Member id for check-rr and sets on a family.
    std::optional<std::string> member;
    /// Multiset values for solve, as an alternative to an input file.
    std::optional<std::vector<Int>> values;
    unsigned threads = 1;
};

struct RunResult {
    int exit_code = 0;
    nlohmann::json report;
};

/// Never throws; errors become exit code 1 with an "error" entry.
RunResult run(const RunConfig &config);

/// JSON (pretty, sorted keys) or CSV: a header row and a value row holding
/// the top-level scalar fields only.
std::string format_report(const nlohmann::json &report, OutputFormat format);

/// Echo of the configuration as it appears in reports.
nlohmann::json config_to_json(const RunConfig &config);
/// Reads a config file document; missing fields keep their defaults.
RunConfig config_from_json(const nlohmann::json &j);

/// `report` without its "timings_ms" entries, for replay comparison.
nlohmann::json without_timings(nlohmann::json report);

} // namespace jumpfree
