#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "arcmot/deformed.hpp"
#include "arcmot/serialize.hpp"
#include "arcmot/series.hpp"

namespace arcmot {

enum class CheckMode { Exact, Modp, Both };

const char* mode_name(CheckMode m);
std::optional<CheckMode> parse_mode(std::string_view s);

struct RunConfig {
    long max_order = 10;
    CheckMode mode = CheckMode::Exact;
    std::uint64_t seed = 1;
    LambdaContext lambda = LambdaContext::symbolic();
    Format format = Format::Json;
    std::string out_path;
    /// Record wall-clock durations per cell. Off by default so that reports
    /// are byte-identical across runs.
    bool timings = false;
    /// Sample points per randomized comparison.
    int trials = 3;
};

/// What a cell produces: two sides compared per the run mode, or a
/// structural verdict that has no randomized counterpart.
using Outcome = std::variant<Sides, bool>;

struct Cell {
    std::string label;
    std::function<Outcome()> run;
};

struct Identity {
    std::string name;
    std::string note;
    std::vector<Cell> cells;
};

struct CellResult {
    std::string cell;
    bool pass = false;
    std::string mode;
    long millis = 0;
    std::optional<bool> exact;
    std::optional<bool> modp;
    std::string error;
};

struct IdentityResult {
    std::string name;
    std::string note;
    std::vector<CellResult> cells;
    bool pass() const;
};

struct FailureDetail {
    std::string identity;
    std::string cell;
    std::string reason;
    std::optional<Sides> sides;
};

struct VerificationReport {
    std::string suite;
    RunConfig config;
    std::vector<IdentityResult> identities;
    std::optional<FailureDetail> first_failure;

    bool pass() const;
    std::size_t cell_count() const;
    std::size_t failed_count() const;
    nlohmann::ordered_json to_json() const;
    std::string render(Format f) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Shared caches for one verification run; confined to one thread.
struct Workspace {
    ClassicalIntegrals classical;
    DeformedIntegrals deformed;
    SeriesChecks series{classical, deformed};
};

/// The identities of a suite at max order n. Cells are lazy.
std::vector<Identity> build_suite(std::string_view suite, Workspace& ws, long n, const LambdaContext& ctx);

/// Runs one suite and returns its report; never throws for failing cells.
VerificationReport run_suite(std::string_view suite, const RunConfig& config);

/// Runs prebuilt identities under the given config.
VerificationReport run_identities(std::string suite, std::vector<Identity> identities, const RunConfig& config);

}  // namespace arcmot
