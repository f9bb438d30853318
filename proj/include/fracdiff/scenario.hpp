#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/grid.hpp"
#include "fracdiff/schemes.hpp"

namespace fracdiff {

/// Named initial-condition spec: zero | constant:v | pulse:center,width,mass
/// | gaussian:center,stddev,mass | table:path.
struct IcSpec {
    enum class Kind { Zero, Constant, Pulse, Gaussian, Table };
    Kind kind = Kind::Zero;
    double a = 0.0;  // constant value / center
    double b = 0.0;  // width / stddev
    double c = 0.0;  // mass
    std::string path;
};

/// Named boundary spec: constant:v | table:path of (t, value) pairs,
/// linearly interpolated and clamped outside the tabulated range.
struct BcSpec {
    enum class Kind { Constant, Table };
    Kind kind = Kind::Constant;
    double value = 0.0;
    std::string path;
};

struct Scenario {
    SpatialGrid grid{0.0, 1.0, 3, 1.0 / 3.0};
    FractionalParams params{2.0, 0.0, 1.0};
    SchemeConfig scheme;
    bool dt_auto = true;
    IcSpec ic;
    BcSpec bc_left;
    BcSpec bc_right;
    std::vector<double> snapshots;
    std::string output_dir;
};

/// Parses the line-oriented `key = value` scenario format ('#' comments,
/// sections implied by key prefixes). Throws ConfigError with line number
/// and key on every violation; unknown keys are errors.
Scenario parse_scenario(const std::string& text);

/// Canonical serialization; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Resolves the named specs into evaluable functions (reads table files).
InitialCondition make_initial_condition(const IcSpec& spec);
std::function<double(double)> make_boundary_condition(const BcSpec& spec);

RunRequest to_run_request(const Scenario& s);

/// Long-format CSV, header "t,x,C", one row per node, 17 significant
/// digits, '\n' endings; byte-deterministic.
void write_snapshot_csv(const FieldState& state, const SpatialGrid& grid,
                        const std::string& path);

/// JSON run metadata: parameters, resolved dt, dt_max, warnings and the
/// per-snapshot requested/actual times.
void write_run_metadata(const Scenario& s, const RunResult& result,
                        const std::vector<std::string>& snapshot_files,
                        const std::string& path);

struct RunOutput {
    RunResult result;
    std::vector<std::string> snapshot_files;
    std::string metadata_file;
};

/// Executes the scenario and writes one CSV per snapshot plus
/// metadata.json into the output directory.
RunOutput run_scenario(const Scenario& s, const std::string& out_dir);

}  // namespace fracdiff
