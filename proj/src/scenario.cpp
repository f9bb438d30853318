#include "fracdiff/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& key, const std::string& msg) {
    throw ConfigError("scenario line " + std::to_string(line) + ", key '" + key +
                      "': " + msg);
}

double parse_number(const std::string& text, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        fail(line, key, "expected a number, got '" + text + "'");
    }
}

std::vector<double> split_numbers(const std::string& text, int line,
                                  const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(line, key, "empty list element");
        out.push_back(parse_number(item, line, key));
    }
    if (out.empty()) fail(line, key, "expected at least one value");
    return out;
}

IcSpec parse_ic_spec(const std::string& text, int line) {
    IcSpec spec;
    const auto colon = text.find(':');
    const std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "zero") {
        if (!args.empty()) fail(line, "ic", "'zero' takes no arguments");
        spec.kind = IcSpec::Kind::Zero;
    } else if (name == "constant") {
        spec.kind = IcSpec::Kind::Constant;
        spec.a = parse_number(args, line, "ic");
    } else if (name == "pulse" || name == "gaussian") {
        spec.kind = name == "pulse" ? IcSpec::Kind::Pulse : IcSpec::Kind::Gaussian;
        const auto v = split_numbers(args, line, "ic");
        if (v.size() != 3) fail(line, "ic", name + " needs center,width,mass");
        spec.a = v[0];
        spec.b = v[1];
        spec.c = v[2];
        if (!(spec.b > 0.0)) fail(line, "ic", name + " width/stddev must be positive");
    } else if (name == "table") {
        spec.kind = IcSpec::Kind::Table;
        spec.path = trim(args);
        if (spec.path.empty()) fail(line, "ic", "table needs a path");
    } else {
        fail(line, "ic", "unknown initial-condition spec '" + name + "'");
    }
    return spec;
}

BcSpec parse_bc_spec(const std::string& text, int line, const std::string& key) {
    BcSpec spec;
    const auto colon = text.find(':');
    const std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "constant") {
        spec.kind = BcSpec::Kind::Constant;
        spec.value = parse_number(args, line, key);
    } else if (name == "table") {
        spec.kind = BcSpec::Kind::Table;
        spec.path = trim(args);
        if (spec.path.empty()) fail(line, key, "table needs a path");
    } else {
        fail(line, key, "unknown boundary spec '" + name + "'");
    }
    return spec;
}

std::vector<std::pair<double, double>> read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open table file '" + path + "'");
    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::stringstream ss(line);
        double a = 0.0;
        double b = 0.0;
        if (!(ss >> a >> b))
            throw ConfigError("table file '" + path + "': malformed row '" + line + "'");
        rows.emplace_back(a, b);
    }
    if (rows.empty()) throw ConfigError("table file '" + path + "' is empty");
    if (!std::is_sorted(rows.begin(), rows.end(),
                        [](const auto& x, const auto& y) { return x.first < y.first; }))
        throw ConfigError("table file '" + path + "': abscissae must be increasing");
    return rows;
}

std::function<double(double)> interpolant(std::vector<std::pair<double, double>> rows) {
    return [rows = std::move(rows)](double x) {
        if (x <= rows.front().first) return rows.front().second;
        if (x >= rows.back().first) return rows.back().second;
        const auto it = std::upper_bound(
            rows.begin(), rows.end(), x,
            [](double v, const auto& row) { return v < row.first; });
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double f = (x - lo.first) / (hi.first - lo.first);
        return lo.second + f * (hi.second - lo.second);
    };
}

std::string ic_spec_string(const IcSpec& s) {
    switch (s.kind) {
        case IcSpec::Kind::Zero:
            return "zero";
        case IcSpec::Kind::Constant:
            return "constant:" + fmt17(s.a);
        case IcSpec::Kind::Pulse:
            return "pulse:" + fmt17(s.a) + "," + fmt17(s.b) + "," + fmt17(s.c);
        case IcSpec::Kind::Gaussian:
            return "gaussian:" + fmt17(s.a) + "," + fmt17(s.b) + "," + fmt17(s.c);
        case IcSpec::Kind::Table:
            return "table:" + s.path;
    }
    return "zero";
}

std::string bc_spec_string(const BcSpec& s) {
    return s.kind == BcSpec::Kind::Constant ? "constant:" + fmt17(s.value)
                                            : "table:" + s.path;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    std::map<std::string, std::pair<std::string, int>> kv;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("scenario line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + trim(raw) + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(lineno, key, "empty key");
        if (value.empty()) fail(lineno, key, "empty value");
        if (kv.count(key)) fail(lineno, key, "duplicate key");
        kv[key] = {value, lineno};
    }

    static const std::vector<std::string> known = {
        "grid.L",       "grid.R",        "grid.N",        "params.alpha",
        "params.theta", "params.k_alpha", "scheme.sigma", "scheme.dt",
        "scheme.t_end", "ic",            "bc.left",       "bc.right",
        "snapshots",    "output"};
    for (const auto& [key, entry] : kv)
        if (std::find(known.begin(), known.end(), key) == known.end())
            fail(entry.second, key, "unknown key");

    const auto require = [&kv](const std::string& key) -> std::pair<std::string, int> {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw ConfigError("scenario: missing required key '" + key + "'");
        return it->second;
    };
    const auto number = [&](const std::string& key) {
        const auto [value, line] = require(key);
        return parse_number(value, line, key);
    };
    const auto optional_number = [&kv](const std::string& key, double fallback) {
        const auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        return parse_number(it->second.first, it->second.second, key);
    };

    Scenario s;
    {
        const double L = number("grid.L");
        const double R = number("grid.R");
        const double Nval = number("grid.N");
        const int N = static_cast<int>(Nval);
        const int line = kv.at("grid.N").second;
        if (Nval != static_cast<double>(N)) fail(line, "grid.N", "must be an integer");
        if (N < 3) fail(line, "grid.N", "must be >= 3");
        if (!(R > L)) fail(kv.at("grid.R").second, "grid.R", "must exceed grid.L");
        s.grid = SpatialGrid::make(L, R, N);
    }

    s.params.alpha = number("params.alpha");
    s.params.theta = optional_number("params.theta", 0.0);
    s.params.k_alpha = number("params.k_alpha");
    {
        const int line = kv.at("params.alpha").second;
        if (!(s.params.alpha > 1.0 && s.params.alpha <= 2.0))
            fail(line, "params.alpha", "must lie in (1, 2]");
        const double bound = std::min(s.params.alpha, 2.0 - s.params.alpha);
        if (std::abs(s.params.theta) > bound)
            fail(kv.count("params.theta") ? kv.at("params.theta").second : line,
                 "params.theta",
                 "|theta| must not exceed min(alpha, 2-alpha) = " + fmt17(bound));
        if (!(s.params.k_alpha > 0.0))
            fail(kv.at("params.k_alpha").second, "params.k_alpha", "must be positive");
    }

    s.scheme.sigma = optional_number("scheme.sigma", 1.0);
    if (!(s.scheme.sigma >= 0.0 && s.scheme.sigma <= 1.0))
        fail(kv.at("scheme.sigma").second, "scheme.sigma", "must lie in [0, 1]");
    {
        const auto it = kv.find("scheme.dt");
        if (it == kv.end() || it->second.first == "auto") {
            s.dt_auto = true;
            s.scheme.dt = 0.0;
        } else {
            s.dt_auto = false;
            s.scheme.dt = parse_number(it->second.first, it->second.second, "scheme.dt");
            if (!(s.scheme.dt > 0.0))
                fail(it->second.second, "scheme.dt", "must be positive or 'auto'");
        }
    }
    s.scheme.t_end = number("scheme.t_end");
    if (!(s.scheme.t_end > 0.0))
        fail(kv.at("scheme.t_end").second, "scheme.t_end", "must be positive");

    s.ic = parse_ic_spec(require("ic").first, require("ic").second);
    s.bc_left = parse_bc_spec(require("bc.left").first, require("bc.left").second, "bc.left");
    s.bc_right =
        parse_bc_spec(require("bc.right").first, require("bc.right").second, "bc.right");

    {
        const auto [value, line] = require("snapshots");
        s.snapshots = split_numbers(value, line, "snapshots");
        for (double t : s.snapshots)
            if (t < 0.0 || t > s.scheme.t_end)
                fail(line, "snapshots", "time " + fmt17(t) + " outside [0, t_end]");
        for (std::size_t i = 1; i < s.snapshots.size(); ++i)
            if (!(s.snapshots[i] > s.snapshots[i - 1]))
                fail(line, "snapshots", "times must be strictly increasing");
    }

    if (const auto it = kv.find("output"); it != kv.end())
        s.output_dir = it->second.first;
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "grid.L = " << fmt17(s.grid.L) << "\n";
    out << "grid.R = " << fmt17(s.grid.R) << "\n";
    out << "grid.N = " << s.grid.N << "\n";
    out << "params.alpha = " << fmt17(s.params.alpha) << "\n";
    out << "params.theta = " << fmt17(s.params.theta) << "\n";
    out << "params.k_alpha = " << fmt17(s.params.k_alpha) << "\n";
    out << "scheme.sigma = " << fmt17(s.scheme.sigma) << "\n";
    out << "scheme.dt = " << (s.dt_auto ? std::string("auto") : fmt17(s.scheme.dt))
        << "\n";
    out << "scheme.t_end = " << fmt17(s.scheme.t_end) << "\n";
    out << "ic = " << ic_spec_string(s.ic) << "\n";
    out << "bc.left = " << bc_spec_string(s.bc_left) << "\n";
    out << "bc.right = " << bc_spec_string(s.bc_right) << "\n";
    out << "snapshots = ";
    for (std::size_t i = 0; i < s.snapshots.size(); ++i)
        out << (i ? ", " : "") << fmt17(s.snapshots[i]);
    out << "\n";
    if (!s.output_dir.empty()) out << "output = " << s.output_dir << "\n";
    return out.str();
}

InitialCondition make_initial_condition(const IcSpec& spec) {
    switch (spec.kind) {
        case IcSpec::Kind::Zero:
            return [](double) { return 0.0; };
        case IcSpec::Kind::Constant:
            return [v = spec.a](double) { return v; };
        case IcSpec::Kind::Pulse: {
            // Rectangle of the given mass; nodes exactly on the edges carry
            // half the height so that the trapezoid mass stays exact when
            // the edges land on grid nodes.
            const double center = spec.a;
            const double half = 0.5 * spec.b;
            const double height = spec.c / spec.b;
            return [center, half, height](double x) {
                const double d = std::abs(x - center);
                const double tol = 1e-12 * std::max(1.0, std::abs(center) + half);
                if (d < half - tol) return height;
                if (d <= half + tol) return 0.5 * height;
                return 0.0;
            };
        }
        case IcSpec::Kind::Gaussian: {
            const double center = spec.a;
            const double sd = spec.b;
            const double mass = spec.c;
            return [center, sd, mass](double x) {
                const double z = (x - center) / sd;
                return mass * std::exp(-0.5 * z * z) /
                       (sd * std::sqrt(2.0 * 3.14159265358979323846));
            };
        }
        case IcSpec::Kind::Table:
            return interpolant(read_table_file(spec.path));
    }
    return [](double) { return 0.0; };
}

std::function<double(double)> make_boundary_condition(const BcSpec& spec) {
    if (spec.kind == BcSpec::Kind::Constant)
        return [v = spec.value](double) { return v; };
    return interpolant(read_table_file(spec.path));
}

RunRequest to_run_request(const Scenario& s) {
    RunRequest req;
    req.grid = s.grid;
    req.params = s.params;
    req.scheme = s.scheme;
    req.ic = make_initial_condition(s.ic);
    req.bc.left = make_boundary_condition(s.bc_left);
    req.bc.right = make_boundary_condition(s.bc_right);
    req.snapshot_times = s.snapshots;
    return req;
}

void write_snapshot_csv(const FieldState& state, const SpatialGrid& grid,
                        const std::string& path) {
    if (static_cast<int>(state.values.size()) != grid.N + 1)
        throw ShapeError("write_snapshot_csv: field length mismatch");
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    std::fputs("t,x,C\n", f);
    for (int i = 0; i <= grid.N; ++i)
        std::fprintf(f, "%.17g,%.17g,%.17g\n", state.time, grid.node(i),
                     state.values[static_cast<std::size_t>(i)]);
    if (std::fclose(f) != 0) throw IoError("write failure on '" + path + "'");
}

void write_run_metadata(const Scenario& s, const RunResult& result,
                        const std::vector<std::string>& snapshot_files,
                        const std::string& path) {
    nlohmann::ordered_json doc;
    doc["grid"] = {{"L", s.grid.L}, {"R", s.grid.R}, {"N", s.grid.N}, {"h", s.grid.h}};
    doc["params"] = {{"alpha", s.params.alpha},
                     {"theta", s.params.theta},
                     {"k_alpha", s.params.k_alpha}};
    doc["scheme"] = {{"sigma", s.scheme.sigma},
                     {"dt", result.dt},
                     {"dt_auto", s.dt_auto},
                     {"t_end", s.scheme.t_end}};
    doc["dt_max"] = result.dt_max;
    doc["ic"] = ic_spec_string(s.ic);
    doc["bc"] = {{"left", bc_spec_string(s.bc_left)},
                 {"right", bc_spec_string(s.bc_right)}};
    doc["warnings"] = result.warnings;
    doc["snapshots"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        doc["snapshots"].push_back(
            {{"index", i},
             {"requested_t", result.requested_times[i]},
             {"actual_t", result.snapshots[i].time},
             {"file", i < snapshot_files.size() ? snapshot_files[i] : ""}});
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("write failure on '" + path + "'");
}

RunOutput run_scenario(const Scenario& s, const std::string& out_dir) {
    const std::string dir = out_dir.empty() ? s.output_dir : out_dir;
    if (dir.empty()) throw ConfigError("run: no output directory given");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir + "'");

    RunOutput out;
    out.result = run_simulation(to_run_request(s));
    for (std::size_t i = 0; i < out.result.snapshots.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "snapshot_%03zu.csv", i);
        const std::string path = dir + "/" + name;
        write_snapshot_csv(out.result.snapshots[i], s.grid, path);
        out.snapshot_files.push_back(name);
    }
    out.metadata_file = dir + "/metadata.json";
    write_run_metadata(s, out.result, out.snapshot_files, out.metadata_file);
    return out;
}

}  // namespace fracdiff
