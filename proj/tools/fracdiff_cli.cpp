// Command-line driver: coefficient dumps, stability bound, scenario runs
// and run comparison for the fractional diffusion solver.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/scenario.hpp"
#include "fracdiff/schemes.hpp"
#include "fracdiff/validation.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fracdiff::IoError("cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_coeffs(double alpha, double theta, int kmax, int N, bool limit_table) {
    std::printf("k,w\n");
    for (int k = -kmax; k <= kmax; ++k) {
        const double w = limit_table
                             ? fracdiff::riesz_feller_weight_alpha1_limit(k)
                             : fracdiff::riesz_feller_weight(k, alpha, theta);
        std::printf("%d,%.17g\n", k, w);
    }
    if (N > 0 && !limit_table) {
        std::printf("\ni,sL,sR\n");
        for (int i = 1; i <= N - 1; ++i) {
            const auto [sl, sr] = fracdiff::tail_weights(i, N, alpha, theta);
            std::printf("%d,%.17g,%.17g\n", i, sl, sr);
        }
    }
    return 0;
}

int cmd_stability(double alpha, double theta, double K, double h) {
    const fracdiff::FractionalParams params{alpha, theta, K};
    std::printf("%g\n", fracdiff::max_stable_dt(params, h));
    return 0;
}

int cmd_run(const std::string& file, const std::string& out_dir, bool quiet) {
    const auto scenario = fracdiff::parse_scenario(read_file(file));
    const auto out = fracdiff::run_scenario(scenario, out_dir);
    if (!quiet) {
        std::printf("dt = %.17g (dt_max = %.17g), %zu snapshot(s)\n",
                    out.result.dt, out.result.dt_max, out.snapshot_files.size());
        for (const auto& w : out.result.warnings)
            std::printf("warning: %s\n", w.c_str());
        std::printf("metadata: %s\n", out.metadata_file.c_str());
    }
    return 0;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, bool quiet) {
    const auto sa = fracdiff::parse_scenario(read_file(file_a));
    const auto sb = fracdiff::parse_scenario(read_file(file_b));
    if (sa.grid.N != sb.grid.N)
        throw fracdiff::ConfigError("compare: scenarios use different grid sizes");
    if (sa.snapshots.size() != sb.snapshots.size())
        throw fracdiff::ConfigError("compare: scenarios request different snapshot counts");

    const auto ra = fracdiff::run_simulation(fracdiff::to_run_request(sa));
    const auto rb = fracdiff::run_simulation(fracdiff::to_run_request(sb));
    if (!quiet) std::printf("snapshot,t_a,t_b,l2,max\n");
    for (std::size_t i = 0; i < ra.snapshots.size(); ++i) {
        const auto d = fracdiff::compare_fields(ra.snapshots[i].values,
                                                rb.snapshots[i].values, sa.grid.h);
        std::printf("%zu,%.17g,%.17g,%.17g,%.17g\n", i, ra.snapshots[i].time,
                    rb.snapshots[i].time, d.l2, d.max);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D fractional anomalous-diffusion solver"};
    app.require_subcommand(1);

    bool quiet = false;
    long seed = 0;
    app.add_flag("--quiet", quiet, "suppress progress output");
    app.add_option("--seed", seed, "seed for randomized tests (unused by the solver)");

    double alpha = 2.0;
    double theta = 0.0;
    double K = 1.0;
    double h = 0.01;
    int kmax = 10;
    int N = 0;
    bool limit_table = false;
    auto* coeffs = app.add_subcommand("coeffs", "dump stencil weights and tail sums as CSV");
    coeffs->fallthrough();
    coeffs->add_option("--alpha", alpha, "derivative order in (1,2]")->required();
    coeffs->add_option("--theta", theta, "skewness");
    coeffs->add_option("--kmax", kmax, "offset range |k| <= kmax");
    coeffs->add_option("--N", N, "also dump tail sums sL_i, sR_i for this grid size");
    coeffs->add_flag("--limit-alpha1", limit_table,
                     "dump the alpha->1+ limit table instead of the generic weights");

    double st_alpha = 2.0;
    double st_theta = 0.0;
    auto* stability = app.add_subcommand("stability", "print the explicit step bound dt_max");
    stability->fallthrough();
    stability->add_option("--alpha", st_alpha)->required();
    stability->add_option("--theta", st_theta);
    stability->add_option("--K", K, "diffusion coefficient");
    stability->add_option("--dx", h, "grid step")->required();

    std::string scenario_file;
    std::string out_dir;
    auto* run = app.add_subcommand("run", "execute a scenario file");
    run->fallthrough();
    run->add_option("scenario", scenario_file, "scenario file")->required();
    run->add_option("--out", out_dir, "output directory (overrides 'output' key)");

    std::string file_a;
    std::string file_b;
    auto* compare = app.add_subcommand("compare", "run two scenarios, report difference norms");
    compare->fallthrough();
    compare->add_option("scenario_a", file_a)->required();
    compare->add_option("scenario_b", file_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(alpha, theta, kmax, N, limit_table);
        if (stability->parsed()) return cmd_stability(st_alpha, st_theta, K, h);
        if (run->parsed()) return cmd_run(scenario_file, out_dir, quiet);
        if (compare->parsed()) return cmd_compare(file_a, file_b, quiet);
    } catch (const fracdiff::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
