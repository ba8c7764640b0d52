// Command-line front end over the projlmo C interface.

#include "projlmo/projlmo.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailed = 1;

struct SetDeleter {
    void operator()(plm_set* set) const { plm_set_free(set); }
};
using SetHandle = std::unique_ptr<plm_set, SetDeleter>;

struct CommandResult {
    plm_command_result raw{};
    ~CommandResult() { plm_command_result_free(&raw); }
};

int status_exit(plm_status status) {
    std::cerr << "error: " << plm_status_string(status) << ": " << plm_last_error() << "\n";
    switch (status) {
        case PLM_ERR_INPUT:
        case PLM_ERR_DIMENSION:
        case PLM_ERR_NONFINITE:
        case PLM_ERR_NULL: return kExitUsage;
        default: return kExitFailed;
    }
}

SetHandle parse_set(const std::string& spec, plm_status& status) {
    plm_set* raw = nullptr;
    status = plm_set_parse(spec.c_str(), &raw);
    return SetHandle(raw);
}

int emit(const CommandResult& result, const std::string& out_path) {
    const char* data = plm_text_data(result.raw.output);
    const std::size_t size = plm_text_size(result.raw.output);
    if (out_path.empty()) {
        std::cout.write(data, static_cast<std::streamsize>(size));
        std::cout.flush();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
        out.write(data, static_cast<std::streamsize>(size));
    }
    std::cerr << plm_text_data(result.raw.notes);
    return result.raw.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projection-based linear minimization oracles: checks, sweeps and demos"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(plm_version()));

    std::string set_spec;
    std::string out_path;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    unsigned threads = 0;
    std::vector<double> direction;
    std::string lambda_grid = "1:1e6:7";
    double lambda0 = 1.0;
    int max_doublings = 64;
    double tol_exact = 0.0;
    std::string schedule = "harmonic";
    double eps = 1.0;
    std::size_t max_iter = 10000;
    double stop_gap = 1e-10;

    const std::string set_help = "set spec 'kind key=val ...', JSON, or @file";

    auto* verify = app.add_subcommand("verify", "run the randomized invariant suites");
    verify->add_option("--set", set_spec, set_help + " (default: random instances of every family)");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    verify->add_option("--threads", threads, "worker threads (0: all cores)");
    verify->add_option("--out", out_path, "write the report here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "gap and error bound of project(-lambda x) over a lambda grid");
    sweep->add_option("--set", set_spec, set_help)->required();
    sweep->add_option("--x", direction, "direction x, comma-separated")->required()->delimiter(',');
    sweep->add_option("--lambda-grid", lambda_grid, "a:b:steps, log-spaced")->capture_default_str();
    sweep->add_option("--out", out_path, "CSV output path");

    auto* lambdastar = app.add_subcommand("lambdastar", "search for a finite exactness scale on a polytope");
    lambdastar->add_option("--set", set_spec, set_help)->required();
    lambdastar->add_option("--x", direction, "direction x, comma-separated")->required()->delimiter(',');
    lambdastar->add_option("--lambda0", lambda0, "initial lambda")->capture_default_str();
    lambdastar->add_option("--max-doublings", max_doublings, "doubling budget")->capture_default_str();
    lambdastar->add_option("--tol-exact", tol_exact, "exactness tolerance (0: scaled default)");
    lambdastar->add_option("--out", out_path, "CSV output path");

    auto* fw = app.add_subcommand("fw", "Frank-Wolfe on 0.5||z - target||^2 with the projection-based oracle");
    fw->add_option("--set", set_spec, set_help)->required();
    fw->add_option("--target", direction, "target, comma-separated")->required()->delimiter(',');
    fw->add_option("--eps-schedule", schedule, "harmonic (eps/(k+2)), constant or exact")
        ->capture_default_str()
        ->check(CLI::IsMember({"harmonic", "constant", "exact"}));
    fw->add_option("--eps", eps, "schedule scale")->capture_default_str();
    fw->add_option("--max-iter", max_iter, "iteration limit")->capture_default_str();
    fw->add_option("--stop-gap", stop_gap, "stop when gap estimate + eps_k falls below")->capture_default_str();
    fw->add_option("--out", out_path, "CSV output path");

    auto* bench = app.add_subcommand("bench", "time project, lmo and approx_lmo (informational)");
    bench->add_option("--set", set_spec, set_help)->required();
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_option("--trials", trials, "number of timed inputs");
    bench->add_option("--eps", eps, "approx_lmo accuracy")->capture_default_str();
    bench->add_option("--out", out_path, "report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    plm_status status = PLM_OK;
    SetHandle set;
    if (!set_spec.empty()) {
        set = parse_set(set_spec, status);
        if (status != PLM_OK) return status_exit(status);
    }

    CommandResult result;
    if (verify->parsed()) {
        plm_verify_config config{set.get(), seed, trials, threads};
        status = plm_run_verify(&config, &result.raw);
    } else if (sweep->parsed()) {
        status = plm_run_sweep(set.get(), direction.data(), direction.size(), lambda_grid.c_str(), &result.raw);
    } else if (lambdastar->parsed()) {
        status = plm_run_lambdastar(set.get(), direction.data(), direction.size(), tol_exact, lambda0,
                                    max_doublings, &result.raw);
    } else if (fw->parsed()) {
        const plm_eps_schedule kind = schedule == "exact"      ? PLM_EPS_EXACT
                                      : schedule == "constant" ? PLM_EPS_CONSTANT
                                                               : PLM_EPS_HARMONIC;
        status = plm_run_fw(set.get(), direction.data(), direction.size(), kind, eps, max_iter, stop_gap,
                            &result.raw);
    } else if (bench->parsed()) {
        status = plm_run_bench(set.get(), seed, trials, eps, &result.raw);
    }
    if (status != PLM_OK) return status_exit(status);
    return emit(result, out_path);
}
