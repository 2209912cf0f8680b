#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "condinf/scenario.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

int emit(const condinf::RunResult& result, const std::string& out_path, bool csv) {
    std::string body =
        csv ? condinf::simulate_report_csv(result.report) : result.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        file << body;
    }
    if (result.report.contains("error")) {
        std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conditional infima, recovery of monotone processes, and the "
                 "martingale reconstruction experiments"};
    app.require_subcommand(1);

    // verify ----------------------------------------------------------------
    std::string scenario_path, verify_checks, verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run checks from a scenario file");
    verify->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    verify->add_option("--checks", verify_checks, "comma-separated check list override");
    verify->add_option("--out", verify_out, "write the report to a file");

    // fuzz ------------------------------------------------------------------
    std::string suite = "pci", fuzz_lattice = "all", fuzz_out;
    std::uint64_t fuzz_seed = 1;
    long fuzz_cases = 1000;
    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded property campaigns");
    fuzz->add_option("--suite", suite,
                     "lattice_axioms | pci | ncr_equiv | sticky_implications | reconstruction")
        ->required();
    fuzz->add_option("--seed", fuzz_seed, "campaign seed");
    fuzz->add_option("--cases", fuzz_cases, "number of cases");
    fuzz->add_option("--lattice", fuzz_lattice, "extended_real | power_set | polytope2 | all");
    fuzz->add_option("--out", fuzz_out, "write the report to a file");

    // simulate ----------------------------------------------------------------
    condinf::SimulateOptions sim;
    std::vector<std::string> sim_checks;
    std::string ely_ns = "2,4,8", ny_fs = "indicator:2", sim_out, sim_format = "json";
    std::vector<std::int64_t> checkpoints;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo checks of the "
                                                        "running-maximum identities");
    simulate->add_option("--model", sim.model, "exp_martingale");
    simulate->add_option("--paths", sim.ensemble.paths, "number of paths");
    simulate->add_option("--seed", sim.ensemble.seed, "master seed");
    simulate->add_option("--step", sim.ensemble.step, "log step size (<= 0.05)");
    simulate->add_option("--ruin", sim.ensemble.ruin, "stop once M falls below this");
    simulate->add_option("--cap", sim.ensemble.step_cap, "per-path step cap");
    simulate->add_option("--check", sim_checks, "ely | ny (repeatable)")
        ->expected(-1);
    simulate->add_option("--n", ely_ns, "ely thresholds, comma separated");
    simulate->add_option("--f", ny_fs, "ny function spec, e.g. indicator:2 or power:1");
    simulate->add_option("--checkpoints", checkpoints, "extra checkpoint steps for ny");
    simulate->add_flag("--jumpy", sim.ensemble.jumpy,
                       "compensated up-jumps that break max-continuity (qualitative)");
    simulate->add_option("--format", sim_format, "json | csv");
    simulate->add_option("--out", sim_out, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        std::ifstream file(scenario_path);
        if (!file) {
            std::cerr << "cannot read " << scenario_path << "\n";
            return 2;
        }
        nlohmann::json scenario;
        try {
            file >> scenario;
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "scenario parse error: " << e.what() << "\n";
            return 2;
        }
        if (verify_out.empty() && scenario.contains("output") && scenario["output"].is_string()) {
            verify_out = scenario["output"].get<std::string>();
        }
        return emit(condinf::run_verify(scenario, split_list(verify_checks)), verify_out, false);
    }

    if (fuzz->parsed()) {
        return emit(condinf::run_fuzz(suite, fuzz_lattice, fuzz_seed, fuzz_cases), fuzz_out,
                    false);
    }

    if (simulate->parsed()) {
        for (const std::string& check : sim_checks) {
            if (check == "ely") {
                for (const std::string& n : split_list(ely_ns)) {
                    sim.ely_thresholds.push_back(std::stod(n));
                }
            } else if (check == "ny") {
                sim.ny_fspecs.push_back(ny_fs);
            } else {
                std::cerr << "unknown --check " << check << " (want ely or ny)\n";
                return 2;
            }
        }
        sim.ensemble.checkpoints = checkpoints;
        return emit(condinf::run_simulate(sim), sim_out, sim_format == "csv");
    }
    return 2;
}
