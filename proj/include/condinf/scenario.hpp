#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "condinf/lattice.hpp"
#include "condinf/polytope.hpp"
#include "condinf/simulate.hpp"

namespace condinf {

/// Thrown on malformed scenarios and bad CLI parameters; the CLI maps it to
/// exit code 2.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunResult {
    nlohmann::json report;
    int exit_code = 0;  // 0 all checks pass, 1 check failure, 2 usage error
};

/// Lattice value serialization used by scenarios, reports and witnesses.
nlohmann::json value_to_json(const ExtendedRealLattice& lat, const ExtReal& v);
nlohmann::json value_to_json(const PowerSetLattice& lat, const SetValue& v);
nlohmann::json value_to_json(const PolytopeLattice& lat, const Polytope2& v);
ExtReal value_from_json(const ExtendedRealLattice& lat, const nlohmann::json& j);
SetValue value_from_json(const PowerSetLattice& lat, const nlohmann::json& j);
Polytope2 value_from_json(const PolytopeLattice& lat, const nlohmann::json& j);

/// Runs every check listed in the scenario (or the override) and returns the
/// deterministic report. Never throws on check failures; throws ScenarioError
/// (or returns exit 2) on malformed input.
RunResult run_verify(const nlohmann::json& scenario,
                     const std::vector<std::string>& checks_override = {});

/// Seeded property campaign; suites: lattice_axioms, pci, ncr_equiv,
/// sticky_implications, reconstruction. `lattice` may be "all" where it
/// applies.
RunResult run_fuzz(const std::string& suite, const std::string& lattice, std::uint64_t seed,
                   long cases);

struct SimulateOptions {
    std::string model = "exp_martingale";
    EnsembleSpec ensemble;
    std::vector<double> ely_thresholds;      // --check ely
    std::vector<std::string> ny_fspecs;      // --check ny
    double ely_tol_small = 0.02;             // n <= 4
    double ely_tol_large = 0.03;             // n > 4
    double ny_tol = 0.01;
};

RunResult run_simulate(const SimulateOptions& options);

/// Flat CSV rendering of a simulate report (one row per estimate).
std::string simulate_report_csv(const nlohmann::json& report);

}  // namespace condinf
