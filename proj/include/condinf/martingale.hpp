#pragma once

#include <optional>
#include <vector>

#include "condinf/recovery.hpp"
#include "condinf/space.hpp"

namespace condinf {

/// Exact one-step martingale check: E[M_{t+1} | F_t] = M_t per atom.
bool is_martingale(const FiniteFilteredSpace& space, const Grid<Rational>& m);
/// Supermartingale: M_t >= E[M_{t+1} | F_t] per atom.
bool is_supermartingale(const FiniteFilteredSpace& space, const Grid<Rational>& m);

struct RunningMaxRecoveryResult {
    bool precondition_ok = false;  // supermartingale under some supplied measure
    bool pass = false;
    std::optional<StickyWitness> witness;
    int reweightings_checked = 0;
    bool reweighting_invariant = true;
    VerificationReport report;
};

/// Running-max recovery: the running maximum of a supermartingale (under the
/// given measure or any supplied equivalent one) satisfies condition (i);
/// the verdict is re-checked under seeded equivalent reweightings.
RunningMaxRecoveryResult verify_running_max_recovery(
    const FiniteFilteredSpace& space, const Grid<Rational>& m,
    const std::vector<std::vector<Rational>>& alternative_measures = {},
    int reweightings = 10, std::uint64_t reweight_seed = 1);

struct ReconstructionInput {
    FiniteFilteredSpace space;
    RandomElement<Rational> terminal;    // M_T per outcome (F_T-measurable)
    RandomElement<Rational> masked_max;  // X v max_T M per outcome
    Rational mask_bound;                 // deterministic c >= X
};

struct ReconstructionStage {
    BigInt level;                 // crossing level n
    StoppingTime tau;             // first time the inf-process reaches n
    Grid<Rational> process;       // E[payoff_n | F_t]
};

struct ReconstructionResult {
    Grid<Rational> process;       // the reconstructed martingale (final stage)
    Grid<Rational> inf_process;   // V_t = conditional infimum of the masked max
    std::vector<ReconstructionStage> stages;
    VerificationReport report;    // input consistency + stage coherence
};

/// Reconstruction of a nonnegative martingale from (M_T, X v max M) along the
/// crossing times tau_n = inf{t : V_t >= n}: each stage assembles
/// E[V_{tau_n} 1{tau_n < inf} + M_T 1{tau_n = inf} | F_t], and the final
/// stage (whose level exceeds the global masked max, so tau = inf) is the
/// reconstructed process.
ReconstructionResult reconstruct(const ReconstructionInput& input);

}  // namespace condinf
