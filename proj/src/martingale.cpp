#include "condinf/martingale.hpp"

#include <stdexcept>

#include "condinf/generators.hpp"

namespace condinf {

namespace {

bool one_step_check(const FiniteFilteredSpace& space, const Grid<Rational>& m, bool exact) {
    ExtendedRealLattice lat;
    Grid<ExtReal> wrapped(m.size());
    for (std::size_t t = 0; t < m.size(); ++t) {
        wrapped[t].reserve(m[t].size());
        for (const auto& v : m[t]) wrapped[t].push_back(ExtReal::of(v));
    }
    if (!validate_adapted(lat, space, wrapped).all_pass()) return false;
    for (int t = 0; t < space.horizon(); ++t) {
        auto mean = cond_expectation(m[t + 1], space.partitions[t], space.probs);
        for (int w = 0; w < space.outcomes(); ++w) {
            if (exact ? mean[w] != m[t][w] : mean[w] > m[t][w]) return false;
        }
    }
    return true;
}

}  // namespace

bool is_martingale(const FiniteFilteredSpace& space, const Grid<Rational>& m) {
    return one_step_check(space, m, /*exact=*/true);
}

bool is_supermartingale(const FiniteFilteredSpace& space, const Grid<Rational>& m) {
    return one_step_check(space, m, /*exact=*/false);
}

RunningMaxRecoveryResult verify_running_max_recovery(
    const FiniteFilteredSpace& space, const Grid<Rational>& m,
    const std::vector<std::vector<Rational>>& alternative_measures, int reweightings,
    std::uint64_t reweight_seed) {
    RunningMaxRecoveryResult result;

    result.precondition_ok = is_supermartingale(space, m);
    if (!result.precondition_ok) {
        for (const auto& probs : alternative_measures) {
            FiniteFilteredSpace reweighted = space;
            reweighted.probs = probs;
            reweighted.finalize();
            if (validate_space(reweighted).all_pass() && is_supermartingale(reweighted, m)) {
                result.precondition_ok = true;
                break;
            }
        }
    }
    result.report.add("running_max.supermartingale_under_some_measure", result.precondition_ok);
    if (!result.precondition_ok) return result;

    PiecewiseLinear id = PiecewiseLinear::identity();
    Grid<Rational> u = running_max(m, [&](const Rational& v) { return id(v); });
    auto sticky = check_sticky_monotone(space, u);
    result.pass = sticky.sticky;
    result.witness = sticky.witness;
    result.report.add("running_max.condition_i", result.pass,
                      result.pass ? nlohmann::json::object()
                                  : nlohmann::json{{"t", sticky.witness->t},
                                                   {"atom", sticky.witness->atom},
                                                   {"epsilon", sticky.witness->epsilon.str()}});

    // The checkers never read the probabilities, so equivalent measure
    // changes cannot move the verdict; run them anyway as specified.
    for (int k = 0; k < reweightings; ++k) {
        FiniteFilteredSpace reweighted = space;
        reweighted.probs = gen_reweighting(Rng::derive(reweight_seed, k), space.outcomes());
        reweighted.finalize();
        auto again = check_sticky_monotone(reweighted, u);
        if (again.sticky != result.pass) result.reweighting_invariant = false;
        ++result.reweightings_checked;
    }
    result.report.add("running_max.measure_change_invariant", result.reweighting_invariant);
    return result;
}

ReconstructionResult reconstruct(const ReconstructionInput& input) {
    const FiniteFilteredSpace& space = input.space;
    const int T = space.horizon();
    const int m = space.outcomes();
    if (static_cast<int>(input.terminal.size()) != m ||
        static_cast<int>(input.masked_max.size()) != m)
        throw std::invalid_argument("reconstruct: value vectors must cover all outcomes");

    ReconstructionResult result;

    bool consistent = true;
    for (int w = 0; w < m; ++w) {
        if (input.terminal[w].sign() < 0 || input.masked_max[w] < input.terminal[w])
            consistent = false;
    }
    result.report.add("reconstruct.masked_max_dominates_terminal", consistent);

    // V_t = conditional infimum of the masked maximum (extended reals are not
    // needed: everything is finite).
    result.inf_process.resize(T + 1);
    Rational global_max(0);
    for (int w = 0; w < m; ++w) global_max = max(global_max, input.masked_max[w]);
    for (int t = 0; t <= T; ++t) {
        result.inf_process[t].assign(m, Rational(0));
        for (const auto& atom : space.partitions[t]) {
            Rational v = input.masked_max[atom[0]];
            for (int w : atom) v = min(v, input.masked_max[w]);
            for (int w : atom) result.inf_process[t][w] = v;
        }
    }

    const BigInt n_lo = input.mask_bound.ceil() + BigInt(1);
    const BigInt n_max = global_max.ceil() + BigInt(1);
    for (BigInt n = n_lo <= n_max ? n_lo : n_max;; n += BigInt(1)) {
        ReconstructionStage stage;
        stage.level = n;
        stage.tau.tau.assign(m, StoppingTime::never);
        const Rational level(n, BigInt(1));
        for (int w = 0; w < m; ++w) {
            for (int t = 0; t <= T; ++t) {
                if (result.inf_process[t][w] >= level) {
                    stage.tau.tau[w] = t;
                    break;
                }
            }
        }
        RandomElement<Rational> payoff(m);
        for (int w = 0; w < m; ++w) {
            payoff[w] = stage.tau.tau[w] == StoppingTime::never
                            ? input.terminal[w]
                            : result.inf_process[stage.tau.tau[w]][w];
        }
        stage.process.resize(T + 1);
        for (int t = 0; t <= T; ++t) {
            stage.process[t] = cond_expectation(payoff, space.partitions[t], space.probs);
        }
        result.stages.push_back(std::move(stage));
        if (n >= n_max) break;
    }

    result.process = result.stages.back().process;

    // Stage coherence: every stage must be the final process stopped at its
    // own crossing time. A mismatch flags inputs that no nonnegative
    // martingale could have produced.
    bool stages_ok = true;
    for (const auto& stage : result.stages) {
        for (int t = 0; t <= T && stages_ok; ++t) {
            for (int w = 0; w < m; ++w) {
                const int stopped =
                    stage.tau.tau[w] == StoppingTime::never ? t : std::min(t, stage.tau.tau[w]);
                if (stage.process[t][w] != result.process[stopped][w]) {
                    stages_ok = false;
                    break;
                }
            }
        }
    }
    result.report.add("reconstruct.stages_match_stopped_process", stages_ok);
    result.report.add("reconstruct.output_nonnegative", [&] {
        for (const auto& row : result.process) {
            for (const auto& v : row) {
                if (v.sign() < 0) return false;
            }
        }
        return true;
    }());
    return result;
}

}  // namespace condinf
