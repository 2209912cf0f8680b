#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace condinf {

/// Discretized positive martingale exp(W_t - t/2): a multiplicative binomial
/// walk with factors e^{+-step} and the martingale-correct up probability
/// (1 - d) / (u - d). Paths run until M < ruin or the step cap.
///
/// Everything lives on the integer log-lattice: a path's state is
/// S = log(M)/step, so thresholds and strata are exact integers.
struct EnsembleSpec {
    std::uint64_t seed = 42;
    std::int64_t paths = 1000000;
    double step = 0.025;  // sigma * sqrt(dt); keep <= 0.05 so the max is near-continuous
    double ruin = 1e-6;
    std::int64_t step_cap = 2000000;
    std::vector<std::int64_t> checkpoints;  // step indices for conditional checks
    // Qualitative toggle: rare large compensated up-jumps break the
    // continuity of the running max (no quantitative claims attached).
    bool jumpy = false;
    double jump_prob = 1e-3;
    double jump_factor = 50.0;
};

struct PathStats {
    EnsembleSpec spec;
    std::vector<std::int32_t> final_max;  // per path, in log-lattice units
    // per path, per checkpoint: (S, running max) in lattice units
    std::vector<std::array<std::int32_t, 2>> at_checkpoint;
    std::int64_t capped_paths = 0;

    const std::array<std::int32_t, 2>& checkpoint(std::int64_t path, std::size_t c) const {
        return at_checkpoint[path * static_cast<std::int64_t>(spec.checkpoints.size()) +
                             static_cast<std::int64_t>(c)];
    }
};

/// Deterministic in the seed and independent of the worker count
/// (per-path generators, serial reductions).
PathStats simulate_exp_martingale(const EnsembleSpec& spec);

struct ElyEstimate {
    double n = 0;
    double estimate = 0;          // n * P(max M >= n)
    double std_error = 0;
    std::int64_t hits = 0;
    // The lattice can only cross at e^{k step} >= n; this deterministic
    // overshoot factor e^{k step}/n bounds the discretization bias.
    double overshoot_factor = 1;
    double corrected = 0;         // estimate * overshoot_factor
    bool cap_warning = false;     // > 0.1% of paths hit the step cap
};

ElyEstimate ely_estimate(const PathStats& stats, double n);

/// Scalar function specs accepted by the NY identity evaluator.
struct FSpec {
    enum class Kind { constant, indicator, power, piecewise };
    Kind kind = Kind::constant;
    double value = 1.0;      // constant level
    double threshold = 0.0;  // indicator: 1 on [threshold, inf)
    double exponent = 1.0;   // power: x^-exponent, exponent > 0
    std::vector<std::pair<double, double>> pieces;  // (from_x, value), from_x increasing

    double eval(double x) const;
    /// "const:c", "indicator:a", "power:p", "steps:x1,c1,x2,c2,..."
    /// (steps start at value 0 below x1). Throws on divergent specs.
    static FSpec parse(const std::string& text);
};

/// Right-hand side of the NY identity:
///   f(mbar) (1 - m/mbar) + m * integral_mbar^inf f(x)/x^2 dx.
/// Closed form for constant/indicator/power; adaptive quadrature with
/// absolute error <= 1e-9 plus the exact constant tail for piecewise specs.
double ny_rhs(const FSpec& f, double m, double mbar);

struct NyBinResult {
    std::int32_t s = 0;
    std::int32_t max = 0;
    std::int64_t paths = 0;
    double estimate = 0;   // forward Monte Carlo E[f(max) | checkpoint state]
    double rhs = 0;        // NY closed form at (M_t, max_t)
    double std_error = 0;
};

struct NyCheckpointReport {
    std::int64_t step = 0;
    std::vector<NyBinResult> bins;
    std::int64_t skipped_bins = 0;  // strata with fewer than min_bin paths
    std::int64_t skipped_paths = 0;
    double max_abs_deviation = 0;
};

struct NyReport {
    std::vector<NyCheckpointReport> checkpoints;
    double max_abs_deviation = 0;
};

NyReport ny_check(const PathStats& stats, const FSpec& f, std::int64_t min_bin = 100);

}  // namespace condinf
