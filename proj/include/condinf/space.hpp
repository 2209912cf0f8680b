#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "condinf/lattice.hpp"
#include "condinf/rational.hpp"

namespace condinf {

using Atoms = std::vector<std::vector<int>>;  // partition: atoms of outcome indices

/// Result of one named check, with a JSON witness payload on failure.
struct CheckResult {
    std::string name;
    bool pass = true;
    nlohmann::json witness;  // empty object when passing
    double ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    void add(std::string name, bool pass, nlohmann::json witness = nlohmann::json::object()) {
        checks.push_back({std::move(name), pass, std::move(witness), 0.0});
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    nlohmann::json to_json() const;
};

/// Finite outcome space with strictly positive probabilities and a refining
/// sequence of partitions over the time grid 0..T.
struct FiniteFilteredSpace {
    std::vector<Rational> probs;        // strictly positive, sum to one
    std::vector<std::string> labels;    // optional outcome labels
    std::vector<Atoms> partitions;      // partitions[t], t = 0..T

    int outcomes() const { return static_cast<int>(probs.size()); }
    int horizon() const { return static_cast<int>(partitions.size()) - 1; }

    /// Builds the (t, outcome) -> atom index table. Throws on structurally
    /// broken input (bad sizes or indices); semantic invariants (refinement,
    /// positivity) are checked by validate_space instead.
    void finalize();

    int atom_index(int t, int omega) const { return atom_of_outcome_.at(t).at(omega); }
    std::span<const int> atom_of(int t, int omega) const {
        return partitions[t][atom_of_outcome_[t][omega]];
    }
    Rational atom_prob(int t, int atom) const;

private:
    std::vector<std::vector<int>> atom_of_outcome_;
};

VerificationReport validate_space(const FiniteFilteredSpace& space);

/// Process values indexed [t][omega].
template <class V>
using Grid = std::vector<std::vector<V>>;

/// Random element (one value per outcome).
template <class V>
using RandomElement = std::vector<V>;

struct StoppingTime {
    static constexpr int never = std::numeric_limits<int>::max();
    std::vector<int> tau;  // per outcome: time in 0..T, or `never`
};

VerificationReport validate_stopping_time(const FiniteFilteredSpace& space,
                                          const StoppingTime& st);

/// Atoms of F_tau: time-t atoms on {tau = t}, time-T atoms on {tau = never}.
Atoms f_tau_atoms(const FiniteFilteredSpace& space, const StoppingTime& st);

/// Adaptedness (and optionally monotonicity) of a lattice-valued grid.
template <LatticeLike L>
VerificationReport validate_adapted(const L& lat, const FiniteFilteredSpace& space,
                                    const Grid<typename L::Value>& grid,
                                    bool require_monotone = false) {
    VerificationReport report;
    bool shape_ok = static_cast<int>(grid.size()) == space.horizon() + 1;
    for (const auto& row : grid) {
        shape_ok = shape_ok && static_cast<int>(row.size()) == space.outcomes();
    }
    report.add("process.shape", shape_ok,
               shape_ok ? nlohmann::json::object()
                        : nlohmann::json{{"expected_times", space.horizon() + 1},
                                         {"expected_outcomes", space.outcomes()}});
    if (!shape_ok) return report;

    bool adapted = true;
    nlohmann::json adapted_witness = nlohmann::json::object();
    for (int t = 0; t <= space.horizon() && adapted; ++t) {
        const auto& atoms = space.partitions[t];
        for (std::size_t a = 0; a < atoms.size() && adapted; ++a) {
            for (std::size_t i = 1; i < atoms[a].size(); ++i) {
                if (!lat.equal(grid[t][atoms[a][i]], grid[t][atoms[a][0]])) {
                    adapted = false;
                    adapted_witness = {{"t", t},
                                       {"atom", a},
                                       {"outcome", atoms[a][i]},
                                       {"other", atoms[a][0]}};
                    break;
                }
            }
        }
    }
    report.add("process.adapted", adapted, adapted_witness);

    if (require_monotone) {
        bool monotone = true;
        nlohmann::json mono_witness = nlohmann::json::object();
        for (int t = 0; t < space.horizon() && monotone; ++t) {
            for (int w = 0; w < space.outcomes(); ++w) {
                if (!lat.leq(grid[t][w], grid[t + 1][w])) {
                    monotone = false;
                    mono_witness = {{"t", t}, {"outcome", w}};
                    break;
                }
            }
        }
        report.add("process.monotone", monotone, mono_witness);
    }
    return report;
}

/// Per-atom conditional expectation with exact rational arithmetic.
RandomElement<Rational> cond_expectation(const RandomElement<Rational>& x, const Atoms& atoms,
                                         const std::vector<Rational>& probs);

}  // namespace condinf
