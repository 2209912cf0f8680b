#pragma once

#include <cstdint>
#include <optional>

#include "condinf/polytope.hpp"
#include "condinf/rng.hpp"
#include "condinf/space.hpp"

namespace condinf {

/// Random filtered space: refining partitions grown by seeded atom splits,
/// strictly positive rational probabilities summing to one.
FiniteFilteredSpace gen_space(std::uint64_t seed, int m, int horizon);

StoppingTime gen_stopping_time(std::uint64_t seed, const FiniteFilteredSpace& space);

/// Nonnegative martingale: seeded terminal values on time-T atoms,
/// back-propagated through exact conditional expectations.
Grid<Rational> gen_martingale(std::uint64_t seed, const FiniteFilteredSpace& space);

/// Supermartingale built backwards with nonnegative per-atom slack.
Grid<Rational> gen_supermartingale(std::uint64_t seed, const FiniteFilteredSpace& space);

/// Fresh strictly positive probabilities (an equivalent measure change).
std::vector<Rational> gen_reweighting(std::uint64_t seed, int m);

/// Full branching tree with seeded per-node branch probabilities;
/// partition(t) groups outcomes by their length-t branch prefix.
FiniteFilteredSpace gen_tree_space(std::uint64_t seed, int depth, int branching);

struct Walk1D {
    FiniteFilteredSpace space;
    Grid<Rational> position;
};

struct Walk2D {
    FiniteFilteredSpace space;
    Grid<Pt2> position;
};

/// Lazy walk on the integers as a full ternary outcome tree: at every step the
/// walk stays with probability p_stay and moves +-1 with equal probability
/// otherwise. Optional clamp keeps the walk inside [-bound, bound] by turning
/// boundary-exiting moves into stays.
Walk1D lazy_tree_walk_1d(const Rational& p_stay, int depth, const Rational& start,
                         std::optional<int> clamp_bound = std::nullopt);

/// Forced-move walk: +-1 each step with probability 1/2, never stays.
Walk1D forced_tree_walk_1d(int depth, const Rational& start);

/// Lazy walk on Z^2 (stay, or one of the four unit moves).
Walk2D lazy_tree_walk_2d(const Rational& p_stay, int depth, const Pt2& start);

// Seeded monotone-process corpora for the recovery checkers. Each generator
// produces an adapted nondecreasing grid; engineer_failure grafts a sure
// improvement after a seeded time so condition (i) must fail.

Grid<ExtReal> gen_monotone_real(std::uint64_t seed, const FiniteFilteredSpace& space,
                                bool allow_top = true);
Grid<SetValue> gen_monotone_powerset(std::uint64_t seed, const PowerSetLattice& lat,
                                     const FiniteFilteredSpace& space);
Grid<Polytope2> gen_monotone_polytope(std::uint64_t seed, const FiniteFilteredSpace& space);

template <LatticeLike L>
bool engineer_failure(Rng& rng, const L& lat, const FiniteFilteredSpace& space,
                      Grid<typename L::Value>& grid, const typename L::Value& strict_bump) {
    if (space.horizon() == 0) return false;
    // join everything after t0 with a value strictly above every U_t0
    const int t0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(space.horizon())));
    typename L::Value cap = lat.bottom();
    for (const auto& v : grid[t0]) cap = lat.join(cap, v);
    typename L::Value c = lat.join(cap, strict_bump);
    if (lat.equal(c, cap)) return false;  // bump not strict, caller retries
    for (int t = t0 + 1; t <= space.horizon(); ++t) {
        for (auto& v : grid[t]) v = lat.join(v, c);
    }
    return true;
}

}  // namespace condinf
