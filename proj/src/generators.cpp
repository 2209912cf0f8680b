#include "condinf/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace condinf {

namespace {

std::vector<Rational> random_probs(Rng& rng, int m) {
    std::vector<std::int64_t> w(m);
    std::int64_t total = 0;
    for (auto& v : w) {
        v = rng.range(1, 9);
        total += v;
    }
    std::vector<Rational> probs;
    probs.reserve(m);
    for (auto v : w) probs.emplace_back(v, total);
    return probs;
}

}  // namespace

FiniteFilteredSpace gen_space(std::uint64_t seed, int m, int horizon) {
    if (m < 1 || horizon < 0) throw std::invalid_argument("gen_space: need m >= 1, T >= 0");
    Rng rng(Rng::derive(seed, 0xa11));
    FiniteFilteredSpace space;
    space.probs = random_probs(rng, m);

    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    space.partitions.push_back({all});
    for (int t = 1; t <= horizon; ++t) {
        Atoms next;
        for (const auto& atom : space.partitions.back()) {
            if (atom.size() == 1 || rng.chance(0.35)) {
                next.push_back(atom);
                continue;
            }
            // split into two nonempty parts after a seeded shuffle
            std::vector<int> items = atom;
            for (std::size_t i = items.size(); i-- > 1;) {
                std::swap(items[i], items[rng.below(i + 1)]);
            }
            std::size_t cut = 1 + rng.below(items.size() - 1);
            std::vector<int> left(items.begin(), items.begin() + cut);
            std::vector<int> right(items.begin() + cut, items.end());
            std::sort(left.begin(), left.end());
            std::sort(right.begin(), right.end());
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
        space.partitions.push_back(std::move(next));
    }
    space.finalize();
    return space;
}

StoppingTime gen_stopping_time(std::uint64_t seed, const FiniteFilteredSpace& space) {
    Rng rng(Rng::derive(seed, 0x7a0));
    StoppingTime st;
    st.tau.assign(space.outcomes(), StoppingTime::never);
    for (int t = 0; t <= space.horizon(); ++t) {
        for (const auto& atom : space.partitions[t]) {
            bool free = true;
            for (int w : atom) free = free && st.tau[w] == StoppingTime::never;
            if (free && rng.chance(1.0 / 3.0)) {
                for (int w : atom) st.tau[w] = t;
            }
        }
    }
    return st;
}

Grid<Rational> gen_martingale(std::uint64_t seed, const FiniteFilteredSpace& space) {
    Rng rng(Rng::derive(seed, 0x3a9));
    const int T = space.horizon();
    RandomElement<Rational> terminal(space.outcomes());
    for (const auto& atom : space.partitions[T]) {
        Rational v(rng.range(0, 32), 8);
        for (int w : atom) terminal[w] = v;
    }
    Grid<Rational> grid(T + 1);
    for (int t = 0; t <= T; ++t) {
        grid[t] = cond_expectation(terminal, space.partitions[t], space.probs);
    }
    return grid;
}

Grid<Rational> gen_supermartingale(std::uint64_t seed, const FiniteFilteredSpace& space) {
    Rng rng(Rng::derive(seed, 0x5c1));
    const int T = space.horizon();
    Grid<Rational> grid(T + 1, RandomElement<Rational>(space.outcomes()));
    for (const auto& atom : space.partitions[T]) {
        Rational v(rng.range(0, 32), 8);
        for (int w : atom) grid[T][w] = v;
    }
    for (int t = T - 1; t >= 0; --t) {
        auto mean = cond_expectation(grid[t + 1], space.partitions[t], space.probs);
        for (const auto& atom : space.partitions[t]) {
            Rational slack(rng.range(0, 4), 8);
            for (int w : atom) grid[t][w] = mean[w] + slack;
        }
    }
    return grid;
}

std::vector<Rational> gen_reweighting(std::uint64_t seed, int m) {
    Rng rng(Rng::derive(seed, 0x9e7));
    return random_probs(rng, m);
}

FiniteFilteredSpace gen_tree_space(std::uint64_t seed, int depth, int branching) {
    if (depth < 0 || branching < 2)
        throw std::invalid_argument("gen_tree_space: need depth >= 0, branching >= 2");
    Rng rng(Rng::derive(seed, 0xbee));
    long outcomes = 1;
    for (int t = 0; t < depth; ++t) outcomes *= branching;

    FiniteFilteredSpace space;
    space.probs.assign(outcomes, Rational(1));
    // per-node branch probabilities, applied along each outcome's digit path
    for (int t = 0; t < depth; ++t) {
        long nodes = 1;
        for (int s = 0; s < t; ++s) nodes *= branching;
        long block = outcomes / (nodes * branching);
        for (long node = 0; node < nodes; ++node) {
            std::vector<Rational> bp = random_probs(rng, branching);
            for (int b = 0; b < branching; ++b) {
                long start = node * branching * block + b * block;
                for (long i = 0; i < block; ++i) space.probs[start + i] *= bp[b];
            }
        }
    }
    for (int t = 0; t <= depth; ++t) {
        long atoms = 1;
        for (int s = 0; s < t; ++s) atoms *= branching;
        long block = outcomes / atoms;
        Atoms part(atoms);
        for (long a = 0; a < atoms; ++a) {
            part[a].resize(block);
            for (long i = 0; i < block; ++i) part[a][i] = static_cast<int>(a * block + i);
        }
        space.partitions.push_back(std::move(part));
    }
    space.finalize();
    return space;
}

namespace {

FiniteFilteredSpace uniform_tree_space(int depth, int branching,
                                       const std::vector<Rational>& branch_probs) {
    long outcomes = 1;
    for (int t = 0; t < depth; ++t) outcomes *= branching;
    FiniteFilteredSpace space;
    space.probs.assign(outcomes, Rational(1));
    for (long w = 0; w < outcomes; ++w) {
        long rest = w;
        long block = outcomes;
        for (int t = 0; t < depth; ++t) {
            block /= branching;
            int digit = static_cast<int>(rest / block);
            rest %= block;
            space.probs[w] *= branch_probs[digit];
        }
    }
    for (int t = 0; t <= depth; ++t) {
        long atoms = 1;
        for (int s = 0; s < t; ++s) atoms *= branching;
        long block = outcomes / atoms;
        Atoms part(atoms);
        for (long a = 0; a < atoms; ++a) {
            part[a].resize(block);
            for (long i = 0; i < block; ++i) part[a][i] = static_cast<int>(a * block + i);
        }
        space.partitions.push_back(std::move(part));
    }
    space.finalize();
    return space;
}

// digit of outcome w at step t (1-based step; digit 0 is the first move)
int tree_digit(long w, int step, int depth, int branching) {
    long block = 1;
    for (int s = step + 1; s < depth; ++s) block *= branching;
    return static_cast<int>((w / block) % branching);
}

}  // namespace

namespace {

struct Branch {
    Rational prob;
    int dx = 0;
    int dy = 0;
};

// Drops zero-probability branches so degenerate parameters (stay probability
// 0 or 1) collapse to smaller trees instead of violating the strictly
// positive probability invariant. A single surviving branch yields the
// one-path space with trivial partitions.
FiniteFilteredSpace branch_tree_space(int depth, std::vector<Branch>& branches) {
    std::erase_if(branches, [](const Branch& b) { return b.prob.sign() == 0; });
    if (branches.empty()) throw std::invalid_argument("walk: no positive-probability branches");
    if (branches.size() == 1) {
        FiniteFilteredSpace space;
        space.probs = {Rational(1)};
        space.partitions.assign(depth + 1, Atoms{{0}});
        space.finalize();
        return space;
    }
    std::vector<Rational> probs;
    for (const auto& b : branches) probs.push_back(b.prob);
    return uniform_tree_space(depth, static_cast<int>(branches.size()), probs);
}

}  // namespace

Walk1D lazy_tree_walk_1d(const Rational& p_stay, int depth, const Rational& start,
                         std::optional<int> clamp_bound) {
    if (p_stay.sign() < 0 || p_stay > Rational(1))
        throw std::invalid_argument("lazy_tree_walk_1d: p_stay must lie in [0, 1]");
    Rational p_move = (Rational(1) - p_stay) / Rational(2);
    std::vector<Branch> branches{{p_move, -1}, {p_stay, 0}, {p_move, 1}};
    Walk1D walk;
    walk.space = branch_tree_space(depth, branches);
    const int k = static_cast<int>(branches.size());
    const long m = walk.space.outcomes();
    walk.position.assign(depth + 1, RandomElement<Rational>(m, start));
    for (long w = 0; w < m; ++w) {
        Rational x = start;
        for (int t = 0; t < depth; ++t) {
            int digit = k == 1 ? 0 : tree_digit(w, t, depth, k);
            Rational next = x + Rational(branches[digit].dx);
            if (clamp_bound && next.abs() > Rational(*clamp_bound)) next = x;
            x = next;
            walk.position[t + 1][w] = x;
        }
    }
    return walk;
}

Walk1D forced_tree_walk_1d(int depth, const Rational& start) {
    return lazy_tree_walk_1d(Rational(0), depth, start);
}

Walk2D lazy_tree_walk_2d(const Rational& p_stay, int depth, const Pt2& start) {
    if (p_stay.sign() < 0 || p_stay > Rational(1))
        throw std::invalid_argument("lazy_tree_walk_2d: p_stay must lie in [0, 1]");
    Rational p_move = (Rational(1) - p_stay) / Rational(4);
    std::vector<Branch> branches{
        {p_stay, 0, 0}, {p_move, 1, 0}, {p_move, -1, 0}, {p_move, 0, 1}, {p_move, 0, -1}};
    Walk2D walk;
    walk.space = branch_tree_space(depth, branches);
    const int k = static_cast<int>(branches.size());
    const long m = walk.space.outcomes();
    walk.position.assign(depth + 1, std::vector<Pt2>(m, start));
    for (long w = 0; w < m; ++w) {
        Pt2 p = start;
        for (int t = 0; t < depth; ++t) {
            int digit = k == 1 ? 0 : tree_digit(w, t, depth, k);
            p = {p.x + Rational(branches[digit].dx), p.y + Rational(branches[digit].dy)};
            walk.position[t + 1][w] = p;
        }
    }
    return walk;
}

Grid<ExtReal> gen_monotone_real(std::uint64_t seed, const FiniteFilteredSpace& space,
                                bool allow_top) {
    Rng rng(Rng::derive(seed, 0x4d1));
    const int T = space.horizon();
    Grid<ExtReal> grid(T + 1, RandomElement<ExtReal>(space.outcomes()));
    ExtendedRealLattice lat;
    for (int t = 0; t <= T; ++t) {
        for (const auto& atom : space.partitions[t]) {
            ExtReal inc = ExtReal::of(Rational(rng.range(-8, 8), 4));
            if (allow_top && rng.below(50) == 0) {
                inc = ExtReal::pinf();  // occasional top-degenerate path
            }
            for (int w : atom) {
                grid[t][w] = t == 0 ? inc : lat.join(grid[t - 1][w], inc);
            }
        }
    }
    return grid;
}

Grid<SetValue> gen_monotone_powerset(std::uint64_t seed, const PowerSetLattice& lat,
                                     const FiniteFilteredSpace& space) {
    Rng rng(Rng::derive(seed, 0x6f2));
    const int T = space.horizon();
    const std::uint64_t full = lat.top().bits;
    Grid<SetValue> grid(T + 1, RandomElement<SetValue>(space.outcomes()));
    for (int t = 0; t <= T; ++t) {
        for (const auto& atom : space.partitions[t]) {
            SetValue inc{rng.next() & full};
            for (int w : atom) {
                grid[t][w] = t == 0 ? inc : lat.join(grid[t - 1][w], inc);
            }
        }
    }
    return grid;
}

Grid<Polytope2> gen_monotone_polytope(std::uint64_t seed, const FiniteFilteredSpace& space) {
    Rng rng(Rng::derive(seed, 0x8b3));
    const int T = space.horizon();
    Grid<Polytope2> grid(T + 1, RandomElement<Polytope2>(space.outcomes()));
    for (int t = 0; t <= T; ++t) {
        for (const auto& atom : space.partitions[t]) {
            Pt2 p{Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3))};
            Polytope2 inc = Polytope2::point(p);
            for (int w : atom) {
                grid[t][w] = t == 0 ? inc : poly_join(grid[t - 1][w], inc);
            }
        }
    }
    return grid;
}

}  // namespace condinf
