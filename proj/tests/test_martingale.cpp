#include "doctest.h"

#include "condinf/generators.hpp"
#include "condinf/martingale.hpp"
#include "condinf/properties.hpp"
#include "condinf/recovery.hpp"

using namespace condinf;

namespace {

Grid<Rational> constant_grid(const FiniteFilteredSpace& space, const Rational& v) {
    return Grid<Rational>(space.horizon() + 1,
                          RandomElement<Rational>(space.outcomes(), v));
}

}  // namespace

TEST_SUITE("martingale") {

TEST_CASE("martingale and supermartingale predicates") {
    FiniteFilteredSpace space = gen_space(19, 6, 3);
    CHECK(is_martingale(space, constant_grid(space, Rational(7, 3))));

    // M_t = -t decreases surely: supermartingale but not a martingale
    Grid<Rational> drifting(space.horizon() + 1);
    for (int t = 0; t <= space.horizon(); ++t) {
        drifting[t].assign(space.outcomes(), Rational(-t));
    }
    CHECK(is_supermartingale(space, drifting));
    CHECK(!is_martingale(space, drifting));

    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        FiniteFilteredSpace tree = gen_tree_space(seed, 1 + seed % 5, 2 + seed % 2);
        CHECK(is_martingale(tree, gen_martingale(seed, tree)));
    }
}

TEST_CASE("running max recovery for seeded (super)martingales") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        FiniteFilteredSpace space = gen_tree_space(seed, 2 + seed % 4, 2);
        auto result = verify_running_max_recovery(
            space, seed % 2 ? gen_martingale(seed, space) : gen_supermartingale(seed, space));
        CHECK(result.precondition_ok);
        CHECK(result.pass);
        CHECK(result.reweighting_invariant);
        CHECK(result.reweightings_checked == 10);
    }
}

TEST_CASE("running max recovery: products of mean-1/2 positive factors") {
    // binomial tree with factors 3/4 and 1/4, equal branch probabilities:
    // strict supermartingale with positive paths
    const int depth = 5;
    FiniteFilteredSpace space;
    {
        Walk1D shape = forced_tree_walk_1d(depth, Rational(0));  // reuse the binary tree
        space = shape.space;
    }
    Grid<Rational> m(depth + 1, RandomElement<Rational>(space.outcomes(), Rational(1)));
    for (int t = 1; t <= depth; ++t) {
        for (int w = 0; w < space.outcomes(); ++w) {
            const long block = 1L << (depth - t);
            const bool up = (w / block) % 2 == 1;
            m[t][w] = m[t - 1][w] * (up ? Rational(3, 4) : Rational(1, 4));
        }
    }
    CHECK(is_supermartingale(space, m));
    CHECK(!is_martingale(space, m));
    auto result = verify_running_max_recovery(space, m);
    CHECK(result.precondition_ok);
    CHECK(result.pass);
}

TEST_CASE("running max recovery control: deterministic growth fails with witness") {
    FiniteFilteredSpace space = gen_space(4, 5, 3);
    Grid<Rational> rising(space.horizon() + 1);
    for (int t = 0; t <= space.horizon(); ++t) {
        rising[t].assign(space.outcomes(), Rational(t));
    }
    // strict submartingale: not a supermartingale under any equivalent
    // measure, so the precondition fails and is reported
    auto result = verify_running_max_recovery(space, rising);
    CHECK(!result.precondition_ok);
    CHECK(!result.pass);

    // the recovery check itself, run directly, yields the root witness
    auto sticky = check_sticky_monotone(space, rising);
    CHECK(!sticky.sticky);
    CHECK(sticky.witness->t == 0);

    // an equivalent reweighting can rescue the precondition when supplied
    Grid<Rational> mart = gen_martingale(9, space);
    auto with_alternatives = verify_running_max_recovery(
        space, mart, {gen_reweighting(3, space.outcomes())});
    CHECK(with_alternatives.precondition_ok);
}

TEST_CASE("reconstruction from the unmasked pair equals the martingale") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        FiniteFilteredSpace space = gen_tree_space(seed, 1 + seed % 5, 2 + seed % 2);
        Grid<Rational> m = gen_martingale(seed, space);
        PiecewiseLinear id = PiecewiseLinear::identity();
        Grid<Rational> mbar = running_max(m, [&](const Rational& v) { return id(v); });

        ReconstructionInput input;
        input.space = space;
        input.terminal = m[space.horizon()];
        input.masked_max = mbar[space.horizon()];
        input.mask_bound = Rational(0);  // X == 0
        auto result = reconstruct(input);
        CHECK(result.report.all_pass());
        CHECK(result.process == m);
        CHECK(interior_identity_holds(space, mbar, result.inf_process, input.mask_bound));
    }
}

TEST_CASE("reconstruction of the constant martingale") {
    FiniteFilteredSpace space = gen_tree_space(3, 3, 2);
    ReconstructionInput input;
    input.space = space;
    input.terminal.assign(space.outcomes(), Rational(1));
    input.masked_max.assign(space.outcomes(), Rational(1));
    input.mask_bound = Rational(0);
    auto result = reconstruct(input);
    CHECK(result.report.all_pass());
    CHECK(result.process == constant_grid(space, Rational(1)));
}

TEST_CASE("masked reconstruction and the interior identity") {
    // hand-built binary martingale whose maximum exceeds 3 on part of the
    // tree: terminal values (16, 4, 2, 0)/2 on a depth-2 uniform tree
    FiniteFilteredSpace space;
    space.probs = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
    space.partitions = {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}}};
    space.finalize();
    RandomElement<Rational> terminal{Rational(8), Rational(2), Rational(1), Rational(0)};
    Grid<Rational> m;
    for (int t = 0; t <= 2; ++t)
        m.push_back(cond_expectation(terminal, space.partitions[t], space.probs));
    REQUIRE(is_martingale(space, m));
    PiecewiseLinear id = PiecewiseLinear::identity();
    Grid<Rational> mbar = running_max(m, [&](const Rational& v) { return id(v); });

    // mask with c = 2: X = (2, 0, 3/2, 1/2) below the bound
    ReconstructionInput input;
    input.space = space;
    input.terminal = terminal;
    input.mask_bound = Rational(2);
    RandomElement<Rational> x{Rational(2), Rational(0), Rational(3, 2), Rational(1, 2)};
    input.masked_max.resize(4);
    for (int w = 0; w < 4; ++w) input.masked_max[w] = max(x[w], mbar[2][w]);

    auto result = reconstruct(input);
    CHECK(result.report.all_pass());
    CHECK(result.process == m);
    CHECK(interior_identity_holds(space, mbar, result.inf_process, input.mask_bound));
    // levels 3..ceil(max)+1 are exercised, the last stage never crosses
    CHECK(result.stages.size() >= 2);
    for (int w = 0; w < 4; ++w) {
        CHECK(result.stages.back().tau.tau[w] == StoppingTime::never);
    }
}

TEST_CASE("masked reconstruction across a seeded corpus") {
    auto outcome = run_reconstruction(606, 120);
    CHECK(outcome.failures == 0);
}

TEST_CASE("inconsistent masked maxima are reported, not silently accepted") {
    FiniteFilteredSpace space = gen_tree_space(8, 2, 2);
    Grid<Rational> m = gen_martingale(8, space);
    ReconstructionInput input;
    input.space = space;
    input.terminal = m[space.horizon()];
    input.masked_max.assign(space.outcomes(), Rational(0));
    // masked maximum below the terminal value cannot come from any pair
    bool below = false;
    for (const auto& v : input.terminal) below = below || v > Rational(0);
    if (below) {
        input.mask_bound = Rational(0);
        auto result = reconstruct(input);
        CHECK(!result.report.all_pass());
    }
}

}  // TEST_SUITE
