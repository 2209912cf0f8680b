#include <vector>

#include "doctest.h"

#include "condinf/lattice.hpp"
#include "condinf/properties.hpp"
#include "condinf/rng.hpp"

using namespace condinf;

TEST_SUITE("lattice") {

TEST_CASE("extended real order and bounds") {
    ExtendedRealLattice lat;
    CHECK(lat.leq(ExtReal::ninf(), ExtReal::of(5)));
    CHECK(lat.leq(ExtReal::of(3), ExtReal::of(3)));
    CHECK(!lt(lat, ExtReal::of(3), ExtReal::of(3)));
    CHECK(lt(lat, ExtReal::of(Rational(1, 3)), ExtReal::of(Rational(1, 2))));
    CHECK(lat.leq(ExtReal::ninf(), ExtReal::pinf()));
    CHECK(lat.equal(lat.join(ExtReal::of(1), ExtReal::of(3)), ExtReal::of(3)));
    CHECK(lat.equal(lat.meet(ExtReal::of(1), ExtReal::of(3)), ExtReal::of(1)));
    const ExtReal items[3] = {ExtReal::of(1), ExtReal::of(3), ExtReal::of(2)};
    CHECK(lat.equal(lat.sup(items), ExtReal::of(3)));
    CHECK(lat.equal(lat.inf(items), ExtReal::of(1)));
    CHECK(lat.phi(ExtReal::of(0)) == 0.0);
    CHECK(lat.phi(ExtReal::pinf()) == 2.0);
    CHECK(lat.phi(ExtReal::ninf()) == -2.0);
}

TEST_CASE("weighted power set basics") {
    PowerSetLattice lat({"a", "b", "c"},
                        {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    const SetValue a = lat.from_names(std::vector<std::string>{"a"});
    const SetValue ab = lat.from_names(std::vector<std::string>{"a", "b"});
    const SetValue bc = lat.from_names(std::vector<std::string>{"b", "c"});
    CHECK(lat.leq(a, ab));
    CHECK(!lat.leq(a, bc));
    CHECK(lat.equal(lat.meet(ab, bc), lat.from_names(std::vector<std::string>{"b"})));
    CHECK(lat.equal(lat.join(a, bc), lat.top()));
    CHECK(lat.phi_exact(a) == Rational(1, 2));
    CHECK(lat.phi_exact(lat.bottom()) == Rational(0));
    CHECK(lat.phi_exact(lat.top()) == Rational(1));
    CHECK(lat.equal(lat.sup(std::span<const SetValue>{}), lat.bottom()));

    CHECK_THROWS_AS(PowerSetLattice({"a"}, {Rational(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(PowerSetLattice({"a", "b"}, {Rational(3, 2), Rational(-1, 2)}),
                    std::invalid_argument);
    // values from a wider ground set are a usage error
    PowerSetLattice small = PowerSetLattice::dyadic({"x", "y"});
    CHECK_THROWS_AS(small.leq(SetValue{0b111}, small.top()), std::invalid_argument);
}

TEST_CASE("dyadic default weights") {
    PowerSetLattice lat = PowerSetLattice::dyadic({"a", "b", "c"});
    // 2^-k normalized by (1 - 2^-3): 4/7, 2/7, 1/7
    CHECK(lat.weights()[0] == Rational(4, 7));
    CHECK(lat.weights()[1] == Rational(2, 7));
    CHECK(lat.weights()[2] == Rational(1, 7));
    CHECK(lat.phi_exact(lat.top()) == Rational(1));
}

TEST_CASE("order indicator is bottom on the event and top off it") {
    ExtendedRealLattice lat;
    const std::vector<int> event{0, 2};
    auto chi = order_indicator(lat, 4, event);
    CHECK(lat.equal(chi[0], lat.bottom()));
    CHECK(lat.equal(chi[1], lat.top()));
    CHECK(lat.equal(chi[2], lat.bottom()));
    CHECK(lat.equal(chi[3], lat.top()));

    // chi_Omega == bottom, chi_empty == top
    const std::vector<int> omega{0, 1, 2, 3};
    for (const auto& v : order_indicator(lat, 4, omega)) CHECK(lat.equal(v, lat.bottom()));
    for (const auto& v : order_indicator(lat, 4, std::vector<int>{}))
        CHECK(lat.equal(v, lat.top()));

    // x v chi_A agrees with x on A and is top off A
    const ExtReal x = ExtReal::of(7);
    CHECK(lat.equal(lat.join(x, chi[0]), x));
    CHECK(lat.equal(lat.join(x, chi[1]), lat.top()));
}

TEST_CASE("axiom battery on seeded triples per lattice") {
    for (const char* name : {"extended_real", "power_set", "polytope2"}) {
        auto outcome = run_lattice_axioms(name, 20250808, 2000);
        INFO(name);
        CHECK(outcome.failures == 0);
    }
}

TEST_CASE("phi strict monotonicity on seeded comparable pairs") {
    for (const char* name : {"extended_real", "power_set"}) {
        auto outcome = run_phi_monotonicity(name, 99, 2000);
        INFO(name);
        CHECK(outcome.failures == 0);
    }
}

TEST_CASE("dedekind extension battery") {
    auto outcome = run_dedekind_battery(7, 2000);
    CHECK(outcome.failures == 0);
}

TEST_CASE("dedekind extension endpoints and unbounded families") {
    DedekindExtension<RationalBaseLattice> lat{RationalBaseLattice{}};

    CHECK(lat.leq(lat.neg_inf(), lat.pos_inf()));
    CHECK(lat.phi(lat.pos_inf()) == 2.0);
    CHECK(lat.phi(lat.neg_inf()) == -2.0);
    // phi(+inf) = 2 strictly dominates every rescaled base score
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const double p = lat.phi(lat.of(Rational(rng.range(-1000000, 1000000), 7)));
        CHECK(p < 1.0);
        CHECK(p > -1.0);
    }

    // a family the base declares unbounded resolves to the synthetic +inf
    struct UnboundedMarkerBase : RationalBaseLattice {
        std::optional<Rational> sup_bounded(std::span<const Rational> xs) const {
            for (const auto& x : xs) {
                if (x >= Rational(1000)) return std::nullopt;  // marker: no sup in the base
            }
            return RationalBaseLattice::sup_bounded(xs);
        }
    };
    DedekindExtension<UnboundedMarkerBase> marked{UnboundedMarkerBase{}};
    using MV = DedekindExtension<UnboundedMarkerBase>::Value;
    const MV family[2] = {marked.of(Rational(1)), marked.of(Rational(1000))};
    CHECK(marked.equal(marked.sup(family), marked.pos_inf()));
    const MV bounded[2] = {marked.of(Rational(1)), marked.of(Rational(2))};
    CHECK(marked.equal(marked.sup(bounded), marked.of(Rational(2))));
    const MV endpoints[1] = {marked.neg_inf()};
    CHECK(marked.equal(marked.sup(endpoints), marked.neg_inf()));
}

TEST_CASE("dedekind extension agrees with the extended reals on rationals") {
    DedekindExtension<RationalBaseLattice> ded{RationalBaseLattice{}};
    ExtendedRealLattice ext;
    Rng rng(17);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(rng.range(-40, 40), 8);
        const Rational b(rng.range(-40, 40), 8);
        CHECK(ded.leq(ded.of(a), ded.of(b)) == ext.leq(ExtReal::of(a), ExtReal::of(b)));
    }
}

}  // TEST_SUITE
