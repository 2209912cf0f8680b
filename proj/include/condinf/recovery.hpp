#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "condinf/conditional.hpp"
#include "condinf/polytope.hpp"
#include "condinf/space.hpp"

namespace condinf {

// ---------------------------------------------------------------------------
// Recovery theorem: the three equivalent conditions, each with an explicit
// witness on failure. All deciders scan (time, atom) pairs; a violating
// stopping time always restricts to a violating atom because every
// {tau = t} is a union of time-t atoms.
// ---------------------------------------------------------------------------

template <class L>
struct ConditionWitness {
    int t = -1;
    int atom = -1;
    StoppingTime tau;                        // canonical witness stopping time
    RandomElement<typename L::Value> y;      // witness random element
    typename L::Value process_value;         // U at the violating (t, atom)
    typename L::Value bound_value;           // conditional infimum there
};

template <class L>
struct ConditionVerdict {
    bool pass = true;
    std::optional<ConditionWitness<L>> witness;
};

template <class L>
struct RecoveryVerdict {
    ConditionVerdict<L> cond_i;
    ConditionVerdict<L> cond_ii;
    ConditionVerdict<L> cond_iii;
    bool agree() const {
        return cond_i.pass == cond_ii.pass && cond_ii.pass == cond_iii.pass;
    }
};

template <LatticeLike L>
void require_monotone_adapted(const L& lat, const FiniteFilteredSpace& space,
                              const Grid<typename L::Value>& u) {
    auto report = validate_adapted(lat, space, u, /*require_monotone=*/true);
    if (!report.all_pass())
        throw std::invalid_argument("recovery: process must be adapted and nondecreasing");
}

/// Condition (i): U_t equals the conditional infimum of U_T at every time.
template <LatticeLike L>
ConditionVerdict<L> check_recovery_i(const L& lat, const FiniteFilteredSpace& space,
                                     const Grid<typename L::Value>& u) {
    require_monotone_adapted(lat, space, u);
    const int T = space.horizon();
    for (int t = 0; t <= T; ++t) {
        const auto& atoms = space.partitions[t];
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            typename L::Value v = lat.top();
            for (int w : atoms[a]) v = lat.meet(v, u[T][w]);
            if (!lat.equal(u[t][atoms[a][0]], v)) {
                ConditionWitness<L> wit;
                wit.t = t;
                wit.atom = static_cast<int>(a);
                wit.process_value = u[t][atoms[a][0]];
                wit.bound_value = v;
                return {false, std::move(wit)};
            }
        }
    }
    return {true, std::nullopt};
}

/// Condition (ii): no sure improvement. A violation is certified by the
/// stopping time tau = t on the atom (never elsewhere) together with
/// Y = (conditional infimum on the atom) meet chi_{A^c}, which equals that
/// infimum on the atom and bottom off it: F_tau-measurable, <= U_T, and
/// strictly above U_tau on {tau < infinity}.
template <LatticeLike L>
ConditionVerdict<L> check_no_sure_improvement(const L& lat, const FiniteFilteredSpace& space,
                                              const Grid<typename L::Value>& u) {
    require_monotone_adapted(lat, space, u);
    const int T = space.horizon();
    for (int t = 0; t <= T; ++t) {
        const auto& atoms = space.partitions[t];
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            typename L::Value y_a = lat.top();
            for (int w : atoms[a]) y_a = lat.meet(y_a, u[T][w]);
            if (lt(lat, u[t][atoms[a][0]], y_a)) {
                ConditionWitness<L> wit;
                wit.t = t;
                wit.atom = static_cast<int>(a);
                wit.process_value = u[t][atoms[a][0]];
                wit.bound_value = y_a;
                wit.tau.tau.assign(space.outcomes(), StoppingTime::never);
                wit.y.assign(space.outcomes(), lat.bottom());
                for (int w : atoms[a]) {
                    wit.tau.tau[w] = t;
                    wit.y[w] = y_a;
                }
                return {false, std::move(wit)};
            }
        }
    }
    return {true, std::nullopt};
}

/// Condition (iii): no conditionally certain improvement. The witness uses
/// the deterministic time tau = t and Y = V_t join chi_A (V_t on the
/// improving set A, top off it), following the theorem's construction; the
/// violation is certified on an atom of A where Y <= U_T holds everywhere,
/// i.e. with conditional probability one.
template <LatticeLike L>
ConditionVerdict<L> check_conditional_improvement(const L& lat, const FiniteFilteredSpace& space,
                                                  const Grid<typename L::Value>& u) {
    require_monotone_adapted(lat, space, u);
    const int T = space.horizon();
    const auto top = lat.top();
    for (int t = 0; t <= T; ++t) {
        auto v_t = cond_inf(lat, u[T], space.partitions[t]);
        const auto& atoms = space.partitions[t];
        bool improving_somewhere = false;
        for (const auto& atom : atoms) {
            if (lt(lat, u[t][atom[0]], v_t[atom[0]])) improving_somewhere = true;
        }
        if (!improving_somewhere) continue;
        // Y = V_t on A = {U_t < V_t}, top elsewhere
        RandomElement<typename L::Value> y(space.outcomes(), top);
        StoppingTime tau;
        tau.tau.assign(space.outcomes(), t);
        int cert_atom = -1;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (lt(lat, u[t][atoms[a][0]], v_t[atoms[a][0]])) {
                for (int w : atoms[a]) y[w] = v_t[w];
                if (cert_atom < 0) cert_atom = static_cast<int>(a);
            }
        }
        // On the certifying atom: U_t < top there, and Y <= U_T on the whole
        // atom, so P(Y <= U_T | F_t) = 1 on a positive-probability part of
        // {U_t < top} -- exactly what condition (iii) forbids.
        ConditionWitness<L> wit;
        wit.t = t;
        wit.atom = cert_atom;
        wit.process_value = u[t][atoms[cert_atom][0]];
        wit.bound_value = v_t[atoms[cert_atom][0]];
        wit.tau = std::move(tau);
        wit.y = std::move(y);
        return {false, std::move(wit)};
    }
    return {true, std::nullopt};
}

template <LatticeLike L>
RecoveryVerdict<L> check_recovery(const L& lat, const FiniteFilteredSpace& space,
                                  const Grid<typename L::Value>& u) {
    return {check_recovery_i(lat, space, u), check_no_sure_improvement(lat, space, u),
            check_conditional_improvement(lat, space, u)};
}

/// Exact re-validation of a condition (ii) witness: tau is a stopping time
/// with P(tau < infinity) > 0, Y is F_tau-measurable, Y <= U_T everywhere,
/// and U_tau < Y on {tau < infinity}.
template <LatticeLike L>
bool revalidate_witness_ii(const L& lat, const FiniteFilteredSpace& space,
                           const Grid<typename L::Value>& u, const ConditionWitness<L>& wit) {
    if (!validate_stopping_time(space, wit.tau).all_pass()) return false;
    bool finite_somewhere = false;
    for (int w = 0; w < space.outcomes(); ++w) {
        if (!lat.leq(wit.y[w], u[space.horizon()][w])) return false;
        if (wit.tau.tau[w] != StoppingTime::never) {
            finite_somewhere = true;
            if (!lt(lat, u[wit.tau.tau[w]][w], wit.y[w])) return false;
        }
    }
    if (!finite_somewhere) return false;
    for (const auto& atom : f_tau_atoms(space, wit.tau)) {
        for (int w : atom) {
            if (!lat.equal(wit.y[w], wit.y[atom[0]])) return false;
        }
    }
    return true;
}

/// Exact re-validation of a condition (iii) witness: U_tau < Y on
/// {U_tau < top}, and on some F_tau atom inside {U_tau < top} the bound
/// Y <= U_T holds everywhere (conditional probability one).
template <LatticeLike L>
bool revalidate_witness_iii(const L& lat, const FiniteFilteredSpace& space,
                            const Grid<typename L::Value>& u, const ConditionWitness<L>& wit) {
    if (!validate_stopping_time(space, wit.tau).all_pass()) return false;
    const int T = space.horizon();
    const auto top = lat.top();
    auto u_at_tau = [&](int w) {
        const int t = wit.tau.tau[w] == StoppingTime::never ? T : wit.tau.tau[w];
        return u[t][w];
    };
    for (int w = 0; w < space.outcomes(); ++w) {
        if (!lat.equal(u_at_tau(w), top) && !lt(lat, u_at_tau(w), wit.y[w])) return false;
    }
    for (const auto& atom : f_tau_atoms(space, wit.tau)) {
        for (int w : atom) {
            if (!lat.equal(wit.y[w], wit.y[atom[0]])) return false;
        }
        if (lat.equal(u_at_tau(atom[0]), top)) continue;
        bool certain = true;
        for (int w : atom) certain = certain && lat.leq(wit.y[w], u[T][w]);
        if (certain) return true;  // conditionally certain improvement found
    }
    return false;
}

// ---------------------------------------------------------------------------
// Stickiness
// ---------------------------------------------------------------------------

struct StickyWitness {
    int t = -1;
    int atom = -1;
    Rational epsilon;  // comparison-scale threshold violated by every path
};

struct StickyResult {
    bool sticky = true;
    std::optional<StickyWitness> witness;
};

/// Generic stickiness check. `metric` must return an exact comparison-scale
/// distance (absolute difference for reals, squared Euclidean distance for
/// the plane, 0/1 for the discrete metric); any strictly monotone rescaling
/// of the true metric works since the condition only compares distances.
///
/// An F_t-measurable epsilon is constant per atom, and the sticky condition
/// is monotone in epsilon, so only realized deviation values matter: the
/// check fails at (t, atom) exactly when every path deviates by some positive
/// amount, and the reported epsilon is half the smallest realized deviation.
template <class V, class Metric>
StickyResult check_sticky(const FiniteFilteredSpace& space, const Grid<V>& x,
                          Metric&& metric) {
    const int T = space.horizon();
    for (int t = 0; t <= T; ++t) {
        const auto& atoms = space.partitions[t];
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            std::optional<Rational> best;  // min over the atom of max future deviation
            for (int w : atoms[a]) {
                Rational dev(0);
                for (int s = t; s <= T; ++s) dev = max(dev, metric(x[s][w], x[t][w]));
                if (!best || dev < *best) best = dev;
            }
            if (best && best->sign() > 0) {
                StickyWitness wit;
                wit.t = t;
                wit.atom = static_cast<int>(a);
                wit.epsilon = *best / Rational(2);
                return {false, std::move(wit)};
            }
        }
    }
    return {true, std::nullopt};
}

inline Rational metric_abs(const Rational& a, const Rational& b) { return (a - b).abs(); }
inline Rational metric_euclid_sq(const Pt2& a, const Pt2& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}
inline Rational metric_discrete(const Rational& a, const Rational& b) {
    return a == b ? Rational(0) : Rational(1);
}

/// Spec of stickiness for nondecreasing real processes: at every (t, atom)
/// the terminal value can stay within any positive epsilon, i.e. the per-atom
/// minimum of U_T equals U_t.
struct StickyMonotoneResult {
    bool sticky = true;
    std::optional<StickyWitness> witness;
};

StickyMonotoneResult check_sticky_monotone(const FiniteFilteredSpace& space,
                                           const Grid<Rational>& u);

// ---------------------------------------------------------------------------
// Monotone functionals of a base process
// ---------------------------------------------------------------------------

/// Continuous piecewise-linear scalar function with exact rational breakpoints
/// (constant extrapolation beyond the ends).
struct PiecewiseLinear {
    std::vector<Pt2> points;  // strictly increasing x
    Rational operator()(const Rational& x) const;

    static PiecewiseLinear identity();
    static PiecewiseLinear absolute();
};

/// U_t = max_{s <= t} f(X_s).
Grid<Rational> running_max(const Grid<Rational>& x,
                           const std::function<Rational(const Rational&)>& f);

/// U_t = sum_{s <= t} w_s 1{X_s in K}; unit weights give the visit count,
/// the discrete stand-in for local time.
Grid<Rational> visit_functional(const Grid<Rational>& x, const std::vector<Rational>& sites,
                                const std::vector<Rational>& increments);

/// U_t = sum_{s <= t} f(X_s) dt, the Riemann analog of the integral
/// functional.
Grid<Rational> integral_functional(const Grid<Rational>& x,
                                   const std::function<Rational(const Rational&)>& f,
                                   const Rational& dt);

/// U_t = closed convex hull of the points visited up to t.
Grid<Polytope2> convex_hull_process(const Grid<Pt2>& x);

/// U_t = set of ground sites visited up to t.
Grid<SetValue> visited_sites_process(const PowerSetLattice& lat, const Grid<int>& site_index);

}  // namespace condinf
