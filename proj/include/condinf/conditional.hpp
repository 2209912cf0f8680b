#pragma once

#include <algorithm>
#include <vector>

#include "condinf/space.hpp"

namespace condinf {

/// Greatest measurable lower bound of X given the partition: on every
/// positive-probability finite space this is the per-atom lattice infimum.
template <LatticeLike L>
RandomElement<typename L::Value> cond_inf(const L& lat, const RandomElement<typename L::Value>& x,
                                          const Atoms& atoms) {
    RandomElement<typename L::Value> out(x.size(), lat.top());
    for (const auto& atom : atoms) {
        typename L::Value v = lat.top();
        for (int w : atom) v = lat.meet(v, x.at(w));
        for (int w : atom) out[w] = v;
    }
    return out;
}

/// Order dual: per-atom supremum.
template <LatticeLike L>
RandomElement<typename L::Value> cond_sup(const L& lat, const RandomElement<typename L::Value>& x,
                                          const Atoms& atoms) {
    RandomElement<typename L::Value> out(x.size(), lat.bottom());
    for (const auto& atom : atoms) {
        typename L::Value v = lat.bottom();
        for (int w : atom) v = lat.join(v, x.at(w));
        for (int w : atom) out[w] = v;
    }
    return out;
}

/// Pointwise supremum of a family of random elements.
template <LatticeLike L>
RandomElement<typename L::Value> ess_sup_pointwise(
    const L& lat, const std::vector<RandomElement<typename L::Value>>& family) {
    if (family.empty()) throw std::invalid_argument("ess_sup: empty family");
    RandomElement<typename L::Value> out(family[0].size(), lat.bottom());
    for (const auto& x : family) {
        for (std::size_t w = 0; w < out.size(); ++w) out[w] = lat.join(out[w], x[w]);
    }
    return out;
}

/// Maximal-element search in the style of the essential-supremum lemma:
/// repeatedly join in family members while E[phi] strictly increases. With
/// strictly positive probabilities and a strictly increasing phi, E[phi]
/// strictly increases exactly when the join is a strict lattice increase, so
/// the acceptance test is the exact lattice comparison; the float E[phi]
/// trace is kept for ordering candidates.
template <LatticeLike L>
RandomElement<typename L::Value> ess_sup_phi_greedy(
    const L& lat, const std::vector<Rational>& probs,
    const std::vector<RandomElement<typename L::Value>>& family) {
    if (family.empty()) throw std::invalid_argument("ess_sup: empty family");
    auto mean_phi = [&](const RandomElement<typename L::Value>& x) {
        double acc = 0.0;
        for (std::size_t w = 0; w < x.size(); ++w) {
            acc += probs[w].to_double() * lat.phi(x[w]);
        }
        return acc;
    };
    std::vector<std::size_t> order(family.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return mean_phi(family[a]) > mean_phi(family[b]);
    });

    RandomElement<typename L::Value> best = family[order[0]];
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i : order) {
            bool strict = false;
            RandomElement<typename L::Value> cand(best.size());
            for (std::size_t w = 0; w < best.size(); ++w) {
                cand[w] = lat.join(best[w], family[i][w]);
                strict = strict || !lat.equal(cand[w], best[w]);
            }
            if (strict) {
                best = std::move(cand);
                improved = true;
            }
        }
    }
    return best;
}

/// The inf-process V_t = greatest F_t-measurable lower bound of X.
template <LatticeLike L>
Grid<typename L::Value> inf_process(const L& lat, const FiniteFilteredSpace& space,
                                    const RandomElement<typename L::Value>& x) {
    Grid<typename L::Value> v(space.horizon() + 1);
    for (int t = 0; t <= space.horizon(); ++t) {
        v[t] = cond_inf(lat, x, space.partitions[t]);
    }
    return v;
}

/// Conditional infimum at a stopping time, computed over the F_tau atoms.
template <LatticeLike L>
RandomElement<typename L::Value> cond_inf_at(const L& lat, const FiniteFilteredSpace& space,
                                             const RandomElement<typename L::Value>& x,
                                             const StoppingTime& st) {
    return cond_inf(lat, x, f_tau_atoms(space, st));
}

/// Pathwise evaluation V_{tau(w)}(w) of the inf-process, with V_inf := V_T.
template <LatticeLike L>
RandomElement<typename L::Value> inf_process_at_tau_pathwise(
    const L& lat, const FiniteFilteredSpace& space, const RandomElement<typename L::Value>& x,
    const StoppingTime& st) {
    Grid<typename L::Value> v = inf_process(lat, space, x);
    RandomElement<typename L::Value> out(x.size(), lat.top());
    for (int w = 0; w < space.outcomes(); ++w) {
        const int t = st.tau[w] == StoppingTime::never ? space.horizon() : st.tau[w];
        out[w] = v[t][w];
    }
    return out;
}

}  // namespace condinf
