#include "condinf/recovery.hpp"

#include <stdexcept>

namespace condinf {

StickyMonotoneResult check_sticky_monotone(const FiniteFilteredSpace& space,
                                           const Grid<Rational>& u) {
    const int T = space.horizon();
    for (int t = 0; t <= T; ++t) {
        const auto& atoms = space.partitions[t];
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            Rational terminal_min = u[T][atoms[a][0]];
            for (int w : atoms[a]) terminal_min = min(terminal_min, u[T][w]);
            Rational gap = terminal_min - u[t][atoms[a][0]];
            if (gap.sign() > 0) {
                StickyWitness wit;
                wit.t = t;
                wit.atom = static_cast<int>(a);
                wit.epsilon = gap / Rational(2);
                return {false, std::move(wit)};
            }
        }
    }
    return {true, std::nullopt};
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
    if (points.empty()) throw std::invalid_argument("PiecewiseLinear: no breakpoints");
    if (x <= points.front().x) return points.front().y;
    if (x >= points.back().x) return points.back().y;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (x <= points[i].x) {
            const Pt2 &a = points[i - 1], &b = points[i];
            return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
        }
    }
    return points.back().y;
}

PiecewiseLinear PiecewiseLinear::identity() {
    // linear on a wide window, clamped outside; wide enough for every walk here
    return {{{Rational(-1000), Rational(-1000)}, {Rational(1000), Rational(1000)}}};
}

PiecewiseLinear PiecewiseLinear::absolute() {
    return {{{Rational(-1000), Rational(1000)},
             {Rational(0), Rational(0)},
             {Rational(1000), Rational(1000)}}};
}

Grid<Rational> running_max(const Grid<Rational>& x,
                           const std::function<Rational(const Rational&)>& f) {
    Grid<Rational> u(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        u[t].resize(x[t].size());
        for (std::size_t w = 0; w < x[t].size(); ++w) {
            Rational v = f(x[t][w]);
            u[t][w] = t == 0 ? v : max(u[t - 1][w], v);
        }
    }
    return u;
}

Grid<Rational> visit_functional(const Grid<Rational>& x, const std::vector<Rational>& sites,
                                const std::vector<Rational>& increments) {
    if (increments.size() != x.size())
        throw std::invalid_argument("visit_functional: one increment per time step required");
    for (const auto& inc : increments) {
        if (inc.sign() < 0)
            throw std::invalid_argument("visit_functional: increments must be nonnegative");
    }
    auto in_sites = [&](const Rational& v) {
        for (const auto& s : sites) {
            if (s == v) return true;
        }
        return false;
    };
    Grid<Rational> u(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        u[t].resize(x[t].size());
        for (std::size_t w = 0; w < x[t].size(); ++w) {
            Rational prev = t == 0 ? Rational(0) : u[t - 1][w];
            u[t][w] = in_sites(x[t][w]) ? prev + increments[t] : prev;
        }
    }
    return u;
}

Grid<Rational> integral_functional(const Grid<Rational>& x,
                                   const std::function<Rational(const Rational&)>& f,
                                   const Rational& dt) {
    if (dt.sign() <= 0) throw std::invalid_argument("integral_functional: dt must be positive");
    Grid<Rational> u(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        u[t].resize(x[t].size());
        for (std::size_t w = 0; w < x[t].size(); ++w) {
            Rational term = f(x[t][w]);
            if (term.sign() < 0)
                throw std::invalid_argument("integral_functional: f must be nonnegative");
            u[t][w] = (t == 0 ? Rational(0) : u[t - 1][w]) + term * dt;
        }
    }
    return u;
}

Grid<Polytope2> convex_hull_process(const Grid<Pt2>& x) {
    Grid<Polytope2> u(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        u[t].resize(x[t].size());
        for (std::size_t w = 0; w < x[t].size(); ++w) {
            Polytope2 pt = Polytope2::point(x[t][w]);
            u[t][w] = t == 0 ? pt : poly_join(u[t - 1][w], pt);
        }
    }
    return u;
}

Grid<SetValue> visited_sites_process(const PowerSetLattice& lat, const Grid<int>& site_index) {
    Grid<SetValue> u(site_index.size());
    for (std::size_t t = 0; t < site_index.size(); ++t) {
        u[t].resize(site_index[t].size());
        for (std::size_t w = 0; w < site_index[t].size(); ++w) {
            const int idx[1] = {site_index[t][w]};
            SetValue site = lat.from_indices(idx);
            u[t][w] = t == 0 ? site : lat.join(u[t - 1][w], site);
        }
    }
    return u;
}

}  // namespace condinf
