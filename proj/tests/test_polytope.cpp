#include <cmath>
#include <vector>

#include "doctest.h"

#include "condinf/polytope.hpp"
#include "condinf/properties.hpp"
#include "condinf/rng.hpp"

using namespace condinf;

namespace {

Pt2 pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

// Caratheodory membership in the plane: p lies in conv(S) iff it coincides
// with a point, lies on a segment, or lies in a triangle of points of S.
// Deliberately naive; the oracle for hull and containment tests.
bool brute_in_hull(const Pt2& p, const std::vector<Pt2>& s) {
    auto on_segment = [&](const Pt2& a, const Pt2& b) {
        if (cross(a, b, p).sign() != 0) return false;
        Rational dx = b.x - a.x, dy = b.y - a.y;
        Rational t = (p.x - a.x) * dx + (p.y - a.y) * dy;
        return t.sign() >= 0 && t <= dx * dx + dy * dy;
    };
    auto in_triangle = [&](const Pt2& a, const Pt2& b, const Pt2& c) {
        if (cross(a, b, c).sign() == 0) return false;  // degenerate; segments cover it
        const int s1 = cross(a, b, p).sign();
        const int s2 = cross(b, c, p).sign();
        const int s3 = cross(c, a, p).sign();
        const bool no_neg = s1 >= 0 && s2 >= 0 && s3 >= 0;
        const bool no_pos = s1 <= 0 && s2 <= 0 && s3 <= 0;
        return no_neg || no_pos;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == p) return true;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (on_segment(s[i], s[j])) return true;
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                if (in_triangle(s[i], s[j], s[k])) return true;
            }
        }
    }
    return false;
}

// extreme-point filter: keep p iff it is not in the hull of the others
std::vector<Pt2> brute_extreme_points(std::vector<Pt2> s) {
    std::sort(s.begin(), s.end(), lex_less);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Pt2> extreme;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<Pt2> others;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i) others.push_back(s[j]);
        }
        if (!brute_in_hull(s[i], others)) extreme.push_back(s[i]);
    }
    return extreme;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    double acc = f(a) + f(b);
    const double h = (b - a) / n;
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("hull canonical forms") {
    CHECK(Polytope2::hull(std::vector<Pt2>{}).is_empty());
    CHECK(Polytope2::hull(std::vector<Pt2>{}).dim() == -1);

    auto point = Polytope2::hull(std::vector<Pt2>{pt(2, 3), pt(2, 3)});
    CHECK(point.dim() == 0);
    CHECK(point.vertices().size() == 1);

    // collinear input collapses to the extreme segment
    auto seg = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(2, 0), pt(1, 0)});
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices() == std::vector<Pt2>{pt(0, 0), pt(2, 0)});

    // interior points are dropped
    auto tri = Polytope2::hull(
        std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(0, 1), {Rational(1, 4), Rational(1, 4)}});
    CHECK(tri.dim() == 2);
    CHECK(tri.vertices() == std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(0, 1)});

    // canonical: counterclockwise, lexicographically least vertex first
    auto square = Polytope2::hull(std::vector<Pt2>{pt(1, 1), pt(0, 1), pt(1, 0), pt(0, 0)});
    CHECK(square.vertices() == std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});

    // idempotent on its own vertex list
    CHECK(Polytope2::hull(square.vertices()) == square);
}

TEST_CASE("hull equals the brute-force extreme point filter on seeded inputs") {
    Rng rng(41);
    for (int i = 0; i < 1500; ++i) {
        std::vector<Pt2> pts;
        const int n = static_cast<int>(rng.below(8));
        for (int k = 0; k < n; ++k) pts.push_back(pt(rng.range(-3, 3), rng.range(-3, 3)));
        auto hull = Polytope2::hull(pts);
        auto expected = brute_extreme_points(pts);
        std::vector<Pt2> got = hull.vertices();
        std::sort(got.begin(), got.end(), lex_less);
        CHECK(got == expected);
        // every input point lies in the hull
        for (const auto& p : pts) CHECK(hull.contains_point(p));
    }
}

TEST_CASE("join of a square and an outside point, against the extreme-point filter") {
    auto square = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    auto joined = poly_join(square, Polytope2::point(pt(2, 0)));
    // five candidate vertices, four survive: (1,0) lands on the edge
    auto expected = brute_extreme_points({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), pt(2, 0)});
    CHECK(expected == std::vector<Pt2>{pt(0, 0), pt(0, 1), pt(1, 1), pt(2, 0)});
    CHECK(joined.vertices() == std::vector<Pt2>{pt(0, 0), pt(2, 0), pt(1, 1), pt(0, 1)});

    CHECK(poly_join(Polytope2::point(pt(0, 0)), Polytope2::point(pt(1, 1))).dim() == 1);
    CHECK(poly_join(square, Polytope2::empty()) == square);
}

TEST_CASE("meet of overlapping unit squares, against a half-plane oracle") {
    auto a = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    auto b = Polytope2::hull(std::vector<Pt2>{{Rational(1, 2), Rational(1, 2)},
                                              {Rational(3, 2), Rational(1, 2)},
                                              {Rational(3, 2), Rational(3, 2)},
                                              {Rational(1, 2), Rational(3, 2)}});
    // oracle: both squares as half-plane systems; candidate vertices are all
    // pairwise edge-line intersections plus original vertices, filtered
    struct HalfPlane {
        Pt2 u, v;  // interior = left of u->v
    };
    std::vector<HalfPlane> planes;
    for (const auto* poly : {&a, &b}) {
        const auto& vs = poly->vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            planes.push_back({vs[i], vs[(i + 1) % vs.size()]});
        }
    }
    std::vector<Pt2> candidates;
    for (const auto* poly : {&a, &b}) {
        for (const auto& v : poly->vertices()) candidates.push_back(v);
    }
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const Pt2 d1{planes[i].v.x - planes[i].u.x, planes[i].v.y - planes[i].u.y};
            const Pt2 d2{planes[j].v.x - planes[j].u.x, planes[j].v.y - planes[j].u.y};
            const Rational denom = d1.x * d2.y - d1.y * d2.x;
            if (denom.sign() == 0) continue;
            const Pt2 w{planes[j].u.x - planes[i].u.x, planes[j].u.y - planes[i].u.y};
            const Rational t = (w.x * d2.y - w.y * d2.x) / denom;
            candidates.push_back({planes[i].u.x + t * d1.x, planes[i].u.y + t * d1.y});
        }
    }
    std::vector<Pt2> feasible;
    for (const auto& c : candidates) {
        bool inside = true;
        for (const auto& hp : planes) inside = inside && cross(hp.u, hp.v, c).sign() >= 0;
        if (inside) feasible.push_back(c);
    }
    auto oracle = Polytope2::hull(feasible);

    auto met = poly_meet(a, b);
    CHECK(met == oracle);
    CHECK(met.vertices() == std::vector<Pt2>{{Rational(1, 2), Rational(1, 2)},
                                             {Rational(1), Rational(1, 2)},
                                             {Rational(1), Rational(1)},
                                             {Rational(1, 2), Rational(1)}});
}

TEST_CASE("meet edge cases") {
    auto a = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    CHECK(poly_meet(a, a) == a);

    auto left = Polytope2::hull(std::vector<Pt2>{pt(-3, 0), pt(-2, 0), pt(-2, 1)});
    auto right = Polytope2::hull(std::vector<Pt2>{pt(2, 0), pt(3, 0), pt(2, 1)});
    CHECK(poly_meet(left, right).is_empty());

    // touching squares meet in a shared edge
    auto b = Polytope2::hull(std::vector<Pt2>{pt(1, 0), pt(2, 0), pt(2, 1), pt(1, 1)});
    auto shared = poly_meet(a, b);
    CHECK(shared.dim() == 1);
    CHECK(shared.vertices() == std::vector<Pt2>{pt(1, 0), pt(1, 1)});

    // collinear overlapping segments
    auto s1 = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(4, 0)});
    auto s2 = Polytope2::hull(std::vector<Pt2>{pt(2, 0), pt(6, 0)});
    CHECK(poly_meet(s1, s2).vertices() == std::vector<Pt2>{pt(2, 0), pt(4, 0)});

    // crossing segments meet in a point
    auto d1 = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(2, 2)});
    auto d2 = Polytope2::hull(std::vector<Pt2>{pt(0, 2), pt(2, 0)});
    CHECK(poly_meet(d1, d2) == Polytope2::point(pt(1, 1)));

    // parallel distinct segments miss
    auto p1 = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(2, 0)});
    auto p2 = Polytope2::hull(std::vector<Pt2>{pt(0, 1), pt(2, 1)});
    CHECK(poly_meet(p1, p2).is_empty());

    // plane and empty behave as top and bottom
    CHECK(poly_meet(Polytope2::plane(), a) == a);
    CHECK(poly_join(Polytope2::plane(), a) == Polytope2::plane());
    CHECK(poly_meet(Polytope2::empty(), a).is_empty());
}

TEST_CASE("meet and join against the lattice-point membership oracle") {
    Rng rng(4242);
    PolytopeLattice lat;
    for (int i = 0; i < 2000; ++i) {
        Polytope2 a = sample_polytope(rng, 3, 6);
        Polytope2 b = sample_polytope(rng, 3, 6);
        Polytope2 met = poly_meet(a, b);
        Polytope2 joined = poly_join(a, b);
        CHECK(poly_contains(joined, a));
        CHECK(poly_contains(a, met));
        for (int x = -3; x <= 3; ++x) {
            for (int y = -3; y <= 3; ++y) {
                const Pt2 p = pt(x, y);
                CHECK(met.contains_point(p) == (a.contains_point(p) && b.contains_point(p)));
                if (a.contains_point(p) || b.contains_point(p)) {
                    CHECK(joined.contains_point(p));
                }
            }
        }
    }
}

TEST_CASE("containment") {
    auto square = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    auto diag = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 1)});
    CHECK(poly_contains(square, diag));
    CHECK(!poly_contains(diag, square));
    CHECK(poly_contains(Polytope2::empty(), Polytope2::empty()));
    CHECK(poly_contains(square, Polytope2::empty()));
    CHECK(!poly_contains(Polytope2::empty(), diag));

    // the centroid, checked independently through barycentric coordinates
    auto tri = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(3, 0), pt(0, 3)});
    const Pt2 centroid{Rational(1), Rational(1)};
    {
        const Pt2 a = tri.vertices()[0], b = tri.vertices()[1], c = tri.vertices()[2];
        const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        const Rational s =
            ((centroid.x - a.x) * (c.y - a.y) - (centroid.y - a.y) * (c.x - a.x)) / det;
        const Rational t =
            ((b.x - a.x) * (centroid.y - a.y) - (b.y - a.y) * (centroid.x - a.x)) / det;
        CHECK(s.sign() >= 0);
        CHECK(t.sign() >= 0);
        CHECK(s + t <= Rational(1));
    }
    CHECK(poly_contains(tri, Polytope2::point(centroid)));
}

TEST_CASE("phi on low-dimensional sets") {
    CHECK(phi_convex(Polytope2::empty()) == 0.0);
    CHECK(phi_convex(Polytope2::point(pt(5, -7))) == 1.0);
    CHECK(phi_convex(Polytope2::plane()) == 3.0);

    // segment mass against direct numeric integration of the conditional
    // one-dimensional Gaussian along the carrying line
    auto seg = Polytope2::hull(std::vector<Pt2>{pt(1, -5), pt(1, 5)});
    auto density = [](double t) { return std::exp(-0.5 * (1.0 + t * t)); };
    const double numer = simpson([&](double t) { return density(t); }, -5, 5, 4000);
    const double denom = simpson([&](double t) { return density(t); }, -60, 60, 64000);
    const double oracle = numer / denom;
    CHECK(phi_convex(seg) == doctest::Approx(1.0 + oracle).epsilon(1e-9));
}

TEST_CASE("phi of polygons against independent integration") {
    // right triangle x in [0,1], 0 <= y <= 1-x: rows integrate to
    // phi_1d(x) * (Phi(1-x) - Phi(0))
    auto tri = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(0, 1)});
    auto phi1 = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); };
    auto cdf = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    const double oracle =
        simpson([&](double x) { return phi1(x) * (cdf(1.0 - x) - cdf(0.0)); }, 0.0, 1.0, 20000);
    CHECK(gaussian_mass_polygon(tri) == doctest::Approx(oracle).epsilon(1e-8));

    // large square: mass within 1e-6 of the product of one-dimensional masses
    auto big = Polytope2::hull(
        std::vector<Pt2>{pt(-10, -10), pt(10, -10), pt(10, 10), pt(-10, 10)});
    const double side = std::erf(10.0 / std::sqrt(2.0));
    const double mass = gaussian_mass_polygon(big);
    CHECK(std::abs(mass - side * side) < 1e-6);
    CHECK(phi_convex(big) == doctest::Approx(2.0 + mass));
}

TEST_CASE("phi monotonicity across dimension jumps and certified gaps") {
    auto outcome = run_phi_monotonicity("polytope2", 5, 300);
    CHECK(outcome.failures == 0);
}

TEST_CASE("affine hull dimensions") {
    CHECK(affine_hull(Polytope2::empty()).dim == -1);
    CHECK(affine_hull(Polytope2::point(pt(1, 2))).dim == 0);
    auto seg = Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(3, 4)});
    auto h = affine_hull(seg);
    CHECK(h.dim == 1);
    CHECK(h.direction[0] == doctest::Approx(0.6));
    CHECK(h.direction[1] == doctest::Approx(0.8));
    CHECK(affine_hull(Polytope2::hull(std::vector<Pt2>{pt(0, 0), pt(1, 0), pt(0, 1)})).dim == 2);

    // dim(aff(.)) is monotone under inclusion on seeded pairs
    Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        Polytope2 a = sample_polytope(rng);
        Polytope2 b = poly_join(a, sample_polytope(rng));
        CHECK(affine_hull(a).dim <= affine_hull(b).dim);
    }
}

}  // TEST_SUITE
