#include "condinf/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace condinf {

bool lex_less(const Pt2& a, const Pt2& b) {
    auto cx = a.x <=> b.x;
    if (cx != 0) return cx < 0;
    return a.y < b.y;
}

Rational cross(const Pt2& a, const Pt2& b, const Pt2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

Rational dot(const Pt2& a, const Pt2& b) { return a.x * b.x + a.y * b.y; }

Pt2 sub(const Pt2& a, const Pt2& b) { return {a.x - b.x, a.y - b.y}; }

Pt2 lerp(const Pt2& p, const Pt2& q, const Rational& t) {
    return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

// Intersection of segment (p,q) with the line through (u,v); caller
// guarantees p and q lie strictly on opposite sides.
Pt2 line_cut(const Pt2& p, const Pt2& q, const Pt2& u, const Pt2& v) {
    Rational cp = cross(u, v, p);
    Rational cq = cross(u, v, q);
    return lerp(p, q, cp / (cp - cq));
}

}  // namespace

Polytope2 Polytope2::plane() {
    Polytope2 p;
    p.plane_ = true;
    return p;
}

Polytope2 Polytope2::point(Pt2 p) {
    Polytope2 out;
    out.verts_.push_back(std::move(p));
    return out;
}

Polytope2 Polytope2::hull(std::span<const Pt2> points) {
    std::vector<Pt2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope2 out;
    if (pts.empty()) return out;
    if (pts.size() <= 2) {
        out.verts_ = std::move(pts);
        return out;
    }

    // Andrew monotone chain. Strict turns only, so collinear interior points
    // are dropped and every stored vertex is extreme. The sorted input makes
    // the result counterclockwise starting from the lex-least vertex.
    std::vector<Pt2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point repeats the first
    if (h.size() == 2 && h[0] == h[1]) h.pop_back();
    if (h.size() == 2 && !lex_less(h[0], h[1])) std::swap(h[0], h[1]);
    out.verts_ = std::move(h);
    return out;
}

int Polytope2::dim() const {
    if (plane_) return 2;
    if (verts_.empty()) return -1;
    if (verts_.size() == 1) return 0;
    if (verts_.size() == 2) return 1;
    return 2;
}

bool Polytope2::contains_point(const Pt2& p) const {
    if (plane_) return true;
    switch (dim()) {
        case -1:
            return false;
        case 0:
            return verts_[0] == p;
        case 1: {
            if (cross(verts_[0], verts_[1], p).sign() != 0) return false;
            Pt2 d = sub(verts_[1], verts_[0]);
            Rational t = dot(sub(p, verts_[0]), d);
            return t.sign() >= 0 && t <= dot(d, d);
        }
        default: {
            const std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (cross(verts_[i], verts_[(i + 1) % n], p).sign() < 0) return false;
            }
            return true;
        }
    }
}

std::string Polytope2::str() const {
    if (plane_) return "plane";
    std::string s = "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ", ";
        s += "(" + verts_[i].x.str() + "," + verts_[i].y.str() + ")";
    }
    return s + "}";
}

bool poly_contains(const Polytope2& a, const Polytope2& b) {
    if (b.is_empty() || a.is_plane()) return true;
    if (b.is_plane() || a.is_empty()) return false;
    for (const auto& v : b.vertices()) {
        if (!a.contains_point(v)) return false;
    }
    return true;
}

namespace {

// Clip segment (p,q) to the closed intersection of half-planes given by the
// counterclockwise edges of `poly` (dim 2).
Polytope2 clip_segment_by_polygon(const Pt2& p, const Pt2& q, const Polytope2& poly) {
    Rational lo(0), hi(1);
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt2& u0 = v[i];
        const Pt2& u1 = v[(i + 1) % n];
        Rational cp = cross(u0, u1, p);
        Rational cq = cross(u0, u1, q);
        if (cp.sign() < 0 && cq.sign() < 0) return Polytope2::empty();
        if (cp.sign() >= 0 && cq.sign() >= 0) continue;
        Rational t = cp / (cp - cq);
        if (cp.sign() < 0) {
            lo = max(lo, t);
        } else {
            hi = min(hi, t);
        }
    }
    if (lo > hi) return Polytope2::empty();
    Pt2 a = lerp(p, q, lo), b = lerp(p, q, hi);
    std::array<Pt2, 2> pts{a, b};
    return Polytope2::hull(pts);
}

Polytope2 segment_intersect(const Polytope2& a, const Polytope2& b) {
    const Pt2 &p1 = a.vertices()[0], &q1 = a.vertices()[1];
    const Pt2 &p2 = b.vertices()[0], &q2 = b.vertices()[1];
    Pt2 d1 = sub(q1, p1), d2 = sub(q2, p2);
    Rational denom = d1.x * d2.y - d1.y * d2.x;
    if (denom.sign() != 0) {
        // generic crossing: solve p1 + t d1 = p2 + s d2
        Pt2 w = sub(p2, p1);
        Rational t = (w.x * d2.y - w.y * d2.x) / denom;
        Rational s = (w.x * d1.y - w.y * d1.x) / denom;
        if (t.sign() < 0 || t > Rational(1) || s.sign() < 0 || s > Rational(1))
            return Polytope2::empty();
        return Polytope2::point(lerp(p1, q1, t));
    }
    if (cross(p1, q1, p2).sign() != 0) return Polytope2::empty();  // parallel, distinct lines
    // collinear: intersect parameter ranges along a's direction
    Rational len2 = dot(d1, d1);
    Rational ta = dot(sub(p2, p1), d1) / len2;
    Rational tb = dot(sub(q2, p1), d1) / len2;
    Rational lo = max(Rational(0), min(ta, tb));
    Rational hi = min(Rational(1), max(ta, tb));
    if (lo > hi) return Polytope2::empty();
    std::array<Pt2, 2> pts{lerp(p1, q1, lo), lerp(p1, q1, hi)};
    return Polytope2::hull(pts);
}

// Sutherland-Hodgman clip of convex subject polygon by the counterclockwise
// edges of `clip` (both dim 2). Exact rational arithmetic keeps touching and
// degenerate intersections correct; the result is canonicalized by hull().
Polytope2 polygon_intersect(const Polytope2& subject, const Polytope2& clip) {
    std::vector<Pt2> cur = subject.vertices();
    const auto& cv = clip.vertices();
    const std::size_t cn = cv.size();
    for (std::size_t e = 0; e < cn && !cur.empty(); ++e) {
        const Pt2& u0 = cv[e];
        const Pt2& u1 = cv[(e + 1) % cn];
        std::vector<Pt2> next;
        const std::size_t n = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Pt2& prev = cur[(i + n - 1) % n];
            const Pt2& p = cur[i];
            const bool p_in = cross(u0, u1, p).sign() >= 0;
            const bool prev_in = cross(u0, u1, prev).sign() >= 0;
            if (p_in) {
                if (!prev_in) next.push_back(line_cut(prev, p, u0, u1));
                next.push_back(p);
            } else if (prev_in) {
                next.push_back(line_cut(prev, p, u0, u1));
            }
        }
        cur = std::move(next);
    }
    return Polytope2::hull(cur);
}

}  // namespace

Polytope2 poly_meet(const Polytope2& a, const Polytope2& b) {
    if (a.is_plane()) return b;
    if (b.is_plane()) return a;
    if (a.is_empty() || b.is_empty()) return Polytope2::empty();
    if (a.dim() == 0) return b.contains_point(a.vertices()[0]) ? a : Polytope2::empty();
    if (b.dim() == 0) return a.contains_point(b.vertices()[0]) ? b : Polytope2::empty();
    if (a.dim() == 1 && b.dim() == 1) return segment_intersect(a, b);
    if (a.dim() == 1) return clip_segment_by_polygon(a.vertices()[0], a.vertices()[1], b);
    if (b.dim() == 1) return clip_segment_by_polygon(b.vertices()[0], b.vertices()[1], a);
    return polygon_intersect(a, b);
}

Polytope2 poly_join(const Polytope2& a, const Polytope2& b) {
    if (a.is_plane() || b.is_plane()) return Polytope2::plane();
    std::vector<Pt2> pts = a.vertices();
    pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
    return Polytope2::hull(pts);
}

AffineHull2 affine_hull(const Polytope2& a) {
    AffineHull2 h;
    h.dim = a.dim();
    if (h.dim == 0 || h.dim == 1) {
        h.anchor[0] = a.vertices()[0].x.to_double();
        h.anchor[1] = a.vertices()[0].y.to_double();
    }
    if (h.dim == 1) {
        double dx = a.vertices()[1].x.to_double() - h.anchor[0];
        double dy = a.vertices()[1].y.to_double() - h.anchor[1];
        double len = std::hypot(dx, dy);
        h.direction[0] = dx / len;
        h.direction[1] = dy / len;
    }
    return h;
}

namespace {

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

struct GaussRule {
    std::vector<double> nodes;    // on [0, 1]
    std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre nodes by Newton iteration on P_n; deterministic and seedless.
GaussRule gauss_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[i] = 0.5 * (1.0 + x);
        r.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // already halved for [0,1]
    }
    return r;
}

const GaussRule& rule8() {
    static const GaussRule r = gauss_rule(8);
    return r;
}
const GaussRule& rule16() {
    static const GaussRule r = gauss_rule(16);
    return r;
}

double gauss_density(double x, double y) {
    return std::exp(-0.5 * (x * x + y * y)) / (2.0 * std::numbers::pi);
}

struct Tri {
    double ax, ay, bx, by, cx, cy;
};

// Tensor quadrature over a triangle via the Duffy-style substitution
// p(s, w) = a + s (b - a) + (1 - s) w (c - a), Jacobian (1 - s) |cross|.
double tri_quad(const Tri& t, const GaussRule& g) {
    const double ux = t.bx - t.ax, uy = t.by - t.ay;
    const double vx = t.cx - t.ax, vy = t.cy - t.ay;
    const double area2 = std::abs(ux * vy - uy * vx);
    if (area2 == 0.0) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double s = g.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
            const double w = g.nodes[j];
            const double x = t.ax + s * ux + (1.0 - s) * w * vx;
            const double y = t.ay + s * uy + (1.0 - s) * w * vy;
            row += g.weights[j] * gauss_density(x, y);
        }
        total += g.weights[i] * (1.0 - s) * row;
    }
    return total * area2;
}

double tri_adaptive(const Tri& t, double tol, int depth) {
    const double coarse = tri_quad(t, rule8());
    const double fine = tri_quad(t, rule16());
    if (std::abs(fine - coarse) <= tol || depth >= 14) return fine;
    const double mabx = 0.5 * (t.ax + t.bx), maby = 0.5 * (t.ay + t.by);
    const double mbcx = 0.5 * (t.bx + t.cx), mbcy = 0.5 * (t.by + t.cy);
    const double macx = 0.5 * (t.ax + t.cx), macy = 0.5 * (t.ay + t.cy);
    const double q = tol / 4.0;
    return tri_adaptive({t.ax, t.ay, mabx, maby, macx, macy}, q, depth + 1) +
           tri_adaptive({mabx, maby, t.bx, t.by, mbcx, mbcy}, q, depth + 1) +
           tri_adaptive({macx, macy, mbcx, mbcy, t.cx, t.cy}, q, depth + 1) +
           tri_adaptive({mabx, maby, mbcx, mbcy, macx, macy}, q, depth + 1);
}

}  // namespace

double gaussian_mass_polygon(const Polytope2& a, double tol) {
    if (a.dim() != 2 || a.is_plane())
        throw std::invalid_argument("gaussian_mass_polygon: polygon input required");
    const auto& v = a.vertices();
    const std::size_t n = v.size();
    double cx = 0.0, cy = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = v[i].x.to_double();
        ys[i] = v[i].y.to_double();
        cx += xs[i];
        cy += ys[i];
    }
    cx /= static_cast<double>(n);
    cy /= static_cast<double>(n);
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        mass += tri_adaptive({cx, cy, xs[i], ys[i], xs[j], ys[j]}, tol / static_cast<double>(n),
                             0);
    }
    return mass;
}

double phi_convex(const Polytope2& a) {
    if (a.is_plane()) return 3.0;  // dim 2 + full conditional mass
    switch (a.dim()) {
        case -1:
            return 0.0;
        case 0:
            return 1.0;
        case 1: {
            // Conditioned on the carrying line, the standard Gaussian is a
            // one-dimensional standard Gaussian centered at the foot of the
            // perpendicular from the origin.
            AffineHull2 h = affine_hull(a);
            const double px = h.anchor[0], py = h.anchor[1];
            const double ux = h.direction[0], uy = h.direction[1];
            const double len = std::hypot(a.vertices()[1].x.to_double() - px,
                                          a.vertices()[1].y.to_double() - py);
            const double tstar = -(px * ux + py * uy);
            return 1.0 + (std_normal_cdf(len - tstar) - std_normal_cdf(-tstar));
        }
        default:
            return 2.0 + gaussian_mass_polygon(a);
    }
}

}  // namespace condinf
