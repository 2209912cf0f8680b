#pragma once

#include <span>
#include <string>
#include <vector>

#include "condinf/rational.hpp"

namespace condinf {

struct Pt2 {
    Rational x;
    Rational y;
    bool operator==(const Pt2&) const = default;
};

/// Lexicographic (x, then y) order used for canonical vertex lists.
bool lex_less(const Pt2& a, const Pt2& b);

/// cross(b - a, c - a); > 0 means c lies strictly left of the ray a->b.
Rational cross(const Pt2& a, const Pt2& b, const Pt2& c);

/// Closed convex subset of the plane in canonical V-form.
///
/// Canonical vertex lists: [] for the empty set; one point; two lex-ordered
/// distinct endpoints for a segment; >= 3 extreme points in counterclockwise
/// order starting from the lexicographically least vertex for a polygon.
/// The whole plane (the lattice top) is a separate marker with no vertices.
class Polytope2 {
public:
    Polytope2() = default;  // empty set

    static Polytope2 empty() { return {}; }
    static Polytope2 plane();
    static Polytope2 point(Pt2 p);
    /// Convex hull of arbitrary points; produces the canonical form.
    static Polytope2 hull(std::span<const Pt2> points);

    bool is_empty() const { return !plane_ && verts_.empty(); }
    bool is_plane() const { return plane_; }
    /// -1 empty, 0 point, 1 segment, 2 polygon or plane.
    int dim() const;

    const std::vector<Pt2>& vertices() const { return verts_; }

    bool operator==(const Polytope2&) const = default;

    bool contains_point(const Pt2& p) const;

    std::string str() const;

private:
    bool plane_ = false;
    std::vector<Pt2> verts_;
};

/// B subseteq A, exact.
bool poly_contains(const Polytope2& a, const Polytope2& b);
/// Set intersection, exact and canonical.
Polytope2 poly_meet(const Polytope2& a, const Polytope2& b);
/// Closed convex hull of the union.
Polytope2 poly_join(const Polytope2& a, const Polytope2& b);

struct AffineHull2 {
    int dim = -1;            // -1, 0, 1, 2
    double anchor[2] = {0, 0};
    double direction[2] = {0, 0};  // unit vector, dim 1 only
};
AffineHull2 affine_hull(const Polytope2& a);

/// phi(A) = dim(aff(A)) + standard-Gaussian mass of A conditioned on aff(A).
/// Closed form (error function) for dims <= 1, adaptive triangle quadrature
/// for polygons (absolute error <= 1e-9).
double phi_convex(const Polytope2& a);

/// Gaussian mass of the polygon part only (dim-2 inputs), exposed for tests.
double gaussian_mass_polygon(const Polytope2& a, double tol = 1e-10);

/// CO(R^2) restricted to rational V-polytopes plus the plane marker.
struct PolytopeLattice {
    using Value = Polytope2;

    bool leq(const Value& a, const Value& b) const { return poly_contains(b, a); }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    Value join(const Value& a, const Value& b) const { return poly_join(a, b); }
    Value meet(const Value& a, const Value& b) const { return poly_meet(a, b); }
    Value sup(std::span<const Value> xs) const {
        Value acc = bottom();
        for (const auto& x : xs) acc = join(acc, x);
        return acc;
    }
    Value inf(std::span<const Value> xs) const {
        Value acc = top();
        for (const auto& x : xs) acc = meet(acc, x);
        return acc;
    }
    Value top() const { return Polytope2::plane(); }
    Value bottom() const { return Polytope2::empty(); }
    double phi(const Value& a) const { return phi_convex(a); }
};

}  // namespace condinf
