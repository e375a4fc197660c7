#pragma once

// Exact convex geometry for parameter-space polytopes living in (x, v, s):
// two torus-chart coordinates plus the parameter axis. Everything is
// rational; volumes are reported in v-units (physical = sqrt(3) x value).

#include <array>
#include <iosfwd>
#include <vector>

#include "hextwist/geom2.hpp"
#include "hextwist/rat.hpp"

namespace hextwist {

struct Point3 {
  Rat x;
  Rat v;
  Rat s;

  bool operator==(const Point3& o) const {
    return x == o.x && v == o.v && s == o.s;
  }
  bool operator!=(const Point3& o) const { return !(*this == o); }
};

bool lex_less(const Point3& a, const Point3& b);
std::ostream& operator<<(std::ostream& os, const Point3& p);

// The constraint nx*x + nv*v + ns*s <= offset.
struct HalfSpace3 {
  Rat nx;
  Rat nv;
  Rat ns;
  Rat offset;

  Rat eval(const Point3& p) const {
    return nx * p.x + nv * p.v + ns * p.s - offset;
  }
  bool zero_normal() const {
    return nx.is_zero() && nv.is_zero() && ns.is_zero();
  }
};

// A convex polytope, the empty set, or a flagged flat (zero-volume) polygon
// embedded in 3-space. Canonical form: vertices sorted lexicographically,
// every vertex extreme, faces stored as vertex-index cycles with outward
// orientation, each cycle rotated so its smallest index comes first, and the
// face list sorted. Equality is structural on the canonical form.
class Polytope3 {
 public:
  Polytope3() = default;  // the empty set

  bool is_empty() const { return verts_.empty(); }
  bool is_flat() const { return flat_; }
  const std::vector<Point3>& verts() const { return verts_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  // Deduplicated undirected edges as index pairs (i < j).
  std::vector<std::pair<int, int>> edges() const;

  // Average of the vertices: an exact interior point (relative interior for
  // flat polytopes).
  Point3 interior_point() const;

  bool operator==(const Polytope3& o) const {
    return flat_ == o.flat_ && verts_ == o.verts_ && faces_ == o.faces_;
  }
  bool operator!=(const Polytope3& o) const { return !(*this == o); }

  // Canonicalizes vertex order, remaps the given outward-oriented face
  // cycles, and returns the assembled polytope. Used by the geometry
  // algorithms; input must already satisfy the convexity invariants.
  static Polytope3 assemble(std::vector<Point3> verts,
                            std::vector<std::vector<int>> faces, bool flat);

 private:
  std::vector<Point3> verts_;
  std::vector<std::vector<int>> faces_;
  bool flat_ = false;
};

std::ostream& operator<<(std::ostream& os, const Polytope3& p);

// Exact convex hull. Input: at least 4 distinct points (throws GeometryError
// otherwise). Coplanar input yields the flagged flat polytope of volume 0.
// Output vertices are exactly the extreme points of the input.
Polytope3 hull3(const std::vector<Point3>& points);

// Builds the flat polytope spanned by coplanar points (at least 3 distinct,
// not all collinear). Used for degenerate hulls and slabs of zero height.
Polytope3 flat_from_coplanar(const std::vector<Point3>& points);

// Exact intersection with a halfspace; canonical output; Empty iff the
// intersection has zero volume. Throws InvalidArgument on a zero normal.
Polytope3 clip_halfspace3(const Polytope3& P, const HalfSpace3& h);

// Exact volume in v-units via fan triangulation over outward faces.
Rat volume3(const Polytope3& P);

// Cross-section {(x, v) : (x, v, s0) in P}; Empty iff it has zero area.
Poly2 slice_at_s(const Polytope3& P, const Rat& s0);

// Minimum and maximum of the s-coordinate over the vertices.
std::pair<Rat, Rat> s_range(const Polytope3& P);

// Affine map p -> M p + t with rational 3x3 matrix M (det != 0). Face
// combinatorics are preserved; cycles are reversed when det < 0.
struct Affine3 {
  std::array<std::array<Rat, 3>, 3> m;
  std::array<Rat, 3> t;

  Point3 apply(const Point3& p) const;
  Rat det() const;
};

Polytope3 apply_affine(const Polytope3& P, const Affine3& f);

// Supporting halfspaces of the facets (outward normals from the stored
// cycle orientation). Requires a full-dimensional polytope.
std::vector<HalfSpace3> facet_halfspaces(const Polytope3& P);

// Exact convex intersection by successive facet clipping; Empty iff the
// intersection has zero volume.
Polytope3 intersect3(const Polytope3& P, const Polytope3& Q);

// Exact set difference P \ Q as interior-disjoint convex pieces.
std::vector<Polytope3> subtract3(const Polytope3& P, const Polytope3& Q);

}  // namespace hextwist
