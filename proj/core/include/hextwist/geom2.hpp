#pragma once

// Exact convex geometry in the plane chart (x, v). The v-coordinate is the
// sheared vertical axis: the physical point is (x, v*sqrt(3)), so every
// polygon here has rational vertices and rational (v-unit) area. Physical
// areas are sqrt(3) times the v-unit values.

#include <iosfwd>
#include <vector>

#include "hextwist/rat.hpp"

namespace hextwist {

struct Point2 {
  Rat x;
  Rat v;

  bool operator==(const Point2& o) const { return x == o.x && v == o.v; }
  bool operator!=(const Point2& o) const { return !(*this == o); }
};

// Lexicographic order (x first, then v); used for canonical vertex rotation.
bool lex_less(const Point2& a, const Point2& b);

// Cross product of (b - a) x (c - a); positive means a->b->c turns left.
Rat cross2(const Point2& a, const Point2& b, const Point2& c);

std::ostream& operator<<(std::ostream& os, const Point2& p);

// A convex polygon with counter-clockwise vertices, or the empty set.
// Canonical form: no three collinear vertices, and the vertex list is
// rotated so the lexicographically smallest vertex comes first. Zero-area
// sets (points, segments) are represented as empty: cells are open sets and
// their boundaries never carry dynamics.
class Poly2 {
 public:
  Poly2() = default;  // the empty set

  // Builds a polygon from a vertex loop in either orientation. Consecutive
  // duplicates and collinear vertices are removed; clockwise input is
  // reversed. Throws GeometryError if fewer than 3 effective vertices
  // remain, the loop is not convex, or the area is zero.
  static Poly2 from_vertices(std::vector<Point2> verts);

  bool is_empty() const { return verts_.empty(); }
  const std::vector<Point2>& verts() const { return verts_; }
  std::size_t size() const { return verts_.size(); }

  // +1 strictly inside, 0 on the boundary, -1 strictly outside.
  int side_of(const Point2& p) const;

  // Average of the vertices: an exact interior point of a convex polygon.
  Point2 interior_point() const;

  Poly2 translated(const Rat& dx, const Rat& dv) const;

  bool operator==(const Poly2& o) const { return verts_ == o.verts_; }
  bool operator!=(const Poly2& o) const { return !(*this == o); }

 private:
  std::vector<Point2> verts_;

  // Shared normalization used by clipping: returns the empty polygon (not an
  // error) when the loop degenerates to zero area.
  static Poly2 normalize_loop(std::vector<Point2> verts);

  friend Poly2 clip_halfplane(const Poly2&, const Rat&, const Rat&, const Rat&);
  friend Poly2 hull2(std::vector<Point2> pts);
};

std::ostream& operator<<(std::ostream& os, const Poly2& p);

// p intersected with the halfplane a*x + b*v <= c. Throws InvalidArgument if
// (a, b) is the zero normal. Returns empty iff the intersection has zero
// area.
Poly2 clip_halfplane(const Poly2& p, const Rat& a, const Rat& b, const Rat& c);

// Exact convex intersection; empty iff the common area is zero.
Poly2 poly_intersect(const Poly2& p, const Poly2& q);

// Shoelace area in v-units (physical area = sqrt(3) x result). The Poly2
// overload returns 0 for the empty set; the raw-loop overload throws
// GeometryError on degenerate input with fewer than 3 vertices.
Rat poly_area(const Poly2& p);
Rat poly_area(const std::vector<Point2>& verts);

// Convex hull (monotone chain); empty if the hull has zero area.
Poly2 hull2(std::vector<Point2> pts);

// Exact set difference p \ q decomposed into interior-disjoint convex
// pieces (successive clipping against the edges of q). Deterministic.
std::vector<Poly2> poly_subtract(const Poly2& p, const Poly2& q);

// Lexicographic order on canonical vertex lists (empty first).
bool poly2_less(const Poly2& a, const Poly2& b);

}  // namespace hextwist
