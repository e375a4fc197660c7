#pragma once

// The fixed geometric stage: the lattice, its fundamental parallelogram,
// the eight unit triangles tiling the torus, the projection identifying
// point-reflected pairs, and the parameter-dependent hexagon and Y-sets.

#include <array>
#include <vector>

#include "hextwist/geom2.hpp"
#include "hextwist/rat.hpp"

namespace hextwist {

// Lattice generated by (2, 0) and (1, -1) in v-coordinates (physically
// (2, 0) and (1, -sqrt(3))). The fundamental parallelogram has vertices
// +/-(-3/2, 1/2) and +/-(1/2, 1/2) and v-area 2.
struct Lattice {
  static constexpr long gen1_x = 2, gen1_v = 0;
  static constexpr long gen2_x = 1, gen2_v = -1;
};

// The four upward triangles A0..A3 and their point reflections about the
// origin; the eight interiors tile the torus, each with v-area 1/4.
struct TriangleSet {
  std::array<Poly2, 4> A;
  std::array<Poly2, 4> iA;

  std::vector<Poly2> all() const;
};

// Point reflection about the origin.
Point2 involution_iota(const Point2& p);
Poly2 involution_iota(const Poly2& p);

// Canonical representative inside the fundamental parallelogram, with the
// half-open convention alpha = (x+v)/2 in [-1/2, 1/2), v in (-1/2, 1/2]
// (so (1, -1/2) reduces to (0, 1/2)). Subtracts k1*(2,0) + k2*(1,-1).
Point2 reduce_mod(const Point2& p);

TriangleSet build_triangles();

// Identifies point-reflected pairs: p if v >= x, else -p.
Point2 project_pi(const Point2& p);

// Reflection about the vertical line x = -s/2 (a symmetry of the hexagon).
Point2 reflect_sigma(const Rat& s, const Point2& p);

// Semi-regular hexagon with v-vertices (0,0), ((1-s)/2,(1-s)/2),
// (1/2-s,1/2), (-1/2,1/2), (-(1+s)/2,(1-s)/2), (-s,0). Requires 0 < s < 1/2.
// Exact v-area: 1/4 + s(1-s)/2.
Poly2 build_hexagon(const Rat& s);

// The six pieces {A1, A3, H_s, iota(A1), iota(A3), iota(H_s)}, in that
// order; pairwise interior-disjoint (checked, GeometryError on breach).
std::vector<Poly2> build_Y(const Rat& s);

}  // namespace hextwist
