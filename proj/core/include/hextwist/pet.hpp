#pragma once

// The polytope-exchange engine: the three sheared base translations, their
// composition (the tetrahedral twist), symbolic-in-s cell bundles over a
// parameter interval, instantiation at rational s, exact orbits, first
// returns, periodic tiles and tilings.

#include <utility>
#include <vector>

#include "hextwist/geom2.hpp"
#include "hextwist/geom3.hpp"
#include "hextwist/rat.hpp"
#include "hextwist/torus.hpp"

namespace hextwist {

// Translation (A + B*s/2, C + D*s/2) in v-coordinates with integer entries;
// lattice corrections keep the entries integral.
struct TransVec {
  long A = 0;
  long B = 0;
  long C = 0;
  long D = 0;

  std::pair<Rat, Rat> eval(const Rat& s) const {
    return {Rat(A) + Rat(B) * s / Rat(2), Rat(C) + Rat(D) * s / Rat(2)};
  }
  TransVec operator+(const TransVec& o) const {
    return {A + o.A, B + o.B, C + o.C, D + o.D};
  }
  TransVec operator-() const { return {-A, -B, -C, -D}; }
  bool operator==(const TransVec& o) const {
    return A == o.A && B == o.B && C == o.C && D == o.D;
  }
  bool operator!=(const TransVec& o) const { return !(*this == o); }
  bool operator<(const TransVec& o) const;
  bool is_zero() const { return A == 0 && B == 0 && C == 0 && D == 0; }
};

// The shear (x, v, s) -> (x + A + B*s/2, v + C + D*s/2, s); determinant 1.
Affine3 shear_of(const TransVec& w);

// One translation cell of a map instantiated at rational s. The evaluated
// translation (tx, tv) is authoritative; vec records the symbolic
// decomposition where one exists (merging can only mix vectors that
// evaluate equally at this s).
struct ConcretePiece {
  Poly2 domain;
  TransVec vec;
  Rat tx;
  Rat tv;
  int return_time = 1;
};

// A piecewise translation at a fixed rational parameter. Pieces are kept in
// a canonical order (domains sorted lexicographically), so structural
// equality compares partitions directly.
class ConcretePET {
 public:
  ConcretePET(Rat s, std::vector<ConcretePiece> pieces);

  const Rat& s() const { return s_; }
  const std::vector<ConcretePiece>& pieces() const { return pieces_; }

  // Index of the piece whose interior contains p (p is reduced first).
  // Throws BoundaryHit if p lies on a piece boundary.
  std::size_t locate(const Point2& p) const;

  // One exact step: p + translation of its piece, reduced mod the lattice.
  Point2 apply(const Point2& p) const;

  Rat domain_area() const;

  // Greedy convex merging of adjacent pieces carrying the same evaluated
  // translation and return time; yields maximal translation domains.
  ConcretePET merged() const;

  // Structural equality on the canonical form: same parameter and the same
  // (domain, evaluated translation, return time) piece lists.
  bool operator==(const ConcretePET& o) const {
    return s_ == o.s_ && equal_pieces(o);
  }

 private:
  bool equal_pieces(const ConcretePET& o) const;

  Rat s_;
  std::vector<ConcretePiece> pieces_;
};

// Base translation i in {0,1,2} instantiated at rational s in [0,1]:
// triangle cells with sign +1 except on the opposite triangle pattern, with
// lattice wraparound splits applied.
ConcretePET concrete_base_map(int i, const Rat& s);

// Refinement composition: "h after g" (domains of g refined by preimages of
// the domains of h; translations add).
ConcretePET concrete_compose(const ConcretePET& g, const ConcretePET& h);

// The tetrahedral twist at rational s: third after second after first base
// translation, merged to maximal translation domains.
ConcretePET concrete_tetra_pet(const Rat& s);

// One symbolic cell: a parameter-space polytope over the s-interval,
// carrying a single translation vector.
struct SymbolicCell {
  Polytope3 region;
  TransVec vec;
};

// A piecewise s-linear translation bundle over the interval [lo, hi]: for
// every rational s in the interior, the fiber slices of the cells partition
// the torus up to measure zero.
class SymbolicPET {
 public:
  SymbolicPET(Rat lo, Rat hi, std::vector<SymbolicCell> cells);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  const std::vector<SymbolicCell>& cells() const { return cells_; }

 private:
  Rat lo_, hi_;
  std::vector<SymbolicCell> cells_;
};

// Symbolic base translation over [lo, hi] within [0, 1]; cuts are linear in
// (x, v, s). Throws InvalidArgument on an empty interval.
SymbolicPET base_map(int i, const Rat& lo, const Rat& hi);

// Symbolic refinement composition ("h after g"), by exact 3D intersection.
SymbolicPET compose(const SymbolicPET& g, const SymbolicPET& h);

// The symbolic tetrahedral twist over [lo, hi].
SymbolicPET tetra_pet(const Rat& lo, const Rat& hi);

// Fiber instantiation at rational s in [lo, hi].
ConcretePET slice_to_concrete(const SymbolicPET& f, const Rat& s);

// First-return map to the union of the region polygons: each returned piece
// carries the accumulated translation and its return time; pieces partition
// the region up to measure zero. Throws ReturnBoundExceeded if a positive-
// area piece fails to return within max_steps. When merge is set, adjacent
// pieces with equal translation and return time are merged to maximal
// convex domains.
ConcretePET first_return(const ConcretePET& pet,
                         const std::vector<Poly2>& region, int max_steps,
                         bool merge = true);

// Periodic tile through p: the maximal convex cell of points sharing p's
// itinerary over one full period. Throws NotPeriodicWithin if the orbit
// does not close within n_max steps, BoundaryHit on seam points.
std::pair<int, Poly2> periodic_tile(const ConcretePET& pet, const Point2& p,
                                    int n_max);

struct TileEntry {
  int period = 0;
  Poly2 tile;
};

struct TilingResult {
  std::vector<TileEntry> tiles;
  Rat covered_area;
  bool complete = false;   // covered the full torus (v-area 2)
  int unresolved = 0;      // holes abandoned (budget / non-periodic seeds)
};

// Greedy periodic-tile cover with exact uncovered-region bookkeeping,
// deterministic for a given budget.
TilingResult periodic_tiling(const ConcretePET& pet, int max_tiles, int n_max);

// Exact equality of the two maps up to measure zero, independent of how
// either side is cut into pieces: the domains must cover the same total
// area and every positive-area overlap of pieces must carry identical
// evaluated translations.
bool maps_equal(const ConcretePET& a, const ConcretePET& b);

}  // namespace hextwist
