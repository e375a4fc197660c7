#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "hextwist/error.hpp"
#include "hextwist/pet.hpp"
#include "hextwist/torus.hpp"

using namespace hextwist;

namespace {

// The fundamental parallelogram as a single polygon.
Poly2 fundamental_parallelogram() {
  const Rat h(1, 2);
  return Poly2::from_vertices(
      {{-h, -h}, {Rat(3, 2), -h}, {h, h}, {Rat(-3, 2), h}});
}

ConcretePET make_identity(const Rat& s) {
  std::vector<ConcretePiece> ps;
  ps.push_back(
      ConcretePiece{fundamental_parallelogram(), TransVec{}, Rat(0), Rat(0), 1});
  return ConcretePET(s, std::move(ps));
}

// The half-interval conjugating involution: translate the upper half of the
// fundamental parallelogram down by (1/2, -1/2) and the lower half up by the
// opposite vector; both images land inside the parallelogram, so no lattice
// wrap is involved and the map is an exact two-piece involution.
ConcretePET make_phi_half(const Rat& s) {
  const Rat h(1, 2);
  const Poly2 upper = Poly2::from_vertices(
      {{Rat(-1), Rat(0)}, {Rat(1), Rat(0)}, {h, h}, {Rat(-3, 2), h}});
  const Poly2 lower = Poly2::from_vertices(
      {{-h, -h}, {Rat(3, 2), -h}, {Rat(1), Rat(0)}, {Rat(-1), Rat(0)}});
  std::vector<ConcretePiece> ps;
  ps.push_back(ConcretePiece{upper, TransVec{}, h, -h, 1});
  ps.push_back(ConcretePiece{lower, TransVec{}, -h, h, 1});
  return ConcretePET(s, std::move(ps));
}

ConcretePET concrete_triple_compose(const Rat& s) {
  return concrete_compose(
      concrete_compose(concrete_base_map(0, s), concrete_base_map(1, s)),
      concrete_base_map(2, s));
}

// A random point of the fundamental parallelogram with denominator-997
// coordinates (odd prime, so seam hits are unlikely but still guarded).
Point2 random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> k(0, 996);
  const Rat alpha(k(rng) - 498, 997);
  const Rat v(k(rng) - 498, 997);
  return Point2{Rat(2) * alpha - v, v};
}

void check_images_disjoint(const ConcretePET& f) {
  std::vector<Poly2> images;
  images.reserve(f.pieces().size());
  for (const ConcretePiece& pc : f.pieces())
    images.push_back(pc.domain.translated(pc.tx, pc.tv));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      CHECK(poly_area(poly_intersect(images[i], images[j])) == Rat(0));
}

}  // namespace

TEST_CASE("translation vector evaluation and algebra") {
  const TransVec w{1, -2, 0, 3};
  const auto [tx, tv] = w.eval(Rat(5, 13));
  CHECK(tx == Rat(1) - Rat(5, 13));
  CHECK(tv == Rat(15, 26));
  const TransVec sum = w + TransVec{0, 2, 1, -3};
  CHECK(sum == TransVec{1, 0, 1, 0});
  CHECK((-w) == TransVec{-1, 2, 0, -3});
  CHECK(TransVec{}.is_zero());
  CHECK_FALSE(w.is_zero());
}

TEST_CASE("base map translation examples at s=1/4") {
  const Rat s(1, 4);
  const ConcretePET f0 = concrete_base_map(0, s);

  // Positive sign away from the opposite triangle: one step moves the point
  // by (s, 0).  The probe point sits on the seam shared by two cells that
  // carry the same translation, so the merged map is defined there.
  const ConcretePET merged = f0.merged();
  const Point2 image = merged.apply(Point2{Rat(-3, 4), Rat(1, 4)});
  CHECK(image == Point2{Rat(-1, 2), Rat(1, 4)});

  // The triangle opposite to direction 0 carries the flipped sign: the
  // evaluated translation is (-s, 0) on the unwrapped part.
  const TriangleSet tris = build_triangles();
  const Point2 centroid = tris.A[3].interior_point();
  const std::size_t idx = f0.locate(centroid);
  CHECK(f0.pieces()[idx].tx == Rat(-1, 4));
  CHECK(f0.pieces()[idx].tv == Rat(0));
  CHECK(f0.apply(centroid) == Point2{centroid.x - Rat(1, 4), centroid.v});
}

TEST_CASE("all three base maps at s=0 act as the identity") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 3; ++i) {
    const ConcretePET f = concrete_base_map(i, Rat(0));
    CHECK(f.domain_area() == Rat(2));
    for (int trial = 0; trial < 50; ++trial) {
      const Point2 p = random_point(rng);
      try {
        const Point2 image = f.apply(p);
        CHECK(image == reduce_mod(p));
      } catch (const BoundaryHit&) {
      }
    }
  }
}

TEST_CASE("base maps preserve measure and have disjoint images") {
  for (const Rat& s : {Rat(1, 4), Rat(5, 13), Rat(3, 4)}) {
    for (int i = 0; i < 3; ++i) {
      const ConcretePET f = concrete_base_map(i, s);
      CHECK(f.domain_area() == Rat(2));
      check_images_disjoint(f);
      // Every stored translation evaluates to the authoritative pair.
      for (const ConcretePiece& pc : f.pieces()) {
        const auto [tx, tv] = pc.vec.eval(s);
        CHECK(pc.tx == tx);
        CHECK(pc.tv == tv);
      }
    }
  }
}

TEST_CASE("tetra map at s=0 is the identity on the fundamental domain") {
  const ConcretePET f = concrete_tetra_pet(Rat(0));
  REQUIRE(f.pieces().size() == 1);
  CHECK(f.domain_area() == Rat(2));
  CHECK(f.pieces()[0].tx == Rat(0));
  CHECK(f.pieces()[0].tv == Rat(0));
  CHECK(f.pieces()[0].domain == fundamental_parallelogram());

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Point2 p = random_point(rng);
    CHECK(f.apply(p) == reduce_mod(p));
  }

  // Every interior point is periodic with period one and its tile is the
  // whole fundamental domain.
  const auto [period, tile] = periodic_tile(f, Point2{Rat(-1, 7), Rat(1, 9)}, 8);
  CHECK(period == 1);
  CHECK(poly_area(tile) == Rat(2));
}

TEST_CASE("tetra partition counts and measure at sample parameters") {
  // Frozen regression values from the 2D computation: the merged partition
  // has 20 maximal translation domains with 15 distinct translations for
  // parameters below 1/2, and 18 domains with 13 translations above 1/2.
  const std::vector<Rat> low = {Rat(1, 4), Rat(1, 3), Rat(5, 13), Rat(2, 5)};
  const std::vector<Rat> high = {Rat(3, 5), Rat(2, 3), Rat(3, 4)};
  // Structural bound on the composed translation coefficients: the first
  // base direction contributes two half-units to the horizontal coefficient
  // and none to the vertical one, the other two contribute one half-unit to
  // each, so |B| <= 2+1+1 = 4 and |D| <= 0+1+1 = 2.  Both extremes are
  // attained.
  long max_b = 0, max_d = 0;
  for (const Rat& s : low) {
    const ConcretePET f = concrete_tetra_pet(s);
    CHECK(f.domain_area() == Rat(2));
    CHECK(f.pieces().size() == 20);
    std::set<std::pair<Rat, Rat>> evals;
    for (const ConcretePiece& pc : f.pieces()) {
      evals.insert({pc.tx, pc.tv});
      const auto [tx, tv] = pc.vec.eval(s);
      CHECK(pc.tx == tx);
      CHECK(pc.tv == tv);
      CHECK(std::abs(pc.vec.B) <= 4);
      CHECK(std::abs(pc.vec.D) <= 2);
      max_b = std::max(max_b, std::abs(pc.vec.B));
      max_d = std::max(max_d, std::abs(pc.vec.D));
    }
    CHECK(evals.size() == 15);
  }
  for (const Rat& s : high) {
    const ConcretePET f = concrete_tetra_pet(s);
    CHECK(f.domain_area() == Rat(2));
    CHECK(f.pieces().size() == 18);
    std::set<std::pair<Rat, Rat>> evals;
    for (const ConcretePiece& pc : f.pieces()) {
      evals.insert({pc.tx, pc.tv});
      CHECK(std::abs(pc.vec.B) <= 4);
      CHECK(std::abs(pc.vec.D) <= 2);
      max_b = std::max(max_b, std::abs(pc.vec.B));
      max_d = std::max(max_d, std::abs(pc.vec.D));
    }
    CHECK(evals.size() == 13);
  }
  CHECK(max_b == 4);
  CHECK(max_d == 2);

  // The unrefined compose-of-three partition at two fibers.
  CHECK(concrete_triple_compose(Rat(5, 13)).pieces().size() == 56);
  CHECK(concrete_triple_compose(Rat(3, 4)).pieces().size() == 52);

  check_images_disjoint(concrete_tetra_pet(Rat(5, 13)));
  check_images_disjoint(concrete_tetra_pet(Rat(3, 4)));
}

TEST_CASE("applying the composition agrees with stepping the base maps") {
  const Rat s(5, 13);
  const ConcretePET f = concrete_tetra_pet(s);
  const ConcretePET f0 = concrete_base_map(0, s);
  const ConcretePET f1 = concrete_base_map(1, s);
  const ConcretePET f2 = concrete_base_map(2, s);

  const Point2 probe{Rat(-1, 2), Rat(1, 4)};
  CHECK(f.apply(probe) == f2.apply(f1.apply(f0.apply(probe))));

  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 300) {
    const Point2 p = random_point(rng);
    try {
      const Point2 lhs = f.apply(p);
      const Point2 rhs = f2.apply(f1.apply(f0.apply(p)));
      CHECK(lhs == rhs);
      ++checked;
    } catch (const BoundaryHit&) {
    }
  }
}

TEST_CASE("composition is associative") {
  for (const Rat& s : {Rat(5, 13), Rat(3, 4)}) {
    const ConcretePET f0 = concrete_base_map(0, s);
    const ConcretePET f1 = concrete_base_map(1, s);
    const ConcretePET f2 = concrete_base_map(2, s);
    const ConcretePET left = concrete_compose(concrete_compose(f0, f1), f2);
    const ConcretePET right = concrete_compose(f0, concrete_compose(f1, f2));
    CHECK(maps_equal(left, right));

    std::mt19937_64 rng(59);
    int checked = 0;
    while (checked < 500) {
      const Point2 p = random_point(rng);
      try {
        const Point2 a = left.apply(p);
        const Point2 b = right.apply(p);
        CHECK(a == b);
        ++checked;
      } catch (const BoundaryHit&) {
      }
    }
  }
}

TEST_CASE("composing with the identity changes nothing") {
  const Rat s(5, 13);
  const ConcretePET f = concrete_tetra_pet(s);
  const ConcretePET id = make_identity(s);
  CHECK(maps_equal(concrete_compose(f, id), f));
  CHECK(maps_equal(concrete_compose(id, f), f));
}

TEST_CASE("symbolic cells slice to the concrete partition") {
  struct Setup {
    Rat lo, hi;
    std::vector<Rat> fibers;
  };
  const std::vector<Setup> setups = {
      {Rat(1, 3), Rat(2, 5), {Rat(17, 50), Rat(5, 13), Rat(39, 100), Rat(1, 3), Rat(2, 5)}},
      {Rat(1, 2), Rat(9, 10), {Rat(3, 5), Rat(3, 4), Rat(1, 2)}},
  };
  for (const Setup& setup : setups) {
    const SymbolicPET f = tetra_pet(setup.lo, setup.hi);
    CHECK(f.cells().size() == 56);
    for (const SymbolicCell& cell : f.cells()) {
      CHECK(std::abs(cell.vec.B) <= 4);
      CHECK(std::abs(cell.vec.D) <= 2);
      const auto [slo, shi] = s_range(cell.region);
      CHECK(setup.lo <= slo);
      CHECK(shi <= setup.hi);
    }
    for (const Rat& s : setup.fibers) {
      const ConcretePET slice = slice_to_concrete(f, s);
      const ConcretePET conc = concrete_triple_compose(s);
      // Identical piece lists (domains, translations, return times) and
      // identical translation vectors, cell for cell.
      REQUIRE(slice == conc);
      REQUIRE(slice.pieces().size() == conc.pieces().size());
      for (std::size_t i = 0; i < slice.pieces().size(); ++i)
        CHECK(slice.pieces()[i].vec == conc.pieces()[i].vec);
      // And as a map it is the instantiated tetra map.
      CHECK(maps_equal(slice, concrete_tetra_pet(s)));
    }
  }
}

TEST_CASE("pointwise agreement between symbolic slices and base stepping") {
  const SymbolicPET sym = tetra_pet(Rat(1, 3), Rat(2, 5));
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> pick(0, 2);
  const std::vector<Rat> fibers = {Rat(17, 50), Rat(5, 13), Rat(39, 100)};
  int checked = 0;
  while (checked < 1000) {
    const Rat s = fibers[static_cast<std::size_t>(pick(rng))];
    const ConcretePET slice = slice_to_concrete(sym, s);
    const ConcretePET f0 = concrete_base_map(0, s);
    const ConcretePET f1 = concrete_base_map(1, s);
    const ConcretePET f2 = concrete_base_map(2, s);
    for (int burst = 0; burst < 50; ++burst) {
      const Point2 p = random_point(rng);
      try {
        const Point2 lhs = slice.apply(p);
        const Point2 rhs = f2.apply(f1.apply(f0.apply(p)));
        CHECK(lhs == rhs);
        ++checked;
      } catch (const BoundaryHit&) {
      }
    }
  }
}

TEST_CASE("seam points are rejected") {
  // The horizontal seam separates cells of the first base map that translate
  // in opposite directions, so the dynamics is undefined there.
  const ConcretePET f0 = concrete_base_map(0, Rat(5, 13));
  CHECK_THROWS_AS(f0.apply(Point2{Rat(1, 4), Rat(0)}), BoundaryHit);
  CHECK_THROWS_AS(f0.locate(Point2{Rat(1, 4), Rat(0)}), BoundaryHit);
}

TEST_CASE("first return to the whole torus is the map itself") {
  const Rat s(5, 13);
  const ConcretePET f = concrete_tetra_pet(s);
  const ConcretePET fr = first_return(f, build_triangles().all(), 16);
  CHECK(fr.domain_area() == Rat(2));
  for (const ConcretePiece& pc : fr.pieces()) CHECK(pc.return_time == 1);
  CHECK(maps_equal(fr, f));
}

TEST_CASE("first return to the Y region at s=5/12") {
  const Rat s(5, 12);
  const ConcretePET f = concrete_tetra_pet(s);
  const std::vector<Poly2> region = build_Y(s);
  Rat region_area;
  for (const Poly2& p : region) region_area += poly_area(p);
  CHECK(region_area == Rat(251, 144));

  const ConcretePET fr = first_return(f, region, 4096);
  CHECK(fr.domain_area() == region_area);
  CHECK(fr.pieces().size() == 16);
  // The region is invariant at this parameter: every piece returns in one
  // step, i.e. the return map is the restriction of the map itself.
  for (const ConcretePiece& pc : fr.pieces()) CHECK(pc.return_time == 1);
  check_images_disjoint(fr);

  // Images land back inside the region.
  for (const ConcretePiece& pc : fr.pieces()) {
    const Poly2 image = pc.domain.translated(pc.tx, pc.tv);
    Rat inside;
    for (const Poly2& r : region) inside += poly_area(poly_intersect(image, r));
    CHECK(inside == poly_area(pc.domain));
  }

  // Idempotence: the first return of the return map to the same region is
  // the return map again.
  const ConcretePET fr2 = first_return(fr, region, 4096);
  CHECK(maps_equal(fr2, fr));
}

TEST_CASE("first return to a single triangle at s=5/13") {
  const Rat s(5, 13);
  const ConcretePET f = concrete_tetra_pet(s);
  const std::vector<Poly2> region = {build_triangles().A[0]};

  const ConcretePET fr = first_return(f, region, 4096);
  CHECK(fr.domain_area() == Rat(1, 4));
  CHECK(fr.pieces().size() == 18);
  check_images_disjoint(fr);

  int max_rt = 0;
  Rat slow_area;
  for (const ConcretePiece& pc : fr.pieces()) {
    max_rt = std::max(max_rt, pc.return_time);
    if (pc.return_time > 1) slow_area += poly_area(pc.domain);
  }
  CHECK(max_rt == 21);
  CHECK(slow_area == Rat(24, 169));

  // Sanity of the accumulated translations: stepping the full map
  // return_time times from a piece's interior point reproduces them.  The
  // unmerged return map is used here: merging joins pieces whose total
  // translation agrees but whose intermediate itineraries differ, so a
  // merged piece may contain one-step seams in its interior.
  const ConcretePET fine = first_return(f, region, 4096, /*merge=*/false);
  CHECK(maps_equal(fine, fr));
  for (const ConcretePiece& pc : fine.pieces()) {
    Point2 q = pc.domain.interior_point();
    const Point2 expect = reduce_mod(Point2{q.x + pc.tx, q.v + pc.tv});
    for (int k = 0; k < pc.return_time; ++k) q = f.apply(q);
    CHECK(q == expect);
  }

  // A bound below the maximal return time is reported as an error.
  CHECK_THROWS_AS(first_return(f, region, 5), ReturnBoundExceeded);
}

TEST_CASE("periodic tile at s=4/13") {
  const Rat s(4, 13);
  const ConcretePET f = concrete_tetra_pet(s);
  const Point2 p{Rat(-1, 7), Rat(1, 9)};

  const auto [period, tile] = periodic_tile(f, p, 1 << 16);
  CHECK(period == 34);
  CHECK(poly_area(tile) == Rat(3, 676));
  CHECK(tile.size() == 4);
  CHECK(tile.side_of(p) > 0);

  // Points near each tile vertex (pulled slightly toward p so they are
  // interior) are periodic with exactly the same period.
  const Rat pull(1023, 1024);
  for (const Point2& w : tile.verts()) {
    const Point2 q{p.x + pull * (w.x - p.x), p.v + pull * (w.v - p.v)};
    REQUIRE(tile.side_of(q) > 0);
    Point2 orbit = q;
    for (int k = 1; k <= period; ++k) {
      orbit = f.apply(orbit);
      if (k < period) CHECK(orbit != q);
    }
    CHECK(orbit == q);
  }

  // The orbit does not close within a bound below the period.
  CHECK_THROWS_AS(periodic_tile(f, p, 10), NotPeriodicWithin);
}

TEST_CASE("periodic tiling at s=4/13 covers the torus exactly") {
  const Rat s(4, 13);
  const ConcretePET f = concrete_tetra_pet(s);
  const TilingResult full = periodic_tiling(f, 512, 1 << 16);
  CHECK(full.complete);
  CHECK(full.unresolved == 0);
  CHECK(full.covered_area == Rat(2));
  CHECK(full.tiles.size() == 400);

  Rat total;
  for (const TileEntry& t : full.tiles) {
    CHECK(t.period >= 1);
    total += poly_area(t.tile);
  }
  CHECK(total == Rat(2));

  // Pairwise interior disjointness, with an exact bounding-box prefilter to
  // keep the quadratic scan cheap.
  struct Box {
    Rat xmin, xmax, vmin, vmax;
  };
  std::vector<Box> boxes;
  boxes.reserve(full.tiles.size());
  for (const TileEntry& t : full.tiles) {
    Box b{t.tile.verts()[0].x, t.tile.verts()[0].x, t.tile.verts()[0].v,
          t.tile.verts()[0].v};
    for (const Point2& w : t.tile.verts()) {
      b.xmin = std::min(b.xmin, w.x);
      b.xmax = std::max(b.xmax, w.x);
      b.vmin = std::min(b.vmin, w.v);
      b.vmax = std::max(b.vmax, w.v);
    }
    boxes.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < full.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < full.tiles.size(); ++j) {
      if (boxes[i].xmax <= boxes[j].xmin || boxes[j].xmax <= boxes[i].xmin ||
          boxes[i].vmax <= boxes[j].vmin || boxes[j].vmax <= boxes[i].vmin)
        continue;
      CHECK(poly_area(poly_intersect(full.tiles[i].tile, full.tiles[j].tile)) ==
            Rat(0));
    }

  // A tight budget yields an honest partial cover.
  const TilingResult partial = periodic_tiling(f, 10, 1 << 16);
  CHECK_FALSE(partial.complete);
  CHECK(partial.tiles.size() <= 10);
  CHECK(partial.covered_area < Rat(2));
}

TEST_CASE("half-interval conjugacy via the two-piece involution") {
  // For parameters above 1/2 the map is conjugate to the one at the
  // reflected parameter by the half-swap translation.
  for (const Rat& s : {Rat(4, 5), Rat(3, 5), Rat(9, 14)}) {
    const Rat t = Rat(1) - s;
    const ConcretePET phi_s = make_phi_half(s);
    const ConcretePET phi_t = make_phi_half(t);

    // The involution property.
    CHECK(maps_equal(concrete_compose(phi_s, phi_s), make_identity(s)));

    const ConcretePET lhs = concrete_compose(concrete_tetra_pet(s), phi_s);
    const ConcretePET rhs = concrete_compose(phi_t, concrete_tetra_pet(t));
    CHECK(maps_equal(lhs, rhs));
  }

  // Negative control: the conjugacy fails pairing a parameter with anything
  // other than its reflection.
  const ConcretePET lhs =
      concrete_compose(concrete_tetra_pet(Rat(4, 5)), make_phi_half(Rat(4, 5)));
  const ConcretePET rhs = concrete_compose(make_phi_half(Rat(1, 3)),
                                            concrete_tetra_pet(Rat(1, 3)));
  CHECK_FALSE(maps_equal(lhs, rhs));
}
