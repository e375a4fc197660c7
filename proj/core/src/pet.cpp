#include "hextwist/pet.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "hextwist/error.hpp"

namespace hextwist {

bool TransVec::operator<(const TransVec& o) const {
  return std::tie(A, B, C, D) < std::tie(o.A, o.B, o.C, o.D);
}

Affine3 shear_of(const TransVec& w) {
  return Affine3{{{{Rat(1), Rat(0), Rat(w.B, 2)},
                   {Rat(0), Rat(1), Rat(w.D, 2)},
                   {Rat(0), Rat(0), Rat(1)}}},
                 {Rat(w.A), Rat(w.C), Rat(0)}};
}

namespace {

// Base translation data: omega_0 = (1,0), omega_1 = (-1/2,1/2),
// omega_2 = (-1/2,-1/2) in v-coordinates. With sign sg the translation
// sg*s*omega_i has TransVec entries (0, B, 0, D):
TransVec base_vec(int i, int sg) {
  switch (i) {
    case 0:
      return {0, 2 * sg, 0, 0};
    case 1:
      return {0, -sg, 0, sg};
    default:
      return {0, -sg, 0, -sg};
  }
}

// Sign pattern of the base translation i: -1 exactly on the opposite
// triangle A_{3-i} and on the reflections of the other three.
int sign_on_triangle(int i, int alpha, bool reflected) {
  const bool opposite = (alpha == 3 - i);
  return (opposite != reflected) ? -1 : 1;
}

// The four wraparound halfplanes selecting the lattice translate (k1, k2)
// of the fundamental parallelogram, applied to the image point; c1 and c2
// are the s-coefficients of the image's alpha- and v-coordinates.
struct WrapCut {
  Rat a, b, c_s, rhs;  // a*x + b*v + c_s*s <= rhs
};

std::array<WrapCut, 4> wrap_cuts(const Rat& c1, const Rat& c2, long k1,
                                 long k2) {
  return {WrapCut{Rat(1), Rat(1), c1, Rat(2 * k1 + 1)},
          WrapCut{Rat(-1), Rat(-1), -c1, Rat(1 - 2 * k1)},
          WrapCut{Rat(0), Rat(1), c2, Rat(1, 2) - Rat(k2)},
          WrapCut{Rat(0), Rat(-1), -c2, Rat(1, 2) + Rat(k2)}};
}

}  // namespace

ConcretePET::ConcretePET(Rat s, std::vector<ConcretePiece> pieces)
    : s_(std::move(s)), pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const ConcretePiece& a, const ConcretePiece& b) {
              if (a.domain != b.domain) return poly2_less(a.domain, b.domain);
              if (a.tx != b.tx) return a.tx < b.tx;
              if (a.tv != b.tv) return a.tv < b.tv;
              return a.return_time < b.return_time;
            });
}

bool ConcretePET::equal_pieces(const ConcretePET& o) const {
  if (pieces_.size() != o.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const ConcretePiece &a = pieces_[i], &b = o.pieces_[i];
    if (a.domain != b.domain || a.tx != b.tx || a.tv != b.tv ||
        a.return_time != b.return_time)
      return false;
  }
  return true;
}

std::size_t ConcretePET::locate(const Point2& p) const {
  const Point2 q = reduce_mod(p);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const int side = pieces_[i].domain.side_of(q);
    if (side > 0) return i;
    if (side == 0)
      throw BoundaryHit("locate: point lies on a piece boundary");
  }
  throw BoundaryHit("locate: no piece interior contains the point");
}

Point2 ConcretePET::apply(const Point2& p) const {
  const Point2 q = reduce_mod(p);
  const ConcretePiece& piece = pieces_[locate(q)];
  return reduce_mod(Point2{q.x + piece.tx, q.v + piece.tv});
}

Rat ConcretePET::domain_area() const {
  Rat total;
  for (const ConcretePiece& p : pieces_) total += poly_area(p.domain);
  return total;
}

ConcretePET ConcretePET::merged() const {
  // Key on the evaluated translation: distinct symbolic vectors can agree at
  // special parameters, and then the map itself cannot tell them apart.
  std::map<std::tuple<Rat, Rat, int>, std::pair<TransVec, std::vector<Poly2>>>
      groups;
  for (const ConcretePiece& p : pieces_) {
    auto& slot = groups[{p.tx, p.tv, p.return_time}];
    slot.first = p.vec;
    slot.second.push_back(p.domain);
  }
  std::vector<ConcretePiece> out;
  for (auto& [key, slot] : groups) {
    auto& polys = slot.second;
    // Greedy pairwise convex unions: two interior-disjoint polygons merge
    // exactly when the hull of their vertices has area equal to the sum.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < polys.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < polys.size() && !changed; ++j) {
          std::vector<Point2> pts = polys[i].verts();
          const auto& vj = polys[j].verts();
          pts.insert(pts.end(), vj.begin(), vj.end());
          const Poly2 h = hull2(std::move(pts));
          if (!h.is_empty() &&
              poly_area(h) == poly_area(polys[i]) + poly_area(polys[j])) {
            polys[i] = h;
            polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(j));
            changed = true;
          }
        }
    }
    for (Poly2& d : polys)
      out.push_back(ConcretePiece{std::move(d), slot.first, std::get<0>(key),
                                  std::get<1>(key), std::get<2>(key)});
  }
  return ConcretePET(s_, std::move(out));
}

bool maps_equal(const ConcretePET& a, const ConcretePET& b) {
  // The stored parameter is bookkeeping only: two piecewise translations are
  // the same map whenever their domains agree and every positive-area
  // overlap carries the same evaluated translation (conjugates built at
  // different parameters are compared this way).
  if (a.domain_area() != b.domain_area()) return false;
  Rat overlap;
  for (const ConcretePiece& pa : a.pieces()) {
    for (const ConcretePiece& pb : b.pieces()) {
      const Poly2 common = poly_intersect(pa.domain, pb.domain);
      if (common.is_empty()) continue;
      if (pa.tx != pb.tx || pa.tv != pb.tv) return false;
      overlap += poly_area(common);
    }
  }
  // The cross-refinement must exhaust both domains (no uncovered slivers).
  return overlap == a.domain_area();
}

ConcretePET concrete_base_map(int i, const Rat& s) {
  if (i < 0 || i > 2) throw InvalidArgument("concrete_base_map: i must be 0..2");
  if (s.sign() < 0 || s > Rat(1))
    throw InvalidArgument("concrete_base_map: s must lie in [0, 1]");
  const TriangleSet tris = build_triangles();
  std::vector<ConcretePiece> pieces;
  for (int alpha = 0; alpha < 4; ++alpha) {
    for (int refl = 0; refl < 2; ++refl) {
      const Poly2& tri = refl ? tris.iA[static_cast<std::size_t>(alpha)]
                              : tris.A[static_cast<std::size_t>(alpha)];
      const int sg = sign_on_triangle(i, alpha, refl != 0);
      const TransVec w0 = base_vec(i, sg);
      const auto [wx, wv] = w0.eval(s);
      const Poly2 moved = tri.translated(wx, wv);
      for (long k1 = -1; k1 <= 1; ++k1)
        for (long k2 = -1; k2 <= 1; ++k2) {
          Poly2 part = moved;
          for (const WrapCut& cut :
               wrap_cuts(Rat(0), Rat(0), k1, k2)) {  // s-part already in moved
            part = clip_halfplane(part, cut.a, cut.b, cut.rhs);
            if (part.is_empty()) break;
          }
          if (part.is_empty()) continue;
          TransVec vec = w0;
          vec.A -= 2 * k1 + k2;
          vec.C += k2;
          const Rat tx = wx - Rat(2 * k1 + k2);
          const Rat tv = wv + Rat(k2);
          pieces.push_back(ConcretePiece{part.translated(-wx, -wv), vec, tx,
                                         tv, 1});
        }
    }
  }
  return ConcretePET(s, std::move(pieces));
}

ConcretePET concrete_compose(const ConcretePET& g, const ConcretePET& h) {
  if (g.s() != h.s())
    throw InvalidArgument("concrete_compose: parameter mismatch");
  std::vector<ConcretePiece> pieces;
  for (const ConcretePiece& pg : g.pieces()) {
    for (const ConcretePiece& ph : h.pieces()) {
      const Poly2 r =
          poly_intersect(pg.domain, ph.domain.translated(-pg.tx, -pg.tv));
      if (r.is_empty()) continue;
      pieces.push_back(ConcretePiece{r, pg.vec + ph.vec, pg.tx + ph.tx,
                                     pg.tv + ph.tv, 1});
    }
  }
  return ConcretePET(g.s(), std::move(pieces));
}

ConcretePET concrete_tetra_pet(const Rat& s) {
  const ConcretePET f01 =
      concrete_compose(concrete_base_map(0, s), concrete_base_map(1, s));
  return concrete_compose(f01, concrete_base_map(2, s)).merged();
}

SymbolicPET::SymbolicPET(Rat lo, Rat hi, std::vector<SymbolicCell> cells)
    : lo_(std::move(lo)), hi_(std::move(hi)), cells_(std::move(cells)) {
  if (lo_ >= hi_) throw InvalidArgument("SymbolicPET: empty interval");
}

SymbolicPET base_map(int i, const Rat& lo, const Rat& hi) {
  if (i < 0 || i > 2) throw InvalidArgument("base_map: i must be 0..2");
  if (lo >= hi) throw InvalidArgument("base_map: empty interval");
  if (lo.sign() < 0 || hi > Rat(1))
    throw InvalidArgument("base_map: interval must lie inside [0, 1]");
  const TriangleSet tris = build_triangles();
  std::vector<SymbolicCell> cells;
  for (int alpha = 0; alpha < 4; ++alpha) {
    for (int refl = 0; refl < 2; ++refl) {
      const Poly2& tri = refl ? tris.iA[static_cast<std::size_t>(alpha)]
                              : tris.A[static_cast<std::size_t>(alpha)];
      const int sg = sign_on_triangle(i, alpha, refl != 0);
      const TransVec w0 = base_vec(i, sg);
      // s-coefficients of the image's (2*alpha)- and v-coordinates.
      const Rat c1(w0.B + w0.D, 2);  // = sg*(omega_x + omega_v)
      const Rat c2(w0.D, 2);         // = sg*omega_v
      std::vector<Point3> prism;
      for (const Point2& p : tri.verts()) {
        prism.push_back(Point3{p.x, p.v, lo});
        prism.push_back(Point3{p.x, p.v, hi});
      }
      const Polytope3 cell0 = hull3(prism);
      for (long k1 = -1; k1 <= 1; ++k1)
        for (long k2 = -1; k2 <= 1; ++k2) {
          Polytope3 part = cell0;
          for (const WrapCut& cut : wrap_cuts(c1, c2, k1, k2)) {
            part = clip_halfspace3(part,
                                   HalfSpace3{cut.a, cut.b, cut.c_s, cut.rhs});
            if (part.is_empty()) break;
          }
          if (part.is_empty()) continue;
          TransVec vec = w0;
          vec.A -= 2 * k1 + k2;
          vec.C += k2;
          cells.push_back(SymbolicCell{std::move(part), vec});
        }
    }
  }
  return SymbolicPET(lo, hi, std::move(cells));
}

SymbolicPET compose(const SymbolicPET& g, const SymbolicPET& h) {
  if (g.lo() != h.lo() || g.hi() != h.hi())
    throw InvalidArgument("compose: interval mismatch");
  std::vector<SymbolicCell> cells;
  for (const SymbolicCell& cg : g.cells()) {
    for (const SymbolicCell& ch : h.cells()) {
      const Polytope3 back = apply_affine(ch.region, shear_of(-cg.vec));
      Polytope3 r = intersect3(cg.region, back);
      if (r.is_empty()) continue;
      cells.push_back(SymbolicCell{std::move(r), cg.vec + ch.vec});
    }
  }
  return SymbolicPET(g.lo(), g.hi(), std::move(cells));
}

SymbolicPET tetra_pet(const Rat& lo, const Rat& hi) {
  return compose(compose(base_map(0, lo, hi), base_map(1, lo, hi)),
                 base_map(2, lo, hi));
}

ConcretePET slice_to_concrete(const SymbolicPET& f, const Rat& s) {
  if (s < f.lo() || s > f.hi())
    throw InvalidArgument("slice_to_concrete: s outside the interval");
  std::vector<ConcretePiece> pieces;
  for (const SymbolicCell& c : f.cells()) {
    Poly2 d = slice_at_s(c.region, s);
    if (d.is_empty()) continue;
    const auto [tx, tv] = c.vec.eval(s);
    pieces.push_back(ConcretePiece{std::move(d), c.vec, tx, tv, 1});
  }
  return ConcretePET(s, std::move(pieces));
}

ConcretePET first_return(const ConcretePET& pet,
                         const std::vector<Poly2>& region, int max_steps,
                         bool merge) {
  struct Entry {
    Poly2 cur;       // the piece after k steps, in current coordinates
    TransVec vec;    // accumulated translation
    Rat tx, tv;      // accumulated translation, evaluated
    int k;
  };
  std::deque<Entry> work;
  for (const Poly2& r : region) {
    if (r.is_empty()) throw InvalidArgument("first_return: empty region part");
    for (const ConcretePiece& p : pet.pieces()) {
      Poly2 part = poly_intersect(r, p.domain);
      if (part.is_empty()) continue;
      work.push_back(Entry{part.translated(p.tx, p.tv), p.vec, p.tx, p.tv, 1});
    }
  }
  std::vector<ConcretePiece> out;
  while (!work.empty()) {
    Entry e = std::move(work.front());
    work.pop_front();
    std::vector<Poly2> rem = {e.cur};
    for (const Poly2& r : region) {
      std::vector<Poly2> next;
      for (const Poly2& piece : rem) {
        const Poly2 hit = poly_intersect(piece, r);
        if (!hit.is_empty())
          out.push_back(ConcretePiece{hit.translated(-e.tx, -e.tv), e.vec,
                                      e.tx, e.tv, e.k});
        auto parts = poly_subtract(piece, r);
        next.insert(next.end(), parts.begin(), parts.end());
      }
      rem = std::move(next);
    }
    if (rem.empty()) continue;
    if (e.k + 1 > max_steps)
      throw ReturnBoundExceeded(
          "first_return: a piece failed to return within " +
          std::to_string(max_steps) + " steps");
    for (const Poly2& piece : rem) {
      for (const ConcretePiece& p : pet.pieces()) {
        Poly2 part = poly_intersect(piece, p.domain);
        if (part.is_empty()) continue;
        work.push_back(Entry{part.translated(p.tx, p.tv), e.vec + p.vec,
                             e.tx + p.tx, e.tv + p.tv, e.k + 1});
      }
    }
  }
  ConcretePET result(pet.s(), std::move(out));
  return merge ? result.merged() : result;
}

std::pair<int, Poly2> periodic_tile(const ConcretePET& pet, const Point2& p,
                                    int n_max) {
  const Point2 p0 = reduce_mod(p);
  Poly2 tile;
  Point2 x = p0;
  Rat wx, wv;
  for (int k = 0; k < n_max; ++k) {
    const ConcretePiece& piece = pet.pieces()[pet.locate(x)];
    const Poly2 pulled = piece.domain.translated(-wx, -wv);
    tile = (k == 0) ? pulled : poly_intersect(tile, pulled);
    if (tile.is_empty())
      throw GeometryError("periodic_tile: itinerary cylinder degenerated");
    wx += piece.tx;
    wv += piece.tv;
    x = Point2{x.x + piece.tx, x.v + piece.tv};
    if (x == p0) return {k + 1, tile};
  }
  throw NotPeriodicWithin("periodic_tile: no period within " +
                          std::to_string(n_max) + " steps");
}

TilingResult periodic_tiling(const ConcretePET& pet, int max_tiles,
                             int n_max) {
  std::deque<Poly2> holes;
  for (Poly2& t : build_triangles().all()) holes.push_back(std::move(t));
  TilingResult res;
  res.covered_area = Rat(0);
  int splits_left = 64 * (max_tiles > 0 ? max_tiles : 1);
  while (!holes.empty()) {
    if (static_cast<int>(res.tiles.size()) >= max_tiles) {
      res.unresolved += static_cast<int>(holes.size());
      break;
    }
    Poly2 hole = std::move(holes.front());
    holes.pop_front();
    // Candidate seeds: the centroid, then points partway to each vertex.
    std::vector<Point2> seeds = {hole.interior_point()};
    for (const Point2& v : hole.verts()) {
      const Point2 c = seeds[0];
      seeds.push_back(Point2{(c.x * Rat(3) + v.x) / Rat(4),
                             (c.v * Rat(3) + v.v) / Rat(4)});
    }
    bool placed = false, abandoned = false;
    for (const Point2& seed : seeds) {
      try {
        auto [period, tile] = periodic_tile(pet, seed, n_max);
        res.tiles.push_back(TileEntry{period, tile});
        res.covered_area += poly_area(tile);
        // Remove the tile from every pending hole (it may span several).
        std::deque<Poly2> next;
        for (const Poly2& h : holes)
          for (Poly2& part : poly_subtract(h, tile))
            next.push_back(std::move(part));
        for (Poly2& part : poly_subtract(hole, tile))
          next.push_back(std::move(part));
        holes = std::move(next);
        placed = true;
        break;
      } catch (const BoundaryHit&) {
        continue;  // measure-zero seam: try the next seed
      } catch (const NotPeriodicWithin&) {
        ++res.unresolved;  // give up on this hole
        abandoned = true;
        break;
      }
    }
    if (placed || abandoned) continue;
    // Every seed hit a seam: subdivide the hole around the centroid.
    if (--splits_left < 0) {
      ++res.unresolved;
      continue;
    }
    const Point2 c = hole.interior_point();
    const auto& vs = hole.verts();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<Point2> tri = {c, vs[i], vs[(i + 1) % vs.size()]};
      const Poly2 t = hull2(tri);
      if (!t.is_empty()) holes.push_back(t);
    }
  }
  res.complete = res.unresolved == 0 && holes.empty() &&
                 res.covered_area == Rat(2);
  return res;
}

}  // namespace hextwist
