#include "hextwist/torus.hpp"

#include "hextwist/error.hpp"

namespace hextwist {

std::vector<Poly2> TriangleSet::all() const {
  std::vector<Poly2> out(A.begin(), A.end());
  out.insert(out.end(), iA.begin(), iA.end());
  return out;
}

Point2 involution_iota(const Point2& p) { return Point2{-p.x, -p.v}; }

Poly2 involution_iota(const Poly2& p) {
  if (p.is_empty()) return Poly2();
  std::vector<Point2> vs;
  vs.reserve(p.size());
  for (const Point2& q : p.verts()) vs.push_back(involution_iota(q));
  return Poly2::from_vertices(std::move(vs));
}

Point2 reduce_mod(const Point2& p) {
  // v' = v + k2 in (-1/2, 1/2]; alpha' = (x'+v')/2 in [-1/2, 1/2).
  const Rat k2(rat_floor(Rat(1, 2) - p.v), mpz_class(1));
  const Rat k1(rat_floor((p.x + p.v + Rat(1)) / Rat(2)), mpz_class(1));
  return Point2{p.x - Rat(2) * k1 - k2, p.v + k2};
}

TriangleSet build_triangles() {
  auto tri = [](long ax, long av, long bx, long bv, long cx, long cv) {
    return Poly2::from_vertices({Point2{Rat(ax, 2), Rat(av, 2)},
                                 Point2{Rat(bx, 2), Rat(bv, 2)},
                                 Point2{Rat(cx, 2), Rat(cv, 2)}});
  };
  TriangleSet t;
  t.A[0] = tri(-2, 0, -1, 1, 0, 0);
  t.A[1] = tri(-2, 0, -1, 1, -3, 1);
  t.A[2] = tri(-1, 1, 0, 0, 1, 1);
  t.A[3] = tri(-2, 0, 0, 0, -1, -1);
  for (int i = 0; i < 4; ++i) t.iA[i] = involution_iota(t.A[i]);
  return t;
}

Point2 project_pi(const Point2& p) {
  if (p.v >= p.x) return p;
  return involution_iota(p);
}

Point2 reflect_sigma(const Rat& s, const Point2& p) {
  return Point2{-s - p.x, p.v};
}

Poly2 build_hexagon(const Rat& s) {
  if (s.sign() <= 0 || s >= Rat(1, 2))
    throw InvalidArgument("build_hexagon: s must lie in (0, 1/2)");
  const Rat half(1, 2);
  const Rat h1 = (Rat(1) - s) / Rat(2);
  return Poly2::from_vertices({Point2{Rat(0), Rat(0)}, Point2{h1, h1},
                               Point2{half - s, half}, Point2{-half, half},
                               Point2{-(Rat(1) + s) / Rat(2), h1},
                               Point2{-s, Rat(0)}});
}

std::vector<Poly2> build_Y(const Rat& s) {
  const TriangleSet t = build_triangles();
  const Poly2 hex = build_hexagon(s);
  std::vector<Poly2> pieces = {t.A[1],
                               t.A[3],
                               hex,
                               t.iA[1],
                               t.iA[3],
                               involution_iota(hex)};
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (!poly_intersect(pieces[i], pieces[j]).is_empty())
        throw GeometryError("build_Y: pieces overlap (invariant breach)");
  return pieces;
}

}  // namespace hextwist
