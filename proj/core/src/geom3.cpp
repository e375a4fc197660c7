#include "hextwist/geom3.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>

#include "hextwist/error.hpp"

namespace hextwist {

bool lex_less(const Point3& a, const Point3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.v != b.v) return a.v < b.v;
  return a.s < b.s;
}

std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << "(" << p.x << ", " << p.v << ", " << p.s << ")";
}

std::ostream& operator<<(std::ostream& os, const Polytope3& p) {
  if (p.is_empty()) return os << "Empty";
  os << (p.is_flat() ? "Flat[" : "[");
  for (std::size_t i = 0; i < p.verts().size(); ++i) {
    if (i) os << " ";
    os << p.verts()[i];
  }
  return os << "]";
}

namespace {

struct Vec3 {
  Rat x, v, s;
};

Vec3 sub(const Point3& a, const Point3& b) {
  return {a.x - b.x, a.v - b.v, a.s - b.s};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.v * b.s - a.s * b.v, a.s * b.x - a.x * b.s,
          a.x * b.v - a.v * b.x};
}

Rat dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.v * b.v + a.s * b.s;
}

Rat pos_dot(const Vec3& n, const Point3& p) {
  return n.x * p.x + n.v * p.v + n.s * p.s;
}

bool vec_zero(const Vec3& a) {
  return a.x.is_zero() && a.v.is_zero() && a.s.is_zero();
}

// Canonical integer key for the plane n.p = off: cleared denominators,
// divided by the content gcd, first nonzero entry positive.
std::vector<mpz_class> plane_key(const Vec3& n, const Rat& off) {
  const Rat* parts[4] = {&n.x, &n.v, &n.s, &off};
  mpz_class L(1);
  for (const Rat* r : parts) L = lcm(L, (*r).den());
  std::vector<mpz_class> key(4);
  for (int i = 0; i < 4; ++i)
    key[static_cast<std::size_t>(i)] =
        parts[i]->num() * (L / parts[i]->den());
  mpz_class g(0);
  for (const auto& k : key) g = gcd(g, k);
  if (g != 0)
    for (auto& k : key) k /= g;
  for (const auto& k : key) {
    if (k == 0) continue;
    if (k < 0)
      for (auto& kk : key) kk = -kk;
    break;
  }
  return key;
}

// Exact angular order of face vertices around their centroid, CCW with
// respect to the outward normal; the resulting cycle's right-hand normal is
// the outward normal.
std::vector<Point3> sort_face_ccw(std::vector<Point3> pts, const Vec3& n) {
  Point3 c{Rat(0), Rat(0), Rat(0)};
  for (const Point3& p : pts) {
    c.x += p.x;
    c.v += p.v;
    c.s += p.s;
  }
  const Rat m(static_cast<long>(pts.size()));
  c.x /= m;
  c.v /= m;
  c.s /= m;
  const Vec3 ref = sub(pts[0], c);
  auto classify = [&](const Vec3& a) -> int {
    const int cz = dot(n, cross(ref, a)).sign();
    if (cz > 0) return 1;
    if (cz < 0) return 3;
    return dot(ref, a).sign() > 0 ? 0 : 2;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point3& pa, const Point3& pb) {
    const Vec3 a = sub(pa, c), b = sub(pb, c);
    const int ca = classify(a), cb = classify(b);
    if (ca != cb) return ca < cb;
    return dot(n, cross(a, b)).sign() > 0;
  });
  return pts;
}

// Removes consecutive duplicates and collinear vertices from a 3D cycle.
void strip_cycle(std::vector<Point3>& v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size();) {
      const Point3& prev = v[(i + v.size() - 1) % v.size()];
      const Point3& cur = v[i];
      const Point3& next = v[(i + 1) % v.size()];
      if (cur == next || vec_zero(cross(sub(cur, prev), sub(next, cur)))) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
}

struct P3Less {
  bool operator()(const Point3& a, const Point3& b) const {
    return lex_less(a, b);
  }
};

// Assembles a polytope from faces given as explicit point cycles.
Polytope3 from_point_faces(const std::vector<std::vector<Point3>>& faces,
                           bool flat) {
  std::map<Point3, int, P3Less> index;
  std::vector<Point3> verts;
  std::vector<std::vector<int>> cycles;
  for (const auto& f : faces) {
    std::vector<int> cyc;
    cyc.reserve(f.size());
    for (const Point3& p : f) {
      auto [it, inserted] = index.try_emplace(p, static_cast<int>(verts.size()));
      if (inserted) verts.push_back(p);
      cyc.push_back(it->second);
    }
    cycles.push_back(std::move(cyc));
  }
  return Polytope3::assemble(std::move(verts), std::move(cycles), flat);
}

}  // namespace

Polytope3 Polytope3::assemble(std::vector<Point3> verts,
                              std::vector<std::vector<int>> faces, bool flat) {
  const std::size_t n = verts.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(verts[static_cast<std::size_t>(a)],
                    verts[static_cast<std::size_t>(b)]);
  });
  std::vector<int> rank(n);
  std::vector<Point3> sorted;
  sorted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    sorted.push_back(std::move(verts[static_cast<std::size_t>(order[i])]));
  }
  for (auto& f : faces) {
    for (int& idx : f) idx = rank[static_cast<std::size_t>(idx)];
    auto mn = std::min_element(f.begin(), f.end());
    std::rotate(f.begin(), mn, f.end());
  }
  std::sort(faces.begin(), faces.end());
  Polytope3 out;
  out.verts_ = std::move(sorted);
  out.faces_ = std::move(faces);
  out.flat_ = flat;
  return out;
}

std::vector<std::pair<int, int>> Polytope3::edges() const {
  std::set<std::pair<int, int>> es;
  for (const auto& f : faces_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      if (a > b) std::swap(a, b);
      es.emplace(a, b);
    }
  }
  return {es.begin(), es.end()};
}

Point3 Polytope3::interior_point() const {
  if (is_empty())
    throw GeometryError("Polytope3: empty polytope has no interior");
  Point3 c{Rat(0), Rat(0), Rat(0)};
  for (const Point3& p : verts_) {
    c.x += p.x;
    c.v += p.v;
    c.s += p.s;
  }
  const Rat n(static_cast<long>(verts_.size()));
  return Point3{c.x / n, c.v / n, c.s / n};
}

Polytope3 flat_from_coplanar(const std::vector<Point3>& points) {
  std::vector<Point3> pts = points;
  std::sort(pts.begin(), pts.end(), P3Less{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    throw GeometryError("flat_from_coplanar: fewer than 3 distinct points");
  const Point3& p0 = pts[0];
  Vec3 e1{};
  std::size_t i1 = 1;
  e1 = sub(pts[i1], p0);
  Vec3 n{};
  bool found = false;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    n = cross(e1, sub(pts[i], p0));
    if (!vec_zero(n)) {
      found = true;
      break;
    }
  }
  if (!found)
    throw GeometryError("flat_from_coplanar: all points collinear");
  for (const Point3& p : pts)
    if (!dot(n, sub(p, p0)).is_zero())
      throw GeometryError("flat_from_coplanar: points are not coplanar");
  // Canonical normal sign so the stored cycle orientation is deterministic.
  const std::vector<mpz_class> key = plane_key(n, pos_dot(n, p0));
  Vec3 nc{Rat(key[0], mpz_class(1)), Rat(key[1], mpz_class(1)),
          Rat(key[2], mpz_class(1))};
  if (vec_zero(nc)) nc = n;  // cannot happen; defensive
  // In-plane coordinates with a right-handed (u, w, nc) frame.
  const Vec3 u = e1;
  const Vec3 w = cross(nc, u);
  std::map<Point2, Point3, decltype([](const Point2& a, const Point2& b) {
             return lex_less(a, b);
           })>
      back;
  std::vector<Point2> plane_pts;
  for (const Point3& p : pts) {
    const Vec3 d = sub(p, p0);
    const Point2 q{dot(d, u), dot(d, w)};
    back.emplace(q, p);
    plane_pts.push_back(q);
  }
  const Poly2 hull = hull2(plane_pts);
  if (hull.is_empty())
    throw GeometryError("flat_from_coplanar: zero-area point set");
  std::vector<Point3> cycle;
  cycle.reserve(hull.size());
  for (const Point2& q : hull.verts()) cycle.push_back(back.at(q));
  return from_point_faces({cycle}, true);
}

Polytope3 hull3(const std::vector<Point3>& points) {
  std::vector<Point3> pts = points;
  std::sort(pts.begin(), pts.end(), P3Less{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4)
    throw GeometryError("hull3: fewer than 4 distinct points");
  const std::size_t n = pts.size();
  const Point3& p0 = pts[0];
  // Affine rank probe.
  const Vec3 e1 = sub(pts[1], p0);
  Vec3 n0{};
  bool planar_found = false;
  for (std::size_t i = 2; i < n; ++i) {
    n0 = cross(e1, sub(pts[i], p0));
    if (!vec_zero(n0)) {
      planar_found = true;
      break;
    }
  }
  if (!planar_found) throw GeometryError("hull3: all points collinear");
  bool full_rank = false;
  for (std::size_t i = 2; i < n; ++i)
    if (!dot(n0, sub(pts[i], p0)).is_zero()) {
      full_rank = true;
      break;
    }
  if (!full_rank) return flat_from_coplanar(pts);

  // Brute-force facet enumeration over supporting planes of point triples.
  std::set<std::vector<mpz_class>> seen;
  std::set<std::vector<int>> face_sets;
  std::vector<std::pair<std::vector<int>, Vec3>> facets;  // indices + outward n
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 nf = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (vec_zero(nf)) continue;
        const Rat off = pos_dot(nf, pts[i]);
        if (!seen.insert(plane_key(nf, off)).second) continue;
        bool pos = false, neg = false;
        std::vector<int> zeros;
        for (std::size_t m = 0; m < n && !(pos && neg); ++m) {
          const int sg = (pos_dot(nf, pts[m]) - off).sign();
          if (sg > 0)
            pos = true;
          else if (sg < 0)
            neg = true;
          else
            zeros.push_back(static_cast<int>(m));
        }
        if (pos && neg) continue;
        if (zeros.size() < 3) continue;
        // Require a genuinely 2-dimensional contact set (not just an edge).
        bool two_dim = false;
        const Point3& z0 = pts[static_cast<std::size_t>(zeros[0])];
        const Vec3 ze = sub(pts[static_cast<std::size_t>(zeros[1])], z0);
        for (std::size_t m = 2; m < zeros.size(); ++m)
          if (!vec_zero(cross(
                  ze, sub(pts[static_cast<std::size_t>(zeros[m])], z0)))) {
            two_dim = true;
            break;
          }
        if (!two_dim) continue;
        if (pos) {
          nf.x = -nf.x;
          nf.v = -nf.v;
          nf.s = -nf.s;
        }
        if (face_sets.insert(zeros).second) facets.emplace_back(zeros, nf);
      }

  // A point is extreme iff it lies on at least 3 facets.
  std::vector<int> incident(n, 0);
  for (const auto& [zs, nf] : facets)
    for (int z : zs) ++incident[static_cast<std::size_t>(z)];
  std::vector<char> extreme(n, 0);
  for (std::size_t i = 0; i < n; ++i) extreme[i] = incident[i] >= 3;

  std::vector<std::vector<Point3>> point_faces;
  for (const auto& [zs, nf] : facets) {
    std::vector<Point3> fp;
    for (int z : zs)
      if (extreme[static_cast<std::size_t>(z)])
        fp.push_back(pts[static_cast<std::size_t>(z)]);
    point_faces.push_back(sort_face_ccw(std::move(fp), nf));
  }
  return from_point_faces(point_faces, false);
}

Polytope3 clip_halfspace3(const Polytope3& P, const HalfSpace3& h) {
  if (h.zero_normal()) throw InvalidArgument("clip_halfspace3: zero normal");
  if (P.is_empty()) return Polytope3();
  const auto& vs = P.verts();
  std::vector<Rat> d(vs.size());
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    d[i] = h.eval(vs[i]);
    if (d[i].sign() > 0) pos = true;
    if (d[i].sign() < 0) neg = true;
  }
  if (!pos) return P;                  // constraint inactive (or supporting)
  if (!neg) return Polytope3();        // at most a zero-volume contact set

  std::vector<std::vector<Point3>> new_faces;
  std::vector<Point3> cap_pts;
  for (const auto& f : P.faces()) {
    std::vector<Point3> cyc;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::size_t a = static_cast<std::size_t>(f[i]);
      const std::size_t b = static_cast<std::size_t>(f[(i + 1) % f.size()]);
      if (d[a].sign() <= 0) {
        cyc.push_back(vs[a]);
        if (d[a].is_zero()) cap_pts.push_back(vs[a]);
      }
      if ((d[a].sign() < 0 && d[b].sign() > 0) ||
          (d[a].sign() > 0 && d[b].sign() < 0)) {
        const Rat t = d[a] / (d[a] - d[b]);
        const Point3 x{vs[a].x + t * (vs[b].x - vs[a].x),
                       vs[a].v + t * (vs[b].v - vs[a].v),
                       vs[a].s + t * (vs[b].s - vs[a].s)};
        cap_pts.push_back(x);
        cyc.push_back(x);
      }
    }
    strip_cycle(cyc);
    if (cyc.size() >= 3) new_faces.push_back(std::move(cyc));
  }

  if (P.is_flat())
    return new_faces.empty() ? Polytope3()
                             : from_point_faces({new_faces[0]}, true);

  std::sort(cap_pts.begin(), cap_pts.end(), P3Less{});
  cap_pts.erase(std::unique(cap_pts.begin(), cap_pts.end()), cap_pts.end());
  if (cap_pts.size() >= 3) {
    const Vec3 ncap{h.nx, h.nv, h.ns};
    std::vector<Point3> cap = sort_face_ccw(std::move(cap_pts), ncap);
    strip_cycle(cap);
    if (cap.size() >= 3) new_faces.push_back(std::move(cap));
  }
  return from_point_faces(new_faces, false);
}

Rat volume3(const Polytope3& P) {
  if (P.is_empty() || P.is_flat()) return Rat(0);
  const auto& vs = P.verts();
  const Point3& o = vs[0];
  Rat six_vol;
  for (const auto& f : P.faces()) {
    const Vec3 a = sub(vs[static_cast<std::size_t>(f[0])], o);
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const Vec3 b = sub(vs[static_cast<std::size_t>(f[i])], o);
      const Vec3 c = sub(vs[static_cast<std::size_t>(f[i + 1])], o);
      six_vol += dot(a, cross(b, c));
    }
  }
  return six_vol / Rat(6);
}

Poly2 slice_at_s(const Polytope3& P, const Rat& s0) {
  if (P.is_empty()) return Poly2();
  const auto& vs = P.verts();
  std::vector<Point2> pts;
  for (const Point3& p : vs)
    if (p.s == s0) pts.push_back(Point2{p.x, p.v});
  for (const auto& [i, j] : P.edges()) {
    const Point3& a = vs[static_cast<std::size_t>(i)];
    const Point3& b = vs[static_cast<std::size_t>(j)];
    const Rat da = a.s - s0, db = b.s - s0;
    if ((da.sign() < 0 && db.sign() > 0) || (da.sign() > 0 && db.sign() < 0)) {
      const Rat t = da / (da - db);
      pts.push_back(Point2{a.x + t * (b.x - a.x), a.v + t * (b.v - a.v)});
    }
  }
  return hull2(std::move(pts));
}

std::pair<Rat, Rat> s_range(const Polytope3& P) {
  if (P.is_empty()) throw GeometryError("s_range: empty polytope");
  Rat lo = P.verts()[0].s, hi = lo;
  for (const Point3& p : P.verts()) {
    if (p.s < lo) lo = p.s;
    if (hi < p.s) hi = p.s;
  }
  return {lo, hi};
}

std::vector<HalfSpace3> facet_halfspaces(const Polytope3& P) {
  if (P.is_empty() || P.is_flat())
    throw GeometryError("facet_halfspaces: needs a full-dimensional polytope");
  std::vector<HalfSpace3> out;
  const auto& vs = P.verts();
  for (const auto& f : P.faces()) {
    // Any non-collinear triple along the cycle gives the outward normal.
    const Point3& a = vs[static_cast<std::size_t>(f[0])];
    Vec3 n{};
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      n = cross(sub(vs[static_cast<std::size_t>(f[i])], a),
                sub(vs[static_cast<std::size_t>(f[i + 1])], a));
      if (!vec_zero(n)) break;
    }
    if (vec_zero(n))
      throw GeometryError("facet_halfspaces: degenerate face cycle");
    out.push_back(HalfSpace3{n.x, n.v, n.s, pos_dot(n, a)});
  }
  return out;
}

Polytope3 intersect3(const Polytope3& P, const Polytope3& Q) {
  if (P.is_empty() || Q.is_empty()) return Polytope3();
  Polytope3 acc = P;
  for (const HalfSpace3& h : facet_halfspaces(Q)) {
    acc = clip_halfspace3(acc, h);
    if (acc.is_empty()) break;
  }
  return acc;
}

std::vector<Polytope3> subtract3(const Polytope3& P, const Polytope3& Q) {
  if (P.is_empty()) return {};
  if (Q.is_empty()) return {P};
  std::vector<Polytope3> out;
  Polytope3 rem = P;
  for (const HalfSpace3& h : facet_halfspaces(Q)) {
    if (rem.is_empty()) break;
    const HalfSpace3 hc{-h.nx, -h.nv, -h.ns, -h.offset};
    Polytope3 outside = clip_halfspace3(rem, hc);
    if (!outside.is_empty()) out.push_back(std::move(outside));
    rem = clip_halfspace3(rem, h);
  }
  return out;
}

Point3 Affine3::apply(const Point3& p) const {
  return Point3{m[0][0] * p.x + m[0][1] * p.v + m[0][2] * p.s + t[0],
                m[1][0] * p.x + m[1][1] * p.v + m[1][2] * p.s + t[1],
                m[2][0] * p.x + m[2][1] * p.v + m[2][2] * p.s + t[2]};
}

Rat Affine3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Polytope3 apply_affine(const Polytope3& P, const Affine3& f) {
  const Rat dt = f.det();
  if (dt.is_zero()) throw InvalidArgument("apply_affine: singular matrix");
  if (P.is_empty()) return Polytope3();
  std::vector<Point3> verts;
  verts.reserve(P.verts().size());
  for (const Point3& p : P.verts()) verts.push_back(f.apply(p));
  std::vector<std::vector<int>> faces = P.faces();
  if (dt.sign() < 0)
    for (auto& c : faces) std::reverse(c.begin(), c.end());
  return Polytope3::assemble(std::move(verts), std::move(faces), P.is_flat());
}

}  // namespace hextwist
