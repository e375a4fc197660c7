#include "hextwist/geom2.hpp"

#include <algorithm>
#include <ostream>

#include "hextwist/error.hpp"

namespace hextwist {

bool lex_less(const Point2& a, const Point2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.v < b.v;
}

Rat cross2(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.v - a.v) - (b.v - a.v) * (c.x - a.x);
}

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << "(" << p.x << ", " << p.v << ")";
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) {
  if (p.is_empty()) return os << "Empty";
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << " ";
    os << p.verts()[i];
  }
  return os << "]";
}

namespace {

// Twice the signed area of the loop (positive for counter-clockwise).
Rat shoelace2(const std::vector<Point2>& v) {
  Rat acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    acc += a.x * b.v - b.x * a.v;
  }
  return acc;
}

// Removes consecutive duplicates and collinear vertices from a closed loop.
void strip_degenerate(std::vector<Point2>& v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size();) {
      const Point2& prev = v[(i + v.size() - 1) % v.size()];
      const Point2& cur = v[i];
      const Point2& next = v[(i + 1) % v.size()];
      if (cur == next || cross2(prev, cur, next).is_zero()) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
}

void rotate_to_canonical(std::vector<Point2>& v) {
  auto it = std::min_element(v.begin(), v.end(), lex_less);
  std::rotate(v.begin(), it, v.end());
}

}  // namespace

Poly2 Poly2::normalize_loop(std::vector<Point2> verts) {
  strip_degenerate(verts);
  if (verts.size() < 3) return Poly2();
  Rat area2 = shoelace2(verts);
  if (area2.is_zero()) return Poly2();
  if (area2.sign() < 0) std::reverse(verts.begin(), verts.end());
  rotate_to_canonical(verts);
  Poly2 out;
  out.verts_ = std::move(verts);
  return out;
}

Poly2 Poly2::from_vertices(std::vector<Point2> verts) {
  Poly2 out = normalize_loop(std::move(verts));
  if (out.is_empty())
    throw GeometryError("Poly2: degenerate vertex loop (fewer than 3 "
                        "effective vertices or zero area)");
  const auto& v = out.verts_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross2(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]).sign() <= 0)
      throw GeometryError("Poly2: vertex loop is not convex");
  }
  return out;
}

int Poly2::side_of(const Point2& p) const {
  if (is_empty()) return -1;
  bool on_boundary = false;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Rat c = cross2(verts_[i], verts_[(i + 1) % verts_.size()], p);
    if (c.sign() < 0) return -1;
    if (c.is_zero()) on_boundary = true;
  }
  return on_boundary ? 0 : 1;
}

Point2 Poly2::interior_point() const {
  if (is_empty()) throw GeometryError("Poly2: empty polygon has no interior");
  Rat sx, sv;
  for (const Point2& p : verts_) {
    sx += p.x;
    sv += p.v;
  }
  const Rat n(static_cast<long>(verts_.size()));
  return Point2{sx / n, sv / n};
}

Poly2 Poly2::translated(const Rat& dx, const Rat& dv) const {
  if (is_empty()) return Poly2();
  std::vector<Point2> out = verts_;
  for (Point2& p : out) {
    p.x += dx;
    p.v += dv;
  }
  rotate_to_canonical(out);
  Poly2 r;
  r.verts_ = std::move(out);
  return r;
}

Poly2 clip_halfplane(const Poly2& p, const Rat& a, const Rat& b, const Rat& c) {
  if (a.is_zero() && b.is_zero())
    throw InvalidArgument("clip_halfplane: zero normal");
  if (p.is_empty()) return Poly2();
  const auto& v = p.verts();
  std::vector<Point2> out;
  out.reserve(v.size() + 1);
  std::vector<Rat> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    d[i] = a * v[i].x + b * v[i].v - c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t j = (i + 1) % v.size();
    if (d[i].sign() <= 0) out.push_back(v[i]);
    if ((d[i].sign() < 0 && d[j].sign() > 0) ||
        (d[i].sign() > 0 && d[j].sign() < 0)) {
      const Rat t = d[i] / (d[i] - d[j]);
      out.push_back(Point2{v[i].x + t * (v[j].x - v[i].x),
                           v[i].v + t * (v[j].v - v[i].v)});
    }
  }
  return Poly2::normalize_loop(std::move(out));
}

Poly2 poly_intersect(const Poly2& p, const Poly2& q) {
  if (p.is_empty() || q.is_empty()) return Poly2();
  Poly2 acc = p;
  const auto& qs = q.verts();
  for (std::size_t i = 0; i < qs.size() && !acc.is_empty(); ++i) {
    const Point2& u = qs[i];
    const Point2& w = qs[(i + 1) % qs.size()];
    // Interior of a CCW polygon is the left side of each directed edge:
    // (w.v-u.v)*x - (w.x-u.x)*v <= (w.v-u.v)*u.x - (w.x-u.x)*u.v
    const Rat a = w.v - u.v;
    const Rat b = u.x - w.x;
    acc = clip_halfplane(acc, a, b, a * u.x + b * u.v);
  }
  return acc;
}

Rat poly_area(const Poly2& p) {
  if (p.is_empty()) return Rat(0);
  return shoelace2(p.verts()) / Rat(2);
}

Rat poly_area(const std::vector<Point2>& verts) {
  if (verts.size() < 3)
    throw GeometryError("poly_area: fewer than 3 vertices");
  return shoelace2(verts) / Rat(2);
}

std::vector<Poly2> poly_subtract(const Poly2& p, const Poly2& q) {
  if (p.is_empty()) return {};
  if (q.is_empty()) return {p};
  std::vector<Poly2> out;
  Poly2 rem = p;
  const auto& qs = q.verts();
  for (std::size_t i = 0; i < qs.size() && !rem.is_empty(); ++i) {
    const Point2& u = qs[i];
    const Point2& w = qs[(i + 1) % qs.size()];
    const Rat a = w.v - u.v;
    const Rat b = u.x - w.x;
    const Rat c = a * u.x + b * u.v;
    // The part on the outside of this edge leaves the difference.
    Poly2 outside = clip_halfplane(rem, -a, -b, -c);
    if (!outside.is_empty()) out.push_back(std::move(outside));
    rem = clip_halfplane(rem, a, b, c);
  }
  return out;  // the final remainder is p intersect q: not part of p \ q
}

bool poly2_less(const Poly2& a, const Poly2& b) {
  const auto &va = a.verts(), &vb = b.verts();
  for (std::size_t i = 0; i < va.size() && i < vb.size(); ++i) {
    if (va[i] != vb[i]) return lex_less(va[i], vb[i]);
  }
  return va.size() < vb.size();
}

Poly2 hull2(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return Poly2();
  const std::size_t n = pts.size();
  std::vector<Point2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return Poly2::normalize_loop(std::move(h));
}

}  // namespace hextwist
