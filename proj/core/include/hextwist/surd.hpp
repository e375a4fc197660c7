#pragma once

#include <string>

#include "hextwist/rat.hpp"

namespace hextwist {

// Exact quadratic irrational a + b*sqrt(d) with rational a, b and a fixed
// positive square-free integer radicand d. Construction normalizes the
// radicand (square factors are folded into b); a rational value is stored
// with b = 0, d = 1. Arithmetic between two values with different
// (normalized) irrational radicands throws MixedRadicand.
class Surd {
 public:
  Surd() : a_(0), b_(0), d_(1) {}
  Surd(Rat a) : a_(std::move(a)), b_(0), d_(1) {}  // NOLINT: implicit
  Surd(Rat a, Rat b, long d);

  static Surd sqrt_of(long d) { return Surd(Rat(0), Rat(1), d); }
  // Accepts "a", "a+b*sqrt(d)", "b*sqrt(d)", "sqrt(d)" with signed terms
  // in either order, e.g. "-1+1*sqrt(2)" or "sqrt(2)-1".
  static Surd parse(const std::string& text);
  // "a+b*sqrt(d)" (sign-aware), or just "a" for rational values.
  std::string str() const;

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  // Exact: +1, 0 or -1. No floating point is consulted.
  int sign() const;
  double approx() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { x += y; return x; }
  friend Surd operator-(Surd x, const Surd& y) { x -= y; return x; }
  friend Surd operator*(Surd x, const Surd& y) { x *= y; return x; }
  friend Surd operator/(Surd x, const Surd& y) { x /= y; return x; }
  friend Surd operator-(const Surd& x) { return Surd(-x.a_, -x.b_, x.d_); }

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
  friend bool operator!=(const Surd& x, const Surd& y) { return (x - y).sign() != 0; }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return (x - y).sign() >= 0; }

 private:
  // Merges radicands for a binary op; throws MixedRadicand if impossible.
  long merged_d(const Surd& o) const;

  Rat a_, b_;
  long d_;
};

// Largest integer n with n <= x, exact (integer square-root bracketing
// followed by exact comparison fixes).
mpz_class surd_floor(const Surd& x);

}  // namespace hextwist
