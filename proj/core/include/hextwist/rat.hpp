#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace hextwist {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class so parsing, serialization
// and floor semantics are pinned down in one place.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit — integers are rationals
  Rat(long num, long den);
  explicit Rat(mpq_class q);
  Rat(mpz_class num, mpz_class den);

  // Accepts "p/q" or "p" with optional sign; q must be nonzero.
  static Rat parse(const std::string& text);
  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& mpq() const { return q_; }
  const mpz_class num() const { return q_.get_num(); }
  const mpz_class den() const { return q_.get_den(); }

  double approx() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class q_;
};

// Largest integer n with n <= r, computed exactly.
mpz_class rat_floor(const Rat& r);
// Smallest integer n with n >= r, computed exactly.
mpz_class rat_ceil(const Rat& r);

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

}  // namespace hextwist
