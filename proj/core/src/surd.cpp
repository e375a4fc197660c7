#include "hextwist/surd.hpp"

#include <cctype>
#include <cmath>

#include "hextwist/error.hpp"

namespace hextwist {

namespace {

// Factors out the largest square divisor: d = f*f*rest with rest square-free.
void extract_square(long d, long* f, long* rest) {
  *f = 1;
  *rest = d;
  for (long p = 2; p * p <= *rest; ++p) {
    while (*rest % (p * p) == 0) {
      *rest /= p * p;
      *f *= p;
    }
  }
}

}  // namespace

Surd::Surd(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ <= 0) throw InvalidArgument("Surd: radicand must be positive");
  long f = 1;
  extract_square(d_, &f, &d_);
  if (f != 1) b_ *= Rat(f);
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_.is_zero()) d_ = 1;
}

long Surd::merged_d(const Surd& o) const {
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero()) return d_;
  if (d_ != o.d_)
    throw MixedRadicand("Surd: sqrt(" + std::to_string(d_) + ") vs sqrt(" +
                        std::to_string(o.d_) + ")");
  return d_;
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = merged_d(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = 1;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  d_ = merged_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) d_ = 1;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  const long d = merged_d(o);
  // (a1 + b1 sqrt(d)) (a2 + b2 sqrt(d)) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) sqrt(d)
  Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  Rat b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = b_.is_zero() ? 1 : d;
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  const long d = merged_d(o);
  if (o.sign() == 0) throw InvalidArgument("Surd: division by zero");
  // Multiply by the conjugate: 1/(a2 + b2 sqrt(d)) = (a2 - b2 sqrt(d)) / (a2^2 - b2^2 d).
  const Rat denom = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d);
  Surd conj(o.a_ / denom, -o.b_ / denom, d);
  *this *= conj;
  return *this;
}

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d; the larger magnitude wins.
  const Rat lhs = a_ * a_;
  const Rat rhs = b_ * b_ * Rat(d_);
  if (lhs == rhs) return 0;
  const int mag = lhs > rhs ? 1 : -1;  // +1 iff |a| > |b sqrt(d)|
  return mag > 0 ? sa : sb;
}

double Surd::approx() const {
  return a_.approx() + b_.approx() * std::sqrt(static_cast<double>(d_));
}

mpz_class surd_floor(const Surd& x) {
  // Write x = (A + B sqrt(d)) / Q with integers A, B and Q > 0.
  const mpz_class qa = x.a().den(), qb = x.b().den();
  mpz_class Q = qa * qb / gcd(qa, qb);
  mpz_class A = x.a().num() * (Q / qa);
  mpz_class B = x.b().num() * (Q / qb);
  // Bracket B*sqrt(d) between consecutive integers.
  mpz_class N = B * B * x.d();
  mpz_class r = sqrt(N);  // floor of sqrt(N)
  const bool exact = (r * r == N);
  mpz_class s_lo = (sgn(B) >= 0) ? r : (exact ? mpz_class(-r) : mpz_class(-r - 1));
  mpz_class c;
  mpz_fdiv_q(c.get_mpz_t(), mpz_class(A + s_lo).get_mpz_t(), Q.get_mpz_t());
  // Fix up with exact comparisons (at most a couple of steps by construction).
  auto geq = [&x](const mpz_class& n) {  // x >= n ?
    Surd diff = x - Surd(Rat(n, mpz_class(1)));
    return diff.sign() >= 0;
  };
  while (!geq(c)) c -= 1;
  while (geq(c + 1)) c += 1;
  return c;
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  std::string out;
  const bool has_a = !a_.is_zero();
  if (has_a) out += a_.str();
  if (b_.sign() < 0)
    out += "-";
  else if (has_a)
    out += "+";
  out += abs(b_).str() + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

Surd Surd::parse(const std::string& text) {
  // Grammar: term (('+'|'-') term)* with at most one rational term and at
  // most one sqrt term; term := rat | rat '*' 'sqrt(' int ')' | 'sqrt(' int ')'.
  if (text.empty()) throw ParseError("Surd: empty string");
  Rat a(0), b(0);
  long d = 0;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("Surd: expected '+' or '-' in '" + text + "'");
    }
    first = false;
    if (i >= text.size()) throw ParseError("Surd: dangling sign in '" + text + "'");
    // Optional rational coefficient.
    std::size_t j = i;
    while (j < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
      ++j;
    Rat coef(1);
    bool has_coef = j > i;
    if (has_coef) {
      coef = Rat::parse(text.substr(i, j - i));
      i = j;
      if (i < text.size() && text[i] == '*') ++i;
    }
    if (i + 5 <= text.size() && text.compare(i, 5, "sqrt(") == 0) {
      std::size_t close = text.find(')', i + 5);
      if (close == std::string::npos) throw ParseError("Surd: missing ')' in '" + text + "'");
      long rad = std::stol(text.substr(i + 5, close - (i + 5)));
      if (d != 0) throw ParseError("Surd: more than one sqrt term in '" + text + "'");
      d = rad;
      b = sign < 0 ? -coef : coef;
      i = close + 1;
    } else if (has_coef) {
      a += sign < 0 ? -coef : coef;
    } else {
      throw ParseError("Surd: malformed term in '" + text + "'");
    }
  }
  if (d == 0) return Surd(a);
  return Surd(a, b, d);
}

}  // namespace hextwist
