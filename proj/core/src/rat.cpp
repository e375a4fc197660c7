#include "hextwist/rat.hpp"

#include <cctype>
#include <ostream>

#include "hextwist/error.hpp"

namespace hextwist {

Rat::Rat(long num, long den) {
  if (den == 0) throw InvalidArgument("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw InvalidArgument("Rat: zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpz_class num, mpz_class den) {
  if (den == 0) throw InvalidArgument("Rat: zero denominator");
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidArgument("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::parse(const std::string& text) {
  if (text.empty()) throw ParseError("Rat: empty string");
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw ParseError("Rat: malformed '" + text + "'");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("Rat: malformed '" + text + "'");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("Rat: malformed '" + text + "'");
  };
  auto to_mpz = [](const std::string& s) {
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    check_int(text);
    return Rat(to_mpz(text), mpz_class(1));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d = to_mpz(den);
  if (d == 0) throw ParseError("Rat: zero denominator in '" + text + "'");
  return Rat(to_mpz(num), std::move(d));
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

mpz_class rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

mpz_class rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace hextwist
