#include "hextwist/renorm.hpp"

#include <sstream>

#include "hextwist/error.hpp"

namespace hextwist {

namespace {

const Rat kZero(0);
const Rat kHalf(1, 2);
const Rat kOne(1);

bool is_reflection(const CodingTriple& t) {
  return t.m == 0 && t.n == 1 && !t.n_infinite && t.r == -1;
}

bool is_half_symbol(const CodingTriple& t) {
  return t.m == 2 && t.n == 0 && !t.n_infinite && t.r == 1;
}

bool is_expansion_symbol(const CodingTriple& t) {
  return t.m == 2 && t.n >= 0 && !t.n_infinite && t.r == 1;
}

// Shared shape checks for a finite coding sequence (Theorem-side rules:
// symbols are images of the coding map, reflections never repeat and never
// end the sequence).
void validate_coding(const std::vector<CodingTriple>& seq) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const CodingTriple& t = seq[k];
    if (!is_expansion_symbol(t) && !is_reflection(t))
      throw InvalidArgument("eval_expansion: symbol outside the coding image");
    if (is_reflection(t) && k + 1 < seq.size() && is_reflection(seq[k + 1]))
      throw InvalidArgument("eval_expansion: consecutive reflections");
  }
  if (!seq.empty() && is_reflection(seq.back()))
    throw InvalidArgument("eval_expansion: reflection cannot terminate");
}

}  // namespace

Rat renorm_R(const Rat& s) {
  if (s < kZero || s >= kOne)
    throw InvalidArgument("renorm_R: parameter outside [0, 1)");
  if (s < kHalf) {
    const Rat u = s / (kOne - Rat(2) * s);
    return u - Rat(rat_floor(u), 1);
  }
  return kOne - s;
}

Surd renorm_R_surd(const Surd& s) {
  const Surd zero{Rat(0)}, one{Rat(1)}, half{Rat(1, 2)};
  if (s < zero || s >= one)
    throw InvalidArgument("renorm_R_surd: parameter outside [0, 1)");
  if (s < half) {
    const Surd u = s / (one - Surd(Rat(2)) * s);
    return u - Surd(Rat(surd_floor(u), 1));
  }
  return one - s;
}

CodingTriple coding_map(const Rat& s) {
  if (s < kZero || s >= kOne)
    throw InvalidArgument("coding_map: parameter outside [0, 1)");
  if (s == kZero) return CodingTriple{0, 0, true, 1};
  if (s == kHalf) return CodingTriple{2, 0, false, 1};
  if (s < kHalf) {
    const Rat u = s / (kOne - Rat(2) * s);
    return CodingTriple{2, rat_floor(u).get_si(), false, 1};
  }
  return CodingTriple{0, 1, false, -1};
}

CodingTriple coding_map(const Surd& s) {
  const Surd zero{Rat(0)}, one{Rat(1)}, half{Rat(1, 2)};
  if (s < zero || s >= one)
    throw InvalidArgument("coding_map: parameter outside [0, 1)");
  if (s == zero) return CodingTriple{0, 0, true, 1};
  if (s == half) return CodingTriple{2, 0, false, 1};
  if (s < half) {
    const Surd u = s / (one - Surd(Rat(2)) * s);
    return CodingTriple{2, surd_floor(u).get_si(), false, 1};
  }
  return CodingTriple{0, 1, false, -1};
}

std::vector<CodingTriple> coding_sequence(const Rat& s) {
  if (s < kZero || s >= kOne)
    throw InvalidArgument("coding_sequence: parameter outside [0, 1)");
  std::vector<CodingTriple> out;
  Rat cur = s;
  // The orbit of a rational reaches 0 (stop before coding it) or 1/2 (code
  // it and stop) after finitely many steps: one step at or above 1/2 keeps
  // the denominator, every step below 1/2 shrinks it by at least two.
  while (cur != kZero) {
    out.push_back(coding_map(cur));
    if (cur == kHalf) break;
    cur = renorm_R(cur);
  }
  return out;
}

SplitExpansion split_expansion(const Rat& s) {
  SplitExpansion e;
  const std::vector<CodingTriple> seq = coding_sequence(s);
  long sign = 1;
  for (const CodingTriple& t : seq) {
    e.digits.push_back(t.m * sign);
    e.digits.push_back(t.n * sign);
    sign *= t.r;
  }
  // A terminal half-way symbol contributes a meaningless trailing zero
  // digit, which the expansion drops.
  if (!seq.empty() && is_half_symbol(seq.back())) {
    e.digits.pop_back();
    e.terminal = SplitTerminal::EndsAtHalf;
  } else {
    e.terminal = SplitTerminal::EndsAtZero;
  }
  return e;
}

std::string SplitExpansion::str() const {
  std::ostringstream os;
  os << "(0;";
  for (std::size_t i = 0; i < digits.size(); ++i)
    os << (i ? "," : " ") << digits[i];
  if (terminal == SplitTerminal::Infinite) os << ",...";
  os << ")";
  return os.str();
}

Rat eval_expansion(const std::vector<CodingTriple>& seq) {
  validate_coding(seq);
  if (seq.empty()) return Rat(0);  // the empty expansion codes 0 itself
  const std::size_t l = seq.size() - 1;
  // Innermost level: m_l + 1/n_l, except that the terminal half-way symbol
  // contributes m_l alone (its n is zero).
  Rat x = is_half_symbol(seq[l])
              ? Rat(seq[l].m)
              : Rat(seq[l].m) + kOne / Rat(seq[l].n);
  for (std::size_t i = l; i-- > 0;) {
    const CodingTriple& t = seq[i];
    x = Rat(t.m) + kOne / (Rat(t.n) + Rat(t.r) / x);
  }
  return kOne / x;
}

Rat eval_expansion(const SplitExpansion& e) {
  if (e.terminal == SplitTerminal::Infinite)
    throw InvalidArgument(
        "eval_expansion: a truncated infinite expansion has no exact value");
  // Reinstate the dropped trailing zero so digits always pair up.
  std::vector<long> digits = e.digits;
  if (e.terminal == SplitTerminal::EndsAtHalf) digits.push_back(0);
  if (digits.size() % 2 != 0)
    throw InvalidArgument("eval_expansion: odd digit count");
  std::vector<CodingTriple> seq;
  long sign = 1;
  for (std::size_t k = 0; 2 * k < digits.size(); ++k) {
    const long m = digits[2 * k] * sign;
    const long n = digits[2 * k + 1] * sign;
    if (m != 0 && m != 2)
      throw InvalidArgument("eval_expansion: digit pair is not a coding symbol");
    const int r = (m == 0) ? -1 : 1;
    seq.push_back(CodingTriple{m, n, false, r});
    sign *= r;
  }
  if (e.terminal == SplitTerminal::EndsAtHalf && !is_half_symbol(seq.back()))
    throw InvalidArgument("eval_expansion: half-way terminal mismatch");
  if (e.terminal == SplitTerminal::EndsAtZero && !seq.empty() &&
      is_half_symbol(seq.back()))
    throw InvalidArgument("eval_expansion: terminal symbol requires the "
                          "half-way terminal kind");
  return eval_expansion(seq);
}

Rat eval_signed_cf(const std::vector<long>& digits) {
  mpz_class p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (const long d : digits) {
    const mpz_class pn = d * p + p_prev;
    const mpz_class qn = d * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  if (q == 0)
    throw InvalidArgument("eval_signed_cf: the value is infinite");
  return Rat(p, q);
}

std::vector<std::pair<mpz_class, mpz_class>> convergents(
    const std::vector<long>& digits) {
  std::vector<std::pair<mpz_class, mpz_class>> out;
  out.reserve(digits.size() + 1);
  mpz_class p_prev = 1, q_prev = 0, p = 0, q = 1;
  out.emplace_back(p, q);
  for (const long d : digits) {
    const mpz_class pn = d * p + p_prev;
    const mpz_class qn = d * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
    out.emplace_back(p, q);
  }
  return out;
}

namespace {

// Continued fraction with the given digits after the leading zero.
Rat cf_value(std::initializer_list<long> digits) {
  return eval_signed_cf(std::vector<long>(digits));
}

}  // namespace

NamedInterval named_interval(char family, long m, long n, bool barred) {
  if (barred && family != 'A')
    throw InvalidArgument("named_interval: only family A has a barred form");
  Rat a, b;
  switch (family) {
    case 'A':
      if (m < 2 || n < 2)
        throw InvalidArgument("named_interval: family A needs m >= 2, n >= 2");
      if (barred) {
        a = cf_value({2, m, n});
        b = cf_value({2, m, n - 1});
      } else {
        a = cf_value({2, 2, 2, m, n});
        b = cf_value({2, 2, 2, m, n - 1});
      }
      break;
    case 'B':
      if (m < 2 || n < 1)
        throw InvalidArgument("named_interval: family B needs m >= 2, n >= 1");
      a = cf_value({2, m, 1, n});
      b = cf_value({2, m, 1, n + 1});
      break;
    case 'C':
      if (m < 1 || m % 2 == 0 || n < 1)
        throw InvalidArgument(
            "named_interval: family C needs odd m >= 1, n >= 1");
      a = cf_value({2, 1, m, n});
      b = cf_value({2, 1, m, n + 1});
      break;
    case 'D':
      if (m < 2 || m % 2 != 0 || n < 2)
        throw InvalidArgument(
            "named_interval: family D needs even m >= 2, n >= 2");
      a = cf_value({2, 1, m, n});
      b = cf_value({2, 1, m, n + 1});
      break;
    case 'E':
      if (m < 2 || m % 2 != 0 || n < 2)
        throw InvalidArgument(
            "named_interval: family E needs even m >= 2, n >= 2");
      a = cf_value({2, 1, m, 1, n});
      b = cf_value({2, 1, m, 1, n - 1});
      break;
    default:
      throw InvalidArgument("named_interval: unknown family");
  }
  NamedInterval out;
  out.family = family;
  out.barred = barred;
  out.m = m;
  out.n = n;
  out.lo = (a < b) ? a : b;
  out.hi = (a < b) ? b : a;
  return out;
}

}  // namespace hextwist
