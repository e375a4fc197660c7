#pragma once

// Parameter-side arithmetic: the renormalization map on the parameter
// interval, the coding of its itineraries, splitted continued-fraction
// expansions with their convergents, and the named parameter intervals on
// which the maximal-domain counts are constant.

#include <string>
#include <vector>

#include "hextwist/rat.hpp"
#include "hextwist/surd.hpp"

namespace hextwist {

// One renormalization step: s/(1-2s) mod 1 below the half-way point, the
// reflection 1-s at and above it. Requires 0 <= s < 1.
Rat renorm_R(const Rat& s);

// The same map on quadratic irrationals (exact floor via integer square
// root bracketing). Requires 0 <= s < 1.
Surd renorm_R_surd(const Surd& s);

// One symbol of the itinerary coding. The shapes are (2,n,+1) for
// 0 < s < 1/2 with n = floor(s/(1-2s)), (2,0,+1) for s = 1/2, (0,1,-1) for
// 1/2 < s < 1 and the sentinel (0,inf,+1) for s = 0 (n_infinite set).
struct CodingTriple {
  long m = 0;
  long n = 0;
  bool n_infinite = false;
  int r = 1;

  bool operator==(const CodingTriple& o) const {
    return m == o.m && n == o.n && n_infinite == o.n_infinite && r == o.r;
  }
  bool operator!=(const CodingTriple& o) const { return !(*this == o); }
};

CodingTriple coding_map(const Rat& s);
CodingTriple coding_map(const Surd& s);

// The finite itinerary coding of a rational parameter: triples for the
// iterates until the orbit hits 0 (stop before coding it) or 1/2 (code it
// and stop). The sequence is empty only for s = 0.
std::vector<CodingTriple> coding_sequence(const Rat& s);

enum class SplitTerminal {
  EndsAtZero,  // the orbit reached 0: all digit pairs are present
  EndsAtHalf,  // the orbit reached 1/2: the final zero digit is dropped
  Infinite,    // truncation of an irrational expansion
};

// Digits of the splitted expansion "(0; a_1, a_2, ...)": the coding pairs
// (m_k, n_k) interleaved, each scaled by the running product of the signs
// r_0..r_{k-1}.
struct SplitExpansion {
  std::vector<long> digits;
  SplitTerminal terminal = SplitTerminal::EndsAtZero;

  std::string str() const;
};

SplitExpansion split_expansion(const Rat& s);

// Reconstructs the coded parameter from a finite coding sequence by the
// nested formula: the innermost level is m_l + 1/n_l, or just m_l when the
// sequence ends in the half-way symbol (2,0,+1); each outer level is
// m_k + 1/(n_k + r_k/inner). Throws InvalidArgument if the sequence is not
// a valid finite coding (shape, consecutive-reflection and terminal rules).
Rat eval_expansion(const std::vector<CodingTriple>& seq);

// Evaluates a splitted expansion after validating its digit shape.
Rat eval_expansion(const SplitExpansion& e);

// Plain evaluation of "(0; d_1, d_2, ..., d_k)" as a signed continued
// fraction by the matrix recurrence; no splitted-shape validation. Throws
// InvalidArgument if the value is infinite (final denominator zero).
Rat eval_signed_cf(const std::vector<long>& digits);

// Convergent pairs (p_k, q_k), k = 0..K, of a digit list, by the standard
// recurrence p_k = d_k p_{k-1} + p_{k-2} seeded with p_0/q_0 = 0/1 (and
// p_{-1}/q_{-1} = 1/0). A zero digit d_1 makes the intermediate pair
// (1, 0); the final pair always reproduces the exact value.
std::vector<std::pair<mpz_class, mpz_class>> convergents(
    const std::vector<long>& digits);

// The named parameter intervals with constant maximal-domain counts; the
// families follow the classification by continued-fraction shape. The
// barred variant of family A is the image interval under one
// renormalization step.
struct NamedInterval {
  char family = 'A';
  bool barred = false;
  long m = 0;
  long n = 0;
  Rat lo, hi;
};

// family in {'A','B','C','D','E'}; barred only for family 'A'. Endpoints
// are evaluated from the continued-fraction shapes and sorted. Throws
// InvalidArgument for (m, n) outside the family's stated range.
NamedInterval named_interval(char family, long m, long n, bool barred = false);

}  // namespace hextwist
