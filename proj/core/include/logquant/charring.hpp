#pragma once

// Exact arithmetic in character rings of tori and SU(2).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "logquant/numeric.hpp"

namespace logquant {

/// A point of the weight lattice Z^r.
struct Weight {
  std::vector<Integer> coords;

  Weight() = default;
  explicit Weight(std::vector<Integer> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c);

  static Weight zero(std::size_t rank) { return Weight(std::vector<Integer>(rank, Integer(0))); }

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;

  const Integer& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

Integer pairing(const Weight& w, const Weight& xi);
RationalVector to_rational(const Weight& w);

/// A univariate Laurent polynomial with integer coefficients, stored sparse.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Terms& terms);
  static LaurentPoly monomial(std::int64_t exponent, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(std::int64_t exponent) const;
  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Integer& s, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

/// Exact quotient num/den in Z[t, t^-1]; nullopt when the division leaves a
/// remainder.  den must be nonzero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// A finite character of a rank-r torus: weights with nonzero multiplicities.
class Character {
 public:
  using Terms = std::map<Weight, Integer>;

  explicit Character(std::size_t rank) : rank_(rank) {}

  /// Merges repeated weights and drops zero totals.  Throws RankMismatch when
  /// a weight has the wrong length.
  static Character from_terms(std::size_t rank, const std::vector<std::pair<Weight, Integer>>& terms);
  /// Rank-1 convenience: exponent -> multiplicity.
  static Character from_rank1(const std::map<std::int64_t, std::int64_t>& terms);
  static Character from_laurent(const LaurentPoly& p);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

Character char_add(const Character& a, const Character& b);
Character char_negate(const Character& a);
Integer multiplicity(const Character& a, const Weight& lambda);
Integer dimension(const Character& a);
Integer invariant_part(const Character& a);
LaurentPoly specialize(const Character& a, const Weight& xi);

inline Character operator+(const Character& a, const Character& b) { return char_add(a, b); }
inline Character operator-(const Character& a) { return char_negate(a); }

/// One summand sign * t^mu / prod_i (1 - t^{w_i}).  Weights are kept exactly as
/// given; no sign normalisation happens at storage time.
struct RationalTerm {
  int sign = 1;
  std::int64_t mu = 0;
  std::vector<std::int64_t> denom_weights;

  friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

class RationalChar {
 public:
  RationalChar() = default;
  /// Throws NotFinite on a zero denominator weight or a sign other than +-1.
  explicit RationalChar(std::vector<RationalTerm> terms);
  static RationalChar from_laurent(const LaurentPoly& p);

  const std::vector<RationalTerm>& terms() const { return terms_; }
  RationalChar scaled(int sign) const;

 private:
  std::vector<RationalTerm> terms_;
};

/// Sums the terms over a common denominator and divides exactly.  Throws
/// NotFinite when the sum is not a Laurent polynomial.
LaurentPoly rational_to_laurent(const RationalChar& r);

/// Character of the irreducible SU(2) representation with highest weight j,
/// as a Laurent polynomial in the maximal-torus variable.
LaurentPoly weyl_char(std::int64_t j);

/// Virtual SU(2) character: highest weight -> nonzero multiplicity.
class SU2Char {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  SU2Char() = default;
  explicit SU2Char(const Terms& mults);

  const Terms& mults() const { return mults_; }
  bool is_zero() const { return mults_.empty(); }
  LaurentPoly to_laurent() const;

  SU2Char operator-() const;
  friend SU2Char operator+(const SU2Char& a, const SU2Char& b);
  friend SU2Char operator*(const Integer& s, const SU2Char& a);
  friend bool operator==(const SU2Char&, const SU2Char&) = default;

 private:
  Terms mults_;
};

/// Highest-weight peeling.  Throws NotSU2Character.
SU2Char su2_decompose(const LaurentPoly& p);

}  // namespace logquant
