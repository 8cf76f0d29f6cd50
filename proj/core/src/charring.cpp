#include "logquant/charring.hpp"

#include <algorithm>
#include <string>

#include "logquant/error.hpp"

namespace logquant {

namespace {

// Dense working form used by the division routines: coefficient i belongs to
// exponent offset + i.
struct Dense {
  std::int64_t offset = 0;
  std::vector<Integer> c;

  bool all_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
  }

  void trim() {
    std::size_t lo = 0;
    while (lo < c.size() && c[lo] == 0) ++lo;
    if (lo == c.size()) {
      c.clear();
      offset = 0;
      return;
    }
    std::size_t hi = c.size();
    while (c[hi - 1] == 0) --hi;
    c = std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(lo),
                             c.begin() + static_cast<std::ptrdiff_t>(hi));
    offset += static_cast<std::int64_t>(lo);
  }
};

constexpr std::int64_t kMaxDenseSpan = 50'000'000;

void check_span(std::int64_t lo, std::int64_t hi) {
  if (hi - lo + 1 > kMaxDenseSpan) {
    throw Error(ErrorKind::SizeLimit, "Laurent polynomial exponent span " +
                                          std::to_string(hi - lo + 1) + " exceeds dense limit");
  }
}

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  check_span(p.min_exponent(), p.max_exponent());
  d.offset = p.min_exponent();
  d.c.assign(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), Integer(0));
  for (const auto& [e, k] : p.terms()) d.c[static_cast<std::size_t>(e - d.offset)] = k;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly::Terms t;
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (d.c[i] != 0) t.emplace(d.offset + static_cast<std::int64_t>(i), d.c[i]);
  }
  return LaurentPoly(t);
}

// p <- p * (1 - t^w), w > 0.
void multiply_binomial(Dense& p, std::int64_t w) {
  if (p.c.empty()) return;
  const auto n = p.c.size();
  const auto sw = static_cast<std::size_t>(w);
  p.c.resize(n + sw, Integer(0));
  for (std::size_t i = n + sw; i-- > sw;) p.c[i] -= p.c[i - sw];
}

// p <- p / (1 - t^w), w > 0; false when (1 - t^w) does not divide p.
bool divide_binomial(Dense& p, std::int64_t w) {
  p.trim();
  if (p.c.empty()) return true;
  const auto sw = static_cast<std::size_t>(w);
  const auto n = p.c.size();
  if (n <= sw) return false;
  const auto nq = n - sw;
  std::vector<Integer> q(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    q[i] = p.c[i];
    if (i >= sw) q[i] += q[i - sw];
  }
  for (std::size_t i = nq; i < n; ++i) {
    const Integer expected = i >= sw ? Integer(-q[i - sw]) : Integer(0);
    if (p.c[i] != expected) return false;
  }
  p.c = std::move(q);
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(std::initializer_list<std::int64_t> c) {
  coords.reserve(c.size());
  for (auto x : c) coords.emplace_back(x);
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; });
}

Integer pairing(const Weight& w, const Weight& xi) {
  if (w.rank() != xi.rank()) {
    throw Error(ErrorKind::RankMismatch, "pairing of rank " + std::to_string(w.rank()) +
                                             " with rank " + std::to_string(xi.rank()));
  }
  Integer s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w[i] * xi[i];
  return s;
}

RationalVector to_rational(const Weight& w) {
  RationalVector v;
  v.reserve(w.rank());
  for (const auto& x : w.coords) v.emplace_back(x);
  return v;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (const auto& [e, k] : terms) {
    if (k != 0) terms_.emplace(e, k);
  }
}

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, const Integer& coeff) {
  return LaurentPoly(Terms{{exponent, coeff}});
}

Integer LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, k] : r.terms_) k = -k;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, k] : b.terms_) {
    auto [it, inserted] = r.terms_.emplace(e, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Terms acc;
  for (const auto& [ea, ka] : a.terms_) {
    for (const auto& [eb, kb] : b.terms_) acc[ea + eb] += ka * kb;
  }
  return LaurentPoly(acc);
}

LaurentPoly operator*(const Integer& s, const LaurentPoly& a) {
  if (s == 0) return {};
  LaurentPoly r = a;
  for (auto& [e, k] : r.terms_) k *= s;
  return r;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::NotFinite, "division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly{};
  // Shift both to ordinary polynomials with nonzero constant term.  t is a
  // unit, so divisibility is unaffected.
  Dense n = to_dense(num);
  Dense d = to_dense(den);
  const std::int64_t shift = n.offset - d.offset;
  if (n.c.size() < d.c.size()) return std::nullopt;
  const std::size_t nq = n.c.size() - d.c.size() + 1;
  const Integer& lead = d.c.back();
  std::vector<Integer> q(nq);
  for (std::size_t k = nq; k-- > 0;) {
    const Integer& top = n.c[k + d.c.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    q[k] = top / lead;
    for (std::size_t i = 0; i < d.c.size(); ++i) n.c[k + i] -= q[k] * d.c[i];
  }
  if (!n.all_zero()) return std::nullopt;
  Dense out{shift, std::move(q)};
  return from_dense(out);
}

// ---------------------------------------------------------------------------
// Character

Character Character::from_terms(std::size_t rank,
                                const std::vector<std::pair<Weight, Integer>>& terms) {
  Character c(rank);
  for (const auto& [w, m] : terms) {
    if (w.rank() != rank) {
      throw Error(ErrorKind::RankMismatch, "weight of rank " + std::to_string(w.rank()) +
                                               " in a rank-" + std::to_string(rank) + " character");
    }
    c.terms_[w] += m;
  }
  std::erase_if(c.terms_, [](const auto& kv) { return kv.second == 0; });
  return c;
}

Character Character::from_rank1(const std::map<std::int64_t, std::int64_t>& terms) {
  std::vector<std::pair<Weight, Integer>> t;
  for (const auto& [e, m] : terms) t.emplace_back(Weight{e}, Integer(m));
  return from_terms(1, t);
}

Character Character::from_laurent(const LaurentPoly& p) {
  std::vector<std::pair<Weight, Integer>> t;
  for (const auto& [e, k] : p.terms()) t.emplace_back(Weight{e}, k);
  return from_terms(1, t);
}

Character char_add(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::RankMismatch, "adding characters of rank " + std::to_string(a.rank()) +
                                             " and " + std::to_string(b.rank()));
  }
  std::vector<std::pair<Weight, Integer>> t(a.terms().begin(), a.terms().end());
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return Character::from_terms(a.rank(), t);
}

Character char_negate(const Character& a) {
  std::vector<std::pair<Weight, Integer>> t;
  for (const auto& [w, m] : a.terms()) t.emplace_back(w, -m);
  return Character::from_terms(a.rank(), t);
}

Integer multiplicity(const Character& a, const Weight& lambda) {
  if (lambda.rank() != a.rank()) {
    throw Error(ErrorKind::RankMismatch, "weight of rank " + std::to_string(lambda.rank()) +
                                             " queried in a rank-" + std::to_string(a.rank()) +
                                             " character");
  }
  auto it = a.terms().find(lambda);
  return it == a.terms().end() ? Integer(0) : it->second;
}

Integer dimension(const Character& a) {
  Integer s = 0;
  for (const auto& [w, m] : a.terms()) s += m;
  return s;
}

Integer invariant_part(const Character& a) { return multiplicity(a, Weight::zero(a.rank())); }

LaurentPoly specialize(const Character& a, const Weight& xi) {
  if (xi.rank() != a.rank()) {
    throw Error(ErrorKind::RankMismatch, "specializing a rank-" + std::to_string(a.rank()) +
                                             " character along a rank-" +
                                             std::to_string(xi.rank()) + " subgroup");
  }
  LaurentPoly::Terms acc;
  for (const auto& [w, m] : a.terms()) acc[to_int64(pairing(w, xi), "specialized exponent")] += m;
  return LaurentPoly(acc);
}

// ---------------------------------------------------------------------------
// RationalChar

RationalChar::RationalChar(std::vector<RationalTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.sign != 1 && t.sign != -1) {
      throw Error(ErrorKind::NotFinite, "rational term sign must be +1 or -1");
    }
    for (auto w : t.denom_weights) {
      if (w == 0) throw Error(ErrorKind::NotFinite, "denominator factor (1 - t^0) vanishes");
    }
  }
}

RationalChar RationalChar::from_laurent(const LaurentPoly& p) {
  std::vector<RationalTerm> terms;
  for (const auto& [e, k] : p.terms()) {
    const int s = k > 0 ? 1 : -1;
    const Integer reps = abs(k);
    for (Integer i = 0; i < reps; ++i) terms.push_back({s, e, {}});
  }
  return RationalChar(std::move(terms));
}

RationalChar RationalChar::scaled(int sign) const {
  RationalChar r = *this;
  for (auto& t : r.terms_) t.sign *= sign;
  return r;
}

LaurentPoly rational_to_laurent(const RationalChar& r) {
  // 1/(1 - t^{-u}) = -t^u/(1 - t^u), so every factor can be brought to a
  // positive exponent before forming the common denominator.
  struct Normalized {
    int sign;
    std::int64_t mu;
    std::map<std::int64_t, int> factors;
  };
  std::vector<Normalized> terms;
  std::map<std::int64_t, int> common;
  for (const auto& t : r.terms()) {
    Normalized n{t.sign, t.mu, {}};
    for (auto w : t.denom_weights) {
      if (w < 0) {
        n.sign = -n.sign;
        n.mu -= w;
        w = -w;
      }
      ++n.factors[w];
    }
    for (const auto& [w, k] : n.factors) common[w] = std::max(common[w], k);
    terms.push_back(std::move(n));
  }
  if (terms.empty()) return {};

  std::int64_t lo = terms.front().mu;
  std::int64_t hi = lo;
  for (const auto& t : terms) {
    std::int64_t span = 0;
    for (const auto& [w, k] : common) span += w * (k - (t.factors.count(w) ? t.factors.at(w) : 0));
    lo = std::min(lo, t.mu);
    hi = std::max(hi, t.mu + span);
  }
  check_span(lo, hi);

  Dense numerator{lo, std::vector<Integer>(static_cast<std::size_t>(hi - lo + 1), Integer(0))};
  for (const auto& t : terms) {
    Dense part{t.mu, {Integer(t.sign)}};
    for (const auto& [w, k] : common) {
      const int own = t.factors.count(w) ? t.factors.at(w) : 0;
      for (int i = own; i < k; ++i) multiply_binomial(part, w);
    }
    const auto base = static_cast<std::size_t>(t.mu - lo);
    for (std::size_t i = 0; i < part.c.size(); ++i) numerator.c[base + i] += part.c[i];
  }

  for (const auto& [w, k] : common) {
    for (int i = 0; i < k; ++i) {
      if (!divide_binomial(numerator, w)) {
        throw Error(ErrorKind::NotFinite,
                    "fixed-point sum is not a finite character: (1 - t^" + std::to_string(w) +
                        ") does not divide the numerator");
      }
    }
  }
  return from_dense(numerator);
}

// ---------------------------------------------------------------------------
// SU(2)

LaurentPoly weyl_char(std::int64_t j) {
  if (j < 0) throw Error(ErrorKind::NotSU2Character, "highest weight must be nonnegative");
  const LaurentPoly num = LaurentPoly({{j + 1, Integer(1)}, {-j - 1, Integer(-1)}});
  const LaurentPoly den = LaurentPoly({{1, Integer(1)}, {-1, Integer(-1)}});
  return *exact_divide(num, den);
}

SU2Char::SU2Char(const Terms& mults) {
  for (const auto& [j, m] : mults) {
    if (j < 0) throw Error(ErrorKind::NotSU2Character, "negative highest weight");
    if (m != 0) mults_.emplace(j, m);
  }
}

LaurentPoly SU2Char::to_laurent() const {
  LaurentPoly p;
  for (const auto& [j, m] : mults_) p = p + m * weyl_char(j);
  return p;
}

SU2Char SU2Char::operator-() const { return Integer(-1) * *this; }

SU2Char operator+(const SU2Char& a, const SU2Char& b) {
  SU2Char::Terms t = a.mults_;
  for (const auto& [j, m] : b.mults_) t[j] += m;
  return SU2Char(t);
}

SU2Char operator*(const Integer& s, const SU2Char& a) {
  SU2Char::Terms t = a.mults_;
  for (auto& [j, m] : t) m *= s;
  return SU2Char(t);
}

SU2Char su2_decompose(const LaurentPoly& p) {
  for (const auto& [e, k] : p.terms()) {
    if (p.coeff(-e) != k) {
      throw Error(ErrorKind::NotSU2Character,
                  "not symmetric under t <-> 1/t at exponent " + std::to_string(e));
    }
  }
  SU2Char::Terms out;
  LaurentPoly rest = p;
  while (!rest.is_zero()) {
    const std::int64_t top = rest.max_exponent();
    if (top < 0) throw Error(ErrorKind::NotSU2Character, "highest-weight peel did not terminate");
    const Integer m = rest.coeff(top);
    out[top] += m;
    rest = rest - m * weyl_char(top);
  }
  return SU2Char(out);
}

}  // namespace logquant
