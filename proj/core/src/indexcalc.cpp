#include "logquant/indexcalc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "logquant/error.hpp"
#include "logquant/linear.hpp"

namespace logquant {

namespace {

// o_j-weighted indicator of the pieces at a rational point.
Integer signed_indicator(const ToricLogData& d, const std::vector<int>& o, const RationalVector& x) {
  Integer s = 0;
  for (std::size_t j = 0; j < d.pieces.size(); ++j) {
    if (d.pieces[j].region.contains(x)) s += o[j];
  }
  return s;
}

std::string format_point(const RationalVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + format_rational(x[i]);
  return s + ")";
}

void check_terms(std::size_t rank, const std::vector<FixedPointTerm>& terms) {
  for (const auto& t : terms) {
    if (t.sign != 1 && t.sign != -1) throw Error(ErrorKind::NotFinite, "fixed-point sign must be +1 or -1");
    if (t.mu.rank() != rank) {
      throw Error(ErrorKind::RankMismatch, "fixed-point moment of rank " + std::to_string(t.mu.rank()) +
                                               " where rank " + std::to_string(rank) + " is expected");
    }
    for (const auto& w : t.weights) {
      if (w.rank() != rank) throw Error(ErrorKind::RankMismatch, "isotropy weight of the wrong rank");
      if (w.is_zero()) throw Error(ErrorKind::NotFinite, "zero isotropy weight at a fixed point");
    }
  }
}

std::vector<Weight> all_weights(const std::vector<FixedPointTerm>& terms) {
  std::vector<Weight> ws;
  for (const auto& t : terms) ws.insert(ws.end(), t.weights.begin(), t.weights.end());
  return ws;
}

// Calls f on every point of a (nonempty) box, in lexicographic order.
template <typename F>
void for_each_point(const IntegerBox& box, F&& f) {
  if (box.volume() == 0) return;
  const std::size_t r = box.rank();
  std::vector<Integer> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = box.ranges[i].first;
  while (true) {
    f(Weight(x));
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (x[i] < box.ranges[i].second) {
        ++x[i];
        break;
      }
      x[i] = box.ranges[i].first;
      if (i == 0) return;
    }
  }
}

void extend_box(std::optional<IntegerBox>& box, const std::vector<Integer>& lo,
                const std::vector<Integer>& hi) {
  if (!box) {
    box = IntegerBox{};
    for (std::size_t i = 0; i < lo.size(); ++i) box->ranges.emplace_back(lo[i], hi[i]);
    return;
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    box->ranges[i].first = std::min(box->ranges[i].first, lo[i]);
    box->ranges[i].second = std::max(box->ranges[i].second, hi[i]);
  }
}

Weight integral_weight(const RationalVector& v) {
  std::vector<Integer> c;
  for (const auto& q : v) c.push_back(numerator(q));
  return Weight(std::move(c));
}

Rational determinant(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Character evaluate_rank1(const std::vector<FixedPointTerm>& terms) {
  std::vector<RationalTerm> rt;
  for (const auto& t : terms) {
    RationalTerm r{t.sign, to_int64(t.mu[0], "fixed-point moment"), {}};
    for (const auto& w : t.weights) r.denom_weights.push_back(to_int64(w[0], "isotropy weight"));
    rt.push_back(std::move(r));
  }
  return Character::from_laurent(rational_to_laurent(RationalChar(std::move(rt))));
}

Character atiyah_bott_rank(std::size_t rank, const std::vector<FixedPointTerm>& terms,
                           const PolyhedraLimits& limits) {
  check_terms(rank, terms);
  if (terms.empty()) return Character(rank);
  if (rank == 1) return evaluate_rank1(terms);

  const IntegerBox box = atiyah_bott_support_box(terms);
  if (box.volume() > limits.max_box_volume) {
    throw Error(ErrorKind::SizeLimit, "fixed-point support box volume " + box.volume().str() +
                                          " exceeds the cap of " + limits.max_box_volume.str());
  }
  const auto weights = all_weights(terms);
  const Weight xi = generic_subgroup(box, weights, 0);
  const LaurentPoly sum = rational_to_laurent(specialize_terms(terms, xi));

  std::unordered_map<std::int64_t, Weight> decode;
  for_each_point(box, [&](Weight w) { decode.emplace(to_int64(pairing(w, xi), "exponent"), std::move(w)); });
  std::vector<std::pair<Weight, Integer>> recovered;
  for (const auto& [e, k] : sum.terms()) {
    auto it = decode.find(e);
    if (it == decode.end()) {
      throw Error(ErrorKind::NotFinite, "specialized fixed-point sum has an exponent outside the "
                                        "support box; the sum is not a finite character");
    }
    recovered.emplace_back(it->second, k);
  }
  Character q = Character::from_terms(rank, recovered);

  // A genuine Laurent polynomial must survive a second independent subgroup.
  const Weight xi2 = generic_subgroup(box, weights, 1);
  if (specialize(q, xi2) != rational_to_laurent(specialize_terms(terms, xi2))) {
    throw Error(ErrorKind::NotFinite, "fixed-point sum disagrees between two generic subgroups; "
                                      "it is not a finite character");
  }
  return q;
}

}  // namespace

Character quantize_lattice(const ToricLogData& d, const PolyhedraLimits& limits) {
  require_valid(d, limits);
  const auto o = signs(d);

  std::vector<Halfspace> hyperplanes;
  std::set<std::pair<RationalVector, Rational>> seen;
  for (const auto& p : d.pieces) {
    for (const auto& h : p.region.halfspaces()) {
      if (seen.insert(hyperplane_key(h)).second) hyperplanes.push_back(h);
    }
  }
  const auto cells = arrangement_cells(d.rank, hyperplanes, limits);

  std::optional<IntegerBox> box;
  for (const auto& c : cells) {
    if (!c.bounded) {
      if (signed_indicator(d, o, c.witness) != 0) {
        throw Error(ErrorKind::InfiniteSupport,
                    "signed piece indicator is nonzero on an unbounded cell at " + format_point(c.witness));
      }
      continue;
    }
    // Every vertex of a bounded cell's closure is itself a bounded (point)
    // cell, so the witnesses of bounded cells span the support's bounding box.
    std::vector<Integer> lo, hi;
    for (const auto& x : c.witness) {
      lo.push_back(floor_of(x));
      hi.push_back(ceil_of(x));
    }
    extend_box(box, lo, hi);
  }
  if (!box) return Character(d.rank);

  std::vector<std::pair<Weight, Integer>> terms;
  for (std::size_t j = 0; j < d.pieces.size(); ++j) {
    for (auto& w : lattice_points(d.pieces[j].region, *box, limits)) terms.emplace_back(std::move(w), o[j]);
  }
  return Character::from_terms(d.rank, terms);
}

Integer reduced_multiplicity(const ToricLogData& d, const Weight& lambda) {
  if (lambda.rank() != d.rank) {
    throw Error(ErrorKind::RankMismatch, "weight of rank " + std::to_string(lambda.rank()) +
                                             " for rank-" + std::to_string(d.rank) + " data");
  }
  require_valid(d);
  return signed_indicator(d, signs(d), to_rational(lambda));
}

RationalChar specialize_terms(const std::vector<FixedPointTerm>& terms, const Weight& xi) {
  std::vector<RationalTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    RationalTerm r{t.sign, to_int64(pairing(t.mu, xi), "specialized moment"), {}};
    for (const auto& w : t.weights) {
      const auto e = to_int64(pairing(w, xi), "specialized weight");
      if (e == 0) throw Error(ErrorKind::NotFinite, "subgroup is orthogonal to an isotropy weight");
      r.denom_weights.push_back(e);
    }
    out.push_back(std::move(r));
  }
  return RationalChar(std::move(out));
}

Character atiyah_bott(const std::vector<FixedPointTerm>& terms, const PolyhedraLimits& limits) {
  const std::size_t rank = terms.empty() ? 1 : terms.front().mu.rank();
  return atiyah_bott_rank(rank, terms, limits);
}

IntegerBox atiyah_bott_support_box(const std::vector<FixedPointTerm>& terms) {
  if (terms.empty()) return IntegerBox{};
  const std::size_t r = terms.front().mu.rank();
  // Orient each weight so its first nonzero coordinate is positive, using
  // 1/(1 - t^w) = -t^{-w}/(1 - t^{-w}); this makes the common denominator a
  // product over distinct lines.
  struct Oriented {
    std::vector<Integer> mu;
    std::map<Weight, int> factors;
  };
  std::vector<Oriented> oriented;
  std::map<Weight, int> common;
  for (const auto& t : terms) {
    Oriented o{t.mu.coords, {}};
    for (const auto& w : t.weights) {
      auto lead = std::find_if(w.coords.begin(), w.coords.end(), [](const Integer& x) { return x != 0; });
      Weight canon = w;
      if (*lead < 0) {
        for (std::size_t i = 0; i < r; ++i) {
          o.mu[i] -= w[i];
          canon.coords[i] = -w[i];
        }
      }
      ++o.factors[canon];
    }
    for (const auto& [w, k] : o.factors) common[w] = std::max(common[w], k);
    oriented.push_back(std::move(o));
  }
  std::optional<IntegerBox> box;
  for (const auto& o : oriented) {
    std::vector<Integer> lo = o.mu, hi = o.mu;
    for (const auto& [w, k] : common) {
      const auto own = o.factors.count(w) ? o.factors.at(w) : 0;
      const Integer reps = k - own;
      for (std::size_t i = 0; i < r; ++i) {
        if (w[i] < 0) lo[i] += reps * w[i];
        if (w[i] > 0) hi[i] += reps * w[i];
      }
    }
    extend_box(box, lo, hi);
  }
  return *box;
}

Weight generic_subgroup(const IntegerBox& box, const std::vector<Weight>& nonzero_on, std::size_t skip) {
  const std::size_t r = box.rank();
  if (r == 1) return Weight{1};
  Integer width = 0;
  for (const auto& [lo, hi] : box.ranges) width = std::max(width, Integer(hi - lo));
  constexpr int kMaxCandidates = 1000;
  for (int k = 0; k < kMaxCandidates; ++k) {
    const Integer m = width + 1 + k;
    std::vector<Integer> c(r);
    Integer p = 1;
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = p;
      p *= m;
    }
    const Weight xi(std::move(c));
    bool ok = std::all_of(nonzero_on.begin(), nonzero_on.end(),
                          [&](const Weight& w) { return pairing(w, xi) != 0; });
    if (ok) {
      std::unordered_set<std::int64_t> images;
      for_each_point(box, [&](const Weight& w) {
        if (ok && !images.insert(to_int64(pairing(w, xi), "exponent")).second) ok = false;
      });
    }
    if (ok && skip-- == 0) return xi;
  }
  throw Error(ErrorKind::SizeLimit, "no generic one-parameter subgroup found");
}

std::vector<FixedPointTerm> fixed_terms_s2(std::int64_t n1, std::int64_t n2) {
  // Both fixed points carry the denominator (1 - t): the compatible complex
  // structure flips across the divisor.  The second point is negatively
  // oriented.
  return {{1, Weight{n1}, {Weight{1}}}, {-1, Weight{n2}, {Weight{1}}}};
}

std::vector<FixedPointTerm> fixed_terms_delzant(const Polyhedron& p, const PolyhedraLimits& limits) {
  if (is_empty(p, limits)) throw Error(ErrorKind::EmptyPiece, "polytope is empty");
  if (!is_bounded(p, limits)) throw Error(ErrorKind::Unbounded, "polytope is unbounded");
  const std::size_t r = p.rank();

  std::vector<FixedPointTerm> terms;
  for (const auto& v : vertices(p, limits)) {
    if (!std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); })) {
      throw Error(ErrorKind::NotDelzant, "vertex " + format_point(v) + " is not a lattice point");
    }
    // Active facet normals, deduplicated up to positive scaling.
    std::vector<RationalVector> active;
    std::set<RationalVector> seen;
    for (const auto& h : p.halfspaces()) {
      if (h.slack(v) != 0) continue;
      auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q != 0; });
      RationalVector n = h.normal;
      const Rational s = abs(*lead);
      for (auto& c : n) c /= s;
      if (seen.insert(n).second) active.push_back(std::move(n));
    }
    // Drop normals that are redundant for the tangent cone at v.
    for (std::size_t i = 0; i < active.size();) {
      std::vector<LinearConstraint> sys;
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (j != i) sys.push_back({active[j], Rational(0), Relation::GreaterEqual});
      }
      RationalVector neg = active[i];
      for (auto& c : neg) c = -c;
      sys.push_back({std::move(neg), Rational(0), Relation::Greater});
      if (is_feasible(r, sys)) {
        ++i;
      } else {
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    if (active.size() != r) {
      throw Error(ErrorKind::NotDelzant, "vertex " + format_point(v) + " is not simple (" +
                                             std::to_string(active.size()) + " facets)");
    }
    // Edge generators e_i satisfy <n_j, e_i> = delta_ij: columns of A^{-1}.
    std::vector<RationalVector> edges;
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector unit(r, Rational(0));
      unit[i] = 1;
      auto e = solve_square(active, unit);
      if (!e) throw Error(ErrorKind::NotDelzant, "degenerate facet normals at vertex " + format_point(v));
      RationalVector prim;
      for (auto& x : primitive_direction(*e)) prim.emplace_back(x);
      edges.push_back(std::move(prim));
    }
    if (abs(determinant(edges)) != 1) {
      throw Error(ErrorKind::NotDelzant, "edge generators at vertex " + format_point(v) +
                                             " do not form a lattice basis");
    }
    FixedPointTerm t{1, integral_weight(v), {}};
    for (const auto& e : edges) t.weights.push_back(integral_weight(e));
    terms.push_back(std::move(t));
  }
  return terms;
}

SU2Char bwb(std::int64_t k) {
  if (k >= 0) return SU2Char({{k, Integer(1)}});
  if (k == -1) return SU2Char{};
  return SU2Char({{-k - 2, Integer(-1)}});
}

SU2Char mincoupling_index(std::int64_t base_degree, const Character& fibre) {
  if (fibre.rank() != 1) {
    throw Error(ErrorKind::RankMismatch, "minimal coupling needs a rank-1 fibre character");
  }
  SU2Char out;
  for (const auto& [w, m] : fibre.terms()) {
    out = out + m * bwb(base_degree + to_int64(w[0], "fibre weight"));
  }
  return out;
}

QRReport qr_check(const ToricLogData& d, const std::vector<FixedPointTerm>& terms,
                  const PolyhedraLimits& limits) {
  require_valid(d, limits);
  check_terms(d.rank, terms);
  QRReport report{quantize_lattice(d, limits), atiyah_bott_rank(d.rank, terms, limits), false, {}, {}, {}};
  report.agree = report.lattice_char == report.fixedpoint_char;

  if (d.rank >= 2 && !terms.empty()) {
    std::optional<IntegerBox> box = atiyah_bott_support_box(terms);
    for (const auto& [w, m] : report.lattice_char.terms()) extend_box(box, w.coords, w.coords);
    const Weight xi = generic_subgroup(*box, all_weights(terms), 0);
    report.xi = xi;
    report.specialized_agree =
        specialize(report.lattice_char, xi) == rational_to_laurent(specialize_terms(terms, xi));
  }

  std::set<Weight> support;
  for (const auto* c : {&report.lattice_char, &report.fixedpoint_char}) {
    for (const auto& [w, m] : c->terms()) {
      std::vector<Integer> lo, hi;
      for (const auto& x : w.coords) {
        lo.push_back(x - 1);
        hi.push_back(x + 1);
      }
      IntegerBox shell;
      for (std::size_t i = 0; i < lo.size(); ++i) shell.ranges.emplace_back(lo[i], hi[i]);
      for_each_point(shell, [&](Weight v) { support.insert(std::move(v)); });
    }
  }
  const auto o = signs(d);
  for (const auto& lambda : support) {
    report.per_weight_table.push_back({lambda, multiplicity(report.lattice_char, lambda),
                                       multiplicity(report.fixedpoint_char, lambda),
                                       signed_indicator(d, o, to_rational(lambda))});
  }
  return report;
}

}  // namespace logquant
