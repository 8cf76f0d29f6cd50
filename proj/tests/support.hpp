#pragma once

// Builders and brute-force oracles shared by the test binaries.  The oracles
// deliberately avoid the library's geometry: membership is checked halfspace
// by halfspace over an explicit integer grid.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "logquant/charring.hpp"
#include "logquant/error.hpp"
#include "logquant/indexcalc.hpp"
#include "logquant/polyhedra.hpp"
#include "logquant/toricmodel.hpp"

namespace logquant::testing {

inline Character ch1(const std::map<std::int64_t, std::int64_t>& m) { return Character::from_rank1(m); }

inline LaurentPoly lp(const std::map<std::int64_t, std::int64_t>& m) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : m) t[e] = c;
  return LaurentPoly(t);
}

inline SU2Char su2(const std::map<std::int64_t, std::int64_t>& m) {
  SU2Char::Terms t;
  for (const auto& [j, c] : m) t[j] = c;
  return SU2Char(t);
}

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

/// {x : a*x + b*y >= c}
inline Halfspace hs2(std::int64_t a, std::int64_t b, std::int64_t c) { return Halfspace({q(a), q(b)}, q(c)); }

inline Polyhedron polygon(std::vector<Halfspace> hs) { return Polyhedron(2, std::move(hs)); }

/// Integer points of a halfspace system inside [-r, r]^2, via direct evaluation.
inline Character brute_indicator(const Polyhedron& p, std::int64_t r) {
  std::vector<std::pair<Weight, Integer>> terms;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      bool in = true;
      for (const auto& h : p.halfspaces()) {
        if (h.normal[0] * x + h.normal[1] * y < h.offset) in = false;
      }
      if (in) terms.emplace_back(Weight{x, y}, 1);
    }
  }
  return Character::from_terms(2, terms);
}

/// Rectangles, simplices, Hirzebruch trapezoids and corner-cut rectangles with
/// vertices in [-4, 4]^2.  Every member is Delzant by construction; callers may
/// still filter through fixed_terms_delzant.
inline std::vector<Polyhedron> delzant_family() {
  std::vector<Polyhedron> out;
  for (std::int64_t x0 : {-4, -1, 2}) {
    for (std::int64_t y0 : {-3, 0}) {
      for (std::int64_t w : {1, 2}) {
        for (std::int64_t h : {1, 3}) {
          out.push_back(polygon({hs2(1, 0, x0), hs2(-1, 0, -(x0 + w)), hs2(0, 1, y0), hs2(0, -1, -(y0 + h))}));
        }
      }
    }
  }
  for (std::int64_t x0 : {-4, -2, 0}) {
    for (std::int64_t y0 : {-4, -1}) {
      for (std::int64_t k : {1, 2, 4}) {
        out.push_back(polygon({hs2(1, 0, x0), hs2(0, 1, y0), hs2(-1, -1, -(x0 + y0 + k))}));
      }
    }
  }
  // Hirzebruch: base width w, height h, slanted side x + m y <= x0 + m y0 + w.
  for (std::int64_t m : {1, 2}) {
    for (std::int64_t x0 : {-4, -1}) {
      for (std::int64_t h : {1, 2}) {
        const std::int64_t w = m * h + 1 + (x0 == -1 ? 1 : 0);
        const std::int64_t y0 = -2;
        out.push_back(polygon({hs2(1, 0, x0), hs2(0, 1, y0), hs2(0, -1, -(y0 + h)), hs2(-1, -m, -(x0 + m * y0 + w))}));
      }
    }
  }
  // Rectangles [x0, x0+w] x [y0, y0+h] with the top-right corner cut by x + y.
  for (std::int64_t x0 : {-4, -3, 0}) {
    for (std::int64_t y0 : {-4, 0}) {
      for (std::int64_t s : {2, 3}) {
        const std::int64_t c = 1;
        out.push_back(polygon({hs2(1, 0, x0), hs2(-1, 0, -(x0 + s)), hs2(0, 1, y0), hs2(0, -1, -(y0 + s)),
                               hs2(-1, -1, -(x0 + y0 + 2 * s - c))}));
      }
    }
  }
  return out;
}

/// The image of p under x -> A x + b for A in GL(2, Z); Delzant is preserved.
inline Polyhedron transform(const Polyhedron& p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                            std::int64_t tx, std::int64_t ty) {
  // n . x >= o on p becomes (A^{-T} n) . y >= o + (A^{-T} n) . t on the image.
  const std::int64_t det = a * d - b * c;
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) {
    const Rational n0 = (d * h.normal[0] - c * h.normal[1]) / det;
    const Rational n1 = (-b * h.normal[0] + a * h.normal[1]) / det;
    hs.emplace_back(RationalVector{n0, n1}, h.offset + n0 * tx + n1 * ty);
  }
  return Polyhedron(2, std::move(hs));
}

inline bool fits(const Polyhedron& p, std::int64_t r) {
  for (const auto& v : vertices(p)) {
    for (const auto& c : v) {
      if (c < -r || c > r) return false;
    }
  }
  return true;
}

/// Seeded random unimodular images of the family that stay inside [-4, 4]^2.
inline std::vector<Polyhedron> random_delzant_polygons(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const auto base = delzant_family();
  const std::vector<std::array<std::int64_t, 4>> mats = {
      {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {-1, 0, 0, 1}, {0, -1, 1, 0}, {1, -1, 0, 1}, {2, 1, 1, 1}};
  std::uniform_int_distribution<std::size_t> pick_base(0, base.size() - 1), pick_mat(0, mats.size() - 1);
  std::uniform_int_distribution<std::int64_t> shift(-2, 2);
  std::vector<Polyhedron> out;
  while (out.size() < count) {
    const auto& m = mats[pick_mat(rng)];
    Polyhedron p = transform(base[pick_base(rng)], m[0], m[1], m[2], m[3], shift(rng), shift(rng));
    if (fits(p, 4)) out.push_back(std::move(p));
  }
  return out;
}

/// Rank-1 data on a path of components C0 - C1 - ... with one interval piece
/// per entry; the piece on Ck carries sign (-1)^k.
struct SignedInterval {
  std::size_t component;
  std::optional<Rational> lo, hi;
};

inline ToricLogData path_data(std::size_t components, const std::vector<SignedInterval>& pieces) {
  ToricLogData d;
  d.rank = 1;
  for (std::size_t k = 0; k < components; ++k) d.components.push_back("C" + std::to_string(k));
  for (std::size_t k = 0; k + 1 < components; ++k) {
    const std::string id = "Z" + std::to_string(k);
    d.walls.push_back({id, {q(1)}, {d.components[k], d.components[k + 1]}});
    d.strata.push_back({{id}});
  }
  for (const auto& s : pieces) d.pieces.push_back({d.components[s.component], interval(s.lo, s.hi)});
  d.base_component = "C0";
  return d;
}

/// Independent oracle for path_data: sum of (-1)^k over pieces containing x.
inline Integer path_oracle(const std::vector<SignedInterval>& pieces, std::int64_t x) {
  Integer s = 0;
  for (const auto& p : pieces) {
    if ((p.lo && Rational(x) < *p.lo) || (p.hi && Rational(x) > *p.hi)) continue;
    s += (p.component % 2 == 0) ? 1 : -1;
  }
  return s;
}

/// Deterministic configurations whose unbounded rays cancel in pairs, with at
/// most 12 distinct endpoints.
inline std::vector<std::pair<std::size_t, std::vector<SignedInterval>>> cancelling_configs(std::size_t count,
                                                                                           std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-90, 90), den(1, 2), small(0, 2);
  std::uniform_int_distribution<std::size_t> ncomp(2, 5);
  auto endpoint = [&] {
    const std::int64_t n = num(rng);
    return Rational(n, den(rng));
  };
  std::vector<std::pair<std::size_t, std::vector<SignedInterval>>> out;
  while (out.size() < count) {
    const std::size_t k = ncomp(rng);
    std::uniform_int_distribution<std::size_t> comp(0, k - 1);
    auto opposite = [&](std::size_t c) { return c + 1 < k ? c + 1 : c - 1; };
    std::vector<SignedInterval> pieces;
    for (std::int64_t i = small(rng); i > 0; --i) {  // right rays
      const std::size_t c = comp(rng);
      pieces.push_back({c, endpoint(), std::nullopt});
      pieces.push_back({opposite(c), endpoint(), std::nullopt});
    }
    for (std::int64_t i = small(rng); i > 0; --i) {  // left rays
      const std::size_t c = comp(rng);
      pieces.push_back({c, std::nullopt, endpoint()});
      pieces.push_back({opposite(c), std::nullopt, endpoint()});
    }
    for (std::int64_t i = small(rng) + (pieces.empty() ? 1 : 0); i > 0; --i) {  // bounded intervals
      Rational a = endpoint(), b = endpoint();
      if (b < a) std::swap(a, b);
      pieces.push_back({comp(rng), a, b});
    }
    out.emplace_back(k, std::move(pieces));
  }
  return out;
}

}  // namespace logquant::testing
