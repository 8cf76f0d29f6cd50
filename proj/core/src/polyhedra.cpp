#include "logquant/polyhedra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "logquant/error.hpp"
#include "logquant/linear.hpp"

namespace logquant {

namespace {

void check_rank(std::size_t rank, const PolyhedraLimits& limits) {
  if (rank > limits.max_rank) {
    throw Error(ErrorKind::SizeLimit, "rank " + std::to_string(rank) + " exceeds the limit of " +
                                          std::to_string(limits.max_rank));
  }
}

void check_size(const Polyhedron& p, const PolyhedraLimits& limits) {
  check_rank(p.rank(), limits);
  if (p.halfspaces().size() > limits.max_halfspaces) {
    throw Error(ErrorKind::SizeLimit, std::to_string(p.halfspaces().size()) +
                                          " halfspaces exceed the limit of " +
                                          std::to_string(limits.max_halfspaces));
  }
}

std::vector<LinearConstraint> as_constraints(const Polyhedron& p) {
  std::vector<LinearConstraint> sys;
  sys.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) sys.push_back({h.normal, h.offset, Relation::GreaterEqual});
  return sys;
}

LinearConstraint side_constraint(const Halfspace& h, int side) {
  if (side == 0) return {h.normal, h.offset, Relation::Equal};
  if (side > 0) return {h.normal, h.offset, Relation::Greater};
  RationalVector neg = h.normal;
  for (auto& c : neg) c = -c;
  return {std::move(neg), -h.offset, Relation::Greater};
}

bool cone_is_trivial(std::size_t rank, const std::vector<LinearConstraint>& sys) {
  return only_trivial_solution(rank, sys);
}

// Integer form of a halfspace for fast exact lattice membership.
struct IntegerHalfspace {
  std::vector<Integer> normal;
  Integer offset;  // <normal, x> >= offset on integer x, after rounding up
};

IntegerHalfspace to_integer(const Halfspace& h) {
  Integer l = 1;
  for (const auto& c : h.normal) l = lcm(l, Integer(denominator(c)));
  IntegerHalfspace out;
  for (const auto& c : h.normal) out.normal.push_back(numerator(c) * (l / denominator(c)));
  // For integer x the left side is an integer, so the scaled offset may be
  // rounded up without changing the set of lattice points.
  out.offset = ceil_of(h.offset * Rational(l));
  return out;
}

}  // namespace

Halfspace::Halfspace(RationalVector n, Rational off) : normal(std::move(n)), offset(std::move(off)) {
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& q) { return q == 0; })) {
    throw Error(ErrorKind::MalformedInput, "halfspace with zero normal");
  }
}

Rational Halfspace::slack(const RationalVector& x) const { return dot(normal, x) - offset; }

Polyhedron::Polyhedron(std::size_t rank, std::vector<Halfspace> halfspaces)
    : rank_(rank), halfspaces_(std::move(halfspaces)) {
  if (rank_ == 0) throw Error(ErrorKind::MalformedInput, "polyhedron of rank 0");
  for (const auto& h : halfspaces_) {
    if (h.rank() != rank_) {
      throw Error(ErrorKind::RankMismatch, "halfspace of rank " + std::to_string(h.rank()) +
                                               " in a rank-" + std::to_string(rank_) + " polyhedron");
    }
  }
}

bool Polyhedron::contains(const RationalVector& x) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return h.contains(x); });
}

Integer IntegerBox::volume() const {
  Integer v = 1;
  for (const auto& [lo, hi] : ranges) {
    if (hi < lo) return 0;
    v *= hi - lo + 1;
  }
  return v;
}

IntegerBox IntegerBox::cube(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return IntegerBox{std::vector<std::pair<Integer, Integer>>(rank, {Integer(lo), Integer(hi)})};
}

bool is_empty(const Polyhedron& p, const PolyhedraLimits& limits) {
  check_size(p, limits);
  return !is_feasible(p.rank(), as_constraints(p));
}

Polyhedron recession_cone(const Polyhedron& p) {
  std::vector<Halfspace> hs;
  hs.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) hs.emplace_back(h.normal, Rational(0));
  return Polyhedron(p.rank(), std::move(hs));
}

bool is_bounded(const Polyhedron& p, const PolyhedraLimits& limits) {
  if (is_empty(p, limits)) return true;
  return cone_is_trivial(p.rank(), as_constraints(recession_cone(p)));
}

std::vector<RationalVector> vertices(const Polyhedron& p, const PolyhedraLimits& limits) {
  check_size(p, limits);
  const std::size_t r = p.rank();
  const auto& hs = p.halfspaces();
  std::set<RationalVector> found;
  if (hs.size() < r) return {};
  // Walk all r-subsets of the halfspaces via a selection mask.
  std::vector<bool> pick(hs.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<RationalVector> a;
    RationalVector b;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (pick[i]) {
        a.push_back(hs[i].normal);
        b.push_back(hs[i].offset);
      }
    }
    if (auto x = solve_square(std::move(a), std::move(b)); x && p.contains(*x)) found.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

std::vector<Weight> lattice_points(const Polyhedron& p, const IntegerBox& box,
                                   const PolyhedraLimits& limits) {
  if (box.rank() != p.rank()) {
    throw Error(ErrorKind::RankMismatch, "box of rank " + std::to_string(box.rank()) +
                                             " for a rank-" + std::to_string(p.rank()) +
                                             " polyhedron");
  }
  const Integer vol = box.volume();
  if (vol > limits.max_box_volume) {
    throw Error(ErrorKind::SizeLimit, "lattice box volume " + vol.str() + " exceeds the cap of " +
                                          limits.max_box_volume.str());
  }
  std::vector<Weight> out;
  if (vol == 0) return out;

  std::vector<IntegerHalfspace> ihs;
  ihs.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) ihs.push_back(to_integer(h));

  const std::size_t r = p.rank();
  std::vector<Integer> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = box.ranges[i].first;
  while (true) {
    bool inside = true;
    for (const auto& h : ihs) {
      Integer s = 0;
      for (std::size_t i = 0; i < r; ++i) s += h.normal[i] * x[i];
      if (s < h.offset) {
        inside = false;
        break;
      }
    }
    if (inside) out.emplace_back(x);
    // Odometer with the last coordinate fastest, which yields lexicographic order.
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (x[i] < box.ranges[i].second) {
        ++x[i];
        break;
      }
      x[i] = box.ranges[i].first;
      if (i == 0) return out;
    }
  }
}

bool strongly_convex(const std::vector<RationalVector>& vectors, const PolyhedraLimits& limits) {
  if (vectors.empty()) return true;
  const std::size_t r = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != r) throw Error(ErrorKind::RankMismatch, "cone generators of unequal length");
  }
  check_rank(r, limits);
  const std::size_t n = vectors.size();
  if (n > limits.max_generators) {
    throw Error(ErrorKind::SizeLimit, std::to_string(n) + " cone generators exceed the limit of " +
                                          std::to_string(limits.max_generators));
  }
  // Strongly convex iff {sum t_i v_i = 0, sum t_i = 1, t >= 0} is infeasible.
  std::vector<LinearConstraint> sys;
  for (std::size_t c = 0; c < r; ++c) {
    RationalVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = vectors[i][c];
    sys.push_back({std::move(row), Rational(0), Relation::Equal});
  }
  sys.push_back({RationalVector(n, Rational(1)), Rational(1), Relation::Equal});
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    sys.push_back({std::move(e), Rational(0), Relation::GreaterEqual});
  }
  return !is_feasible(n, sys);
}

Polyhedron cell_closure(std::size_t rank, const std::vector<Halfspace>& hyperplanes,
                        const std::vector<int>& sign_vector) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const auto& h = hyperplanes[i];
    RationalVector neg = h.normal;
    for (auto& c : neg) c = -c;
    if (sign_vector[i] >= 0) hs.emplace_back(h.normal, h.offset);
    if (sign_vector[i] <= 0) hs.emplace_back(std::move(neg), -h.offset);
  }
  return Polyhedron(rank, std::move(hs));
}

std::vector<Cell> arrangement_cells(std::size_t rank, const std::vector<Halfspace>& hyperplanes,
                                    const PolyhedraLimits& limits) {
  check_rank(rank, limits);
  if (hyperplanes.size() > limits.max_hyperplanes) {
    throw Error(ErrorKind::SizeLimit, std::to_string(hyperplanes.size()) +
                                          " hyperplanes exceed the limit of " +
                                          std::to_string(limits.max_hyperplanes));
  }
  for (const auto& h : hyperplanes) {
    if (h.rank() != rank) throw Error(ErrorKind::RankMismatch, "hyperplane of the wrong rank");
  }

  // Depth-first over sign vectors in lexicographic order.  A partial
  // assignment that is already infeasible cannot extend to a feasible cell,
  // so its whole subtree is skipped; the surviving leaves are exactly the
  // feasible members of the full 3^H sweep.
  std::vector<Cell> cells;
  std::vector<int> signs;
  std::vector<LinearConstraint> sys;
  auto recurse = [&](auto&& self, std::optional<RationalVector> witness) -> void {
    if (signs.size() == hyperplanes.size()) {
      Cell c;
      c.sign_vector = signs;
      c.feasible = true;
      std::vector<LinearConstraint> rec;
      for (const auto& s : sys) {
        rec.push_back({s.coeffs, Rational(0),
                       s.rel == Relation::Equal ? Relation::Equal : Relation::GreaterEqual});
      }
      c.bounded = cone_is_trivial(rank, rec);
      c.witness = witness ? std::move(*witness) : RationalVector(rank, Rational(0));
      cells.push_back(std::move(c));
      return;
    }
    const auto& h = hyperplanes[signs.size()];
    for (int side : {-1, 0, 1}) {
      sys.push_back(side_constraint(h, side));
      if (auto x = find_point(rank, sys)) {
        signs.push_back(side);
        self(self, std::move(x));
        signs.pop_back();
      }
      sys.pop_back();
    }
  };
  recurse(recurse, find_point(rank, sys));
  return cells;
}

std::pair<RationalVector, Rational> hyperplane_key(const Halfspace& h) {
  auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q != 0; });
  const Rational s = *lead;
  RationalVector n = h.normal;
  for (auto& c : n) c /= s;
  return {std::move(n), h.offset / s};
}

}  // namespace logquant
