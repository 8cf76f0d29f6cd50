#include <gtest/gtest.h>

#include <random>

#include "logquant/linear.hpp"
#include "support.hpp"

namespace logquant {
namespace {

using testing::hs2;
using testing::polygon;
using testing::q;

Polyhedron line1(std::vector<std::pair<std::int64_t, std::int64_t>> hs) {
  std::vector<Halfspace> out;
  for (auto [n, o] : hs) out.emplace_back(RationalVector{q(n)}, q(o));
  return Polyhedron(1, std::move(out));
}

Polyhedron square(std::int64_t lo, std::int64_t hi) {
  return box_polyhedron({{q(lo), q(hi)}, {q(lo), q(hi)}});
}

std::vector<Halfspace> rank1_planes(std::vector<std::int64_t> at) {
  std::vector<Halfspace> hs;
  for (auto a : at) hs.emplace_back(RationalVector{q(1)}, q(a));
  return hs;
}

TEST(Linear, FindPointRespectsStrictness) {
  // x > 0, -x >= 0 is infeasible; x >= 0, -x >= 0 is the origin.
  EXPECT_FALSE(is_feasible(1, {{{q(1)}, q(0), Relation::Greater}, {{q(-1)}, q(0), Relation::GreaterEqual}}));
  const auto p = find_point(1, {{{q(1)}, q(0)}, {{q(-1)}, q(0)}});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ((*p)[0], 0);
}

TEST(Linear, WitnessSatisfiesSystem) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  int feasible = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<LinearConstraint> sys;
    for (int k = 0; k < 6; ++k) {
      const Relation rel = k % 3 == 0 ? Relation::Greater : (k == 4 ? Relation::Equal : Relation::GreaterEqual);
      sys.push_back({{q(c(rng)), q(c(rng)), q(c(rng))}, q(c(rng)), rel});
    }
    const auto x = find_point(3, sys);
    if (!x) continue;
    ++feasible;
    for (const auto& s : sys) {
      const Rational lhs = dot(s.coeffs, *x);
      if (s.rel == Relation::Greater) EXPECT_GT(lhs, s.rhs);
      if (s.rel == Relation::GreaterEqual) EXPECT_GE(lhs, s.rhs);
      if (s.rel == Relation::Equal) EXPECT_EQ(lhs, s.rhs);
    }
  }
  EXPECT_GT(feasible, 10);
}

TEST(Linear, SolveSquare) {
  const auto x = solve_square({{q(2), q(1)}, {q(1), q(-1)}}, {q(3), q(0)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_square({{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(2)}).has_value());
}

TEST(Halfspace, ZeroNormalRejected) {
  try {
    Halfspace({q(0), q(0)}, q(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedInput);
  }
}

TEST(Polyhedron, RankMismatchRejected) {
  try {
    Polyhedron(2, {Halfspace({q(1)}, q(0))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankMismatch);
  }
}

TEST(IsEmpty, Examples) {
  EXPECT_TRUE(is_empty(line1({{1, 0}, {-1, 1}})));
  EXPECT_FALSE(is_empty(line1({{1, 0}})));
  EXPECT_FALSE(is_empty(square(0, 2)));
}

TEST(RecessionCone, Examples) {
  const auto c = recession_cone(interval(q(0), q(2)));
  for (const auto& h : c.halfspaces()) EXPECT_EQ(h.offset, 0);
  EXPECT_EQ(c.halfspaces().size(), 2u);
  EXPECT_TRUE(c.contains({q(0)}));
  EXPECT_FALSE(c.contains({q(1)}));
  EXPECT_EQ(recession_cone(interval(q(3), std::nullopt)), line1({{1, 0}}));
  // Homogenization is syntactic even when P is empty.
  const auto e = line1({{1, 0}, {-1, 1}});
  EXPECT_TRUE(is_empty(e));
  EXPECT_FALSE(is_empty(recession_cone(e)));
}

TEST(IsBounded, Examples) {
  EXPECT_TRUE(is_bounded(square(0, 2)));
  EXPECT_FALSE(is_bounded(interval(q(3), std::nullopt)));
  EXPECT_FALSE(is_bounded(polygon({hs2(1, 1, 0), hs2(-1, -1, 0)})));
  EXPECT_TRUE(is_bounded(line1({{1, 0}, {-1, 1}})));
}

TEST(Vertices, Examples) {
  EXPECT_EQ(vertices(interval(q(0), q(2))), (std::vector<RationalVector>{{q(0)}, {q(2)}}));
  EXPECT_EQ(vertices(polygon({hs2(1, 0, 0), hs2(0, 1, 0), hs2(-1, -1, -2)})),
            (std::vector<RationalVector>{{q(0), q(0)}, {q(0), q(2)}, {q(2), q(0)}}));
  EXPECT_EQ(vertices(interval(q(3), std::nullopt)), (std::vector<RationalVector>{{q(3)}}));
}

TEST(Vertices, LieInPolyhedronWithRankTightConstraints) {
  for (const auto& p : testing::random_delzant_polygons(40, 17)) {
    for (const auto& v : vertices(p)) {
      EXPECT_TRUE(p.contains(v));
      int tight = 0;
      for (const auto& h : p.halfspaces()) tight += h.slack(v) == 0 ? 1 : 0;
      EXPECT_GE(tight, 2);
    }
  }
}

TEST(Vertices, RedundantAndDuplicateHalfspaces) {
  const auto p = polygon({hs2(1, 0, 0), hs2(1, 0, 0), hs2(2, 0, 0), hs2(0, 1, 0), hs2(-1, -1, -2), hs2(-1, 0, -5)});
  EXPECT_EQ(vertices(p).size(), 3u);
}

TEST(LatticePoints, Examples) {
  EXPECT_EQ(lattice_points(interval(q(0), q(2)), IntegerBox::cube(1, -5, 5)),
            (std::vector<Weight>{Weight{0}, Weight{1}, Weight{2}}));
  const auto pts = lattice_points(square(0, 2), IntegerBox::cube(2, -4, 4));
  EXPECT_EQ(pts.size(), 9u);
  EXPECT_EQ(Character::from_terms(2, [&] {
              std::vector<std::pair<Weight, Integer>> t;
              for (const auto& w : pts) t.emplace_back(w, 1);
              return t;
            }()),
            testing::brute_indicator(square(0, 2), 4));
  EXPECT_TRUE(lattice_points(line1({{1, 0}, {-1, 1}}), IntegerBox::cube(1, -5, 5)).empty());
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

TEST(LatticePoints, BoxCapIsAHardError) {
  PolyhedraLimits limits;
  limits.max_box_volume = 100;
  try {
    lattice_points(square(0, 2), IntegerBox::cube(2, -10, 10), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(LatticePoints, NestedBoxesAreConsistent) {
  const auto p = polygon({hs2(1, 0, -3), hs2(0, 1, -2), hs2(-2, -1, -5)});
  const auto small = IntegerBox::cube(2, -2, 2), large = IntegerBox::cube(2, -6, 6);
  auto in = [](const IntegerBox& b, const Weight& w) {
    for (std::size_t i = 0; i < b.rank(); ++i) {
      if (w[i] < b.ranges[i].first || w[i] > b.ranges[i].second) return false;
    }
    return true;
  };
  std::vector<Weight> a, b;
  for (const auto& w : lattice_points(p, large)) {
    if (in(small, w)) a.push_back(w);
  }
  b = lattice_points(p, small);
  EXPECT_EQ(a, b);
}

TEST(LatticePoints, StabilizeOnceBoxHoldsVertexHull) {
  const auto p = polygon({hs2(2, 1, -3), hs2(-1, 2, -4), hs2(-1, -3, -6)});
  ASSERT_TRUE(is_bounded(p));
  IntegerBox hull;
  const auto vs = vertices(p);
  for (std::size_t i = 0; i < 2; ++i) {
    Integer lo = floor_of(vs[0][i]), hi = ceil_of(vs[0][i]);
    for (const auto& v : vs) {
      lo = std::min(lo, floor_of(v[i]));
      hi = std::max(hi, ceil_of(v[i]));
    }
    hull.ranges.emplace_back(lo, hi);
  }
  EXPECT_EQ(lattice_points(p, hull), lattice_points(p, IntegerBox::cube(2, -20, 20)));
}

TEST(StronglyConvex, Examples) {
  EXPECT_FALSE(strongly_convex({{q(1)}, {q(-1)}}));
  EXPECT_TRUE(strongly_convex({{q(1), q(0)}, {q(0), q(1)}}));
  EXPECT_TRUE(strongly_convex({}));
  EXPECT_FALSE(strongly_convex({{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(-1)}}));
  EXPECT_TRUE(strongly_convex({{q(1), q(0)}, {q(1), q(1)}, {q(0), q(1)}}));
}

// Gordan: the cone is strongly convex iff some y has <y, v> > 0 for all v.
bool gordan_oracle(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return true;
  std::vector<LinearConstraint> sys;
  for (const auto& v : vs) sys.push_back({v, q(0), Relation::Greater});
  return is_feasible(vs.front().size(), sys);
}

TEST(StronglyConvex, AgreesWithDualCertificate) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> c(-2, 2), n(1, 4);
  for (int i = 0; i < 300; ++i) {
    std::vector<RationalVector> vs;
    for (std::int64_t k = n(rng); k > 0; --k) {
      RationalVector v{q(c(rng)), q(c(rng))};
      if (v[0] == 0 && v[1] == 0) v[0] = 1;
      vs.push_back(v);
    }
    const bool sc = strongly_convex(vs);
    EXPECT_EQ(sc, gordan_oracle(vs));
    auto scaled = vs;
    scaled.push_back({vs[0][0] * 3, vs[0][1] * 3});
    EXPECT_EQ(strongly_convex(scaled), sc);
  }
}

TEST(ArrangementCells, SingleHyperplane) {
  const auto cells = arrangement_cells(1, rank1_planes({0}));
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0].sign_vector, std::vector<int>{-1});
  EXPECT_EQ(cells[1].sign_vector, std::vector<int>{0});
  EXPECT_EQ(cells[2].sign_vector, std::vector<int>{1});
  EXPECT_FALSE(cells[0].bounded);
  EXPECT_TRUE(cells[1].bounded);
  EXPECT_FALSE(cells[2].bounded);
}

TEST(ArrangementCells, TwoParallelHyperplanes) {
  const auto cells = arrangement_cells(1, rank1_planes({0, 3}));
  ASSERT_EQ(cells.size(), 5u);
  int unbounded = 0;
  for (const auto& c : cells) {
    EXPECT_TRUE(c.feasible);
    unbounded += c.bounded ? 0 : 1;
  }
  EXPECT_EQ(unbounded, 2);
}

TEST(ArrangementCells, DuplicateHyperplaneOmitsContradictions) {
  const auto cells = arrangement_cells(1, rank1_planes({0, 0}));
  ASSERT_EQ(cells.size(), 3u);
  for (const auto& c : cells) EXPECT_EQ(c.sign_vector[0], c.sign_vector[1]);
}

TEST(ArrangementCells, WitnessRealizesSignVector) {
  const std::vector<Halfspace> hs = {hs2(1, 0, 0), hs2(0, 1, 0), hs2(1, 1, 2), hs2(1, -1, 1)};
  const auto cells = arrangement_cells(2, hs);
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const Rational s = hs[i].slack(c.witness);
      EXPECT_EQ(s > 0 ? 1 : (s < 0 ? -1 : 0), c.sign_vector[i]);
    }
    EXPECT_EQ(c.bounded, is_bounded(cell_closure(2, hs, c.sign_vector)));
  }
  // Four lines in general position: 6 points, 16 edges, 11 regions.
  EXPECT_EQ(cells.size(), 33u);
  EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end(),
                             [](const Cell& a, const Cell& b) { return a.sign_vector < b.sign_vector; }));
}

TEST(ArrangementCells, HyperplaneCapIsAHardError) {
  std::vector<std::int64_t> at;
  for (int i = 0; i < 13; ++i) at.push_back(i);
  try {
    arrangement_cells(1, rank1_planes(at));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(HyperplaneKey, ScalingAndSideDoNotMatter) {
  EXPECT_EQ(hyperplane_key(hs2(2, 4, 6)), hyperplane_key(hs2(-1, -2, -3)));
  EXPECT_NE(hyperplane_key(hs2(1, 2, 3)), hyperplane_key(hs2(1, 2, 4)));
}

}  // namespace
}  // namespace logquant
