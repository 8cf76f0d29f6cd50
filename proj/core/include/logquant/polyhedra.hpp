#pragma once

// Exact rational polyhedral geometry at desk scale.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "logquant/charring.hpp"
#include "logquant/numeric.hpp"

namespace logquant {

/// {x : <normal, x> >= offset}.  When used as an arrangement hyperplane only
/// the boundary {<normal, x> = offset} matters.
struct Halfspace {
  RationalVector normal;
  Rational offset;

  /// Throws MalformedInput for a zero normal.
  Halfspace(RationalVector n, Rational off);

  std::size_t rank() const { return normal.size(); }
  /// <normal, x> - offset.
  Rational slack(const RationalVector& x) const;
  bool contains(const RationalVector& x) const { return slack(x) >= 0; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

class Polyhedron {
 public:
  /// Throws RankMismatch if a normal does not have length `rank`.
  Polyhedron(std::size_t rank, std::vector<Halfspace> halfspaces);

  std::size_t rank() const { return rank_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  bool contains(const RationalVector& x) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::size_t rank_;
  std::vector<Halfspace> halfspaces_;
};

/// Inclusive integer ranges, one per coordinate.
struct IntegerBox {
  std::vector<std::pair<Integer, Integer>> ranges;

  std::size_t rank() const { return ranges.size(); }
  Integer volume() const;
  static IntegerBox cube(std::size_t rank, std::int64_t lo, std::int64_t hi);
};

/// Desk-scale caps.  Exceeding any of them raises SizeLimit.
struct PolyhedraLimits {
  std::size_t max_rank = 3;
  std::size_t max_halfspaces = 64;
  std::size_t max_hyperplanes = 12;
  std::size_t max_generators = 24;
  Integer max_box_volume = 10'000'000;
};

/// One relatively open region of a hyperplane arrangement: sign_vector[i] is
/// the side (-1, 0, +1) of <normal_i, x> - offset_i on the region.
struct Cell {
  std::vector<int> sign_vector;
  bool feasible = false;
  bool bounded = false;
  RationalVector witness;  // a point of the region, when feasible
};

bool is_empty(const Polyhedron& p, const PolyhedraLimits& limits = {});
Polyhedron recession_cone(const Polyhedron& p);
bool is_bounded(const Polyhedron& p, const PolyhedraLimits& limits = {});

/// Basic feasible solutions, deduplicated and sorted lexicographically.
std::vector<RationalVector> vertices(const Polyhedron& p, const PolyhedraLimits& limits = {});

/// Integer points of the box lying in p, in lexicographic order.
std::vector<Weight> lattice_points(const Polyhedron& p, const IntegerBox& box,
                                   const PolyhedraLimits& limits = {});

/// True iff no nonzero nonnegative combination of the vectors vanishes.
bool strongly_convex(const std::vector<RationalVector>& vectors, const PolyhedraLimits& limits = {});

/// All feasible cells of the arrangement, ordered lexicographically by sign
/// vector with -1 < 0 < +1.  Infeasible sign vectors are omitted.
std::vector<Cell> arrangement_cells(std::size_t rank, const std::vector<Halfspace>& hyperplanes,
                                    const PolyhedraLimits& limits = {});

/// The closed polyhedron obtained by relaxing the strict signs of a cell.
Polyhedron cell_closure(std::size_t rank, const std::vector<Halfspace>& hyperplanes,
                        const std::vector<int>& sign_vector);

/// Canonical form of the boundary hyperplane: normal scaled so that its first
/// nonzero entry is 1.  Two halfspaces share a boundary iff these agree.
std::pair<RationalVector, Rational> hyperplane_key(const Halfspace& h);

}  // namespace logquant
