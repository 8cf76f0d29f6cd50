#pragma once

// Equivariant quantization by signed lattice-point counting and by fixed-point
// localization, and the harness that checks the two against each other.

#include <cstdint>
#include <optional>
#include <vector>

#include "logquant/charring.hpp"
#include "logquant/polyhedra.hpp"
#include "logquant/toricmodel.hpp"

namespace logquant {

/// Contribution sign * t^mu / prod_i (1 - t^{weights_i}) of one isolated fixed
/// point.  Weights are stored exactly as supplied.
struct FixedPointTerm {
  int sign = 1;
  Weight mu;
  std::vector<Weight> weights;

  friend bool operator==(const FixedPointTerm&, const FixedPointTerm&) = default;
};

/// Signed lattice count  sum_j o_j [Delta_j cap Lambda].  Finite support is
/// certified on the arrangement of all facet hyperplanes before counting;
/// throws InfiniteSupport otherwise.
Character quantize_lattice(const ToricLogData& d, const PolyhedraLimits& limits = {});

/// sum_j o_j 1_{Delta_j}(lambda).
Integer reduced_multiplicity(const ToricLogData& d, const Weight& lambda);

/// The univariate rational sum obtained by restricting every term along the
/// one-parameter subgroup xi.  Throws NotFinite if xi kills an isotropy weight.
RationalChar specialize_terms(const std::vector<FixedPointTerm>& terms, const Weight& xi);

/// Fixed-point sum evaluated as a finite character.  Rank 1 is evaluated
/// directly; higher ranks are recovered from generic one-parameter
/// specializations (see atiyah_bott_support_box).  Throws NotFinite or
/// RankMismatch.
Character atiyah_bott(const std::vector<FixedPointTerm>& terms, const PolyhedraLimits& limits = {});

/// A box guaranteed to contain the support of the fixed-point sum whenever
/// that sum is a Laurent polynomial (the Newton polytope of an exact quotient
/// lies inside the Newton polytope of the numerator when the denominator's
/// Newton polytope contains 0).
IntegerBox atiyah_bott_support_box(const std::vector<FixedPointTerm>& terms);

std::vector<FixedPointTerm> fixed_terms_s2(std::int64_t n1, std::int64_t n2);

/// One term per vertex with the inward primitive edge generators as isotropy
/// weights.  Throws Unbounded, EmptyPiece or NotDelzant.
std::vector<FixedPointTerm> fixed_terms_delzant(const Polyhedron& p,
                                                const PolyhedraLimits& limits = {});

/// Index of O(k) on the projective line as an SU(2) character.
SU2Char bwb(std::int64_t k);

/// sum_j fibre.mult(j) * bwb(base_degree + j).  fibre must have rank 1.
SU2Char mincoupling_index(std::int64_t base_degree, const Character& fibre);

struct QRRow {
  Weight lambda;
  Integer lattice;
  Integer fixed_point;
  Integer reduced;
};

struct QRReport {
  Character lattice_char;
  Character fixedpoint_char;
  bool agree = false;
  std::vector<QRRow> per_weight_table;
  std::optional<Weight> xi;  // one-parameter subgroup used for rank >= 2
  std::optional<bool> specialized_agree;
};

/// Runs both routes.  A disagreement is reported, not thrown.
QRReport qr_check(const ToricLogData& d, const std::vector<FixedPointTerm>& terms,
                  const PolyhedraLimits& limits = {});

/// The deterministic sequence of candidate subgroups (1, M, M^2, ...) for
/// M = start, start + 1, ...; returns the first one that is injective on the
/// box and pairs nontrivially with every listed weight, skipping `skip`
/// acceptable candidates first.
Weight generic_subgroup(const IntegerBox& box, const std::vector<Weight>& nonzero_on,
                        std::size_t skip = 0);

}  // namespace logquant
