#pragma once

// Exact feasibility of small systems of rational linear constraints.
//
// Equalities are eliminated by substitution, inequalities by Fourier-Motzkin
// with strictness tracking, and a witness is recovered by back-substitution.
// No tolerances are involved anywhere.

#include <cstddef>
#include <optional>
#include <vector>

#include "logquant/numeric.hpp"

namespace logquant {

enum class Relation { GreaterEqual, Greater, Equal };

/// coeffs . x  (>=, >, =)  rhs
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
  Relation rel = Relation::GreaterEqual;
};

struct SolverLimits {
  // Fourier-Motzkin can square the constraint count per eliminated variable;
  // past this many live constraints the solve is abandoned with SizeLimit.
  std::size_t max_live_constraints = 200'000;
};

/// A point satisfying every constraint, or nullopt when the system is
/// infeasible over the rationals.
std::optional<RationalVector> find_point(std::size_t dim, const std::vector<LinearConstraint>& system,
                                         const SolverLimits& limits = {});

inline bool is_feasible(std::size_t dim, const std::vector<LinearConstraint>& system,
                        const SolverLimits& limits = {}) {
  return find_point(dim, system, limits).has_value();
}

/// True iff the homogeneous system (all right-hand sides ignored, strictness
/// dropped) admits only the zero solution.
bool only_trivial_solution(std::size_t dim, const std::vector<LinearConstraint>& homogeneous,
                           const SolverLimits& limits = {});

/// Solves the square system A x = b exactly; nullopt when A is singular.
std::optional<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b);

}  // namespace logquant
