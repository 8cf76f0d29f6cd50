#pragma once

// Combinatorial model of a toric log symplectic manifold: chart components of
// the welded moment codomain glued along divisor walls, with one (possibly
// unbounded) polyhedral piece of the moment image per component.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logquant/numeric.hpp"
#include "logquant/polyhedra.hpp"

namespace logquant {

struct DivisorWall {
  std::string id;
  RationalVector residue;  // modular weight is -residue
  std::pair<std::string, std::string> joins;
};

struct PolytopePiece {
  std::string component;
  Polyhedron region;
};

/// Walls whose hypersurfaces meet.
struct Stratum {
  std::vector<std::string> walls;
};

struct ToricLogData {
  std::size_t rank = 1;
  std::vector<std::string> components;
  std::vector<DivisorWall> walls;
  std::vector<PolytopePiece> pieces;
  std::vector<Stratum> strata;
  std::string base_component;
  int global_sign = 1;

  /// Referential integrity: ids exist, ranks agree, residues nonzero, global
  /// sign is +-1, strata have at most 2 rank walls.  Throws MalformedInput.
  void check_structure() const;

  ToricLogData with_global_sign(int sign) const;
};

struct StratumCheck {
  std::vector<std::string> walls;
  bool proper = true;
};

struct ValidationReport {
  bool parity_ok = true;
  std::string parity_detail;
  std::vector<StratumCheck> strata;
  std::vector<bool> pieces_nonempty;

  bool proper() const;
  bool pieces_ok() const;
  bool ok() const { return parity_ok && proper() && pieces_ok(); }
};

/// Runs the parity, properness and nonemptiness checks without throwing for
/// failed checks (structural errors still throw MalformedInput).
ValidationReport validate(const ToricLogData& d, const PolyhedraLimits& limits = {});

/// Throws ParityInconsistent, NotProper or EmptyPiece for the first failed
/// check, in that order.
void require_valid(const ToricLogData& d, const PolyhedraLimits& limits = {});

/// Wall-crossing parity of every component relative to the base component:
/// 0 for an even number of crossings, 1 for odd.  Throws ParityInconsistent on
/// an odd cycle or an unreachable component.
std::map<std::string, int> component_parities(const ToricLogData& d);

/// o_j for each piece, in piece order.
std::vector<int> signs(const ToricLogData& d);

/// Sufficient condition for prequantizability: every vertex of every piece is
/// a lattice point.
bool prequant_check(const ToricLogData& d, const PolyhedraLimits& limits = {});

/// Geometric parameters of the rank-1 S^2 example.  These are the only inexact
/// numbers in the library; nothing downstream of the index uses them.
struct S2FamilyParams {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n = 0;
  Real a;        // position of the divisor {z = a}
  Real a_prime;  // additive constant of the moment map

  /// |log((1 - a)/(1 + a)) - n|, computed at the precision of Real.
  Real integrality_residual() const;
};

std::pair<ToricLogData, S2FamilyParams> s2_family(std::int64_t n1, std::int64_t n2);

/// Single-component data for a compact toric manifold.  Throws EmptyPiece or
/// Unbounded.  The Delzant smoothness of p is not checked here.
ToricLogData delzant(const Polyhedron& p, const PolyhedraLimits& limits = {});

/// Convenience constructors used by builders and tests.
Polyhedron interval(std::optional<Rational> lo, std::optional<Rational> hi);
Polyhedron box_polyhedron(const std::vector<std::pair<Rational, Rational>>& ranges);

}  // namespace logquant
