#include "logquant/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "logquant/error.hpp"

namespace logquant {

namespace {

struct Inequality {
  RationalVector coeffs;
  Rational rhs;
  bool strict = false;
};

struct Substitution {
  std::size_t var;
  RationalVector expr;  // x_var = constant + expr . x
  Rational constant;
};

// Scales so the leading nonzero coefficient has absolute value 1 and merges
// constraints with identical left-hand sides, keeping the tightest.  Constant
// constraints are checked on the spot; returns false if one is violated.
bool canonicalize(std::vector<Inequality>& system) {
  std::map<RationalVector, std::pair<Rational, bool>> best;
  for (auto& in : system) {
    auto lead = std::find_if(in.coeffs.begin(), in.coeffs.end(),
                             [](const Rational& q) { return q != 0; });
    if (lead == in.coeffs.end()) {
      const bool ok = in.strict ? (0 > in.rhs) : (0 >= in.rhs);
      if (!ok) return false;
      continue;
    }
    const Rational scale = abs(*lead);
    if (scale != 1) {
      for (auto& c : in.coeffs) c /= scale;
      in.rhs /= scale;
    }
    auto [it, inserted] = best.try_emplace(in.coeffs, in.rhs, in.strict);
    if (!inserted) {
      auto& [rhs, strict] = it->second;
      if (in.rhs > rhs) {
        rhs = in.rhs;
        strict = in.strict;
      } else if (in.rhs == rhs) {
        strict = strict || in.strict;
      }
    }
  }
  system.clear();
  for (auto& [coeffs, bound] : best) system.push_back({coeffs, bound.first, bound.second});
  return true;
}

// Chooses a value for a variable from its lower and upper bounds.
std::optional<Rational> pick_between(const std::optional<std::pair<Rational, bool>>& lower,
                                     const std::optional<std::pair<Rational, bool>>& upper) {
  if (!lower && !upper) return Rational(0);
  if (lower && !upper) return lower->second ? lower->first + 1 : lower->first;
  if (!lower && upper) return upper->second ? upper->first - 1 : upper->first;
  const auto& [lo, lo_strict] = *lower;
  const auto& [hi, hi_strict] = *upper;
  if (lo < hi) return (lo + hi) / 2;
  if (lo == hi && !lo_strict && !hi_strict) return lo;
  return std::nullopt;
}

}  // namespace

std::optional<RationalVector> find_point(std::size_t dim, const std::vector<LinearConstraint>& system,
                                         const SolverLimits& limits) {
  std::vector<LinearConstraint> equalities;
  std::vector<Inequality> inequalities;
  for (const auto& c : system) {
    if (c.coeffs.size() != dim) {
      throw Error(ErrorKind::RankMismatch, "constraint of length " + std::to_string(c.coeffs.size()) +
                                               " in a " + std::to_string(dim) + "-variable system");
    }
    if (c.rel == Relation::Equal) {
      equalities.push_back(c);
    } else {
      inequalities.push_back({c.coeffs, c.rhs, c.rel == Relation::Greater});
    }
  }

  // Eliminate equalities by substitution.
  std::vector<Substitution> subs;
  std::vector<bool> substituted(dim, false);
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    const auto& eq = equalities[e];
    auto pivot = std::find_if(eq.coeffs.begin(), eq.coeffs.end(),
                              [](const Rational& q) { return q != 0; });
    if (pivot == eq.coeffs.end()) {
      if (eq.rhs != 0) return std::nullopt;
      continue;
    }
    const auto k = static_cast<std::size_t>(pivot - eq.coeffs.begin());
    const Rational a_k = eq.coeffs[k];
    Substitution s{k, RationalVector(dim, Rational(0)), eq.rhs / a_k};
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != k) s.expr[i] = -eq.coeffs[i] / a_k;
    }
    auto eliminate = [&](RationalVector& coeffs, Rational& rhs) {
      if (coeffs[k] == 0) return;
      const Rational f = coeffs[k] / a_k;
      for (std::size_t i = 0; i < dim; ++i) coeffs[i] -= f * eq.coeffs[i];
      rhs -= f * eq.rhs;
    };
    for (std::size_t later = e + 1; later < equalities.size(); ++later) {
      eliminate(equalities[later].coeffs, equalities[later].rhs);
    }
    for (auto& in : inequalities) eliminate(in.coeffs, in.rhs);
    substituted[k] = true;
    subs.push_back(std::move(s));
  }

  std::vector<std::size_t> free_vars;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!substituted[i]) free_vars.push_back(i);
  }

  // Fourier-Motzkin elimination, recording each stage for back-substitution.
  if (!canonicalize(inequalities)) return std::nullopt;
  std::vector<std::pair<std::size_t, std::vector<Inequality>>> stages;
  std::vector<std::size_t> remaining = free_vars;
  while (!remaining.empty() && !inequalities.empty()) {
    // Eliminate the variable producing the fewest new constraints.
    std::size_t best_pos = 0;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      std::size_t pos = 0, neg = 0;
      for (const auto& in : inequalities) {
        const auto& c = in.coeffs[remaining[r]];
        if (c > 0) ++pos;
        if (c < 0) ++neg;
      }
      if (pos * neg < best_cost) {
        best_cost = pos * neg;
        best_pos = r;
      }
    }
    const std::size_t v = remaining[best_pos];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));

    std::vector<Inequality> lower, upper, next;
    for (const auto& in : inequalities) {
      const auto& c = in.coeffs[v];
      if (c > 0) {
        lower.push_back(in);
      } else if (c < 0) {
        upper.push_back(in);
      } else {
        next.push_back(in);
      }
    }
    if (next.size() + lower.size() * upper.size() > limits.max_live_constraints) {
      throw Error(ErrorKind::SizeLimit, "Fourier-Motzkin elimination exceeded " +
                                            std::to_string(limits.max_live_constraints) +
                                            " constraints");
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Rational wl = -up.coeffs[v];  // > 0
        const Rational wu = lo.coeffs[v];   // > 0
        Inequality comb{RationalVector(dim, Rational(0)), wl * lo.rhs + wu * up.rhs,
                        lo.strict || up.strict};
        for (std::size_t i = 0; i < dim; ++i) comb.coeffs[i] = wl * lo.coeffs[i] + wu * up.coeffs[i];
        comb.coeffs[v] = 0;
        next.push_back(std::move(comb));
      }
    }
    stages.emplace_back(v, std::move(inequalities));
    inequalities = std::move(next);
    if (!canonicalize(inequalities)) return std::nullopt;
  }

  RationalVector x(dim, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t v = it->first;
    std::optional<std::pair<Rational, bool>> lower, upper;
    for (const auto& in : it->second) {
      const Rational& a = in.coeffs[v];
      if (a == 0) continue;
      Rational rest = in.rhs;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i != v) rest -= in.coeffs[i] * x[i];
      }
      const Rational bound = rest / a;
      if (a > 0) {
        if (!lower || bound > lower->first || (bound == lower->first && in.strict)) {
          lower = std::make_pair(bound, in.strict);
        }
      } else {
        if (!upper || bound < upper->first || (bound == upper->first && in.strict)) {
          upper = std::make_pair(bound, in.strict);
        }
      }
    }
    auto value = pick_between(lower, upper);
    if (!value) {
      // Elimination certified feasibility; an empty range is a solver bug.
      throw std::logic_error("back-substitution found an empty range");
    }
    x[v] = *value;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational value = it->constant;
    for (std::size_t i = 0; i < dim; ++i) {
      if (it->expr[i] != 0) value += it->expr[i] * x[i];
    }
    x[it->var] = value;
  }
  return x;
}

bool only_trivial_solution(std::size_t dim, const std::vector<LinearConstraint>& homogeneous,
                           const SolverLimits& limits) {
  std::vector<LinearConstraint> base;
  base.reserve(homogeneous.size() + 1);
  for (const auto& c : homogeneous) {
    base.push_back({c.coeffs, Rational(0),
                    c.rel == Relation::Equal ? Relation::Equal : Relation::GreaterEqual});
  }
  // A nonzero solution of a homogeneous system can be scaled so that one
  // coordinate equals +1 or -1.
  for (std::size_t k = 0; k < dim; ++k) {
    for (int s : {1, -1}) {
      auto probe = base;
      RationalVector e(dim, Rational(0));
      e[k] = s;
      probe.push_back({std::move(e), Rational(1), Relation::GreaterEqual});
      if (is_feasible(dim, probe, limits)) return false;
    }
  }
  return true;
}

std::optional<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace logquant
