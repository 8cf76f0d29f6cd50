#include "logquant/toricmodel.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "logquant/error.hpp"

namespace logquant {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

}  // namespace

void ToricLogData::check_structure() const {
  if (rank == 0) malformed("toric data of rank 0");
  if (global_sign != 1 && global_sign != -1) malformed("global_sign must be 1 or -1");
  std::set<std::string> comps;
  for (const auto& c : components) {
    if (c.empty()) malformed("empty component id");
    if (!comps.insert(c).second) malformed("duplicate component id '" + c + "'");
  }
  if (!comps.count(base_component)) malformed("base component '" + base_component + "' is not a component");

  std::set<std::string> wall_ids;
  for (const auto& w : walls) {
    if (!wall_ids.insert(w.id).second) malformed("duplicate wall id '" + w.id + "'");
    if (w.residue.size() != rank) malformed("wall '" + w.id + "' residue has the wrong length");
    if (std::all_of(w.residue.begin(), w.residue.end(), [](const Rational& q) { return q == 0; })) {
      malformed("wall '" + w.id + "' has zero residue");
    }
    if (!comps.count(w.joins.first) || !comps.count(w.joins.second)) {
      malformed("wall '" + w.id + "' joins an unknown component");
    }
  }
  for (const auto& p : pieces) {
    if (!comps.count(p.component)) malformed("piece on unknown component '" + p.component + "'");
    if (p.region.rank() != rank) malformed("piece region has the wrong rank");
  }
  for (const auto& s : strata) {
    if (s.walls.empty()) malformed("empty stratum");
    // Up to dim M = 2 rank hypersurfaces can meet.
    if (s.walls.size() > 2 * rank) malformed("stratum with more walls than the dimension allows");
    for (const auto& id : s.walls) {
      if (!wall_ids.count(id)) malformed("stratum names unknown wall '" + id + "'");
    }
  }
}

ToricLogData ToricLogData::with_global_sign(int sign) const {
  ToricLogData d = *this;
  d.global_sign = sign;
  return d;
}

bool ValidationReport::proper() const {
  return std::all_of(strata.begin(), strata.end(), [](const StratumCheck& s) { return s.proper; });
}

bool ValidationReport::pieces_ok() const {
  return std::all_of(pieces_nonempty.begin(), pieces_nonempty.end(), [](bool b) { return b; });
}

std::map<std::string, int> component_parities(const ToricLogData& d) {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;
  for (const auto& w : d.walls) {
    adj[w.joins.first].emplace_back(w.joins.second, w.id);
    if (w.joins.first != w.joins.second) adj[w.joins.second].emplace_back(w.joins.first, w.id);
  }
  std::map<std::string, int> parity{{d.base_component, 0}};
  std::deque<std::string> queue{d.base_component};
  while (!queue.empty()) {
    const std::string c = queue.front();
    queue.pop_front();
    for (const auto& [other, wall] : adj[c]) {
      const int want = 1 - parity[c];
      auto [it, inserted] = parity.try_emplace(other, want);
      if (inserted) {
        queue.push_back(other);
      } else if (it->second != want) {
        throw Error(ErrorKind::ParityInconsistent,
                    "odd cycle through wall '" + wall + "' between '" + c + "' and '" + other + "'");
      }
    }
  }
  for (const auto& c : d.components) {
    if (!parity.count(c)) {
      throw Error(ErrorKind::ParityInconsistent,
                  "component '" + c + "' is not reachable from the base component");
    }
  }
  return parity;
}

std::vector<int> signs(const ToricLogData& d) {
  const auto parity = component_parities(d);
  std::vector<int> out;
  out.reserve(d.pieces.size());
  for (const auto& p : d.pieces) out.push_back(parity.at(p.component) ? -d.global_sign : d.global_sign);
  return out;
}

ValidationReport validate(const ToricLogData& d, const PolyhedraLimits& limits) {
  d.check_structure();
  ValidationReport report;
  try {
    component_parities(d);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParityInconsistent) throw;
    report.parity_ok = false;
    report.parity_detail = e.what();
  }

  std::map<std::string, const DivisorWall*> by_id;
  for (const auto& w : d.walls) by_id[w.id] = &w;
  for (const auto& s : d.strata) {
    std::vector<RationalVector> modular;
    for (const auto& id : s.walls) {
      RationalVector c = by_id.at(id)->residue;
      for (auto& x : c) x = -x;
      modular.push_back(std::move(c));
    }
    report.strata.push_back({s.walls, strongly_convex(modular, limits)});
  }
  for (const auto& p : d.pieces) report.pieces_nonempty.push_back(!is_empty(p.region, limits));
  return report;
}

void require_valid(const ToricLogData& d, const PolyhedraLimits& limits) {
  const auto report = validate(d, limits);
  if (!report.parity_ok) throw Error(ErrorKind::ParityInconsistent, report.parity_detail);
  for (const auto& s : report.strata) {
    if (!s.proper) {
      std::string names;
      for (const auto& w : s.walls) names += (names.empty() ? "" : ",") + w;
      throw Error(ErrorKind::NotProper,
                  "modular weights of stratum {" + names + "} do not span a strongly convex cone");
    }
  }
  for (std::size_t i = 0; i < report.pieces_nonempty.size(); ++i) {
    if (!report.pieces_nonempty[i]) {
      throw Error(ErrorKind::EmptyPiece, "piece " + std::to_string(i) + " on component '" +
                                             d.pieces[i].component + "' is empty");
    }
  }
}

bool prequant_check(const ToricLogData& d, const PolyhedraLimits& limits) {
  for (const auto& p : d.pieces) {
    for (const auto& v : vertices(p.region, limits)) {
      if (!std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); })) {
        return false;
      }
    }
  }
  return true;
}

Real S2FamilyParams::integrality_residual() const {
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  return abs(log((Real(1) - a) / (Real(1) + a)) - Real(n));
}

std::pair<ToricLogData, S2FamilyParams> s2_family(std::int64_t n1, std::int64_t n2) {
  ToricLogData d;
  d.rank = 1;
  d.components = {"C1", "C2"};
  d.base_component = "C1";
  // Modular weight -1 on the C1 side, so the residue of the tropical form is +1.
  d.walls.push_back({"Z", {Rational(1)}, {"C1", "C2"}});
  d.strata.push_back({{"Z"}});
  d.pieces.push_back({"C1", interval(Rational(n1), std::nullopt)});
  d.pieces.push_back({"C2", interval(Rational(n2), std::nullopt)});

  S2FamilyParams params;
  params.n1 = n1;
  params.n2 = n2;
  params.n = n2 - n1;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  const Real e = exp(Real(params.n));
  params.a = (Real(1) - e) / (Real(1) + e);
  params.a_prime = Real(n1) + log(Real(1) - params.a);
  return {std::move(d), params};
}

ToricLogData delzant(const Polyhedron& p, const PolyhedraLimits& limits) {
  if (is_empty(p, limits)) throw Error(ErrorKind::EmptyPiece, "Delzant polytope is empty");
  if (!is_bounded(p, limits)) throw Error(ErrorKind::Unbounded, "Delzant polytope is unbounded");
  ToricLogData d;
  d.rank = p.rank();
  d.components = {"C0"};
  d.base_component = "C0";
  d.pieces.push_back({"C0", p});
  return d;
}

Polyhedron interval(std::optional<Rational> lo, std::optional<Rational> hi) {
  std::vector<Halfspace> hs;
  if (lo) hs.emplace_back(RationalVector{Rational(1)}, *lo);
  if (hi) hs.emplace_back(RationalVector{Rational(-1)}, -*hi);
  return Polyhedron(1, std::move(hs));
}

Polyhedron box_polyhedron(const std::vector<std::pair<Rational, Rational>>& ranges) {
  const std::size_t r = ranges.size();
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector e(r, Rational(0));
    e[i] = 1;
    hs.emplace_back(e, ranges[i].first);
    e[i] = -1;
    hs.emplace_back(e, -ranges[i].second);
  }
  return Polyhedron(r, std::move(hs));
}

}  // namespace logquant
