#include "logquant/serialize.hpp"

#include <limits>

#include "logquant/error.hpp"

namespace logquant {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& obj, const char* key) {
  const Json& a = field(obj, key);
  if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return a;
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t rank_from_json(const Json& j) {
  const Integer r = integer_from_json(j);
  if (r < 1 || r > 64) malformed("rank must be a small positive integer");
  return r.convert_to<std::size_t>();
}

std::int64_t small_int(const Json& j, const char* what) {
  const Integer v = integer_from_json(j);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    malformed(std::string(what) + " is out of range");
  }
  return v.convert_to<std::int64_t>();
}

Json rational_vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_to_json(q));
  return a;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json("int:" + v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  malformed("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return Json(format_rational(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  malformed("expected a rational \"p/q\", got " + j.dump());
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w.coords) a.push_back(integer_to_json(x));
  return a;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) malformed("a weight must be an array of integers");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return Weight(std::move(c));
}

Json to_json(const Character& c) {
  Json terms = Json::array();
  for (const auto& [w, m] : c.terms()) terms.push_back({{"weight", to_json(w)}, {"mult", integer_to_json(m)}});
  return {{"rank", c.rank()}, {"terms", std::move(terms)}};
}

Character character_from_json(const Json& j) {
  const std::size_t rank = rank_from_json(field(j, "rank"));
  std::vector<std::pair<Weight, Integer>> terms;
  for (const auto& t : array_field(j, "terms")) {
    terms.emplace_back(weight_from_json(field(t, "weight")), integer_from_json(field(t, "mult")));
  }
  try {
    return Character::from_terms(rank, terms);
  } catch (const Error& e) {
    malformed(e.what());
  }
}

Json to_json(const SU2Char& s) {
  Json irreps = Json::array();
  for (const auto& [j, m] : s.mults()) irreps.push_back({{"j", j}, {"mult", integer_to_json(m)}});
  return {{"irreps", std::move(irreps)}};
}

SU2Char su2char_from_json(const Json& j) {
  SU2Char::Terms t;
  for (const auto& x : array_field(j, "irreps")) {
    const auto hw = small_int(field(x, "j"), "highest weight");
    if (hw < 0) malformed("highest weight must be nonnegative");
    t[hw] += integer_from_json(field(x, "mult"));
  }
  return SU2Char(t);
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, k] : p.terms()) terms.push_back({{"exp", e}, {"coeff", integer_to_json(k)}});
  return {{"terms", std::move(terms)}};
}

Json to_json(const Polyhedron& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) {
    hs.push_back({{"normal", rational_vector_to_json(h.normal)}, {"offset", rational_to_json(h.offset)}});
  }
  return {{"rank", p.rank()}, {"halfspaces", std::move(hs)}};
}

Polyhedron polyhedron_from_json(const Json& j) {
  const std::size_t rank = rank_from_json(field(j, "rank"));
  std::vector<Halfspace> hs;
  for (const auto& h : array_field(j, "halfspaces")) {
    auto normal = rational_vector_from_json(field(h, "normal"));
    if (normal.size() != rank) malformed("halfspace normal has the wrong length");
    hs.emplace_back(std::move(normal), rational_from_json(field(h, "offset")));
  }
  return Polyhedron(rank, std::move(hs));
}

Json to_json(const ToricLogData& d) {
  Json walls = Json::array();
  for (const auto& w : d.walls) {
    walls.push_back({{"id", w.id},
                     {"residue", rational_vector_to_json(w.residue)},
                     {"joins", Json::array({w.joins.first, w.joins.second})}});
  }
  Json pieces = Json::array();
  for (const auto& p : d.pieces) pieces.push_back({{"component", p.component}, {"region", to_json(p.region)}});
  Json strata = Json::array();
  for (const auto& s : d.strata) strata.push_back(s.walls);
  return {{"rank", d.rank},
          {"components", d.components},
          {"walls", std::move(walls)},
          {"pieces", std::move(pieces)},
          {"strata", std::move(strata)},
          {"base_component", d.base_component},
          {"global_sign", d.global_sign}};
}

ToricLogData toric_from_json(const Json& j) {
  ToricLogData d;
  d.rank = rank_from_json(field(j, "rank"));
  for (const auto& c : array_field(j, "components")) d.components.push_back(string_from_json(c, "component id"));
  if (j.contains("walls")) {
    for (const auto& w : array_field(j, "walls")) {
      const Json& joins = array_field(w, "joins");
      if (joins.size() != 2) malformed("a wall joins exactly two components");
      d.walls.push_back({string_from_json(field(w, "id"), "wall id"),
                         rational_vector_from_json(field(w, "residue")),
                         {string_from_json(joins[0], "component id"), string_from_json(joins[1], "component id")}});
    }
  }
  for (const auto& p : array_field(j, "pieces")) {
    d.pieces.push_back({string_from_json(field(p, "component"), "piece component"),
                        polyhedron_from_json(field(p, "region"))});
  }
  if (j.contains("strata")) {
    for (const auto& s : array_field(j, "strata")) {
      if (!s.is_array()) malformed("a stratum is an array of wall ids");
      Stratum st;
      for (const auto& id : s) st.walls.push_back(string_from_json(id, "wall id"));
      d.strata.push_back(std::move(st));
    }
  }
  d.base_component = string_from_json(field(j, "base_component"), "base_component");
  d.global_sign = j.contains("global_sign") ? static_cast<int>(small_int(j["global_sign"], "global_sign")) : 1;
  d.check_structure();
  return d;
}

Json to_json(const std::vector<FixedPointTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json ws = Json::array();
    for (const auto& w : t.weights) ws.push_back(to_json(w));
    out.push_back({{"sign", t.sign}, {"mu", to_json(t.mu)}, {"weights", std::move(ws)}});
  }
  return out;
}

std::vector<FixedPointTerm> fixed_terms_from_json(const Json& j) {
  if (!j.is_array()) malformed("fixed_terms must be an array");
  std::vector<FixedPointTerm> terms;
  for (const auto& t : j) {
    const auto sign = small_int(field(t, "sign"), "sign");
    if (sign != 1 && sign != -1) malformed("fixed-point sign must be 1 or -1");
    FixedPointTerm term{static_cast<int>(sign), weight_from_json(field(t, "mu")), {}};
    for (const auto& w : array_field(t, "weights")) term.weights.push_back(weight_from_json(w));
    terms.push_back(std::move(term));
  }
  return terms;
}

Json to_json(const QRReport& r) {
  Json table = Json::array();
  for (const auto& row : r.per_weight_table) {
    table.push_back({{"weight", to_json(row.lambda)},
                     {"lattice", integer_to_json(row.lattice)},
                     {"fixed_point", integer_to_json(row.fixed_point)},
                     {"reduced", integer_to_json(row.reduced)}});
  }
  Json out = {{"agree", r.agree},
              {"lattice_char", to_json(r.lattice_char)},
              {"fixedpoint_char", to_json(r.fixedpoint_char)},
              {"per_weight_table", std::move(table)}};
  if (r.xi) out["xi"] = to_json(*r.xi);
  if (r.specialized_agree) out["specialized_agree"] = *r.specialized_agree;
  return out;
}

Json to_json(const ValidationReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) strata.push_back({{"walls", s.walls}, {"proper", s.proper}});
  Json out = {{"ok", r.ok()},
              {"parity", {{"ok", r.parity_ok}}},
              {"properness", {{"ok", r.proper()}, {"strata", std::move(strata)}}},
              {"pieces", {{"ok", r.pieces_ok()}, {"nonempty", r.pieces_nonempty}}}};
  if (!r.parity_ok) out["parity"]["detail"] = r.parity_detail;
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace logquant
