#pragma once

// JSON forms of the library's data.  Rationals are strings "p/q"; integers are
// JSON numbers when they fit in 64 bits and "int:<digits>" strings otherwise.
// Every parser throws Error(MalformedInput) on schema violations.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "logquant/charring.hpp"
#include "logquant/indexcalc.hpp"
#include "logquant/polyhedra.hpp"
#include "logquant/toricmodel.hpp"

namespace logquant {

using Json = nlohmann::json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {"rank": r, "terms": [{"weight": [...], "mult": m}, ...]} in lexicographic
/// weight order.
Json to_json(const Character& c);
Character character_from_json(const Json& j);

/// {"irreps": [{"j": j, "mult": m}, ...]} in increasing j.
Json to_json(const SU2Char& s);
SU2Char su2char_from_json(const Json& j);

/// {"terms": [{"exp": e, "coeff": c}, ...]} in increasing exponent.
Json to_json(const LaurentPoly& p);

/// {"rank": r, "halfspaces": [{"normal": ["p/q", ...], "offset": "p/q"}, ...]}
Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

Json to_json(const ToricLogData& d);
ToricLogData toric_from_json(const Json& j);

/// [{"sign": 1, "mu": [...], "weights": [[...], ...]}, ...]
Json to_json(const std::vector<FixedPointTerm>& terms);
std::vector<FixedPointTerm> fixed_terms_from_json(const Json& j);

Json to_json(const QRReport& r);
Json to_json(const ValidationReport& r);

/// Parses text, mapping syntax errors to MalformedInput.
Json parse_json(const std::string& text);

}  // namespace logquant
