#include "logquant/numeric.hpp"

#include <limits>

#include "logquant/error.hpp"

namespace logquant {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotSU2Character: return "NotSU2Character";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ParityInconsistent: return "ParityInconsistent";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::EmptyPiece: return "EmptyPiece";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotDelzant: return "NotDelzant";
    case ErrorKind::InfiniteSupport: return "InfiniteSupport";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (text.starts_with("int:")) text.remove_prefix(4);
  if (!valid_integer_text(text)) {
    throw Error(ErrorKind::MalformedInput, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  if (text.starts_with("int:")) return Rational(parse_integer(text));
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorKind::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::int64_t to_int64(const Integer& value, std::string_view what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);  // always positive
  Integer f = n / d;           // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Integer> primitive_direction(const RationalVector& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, Integer(denominator(c)));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& c : v) {
    Integer n = numerator(c) * (l / denominator(c));
    g = gcd(g, abs(n));
    out.push_back(std::move(n));
  }
  if (g > 1) {
    for (auto& n : out) n /= g;
  }
  return out;
}

}  // namespace logquant
