#include <gtest/gtest.h>

#include "logquant/serialize.hpp"
#include "support.hpp"

namespace logquant {
namespace {

using testing::ch1;
using testing::q;

TEST(Numeric, RationalFormatting) {
  EXPECT_EQ(format_rational(q(3)), "3/1");
  EXPECT_EQ(format_rational(q(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), q(-3, 2));
  EXPECT_EQ(parse_rational("4"), q(4));
  EXPECT_EQ(parse_rational("int:123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Numeric, FloorCeilPrimitive) {
  EXPECT_EQ(floor_of(q(-3, 2)), -2);
  EXPECT_EQ(ceil_of(q(-3, 2)), -1);
  EXPECT_EQ(floor_of(q(4)), 4);
  EXPECT_EQ(primitive_direction({q(2, 3), q(-4, 3)}), (std::vector<Integer>{1, -2}));
  EXPECT_THROW(to_int64(Integer("99999999999999999999"), "x"), Error);
}

TEST(Json, Integers) {
  EXPECT_EQ(integer_to_json(Integer(-7)), Json(-7));
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(integer_to_json(big), Json("int:123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(Json(5)), 5);
  EXPECT_THROW(integer_from_json(Json(1.5)), Error);
}

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(rational_to_json(q(1, 2)), Json("1/2"));
  EXPECT_EQ(rational_to_json(q(2)), Json("2/1"));
  EXPECT_EQ(rational_from_json(Json("5/10")), q(1, 2));
}

TEST(Json, CharacterShapeAndOrder) {
  const auto c = Character::from_terms(2, {{Weight{1, 0}, 2}, {Weight{0, 5}, -1}, {Weight{0, -1}, 3}});
  const Json j = to_json(c);
  EXPECT_EQ(j.dump(),
            R"({"rank":2,"terms":[{"mult":3,"weight":[0,-1]},{"mult":-1,"weight":[0,5]},{"mult":2,"weight":[1,0]}]})");
  EXPECT_EQ(character_from_json(j), c);
}

TEST(Json, CharacterRejectsBadInput) {
  EXPECT_THROW(character_from_json(Json::parse(R"({"rank":1,"terms":[{"weight":[0,1],"mult":1}]})")), Error);
  EXPECT_THROW(character_from_json(Json::parse(R"({"terms":[]})")), Error);
  EXPECT_THROW(character_from_json(Json::parse(R"({"rank":1,"terms":[{"weight":[0]}]})")), Error);
}

TEST(Json, Su2Char) {
  const SU2Char s = testing::su2({{1, 1}, {2, -3}});
  EXPECT_EQ(to_json(s).dump(), R"({"irreps":[{"j":1,"mult":1},{"j":2,"mult":-3}]})");
  EXPECT_EQ(su2char_from_json(to_json(s)), s);
}

TEST(Json, PolyhedronRoundTrip) {
  const auto p = box_polyhedron({{q(1, 2), q(2)}, {q(0), q(3)}});
  const Json j = to_json(p);
  EXPECT_EQ(j["halfspaces"][0]["offset"], "1/2");
  EXPECT_EQ(polyhedron_from_json(j), p);
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"({"rank":1,"halfspaces":[{"normal":["0/1"],"offset":"0/1"}]})")),
               Error);
}

TEST(Json, ToricRoundTrip) {
  for (const auto& d : {s2_family(0, 3).first, s2_family(-2, 5).first.with_global_sign(-1),
                        delzant(box_polyhedron({{q(0), q(1)}, {q(0), q(2)}}))}) {
    const Json j = to_json(d);
    const ToricLogData back = toric_from_json(j);
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(quantize_lattice(back), quantize_lattice(d));
  }
}

TEST(Json, ToricStructuralErrors) {
  Json j = to_json(s2_family(0, 3).first);
  j["base_component"] = "elsewhere";
  try {
    toric_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedInput);
  }
}

TEST(Json, FixedTermsRoundTrip) {
  const auto terms = fixed_terms_delzant(box_polyhedron({{q(0), q(1)}, {q(0), q(1)}}));
  EXPECT_EQ(fixed_terms_from_json(to_json(terms)), terms);
  EXPECT_EQ(to_json(fixed_terms_s2(0, 3)).dump(),
            R"([{"mu":[0],"sign":1,"weights":[[1]]},{"mu":[3],"sign":-1,"weights":[[1]]}])");
  EXPECT_THROW(fixed_terms_from_json(Json::parse(R"([{"sign":2,"mu":[0],"weights":[]}])")), Error);
}

TEST(Json, QrReportTableIsSorted) {
  const Json j = to_json(qr_check(s2_family(0, 3).first, fixed_terms_s2(0, 3)));
  EXPECT_TRUE(j["agree"].get<bool>());
  const auto& table = j["per_weight_table"];
  ASSERT_EQ(table.size(), 5u);
  for (std::size_t i = 0; i < table.size(); ++i) EXPECT_EQ(table[i]["weight"][0].get<int>(), static_cast<int>(i) - 1);
  EXPECT_EQ(j["lattice_char"], to_json(ch1({{0, 1}, {1, 1}, {2, 1}})));
}

TEST(Json, ParseErrorsAreMalformed) {
  try {
    parse_json("{\"a\": ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedInput);
  }
}

}  // namespace
}  // namespace logquant
