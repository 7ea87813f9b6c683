#include <gtest/gtest.h>

#include "bomega/serialize.hpp"
#include "bomega/text.hpp"
#include "bomega/universe.hpp"

using namespace bomega;

TEST(Parse, ElementForms) {
  EXPECT_EQ(parse_belem(" ( 2 , 3 , 1 ) "), BElem(2, 3, 1));
  EXPECT_EQ(parse_belem("0"), BElem::zero());
  EXPECT_EQ(parse_brandt("(3;1;5)"), BrandtElem(3, 1, 5));
  EXPECT_EQ(parse_brandt("O"), BrandtElem::zero());
  EXPECT_EQ(parse_brandt_list(""), std::vector<BrandtElem>{});
  EXPECT_EQ(parse_brandt_list("(1;0;2), O"), (std::vector<BrandtElem>{BrandtElem(1, 0, 2), BrandtElem::zero()}));
  EXPECT_TRUE(parse_extended("Y").is_adjoined());
  EXPECT_EQ(parse_extended("(1;0;2)"), ExtendedElem(BrandtElem(1, 0, 2)));
}

TEST(Parse, Neighbourhoods) {
  EXPECT_EQ(std::get<Tau1Nbhd>(parse_nbhd("t1:3")).n, 3u);
  EXPECT_EQ(std::get<AcNbhd>(parse_nbhd("ac:(2,5)(0,0)")).excluded, (std::vector<IndexPair>{{0, 0}, {2, 5}}));
  EXPECT_TRUE(std::get<AcNbhd>(parse_nbhd("ac:")).excluded.empty());
  EXPECT_EQ(to_string(parse_nbhd("ac:(2,5)(0,0)")), "ac:(0,0)(2,5)");
  EXPECT_EQ(to_string(parse_nbhd("t1:7")), "t1:7");
}

TEST(Parse, Errors) {
  for (const char* s : {"", "(1,2)", "(1,2,3", "(a,1,1)", "1", "(1;2;3)", "(1,2,3)x", "(1,2,-3)"})
    EXPECT_THROW(parse_belem(s), ParseError) << s;
  for (const char* s : {"", "0", "(1,2,3)", "(1;2)"}) EXPECT_THROW(parse_brandt(s), ParseError) << s;
  for (const char* s : {"", ",", "1,,2", "+", "1,+2,3", "x"}) EXPECT_THROW(parse_support(s), ParseError) << s;
  for (const char* s : {"t1:", "ac:(1)", "ab:(1,2)", "t1:3x"}) EXPECT_THROW(parse_nbhd(s), ParseError) << s;
  EXPECT_THROW(parse_belem("(99999999999999999999,0,0)"), ParseError);
  EXPECT_THROW(parse_belem("(281474976710657,0,0)"), ParseError);
}

TEST(Parse, SupportRoundTrip) {
  for (const char* s : {"0", "0,1,3", "+4", "0,2,+5", "7,+9"}) EXPECT_EQ(to_string(parse_support(s)), s);
  EXPECT_EQ(to_string(parse_support("3,1,2,+4")), "+1");
}

TEST(Parse, TextRoundTripOnUniverse) {
  for (const auto& x : belem_universe(parse_family("0,2,+5"), 4).elements) EXPECT_EQ(parse_belem(to_string(x)), x);
  for (const auto& y : brandt_universe(parse_family("0,1,3"), 5).elements) EXPECT_EQ(parse_brandt(to_string(y)), y);
}

TEST(Json, ElementFields) {
  EXPECT_EQ(to_json_value(BElem(2, 0, 1)).dump(), R"({"i":2,"j":0,"k":1})");
  EXPECT_EQ(to_json_value(BElem::zero()).dump(), R"({"zero":true})");
  EXPECT_EQ(to_json_value(BrandtElem(3, 1, 5)).dump(), R"({"row":3,"val":1,"col":5})");
  EXPECT_EQ(to_json_value(BrandtElem::zero()).dump(), R"({"O":true})");
}

TEST(Json, RoundTripOnUniverse) {
  for (const auto& x : belem_universe(parse_family("0,1,3"), 4).elements)
    EXPECT_EQ(belem_from_json(json::parse(to_json_value(x).dump())), x);
  for (const auto& y : brandt_universe(parse_family("0,1,3"), 5).elements)
    EXPECT_EQ(brandt_from_json(json::parse(to_json_value(y).dump())), y);
}

TEST(Json, Reports) {
  VerificationReport r;
  r.checked = 4;
  EXPECT_EQ(to_json_value(r).dump(), R"({"passed":true,"checked":4,"counterexample":null,"note":""})");
  r.fail({"(1,0,0)", "0"}, "why");
  r.fail({"ignored"}, "second");
  EXPECT_EQ(to_json_value(r).dump(),
            R"j({"passed":false,"checked":4,"counterexample":["(1,0,0)","0"],"note":"why"})j");
}

TEST(Json, BrandtArrayFormAndErrors) {
  EXPECT_EQ(brandt_from_json(json::parse("[1,0,2]")), BrandtElem(1, 0, 2));
  EXPECT_THROW(brandt_from_json(json::parse("[1,0]")), ParseError);
  EXPECT_THROW(brandt_from_json(json::parse("[1,-1,2]")), ParseError);
  EXPECT_THROW(brandt_from_json(json::parse(R"({"row":1})")), ParseError);
  EXPECT_THROW(belem_from_json(json::parse("3")), ParseError);
}

TEST(Json, MSequence) {
  const auto f = parse_family("0,1,3");
  const auto seq = parse_msequence(R"([[1,0,2],{"row":3,"val":1,"col":4},[5,0,6]])", f);
  EXPECT_EQ(seq.size(), 3u);
  EXPECT_THROW(parse_msequence("[1,0,2", f), ParseError);
  EXPECT_THROW(parse_msequence("{}", f), ParseError);
  EXPECT_THROW(parse_msequence("[[3,1,4],[2,0,6]]", f), InvalidElement);
}
