#include <gtest/gtest.h>

#include <algorithm>

#include "charvar/io.hpp"
#include "json.hpp"
#include "property.hpp"

using namespace charvar;

namespace {

const char* kWeeks =
    "Generators:\n"
    "   a,b\n"
    "Relators:\n"
    "   aabbaaBaB\n"
    "   aabbAbAbb\n";

std::vector<std::string> strings(const std::vector<TracePolynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ParsePresentation, Examples) {
  auto g = parse_presentation("<a,b | abab>");
  EXPECT_EQ(g.rank(), 2);
  ASSERT_EQ(g.relators().size(), 1U);
  EXPECT_EQ(g.relators()[0].letters(), (std::vector<int>{1, 2, 1, 2}));

  auto w = parse_presentation("<a,b | abaBABabABAbabAB>");
  ASSERT_EQ(w.relators().size(), 1U);
  EXPECT_EQ(w.relators()[0].letters(), (std::vector<int>{1, 2, 1, -2, -1, -2, 1, 2, -1, -2, -1, 2, 1, 2, -1, -2}));

  auto f = parse_presentation("<a,b,c,d |>");
  EXPECT_EQ(f.rank(), 4);
  EXPECT_TRUE(f.relators().empty());
}

TEST(ParsePresentation, GeneratorNamesFollowListOrder) {
  auto g = parse_presentation("< x , y | xY , yyx >");
  EXPECT_EQ(g.rank(), 2);
  EXPECT_EQ(g.relators()[0].letters(), (std::vector<int>{1, -2}));
  EXPECT_EQ(g.relators()[1].letters(), (std::vector<int>{2, 2, 1}));
}

TEST(ParsePresentation, Errors) {
  EXPECT_THROW(parse_presentation("<a,a | aa>"), ParseError);
  EXPECT_THROW(parse_presentation("<a,b | abc>"), ParseError);
  EXPECT_THROW(parse_presentation("< | >"), ParseError);
  EXPECT_THROW(parse_presentation("<a,b abab>"), ParseError);
  EXPECT_THROW(parse_presentation("a,b | abab"), ParseError);
  EXPECT_THROW(parse_presentation("<ab | a>"), ParseError);
}

TEST(ParseSnappy, Weeks) {
  auto all = parse_snappy(kWeeks);
  ASSERT_EQ(all.size(), 1U);
  EXPECT_EQ(all[0].rank(), 2);
  ASSERT_EQ(all[0].relators().size(), 2U);
  EXPECT_EQ(all[0].relators()[0].letters(), (std::vector<int>{1, 1, 2, 2, 1, 1, -2, 1, -2}));
  EXPECT_EQ(all[0].relators()[1].letters(), (std::vector<int>{1, 1, 2, 2, -1, 2, -1, 2, 2}));
}

TEST(ParseSnappy, InlineLayout) {
  auto all = parse_snappy("Generators: a,b\nRelators: aabbaaBaB aabbAbAbb\n");
  ASSERT_EQ(all.size(), 1U);
  EXPECT_EQ(all[0].relators().size(), 2U);
}

TEST(ParseSnappy, SingleGenerator) {
  auto all = parse_snappy("Generators:\n a\nRelators:\n aa");
  ASSERT_EQ(all.size(), 1U);
  EXPECT_EQ(all[0].rank(), 1);
  EXPECT_EQ(all[0].relators()[0].letters(), (std::vector<int>{1, 1}));
}

TEST(ParseSnappy, BatchKeepsOrder) {
  std::string text;
  for (int k = 1; k <= 10; ++k) {
    text += "Generators:\n   a,b\nRelators:\n   ";
    text += std::string(static_cast<std::size_t>(k), 'a') + "b\n\n";
  }
  auto all = parse_snappy(text);
  ASSERT_EQ(all.size(), 10U);
  for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(all[k].relators()[0].size(), k + 2);
}

TEST(ParseSnappy, Errors) {
  EXPECT_THROW(parse_snappy(""), ParseError);
  EXPECT_THROW(parse_snappy("Relators:\n ab\n"), ParseError);
  EXPECT_THROW(parse_snappy("Generators:\n a,b\n"), ParseError);
  EXPECT_THROW(parse_snappy("Generators:\n a,b\nRelators:\n abc\n"), ParseError);
}

TEST(Source, Classification) {
  EXPECT_EQ(classify_source("<a|aa>").kind, PresentationSource::Kind::inline_text);
  EXPECT_EQ(classify_source(kWeeks).kind, PresentationSource::Kind::snappy_text);
  EXPECT_EQ(parse_source(classify_source(kWeeks)).rank(), 2);
  EXPECT_THROW(parse_source(classify_source("  ")), ParseError);
}

TEST(Export, TextHasAbabRelations) {
  auto pres = full_presentation(parse_presentation("<a,b | abab>"));
  std::string text = export_ideal(pres, ExportFormat::text);
  for (const char* s : {"t{1,2}^2 - 4", "t{1}*t{1,2}^2 - t{2}*t{1,2} - 2*t{1}", "t{2}*t{1,2}^2 - t{1}*t{1,2} - 2*t{2}"})
    EXPECT_NE(text.find(std::string("  ") + s + "\n"), std::string::npos) << s;
  EXPECT_NE(text.find("cut-out relations (3)"), std::string::npos);
}

TEST(Export, FreeRankTwoJson) {
  auto pres = full_presentation(parse_presentation("<a,b |>"));
  auto j = nlohmann::json::parse(export_ideal(pres, ExportFormat::json));
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["generators"], (nlohmann::json{"t{1}", "t{2}", "t{1,2}"}));
  EXPECT_TRUE(j["free_relations"].empty());
  EXPECT_TRUE(j["cutout_relations"].empty());
}

TEST(Export, JsonTermLayout) {
  CharVarietyPresentation pres;
  pres.rank = 2;
  pres.generators = generators(2);
  pres.cutout_relations = {parse_polynomial("3/2*t{1}^2*t{1,2} - 5")};
  auto j = nlohmann::json::parse(export_ideal(pres, ExportFormat::json));
  EXPECT_EQ(j["cutout_relations"][0][0], (nlohmann::json{{2, 0, 1}, "3", "2"}));
  EXPECT_EQ(j["cutout_relations"][0][1], (nlohmann::json{{0, 0, 0}, "-5", "1"}));
}

TEST(Export, AlgebraSystem) {
  auto pres = full_presentation(parse_presentation("<a,b | abab>"));
  std::string s = export_ideal(pres, ExportFormat::algebra_system);
  EXPECT_EQ(s.substr(0, s.find('\n')), "R = QQ[t{1}, t{2}, t{1,2}];");
  EXPECT_NE(s.find("  t{1,2}^2 - 4,\n"), std::string::npos);
  EXPECT_EQ(s.substr(s.size() - 3), ");\n");
  auto empty = full_presentation(parse_presentation("<a |>"));
  EXPECT_NE(export_ideal(empty, ExportFormat::algebra_system).find("ideal(0_R)"), std::string::npos);
}

TEST(Export, Deterministic) {
  auto g = parse_snappy(kWeeks)[0];
  for (auto f : {ExportFormat::text, ExportFormat::json, ExportFormat::algebra_system})
    EXPECT_EQ(export_ideal(full_presentation(g), f, g.relators()), export_ideal(full_presentation(g), f, g.relators()));
}

TEST(Export, FormatNames) {
  EXPECT_EQ(parse_format("json"), ExportFormat::json);
  EXPECT_THROW(parse_format("xml"), ParseError);
}

TEST(Import, RoundTripWeeks) {
  auto g = parse_snappy(kWeeks)[0];
  auto pres = full_presentation(g);
  auto back = import_ideal_json(export_ideal(pres, ExportFormat::json, g.relators()));
  EXPECT_EQ(back.presentation.rank, 2);
  EXPECT_EQ(back.presentation.generators, pres.generators);
  EXPECT_EQ(back.presentation.cutout_relations, pres.cutout_relations);
  EXPECT_EQ(back.relators, g.relators());
}

TEST(Import, HandWritten) {
  auto imp = import_ideal_json(R"({"relations": ["t{1,2}^2 - 4", "t{3} - 1"]})");
  EXPECT_EQ(imp.presentation.rank, 3);
  EXPECT_EQ(strings(imp.presentation.all_relations()), (std::vector<std::string>{"t{1,2}^2 - 4", "t{3} - 1"}));
}

TEST(Import, Errors) {
  EXPECT_THROW(import_ideal_json("{"), ParseError);
  EXPECT_THROW(import_ideal_json(R"({"rank": 2})"), ParseError);
  EXPECT_THROW(import_ideal_json(
                   R"({"rank":1,"generators":["t{1}"],"free_relations":[[[[1,2],"1","1"]]],"cutout_relations":[]})"),
               ParseError);
}

TEST(IoProperty, JsonRoundTrip) {
  EXPECT_TRUE(prop::for_all([](std::mt19937_64& rng) -> ::testing::AssertionResult {
    std::uniform_int_distribution<int> rank(1, 4), nterms(1, 5), deg(0, 3), num(-50, 50), den(1, 9), count(0, 3);
    int r = rank(rng);
    auto vars = generators(r);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    auto random_poly = [&] {
      TracePolynomial p;
      while (p.is_zero()) {
        for (int t = nterms(rng); t > 0; --t) {
          TracePolynomial term(Rational(num(rng), den(rng)));
          for (int d = deg(rng); d > 0; --d) term *= TracePolynomial(vars[pick(rng)]);
          p += term;
        }
      }
      return p;
    };
    CharVarietyPresentation pres;
    pres.rank = r;
    pres.generators = vars;
    for (int k = count(rng); k > 0; --k) pres.free_relations.push_back(random_poly());
    for (int k = count(rng); k > 0; --k) pres.cutout_relations.push_back(random_poly());
    auto back = import_ideal_json(export_ideal(pres, ExportFormat::json)).presentation;
    if (back.free_relations != pres.free_relations || back.cutout_relations != pres.cutout_relations)
      return ::testing::AssertionFailure() << "rank " << r;
    return ::testing::AssertionSuccess();
  }));
}
