#include <gtest/gtest.h>

#include "graphicable/errors.hpp"
#include "graphicable/io.hpp"
#include "json.hpp"
#include "oracles/oracles.hpp"
#include "support/generators.hpp"

using namespace graphicable;

namespace {

ParseError parse_error_of(std::string_view text) {
  try {
    (void)deserialize(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError("none");
}

}  // namespace

TEST(RenderLaw, StarThree) {
  EXPECT_EQ(render_law(family_law(family::Star{3})),
            "e_1^2 = e_4\n"
            "e_2^2 = e_4\n"
            "e_3^2 = e_4\n"
            "e_4^2 = e_1 + e_2 + e_3\n");
}

TEST(RenderLaw, FriendshipCenterLineAndZeroSquare) {
  const std::string law = render_law(family_law(family::Friendship{2}));
  EXPECT_NE(law.find("e_5^2 = e_1 + e_2 + e_3 + e_4\n"), std::string::npos);
  EXPECT_EQ(render_law(EvolutionAlgebra(RationalMatrix(1))), "e_1^2 = 0\n");
}

TEST(RenderLaw, GeneralCoefficients) {
  const EvolutionAlgebra a = from_structure_matrix({{0, Rational(1, 2)}, {-1, 2}});
  EXPECT_EQ(render_law(a), "e_1^2 = -e_2\ne_2^2 = 1/2*e_1 + 2*e_2\n");
  EXPECT_EQ(render_element(AlgebraElement(std::vector<Rational>{1, 0, -3})), "e_1 - 3*e_3");
  EXPECT_EQ(render_element(AlgebraElement(2)), "0");
}

TEST(Dot, StarThreeEdgesInOrder) {
  const std::string dot = export_dot(generate_graph(family::Star{3}));
  EXPECT_EQ(dot,
            "graph {\n  e1;\n  e2;\n  e3;\n  e4;\n"
            "  e1 -- e4;\n  e2 -- e4;\n  e3 -- e4;\n}\n");
}

TEST(Dot, EdgelessAndTriangle) {
  const std::string empty = export_dot(Graph::make(2, {}));
  EXPECT_EQ(empty, "graph {\n  e1;\n  e2;\n}\n");
  const std::string c3 = export_dot(oracle::to_graph(oracle::cycle(3)));
  std::size_t lines = 0;
  for (std::size_t p = c3.find("--"); p != std::string::npos; p = c3.find("--", p + 1)) ++lines;
  EXPECT_EQ(lines, 3u);
}

TEST(Dot, ByteDeterministic) {
  for (const FamilySpec& spec : {FamilySpec{family::kNauru}, FamilySpec{family::FlowerJ5{}}}) {
    EXPECT_EQ(export_dot(generate_graph(spec)), export_dot(generate_graph(spec)));
    EXPECT_EQ(serialize({kAlgebraSchemaVersion, family_law(spec), to_string(spec)}),
              serialize({kAlgebraSchemaVersion, family_law(spec), to_string(spec)}));
  }
}

TEST(GraphJson, RoundTripsAndReportsErrors) {
  gen::for_all("graph-json", 200, [](gen::Source& s) {
    const Graph g = oracle::to_graph(s.small_graph(16));
    ASSERT_EQ(graph_from_json(graph_to_json(g)), g);
  });
  EXPECT_EQ(graph_to_json(Graph::make(3, {{2, 3}, {1, 2}})), "{\"n\":3,\"edges\":[[1,2],[2,3]]}\n");
  EXPECT_THROW((void)graph_from_json("{\"n\":3}"), ParseError);
  EXPECT_THROW((void)graph_from_json("{\"n\":3,\"edges\":[[1,4]]}"), InvalidArgument);
  try {
    (void)graph_from_json("{\"n\":3,\"edges\":[[1,2],[\"a\",3]]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "edges[1]");
  }
}

TEST(AlgebraDocument, RoundTripsRandomRationalAlgebras) {
  gen::for_all("document", 200, [](gen::Source& s) {
    const std::size_t dim = s.size(1, 7);
    RationalMatrix m(dim);
    for (std::size_t j = 1; j <= dim; ++j)
      for (std::size_t i = 1; i <= dim; ++i)
        if (s.coin(0.5)) m(j, i) = s.rational(20);
    std::optional<std::string> tag;
    if (s.coin(0.5)) tag = "star:" + std::to_string(dim);
    const AlgebraDocument doc{kAlgebraSchemaVersion, EvolutionAlgebra(std::move(m)), tag};
    const std::string bytes = serialize(doc);
    ASSERT_EQ(deserialize(bytes), doc);
    ASSERT_EQ(serialize(deserialize(bytes)), bytes);
  });
}

TEST(AlgebraDocument, NormalizesRationalStrings) {
  const AlgebraDocument doc =
      deserialize(R"({"schema_version":1,"dimension":1,"structure":["2/4"]})");
  EXPECT_EQ(doc.algebra.coefficient(1, 1), Rational(1, 2));
  EXPECT_NE(serialize(doc).find("\"1/2\""), std::string::npos);
}

TEST(AlgebraDocument, StructuredErrors) {
  EXPECT_EQ(parse_error_of(R"({"schema_version":2,"dimension":1,"structure":["0"]})").field(),
            "schema_version");
  EXPECT_EQ(parse_error_of(R"({"schema_version":1,"dimension":2,"structure":["0","1","1"]})").field(),
            "structure");
  EXPECT_EQ(parse_error_of(R"({"schema_version":1,"dimension":2,"structure":["0","1","x","0"]})").field(),
            "structure[2]");
  EXPECT_EQ(parse_error_of(R"({"schema_version":1,"dimension":1,"structure":[0]})").field(), "structure[0]");
  EXPECT_EQ(parse_error_of(R"({"dimension":1,"structure":["0"]})").field(), "schema_version");
  EXPECT_EQ(parse_error_of(R"({"schema_version":1,"dimension":0,"structure":[]})").field(), "dimension");
  const ParseError syntax = parse_error_of("{\n  \"schema_version\": 1,\n  oops\n}");
  EXPECT_EQ(syntax.line(), 3u);
  EXPECT_GT(syntax.column(), 0u);
}

TEST(Elements, ParseVectorsAndMaps) {
  const AlgebraElement x = parse_element("1,-1/2,0", 3);
  EXPECT_EQ(x[2], Rational(-1, 2));
  EXPECT_THROW((void)parse_element("1,2", 3), InvalidArgument);
  EXPECT_THROW((void)parse_element("1,,2", 3), ParseError);
  EXPECT_EQ(parse_generator_map("[3,1,2]"), GeneratorMap({3, 1, 2}));
  EXPECT_EQ(parse_generator_map(R"({"images":[2,1]})"), GeneratorMap({2, 1}));
  EXPECT_THROW((void)parse_generator_map("[1,1]"), InvalidArgument);
  EXPECT_THROW((void)parse_generator_map("[1,-2]"), ParseError);
}

TEST(Reports, ErrataAreMachineReadable) {
  const auto verify = nlohmann::json::parse(report_to_json(verify_family(family::CompleteNPartite{{2, 2, 3}})));
  ASSERT_EQ(verify["errata"].size(), 1u);
  EXPECT_EQ(verify["errata"][0]["id"], "npartite-third-block-upper-limit");
  EXPECT_EQ(verify["errata"][0]["affected_generators"], nlohmann::json({5, 6, 7}));
  EXPECT_EQ(verify["passed_all"], true);

  const auto chain = nlohmann::json::parse(chain_to_json(theorem_chain(2)));
  EXPECT_EQ(chain["errata"][0]["id"], "chain-wheel-index");
  EXPECT_EQ(chain["steps"].size(), 2u);

  const auto petersen = nlohmann::json::parse(report_to_json(verify_family(family::kPetersen)));
  EXPECT_EQ(petersen["alias"], "petersen");
  const auto cert = nlohmann::json::parse(snark_certificate_to_json(check_snark(generate_graph(family::FlowerJ5{}))));
  EXPECT_EQ(cert["verdict"], true);
  EXPECT_EQ(cert["girth"], 5);
}
