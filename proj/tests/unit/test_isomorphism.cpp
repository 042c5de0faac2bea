#include <gtest/gtest.h>

#include <numeric>

#include "graphicable/errors.hpp"
#include "graphicable/families.hpp"
#include "graphicable/graph.hpp"
#include "oracles/oracles.hpp"
#include "support/generators.hpp"

using namespace graphicable;

namespace {

std::vector<std::size_t> zero_based(const GeneratorMap& m) {
  std::vector<std::size_t> out;
  for (Vertex v : m.images()) out.push_back(v - 1);
  return out;
}

// Certificate returned by the library, checked edge by edge.
void expect_isomorphic(const oracle::Adj& a, const oracle::Adj& b) {
  const auto map = is_isomorphic(oracle::to_graph(a), oracle::to_graph(b));
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(oracle::is_isomorphism(a, b, zero_based(*map)));
}

}  // namespace

TEST(Isomorphism, AgreesWithPermutationOracleOnSmallGraphs) {
  gen::for_all("iso-small", 300, [](gen::Source& s) {
    const std::size_t n = s.size(1, 7);
    const double p = s.size(2, 8) / 10.0;
    const oracle::Adj a = s.gnp(n, p);
    // Half the cases compare against a shuffled copy, half against a fresh graph.
    oracle::Adj b;
    if (s.coin(0.5)) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), s.engine());
      b = oracle::empty(n);
      for (auto [u, v] : oracle::edge_list(a)) oracle::add_edge(b, perm[u] + 1, perm[v] + 1);
    } else {
      b = s.gnp(n, p);
    }
    const auto expected = oracle::isomorphism_exhaustive(a, b);
    const auto got = is_isomorphic(oracle::to_graph(a), oracle::to_graph(b));
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (got) ASSERT_TRUE(oracle::is_isomorphism(a, b, zero_based(*got)));
  });
}

TEST(Isomorphism, FindsShuffledCubicCopies) {
  gen::for_all("iso-cubic", 40, [](gen::Source& s) {
    const std::size_t n = 2 * s.size(3, 12);
    const oracle::Adj a = s.cubic(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), s.engine());
    oracle::Adj b = oracle::empty(n);
    for (auto [u, v] : oracle::edge_list(a)) oracle::add_edge(b, perm[u] + 1, perm[v] + 1);
    expect_isomorphic(a, b);
  });
}

TEST(Isomorphism, NamedGraphsMatchIndependentConstructions) {
  expect_isomorphic(oracle::from_graph(generate_graph(family::kPetersen)), oracle::petersen_kneser());
  expect_isomorphic(oracle::from_graph(generate_graph(family::FlowerJ5{})), oracle::flower_snark(5));
  expect_isomorphic(oracle::from_graph(generate_graph(family::Tietze{})), oracle::tietze_from_kneser());
}

TEST(Isomorphism, SeparatesCubicGraphsWithEqualDegreeSequences) {
  // Same order and degree sequence, different girth.
  const Graph mk = generate_graph(family::kMobiusKantor);
  const Graph prism = generate_graph(family::GeneralizedPetersen{8, 1});
  EXPECT_FALSE(is_isomorphic(mk, prism).has_value());
  EXPECT_FALSE(is_isomorphic(generate_graph(family::FlowerJ5{}), generate_graph(family::kDesargues)).has_value());
  EXPECT_FALSE(is_isomorphic(Graph::make(3, {}), Graph::make(4, {})).has_value());
}

TEST(Isomorphism, RefusesGraphsAboveTheBound) {
  const Graph big = oracle::to_graph(oracle::cycle(kMaxIsomorphismVertices + 1));
  EXPECT_THROW((void)is_isomorphic(big, big), ResourceLimitExceeded);
  EXPECT_NO_THROW((void)is_isomorphic(oracle::to_graph(oracle::cycle(kMaxIsomorphismVertices)),
                                      oracle::to_graph(oracle::cycle(kMaxIsomorphismVertices))));
}
