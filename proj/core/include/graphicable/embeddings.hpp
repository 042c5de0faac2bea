#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphicable/algebra.hpp"
#include "graphicable/families.hpp"
#include "graphicable/graph.hpp"

namespace graphicable {

/// "Subalgebra" here means generator-law embedding: every term e_j of e_i^2
/// in the smaller algebra reappears as e_{map(j)} in e_{map(i)}^2 of the
/// larger one. This is the subgraph relation read on laws. It is weaker than
/// a subspace closed under the ambient product, which the star law does not
/// satisfy inside the friendship algebra.
///
/// Throws InvalidArgument when either algebra is not graphicable, the map
/// does not cover sub's generators, or an image lies outside sup.
bool law_embedding(const EvolutionAlgebra& sub, const EvolutionAlgebra& sup,
                   const GeneratorMap& map);

/// Term delta for one generator of the smaller algebra. Both sets are in the
/// larger algebra's indices (sub terms are pushed through the map).
struct LawDiff {
  std::size_t generator = 0;  // index i in the smaller algebra
  std::vector<std::size_t> only_in_super;
  std::vector<std::size_t> only_in_sub;

  bool empty() const { return only_in_super.empty() && only_in_sub.empty(); }
  friend bool operator==(const LawDiff&, const LawDiff&) = default;
};

std::vector<LawDiff> law_term_diff(const EvolutionAlgebra& sub, const EvolutionAlgebra& sup,
                                   const GeneratorMap& map);

struct ChainStep {
  std::string from;  // family spec strings
  std::string to;
  bool law_embedding = false;
  bool subgraph_oracle = false;
  std::vector<LawDiff> diffs;
  /// Every rim generator 1..2n differs by exactly one term, which lies only
  /// in the larger law.
  bool rim_diffs_single = false;
  /// The extra term equals the one computed from the graphs: the triangle
  /// partner in F_n (star -> friendship) or the other rim neighbour in
  /// W_{2n+1} (friendship -> wheel).
  bool partner_identity = false;
  bool center_diff_empty = false;

  bool passed() const {
    return law_embedding && subgraph_oracle && rim_diffs_single && partner_identity &&
           center_diff_empty;
  }
};

struct ChainReport {
  std::size_t n = 0;
  ChainStep star_to_friendship;
  ChainStep friendship_to_wheel;
  std::vector<Errata> errata;

  bool passed() const { return star_to_friendship.passed() && friendship_to_wheel.passed(); }
};

Errata chain_wheel_index_errata(std::size_t n);

/// A(S_{2n}) -> A(F_n) -> A(W_{2n+1}) under identity maps, each step
/// cross-checked against is_subgraph_embedding. Throws InvalidArgument for n < 2.
ChainReport theorem_chain(std::size_t n);

}  // namespace graphicable
