#include "graphicable/embeddings.hpp"

#include <algorithm>
#include <iterator>

namespace graphicable {

namespace {

void require_graphicable(const EvolutionAlgebra& a, const char* role) {
  if (!a.is_graphicable()) {
    throw InvalidArgument(std::string(role) + " algebra is not graphicable");
  }
}

void require_map_fits(const EvolutionAlgebra& sub, const EvolutionAlgebra& sup,
                      const GeneratorMap& map) {
  if (map.source_size() != sub.dimension()) {
    throw InvalidArgument("generator map has " + std::to_string(map.source_size()) +
                          " entries for an algebra of dimension " + std::to_string(sub.dimension()));
  }
  for (Vertex image : map.images()) {
    if (image > sup.dimension()) {
      throw InvalidArgument("generator map image e_" + std::to_string(image) +
                            " outside the target algebra (dimension " +
                            std::to_string(sup.dimension()) + ")");
    }
  }
}

std::vector<std::size_t> terms(const EvolutionAlgebra& a, std::size_t i) {
  std::vector<std::size_t> out;
  for (const auto& [j, value] : a.square_terms(i)) out.push_back(j);
  return out;
}

ChainStep run_step(const FamilySpec& from, const FamilySpec& to, std::size_t rim,
                   const std::vector<std::size_t>& expected_extra) {
  const EvolutionAlgebra sub = family_law(from);
  const EvolutionAlgebra sup = family_law(to);
  const GeneratorMap identity = GeneratorMap::identity(sub.dimension());

  ChainStep step;
  step.from = to_string(from);
  step.to = to_string(to);
  step.law_embedding = law_embedding(sub, sup, identity);
  step.subgraph_oracle = is_subgraph_embedding(generate_graph(from), generate_graph(to), identity);
  step.diffs = law_term_diff(sub, sup, identity);

  step.rim_diffs_single = true;
  step.partner_identity = true;
  for (std::size_t i = 1; i <= rim; ++i) {
    const LawDiff& d = step.diffs[i - 1];
    if (d.only_in_super.size() != 1 || !d.only_in_sub.empty()) {
      step.rim_diffs_single = false;
      step.partner_identity = false;
      continue;
    }
    if (d.only_in_super.front() != expected_extra[i - 1]) step.partner_identity = false;
  }
  step.center_diff_empty = step.diffs[rim].empty();
  return step;
}

}  // namespace

bool law_embedding(const EvolutionAlgebra& sub, const EvolutionAlgebra& sup,
                   const GeneratorMap& map) {
  require_graphicable(sub, "source");
  require_graphicable(sup, "target");
  require_map_fits(sub, sup, map);
  for (std::size_t i = 1; i <= sub.dimension(); ++i) {
    const std::size_t image = map(static_cast<Vertex>(i));
    for (const auto& [j, value] : sub.square_terms(i)) {
      if (sup.coefficient(map(static_cast<Vertex>(j)), image) != 1) return false;
    }
  }
  return true;
}

std::vector<LawDiff> law_term_diff(const EvolutionAlgebra& sub, const EvolutionAlgebra& sup,
                                   const GeneratorMap& map) {
  require_graphicable(sub, "source");
  require_graphicable(sup, "target");
  require_map_fits(sub, sup, map);
  std::vector<LawDiff> diffs;
  diffs.reserve(sub.dimension());
  for (std::size_t i = 1; i <= sub.dimension(); ++i) {
    std::vector<std::size_t> mapped;
    for (std::size_t j : terms(sub, i)) mapped.push_back(map(static_cast<Vertex>(j)));
    std::sort(mapped.begin(), mapped.end());
    const std::vector<std::size_t> super_terms = terms(sup, map(static_cast<Vertex>(i)));

    LawDiff d;
    d.generator = i;
    std::set_difference(super_terms.begin(), super_terms.end(), mapped.begin(), mapped.end(),
                        std::back_inserter(d.only_in_super));
    std::set_difference(mapped.begin(), mapped.end(), super_terms.begin(), super_terms.end(),
                        std::back_inserter(d.only_in_sub));
    diffs.push_back(std::move(d));
  }
  return diffs;
}

Errata chain_wheel_index_errata(std::size_t n) {
  Errata e;
  e.id = "chain-wheel-index";
  e.printed = "A(S_{2n}) < A(F_n) < A(W_{2n}), n <= 2";
  e.corrected = "A(S_{2n}) < A(F_n) < A(W_{2n+1}), n >= 2";
  e.applied = true;
  e.affects_instance = true;
  e.affected_generators = {2 * n + 1};
  e.note = "W_{2n+1} is the wheel whose 2n+1 generators match A(F_n); W_" +
           std::to_string(2 * n) + " has one generator too few";
  return e;
}

ChainReport theorem_chain(std::size_t n) {
  if (n < 2) throw InvalidArgument("chain needs n >= 2, got " + std::to_string(n));
  const std::size_t rim = 2 * n;
  const FamilySpec star = family::Star{rim};
  const FamilySpec friendship = family::Friendship{n};
  const FamilySpec wheel = family::Wheel{rim + 1};

  // Expected extra terms are read from the graphs, not from the laws.
  const Graph f = generate_graph(friendship);
  const Graph w = generate_graph(wheel);
  const auto center = static_cast<Vertex>(rim + 1);
  std::vector<std::size_t> partner(rim), other_rim_neighbour(rim);
  for (Vertex i = 1; i <= rim; ++i) {
    for (Vertex x : f.neighbors(i)) {
      if (x != center) partner[i - 1] = x;
    }
    for (Vertex x : w.neighbors(i)) {
      if (x != center && !f.adjacent(i, x)) other_rim_neighbour[i - 1] = x;
    }
  }

  ChainReport report;
  report.n = n;
  report.star_to_friendship = run_step(star, friendship, rim, partner);
  report.friendship_to_wheel = run_step(friendship, wheel, rim, other_rim_neighbour);
  report.errata.push_back(chain_wheel_index_errata(n));
  return report;
}

}  // namespace graphicable
