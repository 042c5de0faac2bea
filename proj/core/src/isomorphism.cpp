#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "graphicable/errors.hpp"
#include "graphicable/graph.hpp"

namespace graphicable {

namespace {

// Colour refinement run on the disjoint union of both graphs so that colour
// ids are comparable across them. Returns colours for g1 then g2.
std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.vertex_count();
  std::vector<int> c1(n), c2(n);
  for (Vertex v = 1; v <= n; ++v) {
    c1[v - 1] = static_cast<int>(g1.degree(v));
    c2[v - 1] = static_cast<int>(g2.degree(v));
  }

  auto class_count = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };

  std::size_t classes = class_count(c1, c2);
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& g, const std::vector<int>& colour, Vertex v) {
      Signature s{colour[v - 1], {}};
      for (Vertex w : g.neighbors(v)) s.second.push_back(colour[w - 1]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, int> ids;
    std::vector<Signature> s1(n), s2(n);
    for (Vertex v = 1; v <= n; ++v) {
      s1[v - 1] = signature(g1, c1, v);
      s2[v - 1] = signature(g2, c2, v);
      ids.emplace(s1[v - 1], 0);
      ids.emplace(s2[v - 1], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t i = 0; i < n; ++i) {
      c1[i] = ids[s1[i]];
      c2[i] = ids[s2[i]];
    }
    const std::size_t refined = ids.size();
    if (refined == classes) break;
    classes = refined;
  }
  return {std::move(c1), std::move(c2)};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g1, const Graph& g2, std::vector<int> colour1,
                    std::vector<int> colour2)
      : g1_(g1), g2_(g2), colour1_(std::move(colour1)), colour2_(std::move(colour2)) {
    const std::size_t n = g1.vertex_count();
    std::map<int, std::size_t> class_size;
    for (int c : colour1_) ++class_size[c];

    // Candidate lists: same refined class, ascending index.
    for (Vertex v = 1; v <= n; ++v) {
      auto& list = candidates_[colour1_[v - 1]];
      if (!list.empty()) continue;
      for (Vertex w = 1; w <= n; ++w) {
        if (colour2_[w - 1] == colour1_[v - 1]) list.push_back(w);
      }
    }

    // Visit order: most already-ordered neighbours, then smallest class, then index.
    std::vector<bool> placed(n + 1, false);
    std::vector<std::size_t> ordered_neighbours(n + 1, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = 0;
      for (Vertex v = 1; v <= n; ++v) {
        if (placed[v]) continue;
        if (best == 0) {
          best = v;
          continue;
        }
        const auto key = [&](Vertex x) {
          return std::make_tuple(-static_cast<long>(ordered_neighbours[x]),
                                 class_size[colour1_[x - 1]], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : g1.neighbors(best)) ++ordered_neighbours[w];
    }
    image_.assign(n + 1, 0);
    used_.assign(n + 1, false);
  }

  std::optional<GeneratorMap> run() {
    if (!extend(0)) return std::nullopt;
    return GeneratorMap(std::vector<Vertex>(image_.begin() + 1, image_.end()));
  }

 private:
  bool consistent(std::size_t depth, Vertex v, Vertex w) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex u = order_[k];
      if (g1_.adjacent(v, u) != g2_.adjacent(w, image_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w : candidates_.at(colour1_[v - 1])) {
      if (used_[w] || !consistent(depth, v, w)) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      image_[v] = 0;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<int> colour1_;
  std::vector<int> colour2_;
  std::map<int, std::vector<Vertex>> candidates_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<GeneratorMap> is_isomorphic(const Graph& g1, const Graph& g2) {
  const std::size_t largest = std::max(g1.vertex_count(), g2.vertex_count());
  if (largest > kMaxIsomorphismVertices) {
    throw ResourceLimitExceeded("isomorphism search vertex bound", kMaxIsomorphismVertices,
                                largest);
  }
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }

  auto [c1, c2] = refine_jointly(g1, g2);
  std::vector<int> h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return std::nullopt;

  return IsomorphismSearch(g1, g2, std::move(c1), std::move(c2)).run();
}

}  // namespace graphicable
