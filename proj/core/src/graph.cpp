#include "graphicable/graph.hpp"

#include <algorithm>
#include <string>

#include "graphicable/errors.hpp"

namespace graphicable {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph Graph::make(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0) throw InvalidArgument("graph must have at least one vertex");

  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count) {
      throw InvalidArgument("edge " + edge_text(e.u, e.v) + " has an endpoint outside 1.." +
                            std::to_string(vertex_count));
    }
    if (e.u == e.v) throw InvalidArgument("loop edge " + edge_text(e.u, e.v));
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw InvalidArgument("duplicate edge " + edge_text(dup->u, dup->v));
  }

  g.adjacency_.assign(vertex_count, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u - 1].push_back(e.v);
    g.adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains(v)) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(vertex_count()));
  }
  return adjacency_[v - 1];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& row = adjacency_[u - 1];
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = adjacency_.front().size();
  for (const auto& row : adjacency_) best = std::min(best, row.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool Graph::is_regular(std::size_t k) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [k](const auto& row) { return row.size() == k; });
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Digraph Digraph::make(std::size_t vertex_count, std::span<const Arc> arcs) {
  Digraph d;
  d.n_ = vertex_count;
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : d.arcs_) {
    if (a.from < 1 || a.from > vertex_count || a.to < 1 || a.to > vertex_count) {
      throw InvalidArgument("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                            ") has an endpoint out of range");
    }
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  if (std::adjacent_find(d.arcs_.begin(), d.arcs_.end()) != d.arcs_.end()) {
    throw InvalidArgument("duplicate arc");
  }
  return d;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to});
}

GeneratorMap::GeneratorMap(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<Vertex> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() == 0) {
    throw InvalidArgument("generator map images are 1-based; found 0");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("generator map is not injective");
  }
}

GeneratorMap GeneratorMap::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Vertex>(i + 1);
  return GeneratorMap(std::move(images));
}

GeneratorMap GeneratorMap::after(const GeneratorMap& first) const {
  std::vector<Vertex> images;
  images.reserve(first.source_size());
  for (Vertex v : first.images()) {
    if (v > source_size()) throw InvalidArgument("composition: image outside the second map's domain");
    images.push_back((*this)(v));
  }
  return GeneratorMap(std::move(images));
}

GeneratorMap GeneratorMap::inverse() const {
  std::vector<Vertex> inv(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] > images_.size()) throw InvalidArgument("map is not a permutation");
    inv[images_[i] - 1] = static_cast<Vertex>(i + 1);
  }
  return GeneratorMap(std::move(inv));
}

AdjacencyMatrix adjacency_matrix(const Graph& g) {
  AdjacencyMatrix m(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = 1;
    m(e.v, e.u) = 1;
  }
  return m;
}

bool is_subgraph_embedding(const Graph& sub, const Graph& sup, const GeneratorMap& map) {
  if (map.source_size() != sub.vertex_count()) {
    throw InvalidArgument("map covers " + std::to_string(map.source_size()) +
                          " vertices but the subgraph has " + std::to_string(sub.vertex_count()));
  }
  for (Vertex image : map.images()) {
    if (!sup.contains(image)) return false;
  }
  return std::all_of(sub.edges().begin(), sub.edges().end(),
                     [&](const Edge& e) { return sup.adjacent(map(e.u), map(e.v)); });
}

bool is_graph_morphism(const Graph& g1, const Graph& g2, std::span<const Vertex> images) {
  if (images.size() != g1.vertex_count()) {
    throw InvalidArgument("morphism must assign an image to each of the " +
                          std::to_string(g1.vertex_count()) + " vertices");
  }
  for (Vertex image : images) {
    if (!g2.contains(image)) {
      throw InvalidArgument("morphism image " + std::to_string(image) + " outside 1.." +
                            std::to_string(g2.vertex_count()));
    }
  }
  return std::all_of(g1.edges().begin(), g1.edges().end(), [&](const Edge& e) {
    return g2.adjacent(images[e.u - 1], images[e.v - 1]);
  });
}

Graph relabel(const Graph& g, const GeneratorMap& map) {
  if (map.source_size() != g.vertex_count()) throw InvalidArgument("relabel: map size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(Edge{map(e.u), map(e.v)});
  return Graph::make(g.vertex_count(), edges);
}

}  // namespace graphicable
