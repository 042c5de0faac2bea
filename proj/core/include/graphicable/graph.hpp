#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "graphicable/matrix.hpp"

namespace graphicable {

/// 1-based vertex index. Vertex i of a graph corresponds to generator e_i of
/// its algebra.
using Vertex = std::uint32_t;

/// Wraps an arbitrary (possibly negative or oversized) index into 1..n.
constexpr Vertex wrap_index(std::int64_t j, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<Vertex>((((j - 1) % m) + m) % m + 1);
}

/// Unordered vertex pair. Stored with u < v once it lives inside a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using AdjacencyMatrix = SquareMatrix<std::uint8_t>;

/// Finite simple undirected graph on vertices 1..vertex_count. Immutable once
/// built; edges are canonical (u < v) and sorted.
class Graph {
 public:
  /// Validates and canonicalizes. Throws InvalidArgument on a loop, an
  /// endpoint out of range, a duplicate edge, or vertex_count == 0.
  static Graph make(std::size_t vertex_count, std::span<const Edge> edges);
  static Graph make(std::size_t vertex_count, std::initializer_list<Edge> edges) {
    return make(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbors of v in ascending order. Throws InvalidArgument if v is out of range.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= vertex_count(); }

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular(std::size_t k) const;

  /// Position of {u,v} in edges(), or nullopt if not an edge.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Directed graph with loops allowed; the shape read off a general
/// graphicable algebra.
class Digraph {
 public:
  struct Arc {
    Vertex from = 0;
    Vertex to = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
  };

  /// Throws InvalidArgument on out-of-range endpoints or duplicate arcs.
  static Digraph make(std::size_t vertex_count, std::span<const Arc> arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  bool has_arc(Vertex from, Vertex to) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

/// Injective assignment of a target vertex to each source vertex 1..size().
class GeneratorMap {
 public:
  /// images[k] is the image of source vertex k+1. Throws InvalidArgument if
  /// the images are not pairwise distinct or any image is 0.
  explicit GeneratorMap(std::vector<Vertex> images);

  static GeneratorMap identity(std::size_t n);

  std::size_t source_size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_.at(v - 1); }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  /// (this ∘ first): apply `first`, then this map.
  GeneratorMap after(const GeneratorMap& first) const;
  /// Inverse of a bijection on 1..n. Throws InvalidArgument otherwise.
  GeneratorMap inverse() const;

  friend bool operator==(const GeneratorMap&, const GeneratorMap&) = default;

 private:
  std::vector<Vertex> images_;
};

AdjacencyMatrix adjacency_matrix(const Graph& g);

/// True iff `map` is injective into sup's vertex range and every edge of
/// `sub` lands on an edge of `sup`. Throws InvalidArgument if map does not
/// cover exactly sub's vertices.
bool is_subgraph_embedding(const Graph& sub, const Graph& sup, const GeneratorMap& map);

/// Adjacency-preserving map, not necessarily injective. Throws
/// InvalidArgument on size mismatch or an image outside g2.
bool is_graph_morphism(const Graph& g1, const Graph& g2, std::span<const Vertex> images);

/// Relabels g: vertex v becomes map(v). `map` must be a bijection on 1..n.
Graph relabel(const Graph& g, const GeneratorMap& map);

inline constexpr std::size_t kMaxIsomorphismVertices = 32;

/// Witness bijection g1 -> g2 preserving adjacency in both directions, or
/// nullopt. Colour refinement on degrees, then deterministic backtracking.
/// Throws ResourceLimitExceeded above kMaxIsomorphismVertices.
std::optional<GeneratorMap> is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace graphicable
