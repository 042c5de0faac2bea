#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphicable/graph.hpp"

namespace graphicable {

inline constexpr std::size_t kMaxSearchVertices = 32;
inline constexpr std::size_t kMaxColoringEdges = 128;

/// Shortest cycle length; nullopt means infinite (the graph is a forest).
std::optional<std::size_t> girth(const Graph& g);

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// BFS 2-colouring of every component, or nullopt if an odd cycle exists.
/// Vertex 1 (and the lowest vertex of each further component) goes left.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

/// Connected and without a cut edge.
bool is_bridgeless(const Graph& g);

/// colours[k] in {1,2,3} is the colour of g.edges()[k].
using EdgeColoring = std::vector<std::uint8_t>;

/// Proper 3-edge-colouring or nullopt once the search space is exhausted.
/// Throws ResourceLimitExceeded when |E| > kMaxColoringEdges.
std::optional<EdgeColoring> is_three_edge_colorable(const Graph& g);

/// True iff no two edges sharing an endpoint carry the same colour and all
/// colours lie in 1..colours.
bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& coloring, int colours = 3);

struct SnarkCertificate {
  bool is_cubic = false;
  bool is_connected = false;
  bool is_bridgeless = false;
  std::optional<std::size_t> girth;  // nullopt = infinite
  bool three_edge_colorable = false;
  std::optional<EdgeColoring> coloring_witness;
  std::size_t girth_threshold_used = 5;

  bool girth_ok() const { return !girth || *girth >= girth_threshold_used; }
  bool verdict() const {
    return is_cubic && is_bridgeless && !three_edge_colorable && girth_ok();
  }
};

SnarkCertificate check_snark(const Graph& g, std::size_t girth_threshold = 5);

/// A Hamiltonian cycle as a vertex sequence starting at vertex 1; the
/// closing edge back to the first vertex is implied.
using VertexSequence = std::vector<Vertex>;

/// Throws ResourceLimitExceeded when |V| > kMaxSearchVertices.
std::optional<VertexSequence> find_hamiltonian_cycle(const Graph& g);

/// Spanning path from u to v. Throws InvalidArgument if u == v or either is
/// out of range; ResourceLimitExceeded above kMaxSearchVertices.
std::optional<VertexSequence> find_hamiltonian_path(const Graph& g, Vertex u, Vertex v);

/// No Hamiltonian cycle, and a Hamiltonian path between every non-adjacent pair.
bool is_maximally_nonhamiltonian(const Graph& g);

bool is_hamiltonian_cycle(const Graph& g, const VertexSequence& cycle);
bool is_hamiltonian_path(const Graph& g, const VertexSequence& path, Vertex u, Vertex v);

struct Connectivity {
  std::size_t vertex_connectivity = 0;
  std::size_t edge_connectivity = 0;

  friend bool operator==(const Connectivity&, const Connectivity&) = default;
};

/// Exact vertex and edge connectivity from unit-capacity max flows.
/// Disconnected graphs and K_1 report (0,0); K_n reports (n-1, n-1).
/// Throws ResourceLimitExceeded above kMaxSearchVertices.
Connectivity connectivity(const Graph& g);

struct FriendshipCheck {
  bool holds = true;
  /// First pair (ascending) whose common-neighbour count is not 1.
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::size_t witness_common_neighbors = 0;
};

/// Every unordered pair of distinct vertices has exactly one common neighbour.
FriendshipCheck has_friendship_property(const Graph& g);

}  // namespace graphicable
