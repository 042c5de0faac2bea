#include "graphicable/analysis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "graphicable/errors.hpp"

namespace graphicable {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << (v - 1); }

void require_search_bound(const Graph& g, const char* what) {
  if (g.vertex_count() > kMaxSearchVertices) {
    throw ResourceLimitExceeded(std::string(what) + " vertex bound", kMaxSearchVertices,
                                g.vertex_count());
  }
}

std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> masks(g.vertex_count() + 1, 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= bit(e.v);
    masks[e.v] |= bit(e.u);
  }
  return masks;
}

// Every vertex of `targets` is reachable from `from` moving only through
// vertices of `targets`.
bool reaches_all(const std::vector<Mask>& adj, Vertex from, Mask targets) {
  Mask seen = 0;
  Mask frontier = adj[from] & targets;
  while (frontier != 0) {
    seen |= frontier;
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(f) + 1);
      next |= adj[v];
    }
    frontier = next & targets & ~seen;
  }
  return seen == targets;
}

// Depth-first Hamiltonian search from `start`. Without a goal the path must
// finish adjacent to its start (cycle); otherwise it must finish at `goal`.
class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, Vertex start, std::optional<Vertex> goal)
      : n_(g.vertex_count()), adj_(neighbour_masks(g)), g_(g), start_(start), goal_(goal) {
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  std::optional<VertexSequence> run() {
    path_.assign(1, start_);
    if (extend(bit(start_))) return path_;
    return std::nullopt;
  }

 private:
  bool feasible(Mask visited, Vertex end) const {
    const Mask unvisited = all_ & ~visited;
    if (unvisited == 0) return true;
    // Degree pruning: interior vertices still need two usable edges.
    const Mask exits = unvisited | bit(end) | (goal_ ? Mask{0} : bit(start_));
    for (Mask f = unvisited; f != 0; f &= f - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(f) + 1);
      const int need = (goal_ && w == *goal_) ? 1 : 2;
      if (std::popcount(adj_[w] & exits) < need) return false;
    }
    return reaches_all(adj_, end, unvisited);
  }

  bool extend(Mask visited) {
    const Vertex end = path_.back();
    if (path_.size() == n_) {
      if (goal_) return end == *goal_;
      return (adj_[end] & bit(start_)) != 0;
    }
    for (Vertex w : g_.neighbors(end)) {
      if (visited & bit(w)) continue;
      if (goal_ && w == *goal_ && path_.size() + 1 != n_) continue;
      const Mask next = visited | bit(w);
      path_.push_back(w);
      if (feasible(next, w) && extend(next)) return true;
      path_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  const Graph& g_;
  Vertex start_;
  std::optional<Vertex> goal_;
  Mask all_ = 0;
  VertexSequence path_;
};

// Dense Edmonds-Karp; graphs here have at most 2 * kMaxSearchVertices nodes.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : n_(nodes), cap_(nodes * nodes, 0) {}

  void add(std::size_t from, std::size_t to, int capacity) { cap_[from * n_ + to] += capacity; }

  int max_flow(std::size_t source, std::size_t sink) {
    int flow = 0;
    std::vector<std::size_t> parent(n_);
    for (;;) {
      std::fill(parent.begin(), parent.end(), n_);
      parent[source] = source;
      std::deque<std::size_t> queue{source};
      while (!queue.empty() && parent[sink] == n_) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y = 0; y < n_; ++y) {
          if (parent[y] == n_ && cap_[x * n_ + y] > 0) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (parent[sink] == n_) return flow;
      int push = std::numeric_limits<int>::max();
      for (std::size_t y = sink; y != source; y = parent[y]) {
        push = std::min(push, cap_[parent[y] * n_ + y]);
      }
      for (std::size_t y = sink; y != source; y = parent[y]) {
        cap_[parent[y] * n_ + y] -= push;
        cap_[y * n_ + parent[y]] += push;
      }
      flow += push;
    }
  }

 private:
  std::size_t n_;
  std::vector<int> cap_;
};

int edge_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) {
    net.add(e.u - 1, e.v - 1, 1);
    net.add(e.v - 1, e.u - 1, 1);
  }
  return net.max_flow(s - 1, t - 1);
}

// Vertex v splits into in-node 2(v-1) and out-node 2(v-1)+1.
int vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  const int big = static_cast<int>(g.vertex_count());
  FlowNetwork net(2 * g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    net.add(2 * (v - 1), 2 * (v - 1) + 1, (v == s || v == t) ? big : 1);
  }
  for (const Edge& e : g.edges()) {
    net.add(2 * (e.u - 1) + 1, 2 * (e.v - 1), big);
    net.add(2 * (e.v - 1) + 1, 2 * (e.u - 1), big);
  }
  return net.max_flow(2 * (s - 1) + 1, 2 * (t - 1));
}

}  // namespace

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n + 1);
  std::vector<Vertex> parent(n + 1);
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  for (Vertex root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (best && 2 * dist[x] >= *best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == unseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          const std::size_t cycle = dist[x] + dist[y] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n + 1, -1);
  for (Vertex root = 1; root <= n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 1; v <= n; ++v) (side[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.vertex_count() + 1, false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.vertex_count();
}

bool is_bridgeless(const Graph& g) {
  if (!is_connected(g)) return false;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order(n + 1, 0), low(n + 1, 0);
  std::size_t counter = 0;

  // Iterative DFS low-link; frames hold (vertex, parent, next neighbour slot).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{1, 0, 0}};
  order[1] = low[1] = ++counter;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nbrs = g.neighbors(top.v);
    if (top.next < nbrs.size()) {
      const Vertex w = nbrs[top.next++];
      if (w == top.parent) continue;
      if (order[w] == 0) {
        order[w] = low[w] = ++counter;
        stack.push_back({w, top.v, 0});
      } else {
        low[top.v] = std::min(low[top.v], order[w]);
      }
      continue;
    }
    const Frame done = top;
    stack.pop_back();
    if (!stack.empty()) {
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] > order[up.v]) return false;
    }
  }
  return true;
}

std::optional<EdgeColoring> is_three_edge_colorable(const Graph& g) {
  if (g.edge_count() > kMaxColoringEdges) {
    throw ResourceLimitExceeded("3-edge-colouring edge bound", kMaxColoringEdges, g.edge_count());
  }
  if (g.max_degree() > 3) return std::nullopt;

  // Edge order: DFS over vertices, emitting each edge when first touched, so
  // consecutive edges share endpoints and conflicts surface early.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order;
  std::vector<bool> edge_seen(g.edge_count(), false), vertex_seen(n + 1, false);
  for (Vertex root = 1; root <= n; ++root) {
    if (vertex_seen[root]) continue;
    std::vector<Vertex> stack{root};
    vertex_seen[root] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        const std::size_t k = *g.edge_index(x, y);
        if (!edge_seen[k]) {
          edge_seen[k] = true;
          order.push_back(k);
        }
        if (!vertex_seen[y]) {
          vertex_seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }

  EdgeColoring colour(g.edge_count(), 0);
  std::vector<std::uint8_t> used(n + 1, 0);  // bitmask of colours at each vertex

  // Colours are interchangeable, so the search never opens colour c+1 before
  // colour c has been used.
  auto search = [&](auto&& self, std::size_t depth, int highest) -> bool {
    if (depth == order.size()) return true;
    const Edge e = g.edges()[order[depth]];
    const int limit = std::min(3, highest + 1);
    for (int c = 1; c <= limit; ++c) {
      const auto b = static_cast<std::uint8_t>(1u << c);
      if ((used[e.u] & b) || (used[e.v] & b)) continue;
      used[e.u] |= b;
      used[e.v] |= b;
      colour[order[depth]] = static_cast<std::uint8_t>(c);
      if (self(self, depth + 1, std::max(highest, c))) return true;
      used[e.u] &= static_cast<std::uint8_t>(~b);
      used[e.v] &= static_cast<std::uint8_t>(~b);
    }
    colour[order[depth]] = 0;
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  return colour;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& coloring, int colours) {
  if (coloring.size() != g.edge_count()) return false;
  std::vector<std::uint32_t> used(g.vertex_count() + 1, 0);
  for (std::size_t k = 0; k < coloring.size(); ++k) {
    const int c = coloring[k];
    if (c < 1 || c > colours) return false;
    const Edge e = g.edges()[k];
    const std::uint32_t b = 1u << c;
    if ((used[e.u] & b) || (used[e.v] & b)) return false;
    used[e.u] |= b;
    used[e.v] |= b;
  }
  return true;
}

SnarkCertificate check_snark(const Graph& g, std::size_t girth_threshold) {
  SnarkCertificate cert;
  cert.girth_threshold_used = girth_threshold;
  cert.is_cubic = g.is_regular(3);
  cert.is_connected = is_connected(g);
  cert.is_bridgeless = is_bridgeless(g);
  cert.girth = girth(g);
  cert.coloring_witness = is_three_edge_colorable(g);
  cert.three_edge_colorable = cert.coloring_witness.has_value();
  return cert;
}

std::optional<VertexSequence> find_hamiltonian_cycle(const Graph& g) {
  require_search_bound(g, "Hamiltonian cycle search");
  if (g.vertex_count() < 3 || g.min_degree() < 2) return std::nullopt;
  return HamiltonSearch(g, 1, std::nullopt).run();
}

std::optional<VertexSequence> find_hamiltonian_path(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw InvalidArgument("path endpoint out of range");
  if (u == v) throw InvalidArgument("Hamiltonian path endpoints must differ");
  require_search_bound(g, "Hamiltonian path search");
  return HamiltonSearch(g, u, v).run();
}

bool is_maximally_nonhamiltonian(const Graph& g) {
  if (find_hamiltonian_cycle(g)) return false;
  for (Vertex u = 1; u <= g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v <= g.vertex_count(); ++v) {
      if (!g.adjacent(u, v) && !find_hamiltonian_path(g, u, v)) return false;
    }
  }
  return true;
}

bool is_hamiltonian_cycle(const Graph& g, const VertexSequence& cycle) {
  if (cycle.size() != g.vertex_count() || cycle.size() < 3) return false;
  std::vector<bool> seen(g.vertex_count() + 1, false);
  for (Vertex v : cycle) {
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

bool is_hamiltonian_path(const Graph& g, const VertexSequence& path, Vertex u, Vertex v) {
  if (path.size() != g.vertex_count() || path.front() != u || path.back() != v) return false;
  std::vector<bool> seen(g.vertex_count() + 1, false);
  for (Vertex x : path) {
    if (!g.contains(x) || seen[x]) return false;
    seen[x] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1])) return false;
  }
  return true;
}

Connectivity connectivity(const Graph& g) {
  require_search_bound(g, "connectivity");
  const std::size_t n = g.vertex_count();
  if (n == 1 || !is_connected(g)) return {};

  Connectivity result;
  result.edge_connectivity = std::numeric_limits<std::size_t>::max();
  for (Vertex t = 2; t <= n; ++t) {
    result.edge_connectivity =
        std::min(result.edge_connectivity, static_cast<std::size_t>(edge_disjoint_paths(g, 1, t)));
  }

  result.vertex_connectivity = n - 1;  // complete graph unless a non-adjacent pair says otherwise
  for (Vertex s = 1; s <= n; ++s) {
    for (Vertex t = s + 1; t <= n; ++t) {
      if (g.adjacent(s, t)) continue;
      result.vertex_connectivity = std::min(
          result.vertex_connectivity, static_cast<std::size_t>(vertex_disjoint_paths(g, s, t)));
    }
  }
  return result;
}

FriendshipCheck has_friendship_property(const Graph& g) {
  FriendshipCheck check;
  const std::size_t n = g.vertex_count();
  for (Vertex u = 1; u <= n; ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v = u + 1; v <= n; ++v) {
      const auto nv = g.neighbors(v);
      std::size_t common = 0;
      auto i = nu.begin();
      auto j = nv.begin();
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++common;
          ++i;
          ++j;
        }
      }
      if (common != 1) {
        check.holds = false;
        check.witness = std::make_pair(u, v);
        check.witness_common_neighbors = common;
        return check;
      }
    }
  }
  return check;
}

}  // namespace graphicable
