#include "graphicable/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "graphicable/analysis.hpp"

namespace graphicable {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Accumulates terms e_j into e_i^2. Repeated terms add up, so a
// transcription slip shows up as a coefficient 2 rather than vanishing.
class LawBuilder {
 public:
  explicit LawBuilder(std::size_t dimension) : m_(dimension) {}
  void add(std::size_t i, std::size_t j) { m_(j, i) += 1; }
  EvolutionAlgebra build() && { return EvolutionAlgebra(std::move(m_)); }

 private:
  RationalMatrix m_;
};

// One residue class of a periodic law: for i = residue (mod period),
// e_i^2 = sum over offsets of e_{i+offset} (mod dimension).
struct ResidueRow {
  std::size_t residue;
  std::array<int, 3> offsets;
};

EvolutionAlgebra periodic_law(std::size_t dimension, std::size_t period,
                              const std::vector<ResidueRow>& rows) {
  LawBuilder law(dimension);
  for (std::size_t i = 1; i <= dimension; ++i) {
    for (const ResidueRow& row : rows) {
      if (i % period != row.residue) continue;
      for (int offset : row.offsets) {
        law.add(i, wrap_index(static_cast<std::int64_t>(i) + offset, dimension));
      }
    }
  }
  return std::move(law).build();
}

// Flower snark J5, dimension 20, classes i mod 4.
const std::vector<ResidueRow> kFlowerJ5Law = {
    {1, {1, 2, 3}},
    {2, {-1, 6, 18}},
    {0, {-3, 2, 14}},
    {3, {-2, 4, 16}},
};

// Tietze graph, dimension 12, classes i mod 4.
const std::vector<ResidueRow> kTietzeLaw = {
    {1, {1, 2, 3}},
    {2, {-1, 6, 10}},
    {0, {-3, 2, 6}},
    {3, {-2, 4, 8}},
};

struct NamedPetersenLaw {
  family::GeneralizedPetersen gp;
  std::string_view alias;
  std::optional<std::array<int, 3>> even_offsets;  // transcribed law, when one exists
};

const std::array<NamedPetersenLaw, 5> kNamedPetersen = {{
    {family::kPetersen, "petersen", std::nullopt},
    {family::kDurer, "durer", std::array<int, 3>{-1, 4, 8}},
    {family::kMobiusKantor, "mobius-kantor", std::array<int, 3>{-1, 6, 10}},
    {family::kDesargues, "desargues", std::array<int, 3>{-1, 6, 14}},
    {family::kNauru, "nauru", std::array<int, 3>{-1, 10, 14}},
}};

const NamedPetersenLaw* find_named(const family::GeneralizedPetersen& gp) {
  for (const auto& named : kNamedPetersen) {
    if (named.gp == gp) return &named;
  }
  return nullptr;
}

std::size_t sum_of(const std::vector<std::size_t>& parts) {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

// Parameter parsing -------------------------------------------------------

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::size_t> parse_parameters(std::string_view list) {
  std::vector<std::size_t> values;
  std::size_t start = 0;
  for (;;) {
    const auto comma = list.find(',', start);
    const std::string_view token = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError("invalid family parameter \"" + std::string(token) + "\"", std::string(token));
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

// Counts and structural claims used by verify_family ---------------------

struct ExpectedCounts {
  std::size_t vertices;
  std::size_t edges;
};

ExpectedCounts expected_counts(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Path& s) { return ExpectedCounts{s.n, s.n - 1}; },
          [](const family::Cycle& s) { return ExpectedCounts{s.n, s.n}; },
          [](const family::Complete& s) { return ExpectedCounts{s.n, s.n * (s.n - 1) / 2}; },
          [](const family::CompleteBipartite& s) { return ExpectedCounts{s.m + s.n, s.m * s.n}; },
          [](const family::CompleteNPartite& s) {
            const std::size_t total = sum_of(s.parts);
            std::size_t squares = 0;
            for (std::size_t a : s.parts) squares += a * a;
            return ExpectedCounts{total, (total * total - squares) / 2};
          },
          [](const family::Star& s) { return ExpectedCounts{s.n + 1, s.n}; },
          [](const family::Friendship& s) { return ExpectedCounts{2 * s.n + 1, 3 * s.n}; },
          [](const family::Wheel& s) { return ExpectedCounts{s.n, 2 * (s.n - 1)}; },
          [](const family::FlowerJ5&) { return ExpectedCounts{20, 30}; },
          [](const family::Tietze&) { return ExpectedCounts{12, 18}; },
          [](const family::GeneralizedPetersen& s) { return ExpectedCounts{2 * s.n, 3 * s.n}; },
      },
      spec);
}

CheckResult make_check(std::string name, bool passed, std::vector<std::size_t> witness = {},
                       std::string detail = {}) {
  return CheckResult{std::move(name), passed, std::move(witness), std::move(detail)};
}

CheckResult count_check(std::string name, std::size_t expected, std::size_t actual) {
  return make_check(std::move(name), expected == actual,
                    expected == actual ? std::vector<std::size_t>{} : std::vector<std::size_t>{actual},
                    "expected " + std::to_string(expected) + ", found " + std::to_string(actual));
}

CheckResult regular_check(const Graph& g, std::size_t k) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) != k) {
      return make_check("cubic", false, {v},
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  return make_check("cubic", true);
}

CheckResult isomorphism_check(std::string name, const Graph& g, const Graph& reference) {
  if (auto witness = is_isomorphic(g, reference)) {
    std::vector<std::size_t> images(witness->images().begin(), witness->images().end());
    return make_check(std::move(name), true, std::move(images), "witness bijection found");
  }
  return make_check(std::move(name), false, {g.vertex_count(), g.edge_count()},
                    "no isomorphism to the reference construction");
}

std::string girth_text(const std::optional<std::size_t>& g) {
  return g ? std::to_string(*g) : std::string("infinite");
}

CheckResult snark_check(const Graph& g) {
  const SnarkCertificate cert = check_snark(g, 5);
  std::string detail = "cubic=" + std::string(cert.is_cubic ? "yes" : "no") +
                       " bridgeless=" + (cert.is_bridgeless ? "yes" : "no") +
                       " girth=" + girth_text(cert.girth) +
                       " 3-edge-colorable=" + (cert.three_edge_colorable ? "yes" : "no");
  std::vector<std::size_t> witness;
  if (!cert.verdict()) witness.push_back(cert.girth.value_or(0));
  return make_check("snark-certificate", cert.verdict(), std::move(witness), std::move(detail));
}

CheckResult connectivity_check(const Graph& g, std::size_t expected) {
  const Connectivity c = connectivity(g);
  const bool ok = c.vertex_connectivity == expected && c.edge_connectivity == expected;
  return make_check("connectivity-" + std::to_string(expected), ok,
                    ok ? std::vector<std::size_t>{}
                       : std::vector<std::size_t>{c.vertex_connectivity, c.edge_connectivity},
                    "vertex=" + std::to_string(c.vertex_connectivity) +
                        " edge=" + std::to_string(c.edge_connectivity));
}

CheckResult bipartite_check(const Graph& g) {
  const bool ok = is_bipartite(g).has_value();
  std::vector<std::size_t> witness;
  if (!ok) witness.push_back(girth(g).value_or(0));
  return make_check("bipartite", ok, std::move(witness));
}

void add_family_checks(const FamilySpec& spec, const Graph& g, std::vector<CheckResult>& checks) {
  std::visit(
      Overloaded{
          [&](const family::Star& s) {
            // Leaf i -> i+1, center n+1 -> 1 turns S_n into K_{1,n}.
            std::vector<Vertex> images(s.n + 1);
            for (std::size_t i = 1; i <= s.n; ++i) images[i - 1] = static_cast<Vertex>(i + 1);
            images[s.n] = 1;
            const bool ok = relabel(g, GeneratorMap(images)) ==
                            generate_graph(family::CompleteNPartite{{1, s.n}});
            checks.push_back(make_check("star-is-k1n", ok, ok ? std::vector<std::size_t>{}
                                                              : std::vector<std::size_t>{s.n + 1}));
          },
          [&](const family::Friendship&) {
            const FriendshipCheck f = has_friendship_property(g);
            std::vector<std::size_t> witness;
            if (f.witness) witness = {f.witness->first, f.witness->second};
            checks.push_back(make_check("friendship-property", f.holds, std::move(witness)));
          },
          [&](const family::FlowerJ5&) {
            checks.push_back(regular_check(g, 3));
            checks.push_back(snark_check(g));
            checks.push_back(isomorphism_check("isomorphic-to-flower-construction", g,
                                               flower_snark_construction(5)));
          },
          [&](const family::Tietze&) {
            checks.push_back(regular_check(g, 3));
            checks.push_back(isomorphism_check("isomorphic-to-truncated-petersen", g,
                                               truncated_petersen_construction()));
            const SnarkCertificate cert = check_snark(g, 5);
            const bool ok = cert.is_cubic && cert.is_bridgeless && !cert.three_edge_colorable &&
                            cert.girth == std::optional<std::size_t>{3};
            checks.push_back(make_check("snark-except-girth", ok,
                                        ok ? std::vector<std::size_t>{}
                                           : std::vector<std::size_t>{cert.girth.value_or(0)},
                                        "girth=" + girth_text(cert.girth)));
            const bool maximal = is_maximally_nonhamiltonian(g);
            checks.push_back(make_check("maximally-nonhamiltonian", maximal,
                                        maximal ? std::vector<std::size_t>{}
                                                : std::vector<std::size_t>{g.vertex_count()}));
          },
          [&](const family::GeneralizedPetersen& s) {
            checks.push_back(regular_check(g, 3));
            const bool conventional = relabel(g, interleaved_to_conventional(s.n)) ==
                                      conventional_generalized_petersen(s);
            checks.push_back(make_check("conventional-labeling", conventional,
                                        conventional ? std::vector<std::size_t>{}
                                                     : std::vector<std::size_t>{s.n, s.k}));
            const NamedPetersenLaw* named = find_named(s);
            if (named && named->even_offsets) {
              const bool same = family_law(spec) == generalized_petersen_formula_law(s);
              checks.push_back(make_check("transcribed-law-matches-formula", same,
                                          same ? std::vector<std::size_t>{}
                                               : std::vector<std::size_t>{s.n, s.k}));
            }
            if (s == family::kPetersen) checks.push_back(snark_check(g));
            if (s == family::kMobiusKantor || s == family::kNauru) checks.push_back(bipartite_check(g));
            if (s == family::kDesargues) {
              const auto cycle = find_hamiltonian_cycle(g);
              const bool ok = cycle && is_hamiltonian_cycle(g, *cycle);
              checks.push_back(make_check("hamiltonian", ok,
                                          ok ? std::vector<std::size_t>(cycle->begin(), cycle->end())
                                             : std::vector<std::size_t>{g.vertex_count()}));
            }
            if (s == family::kDesargues || s == family::kNauru) {
              checks.push_back(connectivity_check(g, 3));
            }
          },
          [](const auto&) {},
      },
      spec);
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      Overloaded{
          [](const family::Path& s) { require(s.n >= 2, "path needs n >= 2"); },
          [](const family::Cycle& s) { require(s.n >= 3, "cycle needs n >= 3"); },
          [](const family::Complete& s) { require(s.n >= 1, "complete graph needs n >= 1"); },
          [](const family::CompleteBipartite& s) {
            require(s.m >= 1 && s.n >= 1, "bipartite needs m, n >= 1");
          },
          [](const family::CompleteNPartite& s) {
            require(s.parts.size() >= 2, "npartite needs at least 2 parts");
            require(std::all_of(s.parts.begin(), s.parts.end(), [](std::size_t a) { return a >= 1; }),
                    "npartite parts must be >= 1");
          },
          [](const family::Star& s) { require(s.n >= 2, "star needs n >= 2 leaves"); },
          [](const family::Friendship& s) { require(s.n >= 1, "friendship needs n >= 1"); },
          [](const family::Wheel& s) { require(s.n >= 4, "wheel needs n >= 4 vertices"); },
          [](const family::FlowerJ5&) {},
          [](const family::Tietze&) {},
          [](const family::GeneralizedPetersen& s) {
            require(s.n >= 3, "gp needs n >= 3");
            require(s.k >= 1 && 2 * s.k < s.n, "gp needs 1 <= k < n/2");
          },
      },
      spec);
  // Overflow-safe size cap: each parameter is bounded before summing.
  const bool huge = std::visit(
      Overloaded{
          [](const family::CompleteNPartite& s) {
            std::size_t total = 0;
            for (std::size_t a : s.parts) {
              if (a > kMaxFamilyVertices) return true;
              total += a;
            }
            return total > kMaxFamilyVertices;
          },
          [](const family::CompleteBipartite& s) {
            return s.m > kMaxFamilyVertices || s.n > kMaxFamilyVertices;
          },
          [](const auto& s) {
            if constexpr (requires { s.n; }) return s.n > kMaxFamilyVertices;
            return false;
          },
      },
      spec);
  if (huge || family_vertex_count(spec) > kMaxFamilyVertices) {
    throw InvalidArgument("family exceeds " + std::to_string(kMaxFamilyVertices) + " vertices");
  }
}

FamilySpec parse_family_spec(std::string_view text) {
  const std::string lowered = lowercase(text);
  const auto colon = lowered.find(':');
  const std::string name = lowered.substr(0, colon);
  const bool has_params = colon != std::string::npos;
  const std::string param_text = has_params ? lowered.substr(colon + 1) : std::string{};

  auto params = [&](std::size_t count) {
    if (!has_params) throw ParseError("family \"" + name + "\" needs parameters", name);
    auto values = parse_parameters(param_text);
    if (count != 0 && values.size() != count) {
      throw ParseError("family \"" + name + "\" takes " + std::to_string(count) +
                           " parameter(s), got \"" + param_text + "\"",
                       param_text);
    }
    return values;
  };
  auto no_params = [&] {
    if (has_params) {
      throw ParseError("family \"" + name + "\" takes no parameters, got \"" + param_text + "\"",
                       param_text);
    }
  };

  if (name == "path") return family::Path{params(1)[0]};
  if (name == "cycle") return family::Cycle{params(1)[0]};
  if (name == "complete") return family::Complete{params(1)[0]};
  if (name == "bipartite") {
    auto p = params(2);
    return family::CompleteBipartite{p[0], p[1]};
  }
  if (name == "npartite") return family::CompleteNPartite{params(0)};
  if (name == "star") return family::Star{params(1)[0]};
  if (name == "friendship") return family::Friendship{params(1)[0]};
  if (name == "wheel") return family::Wheel{params(1)[0]};
  if (name == "gp") {
    auto p = params(2);
    return family::GeneralizedPetersen{p[0], p[1]};
  }
  if (name == "j5") return no_params(), FamilySpec{family::FlowerJ5{}};
  if (name == "tietze") return no_params(), FamilySpec{family::Tietze{}};
  for (const auto& named : kNamedPetersen) {
    if (name == named.alias) return no_params(), FamilySpec{named.gp};
  }
  throw ParseError("unknown graph family \"" + name + "\"", name);
}

std::string to_string(const FamilySpec& spec) {
  auto n = [](std::size_t v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [&](const family::Path& s) { return "path:" + n(s.n); },
          [&](const family::Cycle& s) { return "cycle:" + n(s.n); },
          [&](const family::Complete& s) { return "complete:" + n(s.n); },
          [&](const family::CompleteBipartite& s) { return "bipartite:" + n(s.m) + "," + n(s.n); },
          [&](const family::CompleteNPartite& s) {
            std::string out = "npartite:";
            for (std::size_t k = 0; k < s.parts.size(); ++k) out += (k ? "," : "") + n(s.parts[k]);
            return out;
          },
          [&](const family::Star& s) { return "star:" + n(s.n); },
          [&](const family::Friendship& s) { return "friendship:" + n(s.n); },
          [&](const family::Wheel& s) { return "wheel:" + n(s.n); },
          [](const family::FlowerJ5&) { return std::string("j5"); },
          [](const family::Tietze&) { return std::string("tietze"); },
          [&](const family::GeneralizedPetersen& s) { return "gp:" + n(s.n) + "," + n(s.k); },
      },
      spec);
}

std::optional<std::string_view> petersen_alias(const family::GeneralizedPetersen& gp) {
  if (const auto* named = find_named(gp)) return named->alias;
  return std::nullopt;
}

std::size_t family_vertex_count(const FamilySpec& spec) { return expected_counts(spec).vertices; }

Graph generate_graph(const FamilySpec& spec) {
  validate(spec);
  std::vector<Edge> edges;
  auto edge = [&](std::size_t u, std::size_t v) {
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  };
  const std::size_t count = family_vertex_count(spec);

  std::visit(
      Overloaded{
          [&](const family::Path& s) {
            for (std::size_t t = 1; t < s.n; ++t) edge(t, t + 1);
          },
          [&](const family::Cycle& s) {
            for (std::size_t t = 1; t <= s.n; ++t) edge(t, wrap_index(t + 1, s.n));
          },
          [&](const family::Complete& s) {
            for (std::size_t u = 1; u <= s.n; ++u)
              for (std::size_t v = u + 1; v <= s.n; ++v) edge(u, v);
          },
          [&](const family::CompleteBipartite& s) {
            for (std::size_t u = 1; u <= s.m; ++u)
              for (std::size_t v = s.m + 1; v <= s.m + s.n; ++v) edge(u, v);
          },
          [&](const family::CompleteNPartite& s) {
            std::vector<std::size_t> block;
            for (std::size_t b = 0; b < s.parts.size(); ++b) block.insert(block.end(), s.parts[b], b);
            for (std::size_t u = 1; u <= block.size(); ++u)
              for (std::size_t v = u + 1; v <= block.size(); ++v)
                if (block[u - 1] != block[v - 1]) edge(u, v);
          },
          [&](const family::Star& s) {
            for (std::size_t leaf = 1; leaf <= s.n; ++leaf) edge(leaf, s.n + 1);
          },
          [&](const family::Friendship& s) {
            const std::size_t rim = 2 * s.n;
            for (std::size_t t = 1; t <= s.n; ++t) edge(2 * t, wrap_index(2 * t + 1, rim));
            for (std::size_t v = 1; v <= rim; ++v) edge(v, rim + 1);
          },
          [&](const family::Wheel& s) {
            const std::size_t rim = s.n - 1;
            for (std::size_t t = 1; t <= rim; ++t) edge(t, wrap_index(t + 1, rim));
            for (std::size_t t = 1; t <= rim; ++t) edge(t, s.n);
          },
          [&](const family::FlowerJ5&) {},
          [&](const family::Tietze&) {},
          [&](const family::GeneralizedPetersen& s) {
            const std::size_t order = 2 * s.n;
            for (std::size_t t = 1; t <= s.n; ++t) {
              edge(2 * t - 1, wrap_index(2 * t + 1, order));
              edge(2 * t - 1, 2 * t);
              edge(2 * t, wrap_index(2 * t + 2 * s.k, order));
            }
          },
      },
      spec);

  // The two snark-type graphs are defined by their laws.
  if (std::holds_alternative<family::FlowerJ5>(spec) || std::holds_alternative<family::Tietze>(spec)) {
    return graph_from_algebra(family_law(spec));
  }
  return Graph::make(count, edges);
}

EvolutionAlgebra generalized_petersen_formula_law(const family::GeneralizedPetersen& gp) {
  validate(gp);
  const int step = static_cast<int>(2 * gp.k);
  return periodic_law(2 * gp.n, 2, {{1, {-2, 1, 2}}, {0, {-1, step, -step}}});
}

EvolutionAlgebra family_law(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const family::Path&) { return algebra_from_graph(generate_graph(spec)); },
          [&](const family::Cycle&) { return algebra_from_graph(generate_graph(spec)); },
          [&](const family::Complete&) { return algebra_from_graph(generate_graph(spec)); },
          [](const family::CompleteBipartite& s) {
            LawBuilder law(s.m + s.n);
            for (std::size_t i = 1; i <= s.m; ++i)
              for (std::size_t k = 1; k <= s.n; ++k) law.add(i, s.m + k);
            for (std::size_t i = 1; i <= s.n; ++i)
              for (std::size_t k = 1; k <= s.m; ++k) law.add(s.m + i, k);
            return std::move(law).build();
          },
          [](const family::CompleteNPartite& s) {
            // Block b row: sum_{k=1}^{a_1+..+a_{b-1}} e_k + sum_{k=1}^{a_{b+1}+..+a_n} e_{k+a_1+..+a_b}.
            LawBuilder law(sum_of(s.parts));
            std::size_t before = 0;
            for (std::size_t b = 0; b < s.parts.size(); ++b) {
              const std::size_t through = before + s.parts[b];
              const std::size_t after = sum_of(s.parts) - through;
              for (std::size_t i = before + 1; i <= through; ++i) {
                for (std::size_t k = 1; k <= before; ++k) law.add(i, k);
                for (std::size_t k = 1; k <= after; ++k) law.add(i, k + through);
              }
              before = through;
            }
            return std::move(law).build();
          },
          [](const family::Star& s) {
            LawBuilder law(s.n + 1);
            for (std::size_t i = 1; i <= s.n; ++i) law.add(i, s.n + 1);
            for (std::size_t i = 1; i <= s.n; ++i) law.add(s.n + 1, i);
            return std::move(law).build();
          },
          [](const family::Friendship& s) {
            // Rim i (mod 2n): even i gains e_{i+1}, odd i gains e_{i-1}; all gain the center.
            const std::size_t rim = 2 * s.n;
            LawBuilder law(rim + 1);
            for (std::size_t i = 1; i <= rim; ++i) {
              const auto partner = static_cast<std::int64_t>(i) + (i % 2 == 0 ? 1 : -1);
              law.add(i, wrap_index(partner, rim));
              law.add(i, rim + 1);
            }
            for (std::size_t i = 1; i <= rim; ++i) law.add(rim + 1, i);
            return std::move(law).build();
          },
          [](const family::Wheel& s) {
            // Rim i (mod n-1): e_{i-1} + e_{i+1} + e_n; center: every rim generator.
            const std::size_t rim = s.n - 1;
            LawBuilder law(s.n);
            for (std::size_t i = 1; i <= rim; ++i) {
              law.add(i, wrap_index(static_cast<std::int64_t>(i) - 1, rim));
              law.add(i, wrap_index(static_cast<std::int64_t>(i) + 1, rim));
              law.add(i, s.n);
            }
            for (std::size_t i = 1; i <= rim; ++i) law.add(s.n, i);
            return std::move(law).build();
          },
          [](const family::FlowerJ5&) { return periodic_law(20, 4, kFlowerJ5Law); },
          [](const family::Tietze&) { return periodic_law(12, 4, kTietzeLaw); },
          [](const family::GeneralizedPetersen& s) {
            const NamedPetersenLaw* named = find_named(s);
            if (!named || !named->even_offsets) return generalized_petersen_formula_law(s);
            return periodic_law(2 * s.n, 2, {{1, {-2, 1, 2}}, {0, *named->even_offsets}});
          },
      },
      spec);
}

Graph conventional_generalized_petersen(const family::GeneralizedPetersen& gp) {
  validate(gp);
  std::vector<Edge> edges;
  for (std::size_t t = 1; t <= gp.n; ++t) {
    const auto outer = static_cast<Vertex>(t);
    const auto inner = static_cast<Vertex>(gp.n + t);
    edges.push_back({outer, wrap_index(t + 1, gp.n)});
    edges.push_back({outer, inner});
    edges.push_back({inner, static_cast<Vertex>(gp.n + wrap_index(t + gp.k, gp.n))});
  }
  return Graph::make(2 * gp.n, edges);
}

GeneratorMap interleaved_to_conventional(std::size_t n) {
  std::vector<Vertex> images(2 * n);
  for (std::size_t t = 1; t <= n; ++t) {
    images[2 * t - 2] = static_cast<Vertex>(t);
    images[2 * t - 1] = static_cast<Vertex>(n + t);
  }
  return GeneratorMap(std::move(images));
}

Graph flower_snark_construction(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("flower snark needs odd n >= 3");
  auto hub = [](std::size_t t) { return static_cast<Vertex>(t); };
  auto u = [n](std::size_t t) { return static_cast<Vertex>(n + t); };
  auto v = [n](std::size_t t) { return static_cast<Vertex>(2 * n + t); };
  auto w = [n](std::size_t t) { return static_cast<Vertex>(3 * n + t); };
  std::vector<Edge> edges;
  for (std::size_t t = 1; t <= n; ++t) {
    edges.push_back({hub(t), u(t)});
    edges.push_back({hub(t), v(t)});
    edges.push_back({hub(t), w(t)});
    edges.push_back({u(t), u(wrap_index(t + 1, n))});
  }
  // v_1 .. v_n w_1 .. w_n closes into a single 2n-cycle.
  for (std::size_t t = 1; t < n; ++t) {
    edges.push_back({v(t), v(t + 1)});
    edges.push_back({w(t), w(t + 1)});
  }
  edges.push_back({v(n), w(1)});
  edges.push_back({w(n), v(1)});
  return Graph::make(4 * n, edges);
}

Graph truncated_petersen_construction() {
  const Graph petersen = conventional_generalized_petersen(family::kPetersen);
  std::vector<Edge> edges;
  // Vertex 1's neighbours 2, 5, 6 are shared out to the triangle 1, 11, 12.
  for (const Edge& e : petersen.edges()) {
    if (e.u != 1) edges.push_back(e);
  }
  edges.push_back({1, 2});
  edges.push_back({11, 5});
  edges.push_back({12, 6});
  edges.push_back({1, 11});
  edges.push_back({11, 12});
  edges.push_back({12, 1});
  return Graph::make(12, edges);
}

std::vector<std::vector<std::size_t>> npartite_printed_rows(const std::vector<std::size_t>& parts) {
  validate(family::CompleteNPartite{parts});
  const EvolutionAlgebra canonical = family_law(family::CompleteNPartite{parts});
  std::vector<std::vector<std::size_t>> rows(canonical.dimension());
  for (std::size_t i = 1; i <= canonical.dimension(); ++i) {
    for (const auto& [j, value] : canonical.square_terms(i)) rows[i - 1].push_back(j);
  }
  if (parts.size() < 3) return rows;

  const std::size_t a1 = parts[0], a2 = parts[1], a3 = parts[2];
  const std::size_t tail = sum_of(parts) - a1 - a2;  // a_3 + ... + a_n
  for (std::size_t i = a1 + a2 + 1; i <= a1 + a2 + a3; ++i) {
    auto& row = rows[i - 1];
    row.clear();
    for (std::size_t k = 1; k <= a1 + a2; ++k) row.push_back(k);
    for (std::size_t k = 1; k <= tail; ++k) row.push_back(k + a1 + a2 + a3);
  }
  return rows;
}

Errata npartite_limit_errata(const std::vector<std::size_t>& parts) {
  Errata e;
  e.id = "npartite-third-block-upper-limit";
  e.printed = "e_i^2 = sum_{k=1}^{a_1+a_2} e_k + sum_{k=1}^{a_3+...+a_n} e_{k+a_1+a_2+a_3}";
  e.corrected = "e_i^2 = sum_{k=1}^{a_1+a_2} e_k + sum_{k=1}^{a_4+...+a_n} e_{k+a_1+a_2+a_3}";
  e.applied = true;
  e.affects_instance = parts.size() >= 3;
  if (e.affects_instance) {
    const std::size_t start = parts[0] + parts[1];
    for (std::size_t i = start + 1; i <= start + parts[2]; ++i) e.affected_generators.push_back(i);
    e.note = "third-block rows as printed reference " + std::to_string(parts[2]) +
             " generator(s) beyond dimension " + std::to_string(sum_of(parts)) +
             "; the corrected row is the sum of all generators outside the block";
  } else {
    e.note = "only two blocks; the third-block row does not occur";
  }
  return e;
}

VerificationReport verify_family(const FamilySpec& spec) {
  VerificationReport report{spec, {}, {}, false};
  const EvolutionAlgebra law = family_law(spec);
  const Graph g = generate_graph(spec);

  {
    const auto violation = s_graphicable_violation(law);
    report.checks.push_back(make_check(
        "law-s-graphicable", !violation,
        violation ? std::vector<std::size_t>{violation->row, violation->column} : std::vector<std::size_t>{},
        violation ? violation->describe() : std::string{}));
  }
  {
    const EvolutionAlgebra from_graph = algebra_from_graph(g);
    CheckResult check = make_check("law-equals-adjacency", true);
    if (from_graph.dimension() != law.dimension()) {
      check.passed = false;
      check.witness = {law.dimension(), from_graph.dimension()};
      check.detail = "dimension mismatch";
    } else {
      for (std::size_t j = 1; j <= law.dimension() && check.passed; ++j) {
        for (std::size_t i = 1; i <= law.dimension(); ++i) {
          if (law.coefficient(j, i) != from_graph.coefficient(j, i)) {
            check.passed = false;
            check.witness = {j, i};
            check.detail = "a_{" + std::to_string(j) + "," + std::to_string(i) + "} differs";
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  const ExpectedCounts expected = expected_counts(spec);
  report.checks.push_back(count_check("vertex-count", expected.vertices, g.vertex_count()));
  report.checks.push_back(count_check("edge-count", expected.edges, g.edge_count()));
  add_family_checks(spec, g, report.checks);

  if (const auto* np = std::get_if<family::CompleteNPartite>(&spec)) {
    report.errata.push_back(npartite_limit_errata(np->parts));
  }

  report.passed_all = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.passed; });
  return report;
}

std::vector<FamilySpec> ci_grid() {
  std::vector<FamilySpec> grid;
  for (std::size_t n = 2; n <= 12; ++n) grid.push_back(family::Star{n});
  for (std::size_t n = 1; n <= 6; ++n) grid.push_back(family::Friendship{n});
  for (std::size_t n = 4; n <= 12; ++n) grid.push_back(family::Wheel{n});

  // Ordered compositions with at least two parts, sum <= 12.
  std::vector<std::size_t> parts;
  auto compose = [&](auto&& self, std::size_t remaining) -> void {
    if (parts.size() >= 2) grid.push_back(family::CompleteNPartite{parts});
    for (std::size_t a = 1; a <= remaining; ++a) {
      parts.push_back(a);
      self(self, remaining - a);
      parts.pop_back();
    }
  };
  compose(compose, 12);

  for (std::size_t n = 3; n <= 16; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) grid.push_back(family::GeneralizedPetersen{n, k});
  grid.push_back(family::FlowerJ5{});
  grid.push_back(family::Tietze{});

  for (std::size_t n = 2; n <= 12; ++n) grid.push_back(family::Path{n});
  for (std::size_t n = 3; n <= 12; ++n) grid.push_back(family::Cycle{n});
  for (std::size_t n = 1; n <= 12; ++n) grid.push_back(family::Complete{n});
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n) grid.push_back(family::CompleteBipartite{m, n});
  return grid;
}

}  // namespace graphicable
