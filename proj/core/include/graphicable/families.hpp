#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphicable/algebra.hpp"
#include "graphicable/graph.hpp"

namespace graphicable {

namespace family {

struct Path {
  std::size_t n = 2;
  friend bool operator==(const Path&, const Path&) = default;
};
struct Cycle {
  std::size_t n = 3;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};
struct Complete {
  std::size_t n = 1;
  friend bool operator==(const Complete&, const Complete&) = default;
};
struct CompleteBipartite {
  std::size_t m = 1;
  std::size_t n = 1;
  friend bool operator==(const CompleteBipartite&, const CompleteBipartite&) = default;
};
/// Blocks occupy consecutive index ranges [1..a_1], [a_1+1..a_1+a_2], ...
struct CompleteNPartite {
  std::vector<std::size_t> parts;
  friend bool operator==(const CompleteNPartite&, const CompleteNPartite&) = default;
};
/// n leaves 1..n, center n+1.
struct Star {
  std::size_t n = 2;
  friend bool operator==(const Star&, const Star&) = default;
};
/// Rim 1..2n, center 2n+1, triangles {2,3,c}, {4,5,c}, ..., {2n,1,c}.
struct Friendship {
  std::size_t n = 1;
  friend bool operator==(const Friendship&, const Friendship&) = default;
};
/// Rim cycle 1..n-1, center n.
struct Wheel {
  std::size_t n = 4;
  friend bool operator==(const Wheel&, const Wheel&) = default;
};
struct FlowerJ5 {
  friend bool operator==(const FlowerJ5&, const FlowerJ5&) = default;
};
struct Tietze {
  friend bool operator==(const Tietze&, const Tietze&) = default;
};
/// Interleaved labeling: outer vertex of position t is 2t-1, inner is 2t.
struct GeneralizedPetersen {
  std::size_t n = 5;
  std::size_t k = 2;
  friend bool operator==(const GeneralizedPetersen&, const GeneralizedPetersen&) = default;
};

inline constexpr GeneralizedPetersen kPetersen{5, 2};
inline constexpr GeneralizedPetersen kDurer{6, 2};
inline constexpr GeneralizedPetersen kMobiusKantor{8, 3};
inline constexpr GeneralizedPetersen kDesargues{10, 3};
inline constexpr GeneralizedPetersen kNauru{12, 5};

}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::CompleteBipartite,
                 family::CompleteNPartite, family::Star, family::Friendship, family::Wheel,
                 family::FlowerJ5, family::Tietze, family::GeneralizedPetersen>;

/// Largest vertex count any family generator will build.
inline constexpr std::size_t kMaxFamilyVertices = 4096;

/// Throws InvalidArgument when a parameter is outside its family's bounds
/// or the graph would exceed kMaxFamilyVertices.
void validate(const FamilySpec& spec);

/// Grammar: star:5 friendship:3 wheel:7 npartite:2,3,4 gp:12,5 j5 tietze
/// durer mobius-kantor desargues nauru petersen cycle:6 path:4 complete:5
/// bipartite:3,4. Case-insensitive. Throws ParseError whose field() is the
/// offending token. Does not validate parameter bounds.
FamilySpec parse_family_spec(std::string_view text);

/// Canonical grammar string ("gp:6,2", never the alias).
std::string to_string(const FamilySpec& spec);

/// "durer", "mobius-kantor", ... for the named generalized Petersen graphs.
std::optional<std::string_view> petersen_alias(const family::GeneralizedPetersen& gp);

std::size_t family_vertex_count(const FamilySpec& spec);

Graph generate_graph(const FamilySpec& spec);

/// Closed-form law for the family, built directly from its defining
/// formula (not from the graph), except Path/Cycle/Complete whose laws are
/// read off the generated graph.
EvolutionAlgebra family_law(const FamilySpec& spec);

/// Generalized Petersen law from the general parity formula
/// (odd: e_{i-2}+e_{i+1}+e_{i+2}; even: e_{i-1}+e_{i+2k}+e_{i-2k}, mod 2n).
EvolutionAlgebra generalized_petersen_formula_law(const family::GeneralizedPetersen& gp);

/// Conventional labeling: outer cycle 1..n, inner star polygon n+1..2n,
/// spokes {t, n+t}.
Graph conventional_generalized_petersen(const family::GeneralizedPetersen& gp);

/// Interleaved -> conventional relabeling: 2t-1 -> t, 2t -> n+t.
GeneratorMap interleaved_to_conventional(std::size_t n);

/// Flower snark J_n built from hub gadgets: hub h_t = t adjacent to
/// u_t = n+t, v_t = 2n+t, w_t = 3n+t; u_1..u_n is an n-cycle and
/// v_1..v_n w_1..w_n one 2n-cycle. n odd, n >= 3.
Graph flower_snark_construction(std::size_t n);

/// Petersen graph (conventional labeling) with vertex 1 replaced by a
/// triangle {1, 11, 12}.
Graph truncated_petersen_construction();

/// One row of the complete multipartite law as the printed formula reads
/// it: generator indices may exceed the dimension. Block 3's upper limit is
/// a_3+...+a_n there instead of a_4+...+a_n.
std::vector<std::vector<std::size_t>> npartite_printed_rows(const std::vector<std::size_t>& parts);

struct Errata {
  std::string id;
  std::string printed;
  std::string corrected;
  bool applied = true;
  bool affects_instance = false;
  std::vector<std::size_t> affected_generators;
  std::string note;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Index pair, generator index, or offending count. Non-empty on failure.
  std::vector<std::size_t> witness;
  std::string detail;
};

struct VerificationReport {
  FamilySpec spec;
  std::vector<CheckResult> checks;
  std::vector<Errata> errata;
  bool passed_all = false;
};

Errata npartite_limit_errata(const std::vector<std::size_t>& parts);

/// Runs the law/graph audit for one family: law shape, law vs adjacency,
/// then family-specific structural claims. Never throws on a failing
/// check; failures are report entries.
VerificationReport verify_family(const FamilySpec& spec);

/// Specs audited in CI: Star 2..12, Friendship 1..6, Wheel 4..12, every
/// ordered composition with >= 2 parts and sum <= 12, every GP(n,k) with
/// 3 <= n <= 16, J5, Tietze, plus Path 2..12, Cycle 3..12, Complete 1..12
/// and CompleteBipartite m,n <= 6.
std::vector<FamilySpec> ci_grid();

}  // namespace graphicable
