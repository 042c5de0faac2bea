#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "graphicable/algebra.hpp"
#include "graphicable/analysis.hpp"
#include "graphicable/embeddings.hpp"
#include "graphicable/families.hpp"
#include "graphicable/graph.hpp"

namespace graphicable {

/// One line per generator: "e_i^2 = e_j + e_k", ascending; "e_i^2 = 0" for
/// a zero square. Non-unit coefficients print as "2*e_j", "1/2*e_j", and
/// negative terms with " - ".
std::string render_law(const EvolutionAlgebra& a);

/// "e_1 + 2*e_3", "-e_4", "0".
std::string render_element(const AlgebraElement& x);

/// Undirected DOT, vertices e1..en, edges ascending. Byte-deterministic.
std::string export_dot(const Graph& g);

/// {"n": int, "edges": [[u,v], ...]} with u < v ascending.
std::string graph_to_json(const Graph& g);
/// Throws ParseError (with line/column or field) or InvalidArgument.
Graph graph_from_json(std::string_view text);

inline constexpr std::uint32_t kAlgebraSchemaVersion = 1;

/// Flat-file form of an algebra. The structure array is row-major over the
/// structure matrix: entry (j-1)*n + (i-1) is a_{ji}, written as a rational
/// string ("0", "1", "1/2").
struct AlgebraDocument {
  std::uint32_t schema_version = kAlgebraSchemaVersion;
  EvolutionAlgebra algebra;
  std::optional<std::string> family;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

std::string serialize(const AlgebraDocument& doc);

/// Rejects unknown schema versions, matrices whose length is not
/// dimension^2 and malformed rationals. ParseError::field() names the
/// offending field, e.g. "structure[5]"; syntax errors carry line/column.
AlgebraDocument deserialize(std::string_view text);

/// True when `text` looks like an algebra document rather than a graph.
bool is_algebra_document(std::string_view text);

/// Comma-separated rationals, e.g. "2,3,0,0" or "1/2,-1,0".
AlgebraElement parse_element(std::string_view text, std::size_t dimension);

/// JSON array of images [3,1,2] or {"images": [3,1,2]}.
GeneratorMap parse_generator_map(std::string_view text);

std::string report_to_json(const VerificationReport& report);
std::string chain_to_json(const ChainReport& report);
std::string snark_certificate_to_json(const SnarkCertificate& cert);

}  // namespace graphicable
