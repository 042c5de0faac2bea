#include "graphicable/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace graphicable {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string render_terms(const std::vector<std::pair<std::size_t, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, coefficient] : terms) {
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "e_" + std::to_string(index);
    first = false;
  }
  return out;
}

// Line/column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the failure point.
    const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     {}, line, column);
  }
}

const json& require_field(const json& object, const char* key) {
  if (!object.is_object()) throw ParseError("document root must be a JSON object", "$");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing field \"") + key + "\"", key);
  return *it;
}

std::size_t require_count(const json& value, const std::string& field) {
  if (!value.is_number_unsigned()) throw ParseError("field \"" + field + "\" must be a non-negative integer", field);
  return value.get<std::size_t>();
}

ordered_json errata_json(const Errata& e) {
  ordered_json j;
  j["id"] = e.id;
  j["printed"] = e.printed;
  j["corrected"] = e.corrected;
  j["applied"] = e.applied;
  j["affects_instance"] = e.affects_instance;
  j["affected_generators"] = e.affected_generators;
  j["note"] = e.note;
  return j;
}

ordered_json step_json(const ChainStep& s) {
  ordered_json j;
  j["from"] = s.from;
  j["to"] = s.to;
  j["passed"] = s.passed();
  j["law_embedding"] = s.law_embedding;
  j["subgraph_oracle"] = s.subgraph_oracle;
  j["rim_diffs_single"] = s.rim_diffs_single;
  j["partner_identity"] = s.partner_identity;
  j["center_diff_empty"] = s.center_diff_empty;
  ordered_json diffs = ordered_json::array();
  for (const LawDiff& d : s.diffs) {
    ordered_json dj;
    dj["generator"] = d.generator;
    dj["only_in_super"] = d.only_in_super;
    dj["only_in_sub"] = d.only_in_sub;
    diffs.push_back(std::move(dj));
  }
  j["diffs"] = std::move(diffs);
  return j;
}

}  // namespace

std::string render_law(const EvolutionAlgebra& a) {
  std::string out;
  for (std::size_t i = 1; i <= a.dimension(); ++i) {
    out += "e_" + std::to_string(i) + "^2 = " + render_terms(a.square_terms(i)) + "\n";
  }
  return out;
}

std::string render_element(const AlgebraElement& x) {
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (std::size_t i = 1; i <= x.dimension(); ++i) {
    if (x[i] != 0) terms.emplace_back(i, x[i]);
  }
  return render_terms(terms);
}

std::string export_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) out += "  e" + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  e" + std::to_string(e.u) + " -- e" + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t n = require_count(require_field(doc, "n"), "n");
  const json& edges = require_field(doc, "edges");
  if (!edges.is_array()) throw ParseError("field \"edges\" must be an array", "edges");
  std::vector<Edge> parsed;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string field = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("edge must be a pair of vertex indices", field);
    }
    parsed.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return Graph::make(n, parsed);
}

std::string serialize(const AlgebraDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["dimension"] = doc.algebra.dimension();
  if (doc.family) j["family"] = *doc.family;
  ordered_json structure = ordered_json::array();
  for (const Rational& r : doc.algebra.structure().data()) structure.push_back(to_string(r));
  j["structure"] = std::move(structure);
  return j.dump() + "\n";
}

AlgebraDocument deserialize(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t version = require_count(require_field(doc, "schema_version"), "schema_version");
  if (version != kAlgebraSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(version) + " (expected " +
                         std::to_string(kAlgebraSchemaVersion) + ")",
                     "schema_version");
  }
  const std::size_t n = require_count(require_field(doc, "dimension"), "dimension");
  if (n == 0) throw ParseError("dimension must be positive", "dimension");

  const json& structure = require_field(doc, "structure");
  if (!structure.is_array()) throw ParseError("field \"structure\" must be an array", "structure");
  if (structure.size() != n * n) {
    throw ParseError("structure has " + std::to_string(structure.size()) +
                         " entries; dimension " + std::to_string(n) + " requires " +
                         std::to_string(n * n),
                     "structure");
  }
  RationalMatrix m(n);
  for (std::size_t k = 0; k < structure.size(); ++k) {
    const std::string field = "structure[" + std::to_string(k) + "]";
    if (!structure[k].is_string()) throw ParseError("rational entries must be strings", field);
    try {
      m(k / n + 1, k % n + 1) = parse_rational(structure[k].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), field);
    }
  }

  std::optional<std::string> family;
  if (auto it = doc.find("family"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError("field \"family\" must be a string", "family");
    family = it->get<std::string>();
  }
  return AlgebraDocument{static_cast<std::uint32_t>(version), EvolutionAlgebra(std::move(m)),
                         std::move(family)};
}

bool is_algebra_document(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && doc.contains("schema_version");
}

AlgebraElement parse_element(std::string_view text, std::size_t dimension) {
  std::vector<Rational> coefficients;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coefficients.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coefficients.size() != dimension) {
    throw InvalidArgument("element has " + std::to_string(coefficients.size()) +
                          " coefficients; the algebra has dimension " + std::to_string(dimension));
  }
  return AlgebraElement(std::move(coefficients));
}

GeneratorMap parse_generator_map(std::string_view text) {
  const json doc = parse_json(text);
  const json& images = doc.is_object() ? require_field(doc, "images") : doc;
  if (!images.is_array()) throw ParseError("generator map must be an array of images", "images");
  std::vector<Vertex> parsed;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k].is_number_unsigned()) {
      throw ParseError("image must be a positive integer", "images[" + std::to_string(k) + "]");
    }
    parsed.push_back(images[k].get<Vertex>());
  }
  return GeneratorMap(std::move(parsed));
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["spec"] = to_string(report.spec);
  if (const auto* gp = std::get_if<family::GeneralizedPetersen>(&report.spec)) {
    if (auto alias = petersen_alias(*gp)) j["alias"] = std::string(*alias);
  }
  j["passed_all"] = report.passed_all;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["witness"] = c.witness;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  ordered_json errata = ordered_json::array();
  for (const Errata& e : report.errata) errata.push_back(errata_json(e));
  j["errata"] = std::move(errata);
  return j.dump(2) + "\n";
}

std::string chain_to_json(const ChainReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["passed"] = report.passed();
  j["steps"] = ordered_json::array({step_json(report.star_to_friendship),
                                    step_json(report.friendship_to_wheel)});
  ordered_json errata = ordered_json::array();
  for (const Errata& e : report.errata) errata.push_back(errata_json(e));
  j["errata"] = std::move(errata);
  return j.dump(2) + "\n";
}

std::string snark_certificate_to_json(const SnarkCertificate& cert) {
  ordered_json j;
  j["verdict"] = cert.verdict();
  j["is_cubic"] = cert.is_cubic;
  j["is_bridgeless"] = cert.is_bridgeless;
  j["girth"] = cert.girth ? ordered_json(*cert.girth) : ordered_json(nullptr);
  j["girth_threshold_used"] = cert.girth_threshold_used;
  j["three_edge_colorable"] = cert.three_edge_colorable;
  j["coloring_witness"] = cert.coloring_witness ? ordered_json(*cert.coloring_witness)
                                                : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace graphicable
