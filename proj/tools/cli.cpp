#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "graphicable/algebra.hpp"
#include "graphicable/analysis.hpp"
#include "graphicable/embeddings.hpp"
#include "graphicable/errors.hpp"
#include "graphicable/families.hpp"
#include "graphicable/io.hpp"
#include "json.hpp"

namespace graphicable::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FamilySpec parse_valid_spec(const std::string& text) {
  FamilySpec spec = parse_family_spec(text);
  validate(spec);
  return spec;
}

int verdict(bool ok) { return ok ? kSuccess : kPropertyFails; }

int cmd_generate(const std::string& spec_text, const std::string& format, std::ostream& out) {
  const Graph g = generate_graph(parse_valid_spec(spec_text));
  out << (format == "dot" ? export_dot(g) : graph_to_json(g));
  return kSuccess;
}

int cmd_law(const std::string& spec_text, const std::string& format, std::ostream& out) {
  const FamilySpec spec = parse_valid_spec(spec_text);
  EvolutionAlgebra law = family_law(spec);
  if (format == "json") {
    out << serialize(AlgebraDocument{kAlgebraSchemaVersion, std::move(law), to_string(spec)});
  } else {
    out << render_law(law);
  }
  return kSuccess;
}

int cmd_verify_one(const std::string& spec_text, std::ostream& out) {
  const VerificationReport report = verify_family(parse_valid_spec(spec_text));
  out << report_to_json(report);
  return verdict(report.passed_all);
}

int cmd_verify_all(std::ostream& out) {
  const std::vector<FamilySpec> grid = ci_grid();
  std::vector<char> passed(grid.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  // Audits are pure, so the grid fans out across worker threads.
  auto worker = [&] {
    for (std::size_t k = next++; k < grid.size(); k = next++) {
      try {
        passed[k] = verify_family(grid[k]).passed_all ? 1 : 0;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  nlohmann::ordered_json summary;
  std::vector<std::string> failed;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!passed[k]) failed.push_back(to_string(grid[k]));
  }
  summary["total"] = grid.size();
  summary["passed"] = grid.size() - failed.size();
  summary["failed"] = failed;
  out << summary.dump(2) << "\n";
  return verdict(failed.empty());
}

Graph load_graph(const std::string& text) {
  if (is_algebra_document(text)) return graph_from_algebra(deserialize(text).algebra);
  return graph_from_json(text);
}

int cmd_check(const std::string& path, bool s_graphicable, bool snark, bool hamiltonian,
              bool friendship, std::size_t girth_threshold, std::ostream& out) {
  const std::string text = read_file(path);
  nlohmann::ordered_json result;

  if (s_graphicable) {
    const EvolutionAlgebra a = is_algebra_document(text) ? deserialize(text).algebra
                                                         : algebra_from_graph(graph_from_json(text));
    const auto violation = s_graphicable_violation(a);
    result["s_graphicable"] = !violation;
    if (violation) {
      result["violation"] = violation->describe();
      result["witness"] = {violation->row, violation->column};
    }
    out << result.dump(2) << "\n";
    return verdict(!violation);
  }

  const Graph g = load_graph(text);
  if (snark) {
    const SnarkCertificate cert = check_snark(g, girth_threshold);
    out << snark_certificate_to_json(cert);
    return verdict(cert.verdict());
  }
  if (hamiltonian) {
    const auto cycle = find_hamiltonian_cycle(g);
    result["hamiltonian"] = cycle.has_value();
    result["cycle"] = cycle ? nlohmann::ordered_json(*cycle) : nlohmann::ordered_json(nullptr);
    out << result.dump(2) << "\n";
    return verdict(cycle.has_value());
  }
  (void)friendship;
  const FriendshipCheck f = has_friendship_property(g);
  result["friendship"] = f.holds;
  if (f.witness) {
    result["witness"] = {f.witness->first, f.witness->second};
    result["common_neighbors"] = f.witness_common_neighbors;
  }
  out << result.dump(2) << "\n";
  return verdict(f.holds);
}

int cmd_embed(const std::string& from_text, const std::string& to_text,
              const std::string& map_path, std::ostream& out) {
  const FamilySpec from = parse_valid_spec(from_text);
  const FamilySpec to = parse_valid_spec(to_text);
  const EvolutionAlgebra sub = family_law(from);
  const EvolutionAlgebra sup = family_law(to);
  const GeneratorMap map = map_path.empty() ? GeneratorMap::identity(sub.dimension())
                                            : parse_generator_map(read_file(map_path));
  const bool embedded = law_embedding(sub, sup, map);

  nlohmann::ordered_json result;
  result["from"] = to_string(from);
  result["to"] = to_string(to);
  result["map"] = map.images();
  result["embedded"] = embedded;
  nlohmann::ordered_json diffs = nlohmann::ordered_json::array();
  for (const LawDiff& d : law_term_diff(sub, sup, map)) {
    if (d.empty()) continue;
    diffs.push_back({{"generator", d.generator},
                     {"only_in_super", d.only_in_super},
                     {"only_in_sub", d.only_in_sub}});
  }
  result["diffs"] = std::move(diffs);
  out << result.dump(2) << "\n";
  return verdict(embedded);
}

int cmd_mul(const std::string& path, const std::string& lhs, const std::string& rhs,
            const std::string& format, std::ostream& out) {
  const AlgebraDocument doc = deserialize(read_file(path));
  const AlgebraElement x = parse_element(lhs, doc.algebra.dimension());
  const AlgebraElement y = parse_element(rhs, doc.algebra.dimension());
  const AlgebraElement product = multiply(doc.algebra, x, y);
  if (format == "json") {
    nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
    for (const Rational& c : product.coefficients()) coefficients.push_back(to_string(c));
    out << coefficients.dump() << "\n";
  } else {
    out << render_element(product) << "\n";
  }
  return kSuccess;
}

int cmd_chain(std::size_t n, std::ostream& out) {
  const ChainReport report = theorem_chain(n);
  out << chain_to_json(report);
  return verdict(report.passed());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphicable evolution algebras: families, laws and structural audits",
               "graphicable"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string spec_a, spec_b, format = "json", file, map_path, lhs, rhs;
  std::size_t chain_n = 0;
  std::size_t girth_threshold = 5;
  bool all = false, s_graphicable = false, snark = false, hamiltonian = false, friendship = false;

  auto* generate = app.add_subcommand("generate", "Emit a family graph as JSON or DOT");
  generate->add_option("spec", spec_a, "Family spec, e.g. friendship:3")->required();
  generate->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();

  auto* law = app.add_subcommand("law", "Print a family's algebra law");
  std::string law_format = "text";
  law->add_option("spec", spec_a, "Family spec")->required();
  law->add_option("--format", law_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Audit a family (exit 0 iff every check passes)");
  verify->add_option("spec", spec_a, "Family spec");
  verify->add_flag("--all", all, "Audit the whole CI parameter grid");

  auto* check = app.add_subcommand("check", "Check one property of a graph or algebra file");
  check->add_option("file", file, "Graph JSON or algebra document")->required();
  auto* property = check->add_option_group("property");
  property->add_flag("--s-graphicable", s_graphicable, "0/1, symmetric, zero diagonal");
  property->add_flag("--snark", snark, "Cubic, bridgeless, girth, not 3-edge-colorable");
  property->add_flag("--hamiltonian", hamiltonian, "Find a Hamiltonian cycle");
  property->add_flag("--friendship", friendship, "Every pair has exactly one common neighbour");
  property->require_option(1);
  check->add_option("--girth-threshold", girth_threshold, "Girth bound for --snark")
      ->capture_default_str();

  auto* embed = app.add_subcommand("embed", "Law embedding of specA's algebra into specB's");
  embed->add_option("specA", spec_a, "Smaller family")->required();
  embed->add_option("specB", spec_b, "Larger family")->required();
  embed->add_option("--map", map_path, "JSON generator map file (default: identity)");

  auto* mul = app.add_subcommand("mul", "Multiply two elements of an algebra document");
  std::string mul_format = "text";
  mul->add_option("file", file, "Algebra document")->required();
  mul->add_option("x", lhs, "Comma-separated coefficients")->required();
  mul->add_option("y", rhs, "Comma-separated coefficients")->required();
  mul->add_option("--format", mul_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* chain = app.add_subcommand("chain", "Audit the star < friendship < wheel chain");
  chain->add_option("n", chain_n, "Number of friendship triangles (n >= 2)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (*generate) return cmd_generate(spec_a, format, out);
    if (*law) return cmd_law(spec_a, law_format, out);
    if (*verify) {
      if (all == !spec_a.empty()) {
        err << "error: verify takes exactly one of <spec> or --all\n";
        return kUsageError;
      }
      return all ? cmd_verify_all(out) : cmd_verify_one(spec_a, out);
    }
    if (*check) return cmd_check(file, s_graphicable, snark, hamiltonian, friendship, girth_threshold, out);
    if (*embed) return cmd_embed(spec_a, spec_b, map_path, out);
    if (*mul) return cmd_mul(file, lhs, rhs, mul_format, out);
    if (*chain) return cmd_chain(chain_n, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: resource bound exceeded: " << e.what() << "\n";
    return kResourceBound;
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (!e.field().empty()) err << " [field: " << e.field() << "]";
    err << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace graphicable::cli
