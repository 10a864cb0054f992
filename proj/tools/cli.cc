#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgebal/atlas.h"
#include "edgebal/balance.h"
#include "edgebal/classify.h"
#include "edgebal/edge_list.h"
#include "edgebal/errors.h"
#include "edgebal/generators.h"
#include "edgebal/graph6.h"
#include "edgebal/products.h"
#include "edgebal/report_json.h"
#include "edgebal/verifier.h"
#include "edgebal/version.h"

namespace edgebal::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kProductTooLarge:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTooLargeForExactIso:
      return kBudget;
    case ErrorCode::kParameterOutOfRange:
      return kUsage;
    default:
      return kInput;
  }
}

Json envelope(std::string_view command, Json parameters, std::string_view convention,
              Json payload) {
  Json j;
  j["tool"] = "edgebal";
  j["version"] = kVersion;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["convention"] = convention;
  j["payload"] = std::move(payload);
  return j;
}

// Writes the whole text at once; files go through a temporary and a rename.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format,
                               std::istream& in) {
  const std::string text = slurp(path, in);
  std::vector<Graph> graphs;
  if (format == "edgelist") {
    std::istringstream ss(text);
    graphs.push_back(read_edge_list(ss));
    return graphs;
  }
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  if (graphs.empty()) throw Error(ErrorCode::kMalformedHeader, "MalformedHeader: no graph on input");
  return graphs;
}

Convention convention_or(const std::string& text, Convention fallback) {
  if (text.empty()) return fallback;
  if (auto c = parse_convention(text)) return *c;
  throw UsageError("unknown convention '" + text + "' (expected strict or augmented)");
}

// "-" reads the next stdin line, "@path" the first line of a file, "family(..)"
// generates, anything else is taken as a graph6 string.
Graph operand(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line != "\r") return parse_graph6(line);
    }
    throw Error(ErrorCode::kMalformedHeader, "MalformedHeader: no graph on standard input");
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw Error(ErrorCode::kParseError, "cannot open '" + arg.substr(1) + "'");
    std::string line;
    std::getline(f, line);
    return parse_graph6(line);
  }
  if (arg.find('(') != std::string::npos) return generate_from_spec(arg);
  return parse_graph6(arg);
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Edge distance-balance invariants, graph products and claim audits", "edgebal"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a graph from a standard family");
  std::string family;
  std::vector<int> params;
  std::string gen_out = "graph6";
  bool gen_json = false;
  gen->add_option("family", family, "complete_bipartite | cycle | path | complete | hypercube | empty")
      ->required();
  gen->add_option("params", params, "Family parameters")->required();
  gen->add_option("--out", gen_out, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  gen->add_flag("--json", gen_json, "Wrap the graph in a JSON report envelope");

  // classify
  auto* cls = app.add_subcommand("classify", "Classification report for each input graph");
  std::string cls_in = "-";
  std::string cls_format = "graph6";
  std::string cls_conv;
  cls->add_option("--in", cls_in, "Input file or - for standard input");
  cls->add_option("--format", cls_format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cls->add_option("--convention", cls_conv, "strict | augmented (default augmented)");

  // index
  auto* idx = app.add_subcommand("index", "Szeged and edge-Szeged indices");
  bool want_sz = false;
  bool want_sze = false;
  std::string idx_in = "-";
  std::string idx_format = "graph6";
  std::string idx_conv;
  idx->add_flag("--szeged", want_sz, "Report the Szeged index");
  idx->add_flag("--edge-szeged", want_sze, "Report the edge-Szeged index");
  idx->add_option("--in", idx_in, "Input file or - for standard input");
  idx->add_option("--format", idx_format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  idx->add_option("--convention", idx_conv, "strict | augmented (default strict)");

  // product
  auto* prod = app.add_subcommand("product", "Cartesian or lexicographic product in graph6");
  bool cartesian = false;
  bool lexicographic = false;
  std::string lhs;
  std::string rhs;
  int vertex_budget = kDefaultVertexBudget;
  bool prod_json = false;
  auto* cart_flag = prod->add_flag("--cartesian", cartesian, "A x B");
  auto* lex_flag = prod->add_flag("--lexicographic", lexicographic, "A[B]");
  cart_flag->excludes(lex_flag);
  prod->add_option("A", lhs, "graph6, @file, family(params) or - for standard input")->required();
  prod->add_option("B", rhs, "graph6, @file, family(params) or - for standard input")->required();
  prod->add_option("--budget", vertex_budget, "Maximum product vertex count");
  prod->add_flag("--json", prod_json, "Wrap the graph in a JSON report envelope");

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "JSON-lines catalog of connected graphs");
  int enum_n = 0;
  std::string predicate = "true";
  std::string enum_conv;
  std::string enum_out;
  enu->add_option("--n", enum_n, "Largest vertex count (1..8)")->required();
  enu->add_option("--predicate", predicate,
                  "Comma-separated terms: bipartite, diameter=K, gt_edb=T, gt_db=T, "
                  "gt_sedb=T, gt_nedb, gt_ndb, edb, db, true, false; prefix ! negates");
  enu->add_option("--convention", enum_conv, "strict | augmented (default augmented)");
  enu->add_option("--out", enum_out, "Catalog file (default standard output)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the claim-audit suite");
  std::string checks;
  int budget = VerifyConfig{}.atlas_n_max;
  std::string ver_out;
  std::string ver_format = "json";
  int threads = 0;
  ver->add_option("--checks", checks, "Comma-separated subset of C1..C12");
  ver->add_option("--budget", budget, "Largest vertex count of exhaustive scans (2..8)");
  ver->add_option("--out", ver_out, "Report file (default standard output)");
  ver->add_option("--format", ver_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--threads", threads, "Worker threads (default EDGEBAL_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const Graph g = generate(family, params);
      Json parameters;
      parameters["family"] = family;
      parameters["params"] = params;
      parameters["out"] = gen_out;
      const std::string body = gen_out == "edgelist" ? to_edge_list(g) : to_graph6(g) + "\n";
      if (gen_json) {
        Json payload;
        payload["graph6"] = to_graph6(g);
        payload["n"] = g.vertex_count();
        payload["m"] = g.edge_count();
        emit(envelope("generate", parameters, "none", payload).dump() + "\n", "", out);
      } else {
        emit(body, "", out);
      }
      return kOk;
    }

    if (*cls) {
      const Convention conv = convention_or(cls_conv, Convention::kAugmented);
      std::string text;
      for (const Graph& g : read_graphs(cls_in, cls_format, in)) {
        Json parameters;
        parameters["in"] = cls_in;
        parameters["format"] = cls_format;
        Json payload{{"graph6", to_graph6(g)}};
        payload.update(to_json(full_report(g, conv)));
        text += envelope("classify", parameters, to_string(conv), payload).dump() + "\n";
      }
      emit(text, "", out);
      return kOk;
    }

    if (*idx) {
      const Convention conv = convention_or(idx_conv, Convention::kStrict);
      if (!want_sz && !want_sze) want_sz = want_sze = true;
      std::string text;
      for (const Graph& g : read_graphs(idx_in, idx_format, in)) {
        const DistanceMatrix d(g);
        require_connected(d, "index");
        Json parameters;
        parameters["szeged"] = want_sz;
        parameters["edge_szeged"] = want_sze;
        parameters["in"] = idx_in;
        parameters["format"] = idx_format;
        Json payload;
        payload["graph6"] = to_graph6(g);
        if (want_sz) payload["szeged"] = szeged_index(g, d);
        if (want_sze) payload["edge_szeged"] = edge_szeged_index(g, d, conv);
        text += envelope("index", parameters, to_string(conv), payload).dump() + "\n";
      }
      emit(text, "", out);
      return kOk;
    }

    if (*prod) {
      if (!cartesian && !lexicographic) throw UsageError("choose --cartesian or --lexicographic");
      const Graph a = operand(lhs, in);
      const Graph b = operand(rhs, in);
      const ProductOptions opts{vertex_budget};
      const Graph p = cartesian ? cartesian_product(a, b, opts) : lexicographic_product(a, b, opts);
      if (prod_json) {
        Json parameters;
        parameters["kind"] = cartesian ? "cartesian" : "lexicographic";
        parameters["A"] = to_graph6(a);
        parameters["B"] = to_graph6(b);
        parameters["budget"] = vertex_budget;
        Json payload;
        payload["graph6"] = to_graph6(p);
        payload["n"] = p.vertex_count();
        payload["m"] = p.edge_count();
        emit(envelope("product", parameters, "none", payload).dump() + "\n", "", out);
      } else {
        emit(to_graph6(p) + "\n", "", out);
      }
      return kOk;
    }

    if (*enu) {
      const Convention conv = convention_or(enum_conv, Convention::kAugmented);
      if (enum_n > kMaxAtlasVertices) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "BudgetExceeded: enumeration is limited to " +
                        std::to_string(kMaxAtlasVertices) + " vertices");
      }
      GraphPredicate accept;
      try {
        accept = parse_predicate(predicate);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      std::ostringstream text;
      write_catalog(text, search(accept, enum_n, conv));
      emit(text.str(), enum_out, out);
      return kOk;
    }

    if (*ver) {
      VerifyConfig config;
      config.atlas_n_max = budget;
      config.checks = split_ids(checks);
      config.threads = threads;
      const VerificationReport report = run_all(config);
      std::string text;
      if (ver_format == "text") {
        text = to_text(report);
      } else {
        Json parameters;
        parameters["checks"] = config.checks.empty() ? all_check_ids() : config.checks;
        parameters["budget"] = budget;
        text = envelope("verify", parameters, "both", to_json(report)).dump(2) + "\n";
      }
      emit(text, ver_out, out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "edgebal: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "edgebal: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "edgebal: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"edgebal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace edgebal::cli
