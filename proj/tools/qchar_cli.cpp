// qchar: compute and check q-characters of fundamental representations.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qchar/cache.hpp"
#include "qchar/qchar.hpp"
#include "qchar/serialize.hpp"

namespace {

using namespace qchar;

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kEngineFailed = 3, kLimits = 4 };

struct EngineFailure : std::runtime_error {
  EngineFailure(int code, Json diag) : std::runtime_error(diag.dump()), code(code), diag(std::move(diag)) {}
  int code;
  Json diag;
};

struct CommonOptions {
  std::string cache_dir;
  bool no_cache = false;
  bool gzip = false;
  std::size_t max_terms = Limits{}.max_terms;
  std::size_t max_steps = Limits{}.max_steps;
  std::string order = "height-lex";
  bool progress = false;

  void attach(CLI::App* sub) {
    sub->add_option("--cache-dir", cache_dir, "cache directory (default: $QCHAR_CACHE_DIR or ./qchar-cache)");
    sub->add_flag("--no-cache", no_cache, "neither read nor write the cache");
    sub->add_flag("--gzip", gzip, "write gzip-compressed cache files");
    sub->add_option("--max-terms", max_terms, "abort when the character exceeds this many monomials");
    sub->add_option("--max-steps", max_steps, "abort after this many i-expansions");
    sub->add_option("--order", order, "frontier order")->check(CLI::IsMember({"height-lex", "height-revlex"}));
    sub->add_flag("--progress", progress, "report engine progress on stderr");
  }

  RunOptions run_options() const {
    RunOptions o;
    o.limits = {max_terms, max_steps};
    o.order = order == "height-revlex" ? TotalOrder::HeightRevLex : TotalOrder::HeightLex;
    if (progress)
      o.progress = [](const EngineStats& s) {
        if (s.batches % 256 == 0)
          std::fprintf(stderr, "batches %zu, expansions %zu, terms %zu\n", s.batches, s.expansions, s.max_terms);
      };
    return o;
  }
};

/// Fundamental characters through the file cache.
const QCharacter& fundamental(const RootData& rd, Node i, const CommonOptions& opt, FundamentalTable& table) {
  if (table.has(i)) return table.get(i);
  if (i < 1 || i > rd.rank()) throw std::out_of_range("node " + std::to_string(i) + " outside " + rd.name());
  const CacheKey key{rd.type(), rd.rank(), i};
  std::optional<CharacterCache> cache;
  if (!opt.no_cache) cache.emplace(resolve_cache_dir(opt.cache_dir.empty() ? std::nullopt : std::optional(opt.cache_dir)), opt.gzip);
  if (cache) {
    std::string why;
    if (auto hit = cache->load(key, &why)) {
      table.put(i, std::move(*hit));
      return table.get(i);
    }
    if (!why.empty()) std::cerr << "cache: " << why << "; recomputing\n";
  }
  const auto t0 = std::chrono::steady_clock::now();
  RunResult res = run_fundamental(rd, i, 0, opt.run_options());
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!res.ok()) {
    Json d{{"error", to_string(res.status)}, {"type", std::string(1, to_char(rd.type()))}, {"rank", rd.rank()},
           {"node", i}, {"message", res.message}};
    if (res.failed_at) d["at"] = res.failed_at->to_string();
    if (res.failed_direction) d["direction"] = *res.failed_direction;
    throw EngineFailure(res.status == RunStatus::LimitExceeded ? kLimits : kEngineFailed, d);
  }
  if (cache) cache->store(key, res.character, ms);
  table.put(i, std::move(res.character));
  return table.get(i);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json report_to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", rep.passed()}, {"checks", checks}};
}

void validate_nodes(const RootData& rd, const QCharacter& chi) {
  for (const auto& [m, c] : chi.terms())
    for (const auto& f : m.factors())
      if (f.node < 1 || f.node > rd.rank())
        throw ParseError("monomial " + m.to_string() + " uses node " + std::to_string(f.node) + " outside " + rd.name());
}

TensorFactor parse_tensor_factor(const std::string& s) {
  const auto at = s.find('@');
  if (at == std::string::npos) throw CLI::ValidationError("tensor factor", "expected node@shift, got " + s);
  try {
    std::size_t used = 0;
    const int node = std::stoi(s.substr(0, at), &used);
    if (used != at) throw std::invalid_argument(s);
    const int shift = std::stoi(s.substr(at + 1), &used);
    if (used != s.size() - at - 1) throw std::invalid_argument(s);
    return {node, shift};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("tensor factor", "expected node@shift, got " + s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-characters of fundamental representations of quantum affine algebras"};
  app.require_subcommand(1);

  std::string type_s;
  int rank = 0;
  Node node = 0;
  CommonOptions common;
  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("type", type_s, "Lie type letter A-G")->required();
    sub->add_option("rank", rank, "rank")->required();
    common.attach(sub);
  };

  auto* compute = app.add_subcommand("compute", "compute the q-character of V_{omega_i}(1)");
  add_datum(compute);
  compute->add_option("node", node, "Dynkin node (Bourbaki numbering)");
  bool all_nodes = false;
  compute->add_flag("--all-nodes", all_nodes, "compute every fundamental character (JSON array)");

  auto* verify = app.add_subcommand("verify", "check a character: screening kernels and structural properties");
  std::string input_path, text, v_type;
  int v_rank = 0;
  verify->add_option("file", input_path, "character JSON file, or - for stdin");
  verify->add_option("--text", text, "character in text form, e.g. \"[Y{1,0}^1] + [Y{1,2}^-1]\"");
  verify->add_option("--type", v_type, "Lie type for --text input");
  verify->add_option("--rank", v_rank, "rank for --text input");

  auto* poles = app.add_subcommand("poles", "shifts k where V_i(1) (x) V_j(q^k) is reducible");
  add_datum(poles);
  Node node_j = 0;
  std::vector<int> window;
  poles->add_option("i", node, "first node")->required();
  poles->add_option("j", node_j, "second node")->required();
  poles->add_option("--window", window, "scan every k in [lo, hi] instead of the default range")->expected(2);

  auto* tensor = app.add_subcommand("tensor", "dominant-monomial reducibility test for a tensor product");
  add_datum(tensor);
  std::vector<std::string> factor_specs;
  tensor->add_option("factors", factor_specs, "factors node@shift, after --")->required();

  auto* dual = app.add_subcommand("dual", "dual character and comparison with V_{bar i}(q^{-r h})");
  add_datum(dual);
  dual->add_option("node", node, "Dynkin node")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction to the subalgebra of a node subset J");
  add_datum(restrict_cmd);
  std::vector<int> subset;
  restrict_cmd->add_option("node", node, "Dynkin node")->required();
  restrict_cmd->add_option("--J", subset, "nodes of J, comma separated")->required()->delimiter(',');

  auto* graph = app.add_subcommand("graph", "monomial graph of a fundamental character");
  add_datum(graph);
  graph->add_option("node", node, "Dynkin node")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) {
      CharacterDocument doc;
      if (!text.empty()) {
        if (v_type.empty() || v_rank == 0) throw std::invalid_argument("--text needs --type and --rank");
        doc.type = parse_lie_type(v_type);
        doc.rank = v_rank;
        doc.character = parse_character_text(text);
      } else if (!input_path.empty()) {
        doc = parse_document(read_input(input_path));
      } else {
        throw std::invalid_argument("verify needs a file or --text");
      }
      const RootData rd = make_root_data(doc.type, doc.rank);
      validate_nodes(rd, doc.character);
      const auto rep = verify_character(rd, doc.character);
      std::cout << report_to_json(rep).dump() << "\n";
      return rep.passed() ? kOk : kVerifyFailed;
    }

    const RootData rd = make_root_data(parse_lie_type(type_s), rank);
    FundamentalTable table(rd, common.run_options(), false);

    if (compute->parsed()) {
      if (all_nodes == (node != 0)) throw std::invalid_argument("give exactly one of a node or --all-nodes");
      if (all_nodes) {
        Json out = Json::array();
        for (Node i = 1; i <= rd.rank(); ++i)
          out.push_back(document_to_json({rd.type(), rd.rank(), i, fundamental(rd, i, common, table)}));
        std::cout << out.dump() << "\n";
      } else {
        std::cout << document_to_json({rd.type(), rd.rank(), node, fundamental(rd, node, common, table)}).dump() << "\n";
      }
      return kOk;
    }

    if (poles->parsed()) {
      fundamental(rd, node, common, table);
      fundamental(rd, node_j, common, table);
      std::optional<std::pair<int, int>> w;
      if (!window.empty()) w = std::pair{window[0], window[1]};
      Json out{{"k", pole_candidates(rd, node, node_j, table, w)}, {"bound", {2, rd.rh()}}};
      std::cerr << "poles lie in 2 <= |k| <= " << rd.rh() << " (r^vee h^vee)\n";
      std::cout << out.dump() << "\n";
      return kOk;
    }

    if (tensor->parsed()) {
      std::vector<TensorFactor> fs;
      for (const auto& s : factor_specs) {
        fs.push_back(parse_tensor_factor(s));
        fundamental(rd, fs.back().node, common, table);
      }
      auto res = tensor_scan(rd, table, fs);
      Json wit = Json::array();
      for (const auto& [m, c] : res.witnesses) wit.push_back({{"m", monomial_to_json(m)}, {"c", c.str()}});
      std::cout << Json{{"reducible", res.reducible()}, {"highest", monomial_to_json(res.highest)}, {"witnesses", wit}}.dump()
                << "\n";
      return kOk;
    }

    if (dual->parsed()) {
      const QCharacter d = dual_character(fundamental(rd, node, common, table));
      const Node b = rd.bar(node);
      const bool matches = d == fundamental(rd, b, common, table).shifted(-rd.rh());
      std::cout << Json{{"bar", b}, {"shift", -rd.rh()}, {"matches", matches}, {"terms", character_to_json(d)}}.dump()
                << "\n";
      return matches ? kOk : kVerifyFailed;
    }

    if (restrict_cmd->parsed()) {
      NodeSet J(subset);
      J.validate(rd);
      Json groups = Json::array();
      for (const auto& g : group_by_z(rd, J, fundamental(rd, node, common, table)))
        groups.push_back({{"z", g.z_part.to_string()}, {"terms", character_to_json(g.y_character)}});
      std::cout << Json{{"J", J.nodes()}, {"groups", groups}}.dump() << "\n";
      return kOk;
    }

    if (graph->parsed()) {
      const auto g = build_graph(rd, fundamental(rd, node, common, table));
      Json vs = Json::array(), es = Json::array();
      for (const auto& v : g.vertices) vs.push_back(v.to_string());
      for (const auto& e : g.edges) es.push_back({e.from, e.to, e.color, e.shift});
      std::size_t root = 0;
      const auto top = YMonomial::variable(node, 0);
      while (root < g.vertices.size() && g.vertices[root] != top) ++root;
      std::cout << Json{{"vertices", vs}, {"edges", es}, {"connected", is_connected(g)}, {"rooted", is_rooted_at(g, root)}}
                       .dump()
                << "\n";
      return kOk;
    }
  } catch (const EngineFailure& f) {
    std::cerr << f.diag.dump() << "\n";
    return f.code;
  } catch (const ParseError& e) {
    std::cerr << Json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "invalid"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  return kUsage;
}
