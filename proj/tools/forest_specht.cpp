// forest-specht: command-line front end.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "forest_specht/check.hpp"
#include "forest_specht/config.hpp"
#include "forest_specht/diagram.hpp"
#include "forest_specht/enumerate.hpp"
#include "forest_specht/graph_io.hpp"
#include "forest_specht/specht.hpp"
#include "forest_specht/symfunc.hpp"
#include "forest_specht/tableaux.hpp"
#include "forest_specht/volume.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace forest;

namespace {

// Exit statuses.
constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const BigInt& v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return to_string(v);
}

std::string weight_key(const std::vector<int>& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
  return s;
}

template <class Map>
json partition_map(const Map& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[partition_key(k)] = big(v);
  return j;
}

json weight_map(const MonomialExpansion& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[weight_key(k)] = big(v);
  return j;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Two-column table for --pretty: nested objects are flattened with dots.
void table_rows(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) table_rows(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && !j.empty() && j.front().is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) table_rows(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, scalar_text(j));
  }
}

void emit(const json& j, bool pretty) {
  if (!pretty) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  table_rows(j, "", rows);
  std::size_t w = 0;
  for (auto& r : rows) w = std::max(w, r.first.size());
  for (auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
}

BipartiteGraph load_graph(const std::string& path) { return parse_graph_json(read_file(path)); }

// Graph JSON or an ASCII diagram, told apart by the first non-blank character.
Diagram load_diagram(const std::string& path) {
  std::string text = read_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    auto g = parse_graph_json(text);
    return graph_to_diagram(g);
  }
  return parse_diagram_ascii(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching polytopes, Specht modules and tableaux of forests"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  std::string config_path;
  Config overrides = config();
  std::vector<std::uint32_t> primes;
  app.add_flag("--pretty", pretty, "human-readable table instead of JSON");
  app.add_option("--config", config_path, "JSON file with caps and primes");
  auto* o_specht = app.add_option("--specht-max-n", overrides.specht_max_n, "largest diagram for Specht computations");
  auto* o_sym = app.add_option("--symmetrizer-max-terms", overrides.symmetrizer_max_terms, "cap on |C_D| * |R_D|");
  auto* o_tensor = app.add_option("--tensor-max", overrides.tensor_max, "cap on N^n for tensor spans");
  auto* o_ehr = app.add_option("--ehrhart-max-n", overrides.ehrhart_max_n, "largest graph for Ehrhart interpolation");
  auto* o_exact = app.add_option("--exact-rank-max-n", overrides.exact_rank_max_n, "largest diagram for rational rank");
  auto* o_primes = app.add_option("--prime", primes, "prime moduli for ranks (repeatable)");

  // volume
  auto* volume = app.add_subcommand("volume", "normalized volume of the matching polytope");
  std::string volume_in, method = "apm";
  bool all_methods = false;
  volume->add_option("graph", volume_in, "graph JSON")->required();
  volume->add_option("--method", method, "apm|leaf|ehrhart|labelings")
      ->check(CLI::IsMember({"apm", "leaf", "ehrhart", "labelings"}));
  volume->add_flag("--all", all_methods, "every route");

  // schurfun
  auto* schurfun = app.add_subcommand("schurfun", "the symmetric function of a forest");
  std::string schur_in, basis = "h";
  int principal = -1;
  bool exponential = false;
  schurfun->add_option("graph", schur_in, "graph JSON")->required();
  schurfun->add_option("--basis", basis, "h|s")->check(CLI::IsMember({"h", "s"}));
  schurfun->add_option("--principal", principal, "evaluate at 1^N")->check(CLI::NonNegativeNumber);
  schurfun->add_flag("--exp", exponential, "exponential specialization");

  // specht
  auto* specht = app.add_subcommand("specht", "Specht and Schur module invariants");
  std::string specht_in;
  bool with_character = false, with_decompose = false;
  int tensor_n = -1;
  specht->add_option("input", specht_in, "graph JSON or ASCII diagram")->required();
  specht->add_flag("--character", with_character, "character by cycle type");
  specht->add_flag("--decompose", with_decompose, "multiplicities of irreducibles");
  specht->add_option("--tensor", tensor_n, "Schur module in N variables")->check(CLI::NonNegativeNumber);

  // tableaux
  auto* tableaux = app.add_subcommand("tableaux", "semistandard and standard tableaux");
  std::string tab_in;
  int n_labels = -1;
  bool list = false, count = false, content = false, standard = false;
  tableaux->add_option("input", tab_in, "graph JSON or ASCII diagram")->required();
  tableaux->add_option("--n-labels", n_labels, "largest label N")->check(CLI::NonNegativeNumber);
  tableaux->add_flag("--list", list, "list tableaux");
  tableaux->add_flag("--count", count, "count tableaux");
  tableaux->add_flag("--content", content, "count by content");
  tableaux->add_flag("--standard", standard, "standard tableaux");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string kind;
  std::vector<int> params;
  std::uint64_t gen_seed = 1;
  gen->add_option("kind", kind, "path|star|caterpillar|random-forest")
      ->required()
      ->check(CLI::IsMember({"path", "star", "caterpillar", "random-forest"}));
  gen->add_option("params", params, "sizes")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "random seed");

  // check
  auto* check = app.add_subcommand("check", "run the identity cross-checks");
  std::string scope = "small";
  std::uint64_t check_seed = 1;
  bool inject = false;
  check->add_option("scope", scope, "small|full")->check(CLI::IsMember({"small", "full"}));
  check->add_option("--seed", check_seed, "random seed");
  check->add_flag("--inject-fault", inject, "corrupt the volume (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    configure_threads_from_env();
    Config cfg = config();
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (*o_specht) cfg.specht_max_n = overrides.specht_max_n;
    if (*o_sym) cfg.symmetrizer_max_terms = overrides.symmetrizer_max_terms;
    if (*o_tensor) cfg.tensor_max = overrides.tensor_max;
    if (*o_ehr) cfg.ehrhart_max_n = overrides.ehrhart_max_n;
    if (*o_exact) cfg.exact_rank_max_n = overrides.exact_rank_max_n;
    if (*o_primes) {
      for (auto p : primes)
        if (!is_prime(p) || p < (1u << 30)) throw UsageError("prime must be a prime above 2^30: " + std::to_string(p));
      cfg.primes = primes;
    }
    set_config(cfg);

    if (*volume) {
      auto g = load_graph(volume_in);
      auto run = [&](const std::string& m) -> BigInt {
        if (m == "apm") return v_apm(g).value;
        if (m == "leaf") return v_leaf(g).value;
        if (m == "ehrhart") return v_ehrhart(g).value;
        return count_standard_labelings(g);
      };
      json j;
      if (all_methods) {
        for (const char* m : {"apm", "leaf", "ehrhart", "labelings"}) j[m] = big(run(m));
      } else {
        j["volume"] = big(run(method));
      }
      emit(j, pretty);
    } else if (*schurfun) {
      auto g = load_graph(schur_in);
      HPoly s = s_forest(g);
      json j;
      if (principal >= 0 || exponential) {
        if (principal >= 0) j["principal"] = big(principal_specialize(s, principal));
        if (exponential) j["exponential"] = to_string(exp_specialize(s));
      } else if (basis == "s") {
        j = partition_map(schur_coeffs(g));
      } else {
        j = partition_map(s.terms());
      }
      emit(j, pretty);
    } else if (*specht) {
      Diagram d = load_diagram(specht_in);
      json j;
      if (tensor_n >= 0) {
        auto t = schur_tensor_span(d, tensor_n);
        j["dimension"] = big(t.dimension);
        j["character"] = weight_map(t.character);
      } else {
        auto rep = specht_report(d, with_character, with_decompose);
        j["dimension"] = big(rep.dimension);
        if (with_character) j["character"] = partition_map(rep.character);
        if (with_decompose) j["decomposition"] = partition_map(rep.decomposition);
      }
      emit(j, pretty);
    } else if (*tableaux) {
      Diagram d = load_diagram(tab_in);
      json j;
      auto labels_json = [](const std::vector<ForestTableau>& ts) {
        json a = json::array();
        for (const auto& t : ts) a.push_back(t.labels);
        return a;
      };
      if (standard) {
        auto ts = standard_tableaux(d);
        j["count"] = ts.size();
        if (list) j["tableaux"] = labels_json(ts);
      } else {
        if (n_labels < 0) throw UsageError("tableaux needs --n-labels N or --standard");
        if (!list && !content) count = true;
        if (count) j["count"] = big(ssyt_count(d, n_labels));
        if (content) j["content"] = weight_map(ssyt_generating_function(d, n_labels));
        if (list) j["tableaux"] = labels_json(ssyt_enumerate(d, n_labels));
      }
      emit(j, pretty);
    } else if (*gen) {
      auto need = [&](std::size_t k) {
        if (params.size() != k) throw UsageError("gen " + kind + " takes " + std::to_string(k) + " size argument(s)");
      };
      BipartiteGraph g;
      if (kind == "path") {
        need(1);
        g = make_path(params[0]);
      } else if (kind == "star") {
        need(1);
        g = make_star(params[0]);
      } else if (kind == "caterpillar") {
        need(2);
        g = make_caterpillar(params[0], params[1]);
      } else {
        need(1);
        Rng rng(gen_seed);
        g = random_forest(params[0], rng);
      }
      std::string text = to_graph_json(g);
      if (pretty) text = json::parse(text).dump(2);
      std::cout << text << "\n";
    } else if (*check) {
      CheckOptions opts;
      opts.scope = scope == "full" ? CheckScope::full : CheckScope::small;
      opts.seed = check_seed;
      opts.inject_fault = inject;
      auto rep = run_check(opts);
      std::cout << check_report_json(rep, pretty) << "\n";
      return rep.ok() ? exit_ok : exit_domain;
    }
    return exit_ok;
  } catch (const UsageError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return exit_usage;
  } catch (const CapExceeded& e) {
    std::cerr << json{{"error", e.what()}, {"cap", e.cap()}}.dump() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return exit_domain;
  }
}
