#include "forest_specht/check.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forest_specht/config.hpp"
#include "forest_specht/enumerate.hpp"
#include "forest_specht/graph.hpp"
#include "forest_specht/leaf_step.hpp"
#include "forest_specht/matching.hpp"
#include "forest_specht/specht.hpp"
#include "forest_specht/symfunc.hpp"
#include "forest_specht/tableaux.hpp"
#include "forest_specht/volume.hpp"
#include "json.hpp"

namespace forest {

namespace {

std::string str(const BigInt& v) { return to_string(v); }
std::string str(const Rational& v) { return to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }

template <class Map>
std::string str_map(const Map& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) s += ",";
    first = false;
    s += partition_key(k) + ":" + to_string(v);
  }
  return s + "}";
}

std::string str_mono(const MonomialExpansion& m) {
  std::string s = "{";
  for (const auto& [alpha, c] : m) {
    if (s.size() > 1) s += ",";
    s += "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
    s += "):" + to_string(c);
  }
  return s + "}";
}

std::string str_ids(const std::vector<int>& ids) {
  std::string s = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "]";
}

std::string str_h(const HPoly& p) { return str_map(p.terms()); }

std::string describe_diagram(const Diagram& d) {
  std::string s = to_ascii(d);
  std::replace(s.begin(), s.end(), '\n', '/');
  return s.empty() ? "(empty)" : s;
}

std::string describe_graph(const BipartiteGraph& g) { return g.empty() ? "(empty)" : g.describe(); }

SchurExpansion add_expansions(SchurExpansion a, const SchurExpansion& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return prune(std::move(a));
}

class Suite {
 public:
  explicit Suite(const CheckOptions& o) : opts_(o), rng_(o.seed) {}

  template <class L, class R>
  void record(const std::string& identity, const std::string& instance, const L& left, const R& right) {
    report_.records.push_back({identity, instance, left, right, left == right});
  }
  void record_ge(const std::string& identity, const std::string& instance, const BigInt& big, const BigInt& small) {
    report_.records.push_back({identity, instance, str(big), str(small), big >= small});
  }

  BigInt volume(const BipartiteGraph& g) {
    BigInt v = v_apm(g).value;
    if (opts_.inject_fault && !g.empty() && !g.is_star()) v += 1;
    return v;
  }

  BigInt dim(const Diagram& d) {
    std::string key = d.empty() ? "" : canonical_key(d);
    auto it = dims_.find(key);
    if (it != dims_.end()) return it->second;
    BigInt v = specht_dim(d);
    dims_.emplace(key, v);
    return v;
  }

  bool full() const { return opts_.scope == CheckScope::full; }

  void forests() {
    const int max_edges = full() ? 6 : 4;
    const int web_edges = full() ? 5 : 4;
    for (const auto& g : all_forests(max_edges)) {
      const std::string inst = describe_graph(g);
      const Diagram d = graph_to_diagram(g);
      const BigInt v = volume(g);
      record("volume.leaf_recurrence_route", inst, str(v), str(v_leaf(g).value));
      record("volume.ehrhart_route", inst, str(v), str(v_ehrhart(g).value));
      record("volume.standard_labelings", inst, str(v), str(count_standard_labelings(g)));
      record("specht.dimension_equals_volume", inst, str(v), str(dim(d)));
      const auto& primes = config().primes;
      if (primes.size() >= 2)
        record("specht.two_prime_agreement", inst, str(specht_dim_mod(d, primes[0])), str(specht_dim_mod(d, primes[1])));
      const HPoly s = s_forest(g);
      record("symfunc.exponential_specialization", inst, str(Rational(v)),
             str(Rational(factorial(g.num_edges())) * exp_specialize(s)));
      const SchurExpansion c = schur_coeffs(g);
      record("symfunc.schur_dimension_sum", inst, str(v), str(schur_dimension(c)));
      record("symfunc.schur_equals_specht_decomposition", inst, str_map(c), str_map(specht_decompose(d)));
      record("tableaux.standard_two_routes", inst, str(BigInt(standard_tableaux(d).size())),
             str(BigInt(standard_tableaux_by_matching(d).size())));
      record("tableaux.standard_count_equals_volume", inst, str(v), str(BigInt(standard_tableaux_by_matching(d).size())));

      for (int N = 2; N <= 3; ++N) {
        BigInt rhs = 0;
        for (const auto& y : diagram_strips(d)) {
          Diagram rest = d.without(y.boxes);
          rhs += rest.empty() ? BigInt(1) : BigInt(m_count(diagram_to_graph(rest), N - 1));
        }
        record("tableaux.strip_counting_identity", inst + " N=" + std::to_string(N), str(m_count(g, N)), str(rhs));
      }

      if (g.num_edges() > web_edges) continue;
      for (int N = 1; N <= 3; ++N) {
        const std::string ni = inst + " N=" + std::to_string(N);
        const std::uint64_t m = m_count(g, N);
        record("symfunc.principal_specialization", ni, str(m), str(principal_specialize(s, N)));
        record("tableaux.semistandard_count", ni, str(m), str(ssyt_count(d, N)));
        record("tableaux.tensor_span_dimension", ni, str(m), str(schur_tensor_span(d, N).dimension));
        auto gf = ssyt_generating_function(d, N);
        auto mono = monomial_expansion(c, N);
        std::erase_if(mono, [](const auto& e) { return e.second == 0; });
        record("tableaux.generating_function", ni, str_mono(gf), str_mono(mono));
      }
    }
  }

  void leaf_triples() {
    const int count = full() ? 100 : 15;
    for (int i = 0; i < count; ++i) {
      LeafTriple t = random_leaf_triple(full() ? 6 : 5, rng_);
      const std::string inst = describe_graph(t.g);
      record("recurrence.leaf_volume", inst, str(volume(t.g)), str(volume(t.g1) + volume(t.g2)));
      record("recurrence.leaf_schur_function", inst, str_map(schur_coeffs(t.g)),
             str_map(add_expansions(schur_coeffs(t.g1), schur_coeffs(t.g2))));
      record("recurrence.leaf_decomposition", inst, str_map(specht_decompose(graph_to_diagram(t.g))),
             str_map(add_expansions(specht_decompose(graph_to_diagram(t.g1)), specht_decompose(graph_to_diagram(t.g2)))));
    }
  }

  void apm_instances() {
    const int count = full() ? 100 : 15;
    for (int i = 0; i < count; ++i) {
      BipartiteGraph g = random_forest(uniform_int(rng_, 1, full() ? 7 : 5), rng_);
      auto apms = all_apms(g);
      const auto& m = apms[uniform_int(rng_, 0, static_cast<int>(apms.size()) - 1)];
      std::string inst = describe_graph(g) + " M=";
      for (int e : m) inst += std::to_string(e) + ",";
      BigInt sum = 0;
      SchurExpansion branches;
      for (int e : m) {
        auto h = g.without_edge(e);
        sum += volume(h);
        branches = add_expansions(branches, specht_decompose(graph_to_diagram(h)));
      }
      record("recurrence.matching_volume", inst, str(volume(g)), str(sum));
      record("recurrence.corner_branching", inst, str_map(restrict_one_box(schur_coeffs(g))), str_map(branches));
    }
  }

  void general_diagrams() {
    const int max_boxes = full() ? 5 : 4;
    for (const auto& d : all_diagrams(max_boxes)) {
      const std::string inst = describe_diagram(d);
      const BigInt whole = dim(d);
      record("specht.transpose_duality", inst, str(whole), str(dim(d.transposed())));
      auto g = diagram_to_graph(d);
      for (const auto& m : all_matchings(g)) {
        if (m.empty() || !is_special(g, m)) continue;
        BigInt sum = 0;
        for (int x : m) sum += dim(d.without({x}));
        std::string mi = inst + " U=";
        for (int x : m) mi += std::to_string(x) + ",";
        record_ge("inequality.restriction_bound", mi, whole, sum);
      }
      for (int a = 0; a < d.size(); ++a)
        for (int b = 0; b < d.size(); ++b) {
          Box b1 = d.box(a), b2 = d.box(b);
          if (b1.row >= b2.row || b1.col == b2.col) continue;
          if (d.contains({b1.row, b2.col}) || d.contains({b2.row, b1.col})) continue;
          auto [da, db] = split_diagram(d, b1, b2);
          record_ge("inequality.split_bound", inst + " split=" + std::to_string(a) + "," + std::to_string(b), whole,
                    dim(da) + dim(db));
        }
    }
  }

  void core() {
    const int diagram_boxes = full() ? 6 : 4;
    for (const auto& d : all_diagrams(diagram_boxes)) {
      const std::string inst = describe_diagram(d);
      auto g = diagram_to_graph(d);
      record("core.diagram_graph_round_trip", inst, canonical_key(d), canonical_key(graph_to_diagram(g)));
      if (d.size() > 5) continue;
      for (const auto& m : all_matchings(g)) {
        bool standardizes = true;
        try {
          standard_form(d, Transversal{m});
        } catch (const DiagramError&) {
          standardizes = false;
        }
        std::string mi = inst + " U=";
        for (int x : m) mi += std::to_string(x) + ",";
        record("core.standard_form_iff_special", mi, std::string(standardizes ? "true" : "false"),
               std::string(is_special(g, m) ? "true" : "false"));
      }
    }
    std::vector<BipartiteGraph> forests_list = all_forests(full() ? 7 : 5);
    for (int i = 0; i < (full() ? 100 : 20); ++i) forests_list.push_back(random_forest(8, rng_));
    for (const auto& g : forests_list) {
      const std::string inst = describe_graph(g);
      record("core.found_matching_is_almost_perfect", inst, std::string("true"),
             std::string(is_almost_perfect(g, find_apm(g).edges) ? "true" : "false"));
      if (g.num_edges() > 5) continue;
      bool all_special = true;
      for (const auto& m : all_matchings(g)) all_special = all_special && is_special(g, m);
      record("core.forest_matchings_special", inst, std::string("true"), std::string(all_special ? "true" : "false"));
      if (g.is_connected() && !g.is_white_star()) {
        int root = g.least_white();
        LeafStep st = leaf_step(g, root);
        record_ge("core.leaf_step_shrinks_distance_sum", inst, BigInt(distance_sum(g, root)),
                  BigInt(distance_sum(st.gp, root) + 1));
        record("core.leaf_step_disconnects", inst, std::string("false"),
               std::string(st.h.is_connected() ? "true" : "false"));
      }
    }
  }

  void volume_extra() {
    const int max_edges = full() ? 6 : 4;
    for (const auto& g : all_forests(max_edges)) {
      const std::string inst = describe_graph(g);
      const BigInt v = volume(g);
      record("volume.color_invariance", inst, str(v), str(volume(g.flipped_colors())));
      std::vector<ApmChoice> choices = {canonical_apm_choice(), last_apm_choice(), hashed_apm_choice(opts_.seed)};
      for (const auto& top : all_apms(g)) {
        auto fixed = g;
        choices.push_back([fixed, top](const BipartiteGraph& h) {
          return same_graph(h, fixed) ? top : find_apm(h).edges;
        });
      }
      for (std::size_t c = 0; c < choices.size(); ++c)
        record("volume.labeling_choice_independence", inst + " choice=" + std::to_string(c), str(v),
               str(count_standard_labelings(g, choices[c])));
      // m_count is a polynomial of degree n in N
      const int n = g.num_edges();
      Rational predicted = 0;
      for (int t = 1; t <= n + 1; ++t) {
        Rational term = Rational(BigInt(m_count(g, t)));
        for (int s = 1; s <= n + 1; ++s)
          if (s != t) term *= make_rational(BigInt(n + 2 - s), BigInt(t - s));
        predicted += term;
      }
      record("volume.m_count_polynomial", inst, str(Rational(BigInt(m_count(g, n + 2)))), str(predicted));
    }
    for (int i = 0; i < (full() ? 200 : 20); ++i) {
      BipartiteGraph g = random_forest(uniform_int(rng_, 1, full() ? 10 : 7), rng_);
      const std::string inst = describe_graph(g);
      const BigInt v = volume(g);
      record("volume.random_leaf_route", inst, str(v), str(v_leaf(g).value));
      record("volume.random_standard_labelings", inst, str(v), str(count_standard_labelings(g)));
      if (g.num_edges() <= config().ehrhart_max_n)
        record("volume.random_ehrhart_route", inst, str(v), str(v_ehrhart(g).value));
    }
    for (int i = 0; i < (full() ? 50 : 10); ++i) {
      BipartiteGraph a = random_forest(uniform_int(rng_, 1, 4), rng_);
      BipartiteGraph b = random_forest(uniform_int(rng_, 1, 4), rng_);
      BipartiteGraph u = a.disjoint_union(b);
      const int n = u.num_edges(), m = a.num_edges();
      const std::string inst = describe_graph(a) + " + " + describe_graph(b);
      record("volume.product_rule", inst, str(volume(u) * factorial(m) * factorial(n - m)),
             str(factorial(n) * volume(a) * volume(b)));
      record("symfunc.multiplicativity", inst, str_h(s_forest(u)), str_h(s_forest(a) * s_forest(b)));
    }
  }

  void symfunc_extra() {
    for (int n = 1; n <= (full() ? 6 : 4); ++n) {
      auto parts = partitions_of(n);
      for (const auto& lam : parts)
        for (const auto& mu : parts) {
          BigInt sum = 0;
          for (const auto& rho : parts) sum += factorial(n) / centralizer_size(rho) * mn_char(lam, rho) * mn_char(mu, rho);
          record("symfunc.character_orthogonality", partition_key(lam) + " " + partition_key(mu), str(sum),
                 str(lam == mu ? factorial(n) : BigInt(0)));
        }
    }
    // the extension of arbitrary star values by the two rules factors through s
    std::vector<Rational> value(8);
    for (auto& x : value) x = make_rational(BigInt(uniform_int(rng_, -9, 9)), BigInt(uniform_int(rng_, 1, 5)));
    LeafRecurrence<Rational> ext([&](int k) { return value.at(k); },
                                 [](const std::vector<std::pair<Rational, int>>& parts) {
                                   Rational r = 1;
                                   for (const auto& p : parts) r *= p.first;
                                   return r;
                                 });
    for (const auto& g : all_forests(full() ? 5 : 4)) {
      Rational via_s = 0;
      const HPoly s = s_forest(g);
      for (const auto& [mu, c] : s.terms()) {
        Rational t = Rational(c);
        for (int part : mu) t *= value.at(part);
        via_s += t;
      }
      record("symfunc.universality", describe_graph(g), str(ext(g)), str(via_s));
    }
    if (full())
      for (const auto& g : all_forests(7)) {
        if (g.num_edges() < 7) continue;
        const BigInt v = volume(g);
        record("symfunc.exponential_specialization", describe_graph(g), str(Rational(v)),
               str(Rational(factorial(7)) * exp_specialize(s_forest(g))));
        record("symfunc.schur_dimension_sum", describe_graph(g), str(v), str(schur_dimension(schur_coeffs(g))));
      }
  }

  void tableaux_extra() {
    for (const auto& g : all_forests(full() ? 6 : 4)) {
      const std::string inst = describe_graph(g);
      const Diagram d = graph_to_diagram(g);
      auto strips = diagram_strips(d);
      std::vector<int> singles;
      bool columns_ok = true;
      for (const auto& y : strips) {
        if (y.boxes.size() == 1) singles.push_back(y.boxes[0]);
        std::set<int> cols;
        for (int b : y.boxes) columns_ok = columns_ok && cols.insert(d.box(b).col).second;
      }
      auto apm = chosen_transversal(d).boxes;
      std::sort(apm.begin(), apm.end());
      std::sort(singles.begin(), singles.end());
      record("tableaux.single_box_strips_are_matching", inst, str_ids(singles), str_ids(apm));
      record("tableaux.strip_column_rule", inst, std::string(columns_ok ? "true" : "false"), std::string("true"));
      for (int N = 1; N <= 3; ++N) {
        BigInt rhs = 0;
        for (const auto& y : strips) rhs += ssyt_count(d.without(y.boxes), N - 1);
        record("tableaux.branching_identity", inst + " N=" + std::to_string(N), str(ssyt_count(d, N)), str(rhs));
      }
      if (g.num_edges() > 5) continue;
      std::vector<ApmChoice> choices = {last_apm_choice(), hashed_apm_choice(opts_.seed)};
      auto base_graph = diagram_to_graph(d);
      for (const auto& top : all_apms(base_graph)) {
        choices.push_back([base_graph, top](const BipartiteGraph& h) {
          return same_graph(h, base_graph) ? top : find_apm(h).edges;
        });
      }
      for (int N = 1; N <= 3; ++N) {
        const BigInt reference = ssyt_count(d, N);
        for (std::size_t c = 0; c < choices.size(); ++c)
          record("tableaux.semistandard_choice_robustness",
                 inst + " N=" + std::to_string(N) + " choice=" + std::to_string(c), str(reference),
                 str(ssyt_count(d, N, choices[c])));
      }
      for (std::size_t c = 0; c < choices.size(); ++c)
        record("tableaux.standard_choice_robustness", inst + " choice=" + std::to_string(c),
               str(BigInt(standard_tableaux_by_matching(d).size())),
               str(BigInt(standard_tableaux_by_matching(d, choices[c]).size())));
    }
  }

  CheckReport finish() {
    auto& r = report_.records;
    std::stable_sort(r.begin(), r.end(), [](const CheckRecord& x, const CheckRecord& y) {
      return std::tie(x.identity, x.instance) < std::tie(y.identity, y.instance);
    });
    for (const auto& rec : r) (rec.pass ? report_.passed : report_.failed)++;
    return std::move(report_);
  }

 private:
  CheckOptions opts_;
  Rng rng_;
  CheckReport report_;
  std::map<std::string, BigInt> dims_;
};

}  // namespace

std::vector<std::string> CheckReport::identities() const {
  std::vector<std::string> out;
  for (const auto& r : records)
    if (out.empty() || out.back() != r.identity) out.push_back(r.identity);
  return out;
}

CheckReport run_check(const CheckOptions& opts) {
  Suite s(opts);
  s.core();
  s.forests();
  s.volume_extra();
  s.symfunc_extra();
  s.tableaux_extra();
  s.leaf_triples();
  s.apm_instances();
  s.general_diagrams();
  return s.finish();
}

std::string check_report_json(const CheckReport& r, bool pretty) {
  nlohmann::ordered_json j;
  j["ok"] = r.ok();
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  nlohmann::ordered_json ids = nlohmann::ordered_json::object();
  for (const auto& rec : r.records) {
    auto& e = ids[rec.identity];
    if (e.is_null()) e = {{"passed", 0}, {"failed", 0}};
    e[rec.pass ? "passed" : "failed"] = e[rec.pass ? "passed" : "failed"].get<int>() + 1;
  }
  j["identities"] = ids;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& rec : r.records)
    if (!rec.pass)
      fails.push_back({{"identity", rec.identity}, {"instance", rec.instance}, {"left", rec.left}, {"right", rec.right}});
  j["failures"] = fails;
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace forest
