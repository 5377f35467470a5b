// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "forest_specht/config.hpp"
#include "forest_specht/enumerate.hpp"
#include "forest_specht/matching.hpp"
#include "forest_specht/specht.hpp"
#include "forest_specht/symfunc.hpp"
#include "forest_specht/tableaux.hpp"
#include "forest_specht/volume.hpp"

using namespace forest;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

bool report(int id, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = t.failures == 0;
  std::printf("%s %d %s (%ld checks, %.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), t.checks, secs,
              ok ? "" : " first failure: ", ok ? "" : t.first.c_str());
  std::fflush(stdout);
  return ok;
}

template <class F>
double timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BipartiteGraph c4() { return make_cycle(4); }

SchurExpansion add(SchurExpansion a, const SchurExpansion& b) {
  for (auto& [k, v] : b) a[k] += v;
  return prune(a);
}

BigInt strip_sum(const Diagram& d, int N) {
  BigInt s = 0;
  for (const auto& y : diagram_strips(d)) s += BigInt(m_count(diagram_to_graph(d.without(y.boxes)), N - 1));
  return s;
}

}  // namespace

int main() {
  configure_threads_from_env();
  bool all = true;

  all &= report(1, "pinned values: stars, C4, rows", [](Tally& t) {
    Config c = config();
    c.ehrhart_max_n = 10;
    set_config(c);
    for (int n = 1; n <= 10; ++n) {
      auto g = make_star(n);
      std::string tag = "T_" + std::to_string(n);
      double s = timed([&] {
        t.expect(v_apm(g).value == 1, tag + " apm");
        t.expect(v_leaf(g).value == 1, tag + " leaf");
        t.expect(v_ehrhart(g).value == 1, tag + " ehrhart");
        t.expect(count_standard_labelings(g) == 1, tag + " labelings");
      });
      t.expect(s < 1.0, tag + " time");
    }
    double s = timed([&] {
      t.expect(v_ehrhart(c4()).value == 4, "C4 ehrhart");
      t.expect(specht_dim(graph_to_diagram(c4())) == 2, "C4 specht");
    });
    t.expect(s < 1.0, "C4 time");
    for (int n = 1; n <= config().specht_max_n; ++n) {
      double r = timed([&] { t.expect(specht_dim(Diagram::from_partition({n})) == 1, "row " + std::to_string(n)); });
      t.expect(r < 1.0, "row time");
    }
  });
  set_config(Config{});

  all &= report(2, "main theorem on forests up to 6 edges and 50 random 7-edge forests", [](Tally& t) {
    auto check = [&](const BipartiteGraph& g) {
      auto v = v_apm(g).value;
      t.expect(v_leaf(g).value == v, g.describe() + " leaf");
      t.expect(count_standard_labelings(g) == v, g.describe() + " labelings");
      t.expect(specht_dim(graph_to_diagram(g)) == v, g.describe() + " specht");
    };
    for (const auto& g : all_forests(6)) check(g);
    Rng rng(20240607);
    for (int i = 0; i < 50; ++i) check(random_forest(7, rng));
  });

  all &= report(3, "Ehrhart interpolation matches the recursion", [](Tally& t) {
    for (const auto& g : all_forests(6)) t.expect(v_ehrhart(g) == v_apm(g), g.describe());
  });

  all &= report(4, "symmetric function identities", [](Tally& t) {
    for (const auto& g : all_forests(6)) {
      auto v = v_apm(g).value;
      const HPoly s = s_forest(g);
      t.expect(Rational(factorial(g.num_edges())) * exp_specialize(s) == Rational(v), g.describe() + " exp");
      auto c = h_to_schur(s);
      t.expect(schur_dimension(c) == v, g.describe() + " dimension");
      for (auto& [lam, x] : c) t.expect(x >= 0, g.describe() + " positivity");
      t.expect(c == specht_decompose(graph_to_diagram(g)), g.describe() + " decomposition");
    }
  });

  all &= report(5, "specializations, tableaux and tensor spans", [](Tally& t) {
    for (const auto& g : all_forests(5)) {
      auto d = graph_to_diagram(g);
      const HPoly s = s_forest(g);
      auto c = schur_coeffs(g);
      for (int N = 1; N <= 3; ++N) {
        std::string tag = g.describe() + " N=" + std::to_string(N);
        BigInt m(m_count(g, N));
        t.expect(principal_specialize(s, N) == m, tag + " principal");
        t.expect(ssyt_count(d, N) == m, tag + " ssyt");
        t.expect(schur_tensor_span(d, N).dimension == m, tag + " tensor");
        auto mono = monomial_expansion(c, N);
        std::erase_if(mono, [](const auto& e) { return e.second == 0; });
        t.expect(ssyt_generating_function(d, N) == mono, tag + " content");
      }
    }
  });

  all &= report(6, "recurrence suites", [](Tally& t) {
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
      auto tr = random_leaf_triple(7, rng);
      std::string tag = tr.g.describe();
      t.expect(v_apm(tr.g).value == v_apm(tr.g1).value + v_apm(tr.g2).value, tag + " volume");
      t.expect(s_forest(tr.g) == s_forest(tr.g1) + s_forest(tr.g2), tag + " s");
      t.expect(specht_decompose(graph_to_diagram(tr.g)) ==
                   add(specht_decompose(graph_to_diagram(tr.g1)), specht_decompose(graph_to_diagram(tr.g2))),
               tag + " decomposition");
    }
    for (int i = 0; i < 100; ++i) {
      auto g = random_forest(uniform_int(rng, 1, 7), rng);
      auto apms = all_apms(g);
      const auto& m = apms[uniform_int(rng, 0, static_cast<int>(apms.size()) - 1)];
      BigInt sum = 0;
      SchurExpansion branches;
      for (int e : m) {
        auto h = g.without_edge(e);
        sum += v_apm(h).value;
        branches = add(branches, specht_decompose(graph_to_diagram(h)));
      }
      t.expect(sum == v_apm(g).value, g.describe() + " matching recursion");
      t.expect(restrict_one_box(schur_coeffs(g)) == branches, g.describe() + " corners");
    }
    for (const auto& g : all_forests(6))
      for (int N = 2; N <= 3; ++N) {
        auto d = graph_to_diagram(g);
        t.expect(BigInt(m_count(g, N)) == strip_sum(d, N), g.describe() + " strips N=" + std::to_string(N));
      }
  });

  all &= report(7, "counts do not depend on the matching choice", [](Tally& t) {
    for (const auto& g : all_forests(5)) {
      auto d = graph_to_diagram(g);
      auto dg = diagram_to_graph(d);
      auto labels = count_standard_labelings(g);
      auto standard = standard_tableaux(d).size();
      std::vector<BigInt> ss;
      for (int N = 1; N <= 3; ++N) ss.push_back(ssyt_count(d, N));
      for (const auto& top : all_apms(g)) {
        ApmChoice forced = [&](const BipartiteGraph& h) { return same_graph(h, g) ? top : find_apm(h).edges; };
        t.expect(count_standard_labelings(g, forced) == labels, g.describe() + " labelings");
      }
      for (const auto& top : all_apms(dg)) {
        ApmChoice forced = [&](const BipartiteGraph& h) { return same_graph(h, dg) ? top : find_apm(h).edges; };
        t.expect(standard_tableaux(d, forced).size() == standard, g.describe() + " standard tableaux");
        for (int N = 1; N <= 3; ++N) t.expect(ssyt_count(d, N, forced) == ss[N - 1], g.describe() + " ssyt");
      }
      for (const auto& other : {last_apm_choice(), hashed_apm_choice(1), hashed_apm_choice(2)}) {
        t.expect(count_standard_labelings(g, other) == labels, g.describe() + " labelings");
        for (int N = 1; N <= 3; ++N) t.expect(ssyt_count(d, N, other) == ss[N - 1], g.describe() + " ssyt");
      }
    }
  });

  all &= report(8, "restriction and split bounds on general diagrams", [](Tally& t) {
    for (const auto& d : all_diagrams(5)) {
      std::string tag = to_ascii(d);
      auto whole = specht_dim_exact(d);
      t.expect(whole == specht_dim(d), tag + " modular rank");
      auto g = diagram_to_graph(d);
      for (const auto& m : all_matchings(g)) {
        if (m.empty() || !is_special(g, m)) continue;
        BigInt sum = 0;
        for (int x : m) sum += specht_dim_exact(d.without({x}));
        t.expect(whole >= sum, tag + " restriction");
      }
      for (const auto& b1 : d.boxes())
        for (const auto& b2 : d.boxes()) {
          if (b1.row >= b2.row || b1.col == b2.col) continue;
          if (d.contains({b1.row, b2.col}) || d.contains({b2.row, b1.col})) continue;
          auto [da, db] = split_diagram(d, b1, b2);
          t.expect(whole >= specht_dim_exact(da) + specht_dim_exact(db), tag + " split");
        }
    }
  });

  return all ? 0 : 1;
}
