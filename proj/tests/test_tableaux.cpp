#include <algorithm>
#include <set>

#include "doctest.h"
#include "forest_specht/enumerate.hpp"
#include "forest_specht/matching.hpp"
#include "forest_specht/specht.hpp"
#include "forest_specht/tableaux.hpp"
#include "forest_specht/volume.hpp"

using namespace forest;

namespace {

std::vector<std::vector<int>> strip_sets(const std::vector<HorizontalStrip>& s) {
  std::vector<std::vector<int>> out;
  for (const auto& y : s) out.push_back(y.boxes);
  return out;
}

StandardFormDiagram sfd_of(std::vector<Box> boxes, std::vector<int> u) {
  return standard_form(Diagram(std::move(boxes)), Transversal{std::move(u)});
}

Diagram column(int n) { return Diagram::from_partition(std::vector<int>(n, 1)); }

// Strips of d for the choice, with box ids of d.
std::vector<HorizontalStrip> strips(const Diagram& d, const ApmChoice& c = canonical_apm_choice()) {
  return diagram_strips(d, c);
}

BigInt sum_over_strips(const Diagram& d, int N, const std::function<BigInt(const Diagram&, int)>& f) {
  BigInt s = 0;
  for (const auto& y : strips(d)) s += f(d.without(y.boxes), N - 1);
  return s;
}

}  // namespace

TEST_CASE("derived transversal") {
  auto single = sfd_of({{1, 1}}, {0});
  CHECK(derive_u_prime(single).boxes.empty());
  auto p3 = sfd_of({{1, 1}, {1, 2}, {2, 1}}, {0});
  CHECK(p3.diagram.box(0) == Box{1, 1});
  CHECK(derive_u_prime(p3).boxes == std::vector<int>{1});
  auto diag = sfd_of({{1, 1}, {2, 2}}, {0, 1});
  CHECK(derive_u_prime(diag).boxes == std::vector<int>{0});
  auto empty = sfd_of({{1, 1}, {1, 2}}, {});
  CHECK_THROWS_AS(derive_u_prime(empty), DiagramError);
}

TEST_CASE("derived transversal is an APM of the smaller diagram") {
  for (const auto& g : all_forests(6)) {
    auto d = graph_to_diagram(g);
    auto sfd = standard_form(d, chosen_transversal(d));
    auto up = derive_u_prime(sfd);
    const int u = static_cast<int>(sfd.transversal.boxes.size());
    std::vector<int> col_u;
    for (int i = 0; i < sfd.diagram.size(); ++i)
      if (sfd.diagram.box(i).col == u) col_u.push_back(i);
    // map ids of the full diagram onto the diagram with column u removed
    std::vector<int> remap(sfd.diagram.size(), -1);
    int next = 0;
    for (int i = 0; i < sfd.diagram.size(); ++i)
      if (std::find(col_u.begin(), col_u.end(), i) == col_u.end()) remap[i] = next++;
    auto dp = sfd.diagram.without(col_u);
    std::vector<int> edges;
    for (int b : up.boxes) {
      REQUIRE(remap[b] >= 0);
      edges.push_back(remap[b]);
    }
    auto gp = diagram_to_graph(dp);
    CHECK(is_almost_perfect(gp, edges));
  }
}

TEST_CASE("strip examples") {
  CHECK(strip_sets(horizontal_strips(sfd_of({{1, 1}}, {0}))) == std::vector<std::vector<int>>{{}, {0}});
  CHECK(strip_sets(horizontal_strips(sfd_of({{1, 1}, {1, 2}, {2, 1}}, {0}))) ==
        std::vector<std::vector<int>>{{}, {0}, {0, 1}});
  CHECK(strip_sets(horizontal_strips(sfd_of({{1, 1}, {2, 2}}, {0, 1}))) ==
        std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}});
  CHECK(strip_sets(strips(Diagram())) == std::vector<std::vector<int>>{{}});
  // a row is a partition: every subset of boxes ending at the right is a strip
  CHECK(strips(Diagram::from_partition({3})).size() == 4);
}

TEST_CASE("strips against matchings and columns") {
  for (const auto& g : all_forests(6)) {
    auto d = graph_to_diagram(g);
    auto u = chosen_transversal(d);
    auto ys = strips(d);
    std::set<int> singles;
    for (const auto& y : ys) {
      std::set<int> cols;
      for (int b : y.boxes) CHECK(cols.insert(d.box(b).col).second);
      if (y.boxes.size() == 1) singles.insert(y.boxes[0]);
    }
    CHECK(singles == std::set<int>(u.boxes.begin(), u.boxes.end()));
    auto apm = canonical_apm_choice()(diagram_to_graph(d));
    CHECK(singles == std::set<int>(apm.begin(), apm.end()));
  }
}

TEST_CASE("semistandard counts") {
  for (int n = 1; n <= 5; ++n)
    for (int N = 1; N <= 4; ++N) CHECK(ssyt_count(Diagram::from_partition({n}), N) == binomial(n + N - 1, n));
  auto p3 = graph_to_diagram(make_path(3));
  CHECK(ssyt_count(p3, 2) == 2);
  CHECK(ssyt_enumerate(p3, 2).size() == 2);
  CHECK(ssyt_count(Diagram(), 3) == 1);
  CHECK(ssyt_count(Diagram(), 0) == 1);
  CHECK(ssyt_count(column(2), 1) == 0);
  CHECK(ssyt_count(Diagram::from_partition({3}), 1) == 1);
  auto all = ssyt_enumerate(graph_to_diagram(make_path(4)), 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("generating function examples") {
  CHECK(ssyt_generating_function(Diagram::from_partition({2}), 2) ==
        MonomialExpansion{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(ssyt_generating_function(graph_to_diagram(make_path(3)), 2) ==
        MonomialExpansion{{{2, 1}, 1}, {{1, 2}, 1}});
  CHECK(ssyt_generating_function(column(2), 2) == MonomialExpansion{{{1, 1}, 1}});
}

TEST_CASE("standard tableaux") {
  for (int n = 1; n <= 6; ++n) CHECK(standard_tableaux(graph_to_diagram(make_star(n))).size() == 1);
  CHECK(standard_tableaux(graph_to_diagram(make_path(3))).size() == 2);
  CHECK(standard_tableaux(graph_to_diagram(make_path(4))).size() == 5);
  for (const auto& g : all_forests(6)) {
    auto d = graph_to_diagram(g);
    auto a = standard_tableaux(d);
    auto b = standard_tableaux_by_matching(d);
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(BigInt(a.size()) == v_apm(g).value);
    if (g.num_edges() <= 5) CHECK(BigInt(a.size()) == specht_dim(d));
    for (const auto& t : a) {
      auto labels = t.labels;
      std::sort(labels.begin(), labels.end());
      for (int i = 0; i < d.size(); ++i) CHECK(labels[i] == i + 1);
    }
  }
}

TEST_CASE("counting and branching identities") {
  auto m = [](const Diagram& d, int N) { return BigInt(m_count(diagram_to_graph(d), N)); };
  auto ss = [](const Diagram& d, int N) { return ssyt_count(d, N); };
  for (const auto& g : all_forests(6))
    for (int N = 2; N <= 3; ++N) {
      auto d = graph_to_diagram(g);
      CHECK(m(d, N) == sum_over_strips(d, N, m));
      CHECK(ss(d, N) == sum_over_strips(d, N, ss));
    }
}

TEST_CASE("tableaux agree with the other routes") {
  for (const auto& g : all_forests(5))
    for (int N = 1; N <= 3; ++N) {
      auto d = graph_to_diagram(g);
      auto c = ssyt_count(d, N);
      CHECK(c == BigInt(m_count(g, N)));
      CHECK(c == principal_specialize(s_forest(g), N));
      CHECK(c == schur_tensor_span(d, N).dimension);
      auto mono = monomial_expansion(schur_coeffs(g), N);
      std::erase_if(mono, [](const auto& e) { return e.second == 0; });
      CHECK(ssyt_generating_function(d, N) == mono);
    }
}

TEST_CASE("counts do not depend on the matching") {
  for (const auto& g : all_forests(5)) {
    auto d = graph_to_diagram(g);
    auto dg = diagram_to_graph(d);
    for (int N = 2; N <= 3; ++N) {
      auto c = ssyt_count(d, N);
      CHECK(ssyt_count(d, N, last_apm_choice()) == c);
      CHECK(ssyt_count(d, N, hashed_apm_choice(3)) == c);
      for (const auto& top : all_apms(dg)) {
        ApmChoice forced = [&](const BipartiteGraph& h) { return same_graph(h, dg) ? top : find_apm(h).edges; };
        CHECK(ssyt_count(d, N, forced) == c);
      }
    }
    CHECK(standard_tableaux(d, last_apm_choice()).size() == standard_tableaux(d).size());
  }
}

TEST_CASE("non-forest input") {
  auto c4 = Diagram::from_partition({2, 2});
  CHECK_THROWS_AS(ssyt_count(c4, 2), DiagramError);
  CHECK_THROWS_AS(standard_tableaux(c4), DiagramError);
}
