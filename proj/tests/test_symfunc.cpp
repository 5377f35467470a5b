#include "doctest.h"
#include "forest_specht/enumerate.hpp"
#include "forest_specht/graph.hpp"
#include "forest_specht/leaf_step.hpp"
#include "forest_specht/symfunc.hpp"
#include "forest_specht/volume.hpp"
#include "oracles.hpp"

using namespace forest;

namespace {

SchurExpansion sx(std::initializer_list<std::pair<Partition, int>> l) {
  SchurExpansion s;
  for (auto& [k, v] : l) s[k] = v;
  return s;
}

}  // namespace

TEST_CASE("h products") {
  CHECK(HPoly::h({2}) * HPoly::h({1}) == HPoly::h({2, 1}));
  CHECK(hpoly_mul(HPoly::h({1}), HPoly::h({1})) == HPoly::h({1, 1}));
  HPoly e2 = HPoly::h({1, 1}) - HPoly::h({2});
  CHECK(e2 * HPoly::one() == e2);
  CHECK((e2 - e2).is_zero());
  CHECK(e2.degree() == 2);
  CHECK_THROWS((e2 + HPoly::h({1})).degree());
}

TEST_CASE("forest symmetric functions") {
  for (int n = 1; n <= 6; ++n) CHECK(s_forest(make_star(n)) == HPoly::h({n}));
  CHECK(s_forest(make_star(2, Color::black)) == HPoly::h({1, 1}) - HPoly::h({2}));
  CHECK(s_forest(make_path(3)) == HPoly::h({2, 1}) - HPoly::h({3}));
  CHECK(s_forest(BipartiteGraph()) == HPoly::one());
  for (const auto& g : all_forests(6)) CHECK(s_forest(g).degree() == g.num_edges());
}

TEST_CASE("kostka numbers") {
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({1, 1}, {2}) == 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(kostka(lam, lam) == 1);
      for (const auto& mu : partitions_of(n)) {
        CHECK(kostka(lam, mu) == oracle::kostka(lam, mu));
        if (!dominates(lam, mu)) CHECK(kostka(lam, mu) == 0);
      }
    }
  CHECK_THROWS(kostka({2}, {1}));
}

TEST_CASE("basis change") {
  CHECK(h_to_schur(HPoly::h({3})) == sx({{{3}, 1}}));
  CHECK(h_to_schur(HPoly::h({1, 1, 1})) == sx({{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
  CHECK(h_to_schur(HPoly::h({1, 1}) - HPoly::h({2})) == sx({{{1, 1}, 1}}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      HPoly p = HPoly::h(mu, 3) - HPoly::h({n});
      CHECK(schur_to_h(h_to_schur(p)) == p);
      SchurExpansion s = sx({{mu, 1}});
      CHECK(h_to_schur(schur_to_h(s)) == s);
    }
  CHECK_THROWS(h_to_schur(HPoly::h({2}) + HPoly::h({1})));
}

TEST_CASE("schur coefficients of forests") {
  for (int n = 1; n <= 5; ++n) CHECK(schur_coeffs(make_star(n)) == sx({{{n}, 1}}));
  CHECK(schur_coeffs(make_path(3)) == sx({{{2, 1}, 1}}));
  CHECK(schur_dimension(schur_coeffs(make_path(4))) == 5);
  for (const auto& g : all_forests(7)) {
    auto c = schur_coeffs(g);
    for (auto& [lam, v] : c) CHECK(v >= 0);
    auto v = v_apm(g).value;
    CHECK(schur_dimension(c) == v);
    CHECK(Rational(factorial(g.num_edges())) * exp_specialize(s_forest(g)) == Rational(v));
  }
}

TEST_CASE("hook lengths") {
  CHECK(hook_dim({4}) == 1);
  CHECK(hook_dim({2, 2}) == 2);
  CHECK(hook_dim({2, 1}) == 2);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(hook_dim(lam) == oracle::standard_young_tableaux(lam));
      CHECK(syt_count(lam) == hook_dim(lam));
    }
}

TEST_CASE("specializations") {
  CHECK(exp_specialize(HPoly::h({3})) == make_rational(1, 6));
  CHECK(exp_specialize(s_forest(make_path(3))) == make_rational(2, 6));
  CHECK(exp_specialize(HPoly::h({1, 1})) == 1);
  for (int n = 1; n <= 5; ++n)
    for (int N = 1; N <= 4; ++N) CHECK(principal_specialize(HPoly::h({n}), N) == binomial(n + N - 1, n));
  CHECK(principal_specialize(s_forest(make_path(3)), 2) == 2);
  HPoly p = HPoly::h({2, 1}, 4) - HPoly::h({3}, 7);
  CHECK(principal_specialize(p, 1) == -3);
  CHECK_THROWS(principal_specialize(p, 0));
  for (const auto& g : all_forests(6))
    for (int N = 1; N <= 3; ++N) CHECK(principal_specialize(s_forest(g), N) == BigInt(m_count(g, N)));
}

TEST_CASE("characters") {
  for (const auto& rho : partitions_of(4)) CHECK(mn_char({4}, rho) == 1);
  CHECK(mn_char({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_char({2, 1}, {3}) == -1);
  CHECK(mn_char({2, 1}, {2, 1}) == 0);
  CHECK(mn_char({1, 1, 1}, {2, 1}) == -1);
  for (int n = 1; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (const auto& lam : parts) {
      CHECK(mn_char(lam, Partition(n, 1)) == hook_dim(lam));
      for (const auto& mu : parts) {
        BigInt sum = 0;
        for (const auto& rho : parts) sum += factorial(n) / centralizer_size(rho) * mn_char(lam, rho) * mn_char(mu, rho);
        CHECK(sum == (lam == mu ? factorial(n) : BigInt(0)));
      }
    }
  }
  CHECK_THROWS(mn_char({2}, {1}));
}

TEST_CASE("multiplicativity and leaf recurrence") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    auto a = random_forest(uniform_int(rng, 1, 4), rng);
    auto b = random_forest(uniform_int(rng, 1, 4), rng);
    CHECK(s_forest(a.disjoint_union(b)) == hpoly_mul(s_forest(a), s_forest(b)));
  }
  for (int i = 0; i < 100; ++i) {
    auto t = random_leaf_triple(6, rng);
    CHECK(s_forest(t.g) == s_forest(t.g1) + s_forest(t.g2));
  }
}

namespace {

// Integers modulo a prime, just enough for the universality check.
struct Mod {
  static constexpr std::int64_t m = 1000003;
  std::int64_t v = 0;
  Mod() = default;
  Mod(std::int64_t x) : v(((x % m) + m) % m) {}
  friend Mod operator-(Mod a, Mod b) { return Mod(a.v - b.v); }
  friend Mod operator*(Mod a, Mod b) { return Mod(a.v * b.v); }
  friend bool operator==(Mod a, Mod b) { return a.v == b.v; }
};

template <class T>
void check_universality(const std::vector<T>& value) {
  LeafRecurrence<T> ext([&](int k) { return value.at(k); },
                        [](const std::vector<std::pair<T, int>>& parts) {
                          T r(1);
                          for (const auto& p : parts) r = r * p.first;
                          return r;
                        });
  for (const auto& g : all_forests(5)) {
    T via_s(0);
    const HPoly s = s_forest(g);
    for (const auto& [mu, c] : s.terms()) {
      T t(static_cast<std::int64_t>(c));
      for (int part : mu) t = t * value.at(part);
      via_s = via_s - (T(0) - t);
    }
    CHECK(ext(g) == via_s);
  }
}

}  // namespace

TEST_CASE("extension of star values factors through s") {
  Rng rng(5);
  std::vector<Mod> mods(7);
  for (auto& x : mods) x = Mod(uniform_int(rng, 0, 1000002));
  check_universality(mods);
  std::vector<Rational> rats(7);
  for (auto& x : rats) x = make_rational(uniform_int(rng, -20, 20), uniform_int(rng, 1, 9));
  check_universality(rats);
}
