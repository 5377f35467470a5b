#include "forest_specht/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "forest_specht/leaf_step.hpp"
#include "forest_specht/memo.hpp"

namespace forest {

namespace {

MemoTable<BigInt> kostka_memo;
MemoTable<BigInt> mn_memo;
MemoTable<HPoly> s_memo;

}  // namespace

HPoly HPoly::h(const Partition& mu, BigInt coeff) {
  HPoly p;
  p.add(normalize_partition(mu), coeff);
  return p;
}

void HPoly::add(const Partition& mu, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int HPoly::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw std::invalid_argument("HPoly is not homogeneous");
  return partition_size(terms_.begin()->first);
}

bool HPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = partition_size(terms_.begin()->first);
  for (const auto& [mu, c] : terms_)
    if (partition_size(mu) != d) return false;
  return true;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  for (const auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  for (const auto& [mu, c] : o.terms_) add(mu, -c);
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly out;
  for (const auto& [mu, c] : a.terms_)
    for (const auto& [nu, d] : b.terms_) {
      Partition merged = mu;
      merged.insert(merged.end(), nu.begin(), nu.end());
      out.add(normalize_partition(merged), c * d);
    }
  return out;
}

HPoly hpoly_mul(const HPoly& a, const HPoly& b) { return a * b; }

HPoly s_forest(const BipartiteGraph& g) {
  if (!g.is_forest()) throw GraphError("s_forest needs a forest");
  std::string key = g.canonical_key();
  if (auto hit = s_memo.find(key)) return *hit;
  LeafRecurrence<HPoly> rec([](int n) { return HPoly::h({n}); },
                            [](const std::vector<std::pair<HPoly, int>>& parts) {
                              HPoly p = HPoly::one();
                              for (const auto& [v, n] : parts) p = p * v;
                              return p;
                            });
  HPoly value = rec(g);
  s_memo.insert(key, value);
  return value;
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu))
    throw std::invalid_argument("kostka: size mismatch");
  if (mu.empty()) return 1;
  std::string key = partition_key(lambda) + partition_key(mu);
  if (auto hit = kostka_memo.find(key)) return *hit;
  // The boxes holding the largest label form a horizontal strip lambda/nu of
  // size mu.back(): lambda_{i+1} <= nu_i <= lambda_i.
  const int strip = mu.back();
  const Partition rest(mu.begin(), mu.end() - 1);
  BigInt total = 0;
  Partition nu(lambda.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int removed) {
    if (i == lambda.size()) {
      if (removed == strip) total += kostka(normalize_partition(nu), rest);
      return;
    }
    int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= lo; --v) {
      int r = removed + lambda[i] - v;
      if (r > strip) break;
      nu[i] = v;
      rec(i + 1, r);
    }
  };
  rec(0, 0);
  kostka_memo.insert(key, total);
  return total;
}

SchurExpansion h_to_schur(const HPoly& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("h_to_schur needs a homogeneous input");
  SchurExpansion out;
  if (p.is_zero()) return out;
  const int n = p.degree();
  for (const auto& lambda : partitions_of(n)) {
    BigInt c = 0;
    for (const auto& [mu, a] : p.terms())
      if (dominates(lambda, mu)) c += a * kostka(lambda, mu);
    if (c != 0) out[lambda] = c;
  }
  return out;
}

HPoly schur_to_h(const SchurExpansion& s) {
  HPoly out;
  if (s.empty()) return out;
  const int n = partition_size(s.begin()->first);
  for (const auto& [lambda, c] : s)
    if (partition_size(lambda) != n) throw std::invalid_argument("schur_to_h needs a homogeneous input");
  auto order = partitions_of(n);
  std::sort(order.begin(), order.end());  // lexicographic ascending
  std::map<Partition, BigInt> a;
  for (const auto& lambda : order) {
    BigInt v = 0;
    if (auto it = s.find(lambda); it != s.end()) v = it->second;
    for (const auto& [mu, amu] : a)
      if (mu != lambda && dominates(lambda, mu)) v -= kostka(lambda, mu) * amu;
    a[lambda] = v;
  }
  for (const auto& [mu, v] : a)
    if (v != 0) out += HPoly::h(mu, v);
  return out;
}

SchurExpansion schur_coeffs(const BipartiteGraph& g) {
  auto s = h_to_schur(s_forest(g));
  for (const auto& [lambda, c] : s)
    if (c < 0) throw std::logic_error("negative Schur coefficient at " + partition_key(lambda));
  return s;
}

BigInt hook_dim(const Partition& lambda) {
  const int n = partition_size(lambda);
  const Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
  return factorial(n) / hooks;
}

BigInt syt_count(const Partition& lambda) {
  if (partition_size(lambda) <= 1) return 1;
  BigInt total = 0;
  for (const auto& mu : remove_one_corner(lambda)) total += syt_count(mu);
  return total;
}

Rational exp_specialize(const HPoly& p) {
  Rational total = 0;
  for (const auto& [mu, c] : p.terms()) {
    BigInt denom = 1;
    for (int k : mu) denom *= factorial(k);
    total += make_rational(c, denom);
  }
  return total;
}

BigInt principal_specialize(const HPoly& p, int N) {
  if (N < 1) throw std::invalid_argument("principal specialization needs N >= 1");
  BigInt total = 0;
  for (const auto& [mu, c] : p.terms()) {
    BigInt term = c;
    for (int k : mu) term *= binomial(k + N - 1, k);
    total += term;
  }
  return total;
}

BigInt mn_char(const Partition& lambda, const Partition& rho) {
  if (partition_size(lambda) != partition_size(rho)) throw std::invalid_argument("mn_char: size mismatch");
  if (rho.empty()) return 1;
  std::string key = partition_key(lambda) + partition_key(rho);
  if (auto hit = mn_memo.find(key)) return *hit;
  // Beta numbers beta_i = lambda_i + (k - 1 - i); removing a rim hook of
  // length r moves one bead from b to b - r.
  const int k = static_cast<int>(lambda.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
  const int r = rho.front();
  const Partition rest(rho.begin() + 1, rho.end());
  BigInt total = 0;
  for (int i = 0; i < k; ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(k);
    for (int j = 0; j < k; ++j) parts[j] = moved[j] - (k - 1 - j);
    BigInt sub = mn_char(normalize_partition(parts), rest);
    total += between % 2 ? -sub : sub;
  }
  mn_memo.insert(key, total);
  return total;
}

ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction chi;
  for (const auto& rho : partitions_of(partition_size(lambda))) chi[rho] = mn_char(lambda, rho);
  return chi;
}

MonomialExpansion monomial_expansion(const SchurExpansion& s, int N) {
  MonomialExpansion out;
  if (s.empty()) return out;
  const int n = partition_size(s.begin()->first);
  std::vector<int> alpha(N, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == N - 1) {
      alpha[i] = rest;
      Partition mu = normalize_partition(alpha);
      BigInt c = 0;
      for (const auto& [lambda, coeff] : s)
        if (dominates(lambda, mu)) c += coeff * kostka(lambda, mu);
      if (c != 0) out[alpha] = c;
      return;
    }
    for (int v = rest; v >= 0; --v) {
      alpha[i] = v;
      rec(i + 1, rest - v);
    }
  };
  if (N >= 1) rec(0, n);
  return out;
}

SchurExpansion restrict_one_box(const SchurExpansion& s) {
  SchurExpansion out;
  for (const auto& [lambda, c] : s)
    for (const auto& mu : remove_one_corner(lambda)) out[mu] += c;
  return prune(out);
}

BigInt schur_dimension(const SchurExpansion& s) {
  BigInt total = 0;
  for (const auto& [lambda, c] : s) total += c * hook_dim(lambda);
  return total;
}

SchurExpansion prune(SchurExpansion s) {
  std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
  return s;
}

}  // namespace forest
