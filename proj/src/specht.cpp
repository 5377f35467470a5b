#include "forest_specht/specht.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "forest_specht/config.hpp"

namespace forest {

namespace {

constexpr int bits_per_label = 4;
constexpr int max_boxes = 64 / bits_per_label;

// Compact row / column indices of every box, plus the stabilizer blocks.
struct Layout {
  int n = 0;
  std::vector<int> row_of;  // 0-based compact row index per box
  std::vector<int> col_of;
  std::vector<std::vector<int>> row_blocks;
  std::vector<std::vector<int>> col_blocks;  // box ids ascending
};

Layout make_layout(const Diagram& d) {
  Layout l;
  l.n = d.size();
  auto rows = d.rows();
  auto cols = d.cols();
  l.row_blocks.resize(rows.size());
  l.col_blocks.resize(cols.size());
  for (int b = 0; b < l.n; ++b) {
    int r = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), d.box(b).row) - rows.begin());
    int c = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), d.box(b).col) - cols.begin());
    l.row_of.push_back(r);
    l.col_of.push_back(c);
    l.row_blocks[r].push_back(b);
    l.col_blocks[c].push_back(b);
  }
  return l;
}

void check_specht_cap(const Diagram& d) {
  int cap = std::min(config().specht_max_n, max_boxes - 1);
  if (d.size() > cap) throw CapExceeded("specht_max_n", cap, d.size());
}

// All distinct rearrangements of a multiset, lexicographic.
std::vector<std::vector<int>> multiset_perms(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

std::uint64_t pack(const std::vector<int>& word) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < word.size(); ++i) k |= std::uint64_t(word[i]) << (bits_per_label * i);
  return k;
}

int unpack_at(std::uint64_t k, int i) { return static_cast<int>((k >> (bits_per_label * i)) & 0xF); }

// Coset coordinates: a left coset hR is keyed by the word w with
// w[h(b)] = row(b), i.e. the row index carried by each label.
struct CosetSpace {
  Layout layout;
  std::vector<std::uint64_t> words;  // sorted
  std::vector<std::vector<int>> column_words;
  std::vector<std::pair<Perm, int>> col_group;

  explicit CosetSpace(const Diagram& d) : layout(make_layout(d)) {
    for (auto& w : multiset_perms(layout.row_of)) words.push_back(pack(w));
    std::sort(words.begin(), words.end());
    column_words = multiset_perms(layout.col_of);
    col_group = block_stabilizer(layout.col_blocks, layout.n);
  }

  int index(std::uint64_t w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) throw std::logic_error("coset word not found");
    return static_cast<int>(it - words.begin());
  }

  // Box -> label map for the generator attached to a column word: label l
  // goes to the next unused box of column cw[l].
  Perm generator(const std::vector<int>& cw) const {
    Perm g(layout.n);
    std::vector<std::size_t> next(layout.col_blocks.size(), 0);
    for (int label = 0; label < layout.n; ++label) {
      int c = cw[label];
      g[layout.col_blocks[c][next[c]++]] = label;
    }
    return g;
  }

  // g C(D) R(D) = sum_q sgn(q) [g q R].
  std::vector<std::pair<int, std::int64_t>> row(std::size_t gen) const {
    Perm g = generator(column_words[gen]);
    std::vector<std::pair<int, std::int64_t>> acc;
    acc.reserve(col_group.size());
    for (const auto& [q, s] : col_group) {
      std::uint64_t key = 0;
      for (int b = 0; b < layout.n; ++b) key |= std::uint64_t(layout.row_of[b]) << (bits_per_label * g[q[b]]);
      acc.emplace_back(index(key), s);
    }
    std::sort(acc.begin(), acc.end());
    std::vector<std::pair<int, std::int64_t>> out;
    for (auto& [c, v] : acc) {
      if (!out.empty() && out.back().first == c)
        out.back().second += v;
      else
        out.emplace_back(c, v);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
  }
};

SparseRow to_field(const std::vector<std::pair<int, std::int64_t>>& r, const PrimeField& f) {
  SparseRow out;
  out.reserve(r.size());
  for (auto& [c, v] : r) {
    auto x = f.from_int(v);
    if (x != 0) out.emplace_back(c, x);
  }
  return out;
}

constexpr std::size_t chunk_size = 256;

}  // namespace

GroupAlgebraElement symmetrizer(const Diagram& d) {
  Layout l = make_layout(d);
  BigInt terms = 1;
  for (auto& b : l.row_blocks) terms *= factorial(static_cast<int>(b.size()));
  for (auto& b : l.col_blocks) terms *= factorial(static_cast<int>(b.size()));
  if (terms > config().symmetrizer_max_terms)
    throw CapExceeded("symmetrizer_max_terms", config().symmetrizer_max_terms,
                      terms > BigInt(INT64_MAX) ? INT64_MAX : static_cast<std::int64_t>(terms));
  auto cg = block_stabilizer(l.col_blocks, l.n);
  auto rg = block_stabilizer(l.row_blocks, l.n);
  GroupAlgebraElement e;
  e.n = l.n;
  for (auto& [q, s] : cg)
    for (auto& [p, unused] : rg) {
      (void)unused;
      e.terms[compose(q, p)] += s;
    }
  std::erase_if(e.terms, [](const auto& t) { return t.second == 0; });
  return e;
}

SpechtModule::SpechtModule(const Diagram& d, std::uint32_t prime, bool parallel)
    : n_(d.size()), basis_(1, prime) {
  check_specht_cap(d);
  if (n_ == 0) {
    // the ideal is the whole (one-dimensional) algebra
    basis_.insert({{0, 1}});
    row_words_ = {0};
    generators_ = 1;
    return;
  }
  CosetSpace space(d);
  row_words_ = space.words;
  generators_ = static_cast<std::int64_t>(space.column_words.size());
  basis_ = EchelonBasis(static_cast<int>(row_words_.size()), prime);
  const auto total = space.column_words.size();
  std::vector<SparseRow> rows;
  for (std::size_t start = 0; start < total && !basis_.full(); start += chunk_size) {
    std::size_t stop = std::min(total, start + chunk_size);
    rows.assign(stop - start, {});
    const auto& f = basis_.field();
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t i = static_cast<std::int64_t>(start); i < static_cast<std::int64_t>(stop); ++i)
        rows[i - start] = to_field(space.row(i), f);
    } else {
      for (std::size_t i = start; i < stop; ++i) rows[i - start] = to_field(space.row(i), f);
    }
    for (auto& r : rows) {
      basis_.insert(r);
      if (basis_.full()) break;
    }
  }
}

std::vector<std::vector<std::pair<int, std::int64_t>>> SpechtModule::generator_rows(const Diagram& d) {
  check_specht_cap(d);
  if (d.empty()) return {{{0, 1}}};
  CosetSpace space(d);
  std::vector<std::vector<std::pair<int, std::int64_t>>> out;
  for (std::size_t i = 0; i < space.column_words.size(); ++i) out.push_back(space.row(i));
  return out;
}

ClassFunction SpechtModule::character() {
  basis_.reduce_fully();
  const auto& f = basis_.field();
  ClassFunction chi;
  for (const auto& rho : partitions_of(n_)) {
    if (n_ == 0) {
      chi[rho] = basis_.rank();
      continue;
    }
    Perm g = class_representative(rho);
    std::uint32_t trace = 0;
    for (int i = 0; i < basis_.rank(); ++i) {
      std::uint64_t w = row_words_[basis_.pivots()[i]];
      std::uint64_t moved = 0;
      for (int l = 0; l < n_; ++l) moved |= std::uint64_t(unpack_at(w, g[l])) << (bits_per_label * l);
      auto it = std::lower_bound(row_words_.begin(), row_words_.end(), moved);
      trace = f.add(trace, basis_.entry(i, static_cast<int>(it - row_words_.begin())));
    }
    chi[rho] = f.to_signed(trace);
  }
  return chi;
}

SchurExpansion SpechtModule::decompose() {
  ClassFunction chi = character();
  SchurExpansion out;
  for (const auto& lambda : partitions_of(n_)) {
    Rational c = 0;
    for (const auto& [rho, v] : chi) c += make_rational(v * mn_char(lambda, rho), centralizer_size(rho));
    if (denominator(c) != 1 || c < 0) throw std::logic_error("character is not a sum of irreducibles");
    if (c != 0) out[lambda] = numerator(c);
  }
  return out;
}

BigInt specht_dim_mod(const Diagram& d, std::uint32_t prime, bool parallel) {
  return SpechtModule(d, prime, parallel).dimension();
}

BigInt specht_dim(const Diagram& d) { return specht_dim_mod(d, config().primes.at(0)); }

BigInt specht_dim_exact(const Diagram& d) {
  if (d.size() > config().exact_rank_max_n) throw CapExceeded("exact_rank_max_n", config().exact_rank_max_n, d.size());
  auto rows = SpechtModule::generator_rows(d);
  std::vector<std::vector<std::pair<int, BigInt>>> big;
  int cols = 1;
  for (auto& r : rows) {
    std::vector<std::pair<int, BigInt>> br;
    for (auto& [c, v] : r) {
      br.emplace_back(c, BigInt(v));
      cols = std::max(cols, c + 1);
    }
    big.push_back(std::move(br));
  }
  return rational_rank(big, cols);
}

BigInt specht_dim_reference(const Diagram& d, std::uint32_t prime) {
  check_specht_cap(d);
  if (d.empty()) return 1;
  GroupAlgebraElement e = symmetrizer(d);
  const int n = d.size();
  auto perms = all_perms(n);
  EchelonBasis basis(static_cast<int>(perms.size()), prime);
  const auto& f = basis.field();
  for (const auto& sigma : perms) {
    SparseRow r;
    for (const auto& [pi, c] : e.terms) r.emplace_back(static_cast<int>(perm_index(compose(sigma, pi))), f.from_int(static_cast<std::int64_t>(c)));
    std::sort(r.begin(), r.end());
    basis.insert(r);
  }
  return basis.rank();
}

ClassFunction specht_character(const Diagram& d) { return SpechtModule(d, config().primes.at(0)).character(); }

SchurExpansion specht_decompose(const Diagram& d) { return SpechtModule(d, config().primes.at(0)).decompose(); }

SpechtReport specht_report(const Diagram& d, bool with_character, bool with_decomposition) {
  SpechtModule m(d, config().primes.at(0));
  SpechtReport rep;
  rep.dimension = m.dimension();
  if (with_character || with_decomposition) rep.character = m.character();
  if (with_decomposition) rep.decomposition = m.decompose();
  return rep;
}

namespace {

// Tableaux T: box -> [0, N) with labels strictly increasing down each
// column block; other fillings give zero or repeat one of these.
void column_strict_fillings(const Layout& l, int N, std::vector<int>& cur, std::size_t col,
                            std::size_t pos, std::vector<std::vector<int>>& out) {
  if (col == l.col_blocks.size()) {
    out.push_back(cur);
    return;
  }
  const auto& block = l.col_blocks[col];
  if (pos == block.size()) {
    column_strict_fillings(l, N, cur, col + 1, 0, out);
    return;
  }
  int lo = pos == 0 ? 0 : cur[block[pos - 1]] + 1;
  int remaining = static_cast<int>(block.size() - pos);
  for (int v = lo; v + remaining <= N; ++v) {
    cur[block[pos]] = v;
    column_strict_fillings(l, N, cur, col, pos + 1, out);
  }
}

struct TensorRow {
  std::vector<int> content;
  std::vector<std::pair<std::uint64_t, std::int64_t>> entries;
};

TensorRow tensor_row(const Layout& l, const std::vector<std::pair<Perm, int>>& cg, const std::vector<int>& t, int N) {
  TensorRow out;
  out.content.assign(N, 0);
  for (int v : t) ++out.content[v];
  std::vector<int> s(l.n);
  std::vector<int> buf;
  for (const auto& [q, sg] : cg) {
    for (int b = 0; b < l.n; ++b) s[b] = t[q[b]];
    // R-orbit of s: multiset of labels in each row.
    std::uint64_t key = 0;
    int shift = 0;
    std::int64_t stab = 1;
    for (const auto& block : l.row_blocks) {
      buf.clear();
      for (int b : block) buf.push_back(s[b]);
      std::sort(buf.begin(), buf.end());
      int run = 1;
      for (std::size_t i = 0; i < buf.size(); ++i) {
        key |= std::uint64_t(buf[i]) << shift;
        shift += bits_per_label;
        if (i > 0 && buf[i] == buf[i - 1]) {
          ++run;
          stab *= run;
        } else {
          run = 1;
        }
      }
    }
    out.entries.emplace_back(key, sg * stab);
  }
  std::sort(out.entries.begin(), out.entries.end());
  std::vector<std::pair<std::uint64_t, std::int64_t>> merged;
  for (auto& e : out.entries) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  out.entries = std::move(merged);
  return out;
}

}  // namespace

TensorReport schur_tensor_span(const Diagram& d, int N, bool parallel) {
  if (N < 0) throw std::invalid_argument("number of variables must be nonnegative");
  const int n = d.size();
  BigInt tensors = boost::multiprecision::pow(BigInt(N), static_cast<unsigned>(n));
  if (tensors > config().tensor_max)
    throw CapExceeded("tensor_max", config().tensor_max,
                      tensors > BigInt(INT64_MAX) ? INT64_MAX : static_cast<std::int64_t>(tensors));
  if (n >= max_boxes || N > 16) throw CapExceeded("tensor_max", config().tensor_max, INT64_MAX);
  TensorReport rep;
  rep.N = N;
  rep.dimension = 0;
  if (n == 0) {
    rep.dimension = 1;
    rep.character[std::vector<int>(N, 0)] = 1;
    return rep;
  }
  Layout l = make_layout(d);
  auto cg = block_stabilizer(l.col_blocks, n);
  std::vector<std::vector<int>> fillings;
  std::vector<int> cur(n, 0);
  column_strict_fillings(l, N, cur, 0, 0, fillings);

  std::vector<TensorRow> rows(fillings.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(fillings.size()); ++i) rows[i] = tensor_row(l, cg, fillings[i], N);
  } else {
    for (std::size_t i = 0; i < fillings.size(); ++i) rows[i] = tensor_row(l, cg, fillings[i], N);
  }

  // group by weight; coordinates numbered in order of first appearance
  struct Group {
    std::unordered_map<std::uint64_t, int> cols;
    std::vector<const TensorRow*> rows;
  };
  std::map<std::vector<int>, Group> groups;
  for (const auto& r : rows) {
    if (r.entries.empty()) continue;
    auto& g = groups[r.content];
    for (auto& [k, v] : r.entries) g.cols.try_emplace(k, static_cast<int>(g.cols.size()));
    g.rows.push_back(&r);
  }
  const std::uint32_t prime = config().primes.at(0);
  for (auto& [content, g] : groups) {
    EchelonBasis basis(static_cast<int>(g.cols.size()), prime);
    const auto& f = basis.field();
    for (const TensorRow* r : g.rows) {
      SparseRow v;
      for (auto& [k, c] : r->entries) {
        auto x = f.from_int(c);
        if (x != 0) v.emplace_back(g.cols.at(k), x);
      }
      std::sort(v.begin(), v.end());
      basis.insert(v);
      if (basis.full()) break;
    }
    if (basis.rank() > 0) {
      rep.character[content] = basis.rank();
      rep.dimension += basis.rank();
    }
  }
  return rep;
}

}  // namespace forest
