#include "forest_specht/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace forest {

Transversal derive_u_prime(const StandardFormDiagram& sfd) {
  const Diagram& d = sfd.diagram;
  const auto& u_boxes = sfd.transversal.boxes;
  const int u = static_cast<int>(u_boxes.size());
  if (u == 0) throw DiagramError("empty transversal");
  std::vector<int> out = u_boxes;
  std::vector<bool> replaced(u, false);
  std::set<int> used;
  int x = u_boxes[u - 1];
  int slot = u - 1;
  while (true) {
    if (replaced[slot]) throw std::logic_error("chain revisits a transversal box");
    replaced[slot] = true;
    int row = d.box(x).row;
    int best = -1;
    for (int id = 0; id < d.size(); ++id) {
      if (id == x || used.count(id) || d.box(id).row != row) continue;
      if (best < 0 || d.box(id).col < d.box(best).col) best = id;
    }
    if (best < 0) {
      out[slot] = -1;
      break;
    }
    out[slot] = best;
    used.insert(best);
    int c = d.box(best).col;
    if (c >= u) break;
    x = u_boxes[c - 1];
    slot = c - 1;
  }
  Transversal t;
  for (int b : out)
    if (b >= 0) t.boxes.push_back(b);
  return t;
}

namespace {

using Mask = std::uint64_t;
constexpr int max_boxes = 63;

Mask bit(int id) { return Mask{1} << id; }

struct SubDiagram {
  Diagram d;
  std::vector<int> ids;  // local id -> base id
};

SubDiagram restrict_to(const Diagram& base, Mask m) {
  SubDiagram s;
  std::vector<Box> bs;
  for (int id = 0; id < base.size(); ++id)
    if (m & bit(id)) {
      bs.push_back(base.box(id));
      s.ids.push_back(id);
    }
  s.d = Diagram(std::move(bs));
  return s;
}

void require_small(const Diagram& d) {
  if (d.size() > max_boxes) throw DiagramError("diagram too large for tableau enumeration");
}

void require_forest(const Diagram& d) {
  if (!d.empty() && !diagram_to_graph(d).is_forest()) throw DiagramError("tableaux need the diagram of a forest");
}

// Strips of the sub-diagram `mask` of `base` for the ordered transversal
// `u` (base ids). The transversal is threaded through, never recomputed.
std::vector<Mask> strips_rec(const Diagram& base, Mask mask, const std::vector<int>& u) {
  if (mask == 0 || u.empty()) return {0};
  SubDiagram sub = restrict_to(base, mask);
  std::map<int, int> local;
  for (std::size_t i = 0; i < sub.ids.size(); ++i) local[sub.ids[i]] = static_cast<int>(i);
  Transversal lu;
  for (int b : u) lu.boxes.push_back(local.at(b));
  StandardFormDiagram sfd = standard_form(sub.d, lu);
  const int k = static_cast<int>(sfd.transversal.boxes.size());
  Transversal up = derive_u_prime(sfd);

  Mask without_col = mask, without_both = mask;
  for (int i = 0; i < sub.d.size(); ++i) {
    const Box& b = sfd.diagram.box(i);
    if (b.col == k) without_col &= ~bit(sub.ids[i]);
    if (b.col == k || b.row == k) without_both &= ~bit(sub.ids[i]);
  }
  std::vector<int> u1, u2;
  for (int b : up.boxes) u1.push_back(sub.ids[b]);
  for (int i = 0; i + 1 < k; ++i) u2.push_back(sub.ids[sfd.transversal.boxes[i]]);
  Mask corner = bit(sub.ids[sfd.transversal.boxes[k - 1]]);

  std::vector<Mask> out;
  for (Mask y : strips_rec(base, without_col, u1)) out.push_back(y | corner);
  for (Mask y : strips_rec(base, without_both, u2)) out.push_back(y);
  return out;
}

std::vector<int> mask_ids(Mask m) {
  std::vector<int> ids;
  for (int id = 0; m; ++id, m >>= 1)
    if (m & 1) ids.push_back(id);
  return ids;
}

std::vector<HorizontalStrip> to_strips(std::vector<Mask> ms) {
  std::sort(ms.begin(), ms.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_ids(a) < mask_ids(b);
  });
  std::vector<HorizontalStrip> out;
  for (Mask m : ms) out.push_back({mask_ids(m)});
  return out;
}

// Per-call state for the label recursions: one fixed matching per
// sub-diagram.
class TableauEngine {
 public:
  TableauEngine(const Diagram& base, const ApmChoice& choice) : base_(base), choice_(choice) {
    require_small(base);
    require_forest(base);
  }

  Mask full() const { return base_.size() == 0 ? 0 : (Mask{1} << base_.size()) - 1; }

  const std::vector<int>& matching(Mask m) {
    auto it = matching_.find(m);
    if (it != matching_.end()) return it->second;
    SubDiagram sub = restrict_to(base_, m);
    std::vector<int> u;
    for (int e : choice_(diagram_to_graph(sub.d))) u.push_back(sub.ids[e]);
    return matching_.emplace(m, std::move(u)).first->second;
  }

  const std::vector<Mask>& strips(Mask m) {
    auto it = strips_.find(m);
    if (it != strips_.end()) return it->second;
    std::vector<Mask> s = m == 0 ? std::vector<Mask>{0} : strips_rec(base_, m, matching(m));
    return strips_.emplace(m, std::move(s)).first->second;
  }

  void enumerate(Mask m, int N, std::vector<int>& labels, std::vector<ForestTableau>& out) {
    if (m == 0) {
      out.push_back({labels});
      return;
    }
    if (N == 0) return;
    for (Mask y : strips(m)) {
      for (int id : mask_ids(y)) labels[id] = N;
      enumerate(m & ~y, N - 1, labels, out);
      for (int id : mask_ids(y)) labels[id] = 0;
    }
  }

  BigInt count(Mask m, int N) {
    if (m == 0) return 1;
    if (N == 0) return 0;
    auto key = std::make_pair(m, N);
    if (auto it = counts_.find(key); it != counts_.end()) return it->second;
    BigInt total = 0;
    for (Mask y : strips(m)) total += count(m & ~y, N - 1);
    counts_.emplace(key, total);
    return total;
  }

  MonomialExpansion weights(Mask m, int N) {
    MonomialExpansion out;
    if (m == 0) {
      out[std::vector<int>(N, 0)] = 1;
      return out;
    }
    if (N == 0) return out;
    auto key = std::make_pair(m, N);
    if (auto it = weights_.find(key); it != weights_.end()) return it->second;
    for (Mask y : strips(m)) {
      for (const auto& [alpha, c] : weights(m & ~y, N - 1)) {
        auto longer = alpha;
        longer.push_back(std::popcount(y));
        out[longer] += c;
      }
    }
    weights_.emplace(key, out);
    return out;
  }

  void standard(Mask m, int k, std::vector<int>& labels, std::vector<ForestTableau>& out) {
    if (m == 0) {
      out.push_back({labels});
      return;
    }
    for (int id : matching(m)) {
      labels[id] = k;
      standard(m & ~bit(id), k - 1, labels, out);
      labels[id] = 0;
    }
  }

 private:
  const Diagram& base_;
  const ApmChoice& choice_;
  std::map<Mask, std::vector<int>> matching_;
  std::map<Mask, std::vector<Mask>> strips_;
  std::map<std::pair<Mask, int>, BigInt> counts_;
  std::map<std::pair<Mask, int>, MonomialExpansion> weights_;
};

void require_labels(int N) {
  if (N < 0) throw std::invalid_argument("number of labels must be nonnegative");
}

}  // namespace

std::vector<HorizontalStrip> horizontal_strips(const StandardFormDiagram& sfd) {
  require_small(sfd.diagram);
  if (sfd.diagram.empty()) return {HorizontalStrip{}};
  Mask all = (Mask{1} << sfd.diagram.size()) - 1;
  return to_strips(strips_rec(sfd.diagram, all, sfd.transversal.boxes));
}

Transversal chosen_transversal(const Diagram& d, const ApmChoice& choice) {
  if (d.empty()) return {};
  return Transversal{choice(diagram_to_graph(d))};
}

std::vector<HorizontalStrip> diagram_strips(const Diagram& d, const ApmChoice& choice) {
  TableauEngine eng(d, choice);
  return to_strips(eng.strips(eng.full()));
}

std::vector<ForestTableau> ssyt_enumerate(const Diagram& d, int N, const ApmChoice& choice) {
  require_labels(N);
  TableauEngine eng(d, choice);
  std::vector<int> labels(d.size(), 0);
  std::vector<ForestTableau> out;
  eng.enumerate(eng.full(), N, labels, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt ssyt_count(const Diagram& d, int N, const ApmChoice& choice) {
  require_labels(N);
  TableauEngine eng(d, choice);
  return eng.count(eng.full(), N);
}

MonomialExpansion ssyt_generating_function(const Diagram& d, int N, const ApmChoice& choice) {
  require_labels(N);
  TableauEngine eng(d, choice);
  return eng.weights(eng.full(), N);
}

std::vector<ForestTableau> standard_tableaux(const Diagram& d, const ApmChoice& choice) {
  std::vector<ForestTableau> out;
  for (auto& t : ssyt_enumerate(d, d.size(), choice)) {
    std::vector<int> sorted = t.labels;
    std::sort(sorted.begin(), sorted.end());
    bool once_each = true;
    for (std::size_t i = 0; i < sorted.size(); ++i) once_each = once_each && sorted[i] == static_cast<int>(i) + 1;
    if (once_each) out.push_back(std::move(t));
  }
  return out;
}

std::vector<ForestTableau> standard_tableaux_by_matching(const Diagram& d, const ApmChoice& choice) {
  TableauEngine eng(d, choice);
  std::vector<int> labels(d.size(), 0);
  std::vector<ForestTableau> out;
  eng.standard(eng.full(), d.size(), labels, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace forest
