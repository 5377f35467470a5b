#include "forest_specht/matching.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace forest {

namespace {

std::pair<int, int> edge_key(const BipartiteGraph& g, int e) {
  return std::minmax(g.edges()[e].u, g.edges()[e].v);
}

void require_matching(const BipartiteGraph& g, const std::vector<int>& edges) {
  if (!is_matching(g, edges)) throw GraphError("edge set is not a matching");
}

}  // namespace

bool is_matching(const BipartiteGraph& g, const std::vector<int>& edges) {
  std::set<int> used_edges, used_vertices;
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    if (!used_edges.insert(e).second) return false;
    if (!used_vertices.insert(g.edges()[e].u).second) return false;
    if (!used_vertices.insert(g.edges()[e].v).second) return false;
  }
  return true;
}

bool is_almost_perfect(const BipartiteGraph& g, const std::vector<int>& edges) {
  require_matching(g, edges);
  std::set<int> in(edges.begin(), edges.end());
  std::set<int> covered;
  for (int e : edges) {
    covered.insert(g.edges()[e].u);
    covered.insert(g.edges()[e].v);
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.degree(g.edges()[e].u) == 1 && g.degree(g.edges()[e].v) == 1 && !in.count(e)) return false;
  for (const auto& v : g.vertices())
    if (g.degree(v.id) >= 2 && !covered.count(v.id)) return false;
  return true;
}

bool is_special(const BipartiteGraph& g, const std::vector<int>& edges) {
  require_matching(g, edges);
  // Orient non-matching edges white -> black and matching edges black ->
  // white; alternating cycles are exactly the directed cycles.
  std::set<int> in(edges.begin(), edges.end());
  std::map<int, std::vector<int>> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    int w = g.white_end(e), b = g.black_end(e);
    if (in.count(e)) out[b].push_back(w);
    else out[w].push_back(b);
  }
  std::map<int, int> state;  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> has_cycle = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && has_cycle(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (const auto& v : g.vertices())
    if (state[v.id] == 0 && has_cycle(v.id)) return false;
  return true;
}

Matching classify_matching(const BipartiteGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  Matching m;
  m.edges = std::move(edges);
  m.is_matching = is_matching(g, m.edges);
  if (m.is_matching) {
    m.is_almost_perfect = is_almost_perfect(g, m.edges);
    m.is_special = is_special(g, m.edges);
  }
  return m;
}

Matching find_apm(const BipartiteGraph& g) {
  if (!g.is_forest()) throw GraphError("almost perfect matching requested for a non-forest");
  std::set<int> removed;
  std::vector<int> chosen;
  std::function<void(int)> grow = [&](int root) {
    int best = -1;
    for (int e : g.incident(root)) {
      if (removed.count(g.other_end(e, root))) continue;
      if (best < 0 || edge_key(g, e) < edge_key(g, best)) best = e;
    }
    if (best < 0) return;
    chosen.push_back(best);
    int other = g.other_end(best, root);
    removed.insert(root);
    removed.insert(other);
    for (int y : {root, other}) {
      std::vector<int> next;
      for (int e : g.incident(y)) {
        int z = g.other_end(e, y);
        if (!removed.count(z)) next.push_back(z);
      }
      std::sort(next.begin(), next.end());
      for (int z : next) grow(z);
    }
  };
  for (const auto& comp : g.components()) grow(comp.least_white());
  return classify_matching(g, chosen);
}

std::vector<std::vector<int>> all_matchings(const BipartiteGraph& g) {
  const int n = g.num_edges();
  if (n > 24) throw GraphError("too many edges to enumerate matchings");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::set<int> used;
  std::function<void(int)> rec = [&](int e) {
    if (e == n) {
      out.push_back(current);
      return;
    }
    rec(e + 1);
    int a = g.edges()[e].u, b = g.edges()[e].v;
    if (!used.count(a) && !used.count(b)) {
      used.insert(a);
      used.insert(b);
      current.push_back(e);
      rec(e + 1);
      current.pop_back();
      used.erase(a);
      used.erase(b);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_apms(const BipartiteGraph& g) {
  std::vector<std::vector<int>> out;
  for (auto& m : all_matchings(g))
    if (is_almost_perfect(g, m)) out.push_back(std::move(m));
  return out;
}

ApmChoice canonical_apm_choice() {
  return [](const BipartiteGraph& g) { return find_apm(g).edges; };
}

ApmChoice last_apm_choice() {
  return [](const BipartiteGraph& g) { return all_apms(g).back(); };
}

ApmChoice hashed_apm_choice(std::uint64_t seed) {
  return [seed](const BipartiteGraph& g) {
    auto apms = all_apms(g);
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (const auto& e : g.edges()) {
      h ^= static_cast<std::uint64_t>(e.u) * 0x100000001b3ull + static_cast<std::uint64_t>(e.v);
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return apms[h % apms.size()];
  };
}

bool is_transversal(const Diagram& d, const std::vector<int>& boxes) {
  std::set<int> ids, rows, cols;
  for (int id : boxes) {
    if (id < 0 || id >= d.size()) return false;
    if (!ids.insert(id).second) return false;
    if (!rows.insert(d.box(id).row).second) return false;
    if (!cols.insert(d.box(id).col).second) return false;
  }
  return true;
}

StandardFormDiagram standard_form(const Diagram& d, const Transversal& u) {
  if (!is_transversal(d, u.boxes)) throw DiagramError("not a transversal");
  const int k = static_cast<int>(u.boxes.size());
  std::map<int, int> slot_of_row, slot_of_col;
  for (int s = 0; s < k; ++s) {
    slot_of_row[d.box(u.boxes[s]).row] = s;
    slot_of_col[d.box(u.boxes[s]).col] = s;
  }
  // must_follow[s] = slots that have to precede slot s.
  std::vector<std::vector<int>> must_follow(k);
  std::set<int> in_u(u.boxes.begin(), u.boxes.end());
  for (int id = 0; id < d.size(); ++id) {
    if (in_u.count(id)) continue;
    auto r = slot_of_row.find(d.box(id).row);
    auto c = slot_of_col.find(d.box(id).col);
    if (r != slot_of_row.end() && c != slot_of_col.end()) must_follow[r->second].push_back(c->second);
  }
  std::vector<int> order;
  std::vector<bool> placed(k, false);
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int s = 0; s < k && pick < 0; ++s) {
      if (placed[s]) continue;
      bool ready = std::all_of(must_follow[s].begin(), must_follow[s].end(),
                               [&](int t) { return placed[t]; });
      if (ready) pick = s;
    }
    if (pick < 0) throw DiagramError("transversal is not special");
    placed[pick] = true;
    order.push_back(pick);
  }

  StandardFormDiagram out;
  std::map<int, int> new_row, new_col;
  for (int s : order) {
    const Box& b = d.box(u.boxes[s]);
    out.row_perm.push_back(b.row);
    out.col_perm.push_back(b.col);
    out.transversal.boxes.push_back(u.boxes[s]);
  }
  for (int r : d.rows())
    if (!slot_of_row.count(r)) out.row_perm.push_back(r);
  for (int c : d.cols())
    if (!slot_of_col.count(c)) out.col_perm.push_back(c);
  for (std::size_t i = 0; i < out.row_perm.size(); ++i) new_row[out.row_perm[i]] = static_cast<int>(i) + 1;
  for (std::size_t j = 0; j < out.col_perm.size(); ++j) new_col[out.col_perm[j]] = static_cast<int>(j) + 1;
  std::vector<Box> bs;
  for (const auto& b : d.boxes()) bs.push_back({new_row[b.row], new_col[b.col]});
  out.diagram = Diagram(std::move(bs));
  return out;
}

}  // namespace forest
