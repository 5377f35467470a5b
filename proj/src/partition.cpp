#include "forest_specht/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace forest {

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition normalize_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  int sa = partition_size(a), sb = partition_size(b);
  if (sa != sb) return sa < sb;
  return b < a;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int j = 1; j <= p[0]; ++j) {
    int count = 0;
    for (int part : p)
      if (part >= j) ++count;
    out.push_back(count);
  }
  return out;
}

std::vector<Partition> remove_one_corner(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool corner = i + 1 == p.size() || p[i + 1] < p[i];
    if (!corner) continue;
    Partition q = p;
    --q[i];
    out.push_back(normalize_partition(q));
  }
  return out;
}

BigInt centralizer_size(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p) ++mult[part];
  BigInt z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::string partition_key(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace forest
