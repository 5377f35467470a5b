#pragma once

#include <string>
#include <vector>

#include "forest_specht/numeric.hpp"

namespace forest {

/// Weakly decreasing positive parts; no zeros stored.
using Partition = std::vector<int>;

int partition_size(const Partition& p);

/// Sorts descending and drops zero parts.
Partition normalize_partition(std::vector<int> parts);
bool is_partition(const std::vector<int>& parts);

/// Deterministic order: by size, then reverse lexicographic, so (3) comes
/// before (2,1) before (1,1,1).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n in PartitionOrder.
std::vector<Partition> partitions_of(int n);

/// a dominates b (same size assumed).
bool dominates(const Partition& a, const Partition& b);
Partition conjugate(const Partition& p);

/// Partitions obtained by deleting one corner box.
std::vector<Partition> remove_one_corner(const Partition& p);

/// Size of the centralizer of a permutation of cycle type p.
BigInt centralizer_size(const Partition& p);

/// "[2,1]"; the empty partition is "[]".
std::string partition_key(const Partition& p);

}  // namespace forest
