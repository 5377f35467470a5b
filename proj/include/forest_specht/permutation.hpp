#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forest_specht/partition.hpp"

namespace forest {

/// One-line form: p[i] is the image of i. Composition (a*b)(i) = a[b[i]].
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
int sign(const Perm& p);
Partition cycle_type(const Perm& p);
/// Lehmer-code index in [0, n!).
std::int64_t perm_index(const Perm& p);
/// All permutations of [0, n) in lexicographic order.
std::vector<Perm> all_perms(int n);
/// Product of consecutive cycles with lengths rho_1, rho_2, ...
Perm class_representative(const Partition& rho);

/// Every permutation of [0, n) that maps each block to itself, paired with
/// its sign.
std::vector<std::pair<Perm, int>> block_stabilizer(const std::vector<std::vector<int>>& blocks, int n);

}  // namespace forest
