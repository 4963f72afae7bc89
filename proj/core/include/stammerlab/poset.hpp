#pragma once

#include <vector>

#include "stammerlab/dyck.hpp"

namespace stammerlab {

// The graded poset of Dyck paths of all lengths, the reflexive-transitive
// closure of ribbon addition. Order, join and meet all work on the infinite
// zero-padded binary word of a path (up = 1, down = 0).

bool leq(const DyckPath& a, const DyckPath& b);

// Pointwise maximum of the padded words; always a Dyck path.
DyckPath join(const DyckPath& a, const DyckPath& b);

// Pointwise minimum, truncated at the smallest prefix holding more 0s than
// 1s; the result keeps the first 2k steps, k = number of 1s retained.
DyckPath meet(const DyckPath& a, const DyckPath& b);

std::vector<DyckPath> all_dyck_paths(int rank);

}  // namespace stammerlab
