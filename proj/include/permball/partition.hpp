#pragma once

#include <functional>
#include <vector>

namespace permball {

// Weakly decreasing list of positive parts.
struct IntPartition {
  std::vector<int> parts;

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
};

// Every partition of n into parts in [min_part, max_part], in reverse
// lexicographic order: (n), (n-1, 1), ..., (1^n).  n == 0 yields the empty
// partition once.
void for_each_partition(int n, int min_part, int max_part,
                        const std::function<void(const IntPartition&)>& visit);

std::vector<IntPartition> partitions_of(int n);

// Conjugate (transposed) shape.
IntPartition conjugate(const IntPartition& lambda);

}  // namespace permball
