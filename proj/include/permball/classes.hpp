#pragma once

#include <vector>

#include "permball/bigint.hpp"
#include "permball/cycle_type.hpp"
#include "permball/permutation.hpp"

namespace permball {

struct ClassInfo {
  CycleType cycle_type;
  Permutation representative;
  BigInt class_size;
  BigInt centralizer_order;
};

// prod_i i^{t_i} t_i!, fixed points counted as i = 1.
BigInt centralizer_order(const CycleType& ct);

// n! / centralizer_order
BigInt class_size(const CycleType& ct);

// Order of the centralizer of the class inside the symmetric group on its
// moved points only, prod_{i >= 2} i^{t_i} t_i!.
BigInt support_centralizer_order(const CycleType& ct);

// Cycles laid left to right on consecutive points: "3,2^2" -> (1 2 3)(4 5)(6 7).
Permutation canonical_representative(const CycleType& ct);

ClassInfo class_info(const CycleType& ct);

// All classes of S_n moving at most max_moved points (identity first), in
// canonical order.
std::vector<ClassInfo> class_representatives(int n, int max_moved);

// Same set as cycle types only; cheaper when sizes are not needed.
std::vector<CycleType> class_types(int n, int max_moved);

// Generators of C_{S_n}(pi): every cycle of pi, a pointwise swap for each
// pair of equal-length cycles, and adjacent transpositions on the fixed
// points.
std::vector<Permutation> centralizer_generators(const Permutation& pi);

}  // namespace permball
