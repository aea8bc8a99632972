#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace permball {

// Conjugacy class label of S_n: multiplicity t_i of each cycle length i >= 2.
// Fixed points are implicit.
class CycleType {
 public:
  using Multiplicities = std::map<int, int, std::greater<>>;  // longest cycles first

  CycleType() = default;

  // Identity class of S_n.
  explicit CycleType(int degree);

  // Parts of length 1 are ignored; parts < 1 are rejected, as is a total
  // moved count exceeding `degree`.
  static CycleType from_parts(int degree, const std::vector<int>& parts);

  int degree() const { return degree_; }
  const Multiplicities& multiplicities() const { return mult_; }

  // sum_i i * t_i
  int moved_count() const { return moved_; }
  int fixed_points() const { return degree_ - moved_; }
  bool is_identity() const { return mult_.empty(); }
  bool is_transposition() const { return moved_ == 2; }

  // Cycle lengths >= 2, descending, with repetition.
  std::vector<int> parts() const;

  // Same class label in S_new_degree.
  CycleType with_degree(int new_degree) const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  int degree_ = 0;
  int moved_ = 0;
  Multiplicities mult_;
};

// Canonical class order: moved-point count, then descending part lists
// compared lexicographically.
bool canonical_less(const CycleType& a, const CycleType& b);

// Grammar: comma-separated terms "L" or "L^k" with L >= 2, k >= 1,
// e.g. "4,3,2^2".  The identity class is written "1".
CycleType parse_cycle_type(std::string_view text, int degree);

// Lengths in descending order, repeated lengths folded into "L^k".
std::string format_cycle_type(const CycleType& ct);

}  // namespace permball
