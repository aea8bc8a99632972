#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "permball/bigint.hpp"

namespace permball {

class CycleType;

// A bijection of {1, ..., n}, stored as its one-indexed image array:
// images()[i - 1] == i^sigma.
//
// Composition acts on the right.  compose(a, b) first applies a, then b:
//
//     i^(a b) = (i^a)^b
//
// which is the opposite of the usual function-composition order of many
// libraries.  Every routine in this project uses this convention.
class Permutation {
 public:
  // Identity of degree n (n >= 1).
  explicit Permutation(int degree = 1);

  // Validates that `images` is a bijection of [n] with one-indexed values.
  static Permutation from_images(std::vector<int> images);

  // Cycles are given with one-indexed points, e.g. {{1, 3, 8, 6}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }

  // One-indexed: image(i) == i^sigma.
  int image(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }

  std::span<const int> images() const { return images_; }

  bool is_identity() const;

  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;

  // Same permutation on [new_degree], fixing the added points.
  Permutation extended(int new_degree) const;

  // Cycle notation "(1 2 3)(4 5)"; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend class LowSupportEnumerator;
  std::vector<int> images_;
};

// i -> (i^sigma)^tau.
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);

// delta^-1 sigma delta.  Relabels sigma: if a -> b in sigma then a^delta -> b^delta.
Permutation conjugate(const Permutation& sigma, const Permutation& delta);

// Sorted list of points not fixed by sigma.
std::vector<int> moved_points(const Permutation& sigma);
int moved_count(const Permutation& sigma);

// |M(sigma pi^-1)|, the number of positions where the image arrays differ.
int hamming_distance(const Permutation& sigma, const Permutation& pi);

CycleType cycle_type(const Permutation& sigma);

// Visits every permutation of [n] moving at most r points exactly once.
// The visited reference is a reused buffer, valid only during the callback.
// Order: by the number k of moved points, then the k-subset in lexicographic
// order, then the fixed-point-free arrangement of it lexicographically.
void enumerate_T(int n, int r, const std::function<void(const Permutation&)>& visit);

// sum_{k <= r} C(n, k) D_k
BigInt count_T(int n, int r);

}  // namespace permball

template <>
struct std::hash<permball::Permutation> {
  std::size_t operator()(const permball::Permutation& p) const noexcept;
};
