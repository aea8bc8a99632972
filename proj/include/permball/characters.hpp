#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "permball/bigint.hpp"
#include "permball/cycle_type.hpp"
#include "permball/partition.hpp"

namespace permball::chars {

// Shapes are encoded by their boundary path read from the bottom-left:
// bit k is 1 for an up step, 0 for a right step, with no leading up steps.
// Removing a border strip of length k swaps a 0 at position p with a 1 at
// p + k; its height is the number of 1s strictly between.  Requires
// lambda_1 + length(lambda) <= 64, i.e. weight <= 63.
using ShapeWord = std::uint64_t;

inline constexpr int kMaxWeight = 63;

ShapeWord shape_word(const IntPartition& lambda);
IntPartition shape_from_word(ShapeWord word);

// weight! / prod of hook lengths
BigInt hook_dimension(const IntPartition& lambda);

// A conjugacy class prepared for repeated evaluation: its non-trivial cycle
// lengths (descending) and the shape word of every suffix of that list,
// used as the memo key for the cycles still to be removed.
struct PreparedClass {
  int degree = 0;
  std::vector<int> cycles;
  std::vector<ShapeWord> suffix_words;

  explicit PreparedClass(const CycleType& ct);
};

// Murnaghan-Nakayama evaluation.  Non-trivial cycles are peeled longest
// first; once only fixed points remain the value is the dimension of the
// residual shape.  Not thread-safe: use one evaluator per worker.
class CharacterEvaluator {
 public:
  explicit CharacterEvaluator(bool memoize = true, std::size_t memo_limit = std::size_t{1} << 21);

  BigInt value(const IntPartition& lambda, const CycleType& ct);
  BigInt value(ShapeWord lambda, const PreparedClass& cls);
  BigInt dimension(ShapeWord lambda);

  std::size_t memo_entries() const { return memo_.size() + dims_.size(); }

 private:
  struct Key {
    ShapeWord shape;
    ShapeWord remaining;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return static_cast<std::size_t>(k.shape * 0x9E3779B97F4A7C15ULL ^ (k.remaining + 0x632BE59BD9B4E019ULL));
    }
  };

  BigInt peel(ShapeWord shape, const PreparedClass& cls, std::size_t index);

  bool memoize_;
  std::size_t memo_limit_;
  std::unordered_map<Key, BigInt, KeyHash> memo_;
  std::unordered_map<ShapeWord, BigInt> dims_;
};

// chi^lambda at the class ct of S_n (weight(lambda) == ct.degree()).
BigInt character_value(const IntPartition& lambda, const CycleType& ct);

}  // namespace permball::chars
