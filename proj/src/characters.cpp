#include "permball/characters.hpp"

#include <bit>
#include <stdexcept>

namespace permball::chars {

namespace {

inline ShapeWord normalize(ShapeWord word) {
  // Leading up steps belong to the infinite vertical boundary.
  return word >> std::countr_one(word);
}

int word_weight(ShapeWord word) {
  int weight = 0, rights = 0;
  for (; word; word >>= 1) {
    if (word & 1) weight += rights;
    else ++rights;
  }
  return weight;
}

}  // namespace

ShapeWord shape_word(const IntPartition& lambda) {
  if (!lambda.parts.empty() && lambda.parts.front() + lambda.length() > 64) {
    throw std::out_of_range("shape_word: partition too large for a 64-bit boundary word");
  }
  ShapeWord word = 0;
  int pos = 0, previous = 0;
  for (auto it = lambda.parts.rbegin(); it != lambda.parts.rend(); ++it) {
    if (*it < previous) throw std::invalid_argument("shape_word: parts must be weakly decreasing");
    pos += *it - previous;
    word |= ShapeWord{1} << pos;
    ++pos;
    previous = *it;
  }
  return word;
}

IntPartition shape_from_word(ShapeWord word) {
  IntPartition out;
  int rights = 0;
  for (; word; word >>= 1) {
    if (word & 1) out.parts.insert(out.parts.begin(), rights);
    else ++rights;
  }
  return out;
}

BigInt hook_dimension(const IntPartition& lambda) {
  CharacterEvaluator eval(false);
  return eval.dimension(shape_word(lambda));
}

PreparedClass::PreparedClass(const CycleType& ct) : degree(ct.degree()), cycles(ct.parts()) {
  for (std::size_t i = 0; i <= cycles.size(); ++i) {
    suffix_words.push_back(shape_word(IntPartition{{cycles.begin() + static_cast<long>(i), cycles.end()}}));
  }
}

CharacterEvaluator::CharacterEvaluator(bool memoize, std::size_t memo_limit)
    : memoize_(memoize), memo_limit_(memo_limit) {}

BigInt CharacterEvaluator::dimension(ShapeWord lambda) {
  if (memoize_) {
    if (auto it = dims_.find(lambda); it != dims_.end()) return it->second;
  }
  // Cells correspond to pairs (right step at p, up step at q > p), hook q - p.
  BigInt hooks = 1;
  std::uint64_t chunk = 1;
  const int top = lambda ? 63 - std::countl_zero(lambda) : -1;
  for (int p = 0; p < top; ++p) {
    if (lambda >> p & 1) continue;
    for (int q = p + 1; q <= top; ++q) {
      if (!(lambda >> q & 1)) continue;
      const auto hook = static_cast<std::uint64_t>(q - p);
      if (chunk > (~std::uint64_t{0}) / 64) {
        hooks *= static_cast<unsigned long>(chunk);
        chunk = 1;
      }
      chunk *= hook;
    }
  }
  hooks *= static_cast<unsigned long>(chunk);
  BigInt dim = exact_divide(factorial(static_cast<unsigned long>(word_weight(lambda))), hooks, "hook length formula");
  if (memoize_) {
    if (dims_.size() >= memo_limit_) dims_.clear();
    dims_.emplace(lambda, dim);
  }
  return dim;
}

BigInt CharacterEvaluator::peel(ShapeWord shape, const PreparedClass& cls, std::size_t index) {
  if (index == cls.cycles.size()) return dimension(shape);
  const Key key{shape, cls.suffix_words[index]};
  if (memoize_) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const int k = cls.cycles[index];
  const int top = shape ? 63 - std::countl_zero(shape) : -1;
  BigInt total = 0;
  for (int p = 0; p + k <= top; ++p) {
    if ((shape >> p & 1) || !(shape >> (p + k) & 1)) continue;
    const ShapeWord between = (shape >> (p + 1)) & ((ShapeWord{1} << (k - 1)) - 1);
    const ShapeWord next = normalize(shape ^ (ShapeWord{1} << p) ^ (ShapeWord{1} << (p + k)));
    if (std::popcount(between) & 1) total -= peel(next, cls, index + 1);
    else total += peel(next, cls, index + 1);
  }
  if (memoize_) {
    if (memo_.size() >= memo_limit_) memo_.clear();
    memo_.emplace(key, total);
  }
  return total;
}

BigInt CharacterEvaluator::value(ShapeWord lambda, const PreparedClass& cls) { return peel(lambda, cls, 0); }

BigInt CharacterEvaluator::value(const IntPartition& lambda, const CycleType& ct) {
  if (lambda.weight() != ct.degree()) {
    throw std::invalid_argument("character_value: partition weight must equal the class degree");
  }
  return value(shape_word(lambda), PreparedClass(ct));
}

BigInt character_value(const IntPartition& lambda, const CycleType& ct) {
  CharacterEvaluator eval;
  return eval.value(lambda, ct);
}

}  // namespace permball::chars
