#include "permball/char_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permball/characters.hpp"
#include "permball/classes.hpp"
#include "permball/parallel.hpp"

namespace permball::chars {

namespace {

void check_range(int n, int r) {
  if (n < 3 || r < 2 || r > n) throw std::out_of_range("character engine: need n >= 3 and 2 <= r <= n");
  if (n > kMaxWeight) throw std::out_of_range("character engine: n must be <= " + std::to_string(kMaxWeight));
}

void check_class(int n, int r, const CycleType& s) {
  if (s.degree() != n) throw std::invalid_argument("character engine: class degree must equal n");
  if (s.moved_count() > 2 * r) throw std::invalid_argument("character engine: class moves more than 2r points");
}

std::vector<ShapeWord> all_shapes(int n) {
  std::vector<ShapeWord> shapes;
  for_each_partition(n, 1, n, [&](const IntPartition& p) { shapes.push_back(shape_word(p)); });
  return shapes;
}

std::size_t chunk_count(std::size_t count, unsigned threads) {
  return threads <= 1 ? 1 : std::min<std::size_t>(count, std::size_t{threads} * 4);
}

// Splits [0, count) into contiguous chunks, one evaluator (and memo) per chunk.
// Partial sums are exact, so the reduction does not depend on scheduling.
template <typename Body>
void for_each_chunk(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t chunks = chunk_count(count, threads);
  parallel_for(chunks, threads, [&](std::size_t c) {
    body(c, count * c / chunks, count * (c + 1) / chunks);
  });
}

// n! |Omega_{n,r}(s)| for each target class s.
std::vector<BigInt> scaled_omegas(int n, int r, const std::vector<CycleType>& targets, unsigned threads) {
  std::vector<PreparedClass> small;
  std::vector<BigInt> small_sizes;
  for (const auto& ct : class_types(n, std::min(n, r))) {
    small.emplace_back(ct);
    small_sizes.push_back(class_size(ct));
  }
  std::vector<PreparedClass> prepared;
  for (const auto& ct : targets) prepared.emplace_back(ct);

  const auto shapes = all_shapes(n);
  const std::size_t chunks = chunk_count(shapes.size(), threads);
  std::vector<std::vector<BigInt>> partial(chunks, std::vector<BigInt>(targets.size(), 0));
  for_each_chunk(shapes.size(), threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    CharacterEvaluator eval;
    auto& acc = partial[c];
    for (std::size_t k = begin; k < end; ++k) {
      const ShapeWord lambda = shapes[k];
      const BigInt dim = eval.dimension(lambda);
      BigInt weighted = 0;
      for (std::size_t i = 0; i < small.size(); ++i) weighted += small_sizes[i] * eval.value(lambda, small[i]);
      const BigInt w = exact_divide(weighted, dim, "central character integrality");
      const BigInt scale = dim * w * w;
      for (std::size_t t = 0; t < prepared.size(); ++t) acc[t] += eval.value(lambda, prepared[t]) * scale;
    }
  });
  std::vector<BigInt> total(targets.size(), 0);
  for (const auto& acc : partial) {
    for (std::size_t t = 0; t < total.size(); ++t) total[t] += acc[t];
  }
  return total;
}

BigInt finish(const BigInt& scaled, int n, const CycleType& s) {
  const std::string what = "character sum for class " + format_cycle_type(s);
  const BigInt omega = exact_divide(scaled, factorial(static_cast<unsigned long>(n)), what.c_str());
  if (omega < 0) throw ConsistencyError("character sum is negative for class " + format_cycle_type(s));
  return omega;
}

}  // namespace

BigInt omega_via_characters(int n, int r, const CycleType& s, unsigned threads) {
  check_range(n, r);
  check_class(n, r, s);
  return finish(scaled_omegas(n, r, {s}, threads).front(), n, s);
}

std::vector<std::pair<CycleType, BigInt>> class_omega_list(int n, int r, unsigned threads) {
  check_range(n, r);
  auto classes = class_types(n, std::min(n, 2 * r));
  classes.erase(classes.begin());
  const auto scaled = scaled_omegas(n, r, classes, threads);
  std::vector<std::pair<CycleType, BigInt>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) out.emplace_back(classes[i], finish(scaled[i], n, classes[i]));
  return out;
}

MaxResult n_characters(int n, int r, unsigned threads) {
  MaxResult out;
  out.value = 0;
  for (auto& [ct, v] : class_omega_list(n, r, threads)) {
    if (v > out.value) {
      out.value = v;
      out.maximizers.clear();
    }
    if (v == out.value) out.maximizers.push_back(ct);
  }
  return out;
}

BigInt class_constant(int n, const CycleType& i, const CycleType& j, const CycleType& s, unsigned threads) {
  if (n < 1 || n > kMaxWeight) throw std::out_of_range("class_constant: n out of range");
  for (const CycleType* ct : {&i, &j, &s}) {
    if (ct->degree() != n) throw std::invalid_argument("class_constant: class degree must equal n");
  }
  const PreparedClass pi(i), pj(j), ps(s);
  const BigInt order = factorial(static_cast<unsigned long>(n));
  const auto shapes = all_shapes(n);
  const std::size_t chunks = chunk_count(shapes.size(), threads);
  std::vector<BigInt> partial(chunks, 0);
  for_each_chunk(shapes.size(), threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    CharacterEvaluator eval;
    for (std::size_t k = begin; k < end; ++k) {
      const BigInt dim = eval.dimension(shapes[k]);
      partial[c] += eval.value(shapes[k], pi) * eval.value(shapes[k], pj) * eval.value(shapes[k], ps) *
                    exact_divide(order, dim, "dimension divides n!");
    }
  });
  BigInt sum = 0;
  for (const auto& p : partial) sum += p;
  const BigInt out = exact_divide(class_size(i) * class_size(j) * sum, order * order, "class constant");
  if (out < 0) throw ConsistencyError("class constant is negative");
  return out;
}

}  // namespace permball::chars
