#include "permball/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "permball/classes.hpp"
#include "permball/parallel.hpp"

namespace permball {

bool MaxResult::transposition_attains() const {
  return std::any_of(maximizers.begin(), maximizers.end(),
                     [](const CycleType& ct) { return ct.is_transposition(); });
}

namespace oracle {

namespace {

void check_limit(int n, const Options& opts) {
  if (n > opts.max_degree && !opts.force) {
    throw std::out_of_range("oracle: n = " + std::to_string(n) + " exceeds the brute-force limit " +
                            std::to_string(opts.max_degree) + " (use force to override)");
  }
}

MaxResult maximize(int n, int r, const std::vector<CycleType>& classes, const Options& opts) {
  std::vector<BigInt> values(classes.size());
  parallel_for(classes.size(), opts.threads, [&](std::size_t i) {
    values[i] = omega_size(n, r, canonical_representative(classes[i]), opts);
  });
  MaxResult out;
  out.value = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (values[i] > out.value) {
      out.value = values[i];
      out.maximizers.clear();
    }
    if (values[i] == out.value) out.maximizers.push_back(classes[i]);
  }
  return out;
}

}  // namespace

BigInt omega_size(int n, int r, const Permutation& pi, const Options& opts) {
  if (r < 1 || r > n) throw std::out_of_range("omega_size: need 1 <= r <= n");
  if (pi.degree() != n) throw std::invalid_argument("omega_size: permutation degree must equal n");
  check_limit(n, opts);
  const auto target = pi.images();
  std::uint64_t count = 0;
  enumerate_T(n, r, [&](const Permutation& rho) {
    const auto img = rho.images();
    int moved = 0;
    for (int i = 0; i < n && moved <= r; ++i) {
      moved += target[static_cast<std::size_t>(img[static_cast<std::size_t>(i)] - 1)] != i + 1;
    }
    count += moved <= r;
  });
  return BigInt(static_cast<unsigned long>(count));
}

BigInt intersection_max(int n, int d, int r, const Options& opts) {
  if (d < 0 || d > n) throw std::out_of_range("intersection_max: need 0 <= d <= n");
  if (d == 1) throw std::invalid_argument("intersection_max: no two permutations are at distance 1");
  if (r < 1 || r > n) throw std::out_of_range("intersection_max: need 1 <= r <= n");
  check_limit(n, opts);
  if (d > 2 * r) return 0;
  std::vector<CycleType> exact;
  for (const auto& ct : class_types(n, d)) {
    if (ct.moved_count() == d) exact.push_back(ct);
  }
  return maximize(n, r, exact, opts).value;
}

MaxResult n_bruteforce(int n, int r, const Options& opts) {
  if (r < 2 || r > n) throw std::out_of_range("n_bruteforce: need 2 <= r <= n");
  check_limit(n, opts);
  auto classes = class_types(n, std::min(n, 2 * r));
  classes.erase(classes.begin());  // identity
  return maximize(n, r, classes, opts);
}

}  // namespace oracle
}  // namespace permball
