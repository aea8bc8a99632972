#include "permball/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "permball/partition.hpp"

namespace permball {

BigInt support_centralizer_order(const CycleType& ct) {
  BigInt order = 1;
  for (const auto& [len, count] : ct.multiplicities()) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(count));
    order *= power * factorial(static_cast<unsigned long>(count));
  }
  return order;
}

BigInt centralizer_order(const CycleType& ct) {
  return support_centralizer_order(ct) * factorial(static_cast<unsigned long>(ct.fixed_points()));
}

BigInt class_size(const CycleType& ct) {
  return exact_divide(factorial(static_cast<unsigned long>(ct.degree())), centralizer_order(ct),
                      "class_size");
}

Permutation canonical_representative(const CycleType& ct) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : ct.parts()) {
    std::vector<int> cycle;
    for (int k = 0; k < len; ++k) cycle.push_back(next++);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(ct.degree(), cycles);
}

ClassInfo class_info(const CycleType& ct) {
  return ClassInfo{ct, canonical_representative(ct), class_size(ct), centralizer_order(ct)};
}

std::vector<CycleType> class_types(int n, int max_moved) {
  if (n < 1 || max_moved < 0 || max_moved > n) {
    throw std::out_of_range("class_representatives: need 0 <= max_moved <= n");
  }
  std::vector<CycleType> out;
  for (int m = 0; m <= max_moved; ++m) {
    std::vector<CycleType> level;
    for_each_partition(m, 2, m, [&](const IntPartition& p) {
      level.push_back(CycleType::from_parts(n, p.parts));
    });
    std::sort(level.begin(), level.end(), canonical_less);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<ClassInfo> class_representatives(int n, int max_moved) {
  std::vector<ClassInfo> out;
  for (const auto& ct : class_types(n, max_moved)) out.push_back(class_info(ct));
  return out;
}

std::vector<Permutation> centralizer_generators(const Permutation& pi) {
  const int n = pi.degree();
  const auto cycles = pi.cycles();
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(n, {c}));

  for (std::size_t a = 0; a < cycles.size(); ++a) {
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      if (cycles[a].size() != cycles[b].size()) continue;
      std::vector<std::vector<int>> swaps;
      for (std::size_t k = 0; k < cycles[a].size(); ++k) swaps.push_back({cycles[a][k], cycles[b][k]});
      gens.push_back(Permutation::from_cycles(n, swaps));
    }
  }

  std::vector<int> fixed;
  for (int i = 1; i <= n; ++i) {
    if (pi.image(i) == i) fixed.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < fixed.size(); ++k) {
    gens.push_back(Permutation::from_cycles(n, {{fixed[k], fixed[k + 1]}}));
  }
  return gens;
}

}  // namespace permball
