#pragma once

#include <vector>

#include "permball/bigint.hpp"
#include "permball/cycle_type.hpp"
#include "permball/permutation.hpp"

namespace permball {

// Maximum of |Omega_{n,r}| over a set of classes, with every class attaining it.
struct MaxResult {
  BigInt value;
  std::vector<CycleType> maximizers;

  bool transposition_attains() const;
};

// Brute force over T_r^n.  Trusted and deliberately simple.
namespace oracle {

struct Options {
  int max_degree = 9;  // refuse larger n unless force is set
  bool force = false;
  unsigned threads = 1;
};

// |{rho in T_r^n : rho pi in T_r^n}|, which equals the number of pairs
// (sigma, tau) in T_r^n x T_r^n with sigma tau = pi.
BigInt omega_size(int n, int r, const Permutation& pi, const Options& opts = {});

// I(n, d, r): max of omega_size over classes moving exactly d points.
// Zero when d > 2r.  d == 1 is rejected.
BigInt intersection_max(int n, int d, int r, const Options& opts = {});

// N(n, r): max over non-identity classes moving at most 2r points.
MaxResult n_bruteforce(int n, int r, const Options& opts = {});

}  // namespace oracle
}  // namespace permball
