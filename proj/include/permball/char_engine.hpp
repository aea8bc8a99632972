#pragma once

#include <utility>
#include <vector>

#include "permball/bigint.hpp"
#include "permball/cycle_type.hpp"
#include "permball/oracle.hpp"

// |Omega_{n,r}(s)| and N(n, r) from the irreducible characters of S_n.
namespace permball::chars {

// |Omega_{n,r}(s)| = (1/n!) sum_chi chi(s) chi(1) W_chi^2, where
// W_chi = sum_{i in Delta_r} |C_i| chi_i / chi(1) is an integer (a sum of
// central character values).  Requires n >= 3, 2 <= r <= n, s moving at
// most 2r points.
BigInt omega_via_characters(int n, int r, const CycleType& s, unsigned threads = 1);

// Number of (x, y) in C_i x C_j with x y equal to a fixed element of C_s.
BigInt class_constant(int n, const CycleType& i, const CycleType& j, const CycleType& s, unsigned threads = 1);

// (class, |Omega_{n,r}|) for every non-identity class moving at most 2r
// points, in canonical class order.
std::vector<std::pair<CycleType, BigInt>> class_omega_list(int n, int r, unsigned threads = 1);

MaxResult n_characters(int n, int r, unsigned threads = 1);

}  // namespace permball::chars
