#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permball/bigint.hpp"
#include "permball/cycle_type.hpp"
#include "permball/oracle.hpp"
#include "permball/permutation.hpp"
#include "permball/polynomial.hpp"

// Orbit reduction: every pair (sigma, tau) in Omega_{n,r}(pi) with n >= 2r is
// conjugate under C_{S_n}(pi) to a pair supported on [2r], so the orbits of
// C_{S_2r}(pi) on Omega_{2r,r}(pi) determine |Omega_{n,r}(pi)| as a
// polynomial in n.
namespace permball::orbit {

// Largest degree handled by the packed (4 bits per point) representation.
inline constexpr int kMaxPackedDegree = 16;

// Counts Omega_{D,r}(pi) for permutations pi of degree D.  Holds T_r^D in
// packed form so that many classes can be tested against one enumeration.
class OmegaCounter {
 public:
  OmegaCounter(int degree, int r);

  int degree() const { return degree_; }
  int r() const { return r_; }
  std::size_t t_size() const { return low_support_.size(); }

  // |{sigma in T_r^D : |M(sigma^-1 pi)| <= r}|
  std::uint64_t count(const Permutation& pi) const;

  // The sigma coordinates of Omega_{D,r}(pi) in packed form, sorted.
  std::vector<std::uint64_t> sigmas(const Permutation& pi) const;

 private:
  int degree_;
  int r_;
  std::vector<std::uint64_t> low_support_;
};

std::uint64_t pack(const Permutation& p);
Permutation unpack(std::uint64_t packed, int degree);

// Streams every (sigma, tau) with sigma, tau in T_r^{2r} and sigma tau = pi.
// pi may have degree below 2r; it is extended.  Empty when pi moves more
// than 2r points.
void omega_pairs_2r(int r, const Permutation& pi,
                    const std::function<void(const Permutation&, const Permutation&)>& visit);

// Per-orbit data used by the polynomial formula.
struct OrbitRecord {
  BigInt orbit_size;
  int union_moved = 0;                  // |M(pi) u M(sigma)|
  BigInt joint_centralizer_restricted;  // |C_{S_Delta}(pi, sigma)|, Delta = M(pi) u M(sigma)

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct OrbitSummary {
  Permutation sigma_rep;  // smallest packed sigma of the orbit
  OrbitRecord record;
};

// Orbits of C_{S_2r}(pi) acting by conjugation on Omega_{2r,r}(pi).  BFS on
// sigma alone (tau = sigma^-1 pi), seeded in sorted order so the result does
// not depend on generator order.
std::vector<OrbitSummary> orbit_decomposition(int r, const Permutation& pi);

// Same, with an explicit generator list for C_{S_2r}(pi) (must generate it).
std::vector<OrbitSummary> orbit_decomposition(int r, const Permutation& pi,
                                              const std::vector<Permutation>& generators);

// sum over orbits of |C_{S_M(pi)}(pi)| / |C_{S_Delta}(pi, sigma)| * (n-m)!/(n-u)!
RationalPolynomial polynomial_from_orbits(const CycleType& pi_type, const std::vector<OrbitRecord>& orbits);

RationalPolynomial omega_polynomial(int r, const Permutation& pi);

struct FamilyEntry {
  CycleType cycle_type;  // class of S_2r
  RationalPolynomial polynomial;
  std::vector<OrbitRecord> orbits;
};

struct FamilyOptions {
  unsigned threads = 1;
  std::string checkpoint;  // JSON-lines file; empty disables
  bool resume = false;     // reuse completed classes found in `checkpoint`
  std::function<void(const FamilyEntry&)> on_class_done;
};

// One entry per non-identity class of S_2r, in canonical class order.
std::vector<FamilyEntry> n_polynomial_family(int r, const FamilyOptions& opts = {});

struct Dominance {
  bool comparable = false;
  std::vector<std::size_t> winners;  // indices of the dominating (equal) polynomials
  // When not comparable: the eventual maximum `leader`, a `rival` that
  // exceeds it at `witness_n`.
  std::size_t leader = 0;
  std::size_t rival = 0;
  long witness_n = 0;
};

// f dominates when f(n) >= g(n) for every g and every integer n >= n0.
// Decided exactly: each difference h = f - g is checked at every integer in
// [n0, n0 + ceil(1 + max |a_i / a_d|)] and must have positive leading
// coefficient (or vanish).
Dominance dominant_polynomial(const std::vector<RationalPolynomial>& family, long n0);

// h(n) >= 0 for all integers n >= n0; on failure *witness gets such an n.
bool nonnegative_from(const RationalPolynomial& h, long n0, long* witness = nullptr);

// N(n, r).  For n >= 2r the family is evaluated at n (computed when not
// supplied); for r <= n < 2r each class of S_n is counted directly.
MaxResult n_value(int n, int r, const std::vector<FamilyEntry>* family = nullptr, unsigned threads = 1);

// |Omega_{n,r}(pi)| for every non-identity class of S_n (n <= 16), counted at degree n.
std::vector<std::pair<CycleType, BigInt>> class_omega_direct(int n, int r, unsigned threads = 1);

}  // namespace permball::orbit
