#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace permball {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Raised when an exact identity that must hold by construction fails
// (non-integral character sums, orbit sizes not adding up, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt factorial(unsigned long n);

// n (n-1) ... (n-k+1); 1 when k == 0.
BigInt falling_factorial(unsigned long n, unsigned long k);

BigInt binomial(unsigned long n, unsigned long k);

// Number of fixed-point-free permutations of k points.
BigInt derangements(unsigned long k);

std::string to_decimal(const BigInt& value);
std::string to_string(const BigRational& value);

// Exact division; throws ConsistencyError when `den` does not divide `num`.
BigInt exact_divide(const BigInt& num, const BigInt& den, const char* what);

}  // namespace permball
