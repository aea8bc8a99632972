#include "permball/bigint.hpp"

namespace permball {

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= n - i;
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt derangements(unsigned long k) {
  // D_0 = 1, D_1 = 0, D_k = (k-1)(D_{k-1} + D_{k-2}).
  BigInt prev2 = 1, prev1 = 0;
  if (k == 0) return prev2;
  for (unsigned long i = 2; i <= k; ++i) {
    BigInt next = (i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRational& value) { return value.get_str(10); }

BigInt exact_divide(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw ConsistencyError(std::string(what) + ": " + to_decimal(num) +
                           " is not divisible by " + to_decimal(den));
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace permball
