#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permball/bigint.hpp"

namespace permball {

// Polynomial in the indeterminate n with exact rational coefficients,
// stored in ascending degree with no trailing zeros (zero is empty).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> ascending);

  static RationalPolynomial constant(const BigRational& c);

  // (n - a)(n - a - 1) ... (n - a - length + 1); 1 when length == 0.
  static RationalPolynomial falling(long a, int length);

  // Parses the form printed by to_string, e.g. "32/3*n^3-89*n^2+739/3*n-220".
  static RationalPolynomial parse(std::string_view text);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  BigRational leading() const;
  BigRational coefficient(int k) const;

  BigRational evaluate(const BigRational& x) const;
  BigRational evaluate(long x) const { return evaluate(BigRational(x)); }

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const BigRational& scale);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) { return a *= s; }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  // Highest degree first, "a/b*n^k" terms, e.g. "7*n^2-31*n+36"; zero is "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

}  // namespace permball
