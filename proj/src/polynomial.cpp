#include "permball/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace permball {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::falling(long a, int length) {
  RationalPolynomial out = constant(1);
  for (int k = 0; k < length; ++k) {
    out = out * RationalPolynomial({BigRational(-(a + k)), BigRational(1)});
  }
  return out;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPolynomial::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

BigRational RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (negative) out += '-';
    else if (!out.empty()) out += '+';
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "n";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

[[noreturn]] void bad_poly(std::string_view text) {
  throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
}

}  // namespace

RationalPolynomial RationalPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) bad_poly(text);
  std::vector<BigRational> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad_poly(text);
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) bad_poly(text);
    pos = end;

    BigRational coeff = 1;
    int power = 0;
    const std::size_t npos_var = term.find('n');
    std::string number = term;
    if (npos_var != std::string::npos) {
      power = 1;
      std::string rest = term.substr(npos_var + 1);
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2) bad_poly(text);
        for (std::size_t k = 1; k < rest.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(rest[k]))) bad_poly(text);
        }
        power = std::stoi(rest.substr(1));
      }
      number = term.substr(0, npos_var);
      if (!number.empty()) {
        if (number.back() != '*') bad_poly(text);
        number.pop_back();
        if (number.empty()) bad_poly(text);
      }
    }
    if (!number.empty()) {
      for (char ch : number) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') bad_poly(text);
      }
      if (number.front() == '/' || number.back() == '/') bad_poly(text);
      if (coeff.set_str(number, 10) != 0 || coeff.get_den() == 0) bad_poly(text);
      coeff.canonicalize();
    }
    if (static_cast<std::size_t>(power) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(power) + 1, 0);
    coeffs[static_cast<std::size_t>(power)] += sign * coeff;
  }
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace permball
