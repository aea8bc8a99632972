#include "permball/cycle_type.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace permball {

CycleType::CycleType(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("CycleType: degree must be >= 1");
}

CycleType CycleType::from_parts(int degree, const std::vector<int>& parts) {
  CycleType ct(degree);
  long moved = 0;
  for (int len : parts) {
    if (len < 1) throw std::invalid_argument("CycleType: cycle lengths must be positive");
    if (len == 1) continue;
    ++ct.mult_[len];
    moved += len;
  }
  if (moved > degree) {
    throw std::invalid_argument("CycleType: cycles move " + std::to_string(moved) +
                                " points but degree is " + std::to_string(degree));
  }
  ct.moved_ = static_cast<int>(moved);
  return ct;
}

std::vector<int> CycleType::parts() const {
  std::vector<int> out;
  for (const auto& [len, count] : mult_) out.insert(out.end(), static_cast<std::size_t>(count), len);
  return out;
}

CycleType CycleType::with_degree(int new_degree) const { return from_parts(new_degree, parts()); }

bool canonical_less(const CycleType& a, const CycleType& b) {
  if (a.moved_count() != b.moved_count()) return a.moved_count() < b.moved_count();
  return a.parts() < b.parts();
}

namespace {

int parse_positive(std::string_view field, std::string_view whole) {
  int value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw std::out_of_range("cycle type '" + std::string(whole) + "': number too large");
  }
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw std::invalid_argument("cycle type '" + std::string(whole) + "': malformed term");
  }
  return value;
}

}  // namespace

CycleType parse_cycle_type(std::string_view text, int degree) {
  if (text == "1") return CycleType(degree);
  if (text.empty()) throw std::invalid_argument("cycle type: empty string");
  std::vector<int> parts;
  long moved = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view term = text.substr(start, comma - start);
    const std::size_t caret = term.find('^');
    const int length = parse_positive(term.substr(0, caret), text);
    const int count = caret == std::string_view::npos ? 1 : parse_positive(term.substr(caret + 1), text);
    if (length < 2) throw std::invalid_argument("cycle type '" + std::string(text) + "': lengths must be >= 2");
    if (count < 1) throw std::invalid_argument("cycle type '" + std::string(text) + "': exponent must be >= 1");
    moved += static_cast<long>(length) * count;
    if (moved > degree) {
      throw std::invalid_argument("cycle type '" + std::string(text) + "' moves more than " +
                                  std::to_string(degree) + " points");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(count), length);
    start = comma + 1;
  }
  return CycleType::from_parts(degree, parts);
}

std::string format_cycle_type(const CycleType& ct) {
  if (ct.is_identity()) return "1";
  std::string out;
  for (const auto& [len, count] : ct.multiplicities()) {
    if (!out.empty()) out += ',';
    out += std::to_string(len);
    if (count > 1) out += '^' + std::to_string(count);
  }
  return out;
}

}  // namespace permball
