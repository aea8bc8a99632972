#include "permball/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permball {

int IntPartition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void extend(int remaining, int min_part, int max_part, IntPartition& current,
            const std::function<void(const IntPartition&)>& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= min_part; --part) {
    current.parts.push_back(part);
    extend(remaining - part, min_part, part, current, visit);
    current.parts.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, int min_part, int max_part,
                        const std::function<void(const IntPartition&)>& visit) {
  if (n < 0 || min_part < 1) throw std::out_of_range("for_each_partition: invalid arguments");
  IntPartition current;
  extend(n, min_part, max_part, current, visit);
}

std::vector<IntPartition> partitions_of(int n) {
  std::vector<IntPartition> out;
  for_each_partition(n, 1, n, [&](const IntPartition& p) { out.push_back(p); });
  return out;
}

IntPartition conjugate(const IntPartition& lambda) {
  IntPartition out;
  if (lambda.parts.empty()) return out;
  out.parts.assign(static_cast<std::size_t>(lambda.parts.front()), 0);
  for (int part : lambda.parts) {
    for (int c = 0; c < part; ++c) ++out.parts[static_cast<std::size_t>(c)];
  }
  return out;
}

}  // namespace permball
