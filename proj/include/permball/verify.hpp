#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permball/bigint.hpp"

// Named verification suites shared by the CLI and the acceptance tests.
namespace permball::verify {

enum class Status { pass, warn, fail };

std::string_view to_string(Status s);

struct Check {
  Status status;
  std::string suite;
  std::string name;
  std::string detail;
};

struct Options {
  unsigned threads = 1;
  bool long_running = false;  // r = 7 family and the larger table cells
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(std::string_view suite, const Options& opts = {});

bool any_failed(const std::vector<Check>& checks);

// Per-class |Omega_{n,r}| for the columns of the small-n table, recomputed:
// `rows` in canonical class order (classes of S_13), a cell is empty when
// the class does not exist in S_n.
struct ClassTable {
  std::vector<std::pair<int, int>> columns;  // (n, r)
  std::vector<std::string> labels;
  std::vector<std::vector<std::optional<BigInt>>> cells;
  std::vector<BigInt> maxima;
};

ClassTable compute_small_n_table(unsigned threads = 1);

}  // namespace permball::verify
