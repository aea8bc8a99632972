// Acceptance gate: one PASS/FAIL line per criterion.  All comparisons are
// exact; the time budgets below are the only tolerances.
//
//   acceptance [--criterion K] [--cli PATH]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permball/char_engine.hpp"
#include "permball/characters.hpp"
#include "permball/classes.hpp"
#include "permball/oracle.hpp"
#include "permball/orbit_engine.hpp"
#include "permball/partition.hpp"
#include "permball/reference_data.hpp"
#include "permball/verify.hpp"
#include "test_support.hpp"

using namespace permball;

namespace {

constexpr double kFamilyR5Budget = 15 * 60;  // seconds
constexpr double kTableR6Budget = 60 * 60;
constexpr double kLargeRCellBudget = 5 * 60;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("mismatch: " + what);
    }
  }
  void info(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cell(int n, int r) { return "N(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

BigInt closed_form(int n, int r) {
  if (r == 2) return 3;
  if (r == 3) return 4 * n - 6;
  return 7 * n * n - 31 * n + 36;
}

std::vector<std::pair<int, int>> closed_form_cells() {
  std::vector<std::pair<int, int>> out;
  for (int r = 2; r <= 4; ++r) {
    for (int n = std::max(4, r); n <= 7; ++n) out.emplace_back(n, r);
  }
  return out;
}

const std::vector<std::pair<std::pair<int, int>, long>>& class_table_maxima() {
  static const std::vector<std::pair<std::pair<int, int>, long>> cells = {
      {{5, 5}, 120},    {{6, 5}, 358},    {{7, 5}, 802},     {{8, 5}, 1516},    {{9, 5}, 2564},   {{6, 6}, 720},
      {{7, 6}, 2612},   {{8, 6}, 6946},   {{9, 6}, 15234},   {{10, 6}, 29350},  {{11, 6}, 51530}};
  return cells;
}

const std::vector<std::pair<std::pair<int, int>, long>>& large_r_desk() {
  static const std::vector<std::pair<std::pair<int, int>, long>> cells = {
      {{8, 8}, 40320},      {{9, 8}, 197864},  {{10, 8}, 691886},     {{12, 8}, 4645488},
      {{14, 8}, 19493964},  {{10, 9}, 2012014}, {{12, 12}, 479001600}};
  return cells;
}

Outcome criterion1() {
  Outcome out;
  for (const auto& [n, r] : closed_form_cells()) {
    const BigInt expected = closed_form(n, r);
    const BigInt b = oracle::n_bruteforce(n, r).value;
    const BigInt c = chars::n_characters(n, r).value;
    out.require(b == expected, cell(n, r) + " oracle=" + to_decimal(b) + " expected=" + to_decimal(expected));
    out.require(c == expected, cell(n, r) + " characters=" + to_decimal(c) + " expected=" + to_decimal(expected));
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto family = orbit::n_polynomial_family(5);
  out.require(family.size() == 41, "family size " + std::to_string(family.size()));
  std::multiset<std::string> computed, printed;
  for (const auto& e : family) computed.insert(e.polynomial.to_string());
  for (const auto& s : reference::polynomial_list_r5()) printed.insert(RationalPolynomial::parse(s).to_string());
  out.require(computed == printed, "family differs from the printed r=5 list");
  std::vector<RationalPolynomial> polys;
  for (const auto& e : family) polys.push_back(e.polynomial);
  const auto dom = orbit::dominant_polynomial(polys, 10);
  const auto expected = RationalPolynomial::parse("32/3*n^3-89*n^2+739/3*n-220");
  out.require(dom.comparable && dom.winners.size() == 1 && polys[dom.winners[0]] == expected &&
                  family[dom.winners[0]].cycle_type.is_transposition(),
              "dominant entry for n >= 10");
  const double s = seconds_since(t0);
  out.require(s < kFamilyR5Budget, "time " + std::to_string(s) + "s");
  out.info("r=5 family in " + std::to_string(s) + "s");
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [nr, expected] : class_table_maxima()) {
    const auto [n, r] = nr;
    const BigInt by_orbits = orbit::n_value(n, r).value;  // n < 2r here: small-n branch
    const BigInt by_chars = chars::n_characters(n, r).value;
    out.require(by_orbits == expected, cell(n, r) + " orbit=" + to_decimal(by_orbits));
    out.require(by_chars == expected, cell(n, r) + " characters=" + to_decimal(by_chars));
  }
  const double s = seconds_since(t0);
  out.require(s < kTableR6Budget, "time " + std::to_string(s) + "s");
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (const auto& [nr, expected] : large_r_desk()) {
    const auto [n, r] = nr;
    const auto t0 = std::chrono::steady_clock::now();
    const BigInt v = chars::n_characters(n, r).value;
    const double s = seconds_since(t0);
    out.require(v == expected, cell(n, r) + " characters=" + to_decimal(v));
    out.require(s < kLargeRCellBudget, cell(n, r) + " time " + std::to_string(s) + "s");
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  // The character engine needs n >= 3.
  std::size_t compared = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int r = 2; r <= n; ++r) {
      for (const auto& c : class_representatives(n, std::min(n, 2 * r))) {
        const BigInt b = oracle::omega_size(n, r, c.representative);
        const BigInt v = chars::omega_via_characters(n, r, c.cycle_type);
        out.require(b == v, cell(n, r) + " class " + format_cycle_type(c.cycle_type));
        ++compared;
      }
    }
  }
  for (int r = 2; r <= 3; ++r) {
    for (const auto& e : orbit::n_polynomial_family(r)) {
      for (int n = 2 * r; n <= 2 * r + 2; ++n) {
        const BigInt b = oracle::omega_size(n, r, canonical_representative(e.cycle_type.with_degree(n)));
        out.require(e.polynomial.evaluate(n) == BigRational(b), cell(n, r) + " class " + format_cycle_type(e.cycle_type));
        ++compared;
      }
    }
  }
  out.info(std::to_string(compared) + " class values compared");
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::vector<std::pair<std::pair<int, int>, MaxResult>> cells;
  for (const auto& [n, r] : closed_form_cells()) cells.push_back({{n, r}, oracle::n_bruteforce(n, r)});
  for (const auto& [nr, v] : class_table_maxima()) cells.push_back({nr, chars::n_characters(nr.first, nr.second)});
  for (const auto& [nr, v] : large_r_desk()) cells.push_back({nr, chars::n_characters(nr.first, nr.second)});
  bool from_three = true;
  for (const auto& [nr, m] : cells) {
    if (m.transposition_attains()) continue;
    std::string classes;
    for (const auto& c : m.maximizers) classes += " " + format_cycle_type(c);
    out.require(false, cell(nr.first, nr.second) + " maximizers:" + classes);
    from_three = from_three && nr.second == 2;
  }
  out.info(std::string("restricted to r >= 3: ") + (from_three ? "all cells pass" : "failures remain"));
  return out;
}

Outcome criterion7() {
  Outcome out;
  // (a) sum_s |C_s| |Omega(rep_s)| = |T_r^n|^2
  for (int n = 1; n <= 7; ++n) {
    const auto reps = class_representatives(n, n);
    for (int r = 1; r <= n; ++r) {
      BigInt mass = 0;
      for (const auto& c : reps) mass += c.class_size * oracle::omega_size(n, r, c.representative);
      const BigInt t = count_T(n, r);
      out.require(mass == t * t, "mass identity n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  // (b) orthogonality and sum of squared dimensions
  for (int n = 1; n <= 8; ++n) {
    const auto shapes = partitions_of(n);
    const auto reps = class_representatives(n, n);
    std::vector<std::vector<BigInt>> chi(shapes.size());
    BigInt dims = 0;
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      for (const auto& c : reps) chi[a].push_back(chars::character_value(shapes[a], c.cycle_type));
      dims += chi[a][0] * chi[a][0];
    }
    out.require(dims == factorial(static_cast<unsigned long>(n)), "sum of dim^2, n=" + std::to_string(n));
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      for (std::size_t b = 0; b < shapes.size(); ++b) {
        BigInt row = 0, col = 0;
        for (std::size_t k = 0; k < reps.size(); ++k) row += reps[k].class_size * chi[a][k] * chi[b][k];
        out.require(row == (a == b ? factorial(static_cast<unsigned long>(n)) : BigInt(0)),
                    "row orthogonality n=" + std::to_string(n));
        if (a < reps.size() && b < reps.size()) {
          for (std::size_t s = 0; s < shapes.size(); ++s) col += chi[s][a] * chi[s][b];
          out.require(col == (a == b ? reps[a].centralizer_order : BigInt(0)),
                      "column orthogonality n=" + std::to_string(n));
        }
      }
    }
  }
  // (c) class constants
  for (int n = 3; n <= 6; ++n) {
    const auto reps = class_representatives(n, n);
    for (const auto& ci : reps) {
      for (const auto& cj : reps) {
        BigInt total = 0;
        for (const auto& cs : reps) {
          const BigInt a = chars::class_constant(n, ci.cycle_type, cj.cycle_type, cs.cycle_type);
          out.require(a >= 0, "class constant sign n=" + std::to_string(n));
          total += a * cs.class_size;
        }
        out.require(total == ci.class_size * cj.class_size, "class constant sum n=" + std::to_string(n));
      }
    }
  }
  // (d) metric axioms; no two permutations are at distance 1
  for (int n = 1; n <= 5; ++n) {
    const auto group = permball::testing::symmetric_group(n);
    for (const auto& x : group) {
      for (const auto& y : group) {
        const int d = hamming_distance(x, y);
        out.require(d != 1, "distance 1 occurs, n=" + std::to_string(n));
        out.require((d == 0) == (x == y) && d == hamming_distance(y, x), "identity/symmetry n=" + std::to_string(n));
        out.require(d == moved_count(compose(x, inverse(y))), "invariance n=" + std::to_string(n));
        for (const auto& z : group) {
          if (n <= 4) out.require(d <= hamming_distance(x, z) + hamming_distance(z, y), "triangle n=" + std::to_string(n));
        }
      }
    }
  }
  // Triangle inequality for n = 5 against a fixed third point set.
  const auto s5 = permball::testing::symmetric_group(5);
  for (std::size_t i = 0; i < s5.size(); i += 7) {
    for (const auto& y : s5) {
      for (const auto& z : s5) {
        out.require(hamming_distance(s5[i], y) <= hamming_distance(s5[i], z) + hamming_distance(z, y), "triangle n=5");
      }
    }
  }
  return out;
}

std::string run_capture(const std::string& command, int* status) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return output;
  }
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) output += buf.data();
  *status = pclose(pipe);
  return output;
}

Outcome criterion8(const std::string& cli) {
  Outcome out;
  const std::string anomaly = "class table [3^2,2] (7,6)";
  auto has_warn = [&](const std::vector<verify::Check>& checks) {
    for (const auto& c : checks) {
      if (c.name == anomaly) {
        return c.status == verify::Status::warn && c.detail.find("computed=") != std::string::npos &&
               c.detail.find("printed=15394") != std::string::npos;
      }
    }
    return false;
  };
  const auto checks = verify::run_suite("tables");
  out.require(has_warn(checks), "in-process suite reports " + anomaly + " as WARN with both values");
  out.require(!verify::any_failed(checks), "tables suite has FAIL lines");
  std::size_t warns = 0;
  for (const auto& c : checks) warns += c.status == verify::Status::warn;
  out.info(std::to_string(warns) + " WARN lines");

  if (cli.empty()) {
    out.info("CLI not given; in-process check only");
    return out;
  }
  int status = 0;
  const std::string text = run_capture(cli + " verify --suite tables", &status);
  out.require(status == 0, "CLI exit status " + std::to_string(status));
  bool found = false;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(anomaly) != std::string::npos) {
      found = line.rfind("WARN", 0) == 0 && line.find("computed=") != std::string::npos &&
              line.find("printed=15394") != std::string::npos;
    }
  }
  out.require(found, "CLI line for " + anomaly);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string cli;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--criterion") {
      only = std::stoi(argv[i + 1]);
    } else if (flag == "--cli") {
      cli = argv[i + 1];
    } else {
      std::cerr << "usage: acceptance [--criterion K] [--cli PATH]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"small-r closed forms (oracle, characters)", criterion1},
      {"r=5 family: 41 entries, printed list, dominant transposition", criterion2},
      {"per-class table bottom row (orbit small-n branch, characters)", criterion3},
      {"desk-scale N(n,r) by characters", criterion4},
      {"oracle = characters (n <= 7), oracle = polynomials (r = 2, 3)", criterion5},
      {"transposition among the maximizers of every computed N(n,r)", criterion6},
      {"mass identity, orthogonality, class constants, metric axioms", criterion7},
      {"printed-table anomalies reported as WARN", [&] { return criterion8(cli); }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && static_cast<std::size_t>(only) != k + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s criterion %zu: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                seconds_since(t0));
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
  }
  return all ? 0 : 1;
}
