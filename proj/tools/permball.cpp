// Command-line front end: per-class counts, polynomial families, N(n, r)
// from characters, and the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permball/char_engine.hpp"
#include "permball/classes.hpp"
#include "permball/oracle.hpp"
#include "permball/orbit_engine.hpp"
#include "permball/parallel.hpp"
#include "permball/verify.hpp"

using namespace permball;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kConsistency = 3, kIncomparable = 4 };

struct Row {
  std::string label;
  std::optional<BigInt> value;
  std::optional<RationalPolynomial> poly;
};

// One (n, r) computation as printed.
struct Report {
  std::optional<int> n;
  int r = 0;
  std::string engine;
  std::vector<Row> rows;
  std::optional<MaxResult> max;
  std::optional<orbit::Dominance> dominance;
  std::vector<std::string> class_labels;  // indexes for `dominance`
};

struct CommonOptions {
  std::string format = "text";
  unsigned threads = default_threads();
};

std::vector<std::string> labels_of(const std::vector<CycleType>& classes) {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(format_cycle_type(c));
  return out;
}

json poly_json(const RationalPolynomial& p) {
  json coeffs = json::array();
  for (int k = 0; k <= std::max(0, p.degree()); ++k) coeffs.push_back(to_string(p.coefficient(k)));
  return coeffs;
}

json to_json(const Report& rep) {
  json out;
  out["n"] = rep.n ? json(*rep.n) : json(nullptr);
  out["r"] = rep.r;
  out["engine"] = rep.engine;
  json results = json::array();
  for (const auto& row : rep.rows) {
    json item;
    item["class"] = row.label;
    if (row.value) item["value"] = to_decimal(*row.value);
    if (row.poly) {
      item["poly"] = poly_json(*row.poly);
      item["text"] = row.poly->to_string();
    }
    results.push_back(std::move(item));
  }
  out["results"] = std::move(results);
  if (rep.max) {
    out["max"] = {{"value", to_decimal(rep.max->value)},
                  {"classes", labels_of(rep.max->maximizers)},
                  {"transposition", rep.max->transposition_attains()}};
  } else if (rep.dominance) {
    const auto& d = *rep.dominance;
    if (d.comparable) {
      std::vector<std::string> winners;
      for (std::size_t i : d.winners) winners.push_back(rep.class_labels[i]);
      out["max"] = {{"comparable", true},
                    {"from_n", 2 * rep.r},
                    {"classes", winners},
                    {"poly", poly_json(*rep.rows[d.winners.front()].poly)},
                    {"text", rep.rows[d.winners.front()].poly->to_string()}};
    } else {
      out["max"] = {{"comparable", false},
                    {"from_n", 2 * rep.r},
                    {"leader", rep.class_labels[d.leader]},
                    {"rival", rep.class_labels[d.rival]},
                    {"witness_n", d.witness_n}};
    }
  } else {
    out["max"] = nullptr;
  }
  return out;
}

void print_text(const Report& rep) {
  std::cout << rep.engine << (rep.n ? " n=" + std::to_string(*rep.n) : "") << " r=" << rep.r << '\n';
  for (const auto& row : rep.rows) {
    std::cout << row.label << '\t' << (row.value ? to_decimal(*row.value) : row.poly->to_string()) << '\n';
  }
  if (rep.max) {
    std::cout << "max\t" << to_decimal(rep.max->value) << '\t';
    const auto labels = labels_of(rep.max->maximizers);
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? " " : "") << labels[i];
    std::cout << '\n';
  }
  if (rep.dominance) {
    const auto& d = *rep.dominance;
    if (d.comparable) {
      std::cout << "dominant for n >= " << 2 * rep.r << '\t';
      for (std::size_t k = 0; k < d.winners.size(); ++k) std::cout << (k ? " " : "") << rep.class_labels[d.winners[k]];
      std::cout << '\t' << rep.rows[d.winners.front()].poly->to_string() << '\n';
    } else {
      std::cout << "incomparable for n >= " << 2 * rep.r << "\tleader " << rep.class_labels[d.leader] << " rival "
                << rep.class_labels[d.rival] << " at n=" << d.witness_n << '\n';
    }
  }
}

std::string csv_field(const std::string& s) {
  return s.find_first_of(",\"") == std::string::npos ? s : '"' + s + '"';
}

// Rows are classes in canonical order, columns are the (n, r) reports.
void print_csv(const std::vector<Report>& reports) {
  std::vector<std::string> order;
  std::map<std::string, std::size_t> seen;
  std::vector<std::map<std::string, std::string>> cells(reports.size());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    for (const auto& row : reports[k].rows) {
      if (seen.emplace(row.label, order.size()).second) order.push_back(row.label);
      cells[k][row.label] = row.value ? to_decimal(*row.value) : row.poly->to_string();
    }
  }
  // Merge ranges: classes of larger n come later, keep canonical order.
  const int degree = 64;
  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return canonical_less(parse_cycle_type(a, degree), parse_cycle_type(b, degree));
  });
  std::cout << "class";
  for (const auto& rep : reports) {
    std::cout << ',' << csv_field(rep.n ? "(" + std::to_string(*rep.n) + "," + std::to_string(rep.r) + ")"
                                        : "r=" + std::to_string(rep.r));
  }
  std::cout << '\n';
  for (const auto& label : order) {
    std::cout << csv_field(label);
    for (const auto& col : cells) {
      const auto it = col.find(label);
      std::cout << ',' << (it == col.end() ? "" : it->second);
    }
    std::cout << '\n';
  }
  if (std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.max.has_value(); })) {
    std::cout << "N";
    for (const auto& rep : reports) std::cout << ',' << (rep.max ? to_decimal(rep.max->value) : "");
    std::cout << '\n';
  }
}

void emit(const std::vector<Report>& reports, const std::string& format) {
  if (format == "csv") {
    print_csv(reports);
  } else if (format == "json") {
    if (reports.size() == 1) {
      std::cout << to_json(reports.front()).dump(2) << '\n';
    } else {
      json all = json::array();
      for (const auto& rep : reports) all.push_back(to_json(rep));
      std::cout << all.dump(2) << '\n';
    }
  } else {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      if (k) std::cout << '\n';
      print_text(reports[k]);
    }
  }
}

// "7" or "5..9"
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::size_t used = 0;
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const int lo = std::stoi(text.substr(0, dots), &used);
      const std::string rest = text.substr(dots + 2);
      std::size_t used_hi = 0;
      const int hi = std::stoi(rest, &used_hi);
      if (used == dots && used_hi == rest.size() && lo <= hi) return {lo, hi};
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("--n: expected an integer or a range a..b, got '" + text + "'");
}

MaxResult max_of(const std::vector<std::pair<CycleType, BigInt>>& values) {
  MaxResult m;
  m.value = 0;
  for (const auto& [ct, v] : values) {
    if (v > m.value) {
      m.value = v;
      m.maximizers.clear();
    }
    if (v == m.value) m.maximizers.push_back(ct);
  }
  return m;
}

Report oracle_report(int n, int r, const std::string& cls, const oracle::Options& opts) {
  Report rep{n, r, "oracle", {}, {}, {}, {}};
  if (cls != "all") {
    const CycleType ct = parse_cycle_type(cls, n);
    rep.rows.push_back({format_cycle_type(ct), oracle::omega_size(n, r, canonical_representative(ct), opts), {}});
    return rep;
  }
  if (r < 1 || r > n) throw std::out_of_range("oracle: need 1 <= r <= n");
  const auto reps = class_representatives(n, std::min(n, 2 * r));
  std::vector<BigInt> values(reps.size() - 1);
  oracle::Options serial = opts;
  serial.threads = 1;
  parallel_for(values.size(), opts.threads,
               [&](std::size_t k) { values[k] = oracle::omega_size(n, r, reps[k + 1].representative, serial); });
  std::vector<std::pair<CycleType, BigInt>> all;
  for (std::size_t k = 0; k < values.size(); ++k) {
    rep.rows.push_back({format_cycle_type(reps[k + 1].cycle_type), values[k], {}});
    all.emplace_back(reps[k + 1].cycle_type, values[k]);
  }
  rep.max = max_of(all);
  return rep;
}

Report char_report(int n, int r, const std::string& cls, bool per_class, unsigned threads) {
  Report rep{n, r, "characters", {}, {}, {}, {}};
  if (cls != "all") {
    const CycleType ct = parse_cycle_type(cls, n);
    rep.rows.push_back({format_cycle_type(ct), chars::omega_via_characters(n, r, ct, threads), {}});
    return rep;
  }
  const auto values = chars::class_omega_list(n, r, threads);
  if (per_class) {
    for (const auto& [ct, v] : values) rep.rows.push_back({format_cycle_type(ct), v, {}});
  }
  rep.max = max_of(values);
  return rep;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

int run_verify(const std::vector<std::string>& suites, const verify::Options& opts, const std::string& format) {
  std::vector<verify::Check> checks;
  for (const auto& s : suites) {
    auto part = verify::run_suite(s, opts);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) ++counts[static_cast<int>(c.status)];
  if (format == "json") {
    json out;
    out["checks"] = json::array();
    for (const auto& c : checks) {
      out["checks"].push_back(
          {{"status", verify::to_string(c.status)}, {"suite", c.suite}, {"check", c.name}, {"detail", c.detail}});
    }
    out["summary"] = {{"pass", counts[0]}, {"warn", counts[1]}, {"fail", counts[2]}};
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "status,suite,check,detail\n";
    for (const auto& c : checks) {
      std::cout << verify::to_string(c.status) << ',' << c.suite << ',' << csv_field(c.name) << ','
                << csv_field(c.detail) << '\n';
    }
  } else {
    for (const auto& c : checks) {
      std::cout << verify::to_string(c.status) << '\t' << c.suite << '\t' << c.name << '\t' << c.detail << '\n';
    }
    std::cout << "summary\tpass=" << counts[0] << " warn=" << counts[1] << " fail=" << counts[2] << '\n';
  }
  return verify::any_failed(checks) ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sizes of intersections of balls of small radius in the symmetric group"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string n_text;
  int r = 0;
  std::string cls = "all";
  bool force = false;
  int max_degree = oracle::Options{}.max_degree;
  bool per_class = false;
  std::string checkpoint;
  std::vector<std::string> suites;
  bool long_running = false;

  auto* oracle_cmd = app.add_subcommand("oracle", "Count |Omega_{n,r}| per class by enumeration");
  oracle_cmd->add_option("--n", n_text, "Degree, or a range a..b")->required();
  oracle_cmd->add_option("--r", r, "Radius")->required();
  oracle_cmd->add_option("--class", cls, "Cycle type such as 3,2^2, or 'all'");
  oracle_cmd->add_flag("--all-classes", [&](std::int64_t) { cls = "all"; }, "Every class (default)");
  oracle_cmd->add_flag("--force", force, "Allow degrees above the enumeration cap");
  oracle_cmd->add_option("--max-degree", max_degree, "Enumeration cap")->capture_default_str();
  add_common(oracle_cmd, common);

  auto* poly_cmd = app.add_subcommand("poly", "Polynomial family of |Omega_{n,r}| for n >= 2r");
  poly_cmd->add_option("--r", r, "Radius")->required();
  poly_cmd->add_option("--resume", checkpoint, "Checkpoint file: completed classes are reused, new ones appended");
  add_common(poly_cmd, common);

  auto* char_cmd = app.add_subcommand("char", "N(n, r) from irreducible characters");
  char_cmd->add_option("--n", n_text, "Degree, or a range a..b")->required();
  char_cmd->add_option("--r", r, "Radius")->required();
  char_cmd->add_option("--class", cls, "Single class to evaluate");
  char_cmd->add_flag("--per-class,--all-classes", per_class, "List |Omega| for every class");
  add_common(char_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suites, "small, tables, conjecture, cross (default: all)")
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_flag("--long", long_running, "Include the radius 7 family and larger table cells");
  add_common(verify_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*oracle_cmd) {
      oracle::Options opts;
      opts.max_degree = max_degree;
      opts.force = force;
      opts.threads = common.threads;
      const auto [lo, hi] = parse_range(n_text);
      std::vector<Report> reports;
      for (int n = lo; n <= hi; ++n) reports.push_back(oracle_report(n, r, cls, opts));
      emit(reports, common.format);
      return kOk;
    }
    if (*char_cmd) {
      const auto [lo, hi] = parse_range(n_text);
      std::vector<Report> reports;
      for (int n = lo; n <= hi; ++n) reports.push_back(char_report(n, r, cls, per_class, common.threads));
      emit(reports, common.format);
      return kOk;
    }
    if (*poly_cmd) {
      if (r >= 7) std::cerr << "note: r = " << r << " enumerates T_r^" << 2 * r << " and may take a long time\n";
      orbit::FamilyOptions opts;
      opts.threads = common.threads;
      opts.checkpoint = checkpoint;
      opts.resume = !checkpoint.empty();
      const auto family = orbit::n_polynomial_family(r, opts);
      Report rep{std::nullopt, r, "orbits", {}, {}, {}, {}};
      std::vector<RationalPolynomial> polys;
      for (const auto& e : family) {
        rep.rows.push_back({format_cycle_type(e.cycle_type), {}, e.polynomial});
        rep.class_labels.push_back(format_cycle_type(e.cycle_type));
        polys.push_back(e.polynomial);
      }
      rep.dominance = orbit::dominant_polynomial(polys, 2 * r);
      emit({rep}, common.format);
      return rep.dominance->comparable ? kOk : kIncomparable;
    }
    verify::Options opts;
    opts.threads = common.threads;
    opts.long_running = long_running;
    return run_verify(suites.empty() ? verify::suite_names() : suites, opts, common.format);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency fault: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
