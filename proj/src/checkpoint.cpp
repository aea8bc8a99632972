#include "permball/checkpoint.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace permball::orbit {

using nlohmann::json;

std::string to_checkpoint_line(int r, const FamilyEntry& entry) {
  json orbits = json::array();
  for (const auto& o : entry.orbits) {
    orbits.push_back({to_decimal(o.orbit_size), o.union_moved, to_decimal(o.joint_centralizer_restricted)});
  }
  json poly = json::array();
  for (const auto& c : entry.polynomial.coefficients()) poly.push_back(to_string(c));
  json line = {{"r", r}, {"class", format_cycle_type(entry.cycle_type)}, {"orbits", orbits}, {"poly", poly}};
  return line.dump();
}

CheckpointRecord parse_checkpoint_line(const std::string& line, int degree) {
  const json j = json::parse(line);
  CheckpointRecord rec;
  rec.r = j.at("r").get<int>();
  rec.entry.cycle_type = parse_cycle_type(j.at("class").get<std::string>(), degree);
  for (const auto& o : j.at("orbits")) {
    OrbitRecord orbit;
    orbit.orbit_size = BigInt(o.at(0).get<std::string>());
    orbit.union_moved = o.at(1).get<int>();
    orbit.joint_centralizer_restricted = BigInt(o.at(2).get<std::string>());
    rec.entry.orbits.push_back(std::move(orbit));
  }
  std::vector<BigRational> coeffs;
  for (const auto& c : j.at("poly")) coeffs.emplace_back(c.get<std::string>());
  rec.entry.polynomial = RationalPolynomial(std::move(coeffs));
  if (rec.entry.polynomial != polynomial_from_orbits(rec.entry.cycle_type, rec.entry.orbits)) {
    throw std::runtime_error("checkpoint: polynomial does not match orbit data for class " +
                             format_cycle_type(rec.entry.cycle_type));
  }
  return rec;
}

void append_checkpoint(const std::string& path, int r, const FamilyEntry& entry) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("checkpoint: cannot open " + path);
  out << to_checkpoint_line(r, entry) << '\n';
  out.flush();
}

std::vector<CheckpointRecord> load_checkpoint(const std::string& path, int r) {
  std::vector<CheckpointRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    json j;
    try {
      j = json::parse(lines[i]);
    } catch (const json::parse_error&) {
      if (i + 1 == lines.size()) break;
      throw std::runtime_error("checkpoint: malformed line " + std::to_string(i + 1) + " in " + path);
    }
    if (j.at("r").get<int>() != r) continue;
    out.push_back(parse_checkpoint_line(lines[i], 2 * r));
  }
  return out;
}

}  // namespace permball::orbit
