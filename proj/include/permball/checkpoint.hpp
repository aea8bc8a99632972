#pragma once

#include <string>
#include <vector>

#include "permball/orbit_engine.hpp"

namespace permball::orbit {

// One line per completed class:
//   {"r":5,"class":"3,2","orbits":[["12",5,"2"],...],"poly":["-220","739/3",...]}
// orbits are (orbit_size, union_moved, joint_centralizer_restricted); poly
// holds the rational coefficients in ascending degree.
struct CheckpointRecord {
  int r = 0;
  FamilyEntry entry;
};

std::string to_checkpoint_line(int r, const FamilyEntry& entry);
CheckpointRecord parse_checkpoint_line(const std::string& line, int degree);

void append_checkpoint(const std::string& path, int r, const FamilyEntry& entry);

// Records in file order; blank lines are skipped, and a truncated final line
// (interrupted write) is ignored.  Malformed lines elsewhere throw.
std::vector<CheckpointRecord> load_checkpoint(const std::string& path, int r);

}  // namespace permball::orbit
