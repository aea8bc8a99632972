#pragma once

#include <string>
#include <utility>
#include <vector>

// Published reference values, kept verbatim (including their known
// inconsistencies) so runs can be diffed against them.
namespace permball::reference {

// Row of the per-class table of |Omega_{n,r}| for r in {5, 6, 7} and
// r <= n <= 2r - 1.  Cells are decimal strings; "" is a blank cell.
struct ClassTableRow {
  std::string label;
  std::vector<std::string> cells;
};

// (n, r) for each column of the per-class table.
const std::vector<std::pair<int, int>>& class_table_columns();
const std::vector<ClassTableRow>& class_table_rows();
const std::vector<std::string>& class_table_maxima();  // N(n, r)

struct LargeRCell {
  int n;
  int r;
  std::string value;
};

// N(n, r) for 8 <= r <= 14 and r <= n <= 43 (cells that were not computed are absent).
const std::vector<LargeRCell>& large_r_cells();

// Printed polynomial lists for r = 5, 6, 7, in the printed order.
const std::vector<std::string>& polynomial_list_r5();
const std::vector<std::string>& polynomial_list_r6();
const std::vector<std::string>& polynomial_list_r7();

}  // namespace permball::reference
