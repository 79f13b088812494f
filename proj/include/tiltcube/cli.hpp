#pragma once

// Command-line surface and the family file format.
//
// Family files: header line `n=<N>`, one set per line with elements
// comma-separated ascending, `{}` for the empty set, `#` starts a comment.
// Writing is normalized, so parse -> format round-trips byte-identically on
// normalized files.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tiltcube/bounds.hpp"
#include "tiltcube/core.hpp"

namespace tiltcube {

SetFamily read_family(std::istream& in);
SetFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const SetFamily& family);
void write_family_file(const std::string& path, const SetFamily& family);
std::string format_family(const SetFamily& family);

struct TableRow {
  int n = 0;
  std::optional<BigInt> b0;              // even n only
  Rational lp_full;                      // full 1:2 window LP optimum
  Rational lp_jk;                        // residue-class LP optimum at 1:2
  std::optional<std::size_t> exact_max;  // proved maximum family size, when within budget
  BigInt middle_binomial;
  std::optional<Rational> b0_over_middle;
  Rational lp_full_over_middle;
  std::optional<bool> lp_full_equals_b0;
};

/// Per-n reproduction rows for the ratio-1:2 problem. Exact search runs for
/// n <= exact_max_n with the given time budget; rows outside a column's
/// domain are left empty.
std::vector<TableRow> reproduction_table(int min_n, int max_n, int exact_max_n,
                                         double search_time_limit_seconds = 60.0);

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

/// Dispatches one subcommand (construct | verify | solve | lp-bound |
/// chains | shadow | bounds | table). args excludes the program name.
/// Exit code 0 on success, 1 on validation failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltcube
