#pragma once

// Named verification suites comparing computed counts against published
// tables. Each suite yields rows of (item, expected, computed, pass).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surfemb/enumerate.hpp"

namespace surfemb {

struct ReportRow {
  std::string item;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;  // skipped rows, logged experiments

  bool passed() const;
  /// Aligned human-readable table followed by notes.
  std::string table() const;
  /// One "item\texpected\tcomputed\tPASS|FAIL" line per row.
  std::string tsv() const;
};

struct SuiteOptions {
  bool include_slow = false;
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidInput on an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// "20^1,4^1,2^3,1^1": group orders in decreasing order with multiplicities.
std::string format_group_orders(const std::map<std::uint64_t, int>& histogram);

struct TorusRow {
  std::string name;
  std::string graph_spec;  // graphs::parse_spec syntax
  int classes;
  int orientable;
  int non_orientable;
  std::string groups;
  bool slow;
};

/// Rows of the torus table that fit the default budget, plus the slow K6 row.
const std::vector<TorusRow>& torus_table_rows();

}  // namespace surfemb
