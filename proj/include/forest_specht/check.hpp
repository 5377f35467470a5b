#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace forest {

struct CheckRecord {
  std::string identity;
  std::string instance;
  std::string left;
  std::string right;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckRecord> records;  // sorted by (identity, instance)
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
  std::vector<std::string> identities() const;
};

enum class CheckScope { small, full };

struct CheckOptions {
  CheckScope scope = CheckScope::small;
  std::uint64_t seed = 1;
  /// Replaces the volume used by the suite with a corrupted one (adds 1 on
  /// every graph that is not a star). Harness self-test.
  bool inject_fault = false;
};

CheckReport run_check(const CheckOptions& opts);

/// {"ok":..,"passed":..,"failed":..,"identities":{name:{"passed":..,"failed":..}},"failures":[...]}
std::string check_report_json(const CheckReport& r, bool pretty = false);

}  // namespace forest
