#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace forest {

/// Size caps and modular-arithmetic parameters. Every expensive operation
/// consults the active configuration instead of hard-coded limits.
struct Config {
  int specht_max_n = 7;
  std::int64_t symmetrizer_max_terms = 10'000'000;
  std::int64_t tensor_max = 1'000'000;
  int ehrhart_max_n = 7;
  int exact_rank_max_n = 5;
  std::size_t memo_max_entries = 1'000'000;
  std::vector<std::uint32_t> primes = {2147483647u, 2147483629u};
};

const Config& config();
void set_config(const Config& c);

/// Reads a JSON object whose keys mirror the Config fields; missing keys keep
/// their current values.
Config load_config_file(const std::string& path, Config base = config());

/// Raised when an input would exceed one of the configured caps.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::int64_t limit, std::int64_t requested);
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// Applies FOREST_SPECHT_THREADS (if set) as the OpenMP thread cap.
void configure_threads_from_env();

}  // namespace forest
