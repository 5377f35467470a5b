#include "forest_specht/config.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <mutex>

#include "json.hpp"

namespace forest {

namespace {
std::mutex config_mutex;
Config active_config;
}  // namespace

const Config& config() { return active_config; }

void set_config(const Config& c) {
  std::lock_guard<std::mutex> lock(config_mutex);
  active_config = c;
}

Config load_config_file(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
  if (j.contains("specht_max_n")) base.specht_max_n = j["specht_max_n"].get<int>();
  if (j.contains("symmetrizer_max_terms"))
    base.symmetrizer_max_terms = j["symmetrizer_max_terms"].get<std::int64_t>();
  if (j.contains("tensor_max")) base.tensor_max = j["tensor_max"].get<std::int64_t>();
  if (j.contains("ehrhart_max_n")) base.ehrhart_max_n = j["ehrhart_max_n"].get<int>();
  if (j.contains("exact_rank_max_n")) base.exact_rank_max_n = j["exact_rank_max_n"].get<int>();
  if (j.contains("memo_max_entries"))
    base.memo_max_entries = j["memo_max_entries"].get<std::size_t>();
  if (j.contains("primes")) base.primes = j["primes"].get<std::vector<std::uint32_t>>();
  if (base.primes.empty()) throw std::runtime_error("config: at least one prime is required");
  for (auto p : base.primes)
    if (p < (1u << 30)) throw std::runtime_error("config: primes must exceed 2^30");
  return base;
}

CapExceeded::CapExceeded(std::string cap, std::int64_t limit, std::int64_t requested)
    : std::runtime_error("cap exceeded: " + cap + " (limit " + std::to_string(limit) +
                         ", requested " + std::to_string(requested) + ")"),
      cap_(std::move(cap)) {}

void configure_threads_from_env() {
  if (const char* s = std::getenv("FOREST_SPECHT_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace forest
