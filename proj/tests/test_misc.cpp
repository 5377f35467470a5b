#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include <omp.h>

#include "doctest.h"
#include "forest_specht/config.hpp"
#include "forest_specht/memo.hpp"
#include "forest_specht/partition.hpp"
#include "forest_specht/permutation.hpp"

using namespace forest;

namespace {

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("config file") {
  auto path = temp_file("fs_cfg_ok.json", R"({"specht_max_n": 9, "tensor_max": 42, "primes": [2147483647]})");
  Config c = load_config_file(path);
  CHECK(c.specht_max_n == 9);
  CHECK(c.tensor_max == 42);
  CHECK(c.primes == std::vector<std::uint32_t>{2147483647u});
  CHECK(c.ehrhart_max_n == config().ehrhart_max_n);
  CHECK_THROWS(load_config_file(temp_file("fs_cfg_small.json", R"({"primes": [101]})")));
  CHECK_THROWS(load_config_file(temp_file("fs_cfg_empty.json", R"({"primes": []})")));
  CHECK_THROWS(load_config_file(temp_file("fs_cfg_arr.json", "[1,2]")));
  CHECK_THROWS(load_config_file("/nonexistent/fs.json"));
}

TEST_CASE("cap exception") {
  CapExceeded e("tensor_max", 10, 11);
  CHECK(e.cap() == "tensor_max");
  CHECK(std::string(e.what()).find("tensor_max") != std::string::npos);
}

TEST_CASE("memo table") {
  MemoTable<int> m;
  CHECK_FALSE(m.find("a").has_value());
  m.insert("a", 1);
  m.insert("a", 2);
  CHECK(*m.find("a") == 1);
  Config saved = config();
  Config c = saved;
  c.memo_max_entries = 2;
  set_config(c);
  m.insert("b", 2);
  m.insert("c", 3);
  CHECK_FALSE(m.find("a").has_value());
  CHECK(*m.find("c") == 3);
  set_config(saved);
  m.clear();
  CHECK_FALSE(m.find("c").has_value());
}

TEST_CASE("permutations") {
  auto all = all_perms(4);
  CHECK(all.size() == 24);
  std::set<std::int64_t> idx;
  int even = 0;
  for (const auto& p : all) {
    idx.insert(perm_index(p));
    CHECK(compose(p, inverse(p)) == identity_perm(4));
    even += sign(p) == 1;
  }
  CHECK(idx.size() == 24);
  CHECK(*idx.rbegin() == 23);
  CHECK(even == 12);
  CHECK(cycle_type({1, 2, 0, 4, 3}) == Partition{3, 2});
  CHECK(cycle_type(class_representative({3, 2})) == Partition{3, 2});
  CHECK(compose({1, 0, 2}, {0, 2, 1}) == Perm{1, 2, 0});
  auto stab = block_stabilizer({{0, 1}, {2}}, 3);
  CHECK(stab.size() == 2);
}

TEST_CASE("partitions") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(normalize_partition({0, 1, 3}) == Partition{3, 1});
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK(remove_one_corner({2, 1}).size() == 2);
  CHECK(centralizer_size({2, 2}) == 8);
  CHECK(partition_key({}) == "[]");
  CHECK(partition_key({2, 1}) == "[2,1]");
}

TEST_CASE("thread cap from the environment") {
  setenv("FOREST_SPECHT_THREADS", "1", 1);
  configure_threads_from_env();
  CHECK(omp_get_max_threads() == 1);
  unsetenv("FOREST_SPECHT_THREADS");
}
