#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "forest_specht/config.hpp"

namespace forest {

/// Write-once cache shared across threads. Inserting an existing key keeps
/// the first value; the table is dropped wholesale when it outgrows the
/// configured bound.
template <class Value>
class MemoTable {
 public:
  std::optional<Value> find(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const Value& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (table_.size() >= config().memo_max_entries) table_.clear();
    table_.emplace(key, value);
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Value> table_;
};

}  // namespace forest
