#pragma once

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bwbverify {

/// Write-once memo table shared between threads. Values for a key are a pure
/// function of the key, so a racing second writer is dropped.
template <typename Value>
class MemoTable {
 public:
  template <typename Compute>
  Value get_or_compute(const std::string& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

  void insert(const std::string& key, Value value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, std::move(value));
  }

  std::vector<std::pair<std::string, Value>> snapshot() const {
    std::shared_lock lock(mutex_);
    return {table_.begin(), table_.end()};
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Value> table_;
};

}  // namespace bwbverify
