#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "g2/errors.hpp"

namespace g2 {

/// Hash map whose entries never change once written. Readers share a lock;
/// a writer that finds the key already present must carry an equal value.
template <class Key, class Value, class Hash = std::hash<Key>>
class WriteOnceMap {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns the stored value, which is `value` unless another writer won.
  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(key, std::move(value));
    if (!inserted && !(it->second == value)) {
      throw ConsistencyError("memo table: conflicting values written for one key");
    }
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  std::vector<std::pair<Key, Value>> snapshot() const {
    std::shared_lock lock(mutex_);
    return {map_.begin(), map_.end()};
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace g2
