#pragma once

#include <cstddef>
#include <list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgecache/rng.hpp"
#include "edgecache/traffic.hpp"

namespace edgecache {

/// Recency-ordered inventory of at most K distinct objects (front = MRU).
class LruCache {
 public:
  explicit LruCache(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool full() const noexcept { return order_.size() >= capacity_; }
  bool contains(ObjectId id) const { return index_.contains(id); }

  /// Moves a resident object to the MRU slot. Throws ContractViolation if absent.
  void touch(ObjectId id);
  /// Inserts an absent object at MRU and returns the evicted LRU object, if
  /// any. Throws ContractViolation on a duplicate insert.
  std::optional<ObjectId> insert(ObjectId id);

  /// Inventory from MRU to LRU.
  std::vector<ObjectId> inventory() const { return {order_.begin(), order_.end()}; }

 private:
  std::size_t capacity_;
  std::list<ObjectId> order_;
  std::unordered_map<ObjectId, std::list<ObjectId>::iterator> index_;
};

/// Perfect LFU: unbounded per-object request counters; the inventory is the
/// top-K objects by count (ties to the lower id) among those requested here.
class LfuCache {
 public:
  explicit LfuCache(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return resident_.size(); }
  bool contains(ObjectId id) const;
  /// Records one request; returns whether the object was resident beforehand.
  bool on_request(ObjectId id);
  std::size_t count(ObjectId id) const;
  /// Inventory ordered by decreasing count.
  std::vector<ObjectId> inventory() const;

 private:
  // Ranking key: higher count first, then lower id.
  struct Key {
    std::size_t count;
    ObjectId id;
    bool operator<(const Key& o) const {
      return count != o.count ? count < o.count : id > o.id;
    }
  };
  std::size_t capacity_;
  std::unordered_map<ObjectId, std::size_t> counts_;
  std::set<Key> resident_;  // begin() is the weakest resident
};

enum class PolicyKind { single_lru, multi_lru_one, multi_lru_all, q_multi_lru_all, lfu };

std::string to_string(PolicyKind k);
PolicyKind parse_policy_kind(const std::string& s);

struct PolicySpec {
  PolicyKind kind = PolicyKind::single_lru;
  double q = 1.0;  ///< insertion probability, q_multi_lru_all only
  friend bool operator==(const PolicySpec&, const PolicySpec&) = default;
};

struct RequestOutcome {
  bool hit = false;
  std::optional<std::size_t> serving_station;
  bool covered = false;
};

/// One cache per station running an online (per-request) policy.
///
/// single_lru and lfu consult only the closest covering station. multi-LRU
/// variants see every covering station: -One serves from (and touches) the
/// closest holder and inserts a miss into the closest station only; -All
/// touches every holder and inserts a miss everywhere; q-multi-LRU-All
/// inserts into each covering cache independently with probability q.
class CacheNetwork {
 public:
  CacheNetwork(PolicySpec policy, std::size_t n_stations, std::size_t capacity);

  const PolicySpec& policy() const noexcept { return policy_; }
  std::size_t stations() const noexcept { return n_stations_; }

  /// `covering` lists station indices by ascending distance (may be empty).
  RequestOutcome handle_request(std::span<const std::size_t> covering, ObjectId object, Rng& rng);

  bool holds(std::size_t station, ObjectId object) const;
  std::vector<ObjectId> inventory(std::size_t station) const;
  const LruCache& lru(std::size_t station) const { return lru_.at(station); }
  const LfuCache& lfu(std::size_t station) const { return lfu_.at(station); }

 private:
  PolicySpec policy_;
  std::size_t n_stations_;
  std::vector<LruCache> lru_;
  std::vector<LfuCache> lfu_;
};

}  // namespace edgecache
