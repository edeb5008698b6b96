#include "edgecache/cache.hpp"

#include <algorithm>
#include <random>

#include "edgecache/error.hpp"

namespace edgecache {

LruCache::LruCache(std::size_t capacity) : capacity_(capacity) {
  index_.reserve(capacity + 1);
}

void LruCache::touch(ObjectId id) {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw ContractViolation("lru touch of non-resident object " + std::to_string(id));
  }
  order_.splice(order_.begin(), order_, it->second);
}

std::optional<ObjectId> LruCache::insert(ObjectId id) {
  if (index_.contains(id)) {
    throw ContractViolation("lru insert of resident object " + std::to_string(id));
  }
  if (capacity_ == 0) return std::nullopt;
  std::optional<ObjectId> evicted;
  if (order_.size() >= capacity_) {
    evicted = order_.back();
    index_.erase(order_.back());
    order_.pop_back();
  }
  order_.push_front(id);
  index_.emplace(id, order_.begin());
  return evicted;
}

LfuCache::LfuCache(std::size_t capacity) : capacity_(capacity) {}

bool LfuCache::contains(ObjectId id) const {
  auto it = counts_.find(id);
  return it != counts_.end() && resident_.contains(Key{it->second, id});
}

std::size_t LfuCache::count(ObjectId id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

bool LfuCache::on_request(ObjectId id) {
  auto& c = counts_[id];
  const Key old_key{c, id};
  const bool was_resident = c > 0 && resident_.contains(old_key);
  ++c;
  const Key new_key{c, id};
  if (was_resident) {
    resident_.erase(old_key);
    resident_.insert(new_key);
  } else if (capacity_ > 0) {
    // Only this object's count changed, so it is the only possible entrant.
    if (resident_.size() < capacity_) {
      resident_.insert(new_key);
    } else if (*resident_.begin() < new_key) {
      resident_.erase(resident_.begin());
      resident_.insert(new_key);
    }
  }
  return was_resident;
}

std::vector<ObjectId> LfuCache::inventory() const {
  std::vector<ObjectId> out;
  out.reserve(resident_.size());
  for (auto it = resident_.rbegin(); it != resident_.rend(); ++it) out.push_back(it->id);
  return out;
}

std::string to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::single_lru: return "single_lru";
    case PolicyKind::multi_lru_one: return "multi_lru_one";
    case PolicyKind::multi_lru_all: return "multi_lru_all";
    case PolicyKind::q_multi_lru_all: return "q_multi_lru_all";
    case PolicyKind::lfu: return "lfu";
  }
  return "?";
}

PolicyKind parse_policy_kind(const std::string& s) {
  if (s == "single_lru") return PolicyKind::single_lru;
  if (s == "multi_lru_one") return PolicyKind::multi_lru_one;
  if (s == "multi_lru_all") return PolicyKind::multi_lru_all;
  if (s == "q_multi_lru_all") return PolicyKind::q_multi_lru_all;
  if (s == "lfu") return PolicyKind::lfu;
  throw InvalidParameter("unknown online policy '" + s + "'");
}

CacheNetwork::CacheNetwork(PolicySpec policy, std::size_t n_stations, std::size_t capacity)
    : policy_(policy), n_stations_(n_stations) {
  if (policy_.kind == PolicyKind::q_multi_lru_all && !(policy_.q > 0.0 && policy_.q <= 1.0)) {
    throw InvalidParameter("q-multi-LRU-All needs 0 < q <= 1");
  }
  if (policy_.kind == PolicyKind::lfu) {
    lfu_.assign(n_stations, LfuCache(capacity));
  } else {
    lru_.assign(n_stations, LruCache(capacity));
  }
}

bool CacheNetwork::holds(std::size_t station, ObjectId object) const {
  if (policy_.kind == PolicyKind::lfu) return lfu_.at(station).contains(object);
  return lru_.at(station).contains(object);
}

std::vector<ObjectId> CacheNetwork::inventory(std::size_t station) const {
  if (policy_.kind == PolicyKind::lfu) return lfu_.at(station).inventory();
  return lru_.at(station).inventory();
}

RequestOutcome CacheNetwork::handle_request(std::span<const std::size_t> covering,
                                            ObjectId object, Rng& rng) {
  for (auto s : covering) {
    if (s >= n_stations_) {
      throw std::out_of_range("station index " + std::to_string(s) + " out of range");
    }
  }
  RequestOutcome out;
  if (covering.empty()) return out;
  out.covered = true;

  switch (policy_.kind) {
    case PolicyKind::single_lru: {
      auto& cache = lru_[covering.front()];
      if (cache.contains(object)) {
        cache.touch(object);
        out.hit = true;
        out.serving_station = covering.front();
      } else {
        cache.insert(object);
      }
      break;
    }
    case PolicyKind::lfu: {
      if (lfu_[covering.front()].on_request(object)) {
        out.hit = true;
        out.serving_station = covering.front();
      }
      break;
    }
    case PolicyKind::multi_lru_one: {
      for (auto s : covering) {
        if (lru_[s].contains(object)) {
          lru_[s].touch(object);
          out.hit = true;
          out.serving_station = s;
          break;
        }
      }
      if (!out.hit) lru_[covering.front()].insert(object);
      break;
    }
    case PolicyKind::multi_lru_all:
    case PolicyKind::q_multi_lru_all: {
      for (auto s : covering) {
        if (lru_[s].contains(object)) {
          lru_[s].touch(object);
          if (!out.hit) out.serving_station = s;
          out.hit = true;
        }
      }
      if (!out.hit) {
        if (policy_.kind == PolicyKind::multi_lru_all) {
          for (auto s : covering) lru_[s].insert(object);
        } else {
          std::bernoulli_distribution admit(policy_.q);
          for (auto s : covering) {
            if (admit(rng)) lru_[s].insert(object);
          }
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace edgecache
