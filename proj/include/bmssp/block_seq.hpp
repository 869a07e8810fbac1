#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bmssp/graph.hpp"
#include "bmssp/path_key.hpp"

namespace bmssp {

struct KeyValue {
  VertexId key;
  PathKey value;
};

// Where a live key sits: block id and position inside the block.
struct SlotRef {
  std::int32_t block = -1;
  std::int32_t pos = 0;
};

struct BlockSeqStats {
  std::uint64_t inserts = 0;         // insert calls that stored a value
  std::uint64_t prepended = 0;       // pairs stored by batch_prepend
  std::uint64_t pulls = 0;
  std::uint64_t index_searches = 0;  // lookups in the upper-bound index
  std::uint64_t splits = 0;
  std::uint64_t split_work = 0;      // elements moved by insert-side splits
  std::uint64_t max_insert_blocks = 0;
};

// Partial-sorting structure over (vertex, PathKey) pairs with a global upper
// bound B and block capacity M.
//
// Pairs live in two block sequences. The prepend side holds blocks created by
// batch_prepend, newest at the front. The insert side holds blocks created by
// insert and split, each tagged with an upper bound and indexed by that bound
// in an ordered map. In both sequences every value in an earlier block is
// smaller than every value in a later one. Each key has at most one live pair,
// always its smallest value seen since it was last removed.
//
// pull() returns up to M keys with the smallest values and a bound x with
// max(pulled) < x <= min(remaining), or x = B if nothing remains.
class BlockSeq {
 public:
  struct PullResult {
    std::vector<VertexId> keys;
    Bound bound;
  };

  // Throws Error(BadCapacity) when capacity < 1. Key locations are kept in a
  // private hash map.
  BlockSeq(std::size_t capacity, Bound bound, OpCounters* counters = nullptr);

  // Same, but key locations are kept in `slot_table`, which must be indexed
  // by vertex id, start with every block == -1, and outlive this object. All
  // entries this object touched are reset to -1 on destruction, so one table
  // can back a sequence of structures.
  BlockSeq(std::size_t capacity, Bound bound, std::span<SlotRef> slot_table,
           OpCounters* counters = nullptr);

  ~BlockSeq();
  BlockSeq(const BlockSeq&) = delete;
  BlockSeq& operator=(const BlockSeq&) = delete;

  // Throws Error(ValueAboveBound) unless value < B. A key that is already
  // live keeps the smaller of its two values.
  void insert(VertexId key, const PathKey& value);

  // Drops the live pair of `key`, if any. Returns whether one was dropped.
  bool erase(VertexId key);

  // Every value must be below every live value (checked, with
  // Error(OrderViolation), only when order checks are enabled) and below B.
  // Duplicate keys keep their smallest value; live keys are superseded.
  void batch_prepend(std::span<const KeyValue> pairs);

  PullResult pull();

  bool is_empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return capacity_; }
  const Bound& bound() const noexcept { return bound_; }

  void set_order_checks(bool on) noexcept { order_checks_ = on; }

  std::optional<PathKey> value_of(VertexId key) const;
  // Linear scan; meant for assertions and tests.
  std::optional<PathKey> min_value() const;
  std::vector<KeyValue> contents() const;

  std::size_t insert_block_count() const noexcept { return index_.size(); }
  std::size_t prepend_block_count() const noexcept;
  const BlockSeqStats& stats() const noexcept { return stats_; }

  // Validates block capacities, cross-block ordering, upper bounds and the key
  // map. Returns an empty string when consistent, else a description.
  std::string check_structure() const;

 private:
  struct Block {
    std::vector<KeyValue> items;
    Bound upper;  // insert side only
    std::int32_t prev = -1;
    std::int32_t next = -1;
    bool insert_side = false;
  };

  struct IndexLess {
    using is_transparent = void;
    OpCounters* counters;
    void count() const {
      if (counters) ++counters->comparisons;
    }
    bool operator()(const Bound& a, const Bound& b) const {
      count();
      return a < b;
    }
    bool operator()(const Bound& a, const PathKey& b) const {
      count();
      return a < Bound(b);
    }
    bool operator()(const PathKey& a, const Bound& b) const {
      count();
      return a < b;
    }
  };

  bool less(const PathKey& a, const PathKey& b) const {
    if (counters_) return compare_keys(a, b, *counters_) < 0;
    return compare_keys(a, b) < 0;
  }

  SlotRef* find_slot(VertexId key);
  const SlotRef* find_slot(VertexId key) const;
  void set_slot(VertexId key, SlotRef ref);
  void clear_slot(VertexId key);

  std::int32_t new_block(bool insert_side, Bound upper);
  void release_block(std::int32_t b);
  void remove_key(VertexId key);
  void split(std::int32_t b);
  void reindex(std::int32_t b);

  std::size_t capacity_;
  Bound bound_;
  OpCounters* counters_;
  std::span<SlotRef> table_;
  std::unordered_map<VertexId, SlotRef> map_;

  std::vector<Block> blocks_;
  std::vector<std::int32_t> free_blocks_;
  std::int32_t prepend_head_ = -1;
  std::map<Bound, std::int32_t, IndexLess> index_;
  std::size_t size_ = 0;
  bool order_checks_ = false;
  BlockSeqStats stats_;
};

}  // namespace bmssp
