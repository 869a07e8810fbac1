#include "bmssp/block_seq.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "bmssp/error.hpp"
#include "bmssp/selection.hpp"

namespace bmssp {

namespace {

// Slot marker for keys gathered by an in-progress batch_prepend; pos indexes
// the deduplicated batch.
constexpr std::int32_t kPending = -2;

}  // namespace

BlockSeq::BlockSeq(std::size_t capacity, Bound bound, OpCounters* counters)
    : BlockSeq(capacity, bound, std::span<SlotRef>{}, counters) {}

BlockSeq::BlockSeq(std::size_t capacity, Bound bound,
                   std::span<SlotRef> slot_table, OpCounters* counters)
    : capacity_(capacity),
      bound_(bound),
      counters_(counters),
      table_(slot_table),
      index_(IndexLess{counters}) {
  if (capacity < 1) {
    throw Error(ErrorCode::BadCapacity, "block capacity must be at least 1");
  }
  const std::int32_t b = new_block(true, bound_);
  index_.emplace(bound_, b);
  stats_.max_insert_blocks = 1;
}

BlockSeq::~BlockSeq() {
  if (table_.empty()) return;
  for (const Block& blk : blocks_) {
    for (const KeyValue& kv : blk.items) table_[kv.key].block = -1;
  }
}

SlotRef* BlockSeq::find_slot(VertexId key) {
  if (!table_.empty()) {
    SlotRef& s = table_[key];
    return s.block == -1 ? nullptr : &s;
  }
  auto it = map_.find(key);
  return it == map_.end() ? nullptr : &it->second;
}

const SlotRef* BlockSeq::find_slot(VertexId key) const {
  return const_cast<BlockSeq*>(this)->find_slot(key);
}

void BlockSeq::set_slot(VertexId key, SlotRef ref) {
  if (!table_.empty()) {
    table_[key] = ref;
  } else {
    map_[key] = ref;
  }
}

void BlockSeq::clear_slot(VertexId key) {
  if (!table_.empty()) {
    table_[key].block = -1;
  } else {
    map_.erase(key);
  }
}

std::int32_t BlockSeq::new_block(bool insert_side, Bound upper) {
  std::int32_t b;
  if (!free_blocks_.empty()) {
    b = free_blocks_.back();
    free_blocks_.pop_back();
  } else {
    b = static_cast<std::int32_t>(blocks_.size());
    blocks_.emplace_back();
  }
  Block& blk = blocks_[b];
  blk.items.clear();
  blk.upper = upper;
  blk.prev = blk.next = -1;
  blk.insert_side = insert_side;
  return b;
}

void BlockSeq::release_block(std::int32_t b) {
  Block& blk = blocks_[b];
  if (blk.insert_side) {
    index_.erase(blk.upper);
  } else {
    if (blk.prev != -1) blocks_[blk.prev].next = blk.next;
    if (blk.next != -1) blocks_[blk.next].prev = blk.prev;
    if (prepend_head_ == b) prepend_head_ = blk.next;
  }
  blk.items.clear();
  blk.prev = blk.next = -1;
  free_blocks_.push_back(b);
}

void BlockSeq::reindex(std::int32_t b) {
  const auto& items = blocks_[b].items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    set_slot(items[i].key, {b, static_cast<std::int32_t>(i)});
  }
}

void BlockSeq::remove_key(VertexId key) {
  SlotRef* s = find_slot(key);
  const std::int32_t b = s->block;
  const auto pos = static_cast<std::size_t>(s->pos);
  auto& items = blocks_[b].items;
  if (pos + 1 != items.size()) {
    items[pos] = items.back();
    set_slot(items[pos].key, {b, static_cast<std::int32_t>(pos)});
  }
  items.pop_back();
  clear_slot(key);
  --size_;
  if (items.empty()) release_block(b);
}

bool BlockSeq::erase(VertexId key) {
  if (find_slot(key) == nullptr) return false;
  remove_key(key);
  return true;
}

void BlockSeq::insert(VertexId key, const PathKey& value) {
  if (!(value < bound_)) {
    std::ostringstream os;
    os << "value " << value << " is not below bound " << bound_;
    throw Error(ErrorCode::ValueAboveBound, os.str());
  }
  if (const SlotRef* s = find_slot(key)) {
    if (!less(value, blocks_[s->block].items[s->pos].value)) return;
    remove_key(key);
  }
  ++stats_.index_searches;
  auto it = index_.lower_bound(value);
  std::int32_t b;
  if (it == index_.end()) {
    // The block bounded by B was emptied and released earlier.
    b = new_block(true, bound_);
    index_.emplace(bound_, b);
  } else {
    b = it->second;
  }
  auto& items = blocks_[b].items;
  items.push_back({key, value});
  set_slot(key, {b, static_cast<std::int32_t>(items.size() - 1)});
  ++size_;
  ++stats_.inserts;
  if (items.size() > capacity_) split(b);
  stats_.max_insert_blocks =
      std::max<std::uint64_t>(stats_.max_insert_blocks, index_.size());
}

void BlockSeq::split(std::int32_t b) {
  const std::size_t half = blocks_[b].items.size() / 2;
  auto cmp = [this](const KeyValue& x, const KeyValue& y) {
    return less(x.value, y.value);
  };
  select_nth(std::span<KeyValue>(blocks_[b].items), half, cmp);

  PathKey upper = blocks_[b].items[0].value;
  for (std::size_t i = 1; i < half; ++i) {
    if (less(upper, blocks_[b].items[i].value)) upper = blocks_[b].items[i].value;
  }
  const std::int32_t lower = new_block(true, Bound(upper));
  // new_block may reallocate blocks_.
  auto& src = blocks_[b].items;
  auto& dst = blocks_[lower].items;
  dst.assign(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(half));
  src.erase(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(half));
  index_.emplace(Bound(upper), lower);
  reindex(lower);
  reindex(b);
  ++stats_.splits;
  stats_.split_work += half + src.size();
}

void BlockSeq::batch_prepend(std::span<const KeyValue> pairs) {
  if (pairs.empty()) return;

  for (const KeyValue& kv : pairs) {
    if (!(kv.value < bound_)) {
      std::ostringstream os;
      os << "prepended value " << kv.value << " is not below bound " << bound_;
      throw Error(ErrorCode::ValueAboveBound, os.str());
    }
  }
  if (order_checks_ && size_ > 0) {
    const PathKey lowest = *min_value();
    for (const KeyValue& kv : pairs) {
      if (!(kv.value < lowest)) {
        std::ostringstream os;
        os << "prepended value " << kv.value << " is not below live minimum "
           << lowest;
        throw Error(ErrorCode::OrderViolation, os.str());
      }
    }
  }

  std::vector<KeyValue> batch;
  batch.reserve(pairs.size());
  for (const KeyValue& kv : pairs) {
    SlotRef* s = find_slot(kv.key);
    if (s != nullptr && s->block == kPending) {
      KeyValue& seen = batch[static_cast<std::size_t>(s->pos)];
      if (less(kv.value, seen.value)) seen.value = kv.value;
      continue;
    }
    if (s != nullptr) remove_key(kv.key);
    set_slot(kv.key, {kPending, static_cast<std::int32_t>(batch.size())});
    batch.push_back(kv);
  }

  // Cut the batch into value-ordered chunks: one chunk if it fits in a block,
  // else repeated median splits down to at most ceil(M/2) elements each.
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  if (batch.size() <= capacity_) {
    chunks.emplace_back(0, batch.size());
  } else {
    const std::size_t limit = (capacity_ + 1) / 2;
    auto cmp = [this](const KeyValue& x, const KeyValue& y) {
      return less(x.value, y.value);
    };
    // Explicit stack of [lo, hi) ranges, right half pushed first so chunks
    // come out in ascending order.
    std::vector<std::pair<std::size_t, std::size_t>> todo{{0, batch.size()}};
    while (!todo.empty()) {
      auto [lo, hi] = todo.back();
      todo.pop_back();
      if (hi - lo <= limit) {
        chunks.emplace_back(lo, hi);
        continue;
      }
      const std::size_t half = (hi - lo) / 2;
      select_nth(std::span<KeyValue>(batch).subspan(lo, hi - lo), half, cmp);
      todo.emplace_back(lo + half, hi);
      todo.emplace_back(lo, lo + half);
    }
  }

  for (auto c = chunks.rbegin(); c != chunks.rend(); ++c) {
    const std::int32_t b = new_block(false, bound_);
    Block& blk = blocks_[b];
    blk.items.assign(batch.begin() + static_cast<std::ptrdiff_t>(c->first),
                     batch.begin() + static_cast<std::ptrdiff_t>(c->second));
    blk.next = prepend_head_;
    if (prepend_head_ != -1) blocks_[prepend_head_].prev = b;
    prepend_head_ = b;
    reindex(b);
  }
  size_ += batch.size();
  stats_.prepended += batch.size();
}

BlockSeq::PullResult BlockSeq::pull() {
  ++stats_.pulls;
  PullResult out{{}, bound_};
  if (size_ == 0) return out;

  std::vector<KeyValue> cand;
  cand.reserve(2 * capacity_);
  std::int32_t d0 = prepend_head_;
  std::size_t from_d0 = 0;
  while (d0 != -1 && from_d0 < capacity_) {
    const auto& items = blocks_[d0].items;
    cand.insert(cand.end(), items.begin(), items.end());
    from_d0 += items.size();
    d0 = blocks_[d0].next;
  }
  auto d1 = index_.begin();
  std::size_t from_d1 = 0;
  while (d1 != index_.end() && from_d1 < capacity_) {
    const auto& items = blocks_[d1->second].items;
    cand.insert(cand.end(), items.begin(), items.end());
    from_d1 += items.size();
    ++d1;
  }
  while (d1 != index_.end() && blocks_[d1->second].items.empty()) ++d1;

  const bool exhausted = d0 == -1 && d1 == index_.end();
  if (exhausted && cand.size() <= capacity_) {
    out.keys.reserve(cand.size());
    for (const KeyValue& kv : cand) {
      out.keys.push_back(kv.key);
      remove_key(kv.key);
    }
    return out;
  }

  auto cmp = [this](const KeyValue& x, const KeyValue& y) {
    return less(x.value, y.value);
  };
  if (cand.size() > capacity_) {
    select_nth(std::span<KeyValue>(cand), capacity_, cmp);
  }

  // Smallest remaining value: among unselected candidates or at the front of
  // the first uncollected block of either sequence.
  std::optional<PathKey> next;
  auto consider = [&](const PathKey& v) {
    if (!next || less(v, *next)) next = v;
  };
  for (std::size_t i = capacity_; i < cand.size(); ++i) consider(cand[i].value);
  if (d0 != -1) {
    for (const KeyValue& kv : blocks_[d0].items) consider(kv.value);
  }
  if (d1 != index_.end()) {
    for (const KeyValue& kv : blocks_[d1->second].items) consider(kv.value);
  }

  out.keys.reserve(capacity_);
  for (std::size_t i = 0; i < capacity_; ++i) {
    out.keys.push_back(cand[i].key);
    remove_key(cand[i].key);
  }
  out.bound = Bound(*next);
  return out;
}

std::optional<PathKey> BlockSeq::value_of(VertexId key) const {
  const SlotRef* s = find_slot(key);
  if (s == nullptr || s->block < 0) return std::nullopt;
  return blocks_[s->block].items[s->pos].value;
}

std::optional<PathKey> BlockSeq::min_value() const {
  std::optional<PathKey> best;
  for (std::int32_t b = prepend_head_; b != -1; b = blocks_[b].next) {
    for (const KeyValue& kv : blocks_[b].items) {
      if (!best || kv.value < *best) best = kv.value;
    }
  }
  for (const auto& [ub, b] : index_) {
    for (const KeyValue& kv : blocks_[b].items) {
      if (!best || kv.value < *best) best = kv.value;
    }
  }
  return best;
}

std::vector<KeyValue> BlockSeq::contents() const {
  std::vector<KeyValue> out;
  out.reserve(size_);
  for (std::int32_t b = prepend_head_; b != -1; b = blocks_[b].next) {
    out.insert(out.end(), blocks_[b].items.begin(), blocks_[b].items.end());
  }
  for (const auto& [ub, b] : index_) {
    out.insert(out.end(), blocks_[b].items.begin(), blocks_[b].items.end());
  }
  return out;
}

std::size_t BlockSeq::prepend_block_count() const noexcept {
  std::size_t n = 0;
  for (std::int32_t b = prepend_head_; b != -1; b = blocks_[b].next) ++n;
  return n;
}

std::string BlockSeq::check_structure() const {
  std::ostringstream err;
  std::size_t seen = 0;
  auto check_items = [&](std::int32_t b, const char* side) {
    const Block& blk = blocks_[b];
    if (blk.items.size() > capacity_) {
      err << side << " block " << b << " holds " << blk.items.size()
          << " > M items; ";
    }
    for (std::size_t i = 0; i < blk.items.size(); ++i) {
      const KeyValue& kv = blk.items[i];
      const SlotRef* s = find_slot(kv.key);
      if (s == nullptr || s->block != b ||
          s->pos != static_cast<std::int32_t>(i)) {
        err << "key " << kv.key << " has a stale slot; ";
      }
      if (!(kv.value < bound_)) err << "key " << kv.key << " not below B; ";
    }
    seen += blk.items.size();
  };

  std::optional<PathKey> prev_max;
  for (std::int32_t b = prepend_head_; b != -1; b = blocks_[b].next) {
    check_items(b, "prepend");
    const auto& items = blocks_[b].items;
    if (items.empty()) err << "empty prepend block " << b << "; ";
    for (const KeyValue& kv : items) {
      if (prev_max && !(*prev_max < kv.value)) {
        err << "prepend blocks out of order at key " << kv.key << "; ";
      }
    }
    for (const KeyValue& kv : items) {
      if (!prev_max || *prev_max < kv.value) prev_max = kv.value;
    }
  }

  std::optional<Bound> prev_ub;
  for (const auto& [ub, b] : index_) {
    check_items(b, "insert");
    if (!(blocks_[b].upper == ub)) err << "index key mismatch at block " << b << "; ";
    for (const KeyValue& kv : blocks_[b].items) {
      if (ub < Bound(kv.value)) err << "key " << kv.key << " above its block bound; ";
      if (prev_ub && !(*prev_ub < Bound(kv.value))) {
        err << "key " << kv.key << " not above previous block bound; ";
      }
    }
    prev_ub = ub;
  }
  if (seen != size_) err << "size " << size_ << " but " << seen << " items; ";
  return err.str();
}

}  // namespace bmssp
