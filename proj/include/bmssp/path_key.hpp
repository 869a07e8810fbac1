#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "bmssp/graph.hpp"

namespace bmssp {

// Operation counts in the comparison-addition model. Only operations on path
// lengths are counted; hop and id tie-breaks ride along with the comparison
// they refine.
struct OpCounters {
  std::uint64_t comparisons = 0;
  std::uint64_t additions = 0;

  std::uint64_t total() const noexcept { return comparisons + additions; }

  OpCounters& operator+=(const OpCounters& o) noexcept {
    comparisons += o.comparisons;
    additions += o.additions;
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

// Rank of the path that currently realizes a label: (length, vertex count,
// endpoint). Lexicographic order on these is a strict total order over keys of
// distinct vertices, which gives every path a unique rank.
struct PathKey {
  double length = 0.0;
  std::uint32_t hops = 1;
  VertexId endpoint = 0;

  friend bool operator==(const PathKey&, const PathKey&) = default;
};

constexpr std::strong_ordering compare_keys(const PathKey& a,
                                            const PathKey& b) noexcept {
  if (a.length < b.length) return std::strong_ordering::less;
  if (b.length < a.length) return std::strong_ordering::greater;
  if (auto c = a.hops <=> b.hops; c != 0) return c;
  return a.endpoint <=> b.endpoint;
}

// Counted variant: one comparison per call.
inline std::strong_ordering compare_keys(const PathKey& a, const PathKey& b,
                                         OpCounters& counters) noexcept {
  ++counters.comparisons;
  return compare_keys(a, b);
}

constexpr std::strong_ordering operator<=>(const PathKey& a,
                                           const PathKey& b) noexcept {
  return compare_keys(a, b);
}

// Either +infinity or a finite PathKey cutoff. Infinity is the top element.
class Bound {
 public:
  constexpr Bound() = default;  // infinity
  constexpr explicit Bound(const PathKey& key) : key_(key), finite_(true) {}

  static constexpr Bound infinity() { return Bound(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_infinite() const noexcept { return !finite_; }
  constexpr const PathKey& key() const noexcept { return key_; }

  friend constexpr bool operator==(const Bound& a, const Bound& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.key_ == b.key_);
  }
  friend constexpr std::strong_ordering operator<=>(const Bound& a,
                                                    const Bound& b) noexcept {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return compare_keys(a.key_, b.key_);
  }
  friend constexpr bool operator==(const PathKey& k, const Bound& b) noexcept {
    return b.finite_ && b.key_ == k;
  }
  friend constexpr std::strong_ordering operator<=>(const PathKey& k,
                                                    const Bound& b) noexcept {
    if (!b.finite_) return std::strong_ordering::less;
    return compare_keys(k, b.key_);
  }

 private:
  PathKey key_{};
  bool finite_ = false;
};

// key < bound, counting one comparison when the bound is finite.
inline bool below(const PathKey& key, const Bound& bound,
                  OpCounters& counters) noexcept {
  if (bound.is_infinite()) return true;
  return compare_keys(key, bound.key(), counters) < 0;
}

inline Bound min_bound(const Bound& a, const Bound& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const PathKey& k);
std::ostream& operator<<(std::ostream& os, const Bound& b);

}  // namespace bmssp
