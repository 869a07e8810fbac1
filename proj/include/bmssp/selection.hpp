#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>

namespace bmssp {

// Deterministic linear-time selection (median of medians, groups of five).
// Rearranges `items` so that items[nth] is the element of rank nth under
// `less`, everything before it is less, and everything after is not less.
// `less` must be a strict weak order; elements are assumed distinct.
template <typename T, typename Less>
void select_nth(std::span<T> items, std::size_t nth, Less less);

namespace detail {

template <typename T, typename Less>
void insertion_sort(std::span<T> items, Less& less) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = i; j > 0 && less(items[j], items[j - 1]); --j) {
      std::swap(items[j], items[j - 1]);
    }
  }
}

// Three-way partition around the value at pivot_index. Returns [lo, hi) of the
// block equal to the pivot.
template <typename T, typename Less>
std::pair<std::size_t, std::size_t> partition_around(std::span<T> items,
                                                     std::size_t pivot_index,
                                                     Less& less) {
  std::swap(items[pivot_index], items[items.size() - 1]);
  T pivot = items[items.size() - 1];
  std::size_t lt = 0;
  for (std::size_t i = 0; i + 1 < items.size(); ++i) {
    if (less(items[i], pivot)) std::swap(items[i], items[lt++]);
  }
  std::size_t eq = lt;
  for (std::size_t i = lt; i + 1 < items.size(); ++i) {
    if (!less(pivot, items[i])) std::swap(items[i], items[eq++]);
  }
  std::swap(items[eq], items[items.size() - 1]);
  return {lt, eq + 1};
}

template <typename T, typename Less>
std::size_t median_of_medians(std::span<T> items, Less& less) {
  const std::size_t n = items.size();
  if (n <= 5) {
    insertion_sort(items, less);
    return n / 2;
  }
  std::size_t groups = 0;
  for (std::size_t g = 0; g < n; g += 5) {
    auto group = items.subspan(g, std::min<std::size_t>(5, n - g));
    insertion_sort(group, less);
    std::swap(items[groups++], group[group.size() / 2]);
  }
  select_nth(items.first(groups), groups / 2, less);
  return groups / 2;
}

}  // namespace detail

template <typename T, typename Less>
void select_nth(std::span<T> items, std::size_t nth, Less less) {
  while (items.size() > 5) {
    const std::size_t pivot = detail::median_of_medians(items, less);
    auto [lo, hi] = detail::partition_around(items, pivot, less);
    if (nth < lo) {
      items = items.first(lo);
    } else if (nth >= hi) {
      items = items.subspan(hi);
      nth -= hi;
    } else {
      return;
    }
  }
  detail::insertion_sort(items, less);
}

}  // namespace bmssp
