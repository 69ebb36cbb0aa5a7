#pragma once

#include <span>
#include <utility>
#include <vector>

namespace multimom::detail {

/// Visits every integer vector k with 0 <= k[i] <= bounds[i], in
/// lexicographic order with the last coordinate varying fastest.
/// An empty bounds span yields exactly one visit with an empty vector.
template <typename F>
void for_each_box_point(std::span<const unsigned> bounds, F&& fn) {
  std::vector<unsigned> k(bounds.size(), 0u);
  for (;;) {
    fn(std::as_const(k));
    std::size_t i = k.size();
    while (i > 0 && k[i - 1] == bounds[i - 1]) {
      k[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
    ++k[i - 1];
  }
}

}  // namespace multimom::detail
