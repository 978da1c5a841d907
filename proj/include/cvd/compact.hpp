#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// Dense 0..n-1 snapshot of a Graph for the inner loops of the chordal
/// algorithms. Index order equals ascending VertexId order.
class CompactGraph {
public:
  explicit CompactGraph(const Graph& g) : ids_(g.vertices()), adj_(ids_.size()) {
    const std::size_t n = ids_.size();
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (VertexId u : g.neighbors(ids_[i])) {
        int j = index_of(u);
        adj_[i].push_back(j);
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  [[nodiscard]] int size() const { return static_cast<int>(ids_.size()); }
  [[nodiscard]] VertexId id(int i) const { return ids_[i]; }
  [[nodiscard]] const VertexList& ids() const { return ids_; }
  [[nodiscard]] const std::vector<int>& adj(int i) const { return adj_[i]; }
  [[nodiscard]] bool adjacent(int i, int j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  [[nodiscard]] int index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return -1;
    return static_cast<int>(it - ids_.begin());
  }

private:
  VertexList ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
};

}  // namespace cvd
