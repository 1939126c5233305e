#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace oneconn {

// Undirected simple graph on 0..n-1 with sorted adjacency lists. This is the
// view the connectivity code works on: parallel edges collapsed.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  // Ignores loops and duplicates.
  void add_edge(std::uint32_t u, std::uint32_t v);
  // Sorts and deduplicates adjacency; call after the last add_edge.
  void finalize();

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
  std::span<const std::uint32_t> neighbours(std::uint32_t v) const { return adj_[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  bool is_complete() const;

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
};

constexpr std::uint32_t kRemoved = ~std::uint32_t{0};

// Component label per vertex of G - removed; removed vertices get kRemoved.
// Labels are assigned in order of the smallest vertex of each component.
std::vector<std::uint32_t> components_without(const SimpleGraph& g,
                                              const std::vector<bool>& removed,
                                              std::uint32_t* count);

bool is_connected(const SimpleGraph& g);

// Does removing `set` leave at least two non-empty components?
bool separates(const SimpleGraph& g, std::span<const std::uint32_t> set);

}  // namespace oneconn
