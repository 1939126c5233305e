#include "oneconn/simple_graph.hpp"

#include <algorithm>

namespace oneconn {

void SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void SimpleGraph::finalize() {
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

bool SimpleGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool SimpleGraph::is_complete() const {
  for (const auto& list : adj_) {
    if (list.size() + 1 != adj_.size()) return false;
  }
  return true;
}

std::vector<std::uint32_t> components_without(const SimpleGraph& g,
                                              const std::vector<bool>& removed,
                                              std::uint32_t* count) {
  constexpr std::uint32_t kUnset = kRemoved - 1;
  std::vector<std::uint32_t> label(g.size(), kUnset);
  std::vector<std::uint32_t> stack;
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    if (!removed.empty() && removed[s]) {
      label[s] = kRemoved;
      continue;
    }
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbours(v)) {
        if ((!removed.empty() && removed[w]) || label[w] != kUnset) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

bool is_connected(const SimpleGraph& g) {
  std::uint32_t count = 0;
  components_without(g, {}, &count);
  return count <= 1;
}

bool separates(const SimpleGraph& g, std::span<const std::uint32_t> set) {
  std::vector<bool> removed(g.size(), false);
  for (auto v : set) removed[v] = true;
  std::uint32_t count = 0;
  components_without(g, removed, &count);
  return count >= 2;
}

}  // namespace oneconn
