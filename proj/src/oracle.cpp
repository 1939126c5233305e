#include "oneconn/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace oneconn {
namespace {

constexpr std::int32_t kUnbounded = std::numeric_limits<std::int32_t>::max() / 2;
constexpr std::uint32_t kUnseen = ~std::uint32_t{0};

std::uint32_t in_node(std::uint32_t v) { return 2 * v; }
std::uint32_t out_node(std::uint32_t v) { return 2 * v + 1; }

}  // namespace

FlowNetwork::FlowNetwork(const SimpleGraph& g) : arcs_(2 * g.size()) {
  const auto add_arc = [&](std::uint32_t from, std::uint32_t to, std::int32_t cap) {
    arcs_[from].push_back({to, static_cast<std::uint32_t>(arcs_[to].size()), cap, cap});
    arcs_[to].push_back({from, static_cast<std::uint32_t>(arcs_[from].size() - 1), 0, 0});
  };
  for (std::uint32_t v = 0; v < g.size(); ++v) add_arc(in_node(v), out_node(v), 1);
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    for (auto w : g.neighbours(v)) add_arc(out_node(v), in_node(w), kUnbounded);
  }
  parent_node_.assign(arcs_.size(), kUnseen);
  parent_arc_.assign(arcs_.size(), 0);
}

bool FlowNetwork::augment(std::uint32_t source, std::uint32_t sink) {
  std::fill(parent_node_.begin(), parent_node_.end(), kUnseen);
  std::queue<std::uint32_t> queue;
  queue.push(source);
  parent_node_[source] = source;
  while (!queue.empty() && parent_node_[sink] == kUnseen) {
    const auto x = queue.front();
    queue.pop();
    for (std::uint32_t i = 0; i < arcs_[x].size(); ++i) {
      const auto& arc = arcs_[x][i];
      if (arc.cap > 0 && parent_node_[arc.to] == kUnseen) {
        parent_node_[arc.to] = x;
        parent_arc_[arc.to] = i;
        queue.push(arc.to);
      }
    }
  }
  if (parent_node_[sink] == kUnseen) return false;
  // Every augmenting path crosses a unit arc, so it carries exactly 1.
  for (auto x = sink; x != source;) {
    const auto p = parent_node_[x];
    auto& arc = arcs_[p][parent_arc_[x]];
    arc.cap -= 1;
    arcs_[x][arc.rev].cap += 1;
    x = p;
  }
  return true;
}

std::uint32_t FlowNetwork::max_flow(std::uint32_t s, std::uint32_t t, std::uint32_t limit) {
  for (auto& list : arcs_) {
    for (auto& arc : list) arc.cap = arc.initial;
  }
  source_ = out_node(s);
  std::uint32_t flow = 0;
  while (flow < limit && augment(source_, in_node(t))) ++flow;
  return flow;
}

std::vector<std::uint32_t> FlowNetwork::min_cut_vertices() const {
  std::vector<bool> reach(arcs_.size(), false);
  std::vector<std::uint32_t> stack{source_};
  reach[source_] = true;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& arc : arcs_[x]) {
      if (arc.cap > 0 && !reach[arc.to]) {
        reach[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  std::vector<std::uint32_t> cut;
  for (std::uint32_t v = 0; v < arcs_.size() / 2; ++v) {
    if (reach[in_node(v)] && !reach[out_node(v)]) cut.push_back(v);
  }
  return cut;
}

FlowConnectivity connectivity_flow(const SimpleGraph& g) {
  const auto n = static_cast<std::uint32_t>(g.size());
  FlowConnectivity result;
  if (n <= 1) return result;
  if (!is_connected(g)) {
    result.min_set = std::vector<std::uint32_t>{};
    return result;
  }
  if (g.is_complete()) {
    result.kappa = n - 1;
    return result;
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return g.degree(a) < g.degree(b); });

  // Start from the neighbourhood of a minimum-degree vertex that misses
  // someone; such a neighbourhood always separates.
  std::uint32_t best = n - 1;
  for (auto v : order) {
    if (g.degree(v) + 1 < n) {
      best = static_cast<std::uint32_t>(g.degree(v));
      result.min_set = std::vector<std::uint32_t>(g.neighbours(v).begin(), g.neighbours(v).end());
      break;
    }
  }

  // Some minimum separator misses one of the first best+1 sources, and that
  // source has a non-adjacent vertex in another flap.
  FlowNetwork net(g);
  for (std::uint32_t i = 0; i < n && i <= best; ++i) {
    const auto s = order[i];
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      const auto flow = net.max_flow(s, t, best);
      if (flow < best) {
        best = flow;
        result.min_set = net.min_cut_vertices();
      }
    }
  }
  result.kappa = best;
  return result;
}

std::vector<std::vector<std::uint32_t>> enumerate_separators(const SimpleGraph& g, std::uint32_t kmax) {
  const auto n = static_cast<std::uint32_t>(g.size());
  if (n > 20) throw Error(Errc::TooLarge, "exhaustive enumeration limited to 20 vertices, got " + std::to_string(n));
  if (kmax > 7) throw Error(Errc::TooLarge, "exhaustive enumeration limited to sets of size 7");

  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> subset;
  std::vector<bool> removed(n, false);
  for (std::uint32_t k = 1; k <= std::min(kmax, n); ++k) {
    subset.resize(k);
    std::iota(subset.begin(), subset.end(), 0u);
    for (;;) {
      if (separates(g, subset)) {
        bool minimal = true;
        std::vector<std::uint32_t> rest;
        for (std::uint32_t i = 0; i < k && minimal; ++i) {
          rest.assign(subset.begin(), subset.end());
          rest.erase(rest.begin() + i);
          minimal = !separates(g, rest);
        }
        if (minimal) {
          // Each member of a minimal separator reaches every flap.
          std::fill(removed.begin(), removed.end(), false);
          for (auto v : subset) removed[v] = true;
          std::uint32_t count = 0;
          const auto labels = components_without(g, removed, &count);
          for (auto v : subset) {
            std::vector<bool> seen(count, false);
            for (auto w : g.neighbours(v)) {
              if (labels[w] != kRemoved) seen[labels[w]] = true;
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
              throw Error(Errc::ClaimViolated, "minimal separator member without a neighbour in every flap");
            }
          }
          found.push_back(subset);
        }
      }
      // Next k-combination in lexicographic order.
      std::int64_t i = static_cast<std::int64_t>(k) - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (auto j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return found;
}

OracleResult connectivity_flow(const OnePlaneEmbedding& emb) {
  const auto flow = connectivity_flow(emb.graph());
  OracleResult result;
  result.kappa = flow.kappa;
  if (flow.min_set) {
    SeparatingSet set;
    for (auto g : *flow.min_set) set.vertices.push_back(emb.originals()[g]);
    std::sort(set.vertices.begin(), set.vertices.end());
    result.set = std::move(set);
  }
  return result;
}

std::vector<SeparatingSet> enumerate_separators(const OnePlaneEmbedding& emb, std::uint32_t kmax) {
  std::vector<SeparatingSet> out;
  for (const auto& s : enumerate_separators(emb.graph(), kmax)) {
    SeparatingSet set;
    for (auto g : s) set.vertices.push_back(emb.originals()[g]);
    std::sort(set.vertices.begin(), set.vertices.end());
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace oneconn
