#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oneconn/cycles.hpp"
#include "oneconn/embedding.hpp"
#include "oneconn/simple_graph.hpp"

namespace oneconn {

// Vertex-split network of a simple graph: vertex v becomes in-node 2v and
// out-node 2v+1 joined by a unit arc; each edge becomes two unbounded arcs
// out->in. Max s-t flow equals the number of internally disjoint paths.
class FlowNetwork {
 public:
  explicit FlowNetwork(const SimpleGraph& g);

  // Max flow from s to t (non-adjacent), stopping once it reaches `limit`.
  std::uint32_t max_flow(std::uint32_t s, std::uint32_t t, std::uint32_t limit);

  // Vertices whose split arc crosses the residual cut of the last max_flow.
  std::vector<std::uint32_t> min_cut_vertices() const;

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    std::int32_t cap;
    std::int32_t initial;
  };
  bool augment(std::uint32_t source, std::uint32_t sink);

  std::vector<std::vector<Arc>> arcs_;
  std::uint32_t source_ = 0;
  std::vector<std::uint32_t> parent_node_;
  std::vector<std::uint32_t> parent_arc_;
};

struct FlowConnectivity {
  std::uint32_t kappa = 0;
  // Graph indices, sorted; none when no separating set exists.
  std::optional<std::vector<std::uint32_t>> min_set;
};

FlowConnectivity connectivity_flow(const SimpleGraph& g);

// All minimal separating sets of size <= kmax (graph indices, each sorted),
// by size then lexicographically. Throws Errc::TooLarge for n > 20 or
// kmax > 7.
std::vector<std::vector<std::uint32_t>> enumerate_separators(const SimpleGraph& g, std::uint32_t kmax);

struct OracleResult {
  std::uint32_t kappa = 0;
  std::optional<SeparatingSet> set;  // G^x vertex ids
};

OracleResult connectivity_flow(const OnePlaneEmbedding& emb);
std::vector<SeparatingSet> enumerate_separators(const OnePlaneEmbedding& emb, std::uint32_t kmax);

}  // namespace oneconn
