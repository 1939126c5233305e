#pragma once

// Reference models rebuilt straight from EmbeddingData, sharing no code with
// the library beyond the data structs. Exponential where that is simplest.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oneconn/embedding.hpp"

namespace oneconn::testing {

// G on the original vertices, indexed like OnePlaneEmbedding::originals().
struct PlainGraph {
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<VertexId> vertex;  // plain index -> G^x index

  std::uint32_t size() const { return static_cast<std::uint32_t>(adj.size()); }
};

PlainGraph plain_graph(const EmbeddingData& data);

// Number of connected components of G - removed (removed given as a mask).
std::uint32_t count_components(const PlainGraph& g, const std::vector<bool>& removed);
bool separates(const PlainGraph& g, const std::vector<std::uint32_t>& set);

// Smallest separating set size by subset scan; n - 1 when none exists.
std::uint32_t brute_kappa(const PlainGraph& g);

// Inclusion-minimal separating sets of size <= kmax, as G^x indices.
std::vector<std::vector<VertexId>> brute_minimal_separators(const PlainGraph& g, std::uint32_t kmax);

// Lambda from an independent face trace. Vertices: G^x indices, then one per
// face. radial[i] records (G^x vertex, face vertex) per angle.
struct PlainLambda {
  std::uint32_t base = 0;
  std::uint32_t faces = 0;
  std::vector<bool> original;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> segments;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> radial;
  std::vector<std::vector<std::uint32_t>> face_walks;  // G^x vertices per face

  std::uint32_t size() const { return base + faces; }
};

PlainLambda plain_lambda(const EmbeddingData& data);

// Lambda minus `cycle` keeps original vertices in two or more components.
bool psi1(const PlainLambda& lambda, const std::vector<std::uint32_t>& cycle);

// Vertex sequences of every cycle of the given length (2 = parallel radial
// pair, counted once per vertex pair) in the dummy-free radial graph that
// satisfies psi1. Each undirected cycle appears once.
std::vector<std::vector<std::uint32_t>> psi_cycles(const PlainLambda& lambda, std::uint32_t length);

// Shortest length <= max_length with a psi cycle.
std::optional<std::uint32_t> shortest_psi_length(const PlainLambda& lambda, std::uint32_t max_length);

}  // namespace oneconn::testing
