#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "oneconn/embedding.hpp"

namespace oneconn {

enum class Variant : std::uint8_t { TriangulationBased, Sparse };

struct GenConfig {
  std::uint32_t n = 10;
  double crossing_fraction = 0.0;
  std::uint64_t seed = 0;
  Variant variant = Variant::TriangulationBased;

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

// Randomness: std::mt19937_64 seeded with `seed`; a draw below `bound` is
// rng() % bound. Vertices 0, 1, 2 start as a triangle and vertex p >= 3 is
// inserted into face number rng() % (face count), where faces are kept in
// creation order and the split face (a,b,c) is replaced by (a,b,p) with
// (b,c,p) and (c,a,p) appended. Throws Errc::TooSmall for n < 3.
OnePlaneEmbedding random_plane_triangulation(std::uint32_t n, std::uint64_t seed);

// Collects every eligible uncrossed edge (a,b): both sides are triangles of
// original vertices (a,b,c) and (b,a,d), c != d and (c,d) absent. The list is
// shuffled by Fisher-Yates (swap i with rng() % (i + 1), i descending) and
// walked in order, re-checking eligibility, until
// floor(fraction * initial count) crossings (c,d) x (a,b) were added.
OnePlaneEmbedding inject_kite_crossings(const OnePlaneEmbedding& emb, double fraction, std::uint64_t seed);

// Adds (c,d) crossing the uncrossed original edge `edge` in place. Returns
// false, leaving `data` untouched, when the edge is not eligible.
bool add_kite_crossing(EmbeddingData& data, OriginalEdgeId edge);

// Triangulation, then for the sparse variant each edge outside a BFS
// spanning tree (from vertex 0) is dropped when the next draw is odd, in
// ascending (u, v) order; then crossings are injected with seed
// seed ^ 0x9e3779b97f4a7c15.
OnePlaneEmbedding generate(const GenConfig& config);

// Deterministic configs for a test corpus: n uniform in [nmin, nmax],
// crossing fraction cycling through 0, 0.2, 0.5 and variant alternating
// every three trials.
std::vector<GenConfig> corpus(std::size_t count, std::uint32_t nmin, std::uint32_t nmax, std::uint64_t seed);

// Hand-encoded embeddings; throws Errc::UnknownFixture.
OnePlaneEmbedding fixture(std::string_view name);
std::vector<std::string_view> fixture_names();

}  // namespace oneconn
