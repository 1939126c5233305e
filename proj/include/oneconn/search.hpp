#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "oneconn/cycles.hpp"
#include "oneconn/embedding.hpp"
#include "oneconn/radial.hpp"

namespace oneconn {

// Longest cycle the search looks for: 2 * 7, since kappa <= 7 for simple
// 1-planar graphs.
constexpr std::uint32_t kMaxHalfLength = 7;

enum class Method : std::uint8_t { CycleSearch, OracleFallback, Disconnected };

std::string_view method_name(Method m);

struct ConnectivityOptions {
  bool complete_kites = true;
  bool force_oracle = false;
  bool oracle_check = false;
};

struct ConnectivityResult {
  std::uint32_t kappa = 0;
  std::optional<SeparatingSet> separating_set;
  std::optional<ConstrainedCycle> cycle;
  Method method = Method::CycleSearch;
  // Lambda the cycle lives in; set whenever the cycle search ran.
  std::shared_ptr<const RadialPlanarisation> radial;
};

// First cycle, in canonical order by length, that satisfies all three
// constraints. Candidates of length 2k for k >= 2 are simple alternating
// face/original cycles of the radial graph written from their smallest face
// vertex, in the direction whose second vertex is smaller; k = 1 candidates
// are pairs of parallel radial edges.
std::optional<ConstrainedCycle> shortest_constrained_cycle(const RadialPlanarisation& rp);

// Up to `limit` canonical constrained cycles of the minimum length.
std::vector<ConstrainedCycle> all_shortest_cycles(const RadialPlanarisation& rp, std::size_t limit);

// Throws Errc::NotLocallyMaximal when the embedding is outside the method's
// scope (unless force_oracle), Errc::InternalMismatch when an enabled oracle
// check disagrees.
ConnectivityResult vertex_connectivity(const OnePlaneEmbedding& emb, const ConnectivityOptions& options = {});

}  // namespace oneconn
