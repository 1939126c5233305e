#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oneconn/embedding.hpp"
#include "oneconn/radial.hpp"

namespace oneconn {

// A closed walk in Lambda(G). darts[i] leaves vertices[i] and arrives at
// vertices[(i + 1) % length].
struct ConstrainedCycle {
  std::vector<Dart> darts;
  std::vector<VertexId> vertices;

  std::size_t length() const { return darts.size(); }
  friend bool operator==(const ConstrainedCycle&, const ConstrainedCycle&) = default;
};

// Original vertices (G^x indices), sorted ascending.
struct SeparatingSet {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const SeparatingSet&, const SeparatingSet&) = default;
};

constexpr std::uint32_t kNoFlap = ~std::uint32_t{0};

// Components of G - S, indexed by G^x vertex. Members of S and dummy
// vertices carry kNoFlap.
struct FlapPartition {
  std::vector<std::uint32_t> flap;
  std::uint32_t count = 0;

  bool separating() const { return count >= 2; }
};

struct ConstraintCheck {
  bool psi1 = false;  // Lambda minus X leaves two components holding vertices of G
  bool psi2 = false;  // only radial edges
  bool psi3 = false;  // no dummy vertices

  bool all() const { return psi1 && psi2 && psi3; }
};

struct Witness {
  VertexId face = 0;  // Lambda face vertex
  Dart dart = 0;      // radial Lambda dart at v leading to `face`
};

FlapPartition flaps(const OnePlaneEmbedding& emb, std::span<const VertexId> set);

bool is_minimal_separating(const OnePlaneEmbedding& emb, std::span<const VertexId> set);

// Throws Errc::NotACycle if the darts do not chain into a closed walk that
// is simple (two distinct parallel darts allowed for length 2).
ConstraintCheck check_constraints(const RadialPlanarisation& rp, const ConstrainedCycle& cycle);

// Psi1 alone, from the vertex set of a cycle.
bool psi1_holds(const RadialPlanarisation& rp, std::span<const VertexId> cycle_vertices);

// Original vertices on a cycle satisfying all three constraints.
SeparatingSet extract_separating_set(const RadialPlanarisation& rp, const ConstrainedCycle& cycle);

// Greedy removal in ascending vertex order, repeated to a fixed point.
SeparatingSet minimalize(const OnePlaneEmbedding& emb, const SeparatingSet& set);

// Face vertices (sorted) marked for a minimal separating set.
std::vector<VertexId> mark_face_vertices(const RadialPlanarisation& rp, const SeparatingSet& set);

// Marked face between (v, t1-bar) and (v, t2-bar) clockwise around v.
Witness witness_face(const RadialPlanarisation& rp, const SeparatingSet& set, VertexId v,
                     VertexId t1, VertexId t2);

// Builds a constrained separating cycle X with V_G(X) inside `set` by growing
// a maximal alternating path and closing it. `rp` must come from a
// kite-completed, locally maximal embedding.
ConstrainedCycle construct_cycle_from_set(const RadialPlanarisation& rp, const SeparatingSet& set);


}  // namespace oneconn
