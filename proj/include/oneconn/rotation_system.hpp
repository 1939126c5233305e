#pragma once

#include <span>
#include <utility>
#include <vector>

#include "oneconn/types.hpp"

namespace oneconn {

struct EdgeEnds {
  VertexId tail = 0;
  VertexId head = 0;
};

// Facial circuits of a rotation system. The walk successor of dart d is the
// clockwise successor of reverse(d), so each face lies to the left of its
// directed boundary.
struct FaceSet {
  std::vector<std::vector<Dart>> boundaries;
  std::vector<FaceId> face_of_dart;

  std::size_t size() const { return boundaries.size(); }
};

// A combinatorial map on a multigraph without loops: edges, and a clockwise
// cyclic order of darts around every vertex.
class RotationSystem {
 public:
  RotationSystem() = default;

  // Throws Errc::Dangling if a dart is missing, repeated or placed at the
  // wrong vertex, Errc::Loop for a self-loop.
  RotationSystem(std::size_t vertex_count, std::vector<EdgeEnds> edges,
                 std::vector<std::vector<Dart>> rotation);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  const EdgeEnds& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }

  VertexId origin(Dart d) const {
    return is_head_end(d) ? edges_[edge_of(d)].head : edges_[edge_of(d)].tail;
  }
  VertexId target(Dart d) const { return origin(reverse(d)); }

  std::span<const Dart> rotation(VertexId v) const { return rotation_[v]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }
  std::size_t degree(VertexId v) const { return rotation_[v].size(); }

  // Index of d within the rotation of origin(d).
  std::size_t position(Dart d) const { return position_[d]; }

  Dart next_cw(Dart d) const { return next_[d]; }
  Dart prev_cw(Dart d) const { return prev_[d]; }
  Dart face_next(Dart d) const { return next_cw(reverse(d)); }

  FaceSet trace_faces() const;

  // Connected components over vertices (isolated vertices count).
  std::vector<std::uint32_t> component_labels(std::uint32_t* count = nullptr) const;

 private:
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::uint32_t> position_;
  // Flat successor tables; face walks touch one array instead of three.
  std::vector<Dart> next_;
  std::vector<Dart> prev_;
};

// True if `middle` lies strictly inside the clockwise sweep from `from` to
// `to` around their common vertex.
bool strictly_between_cw(const RotationSystem& rs, Dart from, Dart middle, Dart to);

}  // namespace oneconn
