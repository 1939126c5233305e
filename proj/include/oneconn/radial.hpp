#pragma once

#include <cstdint>
#include <vector>

#include "oneconn/embedding.hpp"
#include "oneconn/rotation_system.hpp"

namespace oneconn {

enum class LambdaVertexKind : std::uint8_t { Original, Dummy, Face };
enum class LambdaEdgeKind : std::uint8_t { Segment, Radial };

// Radial planarisation: G^x plus one face vertex per face of G^x, joined to
// its boundary once per angle. Vertex and edge indices of G^x are kept; face
// vertex f is vertex |V(G^x)| + f and the radial edge bisecting the angle
// that precedes G^x dart d is edge |E(G^x)| + d.
class RadialPlanarisation {
 public:
  // Throws Errc::Disconnected if G^x is not connected.
  static RadialPlanarisation build(const OnePlaneEmbedding& emb);

  const OnePlaneEmbedding& base() const { return base_; }
  const RotationSystem& lambda() const { return lambda_; }

  std::size_t base_vertex_count() const { return base_.vertex_count(); }
  std::size_t base_edge_count() const { return base_.planarisation().edge_count(); }
  std::size_t face_count() const { return base_.faces().size(); }

  LambdaVertexKind kind(VertexId v) const;
  bool is_face(VertexId v) const { return v >= base_vertex_count(); }
  bool is_original(VertexId v) const { return kind(v) == LambdaVertexKind::Original; }
  VertexId face_vertex(FaceId f) const { return static_cast<VertexId>(base_vertex_count() + f); }
  FaceId face_of_vertex(VertexId v) const { return static_cast<FaceId>(v - base_vertex_count()); }

  LambdaEdgeKind edge_kind(EdgeId e) const {
    return e < base_edge_count() ? LambdaEdgeKind::Segment : LambdaEdgeKind::Radial;
  }
  bool is_radial(EdgeId e) const { return edge_kind(e) == LambdaEdgeKind::Radial; }
  std::size_t radial_edge_count() const { return lambda_.edge_count() - base_edge_count(); }

  // Radial edge bisecting the angle that ends at G^x dart d (between
  // prev_cw(d) and d at origin(d)).
  EdgeId radial_edge_for(Dart gx_dart) const {
    return static_cast<EdgeId>(base_edge_count() + gx_dart);
  }
  // The G^x dart whose preceding angle radial edge e bisects.
  Dart angle_dart(EdgeId radial) const { return static_cast<Dart>(radial - base_edge_count()); }
  Angle angle_of(EdgeId radial) const;

  // File-facing ids for Lambda vertices and edges.
  std::int64_t vertex_label(VertexId v) const;
  std::int64_t edge_label(EdgeId e) const;

  // Lambda dart at u of the edge (u, v-bar) for original edge `oe`.
  Dart segment_dart(VertexId u, OriginalEdgeId oe) const;

  // Darts strictly clockwise-between a and b around v; all other darts when
  // a == b.
  std::vector<Dart> rotation_between(VertexId v, Dart a, Dart b) const;

 private:
  OnePlaneEmbedding base_;
  RotationSystem lambda_;
  std::int64_t face_label_base_ = 0;
  std::int64_t radial_label_base_ = 0;
};

inline RadialPlanarisation build_radial(const OnePlaneEmbedding& emb) {
  return RadialPlanarisation::build(emb);
}

}  // namespace oneconn
