#include "oneconn/radial.hpp"

#include <algorithm>
#include <string>

namespace oneconn {

RadialPlanarisation RadialPlanarisation::build(const OnePlaneEmbedding& emb) {
  const auto& gx = emb.planarisation();
  std::uint32_t components = 0;
  gx.component_labels(&components);
  if (components > 1) {
    throw Error(Errc::Disconnected, "planarisation has " + std::to_string(components) + " components");
  }

  RadialPlanarisation rp;
  rp.base_ = emb;
  const auto& faces = emb.faces();
  const std::size_t nv = gx.vertex_count();
  const std::size_t ne = gx.edge_count();

  std::vector<EdgeEnds> edges = gx.edges();
  edges.reserve(ne + gx.dart_count());
  for (Dart d = 0; d < gx.dart_count(); ++d) {
    edges.push_back({gx.origin(d), static_cast<VertexId>(nv + faces.face_of_dart[d])});
  }

  std::vector<std::vector<Dart>> rotation(nv + faces.size());
  for (VertexId v = 0; v < nv; ++v) {
    auto& rot = rotation[v];
    rot.reserve(2 * gx.degree(v));
    for (Dart d : gx.rotation(v)) {
      rot.push_back(tail_dart(static_cast<EdgeId>(ne + d)));
      rot.push_back(d);
    }
  }
  for (FaceId f = 0; f < faces.size(); ++f) {
    const auto& boundary = faces.boundaries[f];
    auto& rot = rotation[nv + f];
    rot.reserve(boundary.size());
    for (auto it = boundary.rbegin(); it != boundary.rend(); ++it) {
      rot.push_back(head_dart(static_cast<EdgeId>(ne + *it)));
    }
  }
  rp.lambda_ = RotationSystem(nv + faces.size(), std::move(edges), std::move(rotation));

  for (const auto& v : emb.data().vertices) rp.face_label_base_ = std::max(rp.face_label_base_, v.label + 1);
  for (const auto& e : emb.data().edges) rp.radial_label_base_ = std::max(rp.radial_label_base_, e.label + 1);
  return rp;
}

LambdaVertexKind RadialPlanarisation::kind(VertexId v) const {
  if (is_face(v)) return LambdaVertexKind::Face;
  return base_.is_dummy(v) ? LambdaVertexKind::Dummy : LambdaVertexKind::Original;
}

Angle RadialPlanarisation::angle_of(EdgeId radial) const {
  const auto& gx = base_.planarisation();
  const Dart d = angle_dart(radial);
  return {gx.target(gx.prev_cw(d)), gx.origin(d), gx.target(d)};
}

std::int64_t RadialPlanarisation::vertex_label(VertexId v) const {
  if (is_face(v)) return face_label_base_ + face_of_vertex(v);
  return base_.label(v);
}

std::int64_t RadialPlanarisation::edge_label(EdgeId e) const {
  if (is_radial(e)) return radial_label_base_ + (e - base_edge_count());
  return base_.data().edges[e].label;
}

Dart RadialPlanarisation::segment_dart(VertexId u, OriginalEdgeId oe) const {
  if (oe >= base_.original_edges().size()) {
    throw Error(Errc::NotEndpoint, "unknown original edge " + std::to_string(oe));
  }
  const auto& rec = base_.original_edges()[oe];
  if (u != rec.u && u != rec.v) {
    throw Error(Errc::NotEndpoint, "vertex " + std::to_string(base_.label(u)) +
                                       " is not an endpoint of original edge " +
                                       std::to_string(rec.label));
  }
  for (EdgeId s : rec.segments) {
    const auto& ends = lambda_.edge(s);
    if (ends.tail == u) return tail_dart(s);
    if (ends.head == u) return head_dart(s);
  }
  throw Error(Errc::NotEndpoint, "no segment of original edge " + std::to_string(rec.label) +
                                     " touches vertex " + std::to_string(base_.label(u)));
}

std::vector<Dart> RadialPlanarisation::rotation_between(VertexId v, Dart a, Dart b) const {
  if (v >= lambda_.vertex_count() || a >= lambda_.dart_count() || b >= lambda_.dart_count() ||
      lambda_.origin(a) != v || lambda_.origin(b) != v) {
    throw Error(Errc::NotIncident, "darts are not both incident to vertex " + std::to_string(v));
  }
  std::vector<Dart> out;
  for (Dart d = lambda_.next_cw(a); d != b; d = lambda_.next_cw(d)) out.push_back(d);
  return out;
}

}  // namespace oneconn
