#include "oneconn/embedding.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace oneconn {
namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

std::string vstr(const EmbeddingData& data, VertexId v) {
  return std::to_string(data.vertices[v].label);
}

bool has_ends(const EmbeddingData::Edge& e, VertexId a, VertexId b) {
  return (e.tail == a && e.head == b) || (e.tail == b && e.head == a);
}

}  // namespace

OnePlaneEmbedding OnePlaneEmbedding::create(EmbeddingData data) {
  OnePlaneEmbedding emb;
  const std::size_t n = data.vertices.size();

  emb.by_label_.reserve(n);
  for (VertexId v = 0; v < n; ++v) emb.by_label_.emplace_back(data.vertices[v].label, v);
  std::sort(emb.by_label_.begin(), emb.by_label_.end());
  for (std::size_t i = 1; i < n; ++i) {
    if (emb.by_label_[i].first == emb.by_label_[i - 1].first) {
      throw Error(Errc::Dangling, "duplicate vertex id " + std::to_string(emb.by_label_[i].first));
    }
  }

  std::vector<EdgeEnds> ends;
  ends.reserve(data.edges.size());
  for (const auto& e : data.edges) ends.push_back({e.tail, e.head});
  emb.gx_ = RotationSystem(n, std::move(ends), data.rotation);
  for (VertexId v = 0; v < n; ++v) {
    if (data.vertices[v].kind == VertexKind::Dummy && emb.gx_.degree(v) != 4) {
      throw Error(Errc::DummyDegree, "dummy " + vstr(data, v) + " has degree " +
                                         std::to_string(emb.gx_.degree(v)));
    }
  }

  // Ownership of segments by original edges.
  emb.owner_.assign(data.edges.size(), kNone);
  for (OriginalEdgeId oe = 0; oe < data.original_edges.size(); ++oe) {
    const auto& rec = data.original_edges[oe];
    const std::string name = "original edge " + std::to_string(rec.label);
    if (rec.u >= n || rec.v >= n) throw Error(Errc::Dangling, name + " has an unknown endpoint");
    if (rec.u == rec.v) throw Error(Errc::Loop, name + " is a self-loop");
    if (data.vertices[rec.u].kind != VertexKind::Original ||
        data.vertices[rec.v].kind != VertexKind::Original) {
      throw Error(Errc::Dangling, name + " has a dummy endpoint");
    }
    if (rec.segments.empty()) throw Error(Errc::Dangling, name + " has no segments");
    if (rec.segments.size() > 2) throw Error(Errc::DoubleCrossed, name + " has more than two segments");
    for (EdgeId s : rec.segments) {
      if (s >= data.edges.size()) throw Error(Errc::Dangling, name + " names an unknown segment");
      if (emb.owner_[s] != kNone) {
        throw Error(Errc::Dangling, "segment " + std::to_string(data.edges[s].label) +
                                        " belongs to two original edges");
      }
      emb.owner_[s] = oe;
    }
    if (rec.segments.size() == 1) {
      if (!has_ends(data.edges[rec.segments[0]], rec.u, rec.v)) {
        throw Error(Errc::Dangling, name + " segment does not join its endpoints");
      }
    } else {
      const auto& s0 = data.edges[rec.segments[0]];
      const auto& s1 = data.edges[rec.segments[1]];
      const auto other = [](const EmbeddingData::Edge& e, VertexId x) {
        return e.tail == x ? e.head : (e.head == x ? e.tail : kNoVertex);
      };
      // Accept the two segments in either order.
      VertexId c = other(s0, rec.u);
      bool ok = c != kNoVertex && other(s1, c) == rec.v;
      if (!ok) {
        c = other(s1, rec.u);
        ok = c != kNoVertex && other(s0, c) == rec.v;
      }
      if (!ok || data.vertices[c].kind != VertexKind::Dummy) {
        throw Error(Errc::Dangling, name + " segments do not form a path through a dummy");
      }
    }
  }
  for (EdgeId e = 0; e < data.edges.size(); ++e) {
    if (emb.owner_[e] == kNone) {
      throw Error(Errc::Dangling, "edge " + std::to_string(data.edges[e].label) +
                                      " is not a segment of any original edge");
    }
  }

  // Crossings.
  emb.crossing_of_dummy_.assign(n, kNone);
  std::vector<std::uint32_t> crossing_of_edge(data.original_edges.size(), kNone);
  for (std::uint32_t ci = 0; ci < data.crossings.size(); ++ci) {
    const auto& cr = data.crossings[ci];
    if (cr.dummy >= n || data.vertices[cr.dummy].kind != VertexKind::Dummy) {
      throw Error(Errc::Dangling, "crossing " + std::to_string(ci) + " does not name a dummy vertex");
    }
    if (emb.crossing_of_dummy_[cr.dummy] != kNone) {
      throw Error(Errc::Dangling, "dummy " + vstr(data, cr.dummy) + " listed in two crossings");
    }
    emb.crossing_of_dummy_[cr.dummy] = ci;
    if (cr.edge_a >= data.original_edges.size() || cr.edge_b >= data.original_edges.size() ||
        cr.edge_a == cr.edge_b) {
      throw Error(Errc::Malformed, "crossing at dummy " + vstr(data, cr.dummy) + " has bad edges");
    }
    for (OriginalEdgeId oe : {cr.edge_a, cr.edge_b}) {
      if (crossing_of_edge[oe] != kNone) {
        throw Error(Errc::DoubleCrossed, "original edge " +
                                             std::to_string(data.original_edges[oe].label) +
                                             " is crossed more than once");
      }
      crossing_of_edge[oe] = ci;
      const auto& rec = data.original_edges[oe];
      const bool through = rec.segments.size() == 2 &&
                           (data.edges[rec.segments[0]].tail == cr.dummy ||
                            data.edges[rec.segments[0]].head == cr.dummy);
      if (!through) {
        throw Error(Errc::Dangling, "original edge " + std::to_string(rec.label) +
                                        " does not pass through dummy " + vstr(data, cr.dummy));
      }
    }
    const auto& a = data.original_edges[cr.edge_a];
    const auto& b = data.original_edges[cr.edge_b];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
      throw Error(Errc::AdjacentCrossing,
                  "crossing at dummy " + vstr(data, cr.dummy) + " has a shared endpoint");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (data.vertices[v].kind != VertexKind::Dummy) continue;
    if (emb.crossing_of_dummy_[v] == kNone) {
      throw Error(Errc::Dangling, "dummy " + vstr(data, v) + " is not listed as a crossing");
    }
    const auto rot = emb.gx_.rotation(v);
    std::array<OriginalEdgeId, 4> o{};
    for (int i = 0; i < 4; ++i) o[i] = emb.owner_[edge_of(rot[i])];
    if (o[0] != o[2] || o[1] != o[3] || o[0] == o[1]) {
      throw Error(Errc::NonAlternating, "rotation at dummy " + vstr(data, v) +
                                            " does not alternate between the crossing edges");
    }
  }
  for (OriginalEdgeId oe = 0; oe < data.original_edges.size(); ++oe) {
    if (data.original_edges[oe].segments.size() == 2 && crossing_of_edge[oe] == kNone) {
      throw Error(Errc::Dangling, "original edge " + std::to_string(data.original_edges[oe].label) +
                                      " has two segments but no crossing");
    }
  }

  // Sphere check per component that has at least one edge.
  emb.faces_ = emb.gx_.trace_faces();
  std::uint32_t comp_count = 0;
  const auto comp = emb.gx_.component_labels(&comp_count);
  std::vector<long long> chi(comp_count, 0);
  std::vector<bool> has_edge(comp_count, false);
  for (VertexId v = 0; v < n; ++v) chi[comp[v]] += 1;
  for (const auto& e : emb.gx_.edges()) {
    chi[comp[e.tail]] -= 1;
    has_edge[comp[e.tail]] = true;
  }
  for (const auto& boundary : emb.faces_.boundaries) chi[comp[emb.gx_.origin(boundary[0])]] += 1;
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    if (has_edge[c] && chi[c] != 2) {
      throw Error(Errc::NotSphere, "Euler characteristic " + std::to_string(chi[c]) +
                                       " on a component (expected 2)");
    }
  }

  emb.graph_index_.assign(n, kNone);
  for (VertexId v = 0; v < n; ++v) {
    if (data.vertices[v].kind == VertexKind::Original) {
      emb.graph_index_[v] = static_cast<std::uint32_t>(emb.originals_.size());
      emb.originals_.push_back(v);
    }
  }
  emb.graph_ = SimpleGraph(emb.originals_.size());
  for (const auto& rec : data.original_edges) {
    emb.graph_.add_edge(emb.graph_index_[rec.u], emb.graph_index_[rec.v]);
  }
  emb.graph_.finalize();

  emb.data_ = std::move(data);
  return emb;
}

std::optional<VertexId> OnePlaneEmbedding::find_label(std::int64_t label) const {
  const auto it = std::lower_bound(by_label_.begin(), by_label_.end(), std::pair{label, VertexId{0}});
  if (it == by_label_.end() || it->first != label) return std::nullopt;
  return it->second;
}

VertexId OnePlaneEmbedding::far_endpoint(Dart d) const {
  const auto& rec = data_.original_edges[owner_[edge_of(d)]];
  return gx_.origin(d) == rec.u ? rec.v : rec.u;
}

std::vector<Face> trace_faces(const OnePlaneEmbedding& emb) {
  const auto& gx = emb.planarisation();
  const auto& fs = emb.faces();
  std::vector<Face> faces(fs.size());
  for (FaceId f = 0; f < fs.size(); ++f) {
    faces[f].id = f;
    faces[f].boundary = fs.boundaries[f];
    for (Dart d : fs.boundaries[f]) {
      faces[f].angles.push_back({gx.target(gx.prev_cw(d)), gx.origin(d), gx.target(d)});
    }
  }
  return faces;
}

std::vector<Angle> angles_at(const OnePlaneEmbedding& emb, VertexId v) {
  if (v >= emb.vertex_count()) {
    throw Error(Errc::UnknownVertex, "vertex index " + std::to_string(v));
  }
  const auto& gx = emb.planarisation();
  const auto rot = gx.rotation(v);
  std::vector<Angle> angles;
  angles.reserve(rot.size());
  for (std::size_t i = 0; i < rot.size(); ++i) {
    angles.push_back({gx.target(rot[i]), v, gx.target(rot[(i + 1) % rot.size()])});
  }
  return angles;
}

LocalMaximalityReport is_locally_maximal(const OnePlaneEmbedding& emb) {
  LocalMaximalityReport report;
  const auto& g = emb.graph();
  for (std::uint32_t ci = 0; ci < emb.crossings().size(); ++ci) {
    const auto& cr = emb.crossings()[ci];
    const auto& a = emb.original_edges()[cr.edge_a];
    const auto& b = emb.original_edges()[cr.edge_b];
    // (u,v) x (w,x): need (u,x), (x,v), (v,w), (w,u).
    const std::array<std::array<VertexId, 2>, 4> pairs{{{a.u, b.v}, {b.v, a.v}, {a.v, b.u}, {b.u, a.u}}};
    for (const auto& [p, q] : pairs) {
      if (!g.adjacent(emb.graph_index(p), emb.graph_index(q))) {
        report.ok = false;
        report.missing.push_back({ci, p, q});
      }
    }
  }
  return report;
}

bool has_all_kite_faces(const OnePlaneEmbedding& emb) {
  const auto& gx = emb.planarisation();
  for (const auto& cr : emb.crossings()) {
    for (Dart d : gx.rotation(cr.dummy)) {
      if (emb.faces().boundaries[emb.faces().face_of_dart[d]].size() != 3) return false;
    }
  }
  return true;
}

OnePlaneEmbedding complete_kites(const OnePlaneEmbedding& emb, std::size_t* added) {
  const auto report = is_locally_maximal(emb);
  if (!report.ok) {
    const auto& m = report.missing.front();
    throw Error(Errc::NotLocallyMaximal,
                "crossing at dummy " + std::to_string(emb.label(emb.crossings()[m.crossing].dummy)) +
                    " lacks K4 edge (" + std::to_string(emb.label(m.u)) + "," +
                    std::to_string(emb.label(m.v)) + ")");
  }
  const auto& gx = emb.planarisation();
  const auto& faces = emb.faces();
  if (has_all_kite_faces(emb)) {
    if (added != nullptr) *added = 0;
    return emb;
  }
  EmbeddingData data = emb.data();

  std::int64_t next_edge_label = 0;
  for (const auto& e : data.edges) next_edge_label = std::max(next_edge_label, e.label + 1);
  std::int64_t next_orig_label = 0;
  for (const auto& e : data.original_edges) next_orig_label = std::max(next_orig_label, e.label + 1);

  // Per anchor dart: new darts to place just before / just after it.
  std::vector<std::vector<Dart>> before(gx.dart_count());
  std::vector<std::vector<Dart>> after(gx.dart_count());
  std::size_t count = 0;
  for (const auto& cr : emb.crossings()) {
    const auto rot = gx.rotation(cr.dummy);
    for (std::size_t i = 0; i < 4; ++i) {
      const Dart to_u = rot[i];
      const Dart to_x = rot[(i + 1) % 4];
      if (faces.boundaries[faces.face_of_dart[to_x]].size() == 3) continue;
      const VertexId u = gx.target(to_u);
      const VertexId x = gx.target(to_x);
      const auto e = static_cast<EdgeId>(data.edges.size());
      data.edges.push_back({next_edge_label++, u, x});
      data.original_edges.push_back({next_orig_label++, u, x, {e}});
      // Face u -> c -> x -> u closes when the new dart at x follows x->c and
      // the new dart at u precedes u->c.
      before[reverse(to_u)].push_back(tail_dart(e));
      after[reverse(to_x)].push_back(head_dart(e));
      ++count;
    }
  }
  for (VertexId v = 0; v < data.rotation.size(); ++v) {
    const auto& old = emb.data().rotation[v];
    bool touched = false;
    for (Dart d : old) touched = touched || !before[d].empty() || !after[d].empty();
    if (!touched) continue;
    std::vector<Dart> rot;
    for (Dart d : old) {
      rot.insert(rot.end(), before[d].begin(), before[d].end());
      rot.push_back(d);
      rot.insert(rot.end(), after[d].begin(), after[d].end());
    }
    data.rotation[v] = std::move(rot);
  }
  if (added != nullptr) *added = count;
  return OnePlaneEmbedding::create(std::move(data));
}

}  // namespace oneconn
