#include "oneconn/export.hpp"

#include <set>
#include <sstream>

namespace oneconn {
namespace {

std::string node(std::int64_t label) { return "v" + std::to_string(label); }

const char* kind_name(LambdaVertexKind k) {
  switch (k) {
    case LambdaVertexKind::Original: return "original";
    case LambdaVertexKind::Dummy: return "dummy";
    case LambdaVertexKind::Face: return "face";
  }
  return "original";
}

std::string vertex_attrs(LambdaVertexKind kind, std::int64_t label, FaceId face) {
  switch (kind) {
    case LambdaVertexKind::Original: return "[shape=circle,label=\"" + std::to_string(label) + "\"";
    case LambdaVertexKind::Dummy: return "[shape=point";
    case LambdaVertexKind::Face: return "[shape=square,label=\"f" + std::to_string(face) + "\"";
  }
  return "[";
}

// Leading comma so it can extend an attribute list.
constexpr const char* kHighlight = ",color=red,penwidth=2";

std::int64_t dart_label(std::int64_t edge_label, Dart d) { return 2 * edge_label + (is_head_end(d) ? 1 : 0); }

}  // namespace

std::string graph_to_dot(const OnePlaneEmbedding& emb) {
  std::ostringstream os;
  os << "graph G {\n";
  for (auto v : emb.originals()) {
    os << "  " << node(emb.label(v)) << ' ' << vertex_attrs(LambdaVertexKind::Original, emb.label(v), 0) << "];\n";
  }
  for (const auto& oe : emb.original_edges()) {
    os << "  " << node(emb.label(oe.u)) << " -- " << node(emb.label(oe.v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string planarisation_to_dot(const OnePlaneEmbedding& emb) {
  std::ostringstream os;
  os << "graph Gx {\n";
  for (VertexId v = 0; v < emb.vertex_count(); ++v) {
    const auto kind = emb.is_dummy(v) ? LambdaVertexKind::Dummy : LambdaVertexKind::Original;
    os << "  " << node(emb.label(v)) << ' ' << vertex_attrs(kind, emb.label(v), 0) << "];\n";
  }
  for (const auto& e : emb.data().edges) {
    os << "  " << node(emb.label(e.tail)) << " -- " << node(emb.label(e.head)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string lambda_to_dot(const RadialPlanarisation& rp, const ConstrainedCycle* overlay) {
  std::set<VertexId> on_vertex;
  std::set<EdgeId> on_edge;
  if (overlay) {
    on_vertex.insert(overlay->vertices.begin(), overlay->vertices.end());
    for (auto d : overlay->darts) on_edge.insert(edge_of(d));
  }
  const auto& lambda = rp.lambda();
  std::ostringstream os;
  os << "graph Lambda {\n";
  for (VertexId v = 0; v < lambda.vertex_count(); ++v) {
    const auto face = rp.is_face(v) ? rp.face_of_vertex(v) : FaceId{0};
    os << "  " << node(rp.vertex_label(v)) << ' ' << vertex_attrs(rp.kind(v), rp.vertex_label(v), face)
       << (on_vertex.count(v) ? kHighlight : "") << "];\n";
  }
  for (EdgeId e = 0; e < lambda.edge_count(); ++e) {
    const auto& ends = lambda.edge(e);
    os << "  " << node(rp.vertex_label(ends.tail)) << " -- " << node(rp.vertex_label(ends.head));
    std::string attrs;
    if (rp.is_radial(e)) attrs = "style=dashed";
    if (on_edge.count(e)) attrs += attrs.empty() ? std::string(kHighlight + 1) : std::string(kHighlight);
    if (!attrs.empty()) os << " [" << attrs << ']';
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json graph_to_json(const OnePlaneEmbedding& emb) {
  nlohmann::ordered_json doc;
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (auto v : emb.originals()) vertices.push_back(emb.label(v));
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& oe : emb.original_edges()) {
    edges.push_back({{"id", oe.label}, {"u", emb.label(oe.u)}, {"v", emb.label(oe.v)}});
  }
  return doc;
}

nlohmann::ordered_json lambda_to_json(const RadialPlanarisation& rp) {
  const auto& lambda = rp.lambda();
  nlohmann::ordered_json doc;
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < lambda.vertex_count(); ++v) {
    vertices.push_back({{"id", rp.vertex_label(v)}, {"kind", kind_name(rp.kind(v))}});
  }
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < lambda.edge_count(); ++e) {
    const auto& ends = lambda.edge(e);
    edges.push_back({{"id", rp.edge_label(e)},
                     {"tail", rp.vertex_label(ends.tail)},
                     {"head", rp.vertex_label(ends.head)},
                     {"kind", rp.is_radial(e) ? "radial" : "segment"}});
  }
  auto& rotation = doc["rotation"] = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < lambda.vertex_count(); ++v) {
    auto& list = rotation[std::to_string(rp.vertex_label(v))] = nlohmann::ordered_json::array();
    for (auto d : lambda.rotation(v)) list.push_back(dart_label(rp.edge_label(edge_of(d)), d));
  }
  return doc;
}

nlohmann::ordered_json cycle_to_json(const RadialPlanarisation& rp, const ConstrainedCycle& cycle) {
  nlohmann::ordered_json doc;
  auto& darts = doc["darts"] = nlohmann::ordered_json::array();
  for (auto d : cycle.darts) darts.push_back(dart_label(rp.edge_label(edge_of(d)), d));
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (auto v : cycle.vertices) vertices.push_back(rp.vertex_label(v));
  return doc;
}

}  // namespace oneconn
