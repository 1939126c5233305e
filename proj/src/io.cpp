#include "oneconn/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace oneconn {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(Errc::Malformed, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

std::int64_t integer(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw Error(Errc::Malformed, std::string(what) + " must be an integer");
  }
  return value.get<std::int64_t>();
}

const json& array(const json& value, const char* what) {
  if (!value.is_array()) throw Error(Errc::Malformed, std::string(what) + " must be an array");
  return value;
}

template <typename Map>
std::uint32_t lookup(const Map& map, std::int64_t id, const char* what) {
  const auto it = map.find(id);
  if (it == map.end()) {
    throw Error(Errc::Dangling, std::string("unknown ") + what + " id " + std::to_string(id));
  }
  return it->second;
}

}  // namespace

EmbeddingData embedding_data_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::Malformed, "document must be a JSON object");
  EmbeddingData data;
  std::unordered_map<std::int64_t, VertexId> vertex_index;
  std::unordered_map<std::int64_t, EdgeId> edge_index;
  std::unordered_map<std::int64_t, OriginalEdgeId> orig_index;

  for (const auto& v : array(field(doc, "vertices"), "vertices")) {
    const auto id = integer(field(v, "id"), "vertex id");
    const auto& kind = field(v, "kind");
    if (!kind.is_string() || (kind != "original" && kind != "dummy")) {
      throw Error(Errc::Malformed, "vertex kind must be \"original\" or \"dummy\"");
    }
    if (!vertex_index.emplace(id, static_cast<VertexId>(data.vertices.size())).second) {
      throw Error(Errc::Dangling, "duplicate vertex id " + std::to_string(id));
    }
    data.vertices.push_back({id, kind == "dummy" ? VertexKind::Dummy : VertexKind::Original});
  }

  for (const auto& e : array(field(doc, "edges"), "edges")) {
    const auto id = integer(field(e, "id"), "edge id");
    if (id < 0) throw Error(Errc::Malformed, "edge ids must be non-negative");
    if (!edge_index.emplace(id, static_cast<EdgeId>(data.edges.size())).second) {
      throw Error(Errc::Dangling, "duplicate edge id " + std::to_string(id));
    }
    data.edges.push_back({id, lookup(vertex_index, integer(field(e, "tail"), "edge tail"), "vertex"),
                          lookup(vertex_index, integer(field(e, "head"), "edge head"), "vertex")});
  }

  data.rotation.resize(data.vertices.size());
  const auto& rotation = field(doc, "rotation");
  if (!rotation.is_object()) throw Error(Errc::Malformed, "rotation must be an object");
  for (const auto& [key, darts] : rotation.items()) {
    std::int64_t vid = 0;
    try {
      std::size_t used = 0;
      vid = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(Errc::Malformed, "rotation key \"" + key + "\" is not an integer");
    }
    const VertexId v = lookup(vertex_index, vid, "vertex");
    for (const auto& d : array(darts, "rotation entry")) {
      const auto dart_id = integer(d, "dart id");
      if (dart_id < 0) throw Error(Errc::Malformed, "dart ids must be non-negative");
      const EdgeId e = lookup(edge_index, dart_id / 2, "edge");
      data.rotation[v].push_back(dart_id % 2 == 0 ? tail_dart(e) : head_dart(e));
    }
  }

  for (const auto& oe : array(field(doc, "original_edges"), "original_edges")) {
    EmbeddingData::OriginalEdge rec;
    rec.label = integer(field(oe, "id"), "original edge id");
    if (!orig_index.emplace(rec.label, static_cast<OriginalEdgeId>(data.original_edges.size())).second) {
      throw Error(Errc::Dangling, "duplicate original edge id " + std::to_string(rec.label));
    }
    rec.u = lookup(vertex_index, integer(field(oe, "u"), "original edge endpoint"), "vertex");
    rec.v = lookup(vertex_index, integer(field(oe, "v"), "original edge endpoint"), "vertex");
    for (const auto& s : array(field(oe, "segments"), "segments")) {
      rec.segments.push_back(lookup(edge_index, integer(s, "segment id"), "edge"));
    }
    data.original_edges.push_back(std::move(rec));
  }

  for (const auto& c : array(field(doc, "crossings"), "crossings")) {
    data.crossings.push_back(
        {lookup(vertex_index, integer(field(c, "dummy"), "crossing dummy"), "vertex"),
         lookup(orig_index, integer(field(c, "edge_a"), "crossing edge"), "original edge"),
         lookup(orig_index, integer(field(c, "edge_b"), "crossing edge"), "original edge")});
  }
  return data;
}

OnePlaneEmbedding parse_and_validate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Malformed, e.what());
  }
  return OnePlaneEmbedding::create(embedding_data_from_json(doc));
}

OnePlaneEmbedding load_embedding(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Malformed, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_and_validate(buffer.str());
}

nlohmann::ordered_json embedding_to_json(const OnePlaneEmbedding& emb) {
  using nlohmann::ordered_json;
  const auto& data = emb.data();
  const auto dart_label = [&](Dart d) {
    return 2 * data.edges[edge_of(d)].label + (is_head_end(d) ? 1 : 0);
  };
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& v : data.vertices) {
    doc["vertices"].push_back(
        {{"id", v.label}, {"kind", v.kind == VertexKind::Dummy ? "dummy" : "original"}});
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : data.edges) {
    doc["edges"].push_back({{"id", e.label},
                            {"tail", data.vertices[e.tail].label},
                            {"head", data.vertices[e.head].label}});
  }
  doc["rotation"] = ordered_json::object();
  for (VertexId v = 0; v < data.vertices.size(); ++v) {
    auto darts = ordered_json::array();
    for (Dart d : data.rotation[v]) darts.push_back(dart_label(d));
    doc["rotation"][std::to_string(data.vertices[v].label)] = std::move(darts);
  }
  doc["original_edges"] = ordered_json::array();
  for (const auto& oe : data.original_edges) {
    auto segs = ordered_json::array();
    for (EdgeId s : oe.segments) segs.push_back(data.edges[s].label);
    doc["original_edges"].push_back({{"id", oe.label},
                                     {"u", data.vertices[oe.u].label},
                                     {"v", data.vertices[oe.v].label},
                                     {"segments", std::move(segs)}});
  }
  doc["crossings"] = ordered_json::array();
  for (const auto& c : data.crossings) {
    doc["crossings"].push_back({{"dummy", data.vertices[c.dummy].label},
                                {"edge_a", data.original_edges[c.edge_a].label},
                                {"edge_b", data.original_edges[c.edge_b].label}});
  }
  return doc;
}

std::string embedding_to_string(const OnePlaneEmbedding& emb) {
  return embedding_to_json(emb).dump(1) + "\n";
}

}  // namespace oneconn
