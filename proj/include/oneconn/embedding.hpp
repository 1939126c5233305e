#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oneconn/rotation_system.hpp"
#include "oneconn/simple_graph.hpp"
#include "oneconn/types.hpp"

namespace oneconn {

enum class VertexKind : std::uint8_t { Original, Dummy };

// Raw, unvalidated description of a planarised 1-plane drawing. Indices are
// dense; labels are the ids used in files.
struct EmbeddingData {
  struct Vertex {
    std::int64_t label = 0;
    VertexKind kind = VertexKind::Original;
  };
  struct Edge {
    std::int64_t label = 0;
    VertexId tail = 0;
    VertexId head = 0;
  };
  struct OriginalEdge {
    std::int64_t label = 0;
    VertexId u = 0;
    VertexId v = 0;
    std::vector<EdgeId> segments;  // one, or two through a dummy
  };
  struct Crossing {
    VertexId dummy = 0;
    OriginalEdgeId edge_a = 0;
    OriginalEdgeId edge_b = 0;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<Dart>> rotation;  // clockwise, per vertex
  std::vector<OriginalEdge> original_edges;
  std::vector<Crossing> crossings;
};

// <before, at, after>: the clockwise-consecutive neighbours around `at`.
struct Angle {
  VertexId before = 0;
  VertexId at = 0;
  VertexId after = 0;

  friend bool operator==(const Angle&, const Angle&) = default;
};

struct Face {
  FaceId id = 0;
  std::vector<Dart> boundary;
  std::vector<Angle> angles;  // angles[i] is the turn into boundary[i]
};

// A validated 1-plane embedding, stored as its planarisation G^x with the
// dummy vertices flagged. Immutable after construction.
class OnePlaneEmbedding {
 public:
  // Validates every structural invariant; throws Error on failure.
  static OnePlaneEmbedding create(EmbeddingData data);

  const EmbeddingData& data() const { return data_; }
  const RotationSystem& planarisation() const { return gx_; }
  const FaceSet& faces() const { return faces_; }

  std::size_t vertex_count() const { return gx_.vertex_count(); }
  VertexKind kind(VertexId v) const { return data_.vertices[v].kind; }
  bool is_original(VertexId v) const { return kind(v) == VertexKind::Original; }
  bool is_dummy(VertexId v) const { return kind(v) == VertexKind::Dummy; }
  std::int64_t label(VertexId v) const { return data_.vertices[v].label; }
  std::optional<VertexId> find_label(std::int64_t label) const;

  const std::vector<EmbeddingData::OriginalEdge>& original_edges() const {
    return data_.original_edges;
  }
  const std::vector<EmbeddingData::Crossing>& crossings() const { return data_.crossings; }

  OriginalEdgeId original_edge_of(EdgeId segment) const { return owner_[segment]; }
  bool is_crossed(OriginalEdgeId e) const { return data_.original_edges[e].segments.size() == 2; }
  // Index into crossings() for a dummy vertex.
  std::uint32_t crossing_at(VertexId dummy) const { return crossing_of_dummy_[dummy]; }

  // The original endpoint at the far side of the original edge that owns the
  // G^x dart d; d must sit at an original vertex.
  VertexId far_endpoint(Dart d) const;

  // Original vertices in index order, and the inverse map into G's indexing.
  const std::vector<VertexId>& originals() const { return originals_; }
  std::uint32_t graph_index(VertexId v) const { return graph_index_[v]; }
  // Underlying simple graph G on graph indices.
  const SimpleGraph& graph() const { return graph_; }

 private:
  EmbeddingData data_;
  RotationSystem gx_;
  FaceSet faces_;
  std::vector<OriginalEdgeId> owner_;
  std::vector<std::uint32_t> crossing_of_dummy_;
  std::vector<VertexId> originals_;
  std::vector<std::uint32_t> graph_index_;
  SimpleGraph graph_;
  std::vector<std::pair<std::int64_t, VertexId>> by_label_;  // sorted by label
};

std::vector<Face> trace_faces(const OnePlaneEmbedding& emb);

// One angle per consecutive dart pair in the rotation at v.
std::vector<Angle> angles_at(const OnePlaneEmbedding& emb, VertexId v);

struct MissingKiteEdge {
  std::uint32_t crossing = 0;
  VertexId u = 0;
  VertexId v = 0;
};

struct LocalMaximalityReport {
  bool ok = true;
  std::vector<MissingKiteEdge> missing;
};

LocalMaximalityReport is_locally_maximal(const OnePlaneEmbedding& emb);

// Every crossing has all four kite faces.
bool has_all_kite_faces(const OnePlaneEmbedding& emb);

// Inserts an uncrossed parallel edge for every missing kite face. Throws
// Errc::NotLocallyMaximal when a K4 edge is absent altogether.
OnePlaneEmbedding complete_kites(const OnePlaneEmbedding& emb, std::size_t* added = nullptr);

}  // namespace oneconn
