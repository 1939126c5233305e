#include "oneconn/rotation_system.hpp"

#include <numeric>
#include <string>

namespace oneconn {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Malformed: return "Malformed";
    case Errc::Dangling: return "Dangling";
    case Errc::Loop: return "Loop";
    case Errc::DummyDegree: return "DummyDegree";
    case Errc::NonAlternating: return "NonAlternating";
    case Errc::DoubleCrossed: return "DoubleCrossed";
    case Errc::AdjacentCrossing: return "AdjacentCrossing";
    case Errc::NotSphere: return "NotSphere";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotLocallyMaximal: return "NotLocallyMaximal";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotEndpoint: return "NotEndpoint";
    case Errc::NotIncident: return "NotIncident";
    case Errc::NotACycle: return "NotACycle";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::NotSeparating: return "NotSeparating";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::ClaimViolated: return "ClaimViolated";
    case Errc::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

RotationSystem::RotationSystem(std::size_t vertex_count, std::vector<EdgeEnds> edges,
                               std::vector<std::vector<Dart>> rotation)
    : edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (rotation_.size() != vertex_count) {
    throw Error(Errc::Dangling, "rotation table size does not match vertex count");
  }
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  position_.assign(2 * edges_.size(), kUnset);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& ends = edges_[e];
    if (ends.tail >= vertex_count || ends.head >= vertex_count) {
      throw Error(Errc::Dangling, "edge " + std::to_string(e) + " references an unknown vertex");
    }
    if (ends.tail == ends.head) {
      throw Error(Errc::Loop, "edge " + std::to_string(e) + " is a self-loop");
    }
  }
  for (VertexId v = 0; v < rotation_.size(); ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const Dart d = rotation_[v][i];
      if (d >= position_.size()) {
        throw Error(Errc::Dangling, "rotation of vertex " + std::to_string(v) +
                                        " names unknown dart " + std::to_string(d));
      }
      if (position_[d] != kUnset) {
        throw Error(Errc::Dangling, "dart " + std::to_string(d) + " appears twice in rotations");
      }
      if (origin(d) != v) {
        throw Error(Errc::Dangling, "dart " + std::to_string(d) + " listed at vertex " +
                                        std::to_string(v) + " but belongs elsewhere");
      }
      position_[d] = static_cast<std::uint32_t>(i);
    }
  }
  next_.resize(position_.size());
  prev_.resize(position_.size());
  for (const auto& rot : rotation_) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart after = rot[i + 1 == rot.size() ? 0 : i + 1];
      next_[rot[i]] = after;
      prev_[after] = rot[i];
    }
  }
  for (Dart d = 0; d < position_.size(); ++d) {
    if (position_[d] == kUnset) {
      throw Error(Errc::Dangling, "dart " + std::to_string(d) + " missing from rotations");
    }
  }
}

FaceSet RotationSystem::trace_faces() const {
  FaceSet faces;
  constexpr FaceId kUnset = ~FaceId{0};
  faces.face_of_dart.assign(dart_count(), kUnset);
  for (Dart start = 0; start < dart_count(); ++start) {
    if (faces.face_of_dart[start] != kUnset) continue;
    const auto id = static_cast<FaceId>(faces.boundaries.size());
    auto& boundary = faces.boundaries.emplace_back();
    Dart d = start;
    do {
      faces.face_of_dart[d] = id;
      boundary.push_back(d);
      d = face_next(d);
    } while (d != start);
  }
  return faces;
}

std::vector<std::uint32_t> RotationSystem::component_labels(std::uint32_t* count) const {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(vertex_count(), kUnset);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : rotation_[v]) {
        const VertexId w = target(d);
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

bool strictly_between_cw(const RotationSystem& rs, Dart from, Dart middle, Dart to) {
  const std::size_t deg = rs.degree(rs.origin(from));
  const std::size_t base = rs.position(from);
  const std::size_t m = (rs.position(middle) + deg - base) % deg;
  std::size_t t = (rs.position(to) + deg - base) % deg;
  if (t == 0) t = deg;  // from == to: the sweep is the full turn
  return m > 0 && m < t;
}

}  // namespace oneconn
