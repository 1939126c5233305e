#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oneconn {

// Dense internal indices. External (file) ids are kept separately as labels.
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;
using OriginalEdgeId = std::uint32_t;

// A dart is one end of an edge: 2*e sits at the tail, 2*e+1 at the head.
using Dart = std::uint32_t;

constexpr VertexId kNoVertex = ~VertexId{0};

constexpr Dart tail_dart(EdgeId e) { return 2 * e; }
constexpr Dart head_dart(EdgeId e) { return 2 * e + 1; }
constexpr EdgeId edge_of(Dart d) { return d >> 1; }
constexpr Dart reverse(Dart d) { return d ^ 1u; }
constexpr bool is_head_end(Dart d) { return (d & 1u) != 0; }

enum class Errc {
  // input / embedding validation
  Malformed,
  Dangling,
  Loop,
  DummyDegree,
  NonAlternating,
  DoubleCrossed,
  AdjacentCrossing,
  NotSphere,
  UnknownVertex,
  // preconditions
  NotLocallyMaximal,
  Disconnected,
  NotEndpoint,
  NotIncident,
  NotACycle,
  ConstraintViolated,
  NotSeparating,
  NotMinimal,
  PreconditionFailed,
  TooLarge,
  TooSmall,
  UnknownFixture,
  // internal self-checks
  WitnessNotFound,
  ClaimViolated,
  InternalMismatch,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace oneconn
