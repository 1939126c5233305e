#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "drawing.hpp"
#include "oneconn/cycles.hpp"
#include "oneconn/embedding.hpp"
#include "oneconn/io.hpp"

namespace oneconn::testing {

inline std::string fixture_path(const std::string& name) { return std::string(ONECONN_FIXTURE_DIR) + "/" + name; }

inline OnePlaneEmbedding k4_cross_file() { return load_embedding(fixture_path("k4-cross.json")); }

// a - v - b, labels 1 2 3.
inline OnePlaneEmbedding path3() {
  Drawing d;
  const auto a = d.add(0, 0), v = d.add(1, 0), b = d.add(2, 0);
  d.join(a, v), d.join(v, b);
  return d.embedding();
}

inline OnePlaneEmbedding single_edge() {
  Drawing d;
  d.join(d.add(0, 0), d.add(1, 0));
  return d.embedding();
}

inline OnePlaneEmbedding triangle() {
  Drawing d;
  const auto a = d.add(0, 0), b = d.add(2, 0), c = d.add(1, 2);
  d.join(a, b), d.join(b, c), d.join(c, a);
  return d.embedding();
}

// Cycle on n vertices, labels 1..n.
inline OnePlaneEmbedding cycle_graph(int n) {
  Drawing d;
  for (int i = 0; i < n; ++i) d.add(std::cos(6.283185307179586 * i / n), std::sin(6.283185307179586 * i / n));
  for (int i = 0; i < n; ++i) d.join(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return d.embedding();
}

// K4 with (1,3) x (2,4) drawn as a square; extra vertices sit inside the
// first `hidden` kite triangles, so those kite faces are missing although
// every K4 edge exists. Labels: square 1..4, dummy 5, extras 6.. .
inline OnePlaneEmbedding k4_cross_hidden_kites(int hidden) {
  Drawing d;
  const auto a = d.add(-1, 1), b = d.add(1, 1), c = d.add(1, -1), e = d.add(-1, -1);
  const auto x = d.add(0, 0, VertexKind::Dummy);
  d.join(a, b), d.join(b, c), d.join(c, e), d.join(e, a);
  d.join(a, x), d.join(x, c), d.join(b, x), d.join(x, e);
  const VertexId corners[] = {a, b, c, e};
  const double inside[][2] = {{0, 0.6}, {0.6, 0}, {0, -0.6}, {-0.6, 0}};
  for (int i = 0; i < hidden; ++i) {
    const auto y = d.add(inside[i][0], inside[i][1]);
    d.join(y, corners[i]);
    d.join(y, corners[(i + 1) % 4]);
  }
  return d.embedding();
}

// Closed walk through `vertices` in Lambda, taking at each step the lowest
// unused dart towards the next vertex.
inline ConstrainedCycle walk(const RadialPlanarisation& rp, const std::vector<VertexId>& vertices) {
  const auto& lambda = rp.lambda();
  ConstrainedCycle cycle;
  cycle.vertices = vertices;
  std::vector<bool> used(lambda.edge_count(), false);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto to = vertices[(i + 1) % vertices.size()];
    Dart best = ~Dart{0};
    for (Dart d : lambda.rotation(vertices[i])) {
      if (lambda.target(d) == to && !used[edge_of(d)] && d < best) best = d;
    }
    if (best == ~Dart{0}) throw Error(Errc::NotACycle, "no link in walk");
    used[edge_of(best)] = true;
    cycle.darts.push_back(best);
  }
  return cycle;
}

// Lambda face vertex whose G^x face has exactly the given corner vertices.
inline VertexId face_with_corners(const RadialPlanarisation& rp, std::vector<VertexId> corners) {
  std::sort(corners.begin(), corners.end());
  const auto& emb = rp.base();
  for (FaceId f = 0; f < emb.faces().size(); ++f) {
    std::vector<VertexId> around;
    for (Dart d : emb.faces().boundaries[f]) around.push_back(emb.planarisation().origin(d));
    std::sort(around.begin(), around.end());
    if (around == corners) return rp.face_vertex(f);
  }
  throw Error(Errc::InternalMismatch, "no such face");
}

}  // namespace oneconn::testing
