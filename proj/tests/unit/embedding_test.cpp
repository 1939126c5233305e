#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "helpers.hpp"
#include "oneconn/generator.hpp"
#include "oneconn/io.hpp"

namespace oneconn {
namespace {

using testing::Drawing;

Errc code_of(const EmbeddingData& data) {
  try {
    OnePlaneEmbedding::create(data);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "embedding unexpectedly accepted";
  return Errc::InternalMismatch;
}

TEST(Embedding, K4CrossFileHasEulerCounts) {
  const auto emb = testing::k4_cross_file();
  EXPECT_EQ(emb.vertex_count(), 5u);
  EXPECT_EQ(emb.planarisation().edge_count(), 8u);
  EXPECT_EQ(emb.faces().size(), 5u);
  EXPECT_EQ(emb.crossings().size(), 1u);
  EXPECT_EQ(emb.originals().size(), 4u);
  EXPECT_EQ(emb.graph().edge_count(), 6u);
}

TEST(Embedding, K4CrossHasFourKiteFaces) {
  const auto emb = testing::k4_cross_file();
  int kites = 0;
  for (const auto& face : trace_faces(emb)) {
    if (face.boundary.size() != 3) continue;
    int dummies = 0;
    for (auto d : face.boundary) dummies += emb.is_dummy(emb.planarisation().origin(d));
    kites += dummies == 1;
  }
  EXPECT_EQ(kites, 4);
}

TEST(Embedding, DummyRotationOutOfAlternationIsRejected) {
  auto data = testing::k4_cross_file().data();
  data.rotation[4] = {9, 10, 13, 14};  // segments of (1,3), then of (2,4)
  EXPECT_EQ(code_of(data), Errc::NonAlternating);
}

TEST(Embedding, DummyOfDegreeFiveIsRejected) {
  auto data = testing::k4_cross_file().data();
  data.vertices.push_back({6, VertexKind::Original});
  data.edges.push_back({8, 5, 4});
  data.rotation.push_back({16});
  data.rotation[4].push_back(17);
  EXPECT_EQ(code_of(data), Errc::DummyDegree);
}

TEST(Embedding, EdgeWithThreeSegmentsIsDoubleCrossed) {
  auto data = testing::k4_cross_file().data();
  data.original_edges[4].segments.push_back(0);
  EXPECT_EQ(code_of(data), Errc::DoubleCrossed);
}

TEST(Embedding, TwistedRotationIsNotSphere) {
  Drawing d;
  const auto a = d.add(0, 0), b = d.add(4, 0), c = d.add(2, 4), m = d.add(2, 1.5);
  d.join(a, b), d.join(b, c), d.join(c, a), d.join(m, a), d.join(m, b), d.join(m, c);
  auto data = d.data();
  ASSERT_NO_THROW(OnePlaneEmbedding::create(data));
  std::swap(data.rotation[a][0], data.rotation[a][1]);
  EXPECT_EQ(code_of(data), Errc::NotSphere);
}

TEST(Embedding, UnknownDartIsDangling) {
  auto data = testing::triangle().data();
  data.rotation[0].push_back(99);
  EXPECT_EQ(code_of(data), Errc::Dangling);
}

TEST(Embedding, SelfLoopIsRejected) {
  auto data = testing::triangle().data();
  data.edges[0].head = data.edges[0].tail;
  EXPECT_EQ(code_of(data), Errc::Loop);
}

TEST(Embedding, CrossingEdgesSharingAnEndpointAreRejected) {
  EmbeddingData data;
  data.vertices = {{0, VertexKind::Original}, {1, VertexKind::Original}, {2, VertexKind::Original},
                   {3, VertexKind::Dummy}};
  data.edges = {{0, 0, 3}, {1, 3, 1}, {2, 0, 3}, {3, 3, 2}};
  data.rotation = {{0, 4}, {3}, {7}, {1, 5, 2, 6}};
  data.original_edges = {{0, 0, 1, {0, 1}}, {1, 0, 2, {2, 3}}};
  data.crossings = {{3, 0, 1}};
  EXPECT_EQ(code_of(data), Errc::AdjacentCrossing);
}

TEST(Embedding, KiteFreeGridIsValidButNotLocallyMaximal) {
  const auto grid = fixture("grid-no-kites");
  const auto report = is_locally_maximal(grid);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.missing.size(), 4 * grid.crossings().size());
}

TEST(Embedding, ArrowFixtureMissesTheTwoEdgesAtTheFarEndpoint) {
  const auto arrow = fixture("arrow-two-kites");
  const auto report = is_locally_maximal(arrow);
  ASSERT_FALSE(report.ok);
  ASSERT_EQ(report.missing.size(), 2u);
  // Both missing K4 edges share one endpoint (v, label 6); the present kite
  // edges share the opposite endpoint (u, label 1).
  std::set<std::int64_t> ends;
  for (const auto& m : report.missing) {
    ends.insert(arrow.label(m.u));
    ends.insert(arrow.label(m.v));
  }
  EXPECT_EQ(ends, (std::set<std::int64_t>{2, 3, 6}));
}

TEST(Embedding, K4CrossIsLocallyMaximal) { EXPECT_TRUE(is_locally_maximal(testing::k4_cross_file()).ok); }

TEST(Faces, SingleEdgeHasOneFaceWithTwoAngles) {
  const auto faces = trace_faces(testing::single_edge());
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].boundary.size(), 2u);
  EXPECT_EQ(faces[0].angles.size(), 2u);
}

TEST(Faces, TriangleHasTwoFacesOfLengthThree) {
  const auto faces = trace_faces(testing::triangle());
  ASSERT_EQ(faces.size(), 2u);
  for (const auto& f : faces) EXPECT_EQ(f.boundary.size(), 3u);
}

TEST(Faces, EveryDartOnExactlyOneFace) {
  const auto emb = generate({30, 0.5, 11, Variant::TriangulationBased});
  std::vector<int> seen(emb.planarisation().dart_count(), 0);
  for (const auto& f : trace_faces(emb)) {
    for (auto d : f.boundary) ++seen[d];
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST(Angles, LeafHasOneDegenerateAngle) {
  const auto emb = testing::path3();
  const auto angles = angles_at(emb, 0);
  ASSERT_EQ(angles.size(), 1u);
  EXPECT_EQ(angles[0].before, angles[0].after);
  EXPECT_EQ(angles[0].at, 0u);
}

TEST(Angles, DummyAnglesMixBothCrossingEdges) {
  const auto emb = testing::k4_cross_file();
  const auto angles = angles_at(emb, 4);
  ASSERT_EQ(angles.size(), 4u);
  const auto& cr = emb.crossings()[0];
  const auto on = [&](OriginalEdgeId oe, VertexId x) {
    const auto& rec = emb.original_edges()[oe];
    return rec.u == x || rec.v == x;
  };
  for (const auto& a : angles) {
    EXPECT_TRUE((on(cr.edge_a, a.before) && on(cr.edge_b, a.after)) ||
                (on(cr.edge_b, a.before) && on(cr.edge_a, a.after)));
  }
}

TEST(Angles, FollowRotationCyclically) {
  const auto emb = generate({40, 0.0, 5, Variant::TriangulationBased});
  const auto& gx = emb.planarisation();
  VertexId v = 0;
  while (gx.degree(v) != 5) ++v;
  const auto angles = angles_at(emb, v);
  ASSERT_EQ(angles.size(), 5u);
  const auto rot = gx.rotation(v);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(angles[i].before, gx.target(rot[i]));
    EXPECT_EQ(angles[i].after, gx.target(rot[(i + 1) % 5]));
    EXPECT_EQ(angles[(i + 1) % 5].before, angles[i].after);
  }
}

TEST(Angles, UnknownVertex) {
  try {
    angles_at(testing::triangle(), 99);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownVertex);
  }
}

TEST(KiteCompletion, NothingToDoOnK4Cross) {
  const auto emb = testing::k4_cross_file();
  std::size_t added = 99;
  const auto out = complete_kites(emb, &added);
  EXPECT_EQ(added, 0u);
  EXPECT_EQ(embedding_to_string(out), embedding_to_string(emb));
}

// Missing kite faces counted on an independent face trace.
std::size_t missing_kite_faces(const EmbeddingData& data) {
  const auto lambda = testing::plain_lambda(data);
  std::size_t missing = 0;
  for (std::size_t d = 0; d < 2 * data.edges.size(); ++d) {
    const auto& e = data.edges[d / 2];
    const auto origin = d % 2 ? e.head : e.tail;
    if (data.vertices[origin].kind != VertexKind::Dummy) continue;
    const auto face = lambda.radial[d].second - lambda.base;
    missing += lambda.face_walks[face].size() != 3;
  }
  return missing;
}

TEST(KiteCompletion, AddsOneEdgePerMissingKiteFace) {
  for (int hidden = 1; hidden <= 4; ++hidden) {
    const auto emb = testing::k4_cross_hidden_kites(hidden);
    ASSERT_TRUE(is_locally_maximal(emb).ok);
    const auto before = missing_kite_faces(emb.data());
    EXPECT_EQ(before, static_cast<std::size_t>(hidden));
    std::size_t added = 0;
    const auto out = complete_kites(emb, &added);
    EXPECT_EQ(added, before);
    EXPECT_EQ(out.planarisation().edge_count(), emb.planarisation().edge_count() + before);
    EXPECT_EQ(missing_kite_faces(out.data()), 0u);
    EXPECT_EQ(out.graph().edge_count(), emb.graph().edge_count());
  }
}

TEST(KiteCompletion, IsIdempotent) {
  const auto once = complete_kites(testing::k4_cross_hidden_kites(3));
  std::size_t added = 99;
  const auto twice = complete_kites(once, &added);
  EXPECT_EQ(added, 0u);
  EXPECT_EQ(embedding_to_string(twice), embedding_to_string(once));
}

TEST(KiteCompletion, RejectsMissingK4Edges) {
  try {
    complete_kites(fixture("grid-no-kites"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotLocallyMaximal);
  }
}

TEST(Io, RoundTripIsExact) {
  const auto emb = generate({25, 0.5, 3, Variant::Sparse});
  const auto text = embedding_to_string(emb);
  EXPECT_EQ(embedding_to_string(parse_and_validate(text)), text);
}

TEST(Io, RejectsMalformedDocuments) {
  const auto code = [](const std::string& text) {
    try {
      parse_and_validate(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InternalMismatch;
  };
  EXPECT_EQ(code("{"), Errc::Malformed);
  EXPECT_EQ(code("[]"), Errc::Malformed);
  EXPECT_EQ(code(R"({"vertices":[{"id":1.5,"kind":"original"}],"edges":[],"rotation":{},
                     "original_edges":[],"crossings":[]})"),
            Errc::Malformed);
  EXPECT_EQ(code(R"({"vertices":[{"id":1,"kind":"original"},{"id":2,"kind":"original"}],
                     "edges":[{"id":0,"tail":1,"head":2}],"rotation":{"1":[0],"2":[7]},
                     "original_edges":[{"id":0,"u":1,"v":2,"segments":[0]}],"crossings":[]})"),
            Errc::Dangling);
}

TEST(Io, MissingFileIsMalformed) {
  try {
    load_embedding("/nonexistent/graph.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Malformed);
  }
}

TEST(Embedding, EdgelessSingleVertexIsAccepted) {
  EmbeddingData data;
  data.vertices = {{7, VertexKind::Original}};
  data.rotation = {{}};
  const auto emb = OnePlaneEmbedding::create(data);
  EXPECT_EQ(emb.faces().size(), 0u);
  EXPECT_EQ(emb.graph().size(), 1u);
}

}  // namespace
}  // namespace oneconn
