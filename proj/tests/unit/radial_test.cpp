#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "helpers.hpp"
#include "oneconn/generator.hpp"
#include "oneconn/radial.hpp"

namespace oneconn {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalMismatch;
}

TEST(Radial, SingleEdgeCounts) {
  const auto rp = build_radial(testing::single_edge());
  EXPECT_EQ(rp.lambda().vertex_count(), 3u);
  EXPECT_EQ(rp.lambda().edge_count(), 3u);
  EXPECT_EQ(rp.radial_edge_count(), 2u);
}

TEST(Radial, K4CrossCounts) {
  const auto rp = build_radial(testing::k4_cross_file());
  EXPECT_EQ(rp.lambda().vertex_count(), 10u);
  EXPECT_EQ(rp.radial_edge_count(), 16u);
  EXPECT_EQ(rp.lambda().edge_count(), 24u);
  EXPECT_EQ(rp.kind(4), LambdaVertexKind::Dummy);
  EXPECT_EQ(rp.kind(5), LambdaVertexKind::Face);
  EXPECT_EQ(rp.kind(0), LambdaVertexKind::Original);
}

TEST(Radial, MatchesIndependentConstruction) {
  for (const auto& name : {"k4-cross", "two-k4-shared-vertex", "k6-oneplanar", "grid-no-kites"}) {
    const auto emb = fixture(name);
    const auto rp = build_radial(emb);
    const auto plain = testing::plain_lambda(emb.data());
    ASSERT_EQ(rp.lambda().vertex_count(), plain.size()) << name;
    std::multiset<std::pair<VertexId, VertexId>> ours, theirs(plain.radial.begin(), plain.radial.end());
    for (EdgeId e = 0; e < rp.lambda().edge_count(); ++e) {
      if (!rp.is_radial(e)) continue;
      const auto& ends = rp.lambda().edge(e);
      ours.insert({ends.tail, ends.head});
    }
    EXPECT_EQ(ours, theirs) << name;
  }
}

TEST(Radial, EveryFaceIsATriangle) {
  std::vector<OnePlaneEmbedding> inputs{testing::k4_cross_file(), fixture("two-k4-shared-vertex"),
                                        fixture("grid-no-kites"), testing::path3()};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    inputs.push_back(generate({20, 0.5, seed, seed % 2 ? Variant::Sparse : Variant::TriangulationBased}));
  }
  for (const auto& emb : inputs) {
    const auto faces = build_radial(emb).lambda().trace_faces();
    for (const auto& f : faces.boundaries) EXPECT_EQ(f.size(), 3u);
  }
}

TEST(Radial, CutVertexGetsParallelRadialEdges) {
  const auto rp = build_radial(fixture("two-k4-shared-vertex"));
  std::map<std::pair<VertexId, VertexId>, int> count;
  for (EdgeId e = 0; e < rp.lambda().edge_count(); ++e) {
    if (rp.is_radial(e)) ++count[{rp.lambda().edge(e).tail, rp.lambda().edge(e).head}];
  }
  int parallel_at_cut = 0;
  for (const auto& [key, c] : count) {
    if (c < 2) continue;
    EXPECT_EQ(key.first, 0u);  // only the shared vertex repeats on a face
    ++parallel_at_cut;
  }
  EXPECT_GE(parallel_at_cut, 1);
}

TEST(Radial, RadialEdgeBisectsItsAngle) {
  const auto emb = testing::k4_cross_file();
  const auto rp = build_radial(emb);
  const auto& gx = emb.planarisation();
  for (Dart d = 0; d < gx.dart_count(); ++d) {
    const auto e = rp.radial_edge_for(d);
    EXPECT_EQ(rp.angle_dart(e), d);
    EXPECT_EQ(rp.lambda().edge(e).tail, gx.origin(d));
    EXPECT_EQ(rp.angle_of(e).at, gx.origin(d));
    EXPECT_EQ(rp.angle_of(e).after, gx.target(d));
  }
}

TEST(Radial, DisconnectedInputIsRejected) {
  testing::Drawing d;
  d.join(d.add(0, 0), d.add(1, 0));
  d.join(d.add(5, 0), d.add(6, 0));
  const auto emb = d.embedding();
  EXPECT_EQ(code_of([&] { build_radial(emb); }), Errc::Disconnected);
}

TEST(SegmentDart, UncrossedEdgeIsItsOwnSegment) {
  const auto rp = build_radial(testing::k4_cross_file());
  EXPECT_EQ(rp.segment_dart(0, 0), tail_dart(0));
  EXPECT_EQ(rp.segment_dart(1, 0), head_dart(0));
}

TEST(SegmentDart, CrossedEdgeEndsAtTheDummy) {
  const auto rp = build_radial(testing::k4_cross_file());
  // Original edge 4 is (1,3) with segments 1-5 and 5-3.
  const auto at1 = rp.segment_dart(0, 4);
  const auto at3 = rp.segment_dart(2, 4);
  EXPECT_EQ(at1, tail_dart(4));
  EXPECT_EQ(at3, head_dart(5));
  EXPECT_NE(edge_of(at1), edge_of(at3));
  EXPECT_EQ(rp.lambda().target(at1), 4u);
  EXPECT_EQ(rp.lambda().target(at3), 4u);
}

TEST(SegmentDart, NonEndpointIsRejected) {
  const auto rp = build_radial(testing::k4_cross_file());
  EXPECT_EQ(code_of([&] { rp.segment_dart(1, 4); }), Errc::NotEndpoint);
  EXPECT_EQ(code_of([&] { rp.segment_dart(0, 42); }), Errc::NotEndpoint);
}

TEST(RotationBetween, ConsecutiveDartsGiveNothing) {
  const auto rp = build_radial(testing::k4_cross_file());
  const auto rot = rp.lambda().rotation(0);
  EXPECT_TRUE(rp.rotation_between(0, rot[0], rot[1]).empty());
}

TEST(RotationBetween, SameDartGivesAllOthers) {
  const auto rp = build_radial(testing::k4_cross_file());
  const auto rot = rp.lambda().rotation(0);
  const auto between = rp.rotation_between(0, rot[2], rot[2]);
  ASSERT_EQ(between.size(), rot.size() - 1);
  for (std::size_t i = 0; i < between.size(); ++i) EXPECT_EQ(between[i], rot[(3 + i) % rot.size()]);
}

TEST(RotationBetween, KiteEdgesEncloseTheCrossedSegment) {
  const auto rp = build_radial(testing::k4_cross_file());
  // At vertex 1: kite edge (1,2) is dart 0, kite edge (4,1) arrives as dart 7,
  // the crossed segment (1,5) leaves as dart 8.
  const auto between = rp.rotation_between(0, 0, 7);
  std::vector<Dart> segments;
  for (Dart d : between) {
    if (!rp.is_radial(edge_of(d))) segments.push_back(d);
  }
  EXPECT_EQ(segments, std::vector<Dart>{8});
  EXPECT_EQ(between.size(), 3u);
}

TEST(RotationBetween, ForeignDartIsRejected) {
  const auto rp = build_radial(testing::k4_cross_file());
  EXPECT_EQ(code_of([&] { rp.rotation_between(0, 0, 2); }), Errc::NotIncident);
}

TEST(Radial, LabelsContinuePastBaseIds) {
  const auto rp = build_radial(testing::k4_cross_file());
  EXPECT_EQ(rp.vertex_label(4), 5);
  EXPECT_EQ(rp.vertex_label(5), 6);
  EXPECT_EQ(rp.edge_label(7), 7);
  EXPECT_EQ(rp.edge_label(8), 8);
}

}  // namespace
}  // namespace oneconn
