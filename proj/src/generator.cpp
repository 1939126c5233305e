#include "oneconn/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace oneconn {
namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

// Clockwise neighbour lists of a simple plane graph.
using NeighbourRotation = std::vector<std::vector<VertexId>>;

void insert_after(std::vector<VertexId>& rot, VertexId anchor, VertexId v) {
  const auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, v);
}

NeighbourRotation triangulate(std::uint32_t n, std::mt19937_64& rng) {
  // Faces are stored as their walk a -> b -> c: at b, c follows a.
  NeighbourRotation rot(n);
  rot[0] = {1, 2};
  rot[1] = {0, 2};
  rot[2] = {0, 1};
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  for (VertexId p = 3; p < n; ++p) {
    const auto f = static_cast<std::size_t>(rng() % faces.size());
    const auto [a, b, c] = faces[f];
    insert_after(rot[a], c, p);
    insert_after(rot[b], a, p);
    insert_after(rot[c], b, p);
    rot[p] = {a, c, b};
    faces[f] = {a, b, p};
    faces.push_back({b, c, p});
    faces.push_back({c, a, p});
  }
  return rot;
}

// Keeps a BFS tree from vertex 0 and drops each other edge on an odd draw.
void thin(NeighbourRotation& rot, std::mt19937_64& rng) {
  const auto n = static_cast<VertexId>(rot.size());
  std::unordered_set<std::uint64_t> tree;
  std::vector<bool> seen(n, false);
  std::queue<VertexId> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop();
    auto sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    for (auto w : sorted) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.insert(pair_key(v, w));
      queue.push(w);
    }
  }
  std::unordered_set<std::uint64_t> dropped;
  for (VertexId u = 0; u < n; ++u) {
    auto sorted = rot[u];
    std::sort(sorted.begin(), sorted.end());
    for (auto v : sorted) {
      if (v < u || tree.count(pair_key(u, v))) continue;
      if (rng() % 2 == 1) dropped.insert(pair_key(u, v));
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    std::erase_if(rot[u], [&](VertexId v) { return dropped.count(pair_key(u, v)) > 0; });
  }
}

EmbeddingData plane_data(const NeighbourRotation& rot) {
  EmbeddingData data;
  const auto n = static_cast<VertexId>(rot.size());
  std::unordered_map<std::uint64_t, EdgeId> edge_id;
  for (VertexId u = 0; u < n; ++u) {
    data.vertices.push_back({u, VertexKind::Original});
    auto sorted = rot[u];
    std::sort(sorted.begin(), sorted.end());
    for (auto v : sorted) {
      if (v < u) continue;
      const auto e = static_cast<EdgeId>(data.edges.size());
      edge_id.emplace(pair_key(u, v), e);
      data.edges.push_back({e, u, v});
      data.original_edges.push_back({e, u, v, {e}});
    }
  }
  data.rotation.resize(n);
  for (VertexId u = 0; u < n; ++u) {
    for (auto v : rot[u]) {
      const auto e = edge_id.at(pair_key(u, v));
      data.rotation[u].push_back(data.edges[e].tail == u ? tail_dart(e) : head_dart(e));
    }
  }
  return data;
}

// In-place crossing insertion on raw embedding data.
class KiteInjector {
 public:
  explicit KiteInjector(EmbeddingData& data) : data_(data) {
    for (const auto& v : data_.vertices) next_vertex_label_ = std::max(next_vertex_label_, v.label + 1);
    for (const auto& e : data_.edges) next_edge_label_ = std::max(next_edge_label_, e.label + 1);
    for (const auto& oe : data_.original_edges) {
      next_original_label_ = std::max(next_original_label_, oe.label + 1);
      adjacent_.insert(pair_key(oe.u, oe.v));
    }
  }

  bool eligible(OriginalEdgeId oe) const { return plan(oe).has_value(); }

  bool inject(OriginalEdgeId oe) {
    const auto p = plan(oe);
    if (!p) return false;
    const auto s = data_.original_edges[oe].segments[0];
    const auto x = static_cast<VertexId>(data_.vertices.size());
    data_.vertices.push_back({next_vertex_label_++, VertexKind::Dummy});
    data_.rotation.emplace_back();

    const auto s2 = add_edge(x, p->b);
    replace(p->b, head_dart(s), head_dart(s2));
    data_.edges[s].head = x;
    const auto s3 = add_edge(p->c, x);
    insert_after(p->c, reverse(p->to_c), tail_dart(s3));
    const auto s4 = add_edge(x, p->d);
    insert_after(p->d, reverse(p->to_d), head_dart(s4));
    data_.rotation[x] = {head_dart(s), head_dart(s3), tail_dart(s2), tail_dart(s4)};

    data_.original_edges[oe].segments = {s, s2};
    const auto added = static_cast<OriginalEdgeId>(data_.original_edges.size());
    data_.original_edges.push_back({next_original_label_++, p->c, p->d, {s3, s4}});
    data_.crossings.push_back({x, oe, added});
    adjacent_.insert(pair_key(p->c, p->d));
    return true;
  }

 private:
  struct Plan {
    VertexId b, c, d;
    Dart to_c;  // b -> c
    Dart to_d;  // a -> d
  };

  VertexId origin(Dart d) const {
    const auto& e = data_.edges[edge_of(d)];
    return is_head_end(d) ? e.head : e.tail;
  }
  VertexId target(Dart d) const { return origin(reverse(d)); }
  Dart next_cw(Dart d) const {
    const auto& rot = data_.rotation[origin(d)];
    const auto it = std::find(rot.begin(), rot.end(), d);
    return std::next(it) == rot.end() ? rot.front() : *std::next(it);
  }
  Dart face_next(Dart d) const { return next_cw(reverse(d)); }
  bool original(VertexId v) const { return data_.vertices[v].kind == VertexKind::Original; }

  // Apex of the face left of d when that face is a triangle of originals.
  std::optional<VertexId> triangle_apex(Dart d) const {
    const auto d1 = face_next(d);
    const auto d2 = face_next(d1);
    if (face_next(d2) != d) return std::nullopt;
    const auto apex = target(d1);
    if (!original(apex) || !original(origin(d)) || !original(target(d))) return std::nullopt;
    return apex;
  }

  std::optional<Plan> plan(OriginalEdgeId oe) const {
    const auto& rec = data_.original_edges[oe];
    if (rec.segments.size() != 1) return std::nullopt;
    const auto s = rec.segments[0];
    const auto c = triangle_apex(tail_dart(s));
    const auto d = triangle_apex(head_dart(s));
    if (!c || !d || *c == *d || adjacent_.count(pair_key(*c, *d))) return std::nullopt;
    return Plan{data_.edges[s].head, *c, *d, face_next(tail_dart(s)), face_next(head_dart(s))};
  }

  EdgeId add_edge(VertexId tail, VertexId head) {
    const auto e = static_cast<EdgeId>(data_.edges.size());
    data_.edges.push_back({next_edge_label_++, tail, head});
    return e;
  }
  void replace(VertexId v, Dart old_dart, Dart new_dart) {
    auto& rot = data_.rotation[v];
    *std::find(rot.begin(), rot.end(), old_dart) = new_dart;
  }
  void insert_after(VertexId v, Dart anchor, Dart d) {
    auto& rot = data_.rotation[v];
    rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, d);
  }

  EmbeddingData& data_;
  std::unordered_set<std::uint64_t> adjacent_;
  std::int64_t next_vertex_label_ = 0;
  std::int64_t next_edge_label_ = 0;
  std::int64_t next_original_label_ = 0;
};

OnePlaneEmbedding inject(EmbeddingData data, double fraction, std::mt19937_64& rng) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error(Errc::PreconditionFailed, "crossing fraction must lie in [0, 1]");
  }
  KiteInjector injector(data);
  std::vector<OriginalEdgeId> candidates;
  for (OriginalEdgeId oe = 0; oe < data.original_edges.size(); ++oe) {
    if (injector.eligible(oe)) candidates.push_back(oe);
  }
  for (std::size_t i = candidates.size(); i > 1; --i) {
    std::swap(candidates[i - 1], candidates[rng() % i]);
  }
  const auto target = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(candidates.size())));
  std::size_t added = 0;
  for (std::size_t i = 0; i < candidates.size() && added < target; ++i) {
    if (injector.inject(candidates[i])) ++added;
  }
  return OnePlaneEmbedding::create(std::move(data));
}

// Builds a fixture from a straight-line drawing of G^x: rotations come from
// sorting neighbours by decreasing angle. Vertex labels are index + 1.
struct Drawing {
  struct Point {
    double x, y;
    VertexKind kind = VertexKind::Original;
  };
  std::vector<Point> points;
  std::vector<std::pair<VertexId, VertexId>> segments;  // 1-based

  VertexId add(double x, double y, VertexKind kind = VertexKind::Original) {
    points.push_back({x, y, kind});
    return static_cast<VertexId>(points.size());
  }
  void join(VertexId a, VertexId b) { segments.emplace_back(a, b); }

  EmbeddingData data() const {
    EmbeddingData out;
    const auto n = points.size();
    for (std::size_t v = 0; v < n; ++v) out.vertices.push_back({static_cast<std::int64_t>(v + 1), points[v].kind});
    std::vector<std::vector<std::pair<double, Dart>>> around(n);
    for (EdgeId e = 0; e < segments.size(); ++e) {
      const auto a = segments[e].first - 1;
      const auto b = segments[e].second - 1;
      out.edges.push_back({e, a, b});
      around[a].emplace_back(std::atan2(points[b].y - points[a].y, points[b].x - points[a].x), tail_dart(e));
      around[b].emplace_back(std::atan2(points[a].y - points[b].y, points[a].x - points[b].x), head_dart(e));
    }
    out.rotation.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(around[v].begin(), around[v].end(), [](const auto& p, const auto& q) { return p.first > q.first; });
      for (const auto& [angle, d] : around[v]) out.rotation[v].push_back(d);
    }
    const auto far = [&](Dart d) {
      const auto& e = out.edges[edge_of(d)];
      return is_head_end(d) ? e.tail : e.head;
    };
    for (EdgeId e = 0; e < out.edges.size(); ++e) {
      const auto& s = out.edges[e];
      if (points[s.tail].kind == VertexKind::Original && points[s.head].kind == VertexKind::Original) {
        out.original_edges.push_back({static_cast<std::int64_t>(out.original_edges.size()), s.tail, s.head, {e}});
      }
    }
    for (VertexId x = 0; x < n; ++x) {
      if (points[x].kind != VertexKind::Dummy) continue;
      const auto& rot = out.rotation[x];
      const auto first = static_cast<OriginalEdgeId>(out.original_edges.size());
      for (int i = 0; i < 2; ++i) {
        out.original_edges.push_back({static_cast<std::int64_t>(out.original_edges.size()), far(rot[i]),
                                      far(rot[i + 2]), {edge_of(rot[i]), edge_of(rot[i + 2])}});
      }
      out.crossings.push_back({x, first, first + 1});
    }
    return out;
  }
};

OriginalEdgeId original_edge_between(const EmbeddingData& data, VertexId u, VertexId v) {
  for (OriginalEdgeId oe = 0; oe < data.original_edges.size(); ++oe) {
    const auto& rec = data.original_edges[oe];
    if ((rec.u == u && rec.v == v) || (rec.u == v && rec.v == u)) return oe;
  }
  throw Error(Errc::InternalMismatch, "fixture edge missing");
}

OnePlaneEmbedding k4_cross() {
  Drawing d;
  const auto a = d.add(-1, 1), b = d.add(1, 1), c = d.add(1, -1), e = d.add(-1, -1);
  const auto x = d.add(0, 0, VertexKind::Dummy);
  d.join(a, b), d.join(b, c), d.join(c, e), d.join(e, a);
  d.join(a, x), d.join(x, c), d.join(b, x), d.join(x, e);
  return OnePlaneEmbedding::create(d.data());
}

OnePlaneEmbedding two_k4_shared_vertex() {
  Drawing d;
  const auto v = d.add(-1, 1), b = d.add(1, 1), c = d.add(1, -1), e = d.add(-1, -1);
  const auto x = d.add(0, 0, VertexKind::Dummy);
  d.join(v, b), d.join(b, c), d.join(c, e), d.join(e, v);
  d.join(v, x), d.join(x, c), d.join(b, x), d.join(x, e);
  const auto p = d.add(-3, 1), q = d.add(-3, 3), r = d.add(-1, 3);
  const auto y = d.add(-2, 2, VertexKind::Dummy);
  d.join(v, p), d.join(p, q), d.join(q, r), d.join(r, v);
  d.join(v, y), d.join(y, q), d.join(p, y), d.join(y, r);
  return OnePlaneEmbedding::create(d.data());
}

// K6 as an octahedron plus one crossing edge per antipodal pair.
OnePlaneEmbedding k6_oneplanar() {
  Drawing d;
  const auto top = d.add(0, 4), right = d.add(3.5, -2), left = d.add(-3.5, -2);
  const auto low = d.add(0, -1), east = d.add(0.87, 0.5), west = d.add(-0.87, 0.5);
  d.join(top, right), d.join(right, left), d.join(left, top);
  d.join(low, east), d.join(east, west), d.join(west, low);
  d.join(top, east), d.join(top, west), d.join(right, east), d.join(right, low);
  d.join(left, west), d.join(left, low);
  auto data = d.data();
  for (auto [u, v] : {std::pair{east, west}, std::pair{low, right}, std::pair{top, left}}) {
    if (!add_kite_crossing(data, original_edge_between(data, u - 1, v - 1))) {
      throw Error(Errc::InternalMismatch, "fixture crossing not insertable");
    }
  }
  return OnePlaneEmbedding::create(std::move(data));
}

// Diagonal-only 4x4 lattice: every cell's two diagonals cross and none of
// the cell sides exist, so no crossing has a kite. Two extra vertices cap the
// top and bottom rows.
OnePlaneEmbedding grid_no_kites() {
  constexpr int kSide = 4;
  Drawing d;
  VertexId lattice[kSide][kSide];
  for (int i = 0; i < kSide; ++i) {
    for (int j = 0; j < kSide; ++j) lattice[i][j] = d.add(j, -i);
  }
  const auto top = d.add(1.5, 2);
  const auto bottom = d.add(1.5, -(kSide - 1) - 2);
  for (int i = 0; i + 1 < kSide; ++i) {
    for (int j = 0; j + 1 < kSide; ++j) {
      const auto x = d.add(j + 0.5, -i - 0.5, VertexKind::Dummy);
      d.join(lattice[i][j], x), d.join(x, lattice[i + 1][j + 1]);
      d.join(lattice[i][j + 1], x), d.join(x, lattice[i + 1][j]);
    }
  }
  for (int j = 0; j < kSide; ++j) {
    d.join(top, lattice[0][j]);
    d.join(bottom, lattice[kSide - 1][j]);
  }
  return OnePlaneEmbedding::create(d.data());
}

// Crossing (u,v) x (w,x) with only the kite edges (u,w) and (u,x), which
// share the endpoint u; (v,w) and (v,x) are absent.
OnePlaneEmbedding arrow_two_kites() {
  Drawing d;
  const auto u = d.add(0, 2), w = d.add(-1, 1), x = d.add(1, 1);
  const auto a = d.add(-1, -1), b = d.add(1, -1), v = d.add(0, -2);
  const auto r = d.add(3, 0), l = d.add(-3, 0), t = d.add(0, 4);
  const auto c = d.add(0, 1, VertexKind::Dummy);
  d.join(u, w), d.join(u, x), d.join(w, c), d.join(c, x), d.join(u, c), d.join(c, v);
  d.join(w, a), d.join(a, v), d.join(v, b), d.join(b, x);
  d.join(r, u), d.join(r, x), d.join(r, b), d.join(r, v);
  d.join(l, u), d.join(l, w), d.join(l, a), d.join(l, v);
  d.join(t, r), d.join(t, l), d.join(t, u);
  return OnePlaneEmbedding::create(d.data());
}

constexpr std::uint64_t kInjectSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

OnePlaneEmbedding random_plane_triangulation(std::uint32_t n, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::TooSmall, "triangulation needs at least 3 vertices, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  return OnePlaneEmbedding::create(plane_data(triangulate(n, rng)));
}

OnePlaneEmbedding inject_kite_crossings(const OnePlaneEmbedding& emb, double fraction, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return inject(emb.data(), fraction, rng);
}

bool add_kite_crossing(EmbeddingData& data, OriginalEdgeId edge) {
  if (edge >= data.original_edges.size()) return false;
  KiteInjector injector(data);
  return injector.inject(edge);
}

OnePlaneEmbedding generate(const GenConfig& config) {
  if (config.n < 3) throw Error(Errc::TooSmall, "generator needs at least 3 vertices, got " + std::to_string(config.n));
  std::mt19937_64 rng(config.seed);
  auto rot = triangulate(config.n, rng);
  if (config.variant == Variant::Sparse) thin(rot, rng);
  std::mt19937_64 edge_rng(config.seed ^ kInjectSalt);
  return inject(plane_data(rot), config.crossing_fraction, edge_rng);
}

std::vector<GenConfig> corpus(std::size_t count, std::uint32_t nmin, std::uint32_t nmax, std::uint64_t seed) {
  if (nmin < 3 || nmax < nmin) throw Error(Errc::PreconditionFailed, "need 3 <= nmin <= nmax");
  constexpr double kFractions[] = {0.0, 0.2, 0.5};
  std::mt19937_64 rng(seed);
  std::vector<GenConfig> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig c;
    c.n = nmin + static_cast<std::uint32_t>(rng() % (nmax - nmin + 1));
    c.seed = rng();
    c.crossing_fraction = kFractions[i % 3];
    c.variant = (i / 3) % 2 == 0 ? Variant::TriangulationBased : Variant::Sparse;
    out.push_back(c);
  }
  return out;
}

OnePlaneEmbedding fixture(std::string_view name) {
  if (name == "k4-cross") return k4_cross();
  if (name == "k6-oneplanar") return k6_oneplanar();
  if (name == "two-k4-shared-vertex") return two_k4_shared_vertex();
  if (name == "grid-no-kites") return grid_no_kites();
  if (name == "arrow-two-kites") return arrow_two_kites();
  throw Error(Errc::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> fixture_names() {
  return {"arrow-two-kites", "grid-no-kites", "k4-cross", "k6-oneplanar", "two-k4-shared-vertex"};
}

}  // namespace oneconn
