#include "oneconn/search.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "oneconn/oracle.hpp"

namespace oneconn {
namespace {

constexpr std::uint32_t kFar = ~std::uint32_t{0};

// Radial graph without dummy vertices, parallel edges collapsed into one
// link that remembers its two lowest edge ids.
class RadialGraph {
 public:
  struct Link {
    VertexId to;
    EdgeId first;
    EdgeId second;  // second-lowest parallel edge, valid when multiplicity >= 2
    std::uint32_t multiplicity;
  };

  explicit RadialGraph(const RadialPlanarisation& rp) : rp_(rp), links_(rp.lambda().vertex_count()) {
    const auto& lambda = rp.lambda();
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> raw(lambda.vertex_count());
    for (EdgeId e = static_cast<EdgeId>(rp.base_edge_count()); e < lambda.edge_count(); ++e) {
      const auto& ends = lambda.edge(e);
      if (!rp.is_original(ends.tail)) continue;
      raw[ends.tail].emplace_back(ends.head, e);
      raw[ends.head].emplace_back(ends.tail, e);
    }
    for (VertexId v = 0; v < raw.size(); ++v) {
      std::sort(raw[v].begin(), raw[v].end());
      auto& list = links_[v];
      for (const auto& [to, e] : raw[v]) {
        if (!list.empty() && list.back().to == to) {
          if (list.back().multiplicity == 1) list.back().second = e;
          ++list.back().multiplicity;
        } else {
          list.push_back({to, e, e, 1});
        }
      }
    }
  }

  const std::vector<Link>& links(VertexId v) const { return links_[v]; }

  const Link* find(VertexId a, VertexId b) const {
    const auto& list = links_[a];
    const auto it = std::lower_bound(list.begin(), list.end(), b,
                                     [](const Link& l, VertexId x) { return l.to < x; });
    return it != list.end() && it->to == b ? &*it : nullptr;
  }
  bool adjacent(VertexId a, VertexId b) const { return find(a, b) != nullptr; }
  const Link& link(VertexId a, VertexId b) const { return *find(a, b); }

  // Dart of radial edge e that leaves a.
  Dart dart_from(VertexId a, EdgeId e) const {
    return rp_.lambda().edge(e).tail == a ? tail_dart(e) : head_dart(e);
  }

  ConstrainedCycle to_cycle(const std::vector<VertexId>& path) const {
    ConstrainedCycle cycle;
    cycle.vertices = path;
    if (path.size() == 2) {
      const auto& l = link(path[0], path[1]);
      cycle.darts = {dart_from(path[0], l.first), dart_from(path[1], l.second)};
      return cycle;
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto a = path[i];
      const auto b = path[(i + 1) % path.size()];
      cycle.darts.push_back(dart_from(a, link(a, b).first));
    }
    return cycle;
  }

 private:
  const RadialPlanarisation& rp_;
  std::vector<std::vector<Link>> links_;
};

// Enumerates canonical candidate cycles of one length in canonical order and
// hands each vertex sequence to `visit`; stops when visit returns true.
class CandidateEnumerator {
 public:
  using Visit = std::function<bool(const std::vector<VertexId>&)>;

  CandidateEnumerator(const RadialPlanarisation& rp, const RadialGraph& graph)
      : rp_(rp), graph_(graph), on_path_(rp.lambda().vertex_count(), false),
        dist_(rp.lambda().vertex_count(), kFar) {}

  bool run(std::uint32_t half_length, const Visit& visit) {
    if (half_length == 1) return run_pairs(visit);
    target_ = 2 * half_length;
    for (FaceId f = 0; f < rp_.face_count(); ++f) {
      start_ = rp_.face_vertex(f);
      if (graph_.links(start_).size() < 2) continue;
      distances(half_length);
      path_.assign(1, start_);
      on_path_[start_] = true;
      const bool stop = extend(visit);
      on_path_[start_] = false;
      if (stop) return true;
    }
    return false;
  }

 private:
  bool run_pairs(const Visit& visit) {
    std::vector<VertexId> pair(2);
    for (FaceId f = 0; f < rp_.face_count(); ++f) {
      pair[0] = rp_.face_vertex(f);
      for (const auto& l : graph_.links(pair[0])) {
        if (l.multiplicity < 2) continue;
        pair[1] = l.to;
        if (visit(pair)) return true;
      }
    }
    return false;
  }

  // BFS distances from start_ inside the region a canonical cycle may use.
  void distances(std::uint32_t radius) {
    for (auto v : touched_) dist_[v] = kFar;
    touched_.clear();
    std::queue<VertexId> queue;
    dist_[start_] = 0;
    touched_.push_back(start_);
    queue.push(start_);
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop();
      if (dist_[x] == radius) continue;
      for (const auto& l : graph_.links(x)) {
        if (!allowed(l.to) || dist_[l.to] != kFar) continue;
        dist_[l.to] = dist_[x] + 1;
        touched_.push_back(l.to);
        queue.push(l.to);
      }
    }
  }

  bool allowed(VertexId v) const { return !rp_.is_face(v) || v > start_; }

  bool extend(const Visit& visit) {
    const auto size = static_cast<std::uint32_t>(path_.size());
    const auto cur = path_.back();
    if (size == target_) {
      return graph_.adjacent(cur, start_) && path_[1] < path_.back() && visit(path_);
    }
    // After appending, target_ - size edges remain to close the cycle.
    const auto remaining = target_ - size;
    for (const auto& l : graph_.links(cur)) {
      const auto nb = l.to;
      if (on_path_[nb] || !allowed(nb) || dist_[nb] == kFar || dist_[nb] > remaining) continue;
      if (size + 1 == target_ && nb < path_[1]) continue;
      path_.push_back(nb);
      on_path_[nb] = true;
      const bool stop = extend(visit);
      on_path_[nb] = false;
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const RadialPlanarisation& rp_;
  const RadialGraph& graph_;
  std::vector<bool> on_path_;
  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> path_;
  VertexId start_ = 0;
  std::uint32_t target_ = 0;
};

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::CycleSearch: return "cycle-search";
    case Method::OracleFallback: return "oracle-fallback";
    case Method::Disconnected: return "disconnected";
  }
  return "unknown";
}

std::optional<ConstrainedCycle> shortest_constrained_cycle(const RadialPlanarisation& rp) {
  const RadialGraph graph(rp);
  CandidateEnumerator enumerator(rp, graph);
  std::optional<ConstrainedCycle> found;
  for (std::uint32_t k = 1; k <= kMaxHalfLength && !found; ++k) {
    enumerator.run(k, [&](const std::vector<VertexId>& path) {
      if (!psi1_holds(rp, path)) return false;
      found = graph.to_cycle(path);
      return true;
    });
  }
  return found;
}

std::vector<ConstrainedCycle> all_shortest_cycles(const RadialPlanarisation& rp, std::size_t limit) {
  std::vector<ConstrainedCycle> out;
  if (limit == 0) return out;
  const RadialGraph graph(rp);
  CandidateEnumerator enumerator(rp, graph);
  for (std::uint32_t k = 1; k <= kMaxHalfLength && out.empty(); ++k) {
    enumerator.run(k, [&](const std::vector<VertexId>& path) {
      if (psi1_holds(rp, path)) out.push_back(graph.to_cycle(path));
      return out.size() >= limit;
    });
  }
  return out;
}

ConnectivityResult vertex_connectivity(const OnePlaneEmbedding& emb, const ConnectivityOptions& options) {
  const auto& g = emb.graph();
  ConnectivityResult result;
  if (g.size() <= 1 || !is_connected(g)) {
    result.method = Method::Disconnected;
    if (g.size() > 1) result.separating_set = SeparatingSet{};
    return result;
  }

  if (options.force_oracle) {
    const auto oracle = connectivity_flow(emb);
    result.kappa = oracle.kappa;
    result.separating_set = oracle.set;
    result.method = Method::OracleFallback;
    return result;
  }

  const auto report = is_locally_maximal(emb);
  if (!report.ok) {
    const auto& miss = report.missing.front();
    throw Error(Errc::NotLocallyMaximal,
                "crossing at dummy " + std::to_string(emb.label(emb.crossings()[miss.crossing].dummy)) +
                    " lacks edge (" + std::to_string(emb.label(miss.u)) + "," +
                    std::to_string(emb.label(miss.v)) +
                    "); the cycle method needs a locally maximal embedding, since without kites a "
                    "minimum separating set need not lie on a short separating cycle (use --force-oracle)");
  }

  std::shared_ptr<const RadialPlanarisation> rp;
  if (options.complete_kites) {
    rp = std::make_shared<const RadialPlanarisation>(build_radial(complete_kites(emb)));
  } else {
    if (!has_all_kite_faces(emb)) {
      throw Error(Errc::NotLocallyMaximal, "kite faces missing; enable kite completion");
    }
    rp = std::make_shared<const RadialPlanarisation>(build_radial(emb));
  }
  result.radial = rp;

  if (auto cycle = shortest_constrained_cycle(*rp)) {
    result.separating_set = extract_separating_set(*rp, *cycle);
    result.kappa = static_cast<std::uint32_t>(cycle->length() / 2);
    if (result.separating_set->size() != result.kappa) {
      throw Error(Errc::InternalMismatch, "cycle of length " + std::to_string(cycle->length()) + " carries " +
                                              std::to_string(result.separating_set->size()) +
                                              " original vertices");
    }
    result.cycle = std::move(cycle);
    result.method = Method::CycleSearch;
  } else {
    // No constrained cycle of length <= 14 means no separating set at all.
    const auto oracle = connectivity_flow(emb);
    if (oracle.set) {
      throw Error(Errc::InternalMismatch, "no constrained cycle found, but a separating set of size " +
                                              std::to_string(oracle.kappa) + " exists");
    }
    result.kappa = oracle.kappa;
    result.method = Method::OracleFallback;
  }

  if (options.oracle_check && result.method == Method::CycleSearch) {
    const auto oracle = connectivity_flow(emb);
    if (oracle.kappa != result.kappa) {
      throw Error(Errc::InternalMismatch, "cycle search gives kappa " + std::to_string(result.kappa) +
                                              ", oracle gives " + std::to_string(oracle.kappa));
    }
  }
  return result;
}

}  // namespace oneconn
