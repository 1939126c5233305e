#include "oneconn/cycles.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace oneconn {
namespace {

std::vector<std::uint32_t> to_graph_indices(const OnePlaneEmbedding& emb,
                                            std::span<const VertexId> set) {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (VertexId v : set) {
    if (v >= emb.vertex_count() || !emb.is_original(v)) {
      throw Error(Errc::PreconditionFailed, "set member " + std::to_string(v) + " is not an original vertex");
    }
    out.push_back(emb.graph_index(v));
  }
  return out;
}

std::string describe(const OnePlaneEmbedding& emb, std::span<const VertexId> set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(emb.label(set[i]));
  }
  return s + "}";
}

struct MarkingContext {
  FlapPartition flaps;
  std::vector<bool> in_set;  // by G^x vertex
  std::vector<bool> marked;  // by face id
};

void check_members_touch_flaps(const OnePlaneEmbedding& emb, const SeparatingSet& set,
                           const FlapPartition& parts) {
  for (VertexId v : set.vertices) {
    std::vector<bool> seen(parts.count, false);
    for (auto w : emb.graph().neighbours(emb.graph_index(v))) {
      const auto f = parts.flap[emb.originals()[w]];
      if (f != kNoFlap) seen[f] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error(Errc::ClaimViolated, "set member " + std::to_string(emb.label(v)) +
                                           " lacks a neighbour in some flap of " +
                                           describe(emb, set.vertices));
    }
  }
}

MarkingContext prepare(const RadialPlanarisation& rp, const SeparatingSet& set) {
  const auto& emb = rp.base();
  if (!is_minimal_separating(emb, set.vertices)) {
    throw Error(Errc::NotMinimal, describe(emb, set.vertices) + " is not a minimal separating set");
  }
  MarkingContext ctx;
  ctx.flaps = flaps(emb, set.vertices);
  check_members_touch_flaps(emb, set, ctx.flaps);
  ctx.in_set.assign(emb.vertex_count(), false);
  for (VertexId v : set.vertices) ctx.in_set[v] = true;

  const auto& gx = emb.planarisation();
  const auto& faces = emb.faces();
  ctx.marked.assign(faces.size(), false);
  const auto orig_in_set = [&](VertexId x) { return emb.is_original(x) && ctx.in_set[x]; };
  for (VertexId v : set.vertices) {
    for (Dart d : gx.rotation(v)) {
      const VertexId u = gx.target(gx.prev_cw(d));
      const VertexId w = gx.target(d);
      bool mark = orig_in_set(u) || orig_in_set(w);
      if (!mark && emb.is_original(u) && emb.is_original(w)) {
        const auto fu = ctx.flaps.flap[u];
        const auto fw = ctx.flaps.flap[w];
        mark = fu != kNoFlap && fw != kNoFlap && fu != fw;
      }
      if (mark) ctx.marked[faces.face_of_dart[d]] = true;
    }
  }

  // Every marked face vertex has at least two radial edges into the set.
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (!ctx.marked[f]) continue;
    std::size_t to_set = 0;
    for (Dart d : faces.boundaries[f]) to_set += ctx.in_set[gx.origin(d)] ? 1 : 0;
    if (to_set < 2) {
      throw Error(Errc::ClaimViolated, "marked face " + std::to_string(f) + " has " +
                                           std::to_string(to_set) + " radial edge(s) into " +
                                           describe(emb, set.vertices));
    }
  }
  return ctx;
}

// Walks clockwise from d1 to d2 around v (G^x darts), picks the closest pair
// of edges into the two flaps and returns the marked face the case analysis
// points at.
Witness witness_between(const RadialPlanarisation& rp, const MarkingContext& ctx, VertexId v,
                        Dart d1, Dart d2) {
  const auto& emb = rp.base();
  const auto& gx = emb.planarisation();
  const auto rot = gx.rotation(v);
  const std::size_t deg = rot.size();
  const std::size_t p1 = gx.position(d1);
  const std::size_t span = (gx.position(d2) + deg - p1) % deg;
  const auto at = [&](std::size_t offset) { return rot[(p1 + offset) % deg]; };
  const auto flap_of = [&](Dart d) { return ctx.flaps.flap[emb.far_endpoint(d)]; };
  const auto crossed = [&](Dart d) { return emb.is_crossed(emb.original_edge_of(edge_of(d))); };

  const auto flap1 = flap_of(d1);
  const auto flap2 = flap_of(d2);
  if (flap1 == kNoFlap || flap2 == kNoFlap || flap1 == flap2 || span == 0) {
    throw Error(Errc::PreconditionFailed, "witness darts must reach two different flaps");
  }

  std::size_t last1 = 0;
  std::optional<std::size_t> second;
  for (std::size_t j = 1; j <= span; ++j) {
    const auto f = flap_of(at(j));
    if (f == flap1) {
      last1 = j;
    } else if (f == flap2) {
      second = j;
      break;
    }
  }
  if (!second) throw Error(Errc::WitnessNotFound, "no edge into the second flap in range");

  std::size_t angle = last1;  // angle between offsets `angle` and `angle + 1`
  if (*second == last1 + 1) {
    if (crossed(at(last1)) || crossed(at(*second))) {
      throw Error(Errc::WitnessNotFound, "consecutive edges into different flaps are crossed at vertex " +
                                             std::to_string(emb.label(v)));
    }
  } else if (crossed(at(last1 + 1))) {
    angle = last1 + 1;
  }
  const Dart closing = at(angle + 1);
  const FaceId face = emb.faces().face_of_dart[closing];
  if (!ctx.marked[face]) {
    throw Error(Errc::WitnessNotFound, "face at the chosen angle of vertex " +
                                           std::to_string(emb.label(v)) + " is not marked");
  }
  return {rp.face_vertex(face), tail_dart(rp.radial_edge_for(closing))};
}

Dart first_dart_towards(const OnePlaneEmbedding& emb, VertexId v, VertexId t) {
  for (Dart d : emb.planarisation().rotation(v)) {
    if (emb.far_endpoint(d) == t) return d;
  }
  throw Error(Errc::PreconditionFailed, "vertex " + std::to_string(emb.label(t)) +
                                            " is not a neighbour of " + std::to_string(emb.label(v)));
}

Dart first_dart_into_flap(const OnePlaneEmbedding& emb, const FlapPartition& parts, VertexId v,
                          std::uint32_t flap) {
  for (Dart d : emb.planarisation().rotation(v)) {
    if (parts.flap[emb.far_endpoint(d)] == flap) return d;
  }
  throw Error(Errc::ClaimViolated, "vertex " + std::to_string(emb.label(v)) +
                                       " has no neighbour in flap " + std::to_string(flap));
}

// Lowest-id radial edge between graph vertex g and face vertex f; returns the
// dart at g.
std::optional<Dart> radial_dart_between(const RadialPlanarisation& rp, VertexId g, VertexId f) {
  std::optional<Dart> best;
  for (Dart d : rp.lambda().rotation(g)) {
    if (rp.is_radial(edge_of(d)) && rp.lambda().target(d) == f && (!best || d < *best)) best = d;
  }
  return best;
}

}  // namespace

FlapPartition flaps(const OnePlaneEmbedding& emb, std::span<const VertexId> set) {
  const auto members = to_graph_indices(emb, set);
  std::vector<bool> removed(emb.graph().size(), false);
  for (auto g : members) removed[g] = true;
  FlapPartition parts;
  const auto labels = components_without(emb.graph(), removed, &parts.count);
  parts.flap.assign(emb.vertex_count(), kNoFlap);
  for (std::uint32_t g = 0; g < labels.size(); ++g) {
    if (labels[g] != kRemoved) parts.flap[emb.originals()[g]] = labels[g];
  }
  return parts;
}

bool is_minimal_separating(const OnePlaneEmbedding& emb, std::span<const VertexId> set) {
  auto members = to_graph_indices(emb, set);
  if (!separates(emb.graph(), members)) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<std::uint32_t> rest;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j != i) rest.push_back(members[j]);
    }
    if (separates(emb.graph(), rest)) return false;
  }
  return true;
}

bool psi1_holds(const RadialPlanarisation& rp, std::span<const VertexId> cycle_vertices) {
  const auto& lambda = rp.lambda();
  std::vector<std::uint8_t> state(lambda.vertex_count(), 0);  // 1 removed, 2 reached
  for (VertexId v : cycle_vertices) state[v] = 1;
  std::size_t remaining = 0;
  VertexId start = kNoVertex;
  for (VertexId v : rp.base().originals()) {
    if (state[v] != 0) continue;
    ++remaining;
    if (start == kNoVertex) start = v;
  }
  if (remaining < 2) return false;
  std::vector<VertexId> stack{start};
  state[start] = 2;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (rp.is_original(v)) ++reached;
    for (Dart d : lambda.rotation(v)) {
      const VertexId w = lambda.target(d);
      if (state[w] == 0) {
        state[w] = 2;
        stack.push_back(w);
      }
    }
  }
  return reached < remaining;
}

ConstraintCheck check_constraints(const RadialPlanarisation& rp, const ConstrainedCycle& cycle) {
  const auto& lambda = rp.lambda();
  const std::size_t len = cycle.darts.size();
  if (len < 2 || cycle.vertices.size() != len) {
    throw Error(Errc::NotACycle, "a cycle needs at least two darts and one vertex per dart");
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Dart d = cycle.darts[i];
    if (d >= lambda.dart_count() || cycle.vertices[i] >= lambda.vertex_count() ||
        lambda.origin(d) != cycle.vertices[i] || lambda.target(d) != cycle.vertices[(i + 1) % len]) {
      throw Error(Errc::NotACycle, "dart " + std::to_string(i) + " does not continue the walk");
    }
  }
  if (len == 2) {
    if (edge_of(cycle.darts[0]) == edge_of(cycle.darts[1])) {
      throw Error(Errc::NotACycle, "a 2-cycle needs two distinct parallel edges");
    }
  } else {
    auto sorted = cycle.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Errc::NotACycle, "cycle repeats a vertex");
    }
  }
  ConstraintCheck check;
  check.psi2 = std::all_of(cycle.darts.begin(), cycle.darts.end(),
                           [&](Dart d) { return rp.is_radial(edge_of(d)); });
  check.psi3 = std::none_of(cycle.vertices.begin(), cycle.vertices.end(),
                            [&](VertexId v) { return rp.kind(v) == LambdaVertexKind::Dummy; });
  check.psi1 = psi1_holds(rp, cycle.vertices);
  return check;
}

SeparatingSet extract_separating_set(const RadialPlanarisation& rp, const ConstrainedCycle& cycle) {
  const auto check = check_constraints(rp, cycle);
  if (!check.all()) {
    throw Error(Errc::ConstraintViolated, std::string("cycle fails") + (check.psi1 ? "" : " psi1") +
                                              (check.psi2 ? "" : " psi2") + (check.psi3 ? "" : " psi3"));
  }
  SeparatingSet set;
  for (VertexId v : cycle.vertices) {
    if (rp.is_original(v)) set.vertices.push_back(v);
  }
  std::sort(set.vertices.begin(), set.vertices.end());
  set.vertices.erase(std::unique(set.vertices.begin(), set.vertices.end()), set.vertices.end());
  return set;
}

SeparatingSet minimalize(const OnePlaneEmbedding& emb, const SeparatingSet& set) {
  auto current = set.vertices;
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  if (!separates(emb.graph(), to_graph_indices(emb, current))) {
    throw Error(Errc::NotSeparating, describe(emb, current) + " does not separate the graph");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.size();) {
      auto trial = current;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (separates(emb.graph(), to_graph_indices(emb, trial))) {
        current = std::move(trial);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return {current};
}

std::vector<VertexId> mark_face_vertices(const RadialPlanarisation& rp, const SeparatingSet& set) {
  const auto ctx = prepare(rp, set);
  std::vector<VertexId> out;
  for (FaceId f = 0; f < ctx.marked.size(); ++f) {
    if (ctx.marked[f]) out.push_back(rp.face_vertex(f));
  }
  return out;
}

Witness witness_face(const RadialPlanarisation& rp, const SeparatingSet& set, VertexId v,
                     VertexId t1, VertexId t2) {
  const auto ctx = prepare(rp, set);
  const auto& emb = rp.base();
  if (v >= emb.vertex_count() || !ctx.in_set[v]) {
    throw Error(Errc::PreconditionFailed, "witness vertex must belong to the separating set");
  }
  for (VertexId t : {t1, t2}) {
    if (t >= emb.vertex_count() || ctx.flaps.flap[t] == kNoFlap) {
      throw Error(Errc::PreconditionFailed, "witness targets must lie in flaps");
    }
  }
  if (ctx.flaps.flap[t1] == ctx.flaps.flap[t2]) {
    throw Error(Errc::PreconditionFailed, "witness targets lie in the same flap");
  }
  return witness_between(rp, ctx, v, first_dart_towards(emb, v, t1), first_dart_towards(emb, v, t2));
}

ConstrainedCycle construct_cycle_from_set(const RadialPlanarisation& rp, const SeparatingSet& set) {
  const auto& emb = rp.base();
  const auto& lambda = rp.lambda();
  if (!is_locally_maximal(emb).ok || !has_all_kite_faces(emb)) {
    throw Error(Errc::PreconditionFailed, "embedding must be locally maximal with all kite faces");
  }
  if (set.vertices.empty()) throw Error(Errc::PreconditionFailed, "empty separating set");
  if (!is_minimal_separating(emb, set.vertices)) {
    throw Error(Errc::PreconditionFailed, describe(emb, set.vertices) + " is not a minimal separating set");
  }
  const auto ctx = prepare(rp, set);

  std::vector<bool> on_path(lambda.vertex_count(), false);
  std::vector<VertexId> path{*std::min_element(set.vertices.begin(), set.vertices.end())};
  std::vector<Dart> path_darts;
  on_path[path[0]] = true;

  // Grow a maximal path alternating between set vertices and marked faces.
  for (;;) {
    const VertexId tip = path.back();
    std::optional<std::pair<VertexId, VertexId>> step;
    for (Dart d : lambda.rotation(tip)) {
      if (!rp.is_radial(edge_of(d))) continue;
      const VertexId f = lambda.target(d);
      if (on_path[f] || !ctx.marked[rp.face_of_vertex(f)]) continue;
      if (step && f >= step->first) continue;
      for (Dart e : lambda.rotation(f)) {
        const VertexId s = lambda.target(e);
        if (s == tip || on_path[s] || !ctx.in_set[s]) continue;
        if (!step || f < step->first || s < step->second) step = std::make_pair(f, s);
      }
    }
    if (!step) break;
    const auto [f, s] = *step;
    path_darts.push_back(*radial_dart_between(rp, tip, f));
    path_darts.push_back(reverse(*radial_dart_between(rp, s, f)));
    path.push_back(f);
    path.push_back(s);
    on_path[f] = on_path[s] = true;
  }

  const VertexId tip = path.back();
  Dart d1 = first_dart_into_flap(emb, ctx.flaps, tip, 0);
  Dart d2 = first_dart_into_flap(emb, ctx.flaps, tip, 1);
  if (path.size() > 1) {
    const Dart back = reverse(path_darts.back());
    if (!strictly_between_cw(lambda, d2, back, d1)) std::swap(d1, d2);
    if (!strictly_between_cw(lambda, d2, back, d1)) {
      throw Error(Errc::ClaimViolated, "path dart does not separate the flap darts at the path tip");
    }
  }
  const Witness witness = witness_between(rp, ctx, tip, d1, d2);

  ConstrainedCycle cycle;
  const auto close_from = [&](std::size_t i) {
    cycle.vertices.assign(path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
    cycle.darts.assign(path_darts.begin() + static_cast<std::ptrdiff_t>(i), path_darts.end());
  };
  const auto index_on_path = [&](VertexId v) {
    return static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
  };

  if (on_path[witness.face]) {
    close_from(index_on_path(witness.face));
    cycle.darts.push_back(witness.dart);
  } else {
    // Second radial edge of the witness face into the set.
    std::optional<Dart> second;
    for (Dart e : lambda.rotation(witness.face)) {
      if (edge_of(e) == edge_of(witness.dart) || !ctx.in_set[lambda.target(e)]) continue;
      if (!second || edge_of(e) < edge_of(*second)) second = e;
    }
    if (!second) throw Error(Errc::ClaimViolated, "witness face has a single radial edge into the set");
    const VertexId back_to = lambda.target(*second);
    if (!on_path[back_to]) {
      throw Error(Errc::ClaimViolated, "alternating path was not maximal");
    }
    if (back_to == tip) {
      cycle.vertices = {tip, witness.face};
      cycle.darts = {witness.dart, *second};
    } else {
      close_from(index_on_path(back_to));
      cycle.vertices.push_back(witness.face);
      cycle.darts.push_back(witness.dart);
      cycle.darts.push_back(*second);
    }
  }

  const auto check = check_constraints(rp, cycle);
  if (!check.all()) {
    throw Error(Errc::ClaimViolated, "constructed cycle violates a constraint for " +
                                         describe(emb, set.vertices));
  }
  for (VertexId v : cycle.vertices) {
    if (!rp.is_face(v) && !ctx.in_set[v]) {
      throw Error(Errc::ClaimViolated, "constructed cycle leaves the separating set");
    }
  }
  if (cycle.length() > 2 * set.size()) {
    throw Error(Errc::ClaimViolated, "constructed cycle is longer than twice the set");
  }
  return cycle;
}

}  // namespace oneconn
