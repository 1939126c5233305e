#pragma once

#include <string>

#include <json.hpp>

#include "oneconn/cycles.hpp"
#include "oneconn/embedding.hpp"
#include "oneconn/radial.hpp"

namespace oneconn {

// DOT output. Nodes are named v<label> and listed in index order, edges in
// id order.
//   original vertex  [shape=circle]
//   dummy vertex     [shape=point]
//   face vertex      [shape=square,label="f<face index>"]
//   radial edge      [style=dashed]
//   cycle overlay    vertices and edges of X get color=red,penwidth=2
std::string graph_to_dot(const OnePlaneEmbedding& emb);          // G, one edge per original edge
std::string planarisation_to_dot(const OnePlaneEmbedding& emb);  // G^x
std::string lambda_to_dot(const RadialPlanarisation& rp, const ConstrainedCycle* overlay = nullptr);

// {"vertices":[int],"edges":[{"id","u","v"}]}
nlohmann::ordered_json graph_to_json(const OnePlaneEmbedding& emb);
// Embedding format plus face vertices ("kind":"face") and an edge "kind" of
// "segment" or "radial".
nlohmann::ordered_json lambda_to_json(const RadialPlanarisation& rp);
// {"darts":[...],"vertices":[...]} using file-facing Lambda ids.
nlohmann::ordered_json cycle_to_json(const RadialPlanarisation& rp, const ConstrainedCycle& cycle);

}  // namespace oneconn
