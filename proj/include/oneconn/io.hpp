#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oneconn/embedding.hpp"

namespace oneconn {

// JSON embedding exchange format:
//   {"vertices":[{"id":int,"kind":"original"|"dummy"}],
//    "edges":[{"id":int,"tail":int,"head":int}],
//    "rotation":{"<vertex-id>":[dart-id,...]},      // clockwise
//    "original_edges":[{"id":int,"u":int,"v":int,"segments":[edge-id,...]}],
//    "crossings":[{"dummy":int,"edge_a":int,"edge_b":int}]}
// Dart ids are 2*edge-id at the tail and 2*edge-id+1 at the head.

// Schema-level decoding; throws Errc::Malformed or Errc::Dangling.
EmbeddingData embedding_data_from_json(const nlohmann::json& doc);

OnePlaneEmbedding parse_and_validate(std::string_view text);
OnePlaneEmbedding load_embedding(const std::filesystem::path& path);

nlohmann::ordered_json embedding_to_json(const OnePlaneEmbedding& emb);
std::string embedding_to_string(const OnePlaneEmbedding& emb);

}  // namespace oneconn
