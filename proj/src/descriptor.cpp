#include "sgqw/descriptor.hpp"

#include <string>

#include "sgqw/error.hpp"

namespace sgqw {

namespace {

std::size_t count_field(const nlohmann::json& d, const char* key) {
  if (!d.contains(key)) {
    throw Error(ErrorCode::InvalidDescriptor, std::string("missing field '") + key + "'");
  }
  const auto& value = d.at(key);
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw Error(ErrorCode::InvalidDescriptor,
                std::string("field '") + key + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

std::vector<VertexPair> edges_from_descriptor(const nlohmann::json& d) {
  if (!d.is_object() || !d.contains("kind") || !d.at("kind").is_string()) {
    throw Error(ErrorCode::InvalidDescriptor, "descriptor must be an object with a string 'kind'");
  }
  const auto kind = d.at("kind").get<std::string>();
  if (kind == "path") return path_edges(count_field(d, "k"));
  if (kind == "matching") return matching_edges(count_field(d, "k"));
  if (kind == "star") return star_edges(count_field(d, "k"));
  if (kind == "cycle") return cycle_edges(count_field(d, "k"));
  if (kind == "complete_bipartite") {
    return complete_bipartite_edges(count_field(d, "a"), count_field(d, "b"));
  }
  if (kind == "edges") {
    if (!d.contains("edges") || !d.at("edges").is_array()) {
      throw Error(ErrorCode::InvalidDescriptor, "'edges' must be an array of [u, v] pairs");
    }
    std::vector<VertexPair> edges;
    for (const auto& pair : d.at("edges")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer() || pair[0].get<long long>() < 0 ||
          pair[1].get<long long>() < 0) {
        throw Error(ErrorCode::InvalidDescriptor, "bad edge entry " + pair.dump());
      }
      edges.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    return edges;
  }
  throw Error(ErrorCode::InvalidDescriptor, "unknown subgraph kind '" + kind + "'");
}

}  // namespace sgqw
