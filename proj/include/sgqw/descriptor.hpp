#pragma once

#include <vector>

#include "json.hpp"
#include "sgqw/signed_graph.hpp"

namespace sgqw {

/// Expands a subgraph descriptor into an explicit edge list:
///   {"kind": "path", "k": 3}
///   {"kind": "complete_bipartite", "a": 2, "b": 3}
///   {"kind": "edges", "edges": [[0, 1], [1, 2]]}
/// Throws InvalidDescriptor on unknown kinds, missing or negative fields.
std::vector<VertexPair> edges_from_descriptor(const nlohmann::json& descriptor);

}  // namespace sgqw
