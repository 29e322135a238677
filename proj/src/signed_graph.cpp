#include "sgqw/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "sgqw/error.hpp"

namespace sgqw {

ArcTable::ArcTable(std::size_t n) : n_(n) {
  if (n < 2) {
    throw Error(ErrorCode::TooSmall, "K_{n+1} needs n >= 2, got n = " + std::to_string(n));
  }
  arcs_.reserve(n * (n + 1));
  for (std::size_t o = 0; o <= n; ++o) {
    for (std::size_t t = 0; t <= n; ++t) {
      if (o != t) arcs_.push_back({o, t});
    }
  }
  inverse_.resize(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    inverse_[i] = index({arcs_[i].terminus, arcs_[i].origin});
  }
}

std::size_t ArcTable::index(Arc arc) const {
  if (arc.origin > n_ || arc.terminus > n_ || arc.origin == arc.terminus) {
    throw Error(ErrorCode::InvalidArc, "(" + std::to_string(arc.origin) + "," +
                                           std::to_string(arc.terminus) + ") is not an arc of K_" +
                                           std::to_string(n_ + 1));
  }
  const std::size_t t = arc.terminus < arc.origin ? arc.terminus : arc.terminus - 1;
  return arc.origin * n_ + t;
}

std::vector<std::size_t> ArcTable::incoming(std::size_t v) const {
  std::vector<std::size_t> out;
  out.reserve(n_);
  for (std::size_t o = 0; o <= n_; ++o) {
    if (o != v) out.push_back(index({o, v}));
  }
  return out;
}

ArcTable build_arc_table(std::size_t n) { return ArcTable(n); }

SignedCompleteGraph build_instance(std::size_t n, std::span<const VertexPair> marked_edges,
                                   SignOrientation orientation) {
  SignedCompleteGraph g(n, ArcTable(n));
  if (marked_edges.empty()) {
    throw Error(ErrorCode::EmptySubgraph, "at least one marked edge is required");
  }
  const std::size_t order = n + 1;
  std::vector<std::uint8_t> seen_pair(order * order, 0);
  for (const auto& e : marked_edges) {
    if (e.u > n || e.v > n) {
      throw Error(ErrorCode::InvalidVertex, "edge {" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + "} has a label outside 0.." +
                                                std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    }
    auto& slot = seen_pair[std::min(e.u, e.v) * order + std::max(e.u, e.v)];
    if (slot) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} listed twice");
    }
    slot = 1;
  }

  g.orientation_ = orientation;
  g.input_edges_.assign(marked_edges.begin(), marked_edges.end());

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.to_canonical_.assign(order, kUnset);
  auto place = [&](std::size_t label) {
    if (g.to_canonical_[label] == kUnset) {
      g.to_canonical_[label] = g.to_external_.size();
      g.to_external_.push_back(label);
    }
  };
  for (const auto& e : marked_edges) {
    place(e.u);
    place(e.v);
  }
  g.s_ = g.to_external_.size();
  for (std::size_t label = 0; label < order; ++label) place(label);

  g.marked_matrix_.assign(order * order, 0);
  g.gamma_degree_.assign(order, 0);
  g.arc_sign_.assign(g.arcs_.size(), 1.0);
  for (const auto& e : marked_edges) {
    const std::size_t a = g.to_canonical_[e.u];
    const std::size_t b = g.to_canonical_[e.v];
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    g.marked_.push_back({lo, hi});
    g.marked_matrix_[lo * order + hi] = 1;
    g.marked_matrix_[hi * order + lo] = 1;
    ++g.gamma_degree_[lo];
    ++g.gamma_degree_[hi];
    const Arc negative = orientation == SignOrientation::Forward ? Arc{lo, hi} : Arc{hi, lo};
    const std::size_t idx = g.arcs_.index(negative);
    g.arc_sign_[idx] = -1.0;
    g.marked_arcs_.push_back(idx);
    g.marked_arcs_.push_back(g.arcs_.inverse(idx));
  }
  std::sort(g.marked_arcs_.begin(), g.marked_arcs_.end());
  return g;
}

bool SignedCompleteGraph::is_marked(std::size_t u, std::size_t v) const {
  if (u > n_ || v > n_) return false;
  return marked_matrix_[u * (n_ + 1) + v] != 0;
}

std::string SignedCompleteGraph::describe() const {
  std::ostringstream os;
  os << "n=" << n_ << " edges=[";
  for (std::size_t i = 0; i < input_edges_.size(); ++i) {
    if (i) os << ',';
    os << '[' << input_edges_[i].u << ',' << input_edges_[i].v << ']';
  }
  os << ']';
  if (orientation_ == SignOrientation::Reverse) os << " orientation=reverse";
  return os.str();
}

int sigma(const SignedCompleteGraph& g, Arc arc) {
  return g.arc_signs()[g.arcs().index(arc)] < 0.0 ? -1 : 1;
}

int tau(const SignedCompleteGraph& g, VertexPair edge) {
  if (edge.u > g.n() || edge.v > g.n() || edge.u == edge.v) {
    throw Error(ErrorCode::InvalidEdge, "{" + std::to_string(edge.u) + "," +
                                            std::to_string(edge.v) + "} is not an edge of K_" +
                                            std::to_string(g.order()));
  }
  return sigma(g, {edge.u, edge.v}) * sigma(g, {edge.v, edge.u});
}

ComplementGraph build_complement(const SignedCompleteGraph& g) {
  ComplementGraph delta;
  const std::size_t order = g.order();
  delta.order_ = order;
  delta.degrees_.assign(order, 0);
  delta.edge_index_.assign(order * order, -1);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = u + 1; v < order; ++v) {
      if (g.is_marked(u, v)) continue;
      const auto idx = static_cast<std::ptrdiff_t>(delta.edges_.size());
      delta.edges_.push_back({u, v});
      delta.edge_index_[u * order + v] = idx;
      delta.edge_index_[v * order + u] = idx;
      ++delta.degrees_[u];
      ++delta.degrees_[v];
    }
  }
  return delta;
}

std::ptrdiff_t ComplementGraph::edge_index(std::size_t u, std::size_t v) const {
  if (u >= order_ || v >= order_) return -1;
  return edge_index_[u * order_ + v];
}

std::vector<std::vector<int>> ComplementGraph::incidence() const {
  std::vector<std::vector<int>> n(order_, std::vector<int>(edges_.size(), 0));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    n[edges_[e].u][e] = 1;
    n[edges_[e].v][e] = 1;
  }
  return n;
}

std::vector<std::vector<int>> ComplementGraph::adjacency() const {
  std::vector<std::vector<int>> a(order_, std::vector<int>(order_, 0));
  for (const auto& e : edges_) {
    a[e.u][e.v] = 1;
    a[e.v][e.u] = 1;
  }
  return a;
}

bool is_spanning_complete_bipartite(const SignedCompleteGraph& g) {
  const std::size_t order = g.order();
  if (g.gamma_order() != order) return false;
  std::vector<int> side(order, -1);
  std::queue<std::size_t> frontier;
  side[0] = 0;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < order; ++v) {
      if (!g.is_marked(u, v)) continue;
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        ++reached;
        frontier.push(v);
      } else if (side[v] == side[u]) {
        return false;
      }
    }
  }
  if (reached != order) return false;
  const auto left = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  return g.num_marked_edges() == left * (order - left);
}

std::vector<VertexPair> path_edges(std::size_t k) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < k; ++i) edges.push_back({i, i + 1});
  return edges;
}

std::vector<VertexPair> matching_edges(std::size_t k) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return edges;
}

std::vector<VertexPair> star_edges(std::size_t k) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 1; i <= k; ++i) edges.push_back({0, i});
  return edges;
}

std::vector<VertexPair> cycle_edges(std::size_t k) {
  if (k < 3) {
    throw Error(ErrorCode::InvalidDescriptor, "a cycle needs at least 3 vertices");
  }
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return edges;
}

std::vector<VertexPair> complete_bipartite_edges(std::size_t a, std::size_t b) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return edges;
}

}  // namespace sgqw
