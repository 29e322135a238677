#pragma once

// Host complete graph K_{n+1}, the marked subgraph, its arcs and sign functions.
//
// Vertices carry two labelings. External labels are whatever the caller used
// (integers 0..n); canonical indices place the vertices of the marked subgraph
// first (in order of first appearance) followed by the remaining vertices in
// ascending order. Everything below the construction boundary works in
// canonical indices so the block structure of the discriminant and line
// matrices is literal.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sgqw {

struct VertexPair {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

struct Arc {
  std::size_t origin = 0;
  std::size_t terminus = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// All n(n+1) arcs of K_{n+1}, ordered lexicographically by (origin, terminus).
class ArcTable {
 public:
  explicit ArcTable(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const Arc& operator[](std::size_t index) const { return arcs_[index]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// O(1) lookup; throws InvalidArc for loops or out-of-range endpoints.
  std::size_t index(Arc arc) const;
  std::size_t inverse(std::size_t index) const { return inverse_[index]; }

  /// Arcs whose terminus is v occupy these indices (one per other vertex).
  std::vector<std::size_t> incoming(std::size_t v) const;

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> inverse_;
};

ArcTable build_arc_table(std::size_t n);

/// Which arc of each marked edge gets sigma = -1. Forward puts it on the arc
/// whose origin comes first in canonical order.
enum class SignOrientation { Forward, Reverse };

class SignedCompleteGraph {
 public:
  std::size_t n() const noexcept { return n_; }
  std::size_t order() const noexcept { return n_ + 1; }
  std::size_t num_marked_edges() const noexcept { return marked_.size(); }
  /// |V(Gamma)|, the number of distinct endpoints of marked edges.
  std::size_t gamma_order() const noexcept { return s_; }
  std::size_t rest_order() const noexcept { return n_ + 1 - s_; }
  SignOrientation orientation() const noexcept { return orientation_; }

  /// Marked edges in canonical indices, each stored with u < v.
  std::span<const VertexPair> marked_edges() const noexcept { return marked_; }
  /// Marked edges exactly as supplied by the caller.
  std::span<const VertexPair> input_edges() const noexcept { return input_edges_; }

  /// canonical index -> external label
  std::span<const std::size_t> canonical_order() const noexcept { return to_external_; }
  std::size_t to_external(std::size_t canonical) const { return to_external_.at(canonical); }
  std::size_t to_canonical(std::size_t label) const { return to_canonical_.at(label); }

  bool is_marked(std::size_t u, std::size_t v) const;
  std::size_t gamma_degree(std::size_t v) const { return gamma_degree_.at(v); }

  const ArcTable& arcs() const noexcept { return arcs_; }
  /// sigma per arc index, as +1.0 / -1.0.
  std::span<const double> arc_signs() const noexcept { return arc_sign_; }
  /// Indices of the 2|E(Gamma)| arcs of marked edges, ascending.
  std::span<const std::size_t> marked_arcs() const noexcept { return marked_arcs_; }

  /// Compact human-readable description, e.g. "n=99 edges=[[0,1],[1,2]]".
  std::string describe() const;

 private:
  friend SignedCompleteGraph build_instance(std::size_t, std::span<const VertexPair>,
                                            SignOrientation);
  SignedCompleteGraph(std::size_t n, ArcTable arcs) : n_(n), arcs_(std::move(arcs)) {}

  std::size_t n_;
  std::size_t s_ = 0;
  SignOrientation orientation_ = SignOrientation::Forward;
  std::vector<VertexPair> input_edges_;
  std::vector<VertexPair> marked_;
  std::vector<std::size_t> to_external_;
  std::vector<std::size_t> to_canonical_;
  std::vector<std::uint8_t> marked_matrix_;
  std::vector<std::size_t> gamma_degree_;
  ArcTable arcs_;
  std::vector<double> arc_sign_;
  std::vector<std::size_t> marked_arcs_;
};

/// Edges use external labels in {0..n}.
SignedCompleteGraph build_instance(std::size_t n, std::span<const VertexPair> marked_edges,
                                   SignOrientation orientation = SignOrientation::Forward);

/// Canonical indices. Returns +1 or -1.
int sigma(const SignedCompleteGraph& g, Arc arc);
int tau(const SignedCompleteGraph& g, VertexPair edge);

/// Delta = K_{n+1} minus the marked edges, in canonical indices.
class ComplementGraph {
 public:
  std::size_t order() const noexcept { return order_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const VertexPair> edges() const noexcept { return edges_; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }
  /// Index of {u, v} in edges(), or -1 when the pair is not an edge of Delta.
  std::ptrdiff_t edge_index(std::size_t u, std::size_t v) const;

  /// N(Delta): rows are vertices, columns are edges. Dense; small graphs only.
  std::vector<std::vector<int>> incidence() const;
  std::vector<std::vector<int>> adjacency() const;

 private:
  friend ComplementGraph build_complement(const SignedCompleteGraph& g);
  std::size_t order_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::ptrdiff_t> edge_index_;
};

ComplementGraph build_complement(const SignedCompleteGraph& g);

/// True iff the marked subgraph spans all n+1 vertices and is complete bipartite.
bool is_spanning_complete_bipartite(const SignedCompleteGraph& g);

// Named subgraph generators, all on labels starting at 0.
std::vector<VertexPair> path_edges(std::size_t k);      // k edges, k+1 vertices
std::vector<VertexPair> matching_edges(std::size_t k);  // k disjoint edges
std::vector<VertexPair> star_edges(std::size_t k);      // centre 0, k leaves
std::vector<VertexPair> cycle_edges(std::size_t k);     // k >= 3 vertices
std::vector<VertexPair> complete_bipartite_edges(std::size_t a, std::size_t b);

}  // namespace sgqw
