#pragma once

// Vertex-space matrices (discriminant T, line transition P, companion Q) and
// the arc-space walk operator U = S(2 d* d - I).
//
// Every vertex of K_{n+1} has degree n, so the general-graph normalisations
// 1/sqrt(deg u deg v) collapse to 1/n throughout. An extension to other host
// graphs would have to reintroduce per-vertex degrees here.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sgqw/signed_graph.hpp"

namespace sgqw {

using Amplitude = std::complex<double>;

/// Complex amplitudes indexed by the ArcTable of an instance.
struct QuantumState {
  std::vector<Amplitude> amplitudes;

  std::size_t size() const noexcept { return amplitudes.size(); }
  double norm() const;
};

/// T_Gamma in canonical vertex order, with the (s, t) block split.
struct DiscriminantMatrix {
  Eigen::MatrixXd matrix;
  std::size_t s = 0;
  std::size_t t = 0;
};

DiscriminantMatrix build_T(const SignedCompleteGraph& g);

/// P_Gamma = A(L(Delta)) / (2(n-1)) on the edges of Delta, applied matrix-free.
/// Q_Gamma = (N N^T - 2I) / (2(n-1)) on vertices is kept dense.
class LineTransitionMatrix {
 public:
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const VertexPair> edges() const noexcept { return edges_; }
  double weight() const noexcept { return 1.0 / (2.0 * static_cast<double>(n_ - 1)); }

  /// out = P x. O(|E(Delta)|).
  void apply(std::span<const double> x, std::span<double> out) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  /// Dense P; throws TooLarge above `limit` rows.
  Eigen::MatrixXd dense(std::size_t limit = 4000) const;

  /// Edges of Delta sharing an endpoint with edge e (the L(Delta) neighbourhood).
  std::vector<std::size_t> neighbors(std::size_t e) const;

  const Eigen::MatrixXd& companion() const noexcept { return q_; }

 private:
  friend LineTransitionMatrix build_P(const SignedCompleteGraph& g);
  std::size_t n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<std::size_t>> incident_;  // vertex -> incident Delta edges
  Eigen::MatrixXd q_;
};

/// Throws EmptyComplement when every edge of K_{n+1} is marked. Also checks the
/// block formula for Q against (N N^T - 2I) / (2(n-1)) and throws std::logic_error
/// if they ever disagree.
LineTransitionMatrix build_P(const SignedCompleteGraph& g);

/// Q_Gamma from its block form in canonical order.
Eigen::MatrixXd build_Q_block(const SignedCompleteGraph& g);

/// U psi without forming U: per-vertex signed sums, then the swap.
QuantumState apply_U(const SignedCompleteGraph& g, const QuantumState& psi);
void apply_U(const SignedCompleteGraph& g, std::span<const Amplitude> in, std::span<Amplitude> out);

inline constexpr std::size_t kDenseOperatorLimit = 40;

/// Dense U from its entrywise formula; throws TooLarge for n > 40.
Eigen::MatrixXd build_U_dense(const SignedCompleteGraph& g);
/// d_sigma (vertices x arcs) and the arc swap S, dense; same size guard.
Eigen::MatrixXd build_d_sigma_dense(const SignedCompleteGraph& g);
Eigen::MatrixXd build_swap_dense(const SignedCompleteGraph& g);

}  // namespace sgqw
