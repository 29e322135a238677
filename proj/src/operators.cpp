#include "sgqw/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sgqw/error.hpp"

namespace sgqw {

namespace {

void require_dense_size(const SignedCompleteGraph& g) {
  if (g.n() > kDenseOperatorLimit) {
    throw Error(ErrorCode::TooLarge, "dense arc-space operators are limited to n <= " +
                                         std::to_string(kDenseOperatorLimit) + ", got n = " +
                                         std::to_string(g.n()));
  }
}

}  // namespace

double QuantumState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

DiscriminantMatrix build_T(const SignedCompleteGraph& g) {
  const std::size_t order = g.order();
  const double inv_n = 1.0 / static_cast<double>(g.n());
  DiscriminantMatrix t{Eigen::MatrixXd::Zero(order, order), g.gamma_order(), g.rest_order()};
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      if (u == v) continue;
      t.matrix(u, v) = g.is_marked(u, v) ? -inv_n : inv_n;
    }
  }
  return t;
}

Eigen::MatrixXd build_Q_block(const SignedCompleteGraph& g) {
  const std::size_t order = g.order();
  const std::size_t s = g.gamma_order();
  const auto n = static_cast<double>(g.n());
  Eigen::MatrixXd q(order, order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      // J + (n-3)I everywhere, minus A(Gamma) + D(Gamma) on the leading s x s block.
      double entry = 1.0 + (u == v ? n - 3.0 : 0.0);
      if (u < s && v < s) {
        if (u == v) {
          entry -= static_cast<double>(g.gamma_degree(u));
        } else if (g.is_marked(u, v)) {
          entry -= 1.0;
        }
      }
      q(u, v) = entry;
    }
  }
  return q / (2.0 * (n - 1.0));
}

LineTransitionMatrix build_P(const SignedCompleteGraph& g) {
  const ComplementGraph delta = build_complement(g);
  if (delta.num_edges() == 0) {
    throw Error(ErrorCode::EmptyComplement, "every edge of K_" + std::to_string(g.order()) +
                                                " is marked; the classical walk has no state");
  }
  LineTransitionMatrix p;
  p.n_ = g.n();
  p.edges_.assign(delta.edges().begin(), delta.edges().end());
  p.incident_.assign(g.order(), {});
  for (std::size_t e = 0; e < p.edges_.size(); ++e) {
    p.incident_[p.edges_[e].u].push_back(e);
    p.incident_[p.edges_[e].v].push_back(e);
  }

  // N N^T = A(Delta) + D(Delta), assembled without materialising N.
  const std::size_t order = g.order();
  Eigen::MatrixXd nnt = Eigen::MatrixXd::Zero(order, order);
  for (const auto& e : p.edges_) {
    nnt(e.u, e.v) += 1.0;
    nnt(e.v, e.u) += 1.0;
    nnt(e.u, e.u) += 1.0;
    nnt(e.v, e.v) += 1.0;
  }
  const Eigen::MatrixXd from_incidence =
      (nnt - 2.0 * Eigen::MatrixXd::Identity(order, order)) / (2.0 * (g.n() - 1.0));
  p.q_ = build_Q_block(g);
  if ((p.q_ - from_incidence).cwiseAbs().maxCoeff() != 0.0) {
    throw std::logic_error("Q block form disagrees with (N N^T - 2I)/(2(n-1))");
  }
  return p;
}

void LineTransitionMatrix::apply(std::span<const double> x, std::span<double> out) const {
  if (x.size() != edges_.size() || out.size() != edges_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match |E(Delta)|");
  }
  std::vector<double> vertex_sum(incident_.size(), 0.0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    vertex_sum[edges_[e].u] += x[e];
    vertex_sum[edges_[e].v] += x[e];
  }
  const double w = weight();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out[e] = w * (vertex_sum[edges_[e].u] + vertex_sum[edges_[e].v] - 2.0 * x[e]);
  }
}

Eigen::VectorXd LineTransitionMatrix::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(x.size());
  apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
        std::span<double>(out.data(), static_cast<std::size_t>(out.size())));
  return out;
}

Eigen::MatrixXd LineTransitionMatrix::dense(std::size_t limit) const {
  if (edges_.size() > limit) {
    throw Error(ErrorCode::TooLarge, "dense P requested for |E(Delta)| = " +
                                         std::to_string(edges_.size()) + " > " +
                                         std::to_string(limit));
  }
  const auto m = static_cast<Eigen::Index>(edges_.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
  const double w = weight();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (std::size_t f : neighbors(e)) p(e, f) = w;
  }
  return p;
}

std::vector<std::size_t> LineTransitionMatrix::neighbors(std::size_t e) const {
  std::vector<std::size_t> out;
  for (std::size_t endpoint : {edges_.at(e).u, edges_.at(e).v}) {
    for (std::size_t f : incident_[endpoint]) {
      if (f != e) out.push_back(f);
    }
  }
  return out;
}

void apply_U(const SignedCompleteGraph& g, std::span<const Amplitude> in,
             std::span<Amplitude> out) {
  const ArcTable& arcs = g.arcs();
  if (in.size() != arcs.size() || out.size() != arcs.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state has " + std::to_string(in.size()) + " amplitudes, expected " +
                    std::to_string(arcs.size()));
  }
  const auto signs = g.arc_signs();
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.n()));

  std::vector<Amplitude> vertex(g.order(), Amplitude{});
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    vertex[arcs[a].terminus] += signs[a] * in[a];
  }
  for (auto& m : vertex) m *= scale;

  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::size_t inv = arcs.inverse(a);
    out[a] = 2.0 * scale * signs[inv] * vertex[arcs[a].origin] - in[inv];
  }
}

QuantumState apply_U(const SignedCompleteGraph& g, const QuantumState& psi) {
  QuantumState out{std::vector<Amplitude>(psi.size())};
  apply_U(g, psi.amplitudes, out.amplitudes);
  return out;
}

Eigen::MatrixXd build_U_dense(const SignedCompleteGraph& g) {
  require_dense_size(g);
  const ArcTable& arcs = g.arcs();
  const auto signs = g.arc_signs();
  const auto m = static_cast<Eigen::Index>(arcs.size());
  const double n = static_cast<double>(g.n());
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::size_t inv = arcs.inverse(a);
    for (std::size_t b = 0; b < arcs.size(); ++b) {
      if (arcs[b].terminus != arcs[a].origin) continue;
      u(a, b) = 2.0 * signs[inv] * signs[b] / n - (inv == b ? 1.0 : 0.0);
    }
  }
  return u;
}

Eigen::MatrixXd build_d_sigma_dense(const SignedCompleteGraph& g) {
  require_dense_size(g);
  const ArcTable& arcs = g.arcs();
  const auto signs = g.arc_signs();
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.n()));
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(g.order(), arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) d(arcs[a].terminus, a) = signs[a] * scale;
  return d;
}

Eigen::MatrixXd build_swap_dense(const SignedCompleteGraph& g) {
  require_dense_size(g);
  const ArcTable& arcs = g.arcs();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(arcs.size(), arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) s(a, arcs.inverse(a)) = 1.0;
  return s;
}

}  // namespace sgqw
