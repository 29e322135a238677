#include "sgqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <lapacke.h>

#include "sgqw/error.hpp"

namespace sgqw {

EigenDecomposition eigh(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "eigh needs a square matrix");
  }
  if (m.size() == 0) return {};
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12 * scale) {
    throw Error(ErrorCode::NotSymmetric,
                "max |M - M^T| = " + std::to_string(asymmetry));
  }

  // LAPACK divide and conquer, ascending order.
  const Eigen::Index size = m.rows();
  Eigen::MatrixXd vectors = m;
  Eigen::VectorXd values(size);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(size), vectors.data(),
                     static_cast<lapack_int>(size), values.data());
  if (info != 0) {
    throw Error(ErrorCode::NoConvergence,
                "dsyevd failed with info = " + std::to_string(info));
  }
  EigenDecomposition out{values.reverse(), vectors.rowwise().reverse()};

  const double spectral_norm = std::max(std::abs(out.values(0)), std::abs(out.values(size - 1)));
  const double residual_limit = 1e-10 * std::max(1.0, spectral_norm);
  const Eigen::MatrixXd residual =
      m * out.vectors - out.vectors * out.values.asDiagonal();
  for (Eigen::Index i = 0; i < size; ++i) {
    if (residual.col(i).norm() > residual_limit) {
      throw Error(ErrorCode::NoConvergence,
                  "eigenpair " + std::to_string(i) + " residual " +
                      std::to_string(residual.col(i).norm()));
    }
  }
  const double orthogonality =
      (out.vectors.transpose() * out.vectors - Eigen::MatrixXd::Identity(size, size))
          .cwiseAbs()
          .maxCoeff();
  if (orthogonality > 1e-10) {
    throw Error(ErrorCode::NoConvergence, "eigenvectors lost orthogonality");
  }
  return out;
}

Eigen::VectorXd uniform_vector(Eigen::Index size) {
  return Eigen::VectorXd::Constant(size, 1.0 / std::sqrt(static_cast<double>(size)));
}

Eigen::VectorXd principal_vector(const EigenDecomposition& d, double tie_tolerance) {
  const Eigen::Index size = d.values.size();
  const Eigen::VectorXd j = uniform_vector(size);
  Eigen::Index top = 1;
  while (top < size && d.values(top) >= d.values(0) - tie_tolerance) ++top;

  Eigen::VectorXd f = d.vectors.col(0);
  if (top > 1) {
    const auto basis = d.vectors.leftCols(top);
    const Eigen::VectorXd projection = basis * (basis.transpose() * j);
    if (projection.norm() > 1e-12) f = projection.normalized();
  }
  if (f.dot(j) < 0.0) f = -f;
  return f;
}

SpectralSummary summarize_spectrum(const DiscriminantMatrix& t) {
  const EigenDecomposition d = eigh(t.matrix);
  SpectralSummary s;
  s.eigenvalues.assign(d.values.data(), d.values.data() + d.values.size());
  s.f = principal_vector(d);
  s.lambda_max = d.values(0);
  s.theta_max = std::acos(std::clamp(s.lambda_max, -1.0, 1.0));
  s.gap = d.values.size() > 1 ? d.values(0) - d.values(1) : 0.0;
  const double fj = s.f.dot(uniform_vector(s.f.size()));
  s.overlap = fj * fj;
  s.degenerate = s.lambda_max >= 1.0 - kDegeneracyTolerance;
  return s;
}

SpectralSummary principal_pair(const DiscriminantMatrix& t) {
  SpectralSummary s = summarize_spectrum(t);
  if (s.degenerate) {
    throw Error(ErrorCode::DegenerateSpectrum,
                "lambda_max(T) = 1: the marked subgraph is a complete bipartite graph spanning "
                "all vertices, so theta_max = 0 and the searching time is undefined");
  }
  return s;
}

LiftedPair lift_eigenvectors(const SignedCompleteGraph& g, const SpectralSummary& summary) {
  const double sin_theta = std::abs(std::sin(summary.theta_max));
  if (summary.degenerate || sin_theta == 0.0) {
    throw Error(ErrorCode::DegenerateSpectrum, "cannot lift an eigenvector with theta = 0 or pi");
  }
  if (static_cast<std::size_t>(summary.f.size()) != g.order()) {
    throw Error(ErrorCode::DimensionMismatch, "principal vector does not match the instance");
  }
  const ArcTable& arcs = g.arcs();
  const auto signs = g.arc_signs();
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.n()));
  const double norm = 1.0 / (std::sqrt(2.0) * sin_theta);
  const Amplitude phase_plus = std::polar(1.0, summary.theta_max);
  const Amplitude phase_minus = std::conj(phase_plus);

  LiftedPair out;
  const std::size_t m = arcs.size();
  out.phi_plus.amplitudes.resize(m);
  out.phi_minus.amplitudes.resize(m);
  out.beta_plus.amplitudes.resize(m);
  out.beta_minus.amplitudes.resize(m);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < m; ++a) {
    const double d_star = signs[a] * summary.f(arcs[a].terminus) * scale;
    const double swapped = signs[arcs.inverse(a)] * summary.f(arcs[a].origin) * scale;
    const Amplitude plus = norm * (d_star - phase_plus * swapped);
    const Amplitude minus = norm * (d_star - phase_minus * swapped);
    out.phi_plus.amplitudes[a] = plus;
    out.phi_minus.amplitudes[a] = minus;
    out.beta_plus.amplitudes[a] = inv_sqrt2 * (plus + minus);
    out.beta_minus.amplitudes[a] = inv_sqrt2 * (plus - minus);
  }
  return out;
}

SpectralMappingReport spectral_mapping_check(const SignedCompleteGraph& g, double tolerance) {
  const Eigen::MatrixXd u = build_U_dense(g);
  const EigenDecomposition t = eigh(build_T(g).matrix);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(u, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "eigensolver failed on dense U");
  }
  SpectralMappingReport report;
  const auto& mu = solver.eigenvalues();
  report.walk_spectrum.assign(mu.data(), mu.data() + mu.size());

  for (Eigen::Index i = 0; i < t.values.size(); ++i) {
    const double lambda = t.values(i);
    if (std::abs(lambda) >= 1.0 - 1e-10) {
      report.excluded.push_back(lambda);
      continue;
    }
    const double theta = std::acos(lambda);
    for (double sign : {1.0, -1.0}) {
      SpectralMatch match;
      match.lambda = lambda;
      match.target = std::polar(1.0, sign * theta);
      match.distance = std::numeric_limits<double>::infinity();
      for (const auto& candidate : report.walk_spectrum) {
        const double dist = std::abs(candidate - match.target);
        if (dist < match.distance) {
          match.distance = dist;
          match.nearest = candidate;
        }
      }
      match.matched = match.distance <= tolerance;
      report.all_matched = report.all_matched && match.matched;
      report.max_distance = std::max(report.max_distance, match.distance);
      report.matches.push_back(match);
    }
  }
  return report;
}

}  // namespace sgqw
