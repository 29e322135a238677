#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "sgqw/operators.hpp"
#include "sgqw/signed_graph.hpp"

namespace sgqw {

/// Eigenvalues in non-increasing order; column i of `vectors` belongs to values(i).
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Dense symmetric eigensolver. Throws NotSymmetric when the input is not
/// symmetric to 1e-12 and NoConvergence when the solver fails or a residual
/// exceeds 1e-10 * max(1, ||M||_2).
EigenDecomposition eigh(const Eigen::MatrixXd& m);

/// Unit vector in the top eigenspace of `decomposition` with <f, j> >= 0.
/// Eigenvalues within `tie_tolerance` of the largest count as the top
/// eigenspace; when it has dimension > 1 the result is the normalised
/// projection of the all-ones vector onto it.
Eigen::VectorXd principal_vector(const EigenDecomposition& decomposition,
                                 double tie_tolerance = 1e-10);

/// Normalised all-ones vector of the given length.
Eigen::VectorXd uniform_vector(Eigen::Index size);

inline constexpr double kDegeneracyTolerance = 1e-12;

struct SpectralSummary {
  std::vector<double> eigenvalues;  // non-increasing
  Eigen::VectorXd f;                // principal eigenvector, canonical order
  double lambda_max = 0.0;
  double theta_max = 0.0;  // arccos(lambda_max)
  double gap = 0.0;        // lambda_1 - lambda_2
  double overlap = 0.0;    // <f, j>^2
  bool degenerate = false;  // lambda_max >= 1 - 1e-12
};

/// Full summary; never throws on degeneracy, it only sets the flag.
SpectralSummary summarize_spectrum(const DiscriminantMatrix& t);

/// As summarize_spectrum, but throws DegenerateSpectrum when lambda_max = 1,
/// which happens exactly when the marked subgraph is a spanning complete
/// bipartite graph.
SpectralSummary principal_pair(const DiscriminantMatrix& t);

/// Eigenvectors of U for e^{+i theta} and e^{-i theta}, lifted from f, and
/// their combinations beta_+ = (phi_+ + phi_-)/sqrt2, beta_- = (phi_+ - phi_-)/sqrt2.
struct LiftedPair {
  QuantumState phi_plus;
  QuantumState phi_minus;
  QuantumState beta_plus;
  QuantumState beta_minus;
};

LiftedPair lift_eigenvectors(const SignedCompleteGraph& g, const SpectralSummary& summary);

struct SpectralMatch {
  double lambda = 0.0;
  std::complex<double> target;   // e^{+-i arccos(lambda)}
  std::complex<double> nearest;  // closest eigenvalue of dense U
  double distance = 0.0;
  bool matched = false;
};

struct SpectralMappingReport {
  std::vector<SpectralMatch> matches;
  std::vector<double> excluded;  // eigenvalues of T at +-1, not lifted
  std::vector<std::complex<double>> walk_spectrum;
  double max_distance = 0.0;
  bool all_matched = true;
};

/// Checks that every e^{+-i arccos(lambda)}, lambda in Spec(T) with |lambda| < 1,
/// appears in the spectrum of the dense U. Throws TooLarge for n > 40.
SpectralMappingReport spectral_mapping_check(const SignedCompleteGraph& g,
                                             double tolerance = 1e-8);

}  // namespace sgqw
