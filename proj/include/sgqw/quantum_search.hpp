#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgqw/ledger.hpp"
#include "sgqw/operators.hpp"
#include "sgqw/signed_graph.hpp"
#include "sgqw/spectral.hpp"

namespace sgqw {

/// Uniform superposition over all arcs, amplitude 1/sqrt(n(n+1)).
QuantumState initial_state(const SignedCompleteGraph& g);

/// Probability mass on the arcs of marked edges.
double finding_probability(const SignedCompleteGraph& g, const QuantumState& psi);

/// floor(pi / (2 theta_max)). Throws DegenerateSpectrum for theta_max = 0.
std::size_t quantum_time(const SpectralSummary& summary);

/// fp[t] is the finding probability after t applications of U to the uniform
/// state, t = 0..t_max. The t_f fields are empty when the spectrum is degenerate.
struct WalkSeries {
  std::size_t t_max = 0;
  std::vector<double> fp;
  std::optional<std::size_t> t_f;
  std::optional<double> fp_at_tf;
};

WalkSeries run_series(const SignedCompleteGraph& g, std::size_t t_max);

/// Hypotheses that gate the finite-n search estimates.
struct QuantumHypotheses {
  bool support_small = false;  // 2|V(Gamma)| < n + 3
  bool density = false;        // 4|E(Gamma)|/|E(G)| + 4|V(Gamma)|/|V(G)| <= 1
  bool support_sparse = false;  // 66|V(Gamma)| <= n + 3
};

QuantumHypotheses quantum_hypotheses(const SignedCompleteGraph& g);

/// Exact distances behind the search analysis, each paired with its closed-form
/// bound as a ledger entry:
///   beta_close            ||U^{t_f}(i beta_-) + beta_+||^2 <= 16|E|/(n(n+1))
///   beta_close.remark     same quantity <= 4(1 - lambda_max)
///   beta_minus_close      ||i beta_- - j||^2 <= (12+8 sqrt2)|E|/((n+1)(n+3-2|V|))
///   beta_plus_mass        ||beta_+ restricted to marked arcs||^2 >= 1 - 2|E|/(n(n+1)) - 16 sqrt(|V|/(n+3-2|V|))
///   fp_lower              FP(t_f) >= 1 - 22 sqrt(|E|/((n+1)(n+3-2|V|))) - 32 sqrt(|V|/(n+3-2|V|))
struct AsymptoticDiagnostics {
  std::size_t t_f = 0;
  double lambda_max = 0.0;
  double theta_max = 0.0;
  double beta_distance = 0.0;        // (i)
  double initial_distance = 0.0;     // (ii)
  double beta_plus_marked_mass = 0.0;  // (iii)
  double fp_at_tf = 0.0;
  QuantumHypotheses hypotheses;
  std::vector<BoundEntry> entries;

  bool all_passed() const;
};

/// Throws DegenerateSpectrum.
AsymptoticDiagnostics asymptotic_diagnostics(const SignedCompleteGraph& g);
AsymptoticDiagnostics asymptotic_diagnostics(const SignedCompleteGraph& g,
                                             const SpectralSummary& summary);

}  // namespace sgqw
