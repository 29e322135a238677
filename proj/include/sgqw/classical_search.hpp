#pragma once

// Classical search on the line graph of K_{n+1}: the expected absorption time
// t_c = j^T (I - P)^{-1} j from the uniform start on unmarked edges, solved
// exactly, and a seeded Monte-Carlo walker as an independent check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sgqw/ledger.hpp"
#include "sgqw/operators.hpp"
#include "sgqw/signed_graph.hpp"

namespace sgqw {

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

enum class SolverKind { Direct, ConjugateGradient };

std::string_view to_string(SolverKind kind) noexcept;

struct SolveOptions {
  std::size_t direct_limit = 2000;  // |E(Delta)| at or below this: dense Cholesky
  double tolerance = 1e-10;         // relative residual target
  std::size_t max_iterations = 20000;
};

/// lambda_max(P) with its unit eigenvector, <f, j> >= 0.
struct LinePrincipalPair {
  double lambda = 0.0;
  Eigen::VectorXd f;
  double residual = 0.0;  // ||P f - lambda f||
  std::size_t iterations = 0;
};

/// Power iteration on the shifted operator P + I/(n-1), which is positive
/// semidefinite, started from j. Dense eigensolver when `dense_limit` allows.
LinePrincipalPair line_principal_pair(const LineTransitionMatrix& p,
                                      std::size_t dense_limit = 300);

struct HittingTimeResult {
  double t_c = 0.0;
  double lambda_max_P = 0.0;
  double overlap_P = 0.0;  // <f_P, j>^2
  double solver_residual = 0.0;  // ||j - (I - P) x|| / ||j||
  SolverKind solver = SolverKind::Direct;
  std::size_t iterations = 0;
  std::optional<MonteCarloEstimate> mc;
};

/// Throws EmptyComplement, SolverFailure.
HittingTimeResult hitting_time(const SignedCompleteGraph& g, const SolveOptions& options = {});
HittingTimeResult hitting_time(const SignedCompleteGraph& g, const LineTransitionMatrix& p,
                               const SolveOptions& options = {});

inline constexpr std::uint64_t kDefaultStepCap = 100'000'000;

/// Trial i draws from its own generator seeded by (seed, i), so the estimate is
/// identical for any thread count. Throws ZeroTrials, StepCapExceeded,
/// EmptyComplement.
MonteCarloEstimate mc_hitting_time(const SignedCompleteGraph& g, std::size_t trials,
                                   std::uint64_t seed, std::uint64_t step_cap = kDefaultStepCap,
                                   unsigned threads = 1);

/// Hypothesis shared by the classical estimates: 64|V(Gamma)| <= n+1.
bool classical_hypothesis(const SignedCompleteGraph& g);

/// tc_near_resolvent, tc_bracket.lower, tc_bracket.upper.
std::vector<BoundEntry> classical_bounds(const SignedCompleteGraph& g);
std::vector<BoundEntry> classical_bounds(const SignedCompleteGraph& g,
                                         const HittingTimeResult& result);

}  // namespace sgqw
