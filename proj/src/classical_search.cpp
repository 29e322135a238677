#include "sgqw/classical_search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include <Eigen/Cholesky>

#include "sgqw/error.hpp"
#include "sgqw/rng.hpp"
#include "sgqw/spectral.hpp"

namespace sgqw {

namespace {

constexpr std::size_t kPowerIterationCap = 20000;
constexpr double kPowerResidual = 1e-13;
constexpr double kPowerStall = 1e-10;
constexpr std::size_t kStallIterations = 10;

Eigen::VectorXd apply_shifted(const LineTransitionMatrix& p, const Eigen::VectorXd& x) {
  return x - p.apply(x);
}

/// j - (I - P) x with long double accumulation; in double the cancellation
/// error grows like eps * ||x|| and ||x|| is of order t_c.
Eigen::VectorXd accurate_residual(const LineTransitionMatrix& p, const Eigen::VectorXd& j,
                                  const Eigen::VectorXd& x) {
  const auto edges = p.edges();
  std::vector<long double> vertex_sum(p.n() + 1, 0.0L);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    vertex_sum[edges[e].u] += x(static_cast<Eigen::Index>(e));
    vertex_sum[edges[e].v] += x(static_cast<Eigen::Index>(e));
  }
  const long double w = 1.0L / (2.0L * static_cast<long double>(p.n() - 1));
  Eigen::VectorXd r(x.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto i = static_cast<Eigen::Index>(e);
    const long double xe = x(i);
    const long double pe = w * (vertex_sum[edges[e].u] + vertex_sum[edges[e].v] - 2.0L * xe);
    r(i) = static_cast<double>(static_cast<long double>(j(i)) - xe + pe);
  }
  return r;
}

struct SolveOutcome {
  Eigen::VectorXd x;
  std::size_t iterations = 0;
};

SolveOutcome solve_direct(const LineTransitionMatrix& p, const Eigen::VectorXd& j) {
  const auto m = static_cast<Eigen::Index>(p.size());
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m) - p.dense(p.size());
  const Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::SolverFailure, "I - P is not numerically positive definite");
  }
  SolveOutcome out{llt.solve(j), 1};
  out.x += llt.solve(accurate_residual(p, j, out.x));
  return out;
}

SolveOutcome solve_cg(const LineTransitionMatrix& p, const Eigen::VectorXd& j,
                      const Eigen::VectorXd& x0, const SolveOptions& options) {
  SolveOutcome out{x0, 0};
  const double target = options.tolerance * j.norm();
  // Each pass restarts from the accurate residual (iterative refinement).
  for (int restart = 0; restart < 20; ++restart) {
    Eigen::VectorXd r = accurate_residual(p, j, out.x);
    if (r.norm() <= target) return out;
    Eigen::VectorXd d = r;
    double rr = r.squaredNorm();
    while (out.iterations < options.max_iterations) {
      const Eigen::VectorXd ad = apply_shifted(p, d);
      const double alpha = rr / d.dot(ad);
      out.x += alpha * d;
      r -= alpha * ad;
      ++out.iterations;
      const double rr_next = r.squaredNorm();
      if (std::sqrt(rr_next) <= 0.1 * target) break;
      d = r + (rr_next / rr) * d;
      rr = rr_next;
    }
    if (out.iterations >= options.max_iterations) break;
  }
  return out;
}

}  // namespace

std::string_view to_string(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::Direct: return "direct";
    case SolverKind::ConjugateGradient: return "conjugate_gradient";
  }
  return "?";
}

LinePrincipalPair line_principal_pair(const LineTransitionMatrix& p, std::size_t dense_limit) {
  const auto m = static_cast<Eigen::Index>(p.size());
  LinePrincipalPair out;
  if (p.size() <= dense_limit) {
    const EigenDecomposition d = eigh(p.dense(p.size()));
    out.f = principal_vector(d);
    out.lambda = d.values(0);
    out.residual = (p.apply(out.f) - out.lambda * out.f).norm();
    return out;
  }

  const double shift = 1.0 / static_cast<double>(p.n() - 1);
  Eigen::VectorXd x = uniform_vector(m);
  // Stop at the target, or once rounding noise in P x stalls the residual.
  double best = std::numeric_limits<double>::infinity();
  std::size_t since_best = 0;
  for (out.iterations = 1; out.iterations <= kPowerIterationCap; ++out.iterations) {
    const Eigen::VectorXd px = p.apply(x);
    out.lambda = x.dot(px);
    out.residual = (px - out.lambda * x).norm();
    if (out.residual <= kPowerResidual) break;
    if (out.residual < 0.5 * best) {
      best = out.residual;
      since_best = 0;
    } else if (++since_best >= kStallIterations && out.residual <= kPowerStall) {
      break;
    }
    x = (px + shift * x).normalized();
  }
  if (out.residual > kPowerStall) {
    throw Error(ErrorCode::NoConvergence,
                "power iteration on P stalled at residual " + std::to_string(out.residual));
  }
  out.f = std::move(x);
  return out;
}

HittingTimeResult hitting_time(const SignedCompleteGraph& g, const SolveOptions& options) {
  return hitting_time(g, build_P(g), options);
}

HittingTimeResult hitting_time(const SignedCompleteGraph&, const LineTransitionMatrix& p,
                               const SolveOptions& options) {
  const auto m = static_cast<Eigen::Index>(p.size());
  const Eigen::VectorXd j = uniform_vector(m);
  const LinePrincipalPair pair = line_principal_pair(p);

  HittingTimeResult result;
  result.lambda_max_P = pair.lambda;
  const double fj = pair.f.dot(j);
  result.overlap_P = fj * fj;

  SolveOutcome solved;
  if (p.size() <= options.direct_limit) {
    result.solver = SolverKind::Direct;
    solved = solve_direct(p, j);
  } else {
    result.solver = SolverKind::ConjugateGradient;
    const Eigen::VectorXd x0 = (fj / (1.0 - pair.lambda)) * pair.f;
    solved = solve_cg(p, j, x0, options);
  }
  result.iterations = solved.iterations;
  result.solver_residual = accurate_residual(p, j, solved.x).norm() / j.norm();
  if (!(result.solver_residual <= options.tolerance)) {
    throw Error(ErrorCode::SolverFailure,
                std::string(to_string(result.solver)) + " solve reached relative residual " +
                    std::to_string(result.solver_residual) + " after " +
                    std::to_string(solved.iterations) + " iterations");
  }
  result.t_c = j.dot(solved.x);
  return result;
}

MonteCarloEstimate mc_hitting_time(const SignedCompleteGraph& g, std::size_t trials,
                                   std::uint64_t seed, std::uint64_t step_cap, unsigned threads) {
  if (trials == 0) throw Error(ErrorCode::ZeroTrials, "Monte-Carlo estimate needs trials >= 1");
  const ComplementGraph delta = build_complement(g);
  if (delta.num_edges() == 0) {
    throw Error(ErrorCode::EmptyComplement, "no unmarked edge to start from");
  }
  const std::size_t order = g.order();
  const auto edges = delta.edges();

  auto run_trial = [&](std::uint64_t trial) -> std::uint64_t {
    std::mt19937_64 gen = substream(seed, trial);
    std::uniform_int_distribution<std::size_t> start(0, edges.size() - 1);
    std::uniform_int_distribution<std::size_t> third(0, order - 3);
    std::bernoulli_distribution coin(0.5);
    VertexPair e = edges[start(gen)];
    for (std::uint64_t steps = 1; steps <= step_cap; ++steps) {
      const std::size_t keep = coin(gen) ? e.u : e.v;
      const std::size_t lo = std::min(e.u, e.v);
      const std::size_t hi = std::max(e.u, e.v);
      std::size_t w = third(gen);
      if (w >= lo) ++w;
      if (w >= hi) ++w;
      if (g.is_marked(keep, w)) return steps;
      e = {keep, w};
    }
    throw Error(ErrorCode::StepCapExceeded,
                "trial " + std::to_string(trial) + " exceeded " + std::to_string(step_cap) +
                    " steps");
  };

  std::vector<std::uint64_t> steps(trials);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
  if (threads <= 1) {
    for (std::size_t t = 0; t < trials; ++t) steps[t] = run_trial(t);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += threads) steps[t] = run_trial(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  MonteCarloEstimate est;
  est.trials = trials;
  est.seed = seed;
  double sum = 0.0;
  for (auto s : steps) sum += static_cast<double>(s);
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (auto s : steps) {
      const double d = static_cast<double>(s) - est.mean;
      ss += d * d;
    }
    const double variance = ss / static_cast<double>(trials - 1);
    est.standard_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return est;
}

bool classical_hypothesis(const SignedCompleteGraph& g) {
  return 64 * g.gamma_order() <= g.n() + 1;
}

std::vector<BoundEntry> classical_bounds(const SignedCompleteGraph& g) {
  return classical_bounds(g, hitting_time(g));
}

std::vector<BoundEntry> classical_bounds(const SignedCompleteGraph& g,
                                         const HittingTimeResult& result) {
  const auto n = static_cast<double>(g.n());
  const auto e = static_cast<double>(g.num_marked_edges());
  const bool holds = classical_hypothesis(g);
  const char* hypothesis = "64|V(Gamma)| <= n+1";
  const double resolvent = 1.0 / (1.0 - result.lambda_max_P);

  std::vector<BoundEntry> out;
  out.push_back(make_entry("tc_near_resolvent", std::abs(result.t_c - resolvent),
                           Relation::LessEqual, 4.0, hypothesis, holds));
  out.push_back(make_entry("tc_bracket.lower", resolvent, Relation::GreaterEqual,
                           (n + 1.0) * (n - 1.0) / (2.0 * e), hypothesis, holds));
  out.push_back(make_entry("tc_bracket.upper", resolvent, Relation::LessEqual,
                           (n + 1.0) * (n - 1.0) / e, hypothesis, holds));
  return out;
}

}  // namespace sgqw
