#include "sgqw/quantum_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sgqw/error.hpp"

namespace sgqw {

namespace {

/// psi <- U^steps psi, ping-ponging between two buffers.
void evolve(const SignedCompleteGraph& g, std::vector<Amplitude>& psi, std::size_t steps) {
  std::vector<Amplitude> scratch(psi.size());
  for (std::size_t t = 0; t < steps; ++t) {
    apply_U(g, psi, scratch);
    psi.swap(scratch);
  }
}

double squared_distance(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return sum;
}

}  // namespace

QuantumState initial_state(const SignedCompleteGraph& g) {
  const std::size_t m = g.arcs().size();
  return {std::vector<Amplitude>(m, Amplitude(1.0 / std::sqrt(static_cast<double>(m)), 0.0))};
}

double finding_probability(const SignedCompleteGraph& g, const QuantumState& psi) {
  if (psi.size() != g.arcs().size()) {
    throw Error(ErrorCode::DimensionMismatch, "state does not match the arc table");
  }
  double mass = 0.0;
  for (std::size_t a : g.marked_arcs()) mass += std::norm(psi.amplitudes[a]);
  return mass;
}

std::size_t quantum_time(const SpectralSummary& summary) {
  if (summary.degenerate || !(summary.theta_max > 0.0)) {
    throw Error(ErrorCode::DegenerateSpectrum,
                "theta_max = 0 (spanning complete bipartite marked subgraph); t_f is undefined");
  }
  return static_cast<std::size_t>(std::floor(std::numbers::pi / (2.0 * summary.theta_max)));
}

WalkSeries run_series(const SignedCompleteGraph& g, std::size_t t_max) {
  WalkSeries series;
  series.t_max = t_max;
  const SpectralSummary summary = summarize_spectrum(build_T(g));
  if (!summary.degenerate) series.t_f = quantum_time(summary);

  const std::size_t horizon = std::max(t_max, series.t_f.value_or(0));
  QuantumState psi = initial_state(g);
  std::vector<Amplitude> scratch(psi.size());
  series.fp.reserve(t_max + 1);
  for (std::size_t t = 0;; ++t) {
    const double fp = finding_probability(g, psi);
    if (t <= t_max) series.fp.push_back(fp);
    if (series.t_f && t == *series.t_f) series.fp_at_tf = fp;
    if (t == horizon) break;
    apply_U(g, psi.amplitudes, scratch);
    psi.amplitudes.swap(scratch);
  }
  return series;
}

QuantumHypotheses quantum_hypotheses(const SignedCompleteGraph& g) {
  const auto n = static_cast<double>(g.n());
  const auto e = static_cast<double>(g.num_marked_edges());
  const auto s = static_cast<double>(g.gamma_order());
  QuantumHypotheses h;
  h.support_small = 2.0 * s < n + 3.0;
  h.density = 4.0 * e / (n * (n + 1.0) / 2.0) + 4.0 * s / (n + 1.0) <= 1.0;
  h.support_sparse = 66.0 * s <= n + 3.0;
  return h;
}

bool AsymptoticDiagnostics::all_passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const BoundEntry& e) { return e.failed(); });
}

AsymptoticDiagnostics asymptotic_diagnostics(const SignedCompleteGraph& g) {
  return asymptotic_diagnostics(g, principal_pair(build_T(g)));
}

AsymptoticDiagnostics asymptotic_diagnostics(const SignedCompleteGraph& g,
                                             const SpectralSummary& summary) {
  AsymptoticDiagnostics d;
  d.t_f = quantum_time(summary);
  d.lambda_max = summary.lambda_max;
  d.theta_max = summary.theta_max;
  d.hypotheses = quantum_hypotheses(g);

  const LiftedPair lifted = lift_eigenvectors(g, summary);
  const QuantumState uniform = initial_state(g);
  const Amplitude i_unit(0.0, 1.0);

  std::vector<Amplitude> start(lifted.beta_minus.amplitudes);
  for (auto& a : start) a *= i_unit;
  d.initial_distance = squared_distance(start, uniform.amplitudes);

  evolve(g, start, d.t_f);
  std::vector<Amplitude> target(lifted.beta_plus.amplitudes);
  for (auto& a : target) a = -a;
  d.beta_distance = squared_distance(start, target);

  d.beta_plus_marked_mass = finding_probability(g, lifted.beta_plus);

  std::vector<Amplitude> walk(uniform.amplitudes);
  evolve(g, walk, d.t_f);
  d.fp_at_tf = finding_probability(g, QuantumState{std::move(walk)});

  const auto n = static_cast<double>(g.n());
  const auto e = static_cast<double>(g.num_marked_edges());
  const auto s = static_cast<double>(g.gamma_order());
  const double room = n + 3.0 - 2.0 * s;
  const auto& h = d.hypotheses;
  const bool gated = h.density && h.support_sparse;
  const char* gated_text =
      "4|E(Gamma)|/|E(G)| + 4|V(Gamma)|/|V(G)| <= 1 and 66|V(Gamma)| <= n+3";

  d.entries.push_back(make_entry("beta_close", d.beta_distance, Relation::LessEqual,
                                 16.0 * e / (n * (n + 1.0)), "theta_max > 0", true));
  d.entries.push_back(make_entry("beta_close.remark", d.beta_distance, Relation::LessEqual,
                                 4.0 * (1.0 - summary.lambda_max), "theta_max > 0", true));
  d.entries.push_back(make_entry("beta_minus_close", d.initial_distance, Relation::LessEqual,
                                 (12.0 + 8.0 * std::numbers::sqrt2) * e / ((n + 1.0) * room),
                                 "2|V(Gamma)| < n+3", h.support_small));
  d.entries.push_back(make_entry(
      "beta_plus_mass", d.beta_plus_marked_mass, Relation::GreaterEqual,
      1.0 - 2.0 * e / (n * (n + 1.0)) - 16.0 * std::sqrt(s / room), gated_text, gated));
  d.entries.push_back(make_entry(
      "fp_lower", d.fp_at_tf, Relation::GreaterEqual,
      1.0 - 22.0 * std::sqrt(e / ((n + 1.0) * room)) - 32.0 * std::sqrt(s / room), gated_text,
      gated));
  return d;
}

}  // namespace sgqw
