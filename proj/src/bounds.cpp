#include "sgqw/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <thread>
#include <tuple>

#include <Eigen/Dense>

#include "sgqw/classical_search.hpp"
#include "sgqw/error.hpp"
#include "sgqw/operators.hpp"
#include "sgqw/quantum_search.hpp"
#include "sgqw/rng.hpp"
#include "sgqw/spectral.hpp"

namespace sgqw {

namespace {

constexpr double kBipartiteTolerance = 1e-10;

/// Largest distance by which any eigenvalue falls outside the Gershgorin discs.
double gershgorin_excess(const Eigen::MatrixXd& x, const Eigen::VectorXd& eigenvalues) {
  const Eigen::Index size = x.rows();
  Eigen::VectorXd radius(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    radius(i) = x.row(i).cwiseAbs().sum() - std::abs(x(i, i));
  }
  double worst = 0.0;
  for (double lambda : eigenvalues) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < size; ++i) {
      best = std::min(best, std::max(0.0, std::abs(lambda - x(i, i)) - radius(i)));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

/// Among candidate (lhs, rhs) pairs for `lhs >= rhs`, keep the one with the
/// smallest relative slack.
struct WorstCase {
  double lhs = 0.0;
  double rhs = 0.0;
  double score = std::numeric_limits<double>::infinity();

  void offer(double l, double r) {
    const double s = (l - r) / std::max(1.0, std::abs(r));
    if (s < score) {
      score = s;
      lhs = l;
      rhs = r;
    }
  }
};

/// m ||h||_2^2 versus ||h||_1^2.
void offer_l1(WorstCase& w, const Eigen::VectorXd& h) {
  const double l1 = h.cwiseAbs().sum();
  w.offer(static_cast<double>(h.size()) * h.squaredNorm(), l1 * l1);
}

/// n ||h||_1 versus ||h||_2^2 (entries in [0, n]).
void offer_l2(WorstCase& w, const Eigen::VectorXd& h, double n) {
  w.offer(n * h.cwiseAbs().sum(), h.squaredNorm());
}

/// Sorted eigenvalues with every value within `tol` of `drop` removed.
std::vector<double> without(const Eigen::VectorXd& values, double drop, double tol) {
  std::vector<double> out;
  for (double v : values) {
    if (std::abs(v - drop) > tol) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* kNonDegenerate = "lambda_max(T) < 1";
const char* kSupportSmall = "2|V(Gamma)| < n+3";
const char* kSparse = "66|V(Gamma)| <= n+3";
const char* kRatio = "4|E(Gamma)|/|E(G)| + 4|V(Gamma)|/|V(G)| <= 1 and 66|V(Gamma)| <= n+3";
const char* kComplement = "|E(Delta)| >= 1";

}  // namespace

std::size_t BoundLedger::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.failed(); }));
}

std::size_t BoundLedger::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const BoundEntry& e) { return e.skipped(); }));
}

const BoundEntry* BoundLedger::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

BoundLedger verify_all(const SignedCompleteGraph& g, const VerifyOptions& options) {
  BoundLedger ledger;
  auto& out = ledger.entries;
  auto add = [&out](std::string name, double lhs, Relation rel, double rhs,
                    std::string hypothesis = "none", bool holds = true,
                    std::optional<double> tolerance = std::nullopt) {
    out.push_back(make_entry(std::move(name), lhs, rel, rhs, std::move(hypothesis), holds,
                             tolerance));
  };
  auto skip = [&add](std::string name, const char* hypothesis) {
    add(std::move(name), 0.0, Relation::LessEqual, 0.0, hypothesis, false);
  };

  const auto n = static_cast<double>(g.n());
  const auto e = static_cast<double>(g.num_marked_edges());
  const auto s = static_cast<double>(g.gamma_order());
  const auto order = static_cast<Eigen::Index>(g.order());
  const double room = n + 3.0 - 2.0 * s;
  const bool support_small = room > 0.0;
  if (support_small) ledger.delta = 4.0 * std::sqrt(s / room);
  const QuantumHypotheses qh = quantum_hypotheses(g);
  const Eigen::VectorXd j = uniform_vector(order);

  // Vertex-space matrices Y = n(T - I) and Z = 2(n-1)(Q - I).
  const DiscriminantMatrix t = build_T(g);
  const Eigen::MatrixXd q = build_Q_block(g);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(order, order);
  const Eigen::MatrixXd y = n * (t.matrix - id);
  const Eigen::MatrixXd z = 2.0 * (n - 1.0) * (q - id);
  const EigenDecomposition t_eig = eigh(t.matrix);
  const EigenDecomposition q_eig = eigh(q);
  const Eigen::VectorXd y_vals = n * (t_eig.values.array() - 1.0).matrix();
  const Eigen::VectorXd z_vals = 2.0 * (n - 1.0) * (q_eig.values.array() - 1.0).matrix();
  const SpectralSummary summary = summarize_spectrum(t);
  const Eigen::VectorXd f_t = summary.f;
  const Eigen::VectorXd f_z = principal_vector(q_eig);

  for (const auto& [label, x, vals] :
       {std::tuple{"Y", &y, &y_vals}, std::tuple{"Z", &z, &z_vals}}) {
    const std::string tag = label;
    const double scale = std::max(1.0, x->cwiseAbs().maxCoeff());
    add("gershgorin." + tag, gershgorin_excess(*x, *vals), Relation::LessEqual, 0.0, "none",
        true, 1e-9 * scale);
    const double jxj = j.dot(*x * j);
    add("lambda1_bracket." + tag + ".upper", (*vals)(0), Relation::LessEqual, 0.0, "none", true,
        1e-9 * scale);
    add("lambda1_bracket." + tag + ".lower", (*vals)(0), Relation::GreaterEqual, jxj, "none",
        true, 1e-9 * scale);
    add("lambda1_bracket." + tag + ".identity", jxj, Relation::Equal, -4.0 * e / (n + 1.0),
        "none", true, 1e-9 * scale);
  }

  {
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s),
                                                static_cast<Eigen::Index>(s));
    for (const auto& edge : g.marked_edges()) {
      adj(static_cast<Eigen::Index>(edge.u), static_cast<Eigen::Index>(edge.v)) = 1.0;
      adj(static_cast<Eigen::Index>(edge.v), static_cast<Eigen::Index>(edge.u)) = 1.0;
    }
    add("adjacency_max", eigh(adj).values(0), Relation::LessEqual,
        std::sqrt(2.0 * e - s + 1.0));
  }

  add("lambda2_Y", y_vals(1), Relation::LessEqual, 2.0 * s - (n + 3.0));
  add("lambda2_Z", z_vals(1), Relation::LessEqual, -(n + 1.0));
  add("gap_T", t_eig.values(0) - t_eig.values(1), Relation::GreaterEqual,
      (n + 3.0) / n - 4.0 * e / (n * (n + 1.0)) - 2.0 * s / n);

  const bool spectral_flag = t_eig.values(0) >= 1.0 - kBipartiteTolerance;
  const bool combinatorial_flag = is_spanning_complete_bipartite(g);
  add("bipartite_iff", spectral_flag ? 1.0 : 0.0, Relation::Equal,
      combinatorial_flag ? 1.0 : 0.0);

  // Eigenvector overlaps.
  const double overlap_y = f_t.dot(j);
  const double overlap_z = f_z.dot(j);
  if (support_small) {
    add("overlap_generic.Y", (f_t - j).squaredNorm(), Relation::LessEqual,
        8.0 * e / ((n + 1.0) * room), kSupportSmall, true);
  } else {
    skip("overlap_generic.Y", kSupportSmall);
  }
  const double jyj = j.dot(y * j);
  const double jzj = j.dot(z * j);
  add("overlap_generic.prop_Y", 1.0 - overlap_y * overlap_y, Relation::LessEqual,
      y_vals(1) < 0.0 ? jyj / y_vals(1) : 0.0, "lambda_2(Y) < 0", y_vals(1) < 0.0);
  add("overlap_generic.prop_Z", 1.0 - overlap_z * overlap_z, Relation::LessEqual,
      z_vals(1) < 0.0 ? jzj / z_vals(1) : 0.0, "lambda_2(Z) < 0", z_vals(1) < 0.0);
  add("overlap_generic.Z", (f_z - j).squaredNorm(), Relation::LessEqual,
      8.0 * e / ((n + 1.0) * (n + 1.0)));

  if (support_small) {
    add("lmax_upper_Y", y_vals(0), Relation::LessEqual,
        -(1.0 - 4.0 * std::sqrt(s / room)) * 4.0 * e / (n + 1.0), kSupportSmall, true);
  } else {
    skip("lmax_upper_Y", kSupportSmall);
  }
  add("lmax_upper_Z", z_vals(0), Relation::LessEqual,
      -(1.0 - 4.0 * std::sqrt(s / (n + 1.0))) * 4.0 * e / (n + 1.0));

  const double lambda_t = t_eig.values(0);
  add("cor_T.lower", lambda_t, Relation::GreaterEqual, 1.0 - 4.0 * e / (n * (n + 1.0)));
  if (support_small) {
    add("cor_T.upper", lambda_t, Relation::LessEqual,
        1.0 - (1.0 - 4.0 * std::sqrt(s / room)) * 4.0 * e / (n * (n + 1.0)), kSupportSmall, true);
    add("cor_T.overlap", (f_t - j).squaredNorm(), Relation::LessEqual,
        8.0 * e / ((n + 1.0) * room), kSupportSmall, true);
  } else {
    skip("cor_T.upper", kSupportSmall);
    skip("cor_T.overlap", kSupportSmall);
  }

  // Norm inequalities: the vectors they are applied to, plus seeded random vectors.
  {
    std::mt19937_64 gen = substream(options.seed, 0);
    std::uniform_int_distribution<int> dim(1, 100);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> bounded(0.0, n);

    WorstCase l1_applied;
    const ComplementGraph delta = build_complement(g);
    Eigen::VectorXd degrees(order);
    for (Eigen::Index v = 0; v < order; ++v) {
      degrees(v) = static_cast<double>(delta.degrees()[static_cast<std::size_t>(v)]);
    }
    offer_l1(l1_applied, degrees);
    add("norm_l1.applied", l1_applied.lhs, Relation::GreaterEqual, l1_applied.rhs);

    WorstCase l1_random;
    for (std::size_t i = 0; i < options.random_vectors; ++i) {
      Eigen::VectorXd h(dim(gen));
      for (auto& v : h) v = normal(gen);
      offer_l1(l1_random, h);
    }
    if (options.random_vectors > 0) {
      add("norm_l1.random", l1_random.lhs, Relation::GreaterEqual, l1_random.rhs);
    }

    // g counts, per vertex, the arcs of marked edges ending there with sign -1.
    WorstCase l2_applied;
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(order);
    const auto signs = g.arc_signs();
    for (std::size_t a : g.marked_arcs()) {
      if (signs[a] < 0.0) counts(static_cast<Eigen::Index>(g.arcs()[a].terminus)) += 1.0;
    }
    offer_l2(l2_applied, counts, n);
    add("norm_l2.applied", l2_applied.lhs, Relation::GreaterEqual, l2_applied.rhs);

    WorstCase l2_random;
    for (std::size_t i = 0; i < options.random_vectors; ++i) {
      Eigen::VectorXd h(dim(gen));
      for (auto& v : h) v = bounded(gen);
      offer_l2(l2_random, h, n);
    }
    if (options.random_vectors > 0) {
      add("norm_l2.random", l2_random.lhs, Relation::GreaterEqual, l2_random.rhs);
    }
  }

  // Line-graph transition matrix and the classical estimates.
  std::optional<LineTransitionMatrix> p;
  try {
    p = build_P(g);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::EmptyComplement) throw;
  }
  if (p) {
    const HittingTimeResult hit = hitting_time(g, *p);
    const double lambda_q = q_eig.values(0);
    const double drop = -1.0 / (n - 1.0);
    if (p->size() <= options.full_spectrum_limit) {
      const std::vector<double> from_p = without(eigh(p->dense(p->size())).values, drop, 1e-8);
      const std::vector<double> from_q = without(q_eig.values, drop, 1e-8);
      double mismatch = 0.0;
      if (from_p.size() != from_q.size()) {
        mismatch = std::abs(static_cast<double>(from_p.size()) -
                            static_cast<double>(from_q.size()));
      } else {
        for (std::size_t i = 0; i < from_p.size(); ++i) {
          mismatch = std::max(mismatch, std::abs(from_p[i] - from_q[i]));
        }
      }
      add("pq_spectra.multiset", mismatch, Relation::Equal, 0.0, "none", true, 1e-8);
    }
    add("pq_spectra.top", hit.lambda_max_P, Relation::Equal, lambda_q, "none", true, 1e-10);

    const double nm = (n + 1.0) * (n - 1.0);
    add("cor_P.lower", hit.lambda_max_P, Relation::GreaterEqual, 1.0 - 2.0 * e / nm);
    add("cor_P.upper", hit.lambda_max_P, Relation::LessEqual,
        1.0 - (1.0 - 4.0 * std::sqrt(s / (n + 1.0))) * 2.0 * e / nm);
    add("cor_P.overlap", hit.overlap_P, Relation::GreaterEqual,
        1.0 - 4.0 * e / ((n + 1.0) * (n + 1.0)));

    for (auto& entry : classical_bounds(g, hit)) out.push_back(std::move(entry));
  } else {
    for (const char* name : {"pq_spectra.top", "cor_P.lower", "cor_P.upper", "cor_P.overlap",
                             "tc_near_resolvent", "tc_bracket.lower", "tc_bracket.upper"}) {
      skip(name, kComplement);
    }
  }

  // Quantum side.
  if (!summary.degenerate) {
    const double gap = 1.0 - summary.lambda_max;
    const double ratio_rhs =
        support_small ? 16.0 * n / (n + 1.0) * std::sqrt(s / room) : 0.0;
    const bool ratio_holds = qh.density && qh.support_sparse;
    add("ratio", (1.0 - summary.overlap) / gap, Relation::LessEqual, ratio_rhs, kRatio,
        ratio_holds);

    const AsymptoticDiagnostics diag = asymptotic_diagnostics(g, summary);
    for (const auto& entry : diag.entries) out.push_back(entry);

    const double half_gap_inverse = 1.0 / (2.0 * gap);
    add("qtime_order.lower", half_gap_inverse, Relation::GreaterEqual, n * (n + 1.0) / (8.0 * e));
    if (qh.support_sparse) {
      const double shrink = 1.0 - 4.0 * std::sqrt(s / room);
      add("qtime_order.upper", half_gap_inverse, Relation::LessEqual,
          1.0 / (2.0 * shrink * 4.0 * e / (n * (n + 1.0))), kSparse, true);
      add("qtime_order.delta", 4.0 * std::sqrt(s / room), Relation::LessEqual, 0.5, kSparse,
          true);
    } else {
      skip("qtime_order.upper", kSparse);
      skip("qtime_order.delta", kSparse);
    }
    const bool in_range = gap > 0.0 && gap < 1.0;
    add("qtime_order.arccos",
        in_range ? std::abs(1.0 / std::sqrt(2.0 * gap) - 1.0 / std::acos(1.0 - gap)) : 0.0,
        Relation::LessEqual, 1.0, "0 < 1 - lambda_max(T) < 1", in_range);
  } else {
    for (const char* name : {"ratio", "beta_close", "beta_close.remark", "beta_minus_close",
                             "beta_plus_mass", "fp_lower", "qtime_order.lower",
                             "qtime_order.upper", "qtime_order.delta", "qtime_order.arccos"}) {
      skip(name, kNonDegenerate);
    }
  }
  return ledger;
}

nlohmann::json to_json(const BoundEntry& entry) {
  nlohmann::json j;
  j["name"] = entry.name;
  j["lhs"] = entry.lhs;
  j["rhs"] = entry.rhs;
  j["relation"] = std::string(to_string(entry.relation));
  j["hypothesis_description"] = entry.hypothesis;
  j["hypothesis_holds"] = entry.hypothesis_holds;
  j["passed"] = entry.passed ? nlohmann::json(*entry.passed) : nlohmann::json(nullptr);
  j["slack"] = entry.slack;
  return j;
}

nlohmann::json to_json(const BoundLedger& ledger) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : ledger.entries) arr.push_back(to_json(e));
  return arr;
}

std::string_view to_string(GammaFamily family) noexcept {
  switch (family) {
    case GammaFamily::Edge: return "edge";
    case GammaFamily::Matching: return "matching";
    case GammaFamily::Path: return "path";
    case GammaFamily::Star: return "star";
    case GammaFamily::Cycle: return "cycle";
    case GammaFamily::Random: return "random";
  }
  return "?";
}

GammaFamily parse_family(std::string_view name) {
  for (auto f : {GammaFamily::Edge, GammaFamily::Matching, GammaFamily::Path, GammaFamily::Star,
                 GammaFamily::Cycle, GammaFamily::Random}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidDescriptor, "unknown subgraph family '" + std::string(name) + "'");
}

namespace {

std::vector<VertexPair> draw_family(GammaFamily family, std::size_t cap, std::mt19937_64& gen) {
  auto pick = [&gen](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
  };
  switch (family) {
    case GammaFamily::Edge: return path_edges(1);
    case GammaFamily::Matching: return matching_edges(pick(1, std::max<std::size_t>(1, cap / 2)));
    case GammaFamily::Path: return path_edges(pick(1, std::max<std::size_t>(1, cap - 1)));
    case GammaFamily::Star: return star_edges(pick(1, std::max<std::size_t>(1, cap - 1)));
    case GammaFamily::Cycle:
      if (cap < 3) return path_edges(1);
      return cycle_edges(pick(3, cap));
    case GammaFamily::Random: {
      const std::size_t k = pick(2, std::max<std::size_t>(2, cap));
      std::vector<VertexPair> edges;
      std::bernoulli_distribution coin(0.5);
      for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = u + 1; v < k; ++v) {
          if (coin(gen)) edges.push_back({u, v});
        }
      }
      if (edges.empty()) edges.push_back({0, 1});
      return edges;
    }
  }
  return path_edges(1);
}

}  // namespace

SuiteReport verify_random_suite(const SuiteOptions& options) {
  if (options.count == 0) throw Error(ErrorCode::ZeroTrials, "suite needs count >= 1");
  if (options.families.empty()) {
    throw Error(ErrorCode::InvalidDescriptor, "suite needs at least one subgraph family");
  }
  if (options.n_min < 2 || options.n_max < options.n_min) {
    throw Error(ErrorCode::TooSmall, "suite needs 2 <= n_min <= n_max");
  }
  if (options.max_gamma_order < 2) {
    throw Error(ErrorCode::TooSmall, "max_gamma_order must be at least 2");
  }

  struct Outcome {
    std::size_t entries = 0, passed = 0, skipped = 0;
    std::vector<SuiteFailure> failures;
  };
  auto run_one = [&options](std::size_t index) {
    std::mt19937_64 gen = substream(options.seed, index);
    const GammaFamily family = options.families[std::uniform_int_distribution<std::size_t>(
        0, options.families.size() - 1)(gen)];
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(options.n_min, options.n_max)(gen);
    const std::size_t cap = std::min(options.max_gamma_order, n + 1);
    std::vector<VertexPair> edges = draw_family(family, cap, gen);

    // Scatter the pattern onto random external labels.
    std::vector<std::size_t> labels(n + 1);
    for (std::size_t v = 0; v <= n; ++v) labels[v] = v;
    std::shuffle(labels.begin(), labels.end(), gen);
    for (auto& edge : edges) edge = {labels[edge.u], labels[edge.v]};

    const SignedCompleteGraph g = build_instance(n, edges);
    VerifyOptions verify;
    verify.seed = gen();
    const BoundLedger ledger = verify_all(g, verify);

    Outcome o;
    for (const auto& entry : ledger.entries) {
      ++o.entries;
      if (entry.skipped()) {
        ++o.skipped;
      } else if (*entry.passed) {
        ++o.passed;
      } else {
        o.failures.push_back({index, n, edges, family, entry});
      }
    }
    return o;
  };

  std::vector<Outcome> outcomes(options.count);
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1U, options.threads), options.count));
  if (threads == 1) {
    for (std::size_t i = 0; i < options.count; ++i) outcomes[i] = run_one(i);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < options.count; i += threads) outcomes[i] = run_one(i);
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

  SuiteReport report;
  report.instances = options.count;
  for (auto& o : outcomes) {
    report.entries += o.entries;
    report.passed += o.passed;
    report.skipped += o.skipped;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["instances"] = report.instances;
  j["entries"] = report.entries;
  j["passed"] = report.passed;
  j["skipped"] = report.skipped;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : f.edges) edges.push_back({e.u, e.v});
    j["failures"].push_back({{"index", f.index},
                             {"n", f.n},
                             {"family", std::string(to_string(f.family))},
                             {"subgraph", {{"kind", "edges"}, {"edges", edges}}},
                             {"entry", to_json(f.entry)}});
  }
  return j;
}

}  // namespace sgqw
