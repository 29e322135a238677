#include "sgqw/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "sgqw/bounds.hpp"
#include "sgqw/classical_search.hpp"
#include "sgqw/descriptor.hpp"
#include "sgqw/error.hpp"
#include "sgqw/quantum_search.hpp"
#include "sgqw/spectral.hpp"

namespace sgqw {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_probability(double value) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  if (res.ec != std::errc()) throw Error(ErrorCode::Io, "cannot format value");
  std::string text(buf, res.ptr);

  int significant = 0;
  bool leading = true;
  for (char c : text) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++significant;
  }
  if (significant < 10) {
    if (text.find('.') == std::string::npos) text += '.';
    // Leading zeros after the point do not count, so pad relative to the first
    // nonzero digit (or to ten decimals for an exact zero).
    text.append(static_cast<std::size_t>(10 - significant), '0');
  }
  return text;
}

void write_series_csv(const fs::path& path, std::span<const double> fp) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  os << "t,probability\n";
  for (std::size_t t = 0; t < fp.size(); ++t) os << t << ',' << format_probability(fp[t]) << '\n';
  if (!os) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::vector<double> read_series_csv(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line) || line != "t,probability") {
    throw Error(ErrorCode::Io, path.string() + ": missing 't,probability' header");
  }
  std::vector<double> fp;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::Io, "malformed row '" + line + "'");
    std::size_t t = 0;
    double value = 0.0;
    const char* first = line.data();
    const char* mid = first + comma;
    const char* last = first + line.size();
    if (std::from_chars(first, mid, t).ec != std::errc() || t != fp.size() ||
        std::from_chars(mid + 1, last, value).ec != std::errc()) {
      throw Error(ErrorCode::Io, "malformed row '" + line + "'");
    }
    fp.push_back(value);
  }
  return fp;
}

json load_descriptor(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  try {
    if (start != std::string::npos && text[start] == '{') return json::parse(text);
    std::ifstream is(text);
    if (!is) {
      throw Error(ErrorCode::InvalidDescriptor,
                  "'" + text + "' is neither inline JSON nor a readable file");
    }
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidDescriptor, std::string("descriptor is not valid JSON: ") +
                                                  e.what());
  }
}

namespace {

struct ExperimentConfig {
  std::string command;
  std::size_t n = 0;
  json subgraph;
  std::optional<std::size_t> t_max;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  fs::path output_dir = ".";

  json to_json() const {
    json j;
    j["command"] = command;
    j["n"] = n;
    j["subgraph"] = subgraph;
    j["t_max"] = t_max ? json(*t_max) : json(nullptr);
    j["trials"] = trials;
    j["seed"] = seed;
    j["threads"] = threads;
    j["output_dir"] = output_dir.string();
    return j;
  }
};

/// Raw flag values before validation.
struct Flags {
  std::size_t n = 0;
  std::string subgraph;
  std::size_t t_max = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out = ".";
  std::vector<std::size_t> n_list;
  std::size_t suite = 0;
  std::size_t n_min = 4;
  std::size_t n_max = 20;
  std::string families = "edge";
  std::size_t max_gamma_order = 4;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool given(const CLI::App& sub, const std::string& name) {
  const CLI::Option* opt = sub.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

void write_json(const fs::path& path, const json& value) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  os << value.dump(2) << '\n';
  if (!os) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

void prepare_output(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::Io, "cannot create output directory " + dir.string());
  }
}

ExperimentConfig make_config(const std::string& command, const Flags& f, const CLI::App& sub,
                             bool needs_instance) {
  ExperimentConfig cfg;
  cfg.command = command;
  cfg.output_dir = f.out;
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  cfg.threads = f.threads;
  if (given(sub, "--t-max")) cfg.t_max = f.t_max;
  if (needs_instance) {
    if (!given(sub, "--n")) throw UsageError("--n is required");
    if (!given(sub, "--subgraph")) throw UsageError("--subgraph is required");
    cfg.n = f.n;
    cfg.subgraph = load_descriptor(f.subgraph);
    // Validate the whole instance before any computation.
    (void)build_instance(cfg.n, edges_from_descriptor(cfg.subgraph));
  }
  return cfg;
}

SignedCompleteGraph make_instance(const ExperimentConfig& cfg) {
  return build_instance(cfg.n, edges_from_descriptor(cfg.subgraph));
}

json spectrum_json(const SpectralSummary& s) {
  return {{"lambda_max", s.lambda_max},
          {"theta_max", s.theta_max},
          {"gap", s.gap},
          {"overlap", s.overlap},
          {"degenerate", s.degenerate}};
}

json classical_json(const HittingTimeResult& r) {
  json j{{"t_c", r.t_c},
         {"lambda_max_P", r.lambda_max_P},
         {"solver_residual", r.solver_residual},
         {"solver", std::string(to_string(r.solver))},
         {"iterations", r.iterations}};
  if (r.mc) {
    j["mc"] = {{"mean", r.mc->mean},
               {"standard_error", r.mc->standard_error},
               {"trials", r.mc->trials},
               {"seed", r.mc->seed}};
  }
  return j;
}

HittingTimeResult classical_run(const SignedCompleteGraph& g, const ExperimentConfig& cfg) {
  HittingTimeResult r = hitting_time(g);
  if (cfg.trials > 0) r.mc = mc_hitting_time(g, cfg.trials, cfg.seed, kDefaultStepCap, cfg.threads);
  return r;
}

int cmd_simulate(ExperimentConfig cfg, std::ostream& out) {
  const SignedCompleteGraph g = make_instance(cfg);
  const SpectralSummary summary = principal_pair(build_T(g));
  const std::size_t t_f = quantum_time(summary);
  if (!cfg.t_max) cfg.t_max = 2 * t_f;
  prepare_output(cfg.output_dir);

  const WalkSeries series = run_series(g, *cfg.t_max);
  write_series_csv(cfg.output_dir / "series.csv", series.fp);

  json report;
  report["config"] = cfg.to_json();
  report["spectrum"] = spectrum_json(summary);
  report["t_f"] = t_f;
  report["series"] = "series.csv";
  report["fp_at_t_f"] = *series.fp_at_tf;
  if (g.num_marked_edges() < g.order() * g.n() / 2) report["classical"] = classical_json(classical_run(g, cfg));
  write_json(cfg.output_dir / "config.json", cfg.to_json());
  write_json(cfg.output_dir / "report.json", report);
  out << "t_f=" << t_f << " fp(t_f)=" << format_probability(*series.fp_at_tf) << '\n';
  return kExitOk;
}

int cmd_classical(const ExperimentConfig& cfg, std::ostream& out) {
  const SignedCompleteGraph g = make_instance(cfg);
  const HittingTimeResult r = classical_run(g, cfg);
  prepare_output(cfg.output_dir);
  json report = classical_json(r);
  report["config"] = cfg.to_json();
  write_json(cfg.output_dir / "config.json", cfg.to_json());
  write_json(cfg.output_dir / "classical.json", report);
  out << "t_c=" << format_probability(r.t_c);
  if (r.mc) out << " mc=" << r.mc->mean << " +- " << r.mc->standard_error;
  out << '\n';
  return kExitOk;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out) {
  const SignedCompleteGraph g = make_instance(cfg);
  VerifyOptions options;
  options.seed = cfg.seed;
  const BoundLedger ledger = verify_all(g, options);
  prepare_output(cfg.output_dir);
  write_json(cfg.output_dir / "config.json", cfg.to_json());
  write_json(cfg.output_dir / "ledger.json", to_json(ledger));
  const std::size_t failed = ledger.failures();
  const std::size_t skipped = ledger.skipped();
  out << "entries=" << ledger.entries.size() << " passed=" << ledger.entries.size() - failed - skipped
      << " skipped=" << skipped << " failed=" << failed << '\n';
  for (const auto& e : ledger.entries) {
    if (e.failed()) out << "FAILED " << to_json(e).dump() << '\n';
  }
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_suite(const Flags& f, std::ostream& out) {
  SuiteOptions options;
  options.count = f.suite;
  options.n_min = f.n_min;
  options.n_max = f.n_max;
  options.seed = f.seed;
  options.threads = f.threads;
  options.max_gamma_order = f.max_gamma_order;
  options.families.clear();
  std::stringstream ss(f.families);
  for (std::string name; std::getline(ss, name, ',');) {
    if (!name.empty()) options.families.push_back(parse_family(name));
  }
  const SuiteReport report = verify_random_suite(options);
  const fs::path dir = f.out;
  prepare_output(dir);
  json config{{"command", "verify"},     {"suite", f.suite},     {"n_min", f.n_min},
              {"n_max", f.n_max},        {"families", f.families}, {"seed", f.seed},
              {"max_gamma_order", f.max_gamma_order}, {"threads", f.threads},
              {"output_dir", dir.string()}};
  json doc = to_json(report);
  doc["config"] = config;
  write_json(dir / "config.json", config);
  write_json(dir / "suite.json", doc);
  out << "instances=" << report.instances << " entries=" << report.entries
      << " passed=" << report.passed << " skipped=" << report.skipped
      << " failed=" << report.failures.size() << '\n';
  for (const auto& fail : report.failures) {
    out << "FAILED instance " << fail.index << " n=" << fail.n << ' '
        << to_json(fail.entry).dump() << '\n';
  }
  return report.ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_fig2(const Flags& f, std::ostream& out) {
  const fs::path dir = f.out;
  prepare_output(dir);
  constexpr std::size_t n = 99;
  constexpr std::size_t t_max = 100;
  json summary = json::array();
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::string name = "P" + std::to_string(k + 1);
    const SignedCompleteGraph g = build_instance(n, path_edges(k));
    const WalkSeries series = run_series(g, t_max);
    const std::string file = "fig2_" + name + ".csv";
    write_series_csv(dir / file, series.fp);
    const std::size_t t_f = *series.t_f;
    const auto peak = std::max_element(series.fp.begin(), series.fp.end());
    summary.push_back({{"subgraph", name},
                       {"descriptor", {{"kind", "path"}, {"k", k}}},
                       {"n", n},
                       {"t_max", t_max},
                       {"csv", file},
                       {"t_f", t_f},
                       {"fp_at_t_f", series.fp[t_f]},
                       {"fp_at_t_f_minus_1", series.fp[t_f - 1]},
                       {"fp_step_1", series.fp[1]},
                       {"series_max", *peak},
                       {"series_argmax", peak - series.fp.begin()}});
    out << name << " t_f=" << t_f << " fp(t_f-1)=" << format_probability(series.fp[t_f - 1])
        << " fp(t_f)=" << format_probability(series.fp[t_f]) << '\n';
  }
  write_json(dir / "fig2_summary.json", summary);
  return kExitOk;
}

int cmd_speedup(const Flags& f, const CLI::App& sub, std::ostream& out) {
  if (f.n_list.empty()) throw UsageError("--n-list needs at least one value");
  const json descriptor = given(sub, "--subgraph") ? load_descriptor(f.subgraph)
                                                      : json{{"kind", "path"}, {"k", 1}};
  const auto edges = edges_from_descriptor(descriptor);
  for (std::size_t n : f.n_list) (void)build_instance(n, edges);

  const fs::path dir = f.out;
  prepare_output(dir);
  json rows = json::array();
  std::ofstream csv(dir / "speedup.csv");
  if (!csv) throw Error(ErrorCode::Io, "cannot write speedup.csv");
  csv << "n,edges,t_f,t_f_norm,t_c,t_c_norm\n";
  out << "n edges t_f t_f*sqrt(E)/n t_c t_c*E/n^2\n";
  for (std::size_t n : f.n_list) {
    const SignedCompleteGraph g = build_instance(n, edges);
    const std::size_t t_f = quantum_time(principal_pair(build_T(g)));
    const double t_c = hitting_time(g).t_c;
    const auto e = static_cast<double>(g.num_marked_edges());
    const auto nd = static_cast<double>(n);
    const double t_f_norm = static_cast<double>(t_f) * std::sqrt(e) / nd;
    const double t_c_norm = t_c * e / (nd * nd);
    rows.push_back({{"n", n},
                    {"edges", g.num_marked_edges()},
                    {"t_f", t_f},
                    {"t_f_norm", t_f_norm},
                    {"t_c", t_c},
                    {"t_c_norm", t_c_norm}});
    csv << n << ',' << g.num_marked_edges() << ',' << t_f << ',' << format_probability(t_f_norm)
        << ',' << format_probability(t_c) << ',' << format_probability(t_c_norm) << '\n';
    out << n << ' ' << g.num_marked_edges() << ' ' << t_f << ' ' << t_f_norm << ' ' << t_c << ' '
        << t_c_norm << '\n';
  }
  json config{{"command", "speedup"}, {"n_list", f.n_list}, {"subgraph", descriptor},
              {"output_dir", dir.string()}};
  write_json(dir / "config.json", config);
  write_json(dir / "speedup.json", {{"config", config}, {"rows", rows}});
  return kExitOk;
}

int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& out) {
  const SignedCompleteGraph g = make_instance(cfg);
  const SpectralSummary s = summarize_spectrum(build_T(g));
  json report = spectrum_json(s);
  report["config"] = cfg.to_json();
  report["eigenvalues"] = s.eigenvalues;
  report["spanning_complete_bipartite"] = is_spanning_complete_bipartite(g);
  report["t_f"] = s.degenerate ? json(nullptr) : json(quantum_time(s));
  prepare_output(cfg.output_dir);
  write_json(cfg.output_dir / "config.json", cfg.to_json());
  write_json(cfg.output_dir / "spectrum.json", report);
  out << "lambda_max=" << s.lambda_max << " theta_max=" << s.theta_max
      << " degenerate=" << (s.degenerate ? "true" : "false") << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateSpectrum: return kExitDegenerate;
    case ErrorCode::EmptySubgraph:
    case ErrorCode::InvalidVertex:
    case ErrorCode::LoopEdge:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::TooSmall:
    case ErrorCode::TooLarge:
    case ErrorCode::InvalidDescriptor:
    case ErrorCode::EmptyComplement:
    case ErrorCode::ZeroTrials:
    case ErrorCode::Io: return kExitUsage;
    default: return kExitVerificationFailure;
  }
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed-graph quantum walk search on complete graphs"};
  app.name("sgqw");
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&f](CLI::App* sub, bool instance) {
    if (instance) {
      sub->add_option("--n", f.n, "K_{n+1} host graph")->check(CLI::Range(2, 1 << 20));
      sub->add_option("--subgraph", f.subgraph, "descriptor JSON or path to a JSON file");
    }
    sub->add_option("--out", f.out, "output directory")->capture_default_str();
  };

  auto* simulate = app.add_subcommand("simulate", "finding-probability series and report");
  add_common(simulate, true);
  simulate->add_option("--t-max", f.t_max, "last step (default 2 t_f)");
  simulate->add_option("--trials", f.trials, "Monte-Carlo trials for t_c (0 skips)");
  simulate->add_option("--seed", f.seed, "seed for Monte-Carlo trials");
  simulate->add_option("--threads", f.threads, "worker threads for Monte-Carlo trials");

  auto* classical = app.add_subcommand("classical", "classical hitting time t_c");
  add_common(classical, true);
  classical->add_option("--trials", f.trials, "Monte-Carlo trials (0 skips)");
  classical->add_option("--seed", f.seed, "seed for Monte-Carlo trials");
  classical->add_option("--threads", f.threads, "worker threads for Monte-Carlo trials");

  auto* verify = app.add_subcommand("verify", "evaluate the bound ledger");
  add_common(verify, true);
  verify->add_option("--seed", f.seed, "seed for random vectors and suites");
  verify->add_option("--suite", f.suite, "run a random suite of this many instances instead");
  verify->add_option("--n-min", f.n_min, "suite: smallest n")->capture_default_str();
  verify->add_option("--n-max", f.n_max, "suite: largest n")->capture_default_str();
  verify->add_option("--families", f.families,
                     "suite: comma list of edge,matching,path,star,cycle,random")
      ->capture_default_str();
  verify->add_option("--max-gamma-order", f.max_gamma_order, "suite: cap on |V(Gamma)|")
      ->capture_default_str();
  verify->add_option("--threads", f.threads, "suite: worker threads");

  auto* fig2 = app.add_subcommand("fig2", "P2, P3, P4 series on K_100");
  add_common(fig2, false);

  auto* speedup = app.add_subcommand("speedup", "scaling table of t_f and t_c");
  add_common(speedup, false);
  speedup->add_option("--subgraph", f.subgraph, "descriptor (default one edge)");
  speedup->add_option("--n-list", f.n_list, "comma-separated n values")->delimiter(',');

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of T and the principal pair");
  add_common(spectrum, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      return cmd_simulate(make_config("simulate", f, *simulate, true), out);
    }
    if (classical->parsed()) {
      return cmd_classical(make_config("classical", f, *classical, true), out);
    }
    if (verify->parsed()) {
      if (given(*verify, "--suite")) return cmd_verify_suite(f, out);
      return cmd_verify(make_config("verify", f, *verify, true), out);
    }
    if (fig2->parsed()) return cmd_fig2(f, out);
    if (speedup->parsed()) return cmd_speedup(f, *speedup, out);
    if (spectrum->parsed()) return cmd_spectrum(make_config("spectrum", f, *spectrum, true), out);
  } catch (const UsageError& e) {
    report_error(err, "Usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, "Internal", e.what());
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace sgqw
