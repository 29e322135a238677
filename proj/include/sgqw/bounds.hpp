#pragma once

// The full inequality ledger: every estimate from the spectral, quantum and
// classical analysis, evaluated exactly on one instance, plus a seeded random
// harness over many instances.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sgqw/ledger.hpp"
#include "sgqw/signed_graph.hpp"

namespace sgqw {

struct BoundLedger {
  std::vector<BoundEntry> entries;
  /// 4 sqrt(|V(Gamma)| / (n+3-2|V(Gamma)|)); empty when 2|V(Gamma)| >= n+3.
  std::optional<double> delta;

  std::size_t failures() const;
  std::size_t skipped() const;
  bool ok() const { return failures() == 0; }
  /// nullptr when absent.
  const BoundEntry* find(std::string_view name) const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;                 // random vectors for the norm inequalities
  std::size_t random_vectors = 64;
  std::size_t full_spectrum_limit = 600;  // |E(Delta)| up to which P is diagonalised densely
};

BoundLedger verify_all(const SignedCompleteGraph& g, const VerifyOptions& options = {});

/// One object per entry with exactly the ledger fields; `passed` is null when skipped.
nlohmann::json to_json(const BoundEntry& entry);
nlohmann::json to_json(const BoundLedger& ledger);

enum class GammaFamily { Edge, Matching, Path, Star, Cycle, Random };

std::string_view to_string(GammaFamily family) noexcept;
/// Throws InvalidDescriptor on unknown names.
GammaFamily parse_family(std::string_view name);

struct SuiteOptions {
  std::size_t count = 1;
  std::size_t n_min = 4;
  std::size_t n_max = 20;
  std::vector<GammaFamily> families{GammaFamily::Edge};
  std::uint64_t seed = 0;
  std::size_t max_gamma_order = 4;  // |V(Gamma)| cap for every family
  unsigned threads = 1;
};

/// A failed entry together with everything needed to rebuild the instance.
struct SuiteFailure {
  std::size_t index = 0;
  std::size_t n = 0;
  std::vector<VertexPair> edges;  // external labels
  GammaFamily family = GammaFamily::Edge;
  BoundEntry entry;
};

struct SuiteReport {
  std::size_t instances = 0;
  std::size_t entries = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Instance i is drawn from its own generator seeded by (seed, i), so the report
/// does not depend on the thread count. Throws ZeroTrials for count = 0.
SuiteReport verify_random_suite(const SuiteOptions& options);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace sgqw
