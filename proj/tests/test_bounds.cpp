#include <string>
#include <vector>

#include "doctest.h"
#include "sgqw/bounds.hpp"
#include "sgqw/error.hpp"
#include "sgqw/signed_graph.hpp"

using namespace sgqw;

namespace {

void require_entry(const BoundLedger& ledger, std::string_view name, bool expect_skipped) {
  const BoundEntry* e = ledger.find(name);
  REQUIRE_MESSAGE(e != nullptr, name);
  CAPTURE(name);
  CHECK(e->skipped() == expect_skipped);
  if (!expect_skipped) CHECK(e->passed == std::optional<bool>(true));
}

}  // namespace

TEST_CASE("single edge in K_261 passes everything") {
  const auto ledger = verify_all(build_instance(260, path_edges(1)));
  CHECK(ledger.ok());
  CHECK(ledger.skipped() == 0);
  CHECK(ledger.entries.size() >= 40);
  REQUIRE(ledger.delta.has_value());
  require_entry(ledger, "fp_lower", false);
  require_entry(ledger, "tc_bracket.upper", false);
  require_entry(ledger, "qtime_order.upper", false);
}

TEST_CASE("spanning path in K_3: bipartite identity holds, quantum entries skipped") {
  const auto ledger = verify_all(build_instance(2, path_edges(2)));
  CHECK(ledger.ok());
  require_entry(ledger, "bipartite_iff", false);
  const BoundEntry* e = ledger.find("bipartite_iff");
  CHECK(e->lhs == doctest::Approx(1.0));
  require_entry(ledger, "beta_close", true);
  require_entry(ledger, "fp_lower", true);
}

TEST_CASE("example configuration: ungated entries pass, gated ones skip") {
  const auto ledger =
      verify_all(build_instance(4, std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}}));
  CHECK(ledger.ok());
  require_entry(ledger, "gershgorin.Y", false);
  require_entry(ledger, "gershgorin.Z", false);
  require_entry(ledger, "lambda1_bracket.Y.upper", false);
  require_entry(ledger, "lambda1_bracket.Z.lower", false);
  require_entry(ledger, "fp_lower", true);
  require_entry(ledger, "beta_plus_mass", true);
  require_entry(ledger, "tc_near_resolvent", true);
}

TEST_CASE("norm inequalities over 10^4 random vectors") {
  VerifyOptions opts;
  opts.random_vectors = 10000;
  opts.seed = 5;
  const auto ledger = verify_all(build_instance(12, star_edges(3)), opts);
  require_entry(ledger, "norm_l1.random", false);
  require_entry(ledger, "norm_l2.random", false);
  require_entry(ledger, "norm_l1.applied", false);
  require_entry(ledger, "norm_l2.applied", false);
}

TEST_CASE("ledger json carries the documented fields") {
  const auto ledger = verify_all(build_instance(4, path_edges(3)));
  const auto j = to_json(ledger);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == ledger.entries.size());
  for (const auto& item : j) {
    for (const char* key : {"name", "lhs", "rhs", "relation", "hypothesis_description",
                            "hypothesis_holds", "passed", "slack"}) {
      CHECK(item.contains(key));
    }
    CHECK(item["passed"].is_null() == !item["hypothesis_holds"].get<bool>());
  }
}

TEST_CASE("small unrestricted suite has no failures") {
  SuiteOptions opts;
  opts.count = 50;
  opts.n_min = 4;
  opts.n_max = 20;
  opts.families = {GammaFamily::Edge,  GammaFamily::Matching, GammaFamily::Path,
                   GammaFamily::Star,  GammaFamily::Cycle,    GammaFamily::Random};
  opts.seed = 3;
  opts.max_gamma_order = 8;
  const auto report = verify_random_suite(opts);
  CHECK(report.instances == 50);
  CHECK(report.ok());
  CHECK(report.passed + report.skipped == report.entries);
}

TEST_CASE("suite reports are reproducible and thread-count independent") {
  SuiteOptions opts;
  opts.count = 6;
  opts.n_min = 5;
  opts.n_max = 30;
  opts.families = {GammaFamily::Random, GammaFamily::Path};
  opts.seed = 17;
  const auto a = to_json(verify_random_suite(opts)).dump();
  opts.threads = 3;
  const auto b = to_json(verify_random_suite(opts)).dump();
  CHECK(a == b);
  opts.count = 1;
  CHECK(to_json(verify_random_suite(opts)).dump() == to_json(verify_random_suite(opts)).dump());
}

TEST_CASE("suite argument checks") {
  SuiteOptions opts;
  opts.count = 0;
  CHECK_THROWS_AS(verify_random_suite(opts), Error);
  CHECK(parse_family("star") == GammaFamily::Star);
  CHECK(to_string(GammaFamily::Matching) == "matching");
  CHECK_THROWS_AS(parse_family("tree"), Error);
}
