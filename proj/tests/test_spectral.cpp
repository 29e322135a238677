#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgqw/error.hpp"
#include "sgqw/operators.hpp"
#include "sgqw/quantum_search.hpp"
#include "sgqw/spectral.hpp"

using namespace sgqw;

namespace {

ErrorCode spectral_error(const SignedCompleteGraph& g) {
  try {
    principal_pair(build_T(g));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

Eigen::VectorXcd as_vector(const QuantumState& psi) {
  return Eigen::Map<const Eigen::VectorXcd>(psi.amplitudes.data(),
                                            static_cast<Eigen::Index>(psi.size()));
}

}  // namespace

TEST_CASE("eigh on small fixtures") {
  const auto id = eigh(Eigen::MatrixXd::Identity(3, 3));
  CHECK((id.values - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff() < 1e-15);
  const auto ones = eigh(Eigen::MatrixXd::Ones(3, 3));
  CHECK(ones.values(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::abs(ones.values(1)) < 1e-14);
  CHECK(std::abs(ones.values(2)) < 1e-14);

  const auto g = build_instance(2, std::vector<VertexPair>{{0, 1}});
  const auto t = eigh(build_T(g).matrix);
  CHECK(t.values(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(t.values(1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(t.values(2) == doctest::Approx(-1.0).epsilon(1e-14));

  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(eigh(bad), Error);
}

TEST_CASE("property: eigh residuals and orthonormality") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto size = static_cast<Eigen::Index>(2 + gen() % 60);
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(size, size);
    a = (a + a.transpose()).eval();
    const auto d = eigh(a);
    for (Eigen::Index i = 0; i + 1 < size; ++i) CHECK(d.values(i) >= d.values(i + 1));
    const double scale = std::max(1.0, d.values.cwiseAbs().maxCoeff());
    CHECK((a * d.vectors - d.vectors * d.values.asDiagonal()).colwise().norm().maxCoeff() <=
          1e-10 * scale);
    CHECK((d.vectors.transpose() * d.vectors - Eigen::MatrixXd::Identity(size, size))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
  }
}

TEST_CASE("principal pair on the triangle") {
  const auto g = build_instance(2, std::vector<VertexPair>{{0, 1}});
  const auto s = principal_pair(build_T(g));
  CHECK(s.lambda_max == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.theta_max == doctest::Approx(std::numbers::pi / 3).epsilon(1e-14));
  CHECK_FALSE(s.degenerate);
  // Tied top eigenspace: f is the projection of j.
  const Eigen::VectorXd j = uniform_vector(3);
  const Eigen::MatrixXd t = build_T(g).matrix;
  CHECK((t * s.f - 0.5 * s.f).norm() < 1e-12);
  CHECK(s.f.dot(j) > 0.0);
  CHECK(s.overlap == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("spanning complete bipartite subgraphs are degenerate") {
  CHECK(spectral_error(build_instance(2, path_edges(2))) == ErrorCode::DegenerateSpectrum);
  CHECK(spectral_error(build_instance(4, complete_bipartite_edges(2, 3))) ==
        ErrorCode::DegenerateSpectrum);
  const auto summary = summarize_spectrum(build_T(build_instance(3, cycle_edges(4))));
  CHECK(summary.degenerate);
  CHECK(summary.lambda_max == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single edge in K_100") {
  const auto g = build_instance(99, path_edges(1));
  const auto s = principal_pair(build_T(g));
  CHECK(s.lambda_max >= 1.0 - 4.0 / 9900.0);
  CHECK(s.lambda_max < 1.0);
  CHECK(quantum_time(s) == 55);
}

TEST_CASE("property: spectral summary invariants") {
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + gen() % 30;
    const std::size_t m = 1 + gen() % std::min<std::size_t>(n * (n + 1) / 2, 12);
    const auto g = build_instance(n, oracle::random_edges(n, m, gen));
    const auto t = build_T(g);
    const auto s = summarize_spectrum(t);
    const double nn = static_cast<double>(n);
    CHECK(s.lambda_max >= 1.0 - 4.0 * static_cast<double>(m) / (nn * (nn + 1.0)) - 1e-12);
    CHECK(s.lambda_max <= 1.0 + 1e-12);
    double trace = 0.0;
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      trace += s.eigenvalues[i];
      if (i + 1 < s.eigenvalues.size()) CHECK(s.eigenvalues[i] >= s.eigenvalues[i + 1]);
    }
    CHECK(std::abs(trace) < 1e-10);
    CHECK(s.f.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.f.dot(uniform_vector(s.f.size())) >= 0.0);
    CHECK((t.matrix * s.f - s.lambda_max * s.f).norm() <= 1e-10);
    CHECK(s.degenerate == oracle::spanning_complete_bipartite(
                              g.order(), std::vector<VertexPair>(g.marked_edges().begin(),
                                                                 g.marked_edges().end())));
  }
}

TEST_CASE("property: lifted vectors are eigenvectors of U") {
  std::mt19937_64 gen(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + gen() % 40;
    const std::size_t m = 1 + gen() % 6;
    const auto g = build_instance(n, oracle::random_edges(n, m, gen));
    const auto s = summarize_spectrum(build_T(g));
    if (s.degenerate) continue;
    const auto lift = lift_eigenvectors(g, s);
    const std::complex<double> e_plus = std::polar(1.0, s.theta_max);
    const Eigen::VectorXcd pp = as_vector(lift.phi_plus);
    const Eigen::VectorXcd pm = as_vector(lift.phi_minus);
    CHECK((as_vector(apply_U(g, lift.phi_plus)) - e_plus * pp).norm() <= 1e-10);
    CHECK((as_vector(apply_U(g, lift.phi_minus)) - std::conj(e_plus) * pm).norm() <= 1e-10);
    CHECK(lift.phi_plus.norm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lift.phi_minus.norm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lift.beta_plus.norm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lift.beta_minus.norm() == doctest::Approx(1.0).epsilon(1e-10));
    const Eigen::VectorXcd bp = as_vector(lift.beta_plus);
    const Eigen::VectorXcd ibm = std::complex<double>(0.0, 1.0) * as_vector(lift.beta_minus);
    CHECK(bp.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK(ibm.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((bp - (pp + pm) / std::sqrt(2.0)).norm() < 1e-12);
  }
}

TEST_CASE("triangle: i beta_- equals S d* f") {
  const auto g = build_instance(2, std::vector<VertexPair>{{0, 1}});
  const auto s = principal_pair(build_T(g));
  const auto lift = lift_eigenvectors(g, s);
  const Eigen::VectorXd expected =
      build_swap_dense(g) * build_d_sigma_dense(g).transpose() * s.f;
  const Eigen::VectorXcd ibm = std::complex<double>(0.0, 1.0) * as_vector(lift.beta_minus);
  CHECK((ibm.real() - expected).norm() < 1e-12);
  CHECK(ibm.imag().norm() < 1e-12);
  CHECK(expected.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral mapping fixtures") {
  const auto tri = spectral_mapping_check(build_instance(2, std::vector<VertexPair>{{0, 1}}));
  CHECK(tri.all_matched);
  CHECK(tri.excluded.size() == 1);  // lambda = -1
  CHECK(tri.walk_spectrum.size() == 6);

  const auto example =
      spectral_mapping_check(build_instance(4, std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}}));
  CHECK(example.all_matched);
  CHECK(example.max_distance <= 1e-8);

  const auto p3 = spectral_mapping_check(build_instance(2, path_edges(2)));
  CHECK(p3.all_matched);
  REQUIRE_FALSE(p3.excluded.empty());
  CHECK(p3.excluded.front() == doctest::Approx(1.0));

  CHECK_THROWS_AS(spectral_mapping_check(build_instance(41, path_edges(1))), Error);
}
