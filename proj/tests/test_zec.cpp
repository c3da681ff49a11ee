#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_support.hpp"

using namespace hyperc;
using test_support::classify_oracle;
using test_support::projected_spectrum_oracle;
using test_support::random_connected_hypergraph;

namespace {

ZecOptions tight_options() {
  ZecOptions o;
  o.tol = 1e-12;
  o.max_iters = 100000;
  return o;
}

}  // namespace

TEST_CASE("zec_single on a single edge finds the symmetric pair") {
  UniformHypergraph h(3, 3, {{0, 1, 2}});
  const auto out = zec_single(h, {0.2, 0.5, 0.9}, tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  const double u = 1.0 / std::sqrt(3.0);
  for (double v : out.pair.vector) CHECK(v == Catch::Approx(u).margin(1e-10));
  CHECK(out.pair.eigenvalue == Catch::Approx(2.0 / std::sqrt(3.0)).margin(1e-10));
  CHECK(out.pair.residual <= 1e-10);
}

TEST_CASE("zec_single sunflower(4,5) reproduces the sqrt(5) ratio") {
  const auto h = sunflower(4, 5);
  const auto out = zec_single(h, DenseVector(h.num_nodes(), 1.0), tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  CHECK(out.pair.vector[0] / out.pair.vector[1] ==
        Catch::Approx(std::sqrt(5.0)).margin(1e-8));
}

TEST_CASE("zec_single keeps the reference fixed point exactly") {
  const auto [h, pair] = example_unstable_fixture();
  const auto out = zec_single(h, pair.vector, tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  CHECK(distance2(out.pair.vector, pair.vector) <= 1e-10);
  CHECK(out.pair.eigenvalue == Catch::Approx(std::sqrt(2.0)).margin(1e-10));
}

TEST_CASE("zec_single dynamics escape the saddle reference pair to a boundary pair") {
  // The reference eigenpair is a saddle of the Perron-map flow; generic
  // perturbations leave it and land on one of the two mirror boundary
  // pairs with eigenvalue 4/sqrt(6).
  const auto [h, pair] = example_unstable_fixture();
  DenseVector x0 = pair.vector;
  std::uint64_t s = 42;
  for (auto& v : x0) v += 1e-3 * (hyperc::detail::uniform01(s) - 0.5);
  const auto out = zec_single(h, x0, tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  CHECK(distance2(out.pair.vector, pair.vector) > 1e-2);
  CHECK(out.pair.eigenvalue == Catch::Approx(4.0 / std::sqrt(6.0)).margin(1e-8));
  double min_entry = 1.0;
  for (double v : out.pair.vector) min_entry = std::min(min_entry, v);
  CHECK(min_entry <= 1e-12 / 7.0);  // boundary: some entries decayed to zero
}

TEST_CASE("returned vectors stay in the nonnegative cone") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto h = random_connected_hypergraph(9, 3, 6, seed);
    const auto x0 = hyperc::detail::random_positive_unit(9, seed);
    const auto out = zec_single(h, x0, tight_options());
    if (out.status != ZecSolveOutcome::Status::converged) continue;
    for (double v : out.pair.vector) CHECK(v >= 0.0);
    CHECK(norm2(out.pair.vector) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("Z-eigenvalue scale covariance at t = 2") {
  const auto h = sunflower(4, 3);
  const auto out = zec_single(h, DenseVector(h.num_nodes(), 1.0), tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  const std::size_t m = h.m();
  DenseVector scaled(out.pair.vector);
  for (double& v : scaled) v *= 2.0;
  const auto lhs = tensor_apply(h, scaled);
  const double expected_lambda =
      std::pow(2.0, static_cast<double>(m - 2)) * out.pair.eigenvalue;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    CHECK(lhs[i] == Catch::Approx(expected_lambda * scaled[i]).margin(1e-8));
}

TEST_CASE("sshopm finds the same pair as the dynamics on a single edge") {
  UniformHypergraph h(3, 3, {{0, 1, 2}});
  const auto a = zec_single(h, {0.4, 0.5, 0.6}, tight_options());
  const auto b = sshopm(h, {0.9, 0.3, 0.2}, 1.0, tight_options());
  REQUIRE(a.status == ZecSolveOutcome::Status::converged);
  REQUIRE(b.status == ZecSolveOutcome::Status::converged);
  CHECK(distance2(a.pair.vector, b.pair.vector) <= 1e-9);
}

TEST_CASE("sshopm sunflower(4,5) reproduces the sqrt(5) ratio") {
  const auto h = sunflower(4, 5);
  const auto out = sshopm(h, DenseVector(h.num_nodes(), 1.0), 1.0, tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  CHECK(out.pair.vector[0] / out.pair.vector[1] ==
        Catch::Approx(std::sqrt(5.0)).margin(1e-8));
}

TEST_CASE("sshopm never converges to the unstable reference pair") {
  const auto [h, pair] = example_unstable_fixture();
  ZecOptions opts = tight_options();
  for (long i = 0; i < 10; ++i) {
    const auto x0 = hyperc::detail::random_positive_unit(
        7, hyperc::detail::restart_seed(11, i));
    const auto out = sshopm(h, x0, 1.0, opts);
    if (out.status == ZecSolveOutcome::Status::converged)
      CHECK(distance2(out.pair.vector, pair.vector) > 1e-2);
  }
}

TEST_CASE("classify_stability agrees with the dense oracle") {
  const double tol = 1e-8;

  // single-edge positive pair
  {
    UniformHypergraph h(3, 3, {{0, 1, 2}});
    const auto out = zec_single(h, {0.3, 0.4, 0.5}, tight_options());
    REQUIRE(out.status == ZecSolveOutcome::Status::converged);
    const auto eigs = projected_spectrum_oracle(h, out.pair.vector, out.pair.eigenvalue);
    CHECK(out.pair.stability == classify_oracle(eigs, tol));
    CHECK(out.pair.stability != Stability::unstable);
  }
  // sunflower(4,5) positive pair: the petal-mean directions carry positive
  // curvature, so this pair is itself unstable (it is only reachable from
  // petal-symmetric starts)
  {
    const auto h = sunflower(4, 5);
    const auto out = zec_single(h, DenseVector(16, 1.0), tight_options());
    REQUIRE(out.status == ZecSolveOutcome::Status::converged);
    const auto eigs = projected_spectrum_oracle(h, out.pair.vector, out.pair.eigenvalue);
    CHECK(out.pair.stability == classify_oracle(eigs, tol));
    CHECK(out.pair.stability == Stability::unstable);
    // hand values: 3/sqrt(20) (x4) and -6/sqrt(20)
    double max_eig = eigs.front();
    double min_eig = eigs.front();
    for (double e : eigs) {
      max_eig = std::max(max_eig, e);
      min_eig = std::min(min_eig, e);
    }
    CHECK(max_eig == Catch::Approx(3.0 / std::sqrt(20.0)).margin(1e-8));
    CHECK(min_eig == Catch::Approx(-6.0 / std::sqrt(20.0)).margin(1e-8));
  }
  // the reference pair is unstable
  {
    const auto [h, pair] = example_unstable_fixture();
    CHECK(classify_stability(h, pair, tol) == Stability::unstable);
    const auto eigs = projected_spectrum_oracle(h, pair.vector, pair.eigenvalue);
    CHECK(classify_oracle(eigs, tol) == Stability::unstable);
  }
}

TEST_CASE("classify_stability needs an orthogonal complement") {
  UniformHypergraph h(3, 1, {});
  ZEigenpair p;
  p.vector = {1.0};
  CHECK_THROWS_AS(classify_stability(h, p), std::invalid_argument);
}

TEST_CASE("zec_single from the symmetric start reproduces sqrt(3) on sunflower(4,3)") {
  const auto h = sunflower(4, 3);
  const auto out = zec_single(h, DenseVector(h.num_nodes(), 1.0), tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  CHECK(out.pair.vector[0] / out.pair.vector[1] ==
        Catch::Approx(std::sqrt(3.0)).margin(1e-8));
  const auto scores = normalize_one_norm(out.pair.vector);
  CHECK(norm1(scores) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("zec random restarts on sunflower(4,3) land on single-petal pairs") {
  // The positive interior pair (ratio sqrt(3)) has unstable petal-mean
  // directions, so generic restarts drain all but one petal and approach
  // the single-edge pair with eigenvalue (m-1)!/4 = 1.5. Depending on how
  // far the dying entries have decayed at the stopping tolerance, each
  // restart is either admitted as a near-boundary pair or rejected at the
  // positivity floor; either way the eigenvalue identifies the attractor.
  ZecOptions opts;
  opts.restarts = 20;
  opts.seed = 5;
  opts.tol = 1e-10;
  const auto comp = zec(sunflower(4, 3), opts);
  CHECK(comp.ensemble.converged + comp.ensemble.rejected_boundary +
            comp.ensemble.failed ==
        20);
  for (const auto& p : comp.ensemble.pairs) {
    CHECK(p.eigenvalue == Catch::Approx(1.5).margin(1e-6));
    CHECK(p.residual <= 1e-7);
  }
  for (const auto& p : comp.ensemble.boundary_pairs)
    CHECK(p.eigenvalue == Catch::Approx(1.5).margin(1e-6));
}

TEST_CASE("zec on the 3-uniform sunflower finds several family members") {
  ZecOptions opts;
  opts.restarts = 30;
  opts.seed = 9;
  const auto comp = zec(sunflower(3, 2), opts);
  CHECK(comp.ensemble.pairs.size() >= 2);
}

TEST_CASE("hand-built members of the m=3 family satisfy the eigen-equation") {
  const auto h = sunflower(3, 3);
  const std::vector<double> petals{0.8, 1.7, 0.4};
  const auto x = sunflower_zec_family(petals);
  REQUIRE(x.size() == h.num_nodes());
  const auto y = tensor_apply(h, x);
  const double lambda = dot(x, y);
  double res = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - lambda * x[i];
    res += d * d;
  }
  CHECK(std::sqrt(res) <= 1e-12);
  // petal equality and core dominance hold by construction
  CHECK(x[1] == x[2]);
  CHECK(x[0] > x[1]);
}

TEST_CASE("zec is deterministic for a fixed seed") {
  ZecOptions opts;
  opts.restarts = 10;
  opts.seed = 1234;
  const auto a = zec(sunflower(4, 2), opts);
  const auto b = zec(sunflower(4, 2), opts);
  REQUIRE(a.ensemble.pairs.size() == b.ensemble.pairs.size());
  for (std::size_t k = 0; k < a.ensemble.pairs.size(); ++k) {
    CHECK(a.ensemble.counts[k] == b.ensemble.counts[k]);
    CHECK(a.ensemble.pairs[k].vector == b.ensemble.pairs[k].vector);  // bitwise
    CHECK(a.ensemble.pairs[k].eigenvalue == b.ensemble.pairs[k].eigenvalue);
  }
  CHECK(a.result.scores == b.result.scores);
}

TEST_CASE("zec with worker threads merges identically to the serial run") {
  ZecOptions serial;
  serial.restarts = 12;
  serial.seed = 77;
  ZecOptions parallel = serial;
  parallel.threads = 4;
  const auto a = zec(sunflower(4, 2), serial);
  const auto b = zec(sunflower(4, 2), parallel);
  REQUIRE(a.ensemble.pairs.size() == b.ensemble.pairs.size());
  CHECK(a.result.scores == b.result.scores);
}

TEST_CASE("zec residual and positivity invariants across converged pairs") {
  ZecOptions opts;
  opts.restarts = 8;
  opts.seed = 3;
  opts.tol = 1e-10;
  for (std::size_t r : {2, 4}) {
    const auto comp = zec(sunflower(4, r), opts);
    for (const auto& p : comp.ensemble.pairs) {
      CHECK(p.residual <= 1e-7);
      double min_entry = 1.0;
      for (double v : p.vector) min_entry = std::min(min_entry, v);
      CHECK(min_entry > 1e-12 / static_cast<double>(p.vector.size()));
    }
  }
}

TEST_CASE("converged pairs satisfy the eigen-equation under the dense-tensor oracle") {
  const auto h = random_connected_hypergraph(6, 3, 4, 62);
  const auto out = zec_single(h, hyperc::detail::random_positive_unit(6, 99),
                              tight_options());
  REQUIRE(out.status == ZecSolveOutcome::Status::converged);
  const test_support::DenseTensorOracle oracle(h);
  const auto y = oracle.apply(out.pair.vector);
  double res = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - out.pair.eigenvalue * out.pair.vector[i];
    res += d * d;
  }
  CHECK(std::sqrt(res) <= 1e-9);
}

TEST_CASE("zec argument validation") {
  CHECK_THROWS_AS(zec(UniformHypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})), NotConnectedError);
  ZecOptions bad_step;
  bad_step.step = 1.5;
  CHECK_THROWS_AS(zec(sunflower(3, 1), bad_step), std::invalid_argument);
  ZecOptions bad_restarts;
  bad_restarts.restarts = 0;
  CHECK_THROWS_AS(zec(sunflower(3, 1), bad_restarts), std::invalid_argument);
}

TEST_CASE("zec reports boundary-only outcomes as non-converged with diagnostics") {
  const auto [h, pair] = example_unstable_fixture();
  ZecOptions opts;
  opts.restarts = 12;
  opts.seed = 7;
  opts.tol = 1e-10;  // tight enough that boundary entries decay below the floor
  const auto comp = zec(h, opts);
  CHECK_FALSE(comp.result.converged);
  CHECK(comp.ensemble.pairs.empty());
  CHECK(comp.ensemble.rejected_boundary == 12);
  CHECK(comp.ensemble.boundary_pairs.size() >= 1);
  for (const auto& p : comp.ensemble.boundary_pairs)
    CHECK(p.eigenvalue == Catch::Approx(4.0 / std::sqrt(6.0)).margin(1e-6));
}
