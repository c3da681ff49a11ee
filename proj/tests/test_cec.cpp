#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace hyperc;
using test_support::random_connected_hypergraph;
using test_support::random_vector;
using test_support::to_dense;

TEST_CASE("cec on a single edge is uniform with eigenvalue 2") {
  const auto r = cec(UniformHypergraph(3, 3, {{0, 1, 2}}));
  REQUIRE(r.converged);
  for (double s : r.scores) CHECK(s == Catch::Approx(1.0 / 3.0).margin(1e-12));
  CHECK(r.eigenvalue == Catch::Approx(2.0).margin(1e-10));
}

TEST_CASE("cec sunflower(3,2) core/petal ratio") {
  const auto r = cec(sunflower(3, 2), 1e-12);
  REQUIRE(r.converged);
  const double expected = 8.0 / (std::sqrt(17.0) + 1.0);
  CHECK(r.scores[0] / r.scores[1] == Catch::Approx(expected).margin(1e-10));
}

TEST_CASE("cec requires connectivity and m >= 3") {
  CHECK_THROWS_AS(cec(UniformHypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})), NotConnectedError);
  CHECK_THROWS_AS(cec(UniformHypergraph(2, 2, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("cec matches the dense eigensolver oracle") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t m = (seed % 2) ? 3 : 4;
    const auto h = random_connected_hypergraph(20 + 5 * (seed % 3), m, 25, seed);
    const auto r = cec(h, 1e-13, 1000000);
    REQUIRE(r.converged);
    const auto oracle = test_support::dense_cec_oracle(h);
    for (std::size_t i = 0; i < oracle.size(); ++i)
      CHECK(std::abs(r.scores[i] - oracle[i]) <= 1e-10);
  }
}

TEST_CASE("cec matches the dense oracle on weighted input") {
  const auto base = random_connected_hypergraph(15, 3, 12, 42);
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> wdist(0.25, 4.0);
  for (std::size_t i = 0; i < base.num_edges(); ++i) {
    const auto e = base.edge(i);
    edges.emplace_back(e.begin(), e.end());
    weights.push_back(wdist(rng));
  }
  const UniformHypergraph h(3, 15, std::move(edges), std::move(weights));
  const auto r = cec(h, 1e-13, 1000000);
  REQUIRE(r.converged);
  const auto oracle = test_support::dense_cec_oracle(h);
  for (std::size_t i = 0; i < oracle.size(); ++i)
    CHECK(std::abs(r.scores[i] - oracle[i]) <= 1e-10);
}

TEST_CASE("cec converged result satisfies the eigen-residual bound") {
  const double tol = 1e-11;
  const auto h = random_connected_hypergraph(15, 3, 12, 99);
  const auto r = cec(h, tol);
  REQUIRE(r.converged);
  CHECK(r.residual <= tol * r.eigenvalue);
  CHECK(norm1(r.scores) == Catch::Approx(1.0).margin(1e-12));
  for (double s : r.scores) CHECK(s > 0.0);
}

TEST_CASE("cec is start-point independent") {
  const double tol = 1e-11;
  const auto h = random_connected_hypergraph(12, 3, 10, 5);
  const auto a = random_vector(12, 1, 0.1, 1.0);
  const auto b = random_vector(12, 2, 0.1, 1.0);
  const auto ra = cec(h, tol, 100000, &a);
  const auto rb = cec(h, tol, 100000, &b);
  REQUIRE(ra.converged);
  REQUIRE(rb.converged);
  for (std::size_t i = 0; i < ra.scores.size(); ++i)
    CHECK(std::abs(ra.scores[i] - rb.scores[i]) <= 10 * tol);
}

TEST_CASE("cec vector is parallel to the dominant singular vector of W") {
  const auto h = random_connected_hypergraph(14, 3, 12, 7);
  const auto r = cec(h, 1e-13, 1000000);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_dense(motif_matrix(h)), Eigen::ComputeFullU);
  Eigen::VectorXd u = svd.matrixU().col(0);
  Eigen::VectorXd c(r.scores.size());
  for (std::size_t i = 0; i < r.scores.size(); ++i) c[i] = r.scores[i];
  const double cosine = std::abs(u.dot(c)) / (u.norm() * c.norm());
  CHECK(cosine >= 1.0 - 1e-10);
}

TEST_CASE("cec reports non-convergence instead of looping forever") {
  const auto h = sunflower(3, 6);
  const auto r = cec(h, 1e-14, 2);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
}

TEST_CASE("path_counts small cases") {
  UniformHypergraph edge(3, 3, {{0, 1, 2}});
  CHECK(path_counts(edge, 0) == DenseVector{1.0, 1.0, 1.0});
  CHECK(path_counts(edge, 1) == DenseVector{2.0, 2.0, 2.0});
  CHECK(path_counts(edge, 2) == DenseVector{4.0, 4.0, 4.0});

  const auto p = path_counts(sunflower(3, 2), 1);
  CHECK(p[0] == 4.0);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] == 2.0);

  CHECK_THROWS_AS(path_counts(edge, -1), std::invalid_argument);
}

TEST_CASE("path_counts are exact integers while small") {
  const auto h = random_connected_hypergraph(8, 3, 6, 4);
  for (long ell = 1; ell <= 6; ++ell) {
    for (double v : path_counts(h, ell)) CHECK(v == std::floor(v));
  }
}

TEST_CASE("normalized path counts converge to the CEC vector") {
  for (std::size_t r = 2; r <= 4; ++r) {
    const auto h = sunflower(3, r);
    const auto c = cec(h, 1e-13, 1000000);
    const auto p = normalize_one_norm(path_counts(h, 50));
    CHECK(distance1(p, c.scores) <= 1e-6);
  }
}

TEST_CASE("normalize_one_norm basics") {
  CHECK(normalize_one_norm({2.0, 2.0}) == DenseVector{0.5, 0.5});
  CHECK(normalize_one_norm({1.0, 3.0}) == DenseVector{0.25, 0.75});
  const DenseVector already{0.25, 0.75};
  CHECK(normalize_one_norm(already) == already);
  CHECK_THROWS_AS(normalize_one_norm({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_one_norm({-1.0, 2.0}), std::invalid_argument);
}
