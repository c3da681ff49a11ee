#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperc/hypergraph.hpp"
#include "hyperc/tensor_ops.hpp"
#include "hyperc/vector_ops.hpp"
#include "hyperc/zec.hpp"

namespace hyperc {

// An m-uniform sunflower with a singleton core and r petals: node 0 is the
// core, petal p occupies nodes 1+p(m-1) .. (p+1)(m-1), and each hyperedge
// is the core plus one petal.
struct SunflowerSpec {
  std::size_t m = 3;
  std::size_t r = 1;

  std::size_t num_nodes() const { return 1 + r * (m - 1); }
  std::size_t num_edges() const { return r; }
};

inline UniformHypergraph sunflower(std::size_t m, std::size_t r) {
  if (m < 3) throw std::invalid_argument("sunflower: m must be >= 3");
  if (r < 1) throw std::invalid_argument("sunflower: r must be >= 1");
  const SunflowerSpec spec{m, r};
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(r);
  for (std::size_t p = 0; p < r; ++p) {
    std::vector<NodeId> e;
    e.reserve(m);
    e.push_back(0);
    for (std::size_t k = 0; k < m - 1; ++k)
      e.push_back(static_cast<NodeId>(1 + p * (m - 1) + k));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(m, spec.num_nodes(), std::move(edges));
}

enum class CentralityMethod { cec, zec, hec };

inline const char* method_name(CentralityMethod m) {
  switch (m) {
    case CentralityMethod::cec: return "cec";
    case CentralityMethod::zec: return "zec";
    case CentralityMethod::hec: return "hec";
  }
  return "?";
}

// Closed-form core-to-petal-node centrality ratio on the singleton-core
// sunflower:
//   CEC: 2 r (m-1) / (sqrt(m^2 + 4 (m-1)(r-1)) + m - 2)
//   ZEC: sqrt(r)        (the unique score requires m != 3)
//   HEC: r^(1/m)
inline double sunflower_ratio(CentralityMethod method, std::size_t m, std::size_t r) {
  if (m < 3) throw std::invalid_argument("sunflower_ratio: m must be >= 3");
  if (r < 1) throw std::invalid_argument("sunflower_ratio: r must be >= 1");
  const double md = static_cast<double>(m);
  const double rd = static_cast<double>(r);
  switch (method) {
    case CentralityMethod::cec:
      return 2.0 * rd * (md - 1.0) /
             (std::sqrt(md * md + 4.0 * (md - 1.0) * (rd - 1.0)) + md - 2.0);
    case CentralityMethod::zec:
      if (m == 3)
        throw std::invalid_argument(
            "sunflower_ratio: the 3-uniform sunflower has infinitely many Z-eigenvector "
            "centralities; use sunflower_zec_family instead");
      return std::sqrt(rd);
    case CentralityMethod::hec:
      return std::pow(rd, 1.0 / md);
  }
  throw std::invalid_argument("sunflower_ratio: unknown method");
}

// A member of the 3-uniform sunflower's Z-eigenvector family: every node of
// petal p takes the value petal_constants[p] and the core takes
// sqrt(sum of squared petal constants). Returned with unit 2-norm; any
// member satisfies the Z-eigen equation exactly.
inline DenseVector sunflower_zec_family(const std::vector<double>& petal_constants) {
  if (petal_constants.empty())
    throw std::invalid_argument("sunflower_zec_family: need at least one petal constant");
  double core_sq = 0.0;
  for (double c : petal_constants) {
    if (!(c > 0.0))
      throw std::invalid_argument("sunflower_zec_family: petal constants must be positive");
    core_sq += c * c;
  }
  const std::size_t r = petal_constants.size();
  DenseVector x(1 + 2 * r);
  x[0] = std::sqrt(core_sq);
  for (std::size_t p = 0; p < r; ++p) {
    x[1 + 2 * p] = petal_constants[p];
    x[2 + 2 * p] = petal_constants[p];
  }
  return normalize_two_norm(x);
}

// The 7-node, 3-uniform reference hypergraph whose printed Z-eigenpair
// (lambda = sqrt(2)) is unstable and therefore unreachable by SS-HOPM.
// Construction self-checks the eigen-equation to 1e-12.
inline std::pair<UniformHypergraph, ZEigenpair> example_unstable_fixture() {
  UniformHypergraph h(3, 7, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {4, 5, 6}});

  const double s6 = std::sqrt(6.0) / 6.0;
  const double s2 = std::sqrt(2.0);
  ZEigenpair pair;
  pair.vector = {s6, s6, s2 / 3.0, s2 / 6.0, s6, s6, s2 / 6.0};
  pair.eigenvalue = s2;

  const DenseVector y = tensor_apply(h, pair.vector);
  double r = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - pair.eigenvalue * pair.vector[i];
    r += d * d;
  }
  pair.residual = std::sqrt(r);
  if (pair.residual > 1e-12)
    throw std::logic_error("example_unstable_fixture: eigen-equation self-check failed");
  return {std::move(h), std::move(pair)};
}

}  // namespace hyperc
