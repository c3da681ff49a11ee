#pragma once

#include <cstddef>
#include <string>

#include "hyperc/errors.hpp"
#include "hyperc/hypergraph.hpp"
#include "hyperc/tensor_ops.hpp"
#include "hyperc/vector_ops.hpp"

namespace hyperc {

// A computed centrality: strictly positive scores with unit 1-norm, the
// associated eigenvalue, the eigen-equation residual at the returned vector,
// and iteration metadata.
struct CentralityResult {
  DenseVector scores;
  double eigenvalue = 0.0;
  double residual = 0.0;
  long iterations = 0;
  bool converged = false;
};

// Clique-motif eigenvector centrality: the Perron vector of the motif
// matrix W, computed by power iteration from the uniform start. Stops when
// both the successive-iterate 1-norm difference and the eigen-residual
// ||W c - lambda c||_1 fall below tol (relative to lambda).
inline CentralityResult cec(const UniformHypergraph& h, double tol = 1e-10,
                            long max_iters = 100000,
                            const DenseVector* start = nullptr) {
  if (h.m() < 3) throw std::invalid_argument("cec: requires m >= 3");
  if (!is_connected(h)) throw NotConnectedError("cec: hypergraph is not connected");

  const std::size_t n = h.num_nodes();
  const SparseSymmetricMatrix W = motif_matrix(h);

  DenseVector c = start ? normalize_one_norm(*start)
                        : DenseVector(n, 1.0 / static_cast<double>(n));
  CentralityResult out;
  for (long it = 1; it <= max_iters; ++it) {
    DenseVector y = W.multiply(c);
    const double lambda = norm1(y);
    if (lambda == 0.0) throw ConvergenceError("cec: W c vanished");
    DenseVector next(y);
    for (double& v : next) v /= lambda;

    const double diff = distance1(next, c);
    out.iterations = it;
    c = std::move(next);
    if (diff <= tol) {
      // lambda and the residual are re-evaluated at the final iterate.
      DenseVector z = W.multiply(c);
      out.eigenvalue = norm1(z);
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) r += std::abs(z[i] - out.eigenvalue * c[i]);
      out.residual = r;
      if (out.residual <= tol * out.eigenvalue) {
        out.converged = true;
        break;
      }
    }
  }
  if (!out.converged) {
    DenseVector z = W.multiply(c);
    out.eigenvalue = norm1(z);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += std::abs(z[i] - out.eigenvalue * c[i]);
    out.residual = r;
  }
  out.scores = std::move(c);
  return out;
}

// Number of length-ell paths ending at each node of the clique-expansion
// walk structure: p^(1) = W e, p^(ell) = W p^(ell-1). By convention ell = 0
// returns the all-ones vector. Values are exact integers for unweighted
// input while they stay below 2^53.
inline DenseVector path_counts(const UniformHypergraph& h, long ell) {
  if (ell < 0) throw std::invalid_argument("path_counts: ell must be >= 0");
  DenseVector p(h.num_nodes(), 1.0);
  if (ell == 0) return p;
  const SparseSymmetricMatrix W = motif_matrix(h);
  for (long k = 0; k < ell; ++k) p = W.multiply(p);
  return p;
}

}  // namespace hyperc
