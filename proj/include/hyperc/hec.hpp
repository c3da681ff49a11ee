#pragma once

#include <cmath>
#include <limits>

#include "hyperc/cec.hpp"
#include "hyperc/errors.hpp"
#include "hyperc/hypergraph.hpp"
#include "hyperc/tensor_ops.hpp"
#include "hyperc/vector_ops.hpp"

namespace hyperc {

// H-eigenvector centrality: the unique positive vector c with
// T c^{m-1} = lambda * c^[m-1] and ||c||_1 = 1. Computed by the
// multiplicative power method with entrywise (m-1)-th roots:
//   y = T x^{m-1};  x <- normalize_1(y^[1/(m-1)])
// The eigenvalue is bracketed each sweep by the Collatz-Wielandt ratios
//   lambda_min = min_i y_i / x_i^{m-1},  lambda_max = max_i y_i / x_i^{m-1}
// and the iteration stops once (lambda_max - lambda_min) / lambda_max <= tol.
//
// The reported lambda is the factor in T c^{m-1} = lambda c^[m-1] with the
// tensor's full (m-1)! symmetry count inside the contraction, so a single
// m-node edge has lambda = (m-1)!.
inline CentralityResult hec(const UniformHypergraph& h, double tol = 1e-10,
                            long max_iters = 10000,
                            const DenseVector* start = nullptr) {
  if (h.m() < 3) throw std::invalid_argument("hec: requires m >= 3");
  if (!is_connected(h)) throw NotConnectedError("hec: hypergraph is not connected");

  const std::size_t n = h.num_nodes();
  const double root = 1.0 / static_cast<double>(h.m() - 1);
  const double power = static_cast<double>(h.m() - 1);

  if (start) {
    for (double v : *start)
      if (!(v > 0.0)) throw std::invalid_argument("hec: start vector must be strictly positive");
  }
  DenseVector x = start ? normalize_one_norm(*start)
                        : DenseVector(n, 1.0 / static_cast<double>(n));
  CentralityResult out;
  double lambda_lo = 0.0, lambda_hi = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= max_iters; ++it) {
    const DenseVector y = tensor_apply(h, x);
    lambda_lo = std::numeric_limits<double>::infinity();
    lambda_hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(y[i] > 0.0))
        throw ConvergenceError("hec: nonpositive iterate on connected input (internal error)");
      const double ratio = y[i] / std::pow(x[i], power);
      lambda_lo = std::min(lambda_lo, ratio);
      lambda_hi = std::max(lambda_hi, ratio);
    }
    out.iterations = it;
    if ((lambda_hi - lambda_lo) / lambda_hi <= tol) {
      out.converged = true;
      break;
    }
    x = normalize_one_norm(entrywise_pow(y, root));
  }

  out.eigenvalue = 0.5 * (lambda_lo + lambda_hi);
  const DenseVector y = tensor_apply(h, x);
  const DenseVector xp = entrywise_pow(x, power);
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r += std::abs(y[i] - out.eigenvalue * xp[i]);
  out.residual = r;
  out.scores = std::move(x);
  return out;
}

}  // namespace hyperc
