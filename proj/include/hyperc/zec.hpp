#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "hyperc/cec.hpp"
#include "hyperc/errors.hpp"
#include "hyperc/hypergraph.hpp"
#include "hyperc/tensor_ops.hpp"
#include "hyperc/vector_ops.hpp"

namespace hyperc {

enum class ZecAlgorithm { dynamical_systems, sshopm };

// Stability of a Z-eigenpair under the shifted higher-order power method:
// classified by the eigenvalue signs of the projected matrix
// U^T ((m-1) T[x] - lambda I) U on the complement of x. From generic starts
// SS-HOPM converges only to non-unstable pairs.
enum class Stability {
  positive_stable,
  negative_stable,
  unstable,
  degenerate,
  unclassified,
};

inline const char* stability_name(Stability s) {
  switch (s) {
    case Stability::positive_stable: return "positive-stable";
    case Stability::negative_stable: return "negative-stable";
    case Stability::unstable: return "unstable";
    case Stability::degenerate: return "degenerate";
    case Stability::unclassified: return "unclassified";
  }
  return "unclassified";
}

// A Z-eigenpair under 2-norm normalization: T x^{m-1} = lambda x with
// ||x||_2 = 1 and x >= 0. The eigenvalue is scale-dependent for Z-pairs,
// so it is always reported at unit 2-norm.
struct ZEigenpair {
  DenseVector vector;
  double eigenvalue = 0.0;
  double residual = 0.0;
  Stability stability = Stability::unclassified;
};

struct ZecOptions {
  ZecAlgorithm algorithm = ZecAlgorithm::dynamical_systems;
  double alpha = 1.0;        // sshopm shift; any value above the convexity
                             // bound guarantees monotone convergence, larger
                             // values converge more slowly
  double step = 0.5;         // dynamical-systems Euler step, in (0, 1]
  double tol = 1e-8;         // successive-iterate 2-norm stopping tolerance
  long max_iters = 10000;
  double inner_tol = 1e-12;  // Perron-vector iteration tolerance
  long inner_max_iters = 100000;
  int restarts = 100;
  std::uint64_t seed = 0;
  double cluster_tol = 1e-4;     // 2-norm radius separating distinct pairs
  double stability_tol = 1e-8;   // threshold for eigenvalue sign tests
  bool classify = true;          // label stability of reported pairs
  int threads = 1;               // parallel restarts; results merge by index
};

// The distinct Z-eigenpairs found across random restarts. pairs[k] is the
// representative (smallest residual) of cluster k and counts[k] its
// multiplicity; counts sum to the number of accepted converged restarts.
// Converged pairs with an entry at the positivity floor are rejected,
// counted in rejected_boundary, and clustered separately for diagnostics.
struct ZecEnsemble {
  std::vector<ZEigenpair> pairs;
  std::vector<long> counts;
  std::vector<long> rep_iterations;
  std::size_t chosen = 0;
  long restarts = 0;
  long converged = 0;
  long rejected_boundary = 0;
  long failed = 0;
  std::vector<ZEigenpair> boundary_pairs;
  std::vector<long> boundary_counts;
};

struct ZecSolveOutcome {
  enum class Status { converged, max_iters_reached, inner_failure };
  Status status = Status::max_iters_reached;
  ZEigenpair pair;  // valid only when status == converged
  long iterations = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform draw in (0, 1]; never exactly zero so starts stay positive.
inline double uniform01(std::uint64_t& state) {
  return static_cast<double>((splitmix64(state) >> 11) + 1) * 0x1.0p-53;
}

inline DenseVector random_positive_unit(std::size_t n, std::uint64_t seed) {
  std::uint64_t s = seed;
  DenseVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = uniform01(s);
  return normalize_two_norm(x);
}

inline std::uint64_t restart_seed(std::uint64_t seed, long index) {
  return seed ^ (static_cast<std::uint64_t>(index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Unit Perron (dominant nonnegative) eigenvector of a nonnegative symmetric
// matrix by shifted power iteration. The shift removes the oscillation a
// +/- extreme eigenvalue pair would cause without changing eigenvectors.
inline bool perron_vector(const SparseSymmetricMatrix& M, DenseVector& v,
                          double tol, long max_iters) {
  const double row_bound = M.max_abs_row_sum();
  if (row_bound == 0.0) return false;
  const double shift = 0.25 * row_bound;

  for (long it = 0; it < max_iters; ++it) {
    DenseVector y = M.multiply(v);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift * v[i];
    const double nrm = norm2(y);
    if (nrm == 0.0) return false;
    for (double& t : y) t /= nrm;
    const double diff = distance2(y, v);
    v = std::move(y);
    if (diff <= tol) return true;
  }
  return false;
}

// One dynamical-systems solve: forward-Euler integration of
// dx/dt = Perron(T[x]) - x, renormalized to the unit sphere each step.
// A fixed point is a Z-eigenvector of the adjacency tensor.
inline ZecSolveOutcome solve_dynamical(const UniformHypergraph& h,
                                       const ContractionWorkspace& ws,
                                       const DenseVector& x0, const ZecOptions& opts) {
  ZecSolveOutcome out;
  DenseVector x = normalize_two_norm(x0);
  DenseVector perron = x;  // warm start for the inner iteration
  for (long it = 1; it <= opts.max_iters; ++it) {
    out.iterations = it;
    const SparseSymmetricMatrix tx = ws.contracted(x);
    if (!perron_vector(tx, perron, opts.inner_tol, opts.inner_max_iters)) {
      out.status = ZecSolveOutcome::Status::inner_failure;
      return out;
    }
    DenseVector next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      next[i] = x[i] + opts.step * (perron[i] - x[i]);
    next = normalize_two_norm(next);
    const double diff = distance2(next, x);
    x = std::move(next);
    if (diff <= opts.tol) {
      out.status = ZecSolveOutcome::Status::converged;
      break;
    }
  }
  if (out.status != ZecSolveOutcome::Status::converged) return out;

  const DenseVector y = tensor_apply(h, x);
  ZEigenpair pair;
  pair.eigenvalue = dot(x, y);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = y[i] - pair.eigenvalue * x[i];
    r += d * d;
  }
  pair.residual = std::sqrt(r);
  pair.vector = std::move(x);
  out.pair = std::move(pair);
  return out;
}

inline ZecSolveOutcome solve_sshopm(const UniformHypergraph& h, const DenseVector& x0,
                                    double alpha, const ZecOptions& opts) {
  ZecSolveOutcome out;
  DenseVector x = normalize_two_norm(x0);
  for (long it = 1; it <= opts.max_iters; ++it) {
    out.iterations = it;
    DenseVector y = tensor_apply(h, x);
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
    const double nrm = norm2(y);
    if (nrm == 0.0) {
      out.status = ZecSolveOutcome::Status::inner_failure;
      return out;
    }
    for (double& t : y) t /= nrm;
    const double diff = distance2(y, x);
    x = std::move(y);
    if (diff <= opts.tol) {
      out.status = ZecSolveOutcome::Status::converged;
      break;
    }
  }
  if (out.status != ZecSolveOutcome::Status::converged) return out;

  const DenseVector y = tensor_apply(h, x);
  ZEigenpair pair;
  pair.eigenvalue = dot(x, y);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = y[i] - pair.eigenvalue * x[i];
    r += d * d;
  }
  pair.residual = std::sqrt(r);
  pair.vector = std::move(x);
  out.pair = std::move(pair);
  return out;
}

// Extreme eigenvalues of A restricted to the complement of the unit vector
// x, where A(v) = (m-1) T[x] v - lambda v, computed matrix-free with
// projected shifted power iterations (no dense matrix is formed).
struct ProjectedExtremes {
  double min_eig = 0.0;
  double max_eig = 0.0;
};

inline ProjectedExtremes projected_extreme_eigenvalues(const SparseSymmetricMatrix& tx,
                                                       const DenseVector& x, double scale_m1,
                                                       double lambda) {
  const std::size_t n = x.size();
  const double bound = scale_m1 * tx.max_abs_row_sum() + std::abs(lambda);
  const double s = bound + 1.0;

  auto project = [&x](DenseVector& v) {
    const double c = dot(x, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * x[i];
  };
  auto apply_a = [&](const DenseVector& v) {
    DenseVector w = tx.multiply(v);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = scale_m1 * w[i] - lambda * v[i];
    return w;
  };

  auto dominant = [&](bool negate) {
    std::uint64_t st = 0x5DEECE66DULL + n;
    DenseVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = uniform01(st) - 0.5;
    project(v);
    if (norm2(v) < 1e-12) {
      // start collided with span(x); fall back to a coordinate direction
      for (std::size_t i = 0; i < n; ++i) v[i] = (i == 0) ? 1.0 : 0.0;
      project(v);
    }
    v = normalize_two_norm(v);
    double rayleigh = 0.0;
    int stable_checks = 0;
    for (long it = 0; it < 200000; ++it) {
      DenseVector pv = v;
      project(pv);
      DenseVector w = apply_a(pv);
      project(w);
      if (negate)
        for (std::size_t i = 0; i < n; ++i) w[i] = s * pv[i] - w[i];
      else
        for (std::size_t i = 0; i < n; ++i) w[i] = w[i] + s * pv[i];
      const double r = dot(v, w);
      const double nrm = norm2(w);
      if (nrm == 0.0) break;
      for (double& t : w) t /= nrm;
      v = std::move(w);
      if (std::abs(r - rayleigh) <= 1e-13 * s) {
        if (++stable_checks >= 3) {
          rayleigh = r;
          break;
        }
      } else {
        stable_checks = 0;
      }
      rayleigh = r;
    }
    return rayleigh;
  };

  ProjectedExtremes out;
  out.max_eig = dominant(false) - s;
  out.min_eig = s - dominant(true);
  return out;
}

inline Stability classify_from_extremes(const ProjectedExtremes& e, double tol) {
  if (std::abs(e.min_eig) <= tol || std::abs(e.max_eig) <= tol)
    return Stability::degenerate;
  if (e.min_eig > tol) return Stability::positive_stable;
  if (e.max_eig < -tol) return Stability::negative_stable;
  return Stability::unstable;
}

inline Stability classify_pair(const UniformHypergraph& h, const ContractionWorkspace& ws,
                               const ZEigenpair& pair, double tol) {
  if (h.num_nodes() < 2)
    throw std::invalid_argument("classify_stability: no orthogonal complement for n < 2");
  const DenseVector x = normalize_two_norm(pair.vector);
  const SparseSymmetricMatrix tx = ws.contracted(x);
  const auto extremes = projected_extreme_eigenvalues(
      tx, x, static_cast<double>(h.m() - 1), pair.eigenvalue);
  return classify_from_extremes(extremes, tol);
}

inline void check_options(const ZecOptions& opts) {
  if (!(opts.step > 0.0 && opts.step <= 1.0))
    throw std::invalid_argument("zec: step must lie in (0, 1]");
  if (opts.restarts < 1) throw std::invalid_argument("zec: restarts must be >= 1");
  if (!(opts.tol > 0.0) || !(opts.inner_tol > 0.0) || !(opts.cluster_tol > 0.0))
    throw std::invalid_argument("zec: tolerances must be positive");
  if (opts.alpha < 0.0) throw std::invalid_argument("zec: alpha must be >= 0");
}

}  // namespace detail

// Classifies a Z-eigenpair by the eigenvalue signs of the projected matrix
// U^T ((m-1) T[x] - lambda I) U with threshold tol: all below -tol is
// negative-stable, all above tol is positive-stable, mixed signs is
// unstable, and any eigenvalue within tol of zero is degenerate.
inline Stability classify_stability(const UniformHypergraph& h, const ZEigenpair& pair,
                                    double tol = 1e-8) {
  detail::ContractionWorkspace ws(h);
  return detail::classify_pair(h, ws, pair, tol);
}

// One Z-eigenpair solve with the dynamical-systems method from the given
// nonnegative start. The returned vector is nonnegative: for step <= 1 the
// dynamics keep the iterate inside the nonnegative cone.
inline ZecSolveOutcome zec_single(const UniformHypergraph& h, const DenseVector& x0,
                                  const ZecOptions& opts = {}) {
  detail::check_options(opts);
  if (!is_connected(h)) throw NotConnectedError("zec_single: hypergraph is not connected");
  detail::ContractionWorkspace ws(h);
  ZecSolveOutcome out = detail::solve_dynamical(h, ws, x0, opts);
  if (out.status == ZecSolveOutcome::Status::converged && opts.classify)
    out.pair.stability = detail::classify_pair(h, ws, out.pair, opts.stability_tol);
  return out;
}

// Shifted symmetric higher-order power method. Guaranteed to converge to
// some Z-eigenpair for a large enough shift, but only ever to a
// non-unstable one; unstable eigenvectors are unreachable.
inline ZecSolveOutcome sshopm(const UniformHypergraph& h, const DenseVector& x0,
                              double alpha, const ZecOptions& opts = {}) {
  detail::check_options(opts);
  if (!is_connected(h)) throw NotConnectedError("sshopm: hypergraph is not connected");
  ZecSolveOutcome out = detail::solve_sshopm(h, x0, alpha, opts);
  if (out.status == ZecSolveOutcome::Status::converged && opts.classify) {
    detail::ContractionWorkspace ws(h);
    out.pair.stability = detail::classify_pair(h, ws, out.pair, opts.stability_tol);
  }
  return out;
}

struct ZecComputation {
  CentralityResult result;
  ZecEnsemble ensemble;
};

// Z-eigenvector centrality with multi-restart mode selection: runs
// opts.restarts solves from seeded random positive starts, clusters the
// converged nonnegative pairs by 2-norm distance, and returns the modal
// cluster's representative renormalized to unit 1-norm. Any converged pair
// with an entry at or below the positivity floor 1e-12/n is rejected; the
// theory excludes boundary solutions on connected input.
inline ZecComputation zec(const UniformHypergraph& h, const ZecOptions& opts = {}) {
  detail::check_options(opts);
  if (!is_connected(h)) throw NotConnectedError("zec: hypergraph is not connected");

  const std::size_t n = h.num_nodes();
  const double positivity_floor = 1e-12 / static_cast<double>(n);
  detail::ContractionWorkspace ws(h);

  std::vector<ZecSolveOutcome> outcomes(opts.restarts);
  auto run_one = [&](long i) {
    const DenseVector x0 =
        detail::random_positive_unit(n, detail::restart_seed(opts.seed, i));
    outcomes[i] = opts.algorithm == ZecAlgorithm::dynamical_systems
                      ? detail::solve_dynamical(h, ws, x0, opts)
                      : detail::solve_sshopm(h, x0, opts.alpha, opts);
  };

  const int threads = std::max(1, opts.threads);
  if (threads == 1 || opts.restarts == 1) {
    for (long i = 0; i < opts.restarts; ++i) run_one(i);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (long i = next.fetch_add(1); i < opts.restarts; i = next.fetch_add(1)) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Merge in restart order so the ensemble is independent of thread timing.
  ZecEnsemble ens;
  ens.restarts = opts.restarts;
  for (long i = 0; i < opts.restarts; ++i) {
    ZecSolveOutcome& oc = outcomes[i];
    if (oc.status != ZecSolveOutcome::Status::converged) {
      ++ens.failed;
      continue;
    }
    double min_entry = oc.pair.vector.empty() ? 0.0 : oc.pair.vector[0];
    for (double v : oc.pair.vector) min_entry = std::min(min_entry, v);
    if (min_entry <= positivity_floor) {
      ++ens.rejected_boundary;
      bool placed = false;
      for (std::size_t k = 0; k < ens.boundary_pairs.size(); ++k) {
        if (distance2(oc.pair.vector, ens.boundary_pairs[k].vector) < opts.cluster_tol) {
          ++ens.boundary_counts[k];
          placed = true;
          break;
        }
      }
      if (!placed) {
        ens.boundary_pairs.push_back(std::move(oc.pair));
        ens.boundary_counts.push_back(1);
      }
      continue;
    }
    ++ens.converged;
    bool placed = false;
    for (std::size_t k = 0; k < ens.pairs.size(); ++k) {
      if (distance2(oc.pair.vector, ens.pairs[k].vector) < opts.cluster_tol) {
        ++ens.counts[k];
        if (oc.pair.residual < ens.pairs[k].residual) {
          ens.pairs[k] = std::move(oc.pair);
          ens.rep_iterations[k] = oc.iterations;
        }
        placed = true;
        break;
      }
    }
    if (!placed) {
      ens.pairs.push_back(std::move(oc.pair));
      ens.counts.push_back(1);
      ens.rep_iterations.push_back(oc.iterations);
    }
  }

  if (ens.converged + ens.rejected_boundary == 0)
    throw ConvergenceError("zec: no restart converged within max_iters");

  ZecComputation out;
  if (ens.pairs.empty()) {
    // Every converged restart hit the positivity floor: the solves only
    // found boundary (zero-entry) pairs, which are not valid centralities.
    // Report a non-converged result with the diagnostics attached.
    out.result.converged = false;
    out.ensemble = std::move(ens);
    return out;
  }

  for (std::size_t k = 1; k < ens.pairs.size(); ++k)
    if (ens.counts[k] > ens.counts[ens.chosen]) ens.chosen = k;

  if (opts.classify)
    for (ZEigenpair& p : ens.pairs)
      p.stability = detail::classify_pair(h, ws, p, opts.stability_tol);

  const ZEigenpair& rep = ens.pairs[ens.chosen];
  out.result.scores = normalize_one_norm(rep.vector);
  out.result.eigenvalue = rep.eigenvalue;
  out.result.residual = rep.residual;
  out.result.iterations = ens.rep_iterations[ens.chosen];
  out.result.converged = true;
  out.ensemble = std::move(ens);
  return out;
}

}  // namespace hyperc
