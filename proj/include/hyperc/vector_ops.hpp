#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperc {

// Centrality and eigenvector iterates are plain dense vectors indexed by node id.
using DenseVector = std::vector<double>;

inline double norm1(const DenseVector& x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s;
}

inline double norm2(const DenseVector& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double norm_inf(const DenseVector& x) {
  double s = 0.0;
  for (double v : x) s = std::max(s, std::abs(v));
  return s;
}

inline double dot(const DenseVector& x, const DenseVector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// x / ||x||_1 for nonnegative nonzero x.
inline DenseVector normalize_one_norm(const DenseVector& x) {
  double s = 0.0;
  for (double v : x) {
    if (v < 0.0) throw std::invalid_argument("normalize_one_norm: negative entry");
    s += v;
  }
  if (s == 0.0) throw std::invalid_argument("normalize_one_norm: zero vector");
  DenseVector out(x);
  for (double& v : out) v /= s;
  return out;
}

inline DenseVector normalize_two_norm(const DenseVector& x) {
  const double s = norm2(x);
  if (s == 0.0) throw std::invalid_argument("normalize_two_norm: zero vector");
  DenseVector out(x);
  for (double& v : out) v /= s;
  return out;
}

// Entry-wise power x^[p].
inline DenseVector entrywise_pow(const DenseVector& x, double p) {
  DenseVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], p);
  return out;
}

inline double distance2(const DenseVector& x, const DenseVector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double distance1(const DenseVector& x, const DenseVector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
  return s;
}

inline double distance_inf(const DenseVector& x, const DenseVector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s = std::max(s, std::abs(x[i] - y[i]));
  return s;
}

}  // namespace hyperc
