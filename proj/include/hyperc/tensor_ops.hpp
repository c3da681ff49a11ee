#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hyperc/hypergraph.hpp"
#include "hyperc/vector_ops.hpp"

namespace hyperc {

namespace detail {

inline double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

// Below this magnitude a factor is treated as zero and the product is
// recomputed by leave-one-out multiplication instead of division.
inline constexpr double kProductFloor = 1e-30;

}  // namespace detail

// Symmetric sparse matrix; each off-diagonal nonzero (i, j), i <= j, is
// stored once. Entries are sorted by (i, j).
class SparseSymmetricMatrix {
 public:
  struct Entry {
    NodeId i;
    NodeId j;
    double value;
  };

  SparseSymmetricMatrix() = default;
  SparseSymmetricMatrix(std::size_t n, std::vector<Entry> entries)
      : n_(n), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
  }

  std::size_t dimension() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }

  DenseVector multiply(const DenseVector& x) const {
    if (x.size() != n_)
      throw std::invalid_argument("SparseSymmetricMatrix::multiply: dimension mismatch");
    DenseVector y(n_, 0.0);
    for (const Entry& e : entries_) {
      y[e.i] += e.value * x[e.j];
      if (e.i != e.j) y[e.j] += e.value * x[e.i];
    }
    return y;
  }

  DenseVector row_sums() const {
    DenseVector s(n_, 0.0);
    for (const Entry& e : entries_) {
      s[e.i] += e.value;
      if (e.i != e.j) s[e.j] += e.value;
    }
    return s;
  }

  double max_abs_row_sum() const {
    DenseVector s(n_, 0.0);
    for (const Entry& e : entries_) {
      s[e.i] += std::abs(e.value);
      if (e.i != e.j) s[e.j] += std::abs(e.value);
    }
    return s.empty() ? 0.0 : *std::max_element(s.begin(), s.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Entry> entries_;
};

// y = T x^{m-1} for the implicit symmetric adjacency tensor: per node i,
// (m-1)! * sum over edges containing i of w_e * prod of x over the other
// m-1 nodes. Cost O(|E| * m).
inline DenseVector tensor_apply(const UniformHypergraph& h, const DenseVector& x) {
  const std::size_t n = h.num_nodes();
  const std::size_t m = h.m();
  if (x.size() != n) throw std::invalid_argument("apply: dimension mismatch");
  const double sym = detail::factorial(m - 1);

  DenseVector y(n, 0.0);
  std::vector<double> prefix(m + 1), suffix(m + 1);
  for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
    const auto e = h.edge(ei);
    const double w = sym * h.weight(ei);
    bool tiny = false;
    double full = 1.0;
    for (NodeId v : e) {
      const double xv = x[v];
      if (std::abs(xv) <= detail::kProductFloor) tiny = true;
      full *= xv;
    }
    if (!tiny) {
      for (NodeId v : e) y[v] += w * (full / x[v]);
    } else {
      // Leave-one-out via prefix/suffix products; avoids 0/0.
      prefix[0] = 1.0;
      for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * x[e[k]];
      suffix[m] = 1.0;
      for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] * x[e[k]];
      for (std::size_t k = 0; k < m; ++k) y[e[k]] += w * prefix[k] * suffix[k + 1];
    }
  }
  return y;
}

namespace detail {

// Reusable machinery for repeatedly evaluating T[x] on a fixed hypergraph:
// the sparsity pattern (one slot per node pair that co-occurs in an edge)
// is computed once and only the values are refilled per call.
class ContractionWorkspace {
 public:
  explicit ContractionWorkspace(const UniformHypergraph& h) : h_(&h) {
    const std::size_t m = h.m();
    if (m < 3)
      throw std::invalid_argument("contracted_matrix: requires m >= 3 (m = 2 is the matrix case)");
    const std::size_t n = h.num_nodes();
    std::unordered_map<std::uint64_t, std::size_t> slot_of_pair;
    slot_of_pair.reserve(h.num_edges() * m * (m - 1) / 2);
    edge_pair_slots_.reserve(h.num_edges() * m * (m - 1) / 2);
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
      const auto e = h.edge(ei);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          const std::uint64_t key =
              static_cast<std::uint64_t>(e[a]) * n + static_cast<std::uint64_t>(e[b]);
          auto [it, inserted] = slot_of_pair.emplace(key, pairs_.size());
          if (inserted) pairs_.push_back({e[a], e[b]});
          edge_pair_slots_.push_back(it->second);
        }
      }
    }
  }

  // T[x]_{ij} = (m-2)! * sum over edges containing {i,j} of
  // w_e * prod of x over the other m-2 nodes; zero diagonal.
  SparseSymmetricMatrix contracted(const DenseVector& x) const {
    const UniformHypergraph& h = *h_;
    const std::size_t m = h.m();
    if (x.size() != h.num_nodes())
      throw std::invalid_argument("contracted_matrix: dimension mismatch");
    const double sym = factorial(m - 2);

    std::vector<double> values(pairs_.size(), 0.0);
    std::size_t slot_cursor = 0;
    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
      const auto e = h.edge(ei);
      const double w = sym * h.weight(ei);
      bool tiny = false;
      double full = 1.0;
      for (NodeId v : e) {
        const double xv = x[v];
        if (std::abs(xv) <= kProductFloor) tiny = true;
        full *= xv;
      }
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          double prod;
          if (!tiny) {
            prod = full / (x[e[a]] * x[e[b]]);
          } else {
            prod = 1.0;
            for (std::size_t k = 0; k < m; ++k)
              if (k != a && k != b) prod *= x[e[k]];
          }
          values[edge_pair_slots_[slot_cursor++]] += w * prod;
        }
      }
    }

    std::vector<SparseSymmetricMatrix::Entry> entries;
    entries.reserve(pairs_.size());
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
      if (values[s] != 0.0)
        entries.push_back({pairs_[s].first, pairs_[s].second, values[s]});
    }
    return SparseSymmetricMatrix(h.num_nodes(), std::move(entries));
  }

 private:
  const UniformHypergraph* h_;
  std::vector<std::pair<NodeId, NodeId>> pairs_;
  std::vector<std::size_t> edge_pair_slots_;
};

}  // namespace detail

// The contracted matrix T[x] with (i,j) entry summing the tensor over all
// modes beyond the first two. Satisfies T[x] * x = tensor_apply(h, x).
inline SparseSymmetricMatrix contracted_matrix(const UniformHypergraph& h,
                                               const DenseVector& x) {
  return detail::ContractionWorkspace(h).contracted(x);
}

// Clique-motif matrix: W_{uv} = total weight of hyperedges containing both
// u and v, zero diagonal. Integer-valued counts for unweighted input.
inline SparseSymmetricMatrix motif_matrix(const UniformHypergraph& h) {
  const std::size_t n = h.num_nodes();
  const std::size_t m = h.m();
  std::unordered_map<std::uint64_t, double> acc;
  acc.reserve(h.num_edges() * m * (m - 1) / 2);
  for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
    const auto e = h.edge(ei);
    const double w = h.weight(ei);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        acc[static_cast<std::uint64_t>(e[a]) * n + e[b]] += w;
  }
  std::vector<SparseSymmetricMatrix::Entry> entries;
  entries.reserve(acc.size());
  for (const auto& [key, value] : acc) {
    if (value != 0.0)
      entries.push_back({static_cast<NodeId>(key / n), static_cast<NodeId>(key % n), value});
  }
  return SparseSymmetricMatrix(n, std::move(entries));
}

}  // namespace hyperc
