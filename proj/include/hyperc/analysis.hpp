#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperc/cec.hpp"
#include "hyperc/hypergraph.hpp"
#include "hyperc/vector_ops.hpp"

namespace hyperc {

namespace detail {

// Average (fractional) ranks, 1-based: tied values share the mean of the
// rank positions they occupy.
inline DenseVector average_ranks(const DenseVector& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  DenseVector ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace detail

// Spearman's rank correlation: Pearson correlation of average-ranked values.
// Perfectly concordant or discordant rankings return exactly +1 / -1.
inline double spearman(const DenseVector& x, const DenseVector& y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (n < 2) throw std::invalid_argument("spearman: need at least two entries");

  const DenseVector a = detail::average_ranks(x);
  const DenseVector b = detail::average_ranks(y);

  bool const_a = true, const_b = true;
  for (std::size_t i = 1; i < n; ++i) {
    const_a = const_a && a[i] == a[0];
    const_b = const_b && b[i] == b[0];
  }
  if (const_a || const_b)
    throw std::invalid_argument("spearman: undefined for a constant vector");

  bool identical = true, reversed = true;
  const double rsum = static_cast<double>(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    identical = identical && a[i] == b[i];
    reversed = reversed && a[i] + b[i] == rsum;
  }
  if (identical) return 1.0;
  if (reversed) return -1.0;

  const double mean = 0.5 * static_cast<double>(n + 1);  // ranks always sum to n(n+1)/2
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - mean;
    const double db = b[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  return sab / std::sqrt(saa * sbb);
}

// Per-k Spearman correlations between the top-k sub-vectors of two
// centralities. The reference method determines the node set.
struct RankComparison {
  std::string reference;
  std::string other;
  std::vector<std::pair<std::size_t, double>> points;  // (k, rho)
};

namespace detail {

// Indices of the k largest scores, descending, ties broken by node id.
inline std::vector<std::size_t> top_k_indices(const DenseVector& scores, std::size_t k) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&scores](std::size_t a, std::size_t b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  });
  order.resize(k);
  return order;
}

}  // namespace detail

inline RankComparison topk_correlation(const std::string& reference_name,
                                       const DenseVector& reference,
                                       const std::string& other_name,
                                       const DenseVector& other,
                                       const std::vector<std::size_t>& ks) {
  if (reference.size() != other.size())
    throw std::invalid_argument("topk_correlation: node universes differ");
  RankComparison out;
  out.reference = reference_name;
  out.other = other_name;
  for (std::size_t k : ks) {
    if (k < 2) throw std::invalid_argument("topk_correlation: k must be >= 2");
    if (k > reference.size())
      throw std::invalid_argument("topk_correlation: k exceeds the node count");
    const auto top = detail::top_k_indices(reference, k);
    DenseVector sub_ref(k), sub_other(k);
    for (std::size_t i = 0; i < k; ++i) {
      sub_ref[i] = reference[top[i]];
      sub_other[i] = other[top[i]];
    }
    out.points.emplace_back(k, spearman(sub_ref, sub_other));
  }
  return out;
}

inline RankComparison topk_correlation(const std::string& reference_name,
                                       const CentralityResult& reference,
                                       const std::string& other_name,
                                       const CentralityResult& other,
                                       const std::vector<std::size_t>& ks) {
  return topk_correlation(reference_name, reference.scores, other_name, other.scores, ks);
}

// {10, 20, 50, 100, 200, 500, 1000, n} clipped to n.
inline std::vector<std::size_t> default_k_grid(std::size_t n) {
  std::vector<std::size_t> grid;
  for (std::size_t k : {std::size_t{10}, std::size_t{20}, std::size_t{50}, std::size_t{100},
                        std::size_t{200}, std::size_t{500}, std::size_t{1000}}) {
    if (k >= 2 && k < n) grid.push_back(k);
  }
  if (n >= 2) grid.push_back(n);
  return grid;
}

// Per method, the labels of the k highest-scoring nodes in descending
// order, ties broken by node id. Methods appear in map (name) order.
struct TopTable {
  std::vector<std::string> methods;
  std::vector<std::vector<std::string>> rows;  // rows[r][m] = label
};

inline TopTable top_table(const std::map<std::string, DenseVector>& results,
                          const NodeLabelMap& labels, std::size_t k) {
  if (k < 1) throw std::invalid_argument("top_table: k must be >= 1");
  TopTable table;
  std::vector<std::vector<std::size_t>> columns;
  for (const auto& [name, scores] : results) {
    table.methods.push_back(name);
    columns.push_back(detail::top_k_indices(scores, std::min(k, scores.size())));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  table.rows.assign(rows, std::vector<std::string>(table.methods.size()));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t m = 0; m < columns.size(); ++m)
      table.rows[r][m] = labels.label(static_cast<NodeId>(columns[m][r]));
  return table;
}

inline std::string render_markdown(const TopTable& table) {
  std::string out = "| rank |";
  for (const auto& m : table.methods) out += " " + m + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < table.methods.size(); ++i) out += "---|";
  out += "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += "| " + std::to_string(r + 1) + " |";
    for (const auto& cell : table.rows[r]) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

}  // namespace hyperc
