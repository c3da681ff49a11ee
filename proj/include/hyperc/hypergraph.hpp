#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyperc/errors.hpp"

namespace hyperc {

using NodeId = std::uint32_t;

// An m-uniform hypergraph on nodes 0..n-1. Each hyperedge is a set of m
// distinct nodes, stored once as a strictly ascending id list; the order-m
// symmetric adjacency tensor is never materialized (each stored edge stands
// for the m! symmetric nonzeros it induces). Optional per-edge weights;
// an empty weight vector means every edge has weight 1.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;

  UniformHypergraph(std::size_t m, std::size_t n,
                    std::vector<std::vector<NodeId>> edges,
                    std::vector<double> weights = {})
      : m_(m), n_(n), weights_(std::move(weights)) {
    edge_nodes_.reserve(edges.size() * m);
    num_edges_ = edges.size();
    for (auto& e : edges) {
      if (e.size() != m)
        throw std::invalid_argument("UniformHypergraph: edge with " +
                                    std::to_string(e.size()) + " nodes in a " +
                                    std::to_string(m) + "-uniform hypergraph");
      std::sort(e.begin(), e.end());
      edge_nodes_.insert(edge_nodes_.end(), e.begin(), e.end());
    }
  }

  std::size_t m() const { return m_; }
  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return num_edges_; }
  bool weighted() const { return !weights_.empty(); }

  std::span<const NodeId> edge(std::size_t i) const {
    return {edge_nodes_.data() + i * m_, m_};
  }
  double weight(std::size_t i) const { return weights_.empty() ? 1.0 : weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

  double total_weight() const {
    if (weights_.empty()) return static_cast<double>(num_edges_);
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
  }

  double max_weight() const {
    if (weights_.empty()) return num_edges_ > 0 ? 1.0 : 0.0;
    return *std::max_element(weights_.begin(), weights_.end());
  }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<NodeId> edge_nodes_;  // flat, m_ ids per edge, each edge ascending
  std::vector<double> weights_;     // empty => unweighted
};

// Bijective label <-> dense node id map.
class NodeLabelMap {
 public:
  NodeLabelMap() = default;

  static NodeLabelMap identity(std::size_t n) {
    NodeLabelMap m;
    for (std::size_t i = 0; i < n; ++i) m.add(std::to_string(i));
    return m;
  }

  // Returns the id of `label`, inserting it at the next free id if new.
  NodeId add(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    const NodeId id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, id);
    return id;
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(NodeId id) const { return labels_.at(id); }
  bool contains(const std::string& label) const { return ids_.count(label) > 0; }
  NodeId id(const std::string& label) const { return ids_.at(label); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

struct Violation {
  enum class Kind {
    bad_uniformity,       // m < 2
    out_of_range_id,      // node id >= n
    repeated_node,        // node repeated within an edge
    duplicate_edge,       // same node set appears twice
    nonpositive_weight,   // weight <= 0
    weight_count_mismatch // weights present but not 1:1 with edges
  };
  Kind kind;
  std::size_t edge_index;  // which edge (unused for global violations)
  std::string message;
};

// Checks every structural invariant and reports all violations found.
// Violations are data, not failures; an empty result means the hypergraph
// is valid.
inline std::vector<Violation> validate(const UniformHypergraph& h) {
  std::vector<Violation> out;
  if (h.m() < 2) {
    out.push_back({Violation::Kind::bad_uniformity, 0,
                   "uniformity m must be at least 2, got " + std::to_string(h.m())});
  }
  if (h.weighted() && h.weights().size() != h.num_edges()) {
    out.push_back({Violation::Kind::weight_count_mismatch, 0,
                   "weights are not aligned 1:1 with edges"});
  }
  std::unordered_map<std::string, std::size_t> seen;
  seen.reserve(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    bool in_range = true;
    for (NodeId v : e) {
      if (v >= h.num_nodes()) {
        out.push_back({Violation::Kind::out_of_range_id, i,
                       "edge " + std::to_string(i) + ": node id " + std::to_string(v) +
                           " out of range [0, " + std::to_string(h.num_nodes()) + ")"});
        in_range = false;
      }
    }
    bool repeated = false;
    for (std::size_t k = 1; k < e.size(); ++k) {
      if (e[k] == e[k - 1]) repeated = true;
    }
    if (repeated) {
      out.push_back({Violation::Kind::repeated_node, i,
                     "edge " + std::to_string(i) + ": repeated node within edge"});
    }
    if (in_range && !repeated) {
      std::string key;
      for (NodeId v : e) {
        key += std::to_string(v);
        key += ',';
      }
      auto [it, inserted] = seen.emplace(std::move(key), i);
      if (!inserted) {
        out.push_back({Violation::Kind::duplicate_edge, i,
                       "edge " + std::to_string(i) + " duplicates edge " +
                           std::to_string(it->second) + " (as a node set)"});
      }
    }
    if (h.weighted() && i < h.weights().size() && h.weights()[i] <= 0.0) {
      out.push_back({Violation::Kind::nonpositive_weight, i,
                     "edge " + std::to_string(i) + ": nonpositive weight"});
    }
  }
  return out;
}

namespace detail {

// Union-find over nodes, merging every pair that co-occurs in a hyperedge
// (the clique-expansion graph has the same components).
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }
  NodeId find(NodeId a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint8_t> rank_;
};

inline DisjointSet clique_components(const UniformHypergraph& h) {
  DisjointSet ds(h.num_nodes());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t k = 1; k < e.size(); ++k) ds.unite(e[0], e[k]);
  }
  return ds;
}

}  // namespace detail

// True iff the clique-expansion graph is connected and every node of
// [0, n) appears in at least one hyperedge. Isolated nodes make the
// centrality equations degenerate, so they count as disconnection.
inline bool is_connected(const UniformHypergraph& h) {
  const std::size_t n = h.num_nodes();
  if (n == 0 || h.num_edges() == 0) return false;
  std::vector<char> covered(n, 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (NodeId v : h.edge(i)) covered[v] = 1;
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;

  auto ds = detail::clique_components(h);
  const NodeId root = ds.find(0);
  for (NodeId v = 1; v < n; ++v)
    if (ds.find(v) != root) return false;
  return true;
}

struct LargestComponent {
  UniformHypergraph hypergraph;
  NodeLabelMap labels;
  // old_to_new[v] is the new id of original node v, or -1 if dropped.
  std::vector<std::int64_t> old_to_new;
};

// Restricts the hypergraph to the node set L of the largest component of the
// clique-expansion graph, keeping exactly the hyperedges entirely inside L.
// Isolated nodes form singleton components. Ties between equal-size
// components go to the one with the smallest member id; surviving node ids
// are re-densified in ascending original order.
inline LargestComponent largest_component(const UniformHypergraph& h,
                                          const NodeLabelMap& labels) {
  const std::size_t n = h.num_nodes();
  if (n == 0) throw std::invalid_argument("largest_component: empty hypergraph");

  auto ds = detail::clique_components(h);
  std::vector<std::size_t> size_of_root(n, 0);
  for (NodeId v = 0; v < n; ++v) ++size_of_root[ds.find(v)];

  // Smallest root id wins ties because find() roots are reached from the
  // smallest member first only by accident; compare (size, min member id).
  std::vector<NodeId> min_member(n, static_cast<NodeId>(n));
  for (NodeId v = 0; v < n; ++v) {
    const NodeId r = ds.find(v);
    min_member[r] = std::min(min_member[r], v);
  }
  NodeId best_root = ds.find(0);
  for (NodeId v = 0; v < n; ++v) {
    const NodeId r = ds.find(v);
    if (size_of_root[r] > size_of_root[best_root] ||
        (size_of_root[r] == size_of_root[best_root] &&
         min_member[r] < min_member[best_root])) {
      best_root = r;
    }
  }

  LargestComponent out;
  out.old_to_new.assign(n, -1);
  NodeId next = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (ds.find(v) == best_root) {
      out.old_to_new[v] = next++;
      if (labels.size() == n)
        out.labels.add(labels.label(v));
      else
        out.labels.add(std::to_string(v));
    }
  }

  std::vector<std::vector<NodeId>> kept_edges;
  std::vector<double> kept_weights;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    bool inside = true;
    for (NodeId v : e)
      if (out.old_to_new[v] < 0) inside = false;
    if (!inside) continue;
    std::vector<NodeId> remapped(e.size());
    for (std::size_t k = 0; k < e.size(); ++k)
      remapped[k] = static_cast<NodeId>(out.old_to_new[e[k]]);
    kept_edges.push_back(std::move(remapped));
    if (h.weighted()) kept_weights.push_back(h.weight(i));
  }
  out.hypergraph = UniformHypergraph(h.m(), next, std::move(kept_edges),
                                     std::move(kept_weights));
  return out;
}

}  // namespace hyperc
