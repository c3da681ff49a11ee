#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "hyperc/errors.hpp"
#include "hyperc/hypergraph.hpp"
#include "hyperc/io.hpp"

namespace hyperc {

// One co-occurrence record (a question's tag set, a patient's drug
// combination, ...).
struct TransactionRecord {
  std::vector<std::string> items;
  long multiplicity = 1;
};

enum class TransactionMode {
  subsets,  // every size-m subset of each record becomes a hyperedge
  exact,    // a record becomes a hyperedge iff it has exactly m distinct items
};

enum class FrequencyColumn { automatic, none, first, last };

struct IngestOptions {
  bool weighted = false;     // accumulate per-set frequency as edge weight
  bool lowercase = false;    // ASCII-fold labels before mapping
  FrequencyColumn frequency = FrequencyColumn::automatic;
};

struct IngestReport {
  long total_lines = 0;
  long parsed = 0;
  long malformed = 0;           // wrong token count; recorded and skipped
  long dropped_repeated = 0;    // n-grams with fewer than m distinct words
  long duplicates_merged = 0;   // node sets seen more than once
  long records_deduped = 0;     // transaction records with repeated items
  long records_wrong_size = 0;  // exact mode: records whose size is not m
};

struct IngestResult {
  UniformHypergraph hypergraph;
  NodeLabelMap labels;
  IngestReport report;
};

namespace detail {

inline std::string fold_case(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct EdgeAccumulator {
  std::map<std::vector<NodeId>, double> edges;  // canonical (sorted) set -> weight
  long duplicates = 0;

  void add(std::vector<NodeId> ids, double weight) {
    std::sort(ids.begin(), ids.end());
    auto [it, inserted] = edges.try_emplace(std::move(ids), weight);
    if (!inserted) {
      it->second += weight;
      ++duplicates;
    }
  }

  UniformHypergraph build(std::size_t m, std::size_t n, bool weighted) const {
    std::vector<std::vector<NodeId>> edge_list;
    std::vector<double> weights;
    edge_list.reserve(edges.size());
    for (const auto& [ids, w] : edges) {
      edge_list.push_back(ids);
      if (weighted) weights.push_back(w);
    }
    return UniformHypergraph(m, n, std::move(edge_list), std::move(weights));
  }
};

}  // namespace detail

// Builds an m-uniform hypergraph from an n-gram list: one n-gram per line,
// m whitespace-separated words with an optional numeric frequency column
// before or after them. Word order is ignored; n-grams with fewer than m
// distinct words are dropped (counted in the report). Parsing aborts only
// if more than half of the non-blank lines are malformed.
inline IngestResult from_ngrams(std::istream& in, std::size_t m,
                                const IngestOptions& opts = {}) {
  if (m < 3) throw std::invalid_argument("from_ngrams: m must be >= 3");
  IngestResult out;
  detail::EdgeAccumulator acc;

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    ++out.report.total_lines;

    double freq = 1.0;
    std::size_t begin = 0, end = toks.size();
    bool ok = true;
    switch (opts.frequency) {
      case FrequencyColumn::none:
        ok = toks.size() == m;
        break;
      case FrequencyColumn::first:
        ok = toks.size() == m + 1 && detail::parse_double(toks.front(), freq);
        begin = 1;
        break;
      case FrequencyColumn::last:
        ok = toks.size() == m + 1 && detail::parse_double(toks.back(), freq);
        end = toks.size() - 1;
        break;
      case FrequencyColumn::automatic:
        if (toks.size() == m) {
          // all tokens are words
        } else if (toks.size() == m + 1 && detail::parse_double(toks.front(), freq)) {
          begin = 1;
        } else if (toks.size() == m + 1 && detail::parse_double(toks.back(), freq)) {
          end = toks.size() - 1;
        } else {
          ok = false;
        }
        break;
    }
    if (!ok) {
      ++out.report.malformed;
      continue;
    }

    std::vector<std::string> words;  // appearance order, deduplicated
    for (std::size_t k = begin; k < end; ++k) {
      std::string w = opts.lowercase ? detail::fold_case(toks[k]) : toks[k];
      if (std::find(words.begin(), words.end(), w) == words.end())
        words.push_back(std::move(w));
    }
    if (words.size() < m) {
      ++out.report.dropped_repeated;
      continue;
    }
    ++out.report.parsed;
    std::vector<NodeId> ids;
    ids.reserve(m);
    for (const auto& w : words) ids.push_back(out.labels.add(w));
    acc.add(std::move(ids), freq);
  }

  if (out.report.malformed * 2 > out.report.total_lines)
    throw ParseError("from_ngrams: more than half of the input lines are malformed (" +
                     std::to_string(out.report.malformed) + " of " +
                     std::to_string(out.report.total_lines) + ")");
  if (acc.edges.empty()) throw ParseError("from_ngrams: no edges");

  out.report.duplicates_merged = acc.duplicates;
  out.hypergraph = acc.build(m, out.labels.size(), opts.weighted);
  return out;
}

// Builds an m-uniform hypergraph from transaction records. In subsets mode
// every size-m subset of a record becomes a hyperedge; in exact mode only
// records with exactly m distinct items do.
inline IngestResult from_transactions(const std::vector<TransactionRecord>& records,
                                      std::size_t m, TransactionMode mode,
                                      const IngestOptions& opts = {}) {
  if (m < 3) throw std::invalid_argument("from_transactions: m must be >= 3");
  IngestResult out;
  detail::EdgeAccumulator acc;

  std::vector<NodeId> ids;
  for (const TransactionRecord& rec : records) {
    ++out.report.total_lines;
    std::vector<std::string> items;  // appearance order, deduplicated
    for (const auto& item : rec.items) {
      std::string folded = opts.lowercase ? detail::fold_case(item) : item;
      if (std::find(items.begin(), items.end(), folded) == items.end())
        items.push_back(std::move(folded));
    }
    if (items.size() != rec.items.size()) ++out.report.records_deduped;

    // only records that yield an edge contribute nodes, so the built
    // hypergraph never carries isolated nodes
    const bool qualifies = mode == TransactionMode::exact ? items.size() == m
                                                          : items.size() >= m;
    if (!qualifies) {
      ++out.report.records_wrong_size;
      continue;
    }
    ++out.report.parsed;

    const double freq = static_cast<double>(rec.multiplicity);
    ids.clear();
    for (const auto& item : items) ids.push_back(out.labels.add(item));

    if (mode == TransactionMode::exact) {
      acc.add(ids, freq);
    } else {
      // Enumerate all size-m subsets of the record.
      std::vector<std::size_t> pick(m);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      while (true) {
        std::vector<NodeId> subset(m);
        for (std::size_t k = 0; k < m; ++k) subset[k] = ids[pick[k]];
        acc.add(std::move(subset), freq);
        std::size_t k = m;
        while (k > 0 && pick[k - 1] == ids.size() - m + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < m; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  if (acc.edges.empty()) throw ParseError("from_transactions: no edges");
  out.report.duplicates_merged = acc.duplicates;
  out.hypergraph = acc.build(m, out.labels.size(), opts.weighted);
  return out;
}

// Parses one transaction record per line, items separated by commas or by
// whitespace.
inline std::vector<TransactionRecord> read_transactions(std::istream& in,
                                                        bool comma_separated) {
  std::vector<TransactionRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    TransactionRecord rec;
    if (comma_separated) {
      const auto trim = [](const std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
      };
      std::size_t pos = 0;
      while (pos <= line.size()) {
        const auto comma = line.find(',', pos);
        const auto piece = trim(line.substr(pos, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - pos));
        if (!piece.empty()) rec.items.push_back(piece);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      rec.items = detail::split_ws(line);
    }
    if (!rec.items.empty()) records.push_back(std::move(rec));
  }
  return records;
}

struct PreparedHypergraph {
  UniformHypergraph hypergraph;  // the largest connected component
  NodeLabelMap labels;
  std::vector<std::int64_t> old_to_new;
  std::size_t original_nodes = 0;
  std::size_t original_edges = 0;
};

// Restricts to the largest connected component; the summary statistics of
// the result (node count and edge count = nnz(T) / m!) are what dataset
// tables report.
inline PreparedHypergraph prepare(const UniformHypergraph& h, const NodeLabelMap& labels) {
  PreparedHypergraph out;
  out.original_nodes = h.num_nodes();
  out.original_edges = h.num_edges();
  LargestComponent lcc = largest_component(h, labels);
  out.hypergraph = std::move(lcc.hypergraph);
  out.labels = std::move(lcc.labels);
  out.old_to_new = std::move(lcc.old_to_new);
  return out;
}

inline double symmetry_count(std::size_t m) {
  double f = 1.0;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace hyperc
