#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperc/errors.hpp"
#include "hyperc/hypergraph.hpp"

namespace hyperc {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(std::move(tok));
  return out;
}

inline bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::string buf(s);
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

// Hyperedge-list text format:
//   line 1: "m n"
//   then one edge per line: m whitespace-separated 0-based node ids,
//   optionally followed by "#w:WEIGHT" (the weight may also be a separate
//   token after "#w:"). Lines starting with '%' are comments.
inline UniformHypergraph read_hypergraph(std::istream& in) {
  std::string line;
  std::size_t m = 0, n = 0;
  bool have_header = false;
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  bool any_weight = false;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '%') continue;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;

    if (!have_header) {
      std::uint64_t mv = 0, nv = 0;
      if (toks.size() != 2 || !detail::parse_u64(toks[0], mv) || !detail::parse_u64(toks[1], nv))
        throw ParseError("line " + std::to_string(lineno) + ": expected header \"m n\"");
      if (mv < 2) throw ParseError("line " + std::to_string(lineno) + ": uniformity m must be >= 2");
      if (mv > 64 || nv > 0xFFFFFFFFull)
        throw ParseError("line " + std::to_string(lineno) + ": implausible header \"m n\"");
      m = mv;
      n = nv;
      have_header = true;
      continue;
    }

    double w = 1.0;
    bool has_w = false;
    std::size_t id_count = toks.size();
    for (std::size_t k = 0; k < toks.size(); ++k) {
      if (toks[k].rfind("#w:", 0) == 0) {
        std::string_view rest(toks[k]);
        rest.remove_prefix(3);
        if (rest.empty()) {
          if (k + 1 >= toks.size() || !detail::parse_double(toks[k + 1], w))
            throw ParseError("line " + std::to_string(lineno) + ": missing weight after #w:");
        } else if (!detail::parse_double(rest, w)) {
          throw ParseError("line " + std::to_string(lineno) + ": bad weight \"" + toks[k] + "\"");
        }
        has_w = true;
        id_count = k;
        break;
      }
    }
    if (id_count != m)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                       " node ids, got " + std::to_string(id_count));
    std::vector<NodeId> e(m);
    for (std::size_t k = 0; k < m; ++k) {
      std::uint64_t v = 0;
      if (!detail::parse_u64(toks[k], v) || v > 0xFFFFFFFFull)
        throw ParseError("line " + std::to_string(lineno) + ": bad node id \"" + toks[k] + "\"");
      e[k] = static_cast<NodeId>(v);
    }
    edges.push_back(std::move(e));
    weights.push_back(w);
    any_weight = any_weight || has_w;
  }
  if (!have_header) throw ParseError("missing \"m n\" header line");
  if (!any_weight) weights.clear();
  return UniformHypergraph(m, n, std::move(edges), std::move(weights));
}

inline void write_hypergraph(std::ostream& out, const UniformHypergraph& h) {
  out << h.m() << ' ' << h.num_nodes() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) out << ' ';
      out << e[k];
    }
    if (h.weighted()) out << " #w:" << detail::format_double(h.weight(i));
    out << '\n';
  }
}

// Label file: one "id<TAB>label" per line.
inline void write_labels(std::ostream& out, const NodeLabelMap& labels) {
  for (NodeId i = 0; i < labels.size(); ++i)
    out << i << '\t' << labels.label(i) << '\n';
}

inline NodeLabelMap read_labels(std::istream& in) {
  NodeLabelMap labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("labels line " + std::to_string(lineno) + ": expected id<TAB>label");
    std::uint64_t id = 0;
    if (!detail::parse_u64(std::string_view(line).substr(0, tab), id))
      throw ParseError("labels line " + std::to_string(lineno) + ": bad id");
    if (id != labels.size())
      throw ParseError("labels line " + std::to_string(lineno) + ": ids must be dense and ascending");
    labels.add(line.substr(tab + 1));
  }
  return labels;
}

}  // namespace hyperc
