// Command-line front end: builds hypergraphs from raw data, computes the
// three eigenvector centralities, and compares rankings.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperc/hyperc.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hyperc;

namespace {

// Stable exit codes: 0 ok, 2 I/O, 3 connectivity, 4 convergence,
// 5 input mismatch. Usage errors exit 1.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitConnectivity = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitMismatch = 5;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

UniformHypergraph load_hypergraph(const std::string& path) {
  if (path == "-") return read_hypergraph(std::cin);
  auto in = open_input(path);
  return read_hypergraph(in);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

// Minimal RFC-4180 line splitter (enough for our own output).
std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

struct RunRecorder {
  std::string command;
  std::vector<std::string> argv;
  json options = json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  void write(const fs::path& dir) const {
    json j;
    j["version"] = version();
    j["command"] = command;
    j["argv"] = argv;
    j["options"] = options;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    auto out = open_output(dir / "run.json");
    out << j.dump(2) << '\n';
  }
};

int dispatch(const std::vector<std::string>& args);

// ---------------------------------------------------------------- sunflower

int cmd_sunflower(std::size_t m, std::size_t r, const std::string& out_path) {
  const UniformHypergraph h = sunflower(m, r);
  if (out_path.empty() || out_path == "-") {
    write_hypergraph(std::cout, h);
  } else {
    auto out = open_output(out_path);
    write_hypergraph(out, h);
  }
  return kExitOk;
}

// ------------------------------------------------------------------ fixture

int cmd_fixture(const std::string& out_path, const std::string& eigenpair_path) {
  auto [h, pair] = example_unstable_fixture();
  if (out_path.empty() || out_path == "-") {
    write_hypergraph(std::cout, h);
  } else {
    auto out = open_output(out_path);
    write_hypergraph(out, h);
  }
  if (!eigenpair_path.empty()) {
    json j;
    j["eigenvalue"] = pair.eigenvalue;
    j["residual"] = pair.residual;
    j["vector"] = pair.vector;
    auto out = open_output(eigenpair_path);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------------- build

struct BuildArgs {
  std::string from;  // "ngrams" | "transactions"
  std::size_t m = 3;
  std::string mode = "subsets";
  std::string freq_col = "auto";
  bool weighted = false;
  bool lowercase = false;
  bool comma = false;
  std::string input;
  std::string out_dir;
  std::vector<std::string> argv;
};

int cmd_build(const BuildArgs& a) {
  IngestOptions opts;
  opts.weighted = a.weighted;
  opts.lowercase = a.lowercase;
  if (a.freq_col == "auto") opts.frequency = FrequencyColumn::automatic;
  else if (a.freq_col == "none") opts.frequency = FrequencyColumn::none;
  else if (a.freq_col == "first") opts.frequency = FrequencyColumn::first;
  else if (a.freq_col == "last") opts.frequency = FrequencyColumn::last;
  else throw CLI::ValidationError("--freq-col must be auto|none|first|last");

  IngestResult ingested;
  if (a.from == "ngrams") {
    if (a.input == "-") {
      ingested = from_ngrams(std::cin, a.m, opts);
    } else {
      auto in = open_input(a.input);
      ingested = from_ngrams(in, a.m, opts);
    }
  } else if (a.from == "transactions") {
    std::vector<TransactionRecord> records;
    if (a.input == "-") {
      records = read_transactions(std::cin, a.comma);
    } else {
      auto in = open_input(a.input);
      records = read_transactions(in, a.comma);
    }
    const TransactionMode mode =
        a.mode == "exact" ? TransactionMode::exact : TransactionMode::subsets;
    ingested = from_transactions(records, a.m, mode, opts);
  } else {
    throw CLI::ValidationError("--from must be ngrams or transactions");
  }

  const PreparedHypergraph prep = prepare(ingested.hypergraph, ingested.labels);

  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  {
    auto out = open_output(dir / "hypergraph.hg");
    write_hypergraph(out, prep.hypergraph);
  }
  {
    auto out = open_output(dir / "labels.tsv");
    write_labels(out, prep.labels);
  }
  {
    json stats;
    stats["m"] = a.m;
    stats["nodes"] = prep.hypergraph.num_nodes();
    stats["edges"] = prep.hypergraph.num_edges();
    stats["nnz_divisor"] = symmetry_count(a.m);
    stats["nnz_over_divisor"] = prep.hypergraph.num_edges();
    stats["original_nodes"] = prep.original_nodes;
    stats["original_edges"] = prep.original_edges;
    json rep;
    rep["total_lines"] = ingested.report.total_lines;
    rep["parsed"] = ingested.report.parsed;
    rep["malformed"] = ingested.report.malformed;
    rep["dropped_repeated"] = ingested.report.dropped_repeated;
    rep["duplicates_merged"] = ingested.report.duplicates_merged;
    rep["records_deduped"] = ingested.report.records_deduped;
    rep["records_wrong_size"] = ingested.report.records_wrong_size;
    stats["ingest"] = rep;
    auto out = open_output(dir / "stats.json");
    out << stats.dump(2) << '\n';
  }

  RunRecorder rec;
  rec.command = "build";
  rec.argv = a.argv;
  rec.options = {{"from", a.from},         {"m", a.m},
                 {"mode", a.mode},         {"freq_col", a.freq_col},
                 {"weighted", a.weighted}, {"lowercase", a.lowercase},
                 {"comma", a.comma}};
  rec.inputs = {a.input};
  rec.outputs = {"hypergraph.hg", "labels.tsv", "stats.json"};
  rec.write(dir);
  return kExitOk;
}

// --------------------------------------------------------------- centrality

struct CentralityArgs {
  std::string methods = "cec,zec,hec";
  bool lcc = false;
  std::string labels_path;
  double tol = -1.0;       // <0: per-method default
  long max_iters = -1;     // <0: per-method default
  std::string algorithm = "dynamical-systems";
  double step = 0.5;
  double alpha = 1.0;
  int restarts = 100;
  std::uint64_t seed = 0;
  double cluster_tol = 1e-4;
  int threads = 0;  // 0: HYPERC_THREADS or 1
  bool deterministic = false;
  bool no_classify = false;
  std::string input;
  std::string out_dir;
  std::vector<std::string> argv;
};

void write_centrality_csv(const fs::path& path, const DenseVector& scores,
                          const NodeLabelMap& labels) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&scores](std::size_t a, std::size_t b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  });
  auto out = open_output(path);
  out << "node_id,label,score\n";
  for (std::size_t i : order) {
    out << i << ',' << csv_quote(labels.label(static_cast<NodeId>(i))) << ','
        << hyperc::detail::format_double(scores[i]) << '\n';
  }
}

json cluster_to_json(const ZEigenpair& p, long count) {
  json c;
  c["eigenvalue"] = p.eigenvalue;
  c["multiplicity"] = count;
  c["residual"] = p.residual;
  c["stability"] = stability_name(p.stability);
  return c;
}

int cmd_centrality(const CentralityArgs& a) {
  UniformHypergraph h = load_hypergraph(a.input);
  {
    const auto violations = validate(h);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "invalid hypergraph: " << v.message << '\n';
      return kExitIo;
    }
  }

  NodeLabelMap labels;
  if (!a.labels_path.empty()) {
    auto in = open_input(a.labels_path);
    labels = read_labels(in);
    if (labels.size() != h.num_nodes())
      throw MismatchError("label file has " + std::to_string(labels.size()) +
                          " entries for " + std::to_string(h.num_nodes()) + " nodes");
  } else {
    labels = NodeLabelMap::identity(h.num_nodes());
  }

  if (a.lcc) {
    PreparedHypergraph prep = prepare(h, labels);
    h = std::move(prep.hypergraph);
    labels = std::move(prep.labels);
  } else if (!is_connected(h)) {
    std::cerr << "hypergraph is not connected; pass --lcc to analyze the largest "
                 "connected component\n";
    return kExitConnectivity;
  }

  std::vector<std::string> methods;
  {
    std::stringstream ss(a.methods);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok != "cec" && tok != "zec" && tok != "hec")
        throw CLI::ValidationError("--method entries must be cec, zec, or hec");
      if (std::find(methods.begin(), methods.end(), tok) == methods.end())
        methods.push_back(tok);
    }
    if (methods.empty()) throw CLI::ValidationError("--method must name at least one method");
  }

  int threads = a.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("HYPERC_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = 1;
  }

  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  std::vector<std::string> outputs;
  bool any_nonconverged = false;

  for (const std::string& method : methods) {
    json sidecar;
    sidecar["method"] = method;
    sidecar["m"] = h.m();
    sidecar["nodes"] = h.num_nodes();
    sidecar["edges"] = h.num_edges();

    CentralityResult result;
    std::optional<ZecEnsemble> ensemble;
    if (method == "cec") {
      result = cec(h, a.tol > 0 ? a.tol : 1e-10, a.max_iters > 0 ? a.max_iters : 100000);
    } else if (method == "hec") {
      result = hec(h, a.tol > 0 ? a.tol : 1e-10, a.max_iters > 0 ? a.max_iters : 10000);
    } else {
      ZecOptions opts;
      opts.algorithm = a.algorithm == "sshopm" ? ZecAlgorithm::sshopm
                                               : ZecAlgorithm::dynamical_systems;
      opts.alpha = a.alpha;
      opts.step = a.step;
      if (a.tol > 0) opts.tol = a.tol;
      if (a.max_iters > 0) opts.max_iters = a.max_iters;
      opts.restarts = a.restarts;
      opts.seed = a.seed;
      opts.cluster_tol = a.cluster_tol;
      opts.classify = !a.no_classify;
      opts.threads = threads;
      ZecComputation comp = zec(h, opts);
      result = std::move(comp.result);
      ensemble = std::move(comp.ensemble);
    }

    sidecar["converged"] = result.converged;
    sidecar["eigenvalue"] = result.eigenvalue;
    sidecar["residual"] = result.residual;
    sidecar["iterations"] = result.iterations;
    if (ensemble) {
      json e;
      e["restarts"] = ensemble->restarts;
      e["converged"] = ensemble->converged;
      e["rejected_boundary"] = ensemble->rejected_boundary;
      e["failed"] = ensemble->failed;
      e["chosen"] = ensemble->chosen;
      e["clusters"] = json::array();
      for (std::size_t k = 0; k < ensemble->pairs.size(); ++k)
        e["clusters"].push_back(cluster_to_json(ensemble->pairs[k], ensemble->counts[k]));
      e["boundary_clusters"] = json::array();
      for (std::size_t k = 0; k < ensemble->boundary_pairs.size(); ++k)
        e["boundary_clusters"].push_back(
            cluster_to_json(ensemble->boundary_pairs[k], ensemble->boundary_counts[k]));
      sidecar["ensemble"] = e;
    }

    {
      auto out = open_output(dir / (method + ".json"));
      out << sidecar.dump(2) << '\n';
    }
    outputs.push_back(method + ".json");

    if (result.converged) {
      write_centrality_csv(dir / (method + ".csv"), result.scores, labels);
      outputs.push_back(method + ".csv");
    } else {
      any_nonconverged = true;
      std::cerr << method << ": did not converge; partial sidecar written\n";
    }
  }

  RunRecorder rec;
  rec.command = "centrality";
  rec.argv = a.argv;
  rec.options = {{"methods", a.methods},
                 {"lcc", a.lcc},
                 {"labels", a.labels_path},
                 {"tol", a.tol},
                 {"max_iters", a.max_iters},
                 {"algorithm", a.algorithm},
                 {"step", a.step},
                 {"alpha", a.alpha},
                 {"restarts", a.restarts},
                 {"seed", a.seed},
                 {"cluster_tol", a.cluster_tol},
                 {"threads", threads},
                 {"deterministic", a.deterministic},
                 {"classify", !a.no_classify}};
  rec.inputs = {a.input};
  rec.outputs = outputs;
  rec.write(dir);
  return any_nonconverged ? kExitConvergence : kExitOk;
}

// ------------------------------------------------------------------ compare

struct CompareArgs {
  std::vector<std::string> csv_paths;
  std::size_t table_k = 10;
  std::string ks_spec;
  std::string out_dir;
  std::vector<std::string> argv;
};

struct LoadedCentrality {
  std::string name;
  DenseVector scores;
  std::vector<std::string> labels;  // by node id
};

LoadedCentrality read_centrality_csv(const std::string& path) {
  LoadedCentrality out;
  out.name = fs::path(path).stem().string();
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty centrality file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "node_id,label,score")
    throw hyperc::ParseError(path + ": expected header node_id,label,score");
  std::vector<std::pair<std::size_t, std::pair<std::string, double>>> rows;
  std::size_t max_id = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = csv_split(line);
    if (fields.size() != 3) throw hyperc::ParseError(path + ": bad row: " + line);
    std::uint64_t id = 0;
    double score = 0.0;
    if (!hyperc::detail::parse_u64(fields[0], id) ||
        !hyperc::detail::parse_double(fields[2], score))
      throw hyperc::ParseError(path + ": bad row: " + line);
    rows.push_back({id, {fields[1], score}});
    max_id = std::max(max_id, static_cast<std::size_t>(id));
  }
  if (rows.empty()) throw hyperc::ParseError(path + ": no rows");
  out.scores.assign(max_id + 1, 0.0);
  out.labels.assign(max_id + 1, std::string());
  std::vector<char> seen(max_id + 1, 0);
  for (auto& [id, rest] : rows) {
    if (seen[id]) throw hyperc::ParseError(path + ": duplicate node id " + std::to_string(id));
    seen[id] = 1;
    out.labels[id] = rest.first;
    out.scores[id] = rest.second;
  }
  for (std::size_t i = 0; i <= max_id; ++i)
    if (!seen[i]) throw hyperc::ParseError(path + ": node ids are not dense (missing " +
                                           std::to_string(i) + ")");
  return out;
}

int cmd_compare(const CompareArgs& a) {
  if (a.csv_paths.size() < 2)
    throw CLI::ValidationError("compare needs at least two centrality CSV files");

  std::vector<LoadedCentrality> loaded;
  for (const auto& p : a.csv_paths) loaded.push_back(read_centrality_csv(p));
  // cross-run comparisons may bring files with the same stem
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (loaded[j].name == loaded[i].name)
        loaded[i].name += "_" + std::to_string(i + 1);
    }
  }

  const std::size_t n = loaded.front().scores.size();
  for (const auto& lc : loaded) {
    if (lc.scores.size() != n)
      throw MismatchError(lc.name + ": node universe differs (" +
                          std::to_string(lc.scores.size()) + " vs " + std::to_string(n) +
                          " nodes)");
    if (lc.labels != loaded.front().labels)
      throw MismatchError(lc.name + ": node labels differ from " + loaded.front().name);
  }

  std::vector<std::size_t> ks;
  if (a.ks_spec.empty()) {
    ks = default_k_grid(n);
  } else {
    std::stringstream ss(a.ks_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::uint64_t k = 0;
      if (!hyperc::detail::parse_u64(tok, k))
        throw CLI::ValidationError("--ks must be a comma list of integers");
      if (k >= 2 && k <= n) ks.push_back(k);
    }
    if (ks.empty()) throw CLI::ValidationError("--ks produced no usable k values");
  }

  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  {
    auto out = open_output(dir / "topk_correlations.csv");
    out << "k,reference,other,rho\n";
    for (const auto& ref : loaded) {
      for (const auto& other : loaded) {
        if (&ref == &other) continue;
        for (std::size_t k : ks) {
          try {
            const RankComparison rc =
                topk_correlation(ref.name, ref.scores, other.name, other.scores, {k});
            out << k << ',' << csv_quote(rc.reference) << ',' << csv_quote(rc.other)
                << ',' << hyperc::detail::format_double(rc.points[0].second) << '\n';
          } catch (const std::invalid_argument& e) {
            // a constant sub-vector makes the coefficient undefined; omit
            // the row rather than abort the whole comparison
            std::cerr << "warning: " << ref.name << " vs " << other.name << " at k="
                      << k << ": " << e.what() << " (row omitted)\n";
          }
        }
      }
    }
  }
  {
    NodeLabelMap labels;
    for (const auto& l : loaded.front().labels) labels.add(l);
    std::map<std::string, DenseVector> by_method;
    for (const auto& lc : loaded) by_method[lc.name] = lc.scores;
    const TopTable table = top_table(by_method, labels, std::min(a.table_k, n));
    auto out = open_output(dir / "top_table.md");
    out << render_markdown(table);
  }

  RunRecorder rec;
  rec.command = "compare";
  rec.argv = a.argv;
  rec.options = {{"k", a.table_k}, {"ks", a.ks_spec}};
  rec.inputs = a.csv_paths;
  rec.outputs = {"topk_correlations.csv", "top_table.md"};
  rec.write(dir);
  return kExitOk;
}

// -------------------------------------------------------------------- rerun

int cmd_rerun(const std::string& run_json_path, const std::string& out_override) {
  auto in = open_input(run_json_path);
  json j;
  in >> j;
  if (!j.contains("argv") || !j["argv"].is_array())
    throw IoError(run_json_path + ": missing argv");
  std::vector<std::string> args;
  for (const auto& item : j["argv"]) args.push_back(item.get<std::string>());
  if (!out_override.empty()) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if ((args[i] == "-o" || args[i] == "--out") && i + 1 < args.size())
        args[i + 1] = out_override;
      else if (args[i].rfind("--out=", 0) == 0)
        args[i] = "--out=" + out_override;
      else if (args[i].rfind("-o=", 0) == 0)
        args[i] = "-o=" + out_override;
    }
  }
  return dispatch(args);
}

// ----------------------------------------------------------------- dispatch

// Absolute path for reproducible run.json records.
std::string absolute_path(const std::string& p) {
  if (p == "-" || p.empty()) return p;
  std::error_code ec;
  const fs::path abs = fs::absolute(p, ec);
  return ec ? p : abs.string();
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Eigenvector centralities (CEC, ZEC, HEC) for m-uniform hypergraphs"};
  app.require_subcommand(1);

  // build
  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build a hypergraph from raw data");
  build->add_option("--from", build_args.from, "Input style: ngrams | transactions")
      ->required();
  build->add_option("--m", build_args.m, "Uniformity m (>= 3)")->required();
  build->add_option("--mode", build_args.mode, "transactions: subsets | exact");
  build->add_option("--freq-col", build_args.freq_col,
                    "ngrams frequency column: auto | none | first | last");
  build->add_flag("--weighted", build_args.weighted,
                  "accumulate frequencies as edge weights");
  build->add_flag("--lowercase", build_args.lowercase, "ASCII-lowercase labels");
  build->add_flag("--comma", build_args.comma,
                  "transactions: items are comma-separated (default whitespace)");
  build->add_option("input", build_args.input, "input file, or - for stdin")->required();
  build->add_option("-o,--out", build_args.out_dir, "output directory")->required();

  // sunflower
  std::size_t sun_m = 0, sun_r = 0;
  std::string sun_out;
  auto* sun = app.add_subcommand("sunflower", "Emit an m-uniform, r-petal sunflower");
  sun->add_option("m", sun_m, "uniformity (>= 3)")->required();
  sun->add_option("r", sun_r, "petal count (>= 1)")->required();
  sun->add_option("-o,--out", sun_out, "output file (default stdout)");

  // fixture
  std::string fix_out, fix_pair;
  auto* fix = app.add_subcommand("fixture",
                                 "Emit the 7-node reference hypergraph with the "
                                 "unstable Z-eigenpair");
  fix->add_option("-o,--out", fix_out, "output file (default stdout)");
  fix->add_option("--eigenpair", fix_pair, "also write the reference eigenpair as JSON");

  // centrality
  CentralityArgs ca;
  auto* cent = app.add_subcommand("centrality", "Compute centralities on a hypergraph");
  cent->add_option("--method", ca.methods, "comma list of cec, zec, hec");
  cent->add_flag("--lcc", ca.lcc, "restrict to the largest connected component");
  cent->add_option("--labels", ca.labels_path, "label file (id<TAB>label)");
  cent->add_option("--tol", ca.tol, "convergence tolerance (per-method default)");
  cent->add_option("--max-iters", ca.max_iters, "iteration cap (per-method default)");
  cent->add_option("--algorithm", ca.algorithm, "zec: dynamical-systems | sshopm");
  cent->add_option("--step", ca.step, "zec dynamical-systems Euler step in (0,1]");
  cent->add_option("--alpha", ca.alpha, "zec sshopm shift (>= 0)");
  cent->add_option("--restarts", ca.restarts, "zec random restarts");
  cent->add_option("--seed", ca.seed, "zec random-start seed");
  cent->add_option("--cluster-tol", ca.cluster_tol, "zec ensemble cluster radius");
  cent->add_option("--threads", ca.threads, "worker threads (default HYPERC_THREADS or 1)");
  cent->add_flag("--deterministic", ca.deterministic,
                 "recorded in run.json; all runs are deterministic");
  cent->add_flag("--no-classify", ca.no_classify, "skip eigenpair stability labels");
  cent->add_option("input", ca.input, "hyperedge-list file, or - for stdin")->required();
  cent->add_option("-o,--out", ca.out_dir, "output directory")->required();

  // compare
  CompareArgs cmp;
  auto* comp = app.add_subcommand("compare", "Top-k rank-correlation comparison");
  comp->add_option("--k", cmp.table_k, "rows in the top-k table (default 10)");
  comp->add_option("--ks", cmp.ks_spec, "comma list of k values (default grid)");
  comp->add_option("csvs", cmp.csv_paths, "two or more centrality CSV files")->required();
  comp->add_option("-o,--out", cmp.out_dir, "output directory")->required();

  // rerun
  std::string rerun_path, rerun_out;
  auto* rerun = app.add_subcommand("rerun", "Re-execute a recorded run.json");
  rerun->add_option("run_json", rerun_path, "path to run.json")->required();
  rerun->add_option("-o,--out", rerun_out, "override the output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Resolved argv for run.json replay: original tokens with file paths made
  // absolute so a rerun works from any directory.
  auto record_argv = [&args]() {
    std::vector<std::string> out;
    bool next_is_path = false;
    for (const std::string& arg : args) {
      std::string tok = arg;
      if (next_is_path) {
        tok = absolute_path(tok);
        next_is_path = false;
      } else if (tok == "-o" || tok == "--out" || tok == "--labels") {
        next_is_path = true;
      } else {
        for (const char* prefix : {"--out=", "-o=", "--labels="}) {
          if (tok.rfind(prefix, 0) == 0) {
            tok = prefix + absolute_path(tok.substr(std::string(prefix).size()));
            break;
          }
        }
      }
      out.push_back(tok);
    }
    return out;
  };

  try {
    if (build->parsed()) {
      build_args.argv = record_argv();
      // make the positional input absolute in the recorded argv
      for (auto& tok : build_args.argv)
        if (tok == build_args.input && tok != "-") tok = absolute_path(tok);
      return cmd_build(build_args);
    }
    if (sun->parsed()) return cmd_sunflower(sun_m, sun_r, sun_out);
    if (fix->parsed()) return cmd_fixture(fix_out, fix_pair);
    if (cent->parsed()) {
      ca.argv = record_argv();
      for (auto& tok : ca.argv)
        if (tok == ca.input && tok != "-") tok = absolute_path(tok);
      return cmd_centrality(ca);
    }
    if (comp->parsed()) {
      cmp.argv = record_argv();
      for (auto& tok : cmp.argv)
        for (const auto& p : cmp.csv_paths)
          if (tok == p) tok = absolute_path(tok);
      return cmd_compare(cmp);
    }
    if (rerun->parsed()) return cmd_rerun(rerun_path, rerun_out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const hyperc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NotConnectedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConnectivity;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args);
}
