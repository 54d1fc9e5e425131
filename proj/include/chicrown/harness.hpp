#pragma once

// Census generation, graph6 ingestion, seeded random graphs, and the sweep
// engine that runs a scheme or verifier over a filtered graph stream and
// persists certificates. Sweeps are embarrassingly parallel over graphs;
// summaries and logs are aggregated in input order, so results do not depend
// on the worker count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chicrown/colorers.hpp"
#include "chicrown/graph6.hpp"
#include "chicrown/serialize.hpp"
#include "chicrown/structure.hpp"

namespace chicrown {

namespace detail {

// Upper-triangle adjacency bits in row-major pair order, packed so that the
// first pair is the most significant bit; integer order = lexicographic.
inline std::uint64_t packed_bits(const Graph& g) {
  int n = g.n();
  int total = n * (n - 1) / 2;
  std::uint64_t out = 0;
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if (g.adjacent(i, j)) out |= 1ULL << (total - 1 - pos);
  return out;
}

inline Graph graph_from_packed(int n, std::uint64_t bits) {
  int total = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if ((bits >> (total - 1 - pos)) & 1ULL) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace detail

/// Lexicographically minimal packed adjacency bits over all vertex
/// relabelings. A complete isomorphism invariant; intended for n <= 8.
inline std::uint64_t canonical_bits(const Graph& g) {
  const int n = g.n();
  if (n > 10) throw UnsupportedSize("canonical form is limited to n <= 10");
  const int total = n * (n - 1) / 2;
  if (total == 0) return 0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL >> (64 - total);
  do {
    std::uint64_t bits = 0;
    int pos = 0;
    bool worse = false;
    for (int i = 0; i < n && !worse; ++i)
      for (int j = i + 1; j < n; ++j, ++pos) {
        if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
          bits |= 1ULL << (total - 1 - pos);
        // the written prefix already beats best: no completion can win
        if (bits > (best & (~0ULL << (total - 1 - pos)))) {
          worse = true;
          break;
        }
      }
    if (!worse && bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace detail {

// One canonical representative per isomorphism class on exactly n vertices,
// ascending by canonical bits. Built by extending the (n-1)-census with one
// vertex over all attachment masks and deduplicating canonically.
inline const std::vector<Graph>& census_level(int n) {
  static std::vector<std::vector<Graph>> cache;  // cache[k] = level k+1
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) >= n) return cache[static_cast<std::size_t>(n - 1)];
  if (cache.empty()) cache.push_back({Graph(1)});
  while (static_cast<int>(cache.size()) < n) {
    int k = static_cast<int>(cache.size());  // extend level k to k+1
    std::vector<std::uint64_t> forms;
    for (const Graph& base : cache[static_cast<std::size_t>(k - 1)]) {
      auto base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < k; ++v)
          if ((mask >> v) & 1ULL) edges.emplace_back(v, k);
        forms.push_back(canonical_bits(Graph::from_edges(k + 1, edges)));
      }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    std::vector<Graph> level;
    level.reserve(forms.size());
    for (std::uint64_t f : forms) level.push_back(graph_from_packed(k + 1, f));
    cache.push_back(std::move(level));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

}  // namespace detail

/// Builtin census: one representative per isomorphism class on exactly n
/// vertices, deterministic order. Limited to n <= 7; larger censuses come in
/// as graph6 files.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false) {
  if (n < 1 || n > 7)
    throw UnsupportedSize("builtin census covers 1 <= n <= 7; ingest a graph6 file for n >= 8");
  std::vector<Graph> out;
  for (const Graph& g : detail::census_level(n))
    if (!connected_only || is_connected(g)) out.push_back(g);
  return out;
}

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Seeded Erdos-Renyi sample, identical across platforms: one SplitMix64
/// draw per vertex pair in row-major order, edge present when the top 53
/// bits fall below p * 2^53.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > Graph::kMaxVertices) throw UnsupportedSize("random_graph needs 0 <= n <= 64");
  if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("edge probability must lie in [0,1]");
  std::uint64_t state = seed;
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((detail::splitmix64_next(state) >> 11) < threshold) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Streaming graph6 reader with 1-based line numbers. In strict mode a bad
/// line throws FormatError (message carries the line number); in lenient
/// mode the stream ends at the first bad line and the error is kept.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, bool lenient = false) : in_(in), lenient_(lenient) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line_ == 1 && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
      if (line.empty()) continue;
      try {
        return parse_graph6(line);
      } catch (const Error& e) {
        if (lenient_) {
          error_ = std::string(e.what()) + " on line " + std::to_string(line_);
          return std::nullopt;
        }
        throw FormatError(std::string(e.what()) + " on line " + std::to_string(line_),
                          static_cast<std::size_t>(line_));
      }
    }
    return std::nullopt;
  }

  int line() const { return line_; }
  const std::optional<std::string>& error() const { return error_; }

 private:
  std::istream& in_;
  bool lenient_;
  int line_ = 0;
  std::optional<std::string> error_;
};

struct RandomSpec {
  int n = 8;
  double p = 0.5;
  std::uint64_t seed = 1;
  int count = 100;
};

struct SweepSpec {
  enum class Source { Builtin, File, Random };
  Source source = Source::Builtin;
  int builtin_max_n = 7;
  std::string path;
  RandomSpec random;
  std::string class_filter = "all";  // all | crown-p5 | crown-fork | crown-p3p2 | claw-free |
                                     // <pattern>-free | <pattern>-present
  std::string scheme = "none";       // none | crown-p5 | crown-fork | crown-p3p2 | claw-free |
                                     // fork-structure | p3p2-structure
  bool thorough = false;             // verifiers: all claws instead of the first
  bool connected_only = false;
  int threads = 0;  // 0 = hardware concurrency
};

/// Evaluates a class-filter name against a graph.
inline bool class_filter_matches(const Graph& g, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "crown-p5")
    return is_free(g, {pattern_catalog("crown"), pattern_catalog("p5")}).free;
  if (filter == "crown-fork")
    return is_free(g, {pattern_catalog("crown"), pattern_catalog("fork")}).free;
  if (filter == "crown-p3p2")
    return is_free(g, {pattern_catalog("crown"), pattern_catalog("p3p2")}).free;
  auto ends_with = [&](const std::string& suffix) {
    return filter.size() > suffix.size() &&
           filter.compare(filter.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("-free"))
    return is_free(g, {pattern_catalog(filter.substr(0, filter.size() - 5))}).free;
  if (ends_with("-present"))
    return !is_free(g, {pattern_catalog(filter.substr(0, filter.size() - 8))}).free;
  throw Error("unknown class filter '" + filter + "'");
}

/// Applies a colorer scheme per connected component, merging the component
/// certificates into one (components share the color space; the bound is
/// evaluated at the global clique number).
inline ColoredCertificate color_with_scheme(const Graph& g, const std::string& scheme) {
  auto dispatch = [&](const Graph& h) -> ColoredCertificate {
    if (scheme == "crown-p5") return color_crown_p5(h);
    if (scheme == "crown-fork") return color_crown_fork(h);
    if (scheme == "crown-p3p2") return color_crown_p3p2(h);
    if (scheme == "claw-free") return color_claw_free(h);
    throw Error("unknown colorer scheme '" + scheme + "'");
  };
  if (scheme == "crown-fork" || scheme == "claw-free" || is_connected(g)) return dispatch(g);

  ColoredCertificate cert;
  cert.scheme = scheme;
  cert.branch = "per-component";
  cert.omega = clique_number(g).omega;
  // components share the color space, so the merged palette is bounded by
  // the largest per-component branch bound
  cert.bound = 0;
  cert.bound_formula = "max over component branch bounds";
  std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);
  int comp_idx = 0;
  for (VertexSet comp : components(g, g.vertices())) {
    auto view = induced_subgraph(g, comp);
    ColoredCertificate inner = dispatch(view.graph);
    cert.bound = std::max(cert.bound, inner.bound);
    detail::splice_subcertificate(g, view, inner, 0,
                                  "component-" + std::to_string(comp_idx++) + "/", colors,
                                  cert.trace, cert.claims);
    if (inner.violation && !cert.violation) cert.violation = inner.violation;
  }
  cert.coloring = Coloring::of(std::move(colors));
  if (!cert.violation && cert.coloring.palette_size > cert.bound)
    cert.violation = "merged components exceed the scheme bound";
  return cert;
}

struct SweepRecord {
  int index = 0;
  std::string graph6;
  int n = 0;
  bool in_class = false;
  int omega = -1;
  int chi_exact = -1;
  int colors_used = -1;
  long long bound = -1;
  std::optional<std::string> violation;
  std::optional<json> certificate;
  std::vector<std::pair<std::string, bool>> checks;  // verifier schemes
  std::optional<std::string> error;
};

struct OmegaRow {
  int omega = 0;
  long long graphs = 0;
  int max_chi = 0;
  int max_colors = 0;
  long long bound = 0;
};

struct SweepSummary {
  long long graphs_seen = 0;
  long long in_class = 0;
  long long violations_count = 0;
  long long errors = 0;
  std::vector<std::pair<std::string, std::string>> violations;  // graph6 + description
  std::vector<OmegaRow> per_omega;
  double wall_ms = 0.0;
};

namespace detail {

inline SweepRecord sweep_one(const Graph& g, int index, const SweepSpec& spec) {
  SweepRecord rec;
  rec.index = index;
  rec.n = g.n();
  rec.graph6 = write_graph6(g);
  try {
    rec.in_class = class_filter_matches(g, spec.class_filter);
    if (!rec.in_class || spec.scheme == "none") return rec;
    rec.omega = clique_number(g).omega;
    if (g.n() <= 12) rec.chi_exact = chromatic_number(g).chi;

    if (spec.scheme == "fork-structure" || spec.scheme == "p3p2-structure") {
      bool fork = spec.scheme == "fork-structure";
      std::vector<Embedding> claws;
      if (spec.thorough)
        claws = distinct_claws(g);
      else if (auto c = pick_claw(g))
        claws.push_back(std::move(*c));
      StructureReport merged;
      for (const Embedding& claw : claws) {
        StructureReport rep = fork ? verify_structure_fork(g, claw) : verify_structure_p3p2(g, claw);
        for (ClaimCheck& c : rep.checks) merged.checks.push_back(std::move(c));
      }
      for (const ClaimCheck& c : merged.checks) {
        rec.checks.emplace_back(c.id, c.pass);
        if (!c.pass && !rec.violation) rec.violation = "claim " + c.id + " failed";
      }
      json cert;
      cert["scheme"] = spec.scheme;
      cert["claws"] = static_cast<int>(claws.size());
      cert["claims"] = to_json(merged);
      rec.certificate = std::move(cert);
      return rec;
    }

    ColoredCertificate cert = color_with_scheme(g, spec.scheme);
    rec.colors_used = cert.coloring.palette_size;
    rec.bound = cert.bound;
    rec.violation = cert.violation;
    if (!cert.violation && rec.chi_exact >= 0 && rec.colors_used < rec.chi_exact)
      rec.violation = "scheme used fewer colors than the exact chromatic number";
    rec.certificate = to_json(cert);
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace detail

struct AttachmentSuiteResult {
  int instances = 0;       // trace masks x {odd hole host, odd antihole host}
  int hypotheses_met = 0;  // fork-free host with a nonempty trace
  int passes = 0;
  std::vector<std::string> failures;  // graph6 of failing instances
};

/// Constructed-instance suite for the odd-hole / odd-antihole attachment
/// dichotomy: a 7-cycle (resp. its complement) plus an attacher u with every
/// possible trace, plus a pendant v on u. Every fork-free instance meeting
/// the hypotheses must pass.
inline AttachmentSuiteResult run_attachment_suite() {
  AttachmentSuiteResult res;
  for (int anti = 0; anti <= 1; ++anti) {
    for (int mask = 0; mask < 128; ++mask) {
      ++res.instances;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
          bool consecutive = (j - i == 1) || (i == 0 && j == 6);
          if (anti ? !consecutive : consecutive) edges.emplace_back(i, j);
        }
      for (int i = 0; i < 7; ++i)
        if ((mask >> i) & 1) edges.emplace_back(i, 7);
      edges.emplace_back(7, 8);
      Graph g = Graph::from_edges(9, edges);
      if (mask == 0) continue;  // u must have a neighbor on the cycle
      if (find_induced(g, pattern_catalog("fork"))) continue;
      ++res.hypotheses_met;
      HoleWitness c{{0, 1, 2, 3, 4, 5, 6},
                    anti ? HoleWitness::Kind::Antihole : HoleWitness::Kind::Hole};
      AttachmentVerdict v = verify_hole_attachment(g, c, 7, 8);
      if (v.pass)
        ++res.passes;
      else
        res.failures.push_back(write_graph6(g));
    }
  }
  return res;
}

/// Runs a sweep. Optional sinks: a JSONL certificate log (schema-versioned
/// header line, one record per graph, input order) and a per-graph CSV table.
inline SweepSummary sweep(const SweepSpec& spec, std::ostream* jsonl = nullptr,
                          std::ostream* csv = nullptr) {
  auto t0 = std::chrono::steady_clock::now();

  std::vector<Graph> graphs;
  if (spec.source == SweepSpec::Source::Builtin) {
    for (int n = 1; n <= spec.builtin_max_n; ++n)
      for (Graph& g : enumerate_graphs(n, spec.connected_only)) graphs.push_back(std::move(g));
  } else if (spec.source == SweepSpec::Source::File) {
    std::ifstream in(spec.path);
    if (!in) throw Error("cannot open graph6 file '" + spec.path + "'");
    Graph6Reader reader(in);
    while (auto g = reader.next()) {
      if (spec.connected_only && !is_connected(*g)) continue;
      graphs.push_back(std::move(*g));
    }
  } else {
    std::uint64_t seed = spec.random.seed;
    for (int i = 0; i < spec.random.count; ++i) {
      Graph g = random_graph(spec.random.n, spec.random.p, seed + static_cast<std::uint64_t>(i));
      if (spec.connected_only && !is_connected(g)) continue;
      graphs.push_back(std::move(g));
    }
  }

  std::vector<SweepRecord> records(graphs.size());
  int workers = spec.threads > 0 ? spec.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, std::max<int>(1, static_cast<int>(graphs.size())));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= graphs.size()) return;
      records[i] = detail::sweep_one(graphs[i], static_cast<int>(i), spec);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepSummary summary;
  std::map<int, OmegaRow> per_omega;
  if (jsonl) {
    json header;
    header["schema"] = "chicrown-sweep/1";
    header["source"] = spec.source == SweepSpec::Source::Builtin
                           ? "builtin"
                           : (spec.source == SweepSpec::Source::File ? "file" : "random");
    header["class"] = spec.class_filter;
    header["scheme"] = spec.scheme;
    header["connected_only"] = spec.connected_only;
    header["thorough"] = spec.thorough;
    *jsonl << header.dump() << "\n";
  }
  if (csv) *csv << "n,graph6,in_class,omega,chi_exact,colors_used,bound,violation\n";

  for (const SweepRecord& rec : records) {
    ++summary.graphs_seen;
    if (rec.error) ++summary.errors;
    if (rec.in_class) ++summary.in_class;
    if (rec.violation) {
      ++summary.violations_count;
      summary.violations.emplace_back(rec.graph6, *rec.violation);
    }
    if (rec.in_class && rec.omega >= 0) {
      OmegaRow& row = per_omega[rec.omega];
      row.omega = rec.omega;
      ++row.graphs;
      row.max_chi = std::max(row.max_chi, rec.chi_exact);
      row.max_colors = std::max(row.max_colors, rec.colors_used);
      row.bound = std::max(row.bound, rec.bound);
    }
    if (jsonl) {
      json j;
      j["index"] = rec.index;
      j["graph6"] = rec.graph6;
      j["n"] = rec.n;
      j["in_class"] = rec.in_class;
      if (rec.in_class && spec.scheme != "none") {
        j["omega"] = rec.omega;
        j["chi_exact"] = rec.chi_exact >= 0 ? json(rec.chi_exact) : json(nullptr);
        if (rec.colors_used >= 0) j["colors_used"] = rec.colors_used;
        if (rec.bound >= 0) j["bound"] = rec.bound;
        j["violation"] = rec.violation ? json(*rec.violation) : json(nullptr);
        if (rec.certificate) j["certificate"] = *rec.certificate;
      }
      if (rec.error) j["error"] = *rec.error;
      *jsonl << j.dump() << "\n";
    }
    if (csv) {
      *csv << rec.n << "," << rec.graph6 << "," << (rec.in_class ? 1 : 0) << ",";
      if (rec.omega >= 0) *csv << rec.omega;
      *csv << ",";
      if (rec.chi_exact >= 0) *csv << rec.chi_exact;
      *csv << ",";
      if (rec.colors_used >= 0) *csv << rec.colors_used;
      *csv << ",";
      if (rec.bound >= 0) *csv << rec.bound;
      *csv << ",";
      if (rec.violation) *csv << "\"" << *rec.violation << "\"";
      *csv << "\n";
    }
  }
  for (auto& [w, row] : per_omega) summary.per_omega.push_back(row);

  auto t1 = std::chrono::steady_clock::now();
  summary.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return summary;
}

}  // namespace chicrown
