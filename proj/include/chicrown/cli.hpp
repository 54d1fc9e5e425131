#pragma once

// Command-line front door: detect, classify, color, verify, perfect, sweep.
// run() is a library function so the whole surface is testable in-process;
// tools/chicrown_main.cpp is a thin wrapper around it.
//
// Exit codes: 0 success with no violations; 1 usage, format or operational
// errors; 2 when a sweep or verification finds at least one violated claim
// or budget (a found counterexample, distinct from a crash).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chicrown/colorers.hpp"
#include "chicrown/graph6.hpp"
#include "chicrown/harness.hpp"
#include "chicrown/serialize.hpp"

namespace chicrown::cli {

namespace detail {

// Loads the input graphs: graph6 lines from stdin or a file; a path ending
// in ".col" is read as one DIMACS graph.
inline std::vector<Graph> load_graphs(const std::string& path, std::istream& stdin_stream) {
  std::vector<Graph> out;
  if (!path.empty() && path.size() > 4 && path.compare(path.size() - 4, 4, ".col") == 0) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    out.push_back(parse_dimacs(buf.str()));
    return out;
  }
  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw Error("cannot open file '" + path + "'");
    in = &file;
  }
  Graph6Reader reader(*in);
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

inline int env_threads() {
  const char* raw = std::getenv("CHI_CROWN_THREADS");
  if (!raw) return 0;
  int v = std::atoi(raw);
  return v > 0 ? v : 0;
}

inline json graph_header(int index, const Graph& g) {
  json j;
  j["graph"] = index;
  j["n"] = g.n();
  j["graph6"] = write_graph6(g);
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in = std::cin,
               std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"chicrown: detectors, exact oracles and certified colorers for crown-free graph classes"};
  app.require_subcommand(1);

  std::string in_path;
  bool json_mode = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "input file (graph6 lines, or a single DIMACS .col)");
    sub->add_flag("--json", json_mode, "emit one JSON document per input graph");
  };

  std::string pattern_name;
  bool detect_all = false;
  CLI::App* detect = app.add_subcommand("detect", "search for an induced pattern");
  detect->add_option("--pattern", pattern_name, "pattern name (claw, crown, fork, p5, p3p2, ...)")
      ->required();
  detect->add_flag("--all", detect_all, "enumerate all embeddings");
  add_common(detect);

  CLI::App* classify_cmd = app.add_subcommand("classify", "report pattern and class flags");
  add_common(classify_cmd);

  std::string scheme;
  std::string h_name = "claw";
  CLI::App* color = app.add_subcommand("color", "run a certified coloring scheme");
  color->set_help_flag("--help", "print help");  // frees -h for the pattern option
  color->add_option("--scheme", scheme, "crown-p5 | crown-fork | crown-p3p2 | claw-free | layered")
      ->required();
  color->add_option("--h", h_name, "pattern for --scheme layered (claw, p2k1, p3k1)");
  add_common(color);

  std::string verify_scheme;
  bool thorough = false;
  CLI::App* verify = app.add_subcommand("verify", "run a structural claim verifier");
  verify->add_option("--scheme", verify_scheme, "fork-structure | p3p2-structure | hole-attachment")
      ->required();
  verify->add_flag("--thorough", thorough, "verify every claw, not just the first");
  add_common(verify);

  CLI::App* perfect = app.add_subcommand("perfect", "perfection test plus optimal coloring");
  add_common(perfect);

  int builtin_n = 0;
  std::string g6_path;
  std::string random_arg;
  std::string class_filter = "all";
  std::string sweep_scheme = "none";
  bool connected = false;
  bool sweep_thorough = false;
  std::string out_path;
  std::string csv_path;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a scheme or verifier over a graph stream");
  auto* src_builtin = sweep_cmd->add_option("--builtin", builtin_n, "builtin census up to n (<= 7)");
  auto* src_file = sweep_cmd->add_option("--g6", g6_path, "graph6 file");
  auto* src_random = sweep_cmd->add_option("--random", random_arg, "n,p,seed,count");
  src_builtin->excludes(src_file)->excludes(src_random);
  src_file->excludes(src_random);
  sweep_cmd->add_option("--class", class_filter,
                        "all | crown-p5 | crown-fork | crown-p3p2 | <pattern>-free | <pattern>-present");
  sweep_cmd->add_option("--scheme", sweep_scheme,
                        "none | crown-p5 | crown-fork | crown-p3p2 | claw-free | fork-structure | p3p2-structure");
  sweep_cmd->add_flag("--connected", connected, "keep connected graphs only");
  sweep_cmd->add_flag("--thorough", sweep_thorough, "verifiers check every claw");
  sweep_cmd->add_option("--out", out_path, "JSONL certificate log");
  sweep_cmd->add_option("--csv", csv_path, "per-graph CSV table");
  sweep_cmd->add_flag("--json", json_mode, "emit the summary as JSON");

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());  // CLI11 consumes the vector as a stack
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream msg;
    int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (*detect) {
      Pattern p = pattern_catalog(pattern_name);
      auto graphs = detail::load_graphs(in_path, in);
      int idx = 0;
      for (const Graph& g : graphs) {
        ++idx;
        if (detect_all) {
          auto embs = find_all_induced(g, p);
          if (json_mode) {
            json j = detail::graph_header(idx, g);
            j["pattern"] = p.name;
            j["count"] = embs.size();
            json arr = json::array();
            for (const Embedding& e : embs) arr.push_back(e.image);
            j["embeddings"] = std::move(arr);
            out << j.dump() << "\n";
          } else {
            out << "graph " << idx << ": " << embs.size() << " embedding(s) of " << p.name << "\n";
            for (const Embedding& e : embs) {
              out << " ";
              for (int v : e.image) out << " " << v;
              out << "\n";
            }
          }
        } else {
          auto emb = find_induced(g, p);
          if (json_mode) {
            json j = detail::graph_header(idx, g);
            j["pattern"] = p.name;
            j["found"] = emb.has_value();
            if (emb) j["embedding"] = emb->image;
            out << j.dump() << "\n";
          } else {
            out << "graph " << idx << ": " << p.name << " ";
            if (emb) {
              out << "found at";
              for (int v : emb->image) out << " " << v;
              out << "\n";
            } else {
              out << "not found\n";
            }
          }
        }
      }
      return 0;
    }

    if (*classify_cmd) {
      auto graphs = detail::load_graphs(in_path, in);
      int idx = 0;
      for (const Graph& g : graphs) {
        ++idx;
        ClassFlags f = classify(g);
        if (json_mode) {
          json j = detail::graph_header(idx, g);
          json pats;
          pats["claw"] = f.has_claw;
          pats["crown"] = f.has_crown;
          pats["fork"] = f.has_fork;
          pats["p5"] = f.has_p5;
          pats["p3p2"] = f.has_p3p2;
          pats["diamond"] = f.has_diamond;
          pats["dart"] = f.has_dart;
          pats["hvn"] = f.has_hvn;
          j["patterns"] = std::move(pats);
          json cls;
          cls["crown-p5-free"] = f.crown_p5_free();
          cls["crown-fork-free"] = f.crown_fork_free();
          cls["crown-p3p2-free"] = f.crown_p3p2_free();
          j["classes"] = std::move(cls);
          out << j.dump() << "\n";
        } else {
          auto yn = [](bool b) { return b ? "yes" : "no"; };
          out << "graph " << idx << " (n=" << g.n() << "): claw=" << yn(f.has_claw)
              << " crown=" << yn(f.has_crown) << " fork=" << yn(f.has_fork)
              << " p5=" << yn(f.has_p5) << " p3p2=" << yn(f.has_p3p2)
              << " diamond=" << yn(f.has_diamond) << " dart=" << yn(f.has_dart)
              << " hvn=" << yn(f.has_hvn) << " | (crown,p5)-free=" << yn(f.crown_p5_free())
              << " (crown,fork)-free=" << yn(f.crown_fork_free())
              << " (crown,p3p2)-free=" << yn(f.crown_p3p2_free()) << "\n";
        }
      }
      return 0;
    }

    if (*color) {
      auto graphs = detail::load_graphs(in_path, in);
      int idx = 0;
      bool any_violation = false;
      for (const Graph& g : graphs) {
        ++idx;
        ColoredCertificate cert;
        if (scheme == "layered") {
          if (h_name == "claw") {
            cert = color_layered_generic(
                g, pattern_catalog("claw"), [](const Graph& h) { return color_claw_free(h); },
                bound_claw_free());
          } else if (h_name == "p2k1" || h_name == "p3k1") {
            BoundFunction f = bound_p3p2_cubic();
            auto base = [f](const Graph& h) {
              ColoredCertificate c;
              c.scheme = "exact";
              c.branch = "exact";
              c.omega = clique_number(h).omega;
              c.bound = f.eval(c.omega);
              c.bound_formula = f.id;
              auto res = chromatic_number(h);
              c.coloring = res.coloring;
              TraceStep s;
              s.step = "exact";
              s.vertices = h.vertices();
              s.palette = "P0";
              s.lo = 0;
              s.hi = res.chi;
              s.budget = c.bound;
              s.method = "exact";
              c.trace.push_back(std::move(s));
              return c;
            };
            cert = color_layered_generic(g, pattern_catalog(h_name), base, f);
          } else {
            err << "layered scheme supports --h claw, p2k1 or p3k1\n";
            return 1;
          }
        } else {
          cert = color_with_scheme(g, scheme);
        }
        if (cert.violation) any_violation = true;
        if (json_mode) {
          json j = detail::graph_header(idx, g);
          j["certificate"] = to_json(cert);
          out << j.dump() << "\n";
        } else {
          out << "graph " << idx << ": scheme=" << cert.scheme << " branch=" << cert.branch
              << " omega=" << cert.omega << " colors=" << cert.coloring.palette_size
              << " bound=" << cert.bound;
          if (cert.violation) out << " VIOLATION: " << *cert.violation;
          out << "\n";
        }
      }
      return any_violation ? 2 : 0;
    }

    if (*verify) {
      if (verify_scheme == "hole-attachment") {
        AttachmentSuiteResult res = run_attachment_suite();
        if (json_mode) {
          json j;
          j["suite"] = "hole-attachment";
          j["instances"] = res.instances;
          j["hypotheses_met"] = res.hypotheses_met;
          j["passes"] = res.passes;
          j["failures"] = res.failures;
          out << j.dump() << "\n";
        } else {
          out << "hole-attachment suite: " << res.instances << " instances, "
              << res.hypotheses_met << " met the hypotheses, " << res.passes << " passed, "
              << res.failures.size() << " failed\n";
        }
        return res.failures.empty() ? 0 : 2;
      }
      if (verify_scheme != "fork-structure" && verify_scheme != "p3p2-structure") {
        err << "unknown verify scheme '" << verify_scheme << "'\n";
        return 1;
      }
      auto graphs = detail::load_graphs(in_path, in);
      int idx = 0;
      bool any_fail = false;
      for (const Graph& g : graphs) {
        ++idx;
        std::vector<Embedding> claws;
        if (thorough) {
          claws = distinct_claws(g);
        } else if (auto c = pick_claw(g)) {
          claws.push_back(std::move(*c));
        }
        json claims = json::array();
        int fails = 0, checks = 0;
        for (const Embedding& claw : claws) {
          StructureReport rep = verify_scheme == "fork-structure"
                                    ? verify_structure_fork(g, claw)
                                    : verify_structure_p3p2(g, claw);
          for (const ClaimCheck& c : rep.checks) {
            ++checks;
            if (!c.pass) ++fails;
            json cj;
            cj["id"] = c.id;
            cj["pass"] = c.pass;
            if (c.witness) cj["witness"] = to_json(*c.witness);
            claims.push_back(std::move(cj));
          }
        }
        if (fails > 0) any_fail = true;
        if (json_mode) {
          json j = detail::graph_header(idx, g);
          j["scheme"] = verify_scheme;
          j["claws"] = claws.size();
          j["checks"] = checks;
          j["failures"] = fails;
          j["claims"] = std::move(claims);
          out << j.dump() << "\n";
        } else {
          out << "graph " << idx << ": " << verify_scheme << " on " << claws.size()
              << " claw(s): " << checks << " checks, " << fails << " failed\n";
        }
      }
      return any_fail ? 2 : 0;
    }

    if (*perfect) {
      auto graphs = detail::load_graphs(in_path, in);
      int idx = 0;
      for (const Graph& g : graphs) {
        ++idx;
        PerfectionVerdict v = is_perfect(g);
        if (json_mode) {
          json j = detail::graph_header(idx, g);
          j["perfect"] = v.perfect;
          if (v.perfect) {
            Coloring c = color_perfect(g);
            j["omega"] = clique_number(g).omega;
            j["colors"] = c.colors;
            j["palette_size"] = c.palette_size;
          } else {
            j["witness"] = to_json(*v.witness);
          }
          out << j.dump() << "\n";
        } else {
          if (v.perfect) {
            Coloring c = color_perfect(g);
            out << "graph " << idx << ": perfect, chi = omega = " << c.palette_size << "\n";
          } else {
            out << "graph " << idx << ": not perfect, odd "
                << (v.witness->kind == HoleWitness::Kind::Hole ? "hole" : "antihole")
                << " of length " << v.witness->length() << "\n";
          }
        }
      }
      return 0;
    }

    if (*sweep_cmd) {
      SweepSpec spec;
      if (src_builtin->count()) {
        spec.source = SweepSpec::Source::Builtin;
        spec.builtin_max_n = builtin_n;
      } else if (src_file->count()) {
        spec.source = SweepSpec::Source::File;
        spec.path = g6_path;
      } else if (src_random->count()) {
        spec.source = SweepSpec::Source::Random;
        std::istringstream rs(random_arg);
        char comma;
        if (!(rs >> spec.random.n >> comma >> spec.random.p >> comma >> spec.random.seed >>
              comma >> spec.random.count)) {
          err << "--random expects n,p,seed,count\n";
          return 1;
        }
      } else {
        err << "sweep needs one of --builtin, --g6, --random\n";
        return 1;
      }
      spec.class_filter = class_filter;
      spec.scheme = sweep_scheme;
      spec.connected_only = connected;
      spec.thorough = sweep_thorough;
      spec.threads = detail::env_threads();

      std::ofstream jsonl_file;
      std::ostream* jsonl = nullptr;
      if (!out_path.empty()) {
        jsonl_file.open(out_path);
        if (!jsonl_file) throw Error("cannot open log file '" + out_path + "'");
        jsonl = &jsonl_file;
      }
      std::ofstream csv_file;
      std::ostream* csv = nullptr;
      if (!csv_path.empty()) {
        csv_file.open(csv_path);
        if (!csv_file) throw Error("cannot open csv file '" + csv_path + "'");
        csv = &csv_file;
      }

      SweepSummary s = sweep(spec, jsonl, csv);
      if (json_mode) {
        json j;
        j["graphs_seen"] = s.graphs_seen;
        j["in_class"] = s.in_class;
        j["violations"] = s.violations_count;
        j["errors"] = s.errors;
        json rows = json::array();
        for (const OmegaRow& r : s.per_omega) {
          json row;
          row["omega"] = r.omega;
          row["graphs"] = r.graphs;
          row["max_chi"] = r.max_chi;
          row["max_colors"] = r.max_colors;
          row["bound"] = r.bound;
          rows.push_back(std::move(row));
        }
        j["per_omega"] = std::move(rows);
        j["wall_ms"] = s.wall_ms;
        out << j.dump() << "\n";
      } else {
        out << "sweep: " << s.graphs_seen << " graphs, " << s.in_class << " in class, "
            << s.violations_count << " violation(s), " << s.errors << " error(s), "
            << static_cast<long long>(s.wall_ms) << " ms\n";
        if (!s.per_omega.empty()) {
          out << "  omega  graphs  max_chi  max_colors  bound\n";
          for (const OmegaRow& r : s.per_omega)
            out << "  " << r.omega << "  " << r.graphs << "  " << r.max_chi << "  "
                << r.max_colors << "  " << r.bound << "\n";
        }
        for (const auto& [g6, what] : s.violations)
          out << "  violation: " << g6 << " : " << what << "\n";
      }
      return s.violations_count > 0 ? 2 : 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace chicrown::cli
