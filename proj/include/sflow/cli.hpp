#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sflow/sflow.hpp"

namespace sflow::cli {

enum class Status { ok, hypothesis_failed, absent, budget, input_error, internal_error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::hypothesis_failed:
      return "hypothesis-failed";
    case Status::absent:
      return "absent";
    case Status::budget:
      return "budget";
    case Status::input_error:
      return "input-error";
    case Status::internal_error:
      return "internal-error";
  }
  return "?";
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::ok:
      return 0;
    case Status::hypothesis_failed:
      return 2;
    case Status::absent:
      return 3;
    case Status::budget:
      return 4;
    case Status::input_error:
      return 5;
    case Status::internal_error:
      return 10;
  }
  return 10;
}

struct CommandResult {
  Status status = Status::ok;
  std::string label;                // result word; oracle commands say found/absent/budget
  std::vector<std::string> payload;  // files written
  std::string summary;

  int exit_code() const { return cli::exit_code(status); }
};

namespace detail {

inline SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return read_sgf(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline FlowFile load_flow(const std::string& path, const SignedGraph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open flow file '" + path + "'");
  try {
    return read_flow(in, g);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

inline void print_flow(std::ostream& out, const IntFlow& f) {
  for (EdgeId e = 0; e < f.size(); ++e) out << "f " << e << ' ' << f[e] << '\n';
}

inline EdgeMask mask_from(const SignedGraph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return full_mask(g);
  for (EdgeId e : edges)
    if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  return mask_of(g, edges);
}

// Circuit from its edges listed in traversal order.
inline Walk circuit_from(const SignedGraph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) throw InputError("empty circuit");
  for (EdgeId e : edges)
    if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  Walk w;
  VertexId v = g.edge(edges[0]).a;
  if (edges.size() > 1) {
    const Edge& e1 = g.edge(edges[1]);
    if (v == e1.a || v == e1.b) v = g.edge(edges[0]).b;
  }
  for (EdgeId e : edges) {
    w.vertices.push_back(v);
    w.edges.push_back(e);
    v = g.edge(e).other(v);
  }
  if (!sflow::detail::is_circuit(g, w)) throw InputError("edges do not form a circuit in the given order");
  return w;
}

struct Options {
  std::string graph, flow_path, transcript, out_dir = ".", family;
  std::vector<EdgeId> edges;
  std::optional<EdgeId> edge;
  long long k = 0;
  int kmax = 11;
  int n = 0, count = 1, jobs = 1;
  double neg = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t node_limit = SearchBudget{}.node_limit;
  double time_limit = SearchBudget{}.time_limit_seconds;
  bool admissible_only = false;

  SearchBudget budget() const {
    SearchBudget b;
    b.node_limit = node_limit;
    b.time_limit_seconds = time_limit;
    return b;
  }
};

inline CommandResult outcome(SearchOutcome o) {
  CommandResult r;
  r.label = sflow::to_string(o);
  r.status = o == SearchOutcome::found ? Status::ok : o == SearchOutcome::absent ? Status::absent : Status::budget;
  return r;
}

inline CommandResult cmd_check(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.graph);
  const bool admissible = is_flow_admissible(g, AdmissibilityMethod::cross_check);
  out << "vertices: " << g.vertex_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  out << "components: " << components(g).count << '\n';
  out << "balanced: " << (is_balanced(g) ? "yes" : "no") << '\n';
  out << "admissible: " << (admissible ? "yes" : "no") << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "edge " << e << ':';
    if (auto c = signed_circuit_through(g, e)) {
      out << '\n';
      write_cert(out, *c);
    } else {
      out << " none\n";
    }
  }
  return {Status::ok, "", {}, admissible ? "admissible" : "not admissible"};
}

inline CommandResult color_command(const Options& o, std::ostream& out, bool oracle) {
  const SignedGraph g = load_graph(o.graph);
  auto r = three_edge_coloring(g, o.budget());
  CommandResult res = outcome(r.outcome);
  if (!oracle && r.found()) res.label = "ok";
  out << "nodes: " << r.nodes << '\n';
  if (r.found())
    for (EdgeId e = 0; e < g.edge_count(); ++e) out << "c " << e << ' ' << color_name((*r.value)[e]) << '\n';
  return res;
}

inline CommandResult cmd_flow8(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.graph);
  auto [f, t] = eight_flow(g, o.budget());
  CommandResult res;
  out << "k: 8\n";
  out << "max: " << f.max_magnitude() << '\n';
  out << "components: " << t.components.size() << '\n';
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const auto& c = t.components[i];
    out << "component " << i << ": route " << to_string(c.route);
    if (c.cubic) out << " case " << c.cubic->terminal();
    out << " blow-ups " << c.blow_ups.size() << " max " << c.max_value << '\n';
  }
  if (!o.transcript.empty()) {
    auto tf = open_out(o.transcript);
    write_transcript(tf, t);
    res.payload.push_back(o.transcript);
    out << "transcript: " << o.transcript << '\n';
  }
  if (!o.flow_path.empty()) {
    auto ff = open_out(o.flow_path);
    write_flow(ff, g, f, 8);
    res.payload.push_back(o.flow_path);
    out << "flow: " << o.flow_path << '\n';
  } else {
    print_flow(out, f);
  }
  return res;
}

inline CommandResult cmd_verify(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.graph);
  const FlowFile ff = load_flow(o.flow_path, g);
  const FlowValue k = o.k > 0 ? o.k : ff.k;
  if (k < 2) throw InputError("no usable k: pass --k or put it in the flow header");
  auto check = check_int_flow(g, ff.flow, k, true);
  out << "k: " << k << '\n';
  if (check.ok) return {};
  if (check.edge >= 0) out << "edge: " << check.edge << '\n';
  if (check.vertex >= 0) out << "vertex: " << check.vertex << '\n';
  out << "reason: " << check.reason << '\n';
  return {Status::absent, "", {}, check.reason};
}

inline CommandResult cmd_oracle_flow(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.graph);
  auto r = nz_k_flow_search(g, o.k, std::nullopt, o.budget());
  out << "k: " << o.k << '\n' << "nodes: " << r.nodes << '\n';
  if (r.found()) print_flow(out, *r.value);
  return outcome(r.outcome);
}

inline CommandResult cmd_oracle_flownum(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.graph);
  auto r = flow_number(g, o.kmax, o.budget());
  out << "max: " << o.kmax << '\n' << "nodes: " << r.nodes << '\n';
  if (r.found()) out << "flow-number: " << *r.value << '\n';
  return outcome(r.outcome);
}

inline CommandResult found_or_absent(const std::optional<IntFlow>& f, std::ostream& out) {
  if (!f) return {Status::absent, "", {}, ""};
  print_flow(out, *f);
  return {};
}

inline CommandResult cmd_lemma(const std::string& which, const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.graph);
  if (which == "e2f") return found_or_absent(eulerian_2_flow(g, mask_from(g, o.edges)), out);
  if (which == "lift") return found_or_absent(z2_to_3_lift(g, mask_from(g, o.edges), o.budget()), out);
  if (which == "hc") return found_or_absent(hc_cover_4_flow(g, circuit_from(g, o.edges), o.budget()), out);
  // barbell
  if (!o.edge) return found_or_absent(barbell_3_flow(g), out);
  if (!g.has_edge(*o.edge)) throw InputError("unknown edge id " + std::to_string(*o.edge));
  auto cert = signed_circuit_through(g, *o.edge);
  if (!cert) return {Status::absent, "", {}, "no signed circuit through the edge"};
  write_cert(out, *cert);
  if (cert->kind == CertKind::balanced_circuit) return {Status::absent, "", {}, "edge lies on a balanced circuit"};
  print_flow(out, barbell_3_flow(g, *cert));
  return {};
}

inline CommandResult cmd_gen(const Options& o, std::ostream& out) {
  FamilySpec spec{family_from_string(o.family), o.n, o.neg, o.seed};
  validate(spec);
  if (o.count < 0) throw InputError("--count must be non-negative");
  if (o.jobs < 1) throw InputError("--jobs must be at least 1");
  std::vector<std::optional<SignedGraph>> made(o.count);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i = next++; i < o.count; i = next++) {
      try {
        FamilySpec si = spec;
        si.seed = instance_seed(spec.seed, i);
        SignedGraph g = generate(si);
        if (!o.admissible_only || is_flow_admissible(g, AdmissibilityMethod::cross_check)) made[i] = std::move(g);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::min(o.jobs, std::max(o.count, 1)); ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::filesystem::create_directories(o.out_dir);
  CommandResult res;
  int written = 0;
  for (int i = 0; i < o.count; ++i) {
    if (!made[i]) continue;
    char name[64];
    std::snprintf(name, sizeof name, "%s-n%d-%04d.sgf", o.family.c_str(), o.n, i);
    const std::string path = (std::filesystem::path(o.out_dir) / name).string();
    auto f = open_out(path);
    f << "# family " << o.family << " n " << o.n << " neg " << o.neg << " seed " << o.seed << " index " << i << '\n';
    write_sgf(f, *made[i]);
    res.payload.push_back(path);
    ++written;
  }
  out << "count: " << written << '\n';
  for (const auto& p : res.payload) out << "file: " << p << '\n';
  return res;
}

}  // namespace detail

// Runs one command; writes `result: <status>` first, then key/value lines.
inline CommandResult run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Nowhere-zero flows on signed graphs"};
  app.require_subcommand(1);
  detail::Options o;
  std::function<CommandResult(std::ostream&)> action;

  auto add_budget = [&](CLI::App* sc) {
    sc->add_option("--node-limit", o.node_limit, "search node budget");
    sc->add_option("--time-limit", o.time_limit, "search time budget in seconds");
  };

  auto* check = app.add_subcommand("check", "balance and flow-admissibility with certificates");
  check->add_option("graph", o.graph)->required();
  check->callback([&] { action = [&](std::ostream& s) { return detail::cmd_check(o, s); }; });

  auto* color = app.add_subcommand("color", "proper 3-edge-coloring of a cubic graph");
  color->add_option("graph", o.graph)->required();
  add_budget(color);
  color->callback([&] { action = [&](std::ostream& s) { return detail::color_command(o, s, false); }; });

  auto* flow8 = app.add_subcommand("flow8", "nowhere-zero 8-flow");
  flow8->add_option("graph", o.graph)->required();
  flow8->add_option("--transcript", o.transcript, "write the case transcript here");
  flow8->add_option("--flow", o.flow_path, "write the flow file here");
  add_budget(flow8);
  flow8->callback([&] { action = [&](std::ostream& s) { return detail::cmd_flow8(o, s); }; });

  auto* verify = app.add_subcommand("verify", "check a flow file against a graph");
  verify->add_option("graph", o.graph)->required();
  verify->add_option("flow", o.flow_path)->required();
  verify->add_option("--k", o.k, "flow bound (default: from the flow header)");
  verify->callback([&] { action = [&](std::ostream& s) { return detail::cmd_verify(o, s); }; });

  auto* oracle = app.add_subcommand("oracle", "exhaustive searches");
  oracle->require_subcommand(1);
  auto* oflow = oracle->add_subcommand("flow", "nowhere-zero k-flow");
  oflow->add_option("graph", o.graph)->required();
  oflow->add_option("--k", o.k)->required()->check(CLI::Range(2, 1000));
  add_budget(oflow);
  oflow->callback([&] { action = [&](std::ostream& s) { return detail::cmd_oracle_flow(o, s); }; });
  auto* onum = oracle->add_subcommand("flownum", "least k with a nowhere-zero k-flow");
  onum->add_option("graph", o.graph)->required();
  onum->add_option("--max", o.kmax, "largest k tried")->check(CLI::Range(2, 1000));
  add_budget(onum);
  onum->callback([&] { action = [&](std::ostream& s) { return detail::cmd_oracle_flownum(o, s); }; });
  auto* ocolor = oracle->add_subcommand("color", "3-edge-coloring search");
  ocolor->add_option("graph", o.graph)->required();
  add_budget(ocolor);
  ocolor->callback([&] { action = [&](std::ostream& s) { return detail::color_command(o, s, true); }; });

  auto* gen = app.add_subcommand("gen", "write a seeded corpus of SGF files");
  gen->add_option("--family", o.family)->required();
  gen->add_option("--n", o.n)->required();
  gen->add_option("--neg", o.neg, "negative-edge probability");
  gen->add_option("--seed", o.seed);
  gen->add_option("--count", o.count);
  gen->add_option("--out-dir", o.out_dir);
  gen->add_option("--jobs", o.jobs);
  gen->add_flag("--admissible", o.admissible_only, "keep only flow-admissible instances");
  gen->callback([&] { action = [&](std::ostream& s) { return detail::cmd_gen(o, s); }; });

  auto* lemma = app.add_subcommand("lemma", "run one lemma construction");
  lemma->require_subcommand(1);
  for (std::string which : {"e2f", "barbell", "lift", "hc"}) {
    auto* sc = lemma->add_subcommand(which);
    sc->add_option("graph", o.graph)->required();
    if (which == "barbell") {
      sc->add_option("--edge", o.edge, "edge to cover (default: the whole graph is the barbell)");
    } else {
      auto* opt = sc->add_option(which == "hc" ? "--circuit" : "--edges", o.edges)->delimiter(',');
      if (which == "hc") opt->required();
    }
    add_budget(sc);
    sc->callback([&, which] { action = [&, which](std::ostream& s) { return detail::cmd_lemma(which, o, s); }; });
  }

  CommandResult res;
  std::ostringstream body;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    res = action(body);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {};
  } catch (const CLI::ParseError& e) {
    res = {Status::input_error, "", {}, e.what()};
  } catch (const InputError& e) {
    res = {Status::input_error, "", {}, e.what()};
  } catch (const HypothesisError& e) {
    res = {Status::hypothesis_failed, "", {}, e.what()};
  } catch (const BudgetExhausted& e) {
    res = {Status::budget, "", {}, e.what()};
  } catch (const std::exception& e) {
    res = {Status::internal_error, "", {}, e.what()};
  }
  if (res.label.empty()) res.label = to_string(res.status);
  out << "result: " << res.label << '\n';
  out << body.str();
  if (!res.summary.empty()) out << (res.status == Status::ok ? "summary: " : "error: ") << res.summary << '\n';
  return res;
}

}  // namespace sflow::cli
