#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "reconf/decomposition.hpp"
#include "reconf/errors.hpp"
#include "reconf/io.hpp"
#include "reconf/lambda.hpp"
#include "reconf/mis.hpp"
#include "reconf/oracle.hpp"
#include "reconf/tar_reach.hpp"
#include "reconf/ts_reach.hpp"

namespace reconf::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string graph;
  std::string instance;
  std::string sequence;
  std::string out;
  std::string rule;
  std::optional<int> k;
  std::string profile = "n=12,width=4";
  std::uint64_t seed = 1;
  int count = 20;
  int jobs = 1;
  bool certify = false;
  bool pretty = false;
  bool check = false;
};

struct InstanceFile {
  std::optional<Rule::Kind> rule;
  std::optional<int> k;
  VertexSet start;
  VertexSet target;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

Rule::Kind rule_kind(const std::string& name) {
  if (name == "tar") return Rule::Kind::tar;
  if (name == "tj") return Rule::Kind::tj;
  if (name == "ts") return Rule::Kind::ts;
  throw InputError("unknown rule '" + name + "' (expected tar, tj or ts)");
}

const char* rule_name(Rule::Kind kind) {
  switch (kind) {
    case Rule::Kind::tar: return "tar";
    case Rule::Kind::tj: return "tj";
    case Rule::Kind::ts: return "ts";
  }
  return "?";
}

VertexSet ids_from(const json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string(field) + " must be an array of vertex IDs");
  std::vector<VertexId> ids;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(field) + " must contain integers");
    ids.push_back(v.get<VertexId>());
  }
  return VertexSet(std::move(ids));
}

json ids_json(const VertexSet& s) { return json(s.ids()); }

InstanceFile load_instance(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!j.is_object()) throw InputError(path + ": instance must be a JSON object");
  InstanceFile out;
  if (j.contains("rule")) out.rule = rule_kind(j.at("rule").get<std::string>());
  if (j.contains("k") && !j.at("k").is_null()) {
    if (!j.at("k").is_number_integer()) throw InputError(path + ": k must be an integer");
    out.k = j.at("k").get<int>();
  }
  if (!j.contains("start")) throw InputError(path + ": missing start");
  out.start = ids_from(j.at("start"), "start");
  if (j.contains("target")) out.target = ids_from(j.at("target"), "target");
  return out;
}

json instance_json(const Instance& in) {
  json j{{"rule", rule_name(in.rule.kind)}, {"start", ids_json(in.start)}, {"target", ids_json(in.target)}};
  if (in.rule.kind == Rule::Kind::tar) j["k"] = in.rule.k;
  return j;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void require_vertices(const Graph& g, const VertexSet& s, const char* name) {
  for (VertexId v : s)
    if (!g.has_vertex(v)) throw InputError(std::string(name) + " mentions unknown vertex " + std::to_string(v));
}

json move_json(const Move& m) {
  json j{{"op", to_string(m.op)}, {"v", m.v}};
  if (m.op == Move::Op::jump || m.op == Move::Op::slide) j["u"] = m.u;
  return j;
}

std::vector<Move> moves_from(const json& j) {
  if (!j.is_array()) throw InputError("sequence must be a JSON array");
  std::vector<Move> out;
  for (const json& m : j) {
    if (!m.is_object() || !m.contains("op") || !m.contains("v")) throw InputError("each move needs op and v");
    const std::string op = m.at("op").get<std::string>();
    const VertexId v = m.at("v").get<VertexId>();
    if (op == "add") {
      out.push_back(Move::add(v));
    } else if (op == "remove") {
      out.push_back(Move::remove(v));
    } else if (op == "jump" || op == "slide") {
      if (!m.contains("u")) throw InputError(op + " needs the source vertex u");
      const VertexId u = m.at("u").get<VertexId>();
      out.push_back(op == "jump" ? Move::jump(u, v) : Move::slide(u, v));
    } else {
      throw InputError("unknown move op '" + op + "'");
    }
  }
  return out;
}

json stats_json(const SolveStats& st, Clock::time_point since) {
  return {{"width", st.width},
          {"nodes_deleted", st.nodes_deleted},
          {"rule_applications", st.rule_applications},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(Clock::now() - since).count()}};
}

/// Verifies `seq` ends at `expected`; throws InvariantError otherwise.
void self_check(const Graph& g, const ReconfSequence& seq, const VertexSet& expected) {
  VerifyOutcome v = verify_sequence(g, seq);
  if (!v) throw InvariantError("own certificate rejected at move " + std::to_string(v.failed_move) + ": " + v.violation);
  if (!(*v.final_set == expected)) throw InvariantError("own certificate ends at " + v.final_set->to_string());
}

Rule resolve_rule(const Options& o, const InstanceFile& inst) {
  std::optional<Rule::Kind> kind = inst.rule;
  if (!o.rule.empty()) kind = rule_kind(o.rule);
  if (!kind) throw InputError("no rule given (use --rule or the instance file)");
  if (*kind == Rule::Kind::tj) return Rule::tj();
  if (*kind == Rule::Kind::ts) return Rule::ts();
  std::optional<int> k = o.k ? o.k : inst.k;
  if (!k) throw InputError("TAR needs a threshold (use --k or the instance file)");
  return Rule::tar(*k);
}

json tree_json(const Graph& g, const MDTree& tree, std::size_t node) {
  const MDNode& n = tree.node(node);
  json children = json::array();
  for (std::size_t c : n.children) children.push_back(tree_json(g, tree, c));
  return {{"kind", to_string(n.kind)}, {"vertices", ids_json(n.span)}, {"children", std::move(children)}};
}

json cmd_decompose(const Options& o) {
  const auto t0 = Clock::now();
  Graph g = load_graph(o.graph);
  json out{{"answer", "ok"}};
  SolveStats st;
  if (!g.empty()) {
    MDTree tree = md_tree(g);
    st.width = modular_width(g);
    out["tree"] = tree_json(g, tree, 0);
    out["nd"] = nd_partition(g).size();
  } else {
    out["nd"] = 0;
  }
  out["size"] = st.width;
  out["stats"] = stats_json(st, t0);
  return out;
}

json cmd_alpha(const Options& o) {
  const auto t0 = Clock::now();
  Graph g = load_graph(o.graph);
  AlphaResult a = alpha(g);
  return {{"answer", "ok"}, {"size", a.size}, {"set", ids_json(a.witness)}, {"stats", stats_json({}, t0)}};
}

json cmd_lambda(const Options& o) {
  const auto t0 = Clock::now();
  Graph g = load_graph(o.graph);
  InstanceFile inst = load_instance(o.instance);
  require_vertices(g, inst.start, "start");
  std::optional<int> k = o.k ? o.k : inst.k;
  if (!k) throw InputError("lambda needs a threshold (use --k or the instance file)");
  SolveStats st;
  LambdaResult r = lambda(g, inst.start, *k, EngineOptions{o.check}, &st);
  json out{{"answer", "ok"}, {"k", *k}, {"size", r.size}, {"set", ids_json(r.reached)}};
  if (o.certify) {
    ReconfSequence seq = r.sequence();
    self_check(g, seq, r.reached);
    json moves = json::array();
    for (const Move& m : seq.moves) moves.push_back(move_json(m));
    out["sequence"] = std::move(moves);
  }
  out["stats"] = stats_json(st, t0);
  return out;
}

json cmd_solve(const Options& o) {
  const auto t0 = Clock::now();
  Graph g = load_graph(o.graph);
  InstanceFile inst = load_instance(o.instance);
  require_vertices(g, inst.start, "start");
  require_vertices(g, inst.target, "target");
  const Rule rule = resolve_rule(o, inst);
  json out;
  if (rule.kind == Rule::Kind::ts) {
    SolveStats st;
    const bool yes = reach_ts(g, inst.start, inst.target, &st);
    out["answer"] = yes ? "yes" : "no";
    out["stats"] = stats_json(st, t0);
    return out;
  }
  ReachAnswer a = rule.kind == Rule::Kind::tar ? reach_tar(g, rule.k, inst.start, inst.target)
                                               : reach_tj(g, inst.start, inst.target);
  out["answer"] = a.reachable ? "yes" : "no";
  if (a.reachable && o.certify) {
    ReconfSequence seq = *a.certificate();
    self_check(g, seq, inst.target);
    json moves = json::array();
    for (const Move& m : seq.moves) moves.push_back(move_json(m));
    out["certificate_rule"] = {{"rule", "tar"}, {"k", a.rule.k}};
    out["sequence"] = std::move(moves);
  }
  out["stats"] = stats_json(a.stats, t0);
  return out;
}

json cmd_verify(const Options& o) {
  const auto t0 = Clock::now();
  Graph g = load_graph(o.graph);
  InstanceFile inst = load_instance(o.instance);
  json seq_doc;
  try {
    seq_doc = json::parse(read_file(o.sequence));
  } catch (const json::exception& e) {
    throw InputError(o.sequence + ": " + e.what());
  }
  // Accept either a bare move array or the output of `solve --certify`.
  Rule rule;
  std::vector<Move> moves;
  if (seq_doc.is_object()) {
    if (!seq_doc.contains("sequence")) throw InputError(o.sequence + ": no sequence field");
    moves = moves_from(seq_doc.at("sequence"));
    if (seq_doc.contains("certificate_rule")) {
      const json& cr = seq_doc.at("certificate_rule");
      InstanceFile carried{rule_kind(cr.at("rule").get<std::string>()), cr.at("k").get<int>(), {}, {}};
      rule = resolve_rule(Options{}, carried);
    } else {
      rule = resolve_rule(o, inst);
    }
  } else {
    moves = moves_from(seq_doc);
    rule = resolve_rule(o, inst);
  }
  require_vertices(g, inst.start, "start");
  VerifyOutcome v = verify_sequence(g, ReconfSequence{rule, inst.start, std::move(moves)});
  json out;
  if (v) {
    out = {{"answer", "valid"}, {"final", ids_json(*v.final_set)}};
    if (!inst.target.empty() || seq_doc.is_object()) out["reaches_target"] = *v.final_set == inst.target;
  } else {
    out = {{"answer", "invalid"}, {"failed_move", v.failed_move}, {"violation", v.violation}};
  }
  out["stats"] = stats_json({}, t0);
  return out;
}

json cmd_oracle(const Options& o) {
  const auto t0 = Clock::now();
  Graph g = load_graph(o.graph);
  InstanceFile inst = load_instance(o.instance);
  require_vertices(g, inst.start, "start");
  require_vertices(g, inst.target, "target");
  const Rule rule = resolve_rule(o, inst);
  const bool yes = oracle_reach(rule, g, inst.start, inst.target);
  return {{"answer", yes ? "yes" : "no"}, {"stats", stats_json({}, t0)}};
}

json cmd_gen(const Options& o) {
  const auto t0 = Clock::now();
  GenProfile profile = parse_profile(o.profile);
  if (!o.rule.empty()) profile.rule = rule_kind(o.rule);
  Instance in = gen_instance(o.seed, profile);
  const std::string graph_path = o.out + ".dimacs";
  const std::string inst_path = o.out + ".json";
  write_file(graph_path, "c seed " + std::to_string(o.seed) + " profile " + o.profile + "\n" + emit_graph(in.graph));
  write_file(inst_path, instance_json(in).dump(2) + "\n");
  return {{"answer", "ok"},
          {"graph", graph_path},
          {"instance", inst_path},
          {"n", in.graph.order()},
          {"m", in.graph.edge_count()},
          {"stats", stats_json({}, t0)}};
}

std::string bench_row(std::uint64_t seed, const GenProfile& profile) {
  Instance in = gen_instance(seed, profile);
  const Graph& g = in.graph;
  auto t0 = Clock::now();
  bool yes = false;
  switch (in.rule.kind) {
    case Rule::Kind::tar: yes = reach_tar(g, in.rule.k, in.start, in.target).reachable; break;
    case Rule::Kind::tj: yes = reach_tj(g, in.start, in.target).reachable; break;
    case Rule::Kind::ts: yes = reach_ts(g, in.start, in.target); break;
  }
  const double solver_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::string oracle_ms;
  if (static_cast<int>(g.order()) <= oracle_cap()) {
    t0 = Clock::now();
    if (oracle_reach(in.rule, g, in.start, in.target) != yes)
      throw InvariantError("solver and oracle disagree on instance " + std::to_string(seed));
    oracle_ms = std::to_string(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  std::ostringstream row;
  row << seed << ',' << g.order() << ',' << g.edge_count() << ',' << modular_width(g) << ',' << rule_name(in.rule.kind)
      << ',' << (in.rule.kind == Rule::Kind::tar ? std::to_string(in.rule.k) : "") << ',' << (yes ? "yes" : "no")
      << ',' << solver_ms << ',' << oracle_ms;
  return row.str();
}

void cmd_bench(const Options& o, std::ostream& out) {
  GenProfile profile = parse_profile(o.profile);
  if (!o.rule.empty()) profile.rule = rule_kind(o.rule);
  if (o.count < 0) throw InputError("--count must be non-negative");
  std::vector<std::string> rows(static_cast<std::size_t>(o.count));
  std::vector<std::exception_ptr> errors(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i] = bench_row(o.seed + i, profile);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(o.jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  out << "instance_id,n,m,width,rule,k,answer,solver_ms,oracle_ms\n";
  for (const auto& r : rows) out << r << '\n';
}

}  // namespace

std::string sequence_to_json(const std::vector<Move>& moves) {
  json j = json::array();
  for (const Move& m : moves) j.push_back(move_json(m));
  return j.dump();
}

std::vector<Move> sequence_from_json(std::string_view text) {
  try {
    return moves_from(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent set reconfiguration over modular decompositions", "reconf"};
  app.require_subcommand(1);
  Options o;

  auto graph_arg = [&](CLI::App* cmd) { cmd->add_option("graph", o.graph, "DIMACS graph file")->required(); };
  auto instance_arg = [&](CLI::App* cmd) { cmd->add_option("instance", o.instance, "JSON instance file")->required(); };
  auto common = [&](CLI::App* cmd) { cmd->add_flag("--json", o.pretty, "Pretty-print the JSON result"); };
  auto rule_opts = [&](CLI::App* cmd) {
    cmd->add_option("--rule", o.rule, "tar, tj or ts (overrides the instance file)");
    cmd->add_option("--k", o.k, "TAR threshold (overrides the instance file)");
  };

  auto* decompose = app.add_subcommand("decompose", "Modular decomposition tree, modular width and nd");
  graph_arg(decompose);
  common(decompose);
  auto* alpha_cmd = app.add_subcommand("alpha", "Maximum independent set");
  graph_arg(alpha_cmd);
  common(alpha_cmd);
  auto* lambda_cmd = app.add_subcommand("lambda", "Largest set reachable from the start set under TAR(k)");
  graph_arg(lambda_cmd);
  instance_arg(lambda_cmd);
  lambda_cmd->add_option("--k", o.k, "TAR threshold (overrides the instance file)");
  lambda_cmd->add_flag("--certify", o.certify, "Emit and re-verify the move sequence");
  lambda_cmd->add_flag("--check-invariants", o.check, "Check engine invariants after every step (slow)");
  common(lambda_cmd);
  auto* solve = app.add_subcommand("solve", "Decide reachability of the target set");
  graph_arg(solve);
  instance_arg(solve);
  rule_opts(solve);
  solve->add_flag("--certify", o.certify, "Emit and re-verify the move sequence (TAR and TJ)");
  common(solve);
  auto* verify = app.add_subcommand("verify", "Check a move sequence against an instance");
  graph_arg(verify);
  instance_arg(verify);
  verify->add_option("sequence", o.sequence, "JSON move array, or the output of solve --certify")->required();
  rule_opts(verify);
  common(verify);
  auto* oracle = app.add_subcommand("oracle", "Decide reachability by exhaustive search");
  graph_arg(oracle);
  instance_arg(oracle);
  rule_opts(oracle);
  common(oracle);
  auto* gen = app.add_subcommand("gen", "Write a random instance as <out>.dimacs and <out>.json");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--profile", o.profile, "n=<int>,width=<int>[,rule=tar|tj|ts]");
  gen->add_option("--rule", o.rule, "Rule (overrides the profile)");
  gen->add_option("--out,-o", o.out, "Output path prefix")->required();
  common(gen);
  auto* bench = app.add_subcommand("bench", "Solve generated instances and print CSV timings");
  bench->add_option("--seed", o.seed, "Seed of the first instance");
  bench->add_option("--count", o.count, "Number of instances");
  bench->add_option("--profile", o.profile, "n=<int>,width=<int>[,rule=tar|tj|ts]");
  bench->add_option("--rule", o.rule, "Rule (overrides the profile)");
  bench->add_option("--jobs,-j", o.jobs, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (bench->parsed()) {
      cmd_bench(o, out);
      return kOk;
    }
    json result;
    if (decompose->parsed()) result = cmd_decompose(o);
    else if (alpha_cmd->parsed()) result = cmd_alpha(o);
    else if (lambda_cmd->parsed()) result = cmd_lambda(o);
    else if (solve->parsed()) result = cmd_solve(o);
    else if (verify->parsed()) result = cmd_verify(o);
    else if (oracle->parsed()) result = cmd_oracle(o);
    else if (gen->parsed()) result = cmd_gen(o);
    out << (o.pretty ? result.dump(2) : result.dump()) << '\n';
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kInvariantFailure;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace reconf::cli
