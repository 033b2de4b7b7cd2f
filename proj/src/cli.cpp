#include "reasm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "reasm/enumerate.hpp"
#include "reasm/error.hpp"
#include "reasm/report.hpp"
#include "reasm/verify.hpp"

namespace reasm {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

// Parses a file, prefixing errors with its path.
template <typename Parse>
auto load(const std::string& path, Parse parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) { return load(path, [](const std::string& t) { return parse_graph(t); }); }
ReassemblyTree load_tree(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_tree(t); });
}
LinearArrangement load_arrangement(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_arrangement(t); });
}
EdgeOrdering load_ordering(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_ordering(t); });
}

void pretty_print(std::ostream& out, const Json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  auto scalar_array = [](const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
  };
  auto inline_text = [&](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && scalar_array(v)) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
      return s;
    }
    return v.dump();
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        out << pad << k << ":\n";
        pretty_print(out, v, indent + 2);
      } else {
        out << pad << k << ": " << inline_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        std::string line;
        for (const auto& [k, x] : v.items()) line += (line.empty() ? "" : "  ") + k + "=" + inline_text(x);
        out << pad << "- " << line << "\n";
      } else {
        out << pad << "- " << inline_text(v) << "\n";
      }
    }
  } else {
    out << pad << inline_text(j) << "\n";
  }
}

struct Context {
  std::ostream& out;
  bool pretty = false;
  int jobs = 1;

  void emit(const Json& j) const {
    if (pretty) pretty_print(out, j);
    else out << j.dump() << "\n";
  }
};

// Exactly one of the object inputs must be given.
struct ObjectInputs {
  std::string tree, arrangement, ordering;

  int count() const { return !tree.empty() + !arrangement.empty() + !ordering.empty(); }
  void require_one(const char* verb) const {
    if (count() != 1)
      throw ValidationError(std::string(verb) + " needs exactly one of --tree, --arrangement, --ordering");
  }
};

int cmd_eval(const Context& ctx, const std::string& graph_path, const ObjectInputs& in, bool verbose) {
  in.require_one("eval");
  Graph g = load_graph(graph_path);
  if (!in.tree.empty()) {
    ReassemblyTree t = load_tree(in.tree);
    Json j = to_json(measures(g, t), verbose);
    if (verbose) {
      j["strict"] = is_strict(g, t).strict;
      j["linear"] = t.is_linear();
    }
    ctx.emit(j);
  } else if (!in.arrangement.empty()) {
    ctx.emit(to_json(evaluate_arrangement(g, load_arrangement(in.arrangement)), verbose));
  } else {
    EdgeOrdering pi = load_ordering(in.ordering);
    ctx.emit(to_json(seq_reassemble(g, pi), bin(g, pi)));
  }
  return kExitOk;
}

SolveResult brute_linear(const Graph& g, Objective obj, std::optional<Vertex> anchor) {
  if (g.n() > 9) throw LimitError("brute-force linear reassembling is limited to n <= 9");
  std::optional<ReassemblyTree> best;
  long long value = 0;
  long long trees = 0;
  enumerate::for_each_linear_tree(g.n(), [&](const ReassemblyTree& l) {
    if (anchor && !is_anchored_reassembling(g, l, *anchor)) return;
    ++trees;
    auto m = measures(g, l);
    long long v = obj == Objective::beta ? m.beta : m.alpha;
    if (!best || v < value) best = l, value = v;
  });
  if (!best) throw InfeasibleError("no linear reassembling anchored at " + std::to_string(*anchor));
  SolveResult r;
  r.objective = obj;
  r.mode = SolveMode::linear_reassembling;
  r.value = value;
  r.tree = best;
  r.anchor = anchor;
  r.stats.states = trees;
  return r;
}

int cmd_solve(const Context& ctx, const std::string& graph_path, const std::string& objective, const std::string& mode,
              std::optional<Vertex> anchor, std::string engine, const std::string& witness_path) {
  Graph g = load_graph(graph_path);
  Objective obj = parse_objective(objective);
  if (engine.empty()) engine = mode == "binary" ? "brute" : "dp";
  SolveResult r;
  if (mode == "arrangement") {
    r = engine == "dp" ? exact_arrangement(g, obj, anchor) : brute_force_arrangement(g, obj, anchor);
  } else if (mode == "linear") {
    r = engine == "dp" ? exact_linear_reassembling(g, obj, anchor) : brute_linear(g, obj, anchor);
  } else {
    if (engine != "brute") throw ValidationError("binary mode is only available with --engine brute");
    if (anchor) throw ValidationError("--anchor does not apply to binary mode");
    r = brute_force_binary_reassembling(g, obj);
  }
  if (!witness_path.empty()) write_file(witness_path, r.witness_text() + "\n");
  ctx.emit(to_json(r));
  return kExitOk;
}

int cmd_reduce(const Context& ctx, const std::string& graph_path, const std::string& problem,
               const std::string& direction) {
  Graph g = load_graph(graph_path);
  if (problem == "alpha") {
    ctx.emit(to_json(reduce_alpha(g)));
  } else {
    ctx.emit(to_json(reduce_beta(g, parse_direction(direction), {}, ctx.jobs)));
  }
  return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& suite, const verify::Options& opts) {
  std::vector<std::string> suites;
  if (suite == "all") suites = verify::suite_names();
  else suites.push_back(suite);
  int passed = 0, failed = 0;
  Json lines = Json::array();
  for (const auto& s : suites) {
    for (const auto& c : verify::run_suite(s, opts)) {
      Json j{{"suite", c.suite}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}};
      (c.passed ? passed : failed)++;
      if (ctx.pretty) ctx.out << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " (" << c.detail << ")\n";
      else ctx.out << j.dump() << "\n";
    }
  }
  Json summary{{"passed", passed}, {"failed", failed}};
  if (ctx.pretty) ctx.out << passed << " passed, " << failed << " failed\n";
  else ctx.out << summary.dump() << "\n";
  return failed ? kExitVerify : kExitOk;
}

int cmd_gen(const Context& ctx, const std::string& family, const std::vector<int>& params, const std::string& out_path) {
  std::string text = to_text(generate::by_name(family, params));
  if (out_path.empty()) ctx.out << text;
  else write_file(out_path, text);
  return kExitOk;
}

int cmd_convert(const Context& ctx, const std::string& graph_path, const ObjectInputs& in, const std::string& to) {
  in.require_one("convert");
  Graph g = load_graph(graph_path);
  std::string text;
  if (!in.tree.empty()) {
    ReassemblyTree t = load_tree(in.tree);
    if (to == "arrangement") text = induce_arrangement(g, t).to_text() + "\n";
    else if (to == "ordering") text = ordering_to_text(canonical_ordering(g, t));
    else throw ValidationError("a tree converts to 'arrangement' or 'ordering'");
  } else if (!in.arrangement.empty()) {
    LinearArrangement phi = load_arrangement(in.arrangement);
    if (to == "tree") text = induce_reassembling(g, phi).to_text() + "\n";
    else throw ValidationError("an arrangement converts to 'tree'");
  } else {
    EdgeOrdering pi = load_ordering(in.ordering);
    if (to == "tree") text = bin(g, pi).to_text() + "\n";
    else throw ValidationError("an ordering converts to 'tree'");
  }
  ctx.out << text;
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph reassembling and linear layout toolkit"};
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--pretty", ctx.pretty, "Human-readable output instead of JSON");
  app.add_option("--jobs", ctx.jobs, "Worker threads for parallel sections")->check(CLI::PositiveNumber);

  std::string graph;
  ObjectInputs in;
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--tree", in.tree, "Bracketed binary tree file");
    sub->add_option("--arrangement", in.arrangement, "Arrangement file (vertex ids in order)");
    sub->add_option("--ordering", in.ordering, "Edge ordering file (one 'u v' per line)");
  };

  auto* eval = app.add_subcommand("eval", "Measure a tree, an arrangement or a sequential ordering");
  eval->add_option("--graph", graph, "Graph file")->required();
  add_inputs(eval);
  bool verbose = false;
  eval->add_flag("--verbose", verbose, "Per-cluster degrees or per-position cuts");

  auto* solve = app.add_subcommand("solve", "Exact optimum over arrangements or reassemblings");
  solve->add_option("--graph", graph, "Graph file")->required();
  std::string objective = "beta", mode = "arrangement", engine, witness;
  std::optional<Vertex> anchor;
  solve->add_option("--objective", objective)->check(CLI::IsMember({"alpha", "beta"}));
  solve->add_option("--mode", mode)->check(CLI::IsMember({"arrangement", "linear", "binary"}));
  solve->add_option("--anchor", anchor, "Anchor vertex");
  solve->add_option("--engine", engine, "dp (default) or brute")->check(CLI::IsMember({"dp", "brute"}));
  solve->add_option("--witness", witness, "Also write the witness to this file");

  auto* reduce = app.add_subcommand("reduce", "Run a reduction between the two problem families");
  reduce->add_option("--graph", graph, "Graph file")->required();
  std::string problem = "beta", direction = "r2a";
  reduce->add_option("--problem", problem)->check(CLI::IsMember({"alpha", "beta"}));
  reduce->add_option("--direction", direction)->check(CLI::IsMember({"r2a", "a2r"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite = "all";
  verify::Options vopts;
  std::vector<std::string> suite_choices = verify::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--seed", vopts.seed);
  verify_cmd->add_option("--max-n", vopts.max_n)->check(CLI::Range(1, 7));

  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  std::string family, gen_out;
  std::vector<int> params;
  gen->add_option("--family", family, "complete|star|path|cycle|qcube3|ring_tree")->required();
  gen->add_option("--params", params, "Integer parameters of the family");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  auto* convert = app.add_subcommand("convert", "Convert between trees, arrangements and orderings");
  convert->add_option("--graph", graph, "Graph file")->required();
  add_inputs(convert);
  std::string to;
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"tree", "arrangement", "ordering"}));

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*eval) return cmd_eval(ctx, graph, in, verbose);
    if (*solve) return cmd_solve(ctx, graph, objective, mode, anchor, engine, witness);
    if (*reduce) return cmd_reduce(ctx, graph, problem, direction);
    if (*verify_cmd) return cmd_verify(ctx, suite, vopts);
    if (*gen) return cmd_gen(ctx, family, params, gen_out);
    if (*convert) return cmd_convert(ctx, graph, in, to);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

} // namespace reasm
