#include "mdim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "mdim/bounds.hpp"
#include "mdim/edge_list.hpp"
#include "mdim/generators.hpp"
#include "mdim/report.hpp"
#include "mdim/solver.hpp"
#include "mdim/structure.hpp"

namespace mdim::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "json";
  std::size_t cap = 20;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string family;
  std::size_t n = 0;
  std::size_t n_min = 0;
  std::size_t cycles = 0;
  std::optional<std::size_t> cycles_min;
  std::size_t len_min = 3;
  std::size_t len_max = 6;
  std::string name;
  std::vector<std::string> params;
  std::string output;
};

GenConfig gen_config(const Options& o) {
  GenConfig cfg;
  cfg.family = family_from_string(o.family);
  if (cfg.family != Family::kNamed && o.n == 0) throw GeneratorError("--n is required");
  cfg.n_max = o.n;
  cfg.n_min = o.n_min > 0 ? o.n_min : o.n;
  cfg.cycles_max = o.cycles;
  cfg.cycles_min = o.cycles_min.value_or(o.cycles);
  cfg.cycle_len_range = {o.len_min, o.len_max};
  if (cfg.family == Family::kNamed) {
    cfg.n_min = cfg.n_max = 1;
    cfg.named = o.name;
    for (const std::string& kv : o.params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw GeneratorError("--param expects key=value: " + kv);
      try {
        cfg.named_params[kv.substr(0, eq)] = std::stoul(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw GeneratorError("--param value is not a count: " + kv);
      }
    }
  }
  return cfg;
}

Graph load_graph(const Options& o) {
  if (!o.input.empty()) return read_edge_list_file(o.input);
  if (!o.family.empty()) return generate(gen_config(o), o.seed);
  throw CLI::ValidationError("--input", "a graph is required: pass --input FILE or --family");
}

SolverOptions solver_options(const Options& o) {
  SolverOptions so;
  so.max_order = o.cap;
  so.workers = std::max(1u, o.workers);
  return so;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

template <typename Range>
std::string join(const Range& r, const char* sep = " ") {
  std::string s;
  bool first = true;
  for (const auto& x : r) {
    if (!first) s += sep;
    s += std::to_string(x);
    first = false;
  }
  return s;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  nlohmann::json rep = structure_report(g);
  if (o.format == "json") {
    print_json(out, rep);
    return kOk;
  }
  out << "class: " << rep["class"].get<std::string>() << "\n";
  out << "n=" << g.order() << " m=" << g.size() << " cyclomatic=" << rep["cyclomatic"] << "\n";
  out << "cycles: " << rep["cycles"].size() << (rep["is_cactus"].get<bool>() ? "" : " (not a cactus)")
      << "\n";
  for (const auto& c : rep["cycles"]) out << "  " << join(c.get<std::vector<Vertex>>()) << "\n";
  out << "L=" << rep["L"] << "\n";
  for (const auto& t : rep["threads"]) {
    out << "  thread at " << t["anchor"] << ": " << join(t["path"].get<std::vector<Vertex>>())
        << "\n";
  }
  std::vector<std::size_t> bs;
  for (const auto& pc : rep["per_cycle"]) bs.push_back(pc["b"].get<std::size_t>());
  out << "b=[" << join(bs, ",") << "]\n";
  for (const auto& d : rep["domains"]) {
    out << "domain of cycle " << d["cycle"] << ": "
        << join(d["vertices"].get<std::vector<Vertex>>())
        << " | boundary: " << join(d["boundary_vertices"].get<std::vector<Vertex>>()) << "\n";
  }
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  auto so = solver_options(o);
  auto dim = metric_dimension(g, so);
  auto edim = edge_metric_dimension(g, so);
  if (o.format == "json") {
    print_json(out, solve_report(g, dim, edim));
  } else {
    out << "dim=" << dim.dimension << " witness={" << join(dim.witness, ",") << "}\n";
    out << "edim=" << edim.dimension << " witness={" << join(edim.witness, ",") << "}\n";
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  const CycleSet cs = find_cycles(g);
  const GraphClass cls = classify(g, cs);
  nlohmann::json j{{"class", to_string(cls)}, {"c", cs.count()}};
  if (cls == GraphClass::kUnicyclic) {
    Bounds b = unicyclic_bounds(g);
    j["lower"] = b.lower;
    j["upper"] = b.upper;
  } else if (cls == GraphClass::kCactus) {
    Bounds b = cactus_bounds(g);
    j["lower"] = b.lower;
    j["upper"] = b.upper;
  } else {
    throw StructureError(std::string("no cycle bounds for class ") + to_string(cls));
  }
  j["L"] = decompose_threads(g).L;
  std::vector<std::size_t> bs;
  for (std::size_t i = 0; i < cs.count(); ++i) bs.push_back(cycle_activity(g, cs, i).b);
  j["b"] = bs;
  if (o.format == "json") {
    print_json(out, j);
  } else {
    out << "lower=" << j["lower"] << " upper=" << j["upper"] << " L=" << j["L"] << " b=["
        << join(bs, ",") << "]\n";
  }
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  GeneratorReport r = construct_generator(g);
  if (o.format == "json") {
    print_json(out, to_json(r));
  } else {
    out << "S={" << join(r.S, ",") << "} |S|=" << r.cardinality
        << " vertex_generator=" << r.is_vertex_generator
        << " edge_generator=" << r.is_edge_generator << "\n";
  }
  return r.is_vertex_generator && r.is_edge_generator ? kOk : kClaimViolation;
}

int cmd_check(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  BoundsCertificate cert = check_theorems(g, solver_options(o));
  if (o.format == "json") {
    print_json(out, to_json(cert));
  } else {
    out << "class: " << to_string(cert.graph_class) << " dim=" << cert.dim
        << " edim=" << cert.edim << "\n";
    for (const ClaimVerdict& v : cert.claims) {
      out << "  " << v.claim << ": " << to_string(v.status) << (v.proven ? "" : " (empirical)")
          << " [" << v.detail << "]\n";
    }
  }
  return cert.all_ok() ? kOk : kClaimViolation;
}

int cmd_scan(const Options& o, std::ostream& out) {
  ScanConfig cfg;
  cfg.gen = gen_config(o);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.workers = std::max(1u, o.workers);
  ScanReport rep = conjecture_scan(cfg, solver_options(o));
  if (o.format == "csv") {
    write_scan_csv(out, rep);
  } else if (o.format == "json") {
    print_json(out, to_json(rep));
  } else {
    std::map<long long, std::size_t> hist;
    for (const ScanRow& r : rep.rows) ++hist[r.diff];
    out << "trials=" << o.trials << " evaluated=" << rep.rows.size() << " skipped=" << rep.skipped
        << " violations=" << rep.violations << "\n";
    for (auto [d, count] : hist) out << "  dim-edim=" << d << ": " << count << "\n";
  }
  return rep.violations == 0 ? kOk : kClaimViolation;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw CLI::ValidationError("--family", "gen needs --family");
  Graph g = generate(gen_config(o), o.seed);
  if (o.output.empty()) {
    write_edge_list(out, g);
  } else {
    std::ofstream f(o.output);
    if (!f) throw std::runtime_error("cannot write " + o.output);
    write_edge_list(f, g);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact metric and edge metric dimension of graphs, with cactus bounds", "mdim"};
  app.require_subcommand(1);
  Options o;

  auto add_graph_opts = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Edge-list file");
    sub->add_option("--family", o.family, "Generate the input instead: tree|unicyclic|cactus|general|named");
    sub->add_option("--n", o.n, "Vertex count for generated graphs");
    sub->add_option("--cycles", o.cycles, "Cycle count / cyclomatic number for generated graphs");
    sub->add_option("--len-min", o.len_min, "Shortest generated cycle")->check(CLI::Range(3, 1 << 20));
    sub->add_option("--len-max", o.len_max, "Longest generated cycle")->check(CLI::Range(3, 1 << 20));
    sub->add_option("--seed", o.seed, "Seed for generated graphs");
    sub->add_option("--name", o.name, "Named family (with --family named)");
    sub->add_option("--param", o.params, "Named family parameter key=value");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--cap", o.cap, "Largest order for exact search")->check(CLI::Range(1, 64));
    sub->add_option("--workers", o.workers, "Worker threads");
  };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  auto add = [&](const char* name, const char* desc, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_graph_opts(sub);
    handlers[sub] = fn;
    return sub;
  };
  add("analyze", "Cycles, threads, L(G), branch-active vertices, domains", cmd_analyze);
  add("solve", "Exact dim and edim with lexicographically first witnesses", cmd_solve);
  add("bounds", "Lower and upper bounds for unicyclic and cactus graphs", cmd_bounds);
  add("construct", "Build a vertex and edge metric generator", cmd_construct);
  add("check", "Compare bounds against the exact solver", cmd_check);
  CLI::App* scan = add("scan", "Sample graphs and record dim - edim against the cyclomatic number", cmd_scan);
  scan->add_option("--trials", o.trials, "Number of samples");
  scan->add_option("--n-min", o.n_min, "Smallest sampled order (default: --n)");
  scan->add_option("--cycles-min", o.cycles_min, "Smallest sampled cycle count (default: --cycles)");
  CLI::App* gen = add("gen", "Write a generated graph as an edge list", cmd_gen);
  gen->add_option("--output,-o", o.output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen)(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const GraphError& e) {
    err << "invalid graph (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInvalidInput;
  } catch (const GeneratorError& e) {
    err << "invalid generator spec: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const StructureError& e) {
    err << "unsupported graph: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InstanceTooLarge& e) {
    err << "too large: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace mdim::cli
