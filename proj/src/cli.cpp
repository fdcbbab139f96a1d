#include "clusterbench/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>

#include "clusterbench/error.hpp"
#include "clusterbench/expression.hpp"
#include "clusterbench/flag_minors.hpp"
#include "clusterbench/framed.hpp"
#include "clusterbench/io.hpp"
#include "clusterbench/service.hpp"

namespace clusterbench {

namespace {

struct Options {
  std::string input;
  std::string out;
  bool json = false;
  std::string type;
  std::string word;
  std::vector<int> at;
  std::string script;
  std::string mutations, freezes, deletions;
  std::size_t depth = 20;
  std::size_t jobs = 1;
  std::size_t max_states = 1'000'000;
  std::size_t max_seeds = 10000;
  std::string expr;
  bool invertible = false;
  int vertex = 0;
  int max_d = 10;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string v, w;
  std::string host = "127.0.0.1";
  int port = kDefaultPort;
  std::size_t term_budget = 200;
};

std::vector<std::size_t> zero_based(const std::vector<int>& labels) {
  std::vector<std::size_t> out;
  for (int k : labels) {
    if (k < 1) throw DomainError("vertex labels start at 1");
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  return out;
}

std::vector<std::size_t> label_list(const std::string& text) {
  auto word = parse_word(text);
  return zero_based(word);
}

std::string one_based_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

Json one_based_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t x : v) a.push_back(x + 1);
  return a;
}

/// Quiver or seed read from a file.
struct Input {
  Seed seed;
  bool is_seed = false;
};

Input read_input(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  Input in;
  in.is_seed = j.is_object() && j.contains("type") && j.at("type") == "seed";
  in.seed = seed_from_json(j);
  return in;
}

void emit_quiver(const IceQuiver& q, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << quiver_to_string(q) << "\n";
  } else {
    write_quiver_file(o.out, q);
    if (o.json) out << Json{{"written", o.out}, {"vertices", q.size()}, {"arrows", q.arrow_count()}}.dump() << "\n";
  }
}

void emit_seed(const Seed& s, const Options& o, std::ostream& out) {
  std::string text = seed_to_json(s).dump() + "\n";
  if (o.out.empty()) out << text;
  else write_text_file(o.out, text);
}

void emit_input(const Input& in, const Options& o, std::ostream& out) {
  if (in.is_seed) emit_seed(in.seed, o, out);
  else emit_quiver(in.seed.quiver, o, out);
}

WeylGroupElement element(const DynkinDiagram& d, const std::string& word) { return weyl_element(d, parse_word(word)); }

// ---------------------------------------------------------------------------

void cmd_gls(const Options& o, std::ostream& out) {
  auto d = DynkinDiagram::parse(o.type);
  emit_quiver(gls_quiver(d, parse_word(o.word)), o, out);
}

void cmd_mutate(const Options& o, std::ostream& out) {
  Input in = read_input(o.input);
  auto seq = zero_based(o.at);
  if (in.is_seed) in.seed = mutate_seed_sequence(in.seed, seq);
  else in.seed.quiver = mutate_sequence(in.seed.quiver, seq);
  emit_input(in, o, out);
}

void cmd_reduce(const Options& o, std::ostream& out) {
  Input in = read_input(o.input);
  ReductionScript script;
  if (!o.script.empty()) {
    if (!o.mutations.empty() || !o.freezes.empty() || !o.deletions.empty())
      throw DomainError("use either --script or the phase flags, not both");
    Json j;
    try {
      j = Json::parse(read_text_file(o.script));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(o.script + ": invalid JSON: " + e.what());
    }
    script = script_from_json(j);
  } else {
    script.mutations = label_list(o.mutations);
    script.freezes = label_list(o.freezes);
    script.deletions = label_list(o.deletions);
  }
  emit_quiver(apply_reduction(in.seed.quiver, script), o, out);
}

void cmd_rank(const Options& o, std::ostream& out) {
  IceQuiver q = read_input(o.input).seed.quiver;
  int rank = exchange_rank(q);
  std::size_t m = q.mutable_vertices().size();
  bool full = static_cast<std::size_t>(rank) == m;
  if (o.json) out << Json{{"rank", rank}, {"mutable", m}, {"full_rank", full}}.dump() << "\n";
  else out << "rank " << rank << " of " << m << (full ? " (full rank)" : " (deficient)") << "\n";
}

void cmd_reddening(const Options& o, std::ostream& out) {
  IceQuiver q = read_input(o.input).seed.quiver;
  ReddeningSearch search;
  search.max_depth = o.depth;
  search.jobs = o.jobs;
  search.max_states = o.max_states;
  auto seq = find_reddening(q, search);
  if (o.json) {
    Json j;
    j["sequence"] = seq ? one_based_json(*seq) : Json(nullptr);
    j["depth"] = o.depth;
    out << j.dump() << "\n";
  } else if (seq) {
    out << (seq->empty() ? "(empty)" : one_based_list(*seq)) << "\n";
  } else {
    out << "no reddening sequence within depth " << o.depth << "\n";
  }
}

void cmd_closure(const Options& o, std::ostream& out) {
  Seed s = read_input(o.input).seed;
  auto c = closure(s, o.max_seeds);
  if (o.json) {
    Json j;
    j["seed_count"] = c.seeds.size();
    j["variable_count"] = c.variables.size();
    Json vars = Json::array(), frozen = Json::array(), edges = Json::array(), clusters = Json::array();
    for (const auto& v : c.variables) vars.push_back(v.to_string());
    for (const auto& v : c.frozen_variables) frozen.push_back(v.to_string());
    for (auto [a, b] : c.edges) edges.push_back(Json::array({a + 1, b + 1}));
    for (const auto& seed : c.seeds) {
      Json cl = Json::array();
      for (const auto& v : seed.cluster) cl.push_back(v.to_string());
      clusters.push_back(Json{{"cluster", cl}, {"provenance", one_based_json(seed.provenance)}});
    }
    j["variables"] = std::move(vars);
    j["frozen_variables"] = std::move(frozen);
    j["edges"] = std::move(edges);
    j["seeds"] = std::move(clusters);
    out << j.dump() << "\n";
  } else {
    out << "seeds " << c.seeds.size() << "\n";
    out << "variables " << c.variables.size() << "\n";
    out << "edges " << c.edges.size() << "\n";
    for (const auto& v : c.variables) out << "  " << v.to_string() << "\n";
  }
}

void cmd_starfish(const Options& o, std::ostream& out) {
  IceQuiver q = read_input(o.input).seed.quiver;
  auto f = parse_expression(o.expr, q.size());
  auto verdict = starfish_membership(q, f, o.invertible ? AlgebraFlavor::invertible : AlgebraFlavor::non_invertible);
  if (o.json) {
    Json j;
    j["member"] = verdict.member;
    Json rings = Json::array();
    for (std::size_t i = 0; i < verdict.rings.size(); ++i)
      rings.push_back(Json{{"ring", verdict.rings[i]}, {"expansion", verdict.expansions[i].to_string()}});
    j["rings"] = std::move(rings);
    j["failing_rings"] = verdict.failing_rings;
    out << j.dump() << "\n";
  } else if (verdict.member) {
    out << "member\n";
  } else {
    out << "not a member; fails in";
    for (std::size_t i = 0; i < verdict.failing_rings.size(); ++i)
      out << (i ? ", " : " ") << verdict.failing_rings[i];
    out << "\n";
  }
}

void cmd_localize(const Options& o, std::ostream& out) {
  IceQuiver q = read_input(o.input).seed.quiver;
  if (o.vertex < 1) throw DomainError("--vertex is required");
  auto f = parse_expression(o.expr, q.size());
  auto d = localization_certificate(q, static_cast<std::size_t>(o.vertex - 1), f, o.max_d,
                                    o.invertible ? AlgebraFlavor::invertible : AlgebraFlavor::non_invertible);
  if (o.json) out << Json{{"d", d ? Json(*d) : Json(nullptr)}, {"max_d", o.max_d}}.dump() << "\n";
  else if (d) out << "d = " << *d << "\n";
  else out << "no certificate within bound " << o.max_d << "\n";
}

void cmd_specialize(const Options& o, std::ostream& out) {
  Seed s = read_input(o.input).seed;
  if (o.vertex < 1) throw DomainError("--vertex is required");
  emit_seed(specialize_frozen(s, static_cast<std::size_t>(o.vertex - 1)), o, out);
}

void cmd_verify_minors(const Options& o, std::ostream& out) {
  auto d = DynkinDiagram::parse(o.type);
  auto report = verify_exchange_identities(d, parse_word(o.word), o.trials, o.seed, o.jobs);
  if (o.json) {
    Json j;
    j["convention"] = to_string(report.realization.convention);
    Json minors = Json::array();
    for (const auto& m : report.realization.minors) minors.push_back(Json{{"rows", m.rows}, {"cols", m.cols}});
    j["minors"] = std::move(minors);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json e{{"vertex", c.vertex + 1},
             {"relation", c.relation},
             {"mutated", c.mutated.to_string()},
             {"trials", c.trials},
             {"status", c.holds ? "ok" : "counterexample"}};
      if (!c.holds) {
        e["counterexample"] = c.counterexample->to_string();
        e["residual"] = c.residual.get_str();
      }
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_zero"] = report.all_zero();
    out << j.dump() << "\n";
  } else {
    out << "convention " << to_string(report.realization.convention) << "\n";
    for (std::size_t k = 0; k < report.realization.minors.size(); ++k)
      out << "x" << k + 1 << " = " << report.realization.minors[k].to_string() << "\n";
    for (const auto& c : report.checks) {
      out << std::left << std::setw(6) << ("x" + std::to_string(c.vertex + 1)) << std::setw(36) << c.relation
          << std::setw(8) << c.trials << (c.holds ? "ok" : "COUNTEREXAMPLE") << "\n";
      if (!c.holds)
        out << "  at " << c.counterexample->to_string() << " residual " << c.residual.get_str() << "\n";
    }
  }
  if (!report.all_zero()) throw DomainError("exchange identity counterexample found");
}

void cmd_richardson_dim(const Options& o, std::ostream& out) {
  auto d = DynkinDiagram::parse(o.type);
  int dim = richardson_dim(element(d, o.v), element(d, o.w));
  if (o.json) out << Json{{"dimension", dim}}.dump() << "\n";
  else out << dim << "\n";
}

void cmd_serve(const Options& o, std::ostream& out) {
  ServiceOptions so;
  so.term_budget = o.term_budget;
  WorkbenchService service(so);
  HttpServer server(service);
  int port = server.bind(o.host, o.port);
  out << "listening on http://" << o.host << ":" << port << std::endl;
  server.listen();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster algebra workbench", "clusterbench"};
  app.require_subcommand(1);
  Options o;
  using Handler = void (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Write the report to stdout as JSON");
    commands.emplace_back(sub, h);
    return sub;
  };
  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Quiver or seed JSON file")->required(); };
  auto out_file = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default: stdout)"); };
  auto type_word = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Dynkin type, e.g. A4")->required();
    sub->add_option("--word", o.word, "Comma-separated letters")->required();
  };

  auto gls = add("gls", "Quiver of a reduced word", cmd_gls);
  type_word(gls);
  out_file(gls);

  auto mut = add("mutate", "Mutate a quiver or seed", cmd_mutate);
  input(mut);
  mut->add_option("--at", o.at, "Vertex to mutate at (repeatable)")->required();
  out_file(mut);

  auto red = add("reduce", "Apply a cluster reduction", cmd_reduce);
  input(red);
  red->add_option("--script", o.script, "Reduction script JSON file");
  red->add_option("--mutate", o.mutations, "Mutation sequence");
  red->add_option("--freeze", o.freezes, "Vertices to freeze");
  red->add_option("--delete", o.deletions, "Frozen vertices to delete");
  out_file(red);

  auto rank = add("rank", "Rank of the exchange matrix", cmd_rank);
  input(rank);

  auto redd = add("reddening", "Search for a reddening sequence", cmd_reddening);
  input(redd);
  redd->add_option("--depth", o.depth, "Maximal sequence length")->check(CLI::PositiveNumber);
  redd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  redd->add_option("--max-states", o.max_states, "Visited-state budget")->check(CLI::PositiveNumber);

  auto clo = add("closure", "Enumerate seeds of a finite mutation class", cmd_closure);
  input(clo);
  clo->add_option("--max-seeds", o.max_seeds, "Give up beyond this many seeds")->check(CLI::PositiveNumber);

  auto star = add("starfish", "Upper cluster algebra membership", cmd_starfish);
  input(star);
  star->add_option("--expr", o.expr, "Rational function in x1..xn")->required();
  star->add_flag("--invertible", o.invertible, "Frozen variables are invertible");

  auto loc = add("localize", "Localization certificate at a vertex", cmd_localize);
  input(loc);
  loc->add_option("--vertex", o.vertex, "Vertex k")->required();
  loc->add_option("--expr", o.expr, "Rational function in x1..xn")->required();
  loc->add_option("--max-d", o.max_d, "Largest exponent to try")->check(CLI::NonNegativeNumber);
  loc->add_flag("--invertible", o.invertible, "Frozen variables are invertible");

  auto spec = add("specialize", "Set a frozen variable to 1 and delete its vertex", cmd_specialize);
  input(spec);
  spec->add_option("--vertex", o.vertex, "Frozen vertex")->required();
  out_file(spec);

  auto ver = add("verify-minors", "Check exchange relations of the minor realization", cmd_verify_minors);
  type_word(ver);
  ver->add_option("--trials", o.trials, "Random unitriangular matrices");
  ver->add_option("--seed", o.seed, "Random seed");
  ver->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto rich = add("richardson-dim", "Dimension of an open Richardson variety", cmd_richardson_dim);
  rich->add_option("--type", o.type, "Dynkin type")->required();
  rich->add_option("--v", o.v, "Word for v (\"\" is the identity)")->required();
  rich->add_option("--w", o.w, "Word for w")->required();

  auto serve = add("serve", "Run the HTTP service", cmd_serve);
  serve->add_option("--host", o.host, "Address to bind");
  serve->add_option("--port", o.port, "Port");
  serve->add_option("--term-budget", o.term_budget, "Largest variable shown in full");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto& [sub, h] : commands)
      if (sub->parsed()) err << sub->help();
    return kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      handler(o, out);
      return kExitOk;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kExitDomainError;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitDomainError;
    }
  }
  return kExitUsage;
}

}  // namespace clusterbench
