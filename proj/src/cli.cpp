#include "subdiv/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "subdiv/classify.hpp"
#include "subdiv/dispatch.hpp"
#include "subdiv/gadgets.hpp"
#include "subdiv/generate.hpp"
#include "subdiv/io.hpp"
#include "subdiv/patterns.hpp"

namespace subdiv {

namespace {

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph load_pattern(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return read_edge_list_file(spec);
  try {
    return registry_get(spec).graph;
  } catch (const std::invalid_argument&) {
    throw UserError("unknown pattern \"" + spec + "\" (not a registry name or a file)");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string t; std::getline(in, t, ',');)
    if (!t.empty()) out.push_back(t);
  return out;
}

struct Options {
  std::string pattern, graph, instance, patterns = "W3,Z4,E1,E2,E3,E4,E5,E6,E7,E8,E9,SSstar2,SSstar3";
  bool oracle = false, linkage = false;
  std::int64_t max_steps = OracleBudget{}.max_steps;
  int max_n = OracleBudget{}.max_n;
  int n = 0, nmax = 4, samples = 0, sample_n = 7, index = 0;
  double p = 0.3;
  std::uint64_t seed = 1;

  OracleBudget budget() const { return {max_n, max_steps}; }
};

int decide_or_find(const Options& o, bool find, std::ostream& out, std::ostream& err) {
  const Digraph f = load_pattern(o.pattern);
  const Digraph d = read_edge_list_file(o.graph);
  DispatchOptions opt;
  opt.allow_oracle = o.oracle;
  opt.want_witness = find;
  opt.budget = o.budget();
  DispatchResult r;
  try {
    r = dispatch_detect(f, d, opt);
  } catch (const DispatchError& e) {
    throw UserError(e.what());
  }
  if (r.status == OracleStatus::BudgetExceeded)
    throw UserError("exhaustive search exceeded its budget; raise --max-steps or --max-n");
  if (r.desk_scale) err << "note: answered by exhaustive search (desk scale only)\n";
  if (!r.found()) {
    out << "no\n";
    return 1;
  }
  if (find)
    out << format_witness(f, *r.witness);
  else
    out << "yes\n";
  return 0;
}

int classify(const Options& o, std::ostream& out) {
  const Digraph f = load_pattern(o.pattern);
  if (f.order() != 4) throw UserError("classification covers 4-vertex patterns only");
  out << to_string(classify4(f)) << '\n';
  return 0;
}

int crosscheck(const Options& o, std::ostream& out) {
  if (o.nmax > 5) throw UserError("--nmax is at most 5 (hosts are enumerated up to isomorphism)");
  std::vector<Digraph> hosts;
  for (int k = 1; k <= o.nmax; ++k)
    for (auto& d : digraph_classes(k)) hosts.push_back(d);
  std::mt19937_64 gen(o.seed);
  for (int i = 0; i < o.samples; ++i) hosts.push_back(random_digraph(o.sample_n, o.p, gen()));

  out << std::left << std::setw(10) << "pattern" << std::setw(10) << "tested" << std::setw(15)
      << "disagreements" << "budget-exceeded\n";
  bool clean = true;
  for (const std::string& name : split_list(o.patterns)) {
    const Digraph f = load_pattern(name);
    auto route = route_for(f);
    if (!route) throw UserError("no polynomial detector for " + name);
    int tested = 0, bad = 0, over = 0;
    for (const Digraph& d : hosts) {
      auto r = brute_force_subdivision(f, d, o.budget());
      if (r.exceeded()) {
        ++over;
        continue;
      }
      ++tested;
      if (route->decide(d) != r.found()) ++bad;
    }
    clean = clean && bad == 0;
    out << std::setw(10) << name << std::setw(10) << tested << std::setw(15) << bad << over
        << '\n';
  }
  return clean ? 0 : 1;
}

int gadget(const Options& o, std::ostream& out) {
  const LinkageInstance inst = read_instance_file(o.instance);
  GadgetReport r;
  try {
    r = gadget_equivalence_check(o.index, inst, o.budget());
  } catch (const std::invalid_argument& e) {
    throw UserError(e.what());
  } catch (const BudgetError& e) {
    throw UserError(e.what());
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "linkage " << yn(r.linkage) << "\nsubdivision " << yn(r.subdivision) << "\nagree "
      << yn(r.agree) << '\n';
  return r.agree ? 0 : 1;
}

int gen(const Options& o, std::ostream& out) {
  try {
    if (o.linkage)
      out << format_instance(random_linkage_instance(o.n, o.p, o.seed));
    else
      out << format_edge_list(random_digraph(o.n, o.p, o.seed));
  } catch (const std::invalid_argument& e) {
    throw UserError(e.what());
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digraph subdivision detection"};
  app.require_subcommand(1);
  Options o;

  auto budget_flags = [&](CLI::App* c) {
    c->add_option("--max-steps", o.max_steps, "Step budget for exhaustive search");
    c->add_option("--max-n", o.max_n, "Largest host order for exhaustive search");
  };
  auto* decide = app.add_subcommand("decide", "Does the graph contain a subdivision of the pattern");
  auto* find = app.add_subcommand("find", "Print a subdivision of the pattern");
  for (auto* c : {decide, find}) {
    c->add_option("pattern", o.pattern, "Registry name or edge-list file")->required();
    c->add_option("graph", o.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
    c->add_flag("--oracle", o.oracle, "Allow exhaustive search");
    budget_flags(c);
  }
  auto* cls = app.add_subcommand("classify", "Complexity verdict for a 4-vertex pattern");
  cls->add_option("pattern", o.pattern, "Registry name or edge-list file")->required();
  auto* cross = app.add_subcommand("crosscheck", "Compare detectors with exhaustive search");
  cross->add_option("--nmax", o.nmax, "Enumerate every host up to this order (<= 5)");
  cross->add_option("--samples", o.samples, "Random hosts on top of the enumeration");
  cross->add_option("--n", o.sample_n, "Order of the random hosts");
  cross->add_option("--p", o.p, "Arc probability of the random hosts");
  cross->add_option("--seed", o.seed);
  cross->add_option("--patterns", o.patterns, "Comma-separated pattern names");
  budget_flags(cross);
  auto* gad = app.add_subcommand("gadget", "Check a 2-linkage gadget on an instance");
  gad->add_option("i", o.index, "Gadget index 1..9")->required();
  gad->add_option("instance", o.instance, "Instance file")->required()->check(CLI::ExistingFile);
  budget_flags(gad);
  auto* gn = app.add_subcommand("gen", "Random digraph or linkage instance");
  gn->add_option("--n", o.n, "Order")->required();
  gn->add_option("--p", o.p, "Arc probability");
  gn->add_option("--seed", o.seed);
  gn->add_flag("--linkage", o.linkage, "Emit a restricted 2-linkage instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (decide->parsed()) return decide_or_find(o, false, out, err);
    if (find->parsed()) return decide_or_find(o, true, out, err);
    if (cls->parsed()) return classify(o, out);
    if (cross->parsed()) return crosscheck(o, out);
    if (gad->parsed()) return gadget(o, out);
    if (gn->parsed()) return gen(o, out);
  } catch (const UserError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace subdiv
