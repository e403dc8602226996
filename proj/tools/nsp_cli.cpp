// nsp: command-line front end over the header-only library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsp/verify.hpp"

namespace {

using nsp::Graph;
using nsp::Json;

struct Context {
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0.0;
  bool deterministic = false;
  std::uint64_t seed = 1;
  bool json = false;
  bool paper_rules_only = false;

  nsp::Budget budget() const {
    nsp::Budget b = nsp::default_minor_budget();
    if (budget_nodes) b.max_nodes = budget_nodes;
    if (budget_seconds > 0) b.max_seconds = budget_seconds;
    return b;
  }
};

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw nsp::InvalidArgument("expected an integer for " + what + ", got '" + s + "'");
}

/// "9" or "7..11".
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(s, "--n");
    return {n, n};
  }
  return {parse_int(s.substr(0, dots), "--n"), parse_int(s.substr(dots + 2), "--n")};
}

Graph parse_target(const std::string& t) {
  for (const std::string& id : nsp::named_ids())
    if (id == t) return nsp::named(t);
  return nsp::parse_graph_line(t);
}

/// A graph6 parse failure located by input line and byte offset.
class InputError : public nsp::Error {
 public:
  InputError(int line, const nsp::ParseError& e) : nsp::Error("line " + std::to_string(line) + ": " + e.what()) {}
};

/// Reads graph6/sparse6 lines; parse errors name the line and byte offset.
template <class F>
void for_each_input_graph(std::istream& in, F&& visit) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    Graph g;
    try {
      g = nsp::parse_graph_line(line);
    } catch (const nsp::ParseError& e) {
      throw InputError(lineno, e);
    }
    visit(g);
  }
}

// --------------------------------------------------------------------------- gen

std::vector<Graph> generate(const std::string& kind, const std::vector<std::string>& args, int n_opt) {
  auto arg = [&](std::size_t i) -> int {
    if (i < args.size()) return parse_int(args[i], kind + " argument");
    if (i == 0 && n_opt >= 0) return n_opt;
    throw nsp::InvalidArgument("gen " + kind + ": missing argument");
  };
  if (kind == "wheel") return {nsp::wheel(arg(0))};
  if (kind == "cycle") return {nsp::cycle(arg(0))};
  if (kind == "path") return {nsp::path_by_edges(arg(0))};
  if (kind == "complete") return {nsp::complete(arg(0))};
  if (kind == "empty") return {nsp::empty_graph(arg(0))};
  if (kind == "named") {
    if (args.empty()) throw nsp::InvalidArgument("gen named: missing id");
    return {nsp::named(args[0])};
  }
  if (kind == "maxouterplanar") return nsp::enumerate_max_outerplanar(arg(0));
  if (kind == "eprism") {
    if (args.size() == 3) return {nsp::elongated_prism({arg(0), arg(1), arg(2)})};
    if (args.size() <= 1) return nsp::enumerate_elongated_prisms(arg(0));
    throw nsp::InvalidArgument("gen eprism takes s1 s2 s3 or an order");
  }
  if (kind == "nonsep") {
    std::vector<Graph> out;
    for (const nsp::FamilySpec& s : nsp::maximal_nonseparating_instances(arg(0))) out.push_back(s.build());
    return out;
  }
  if (kind == "join") {
    if (args.size() != 2) throw nsp::InvalidArgument("gen join takes two graph6 strings or named ids");
    return {nsp::join(parse_target(args[0]), parse_target(args[1]))};
  }
  throw nsp::InvalidArgument("unknown family '" + kind + "'");
}

// --------------------------------------------------------------------------- check

struct CheckResult {
  std::string verdict;
  Json detail;
};

CheckResult check_one(const std::string& op, const Graph& g, const Context& ctx, int k, const std::string& target) {
  using namespace nsp;
  if (op == "planar") {
    const PlanarityResult p = is_planar(g);
    Json d = planarity_json(p);
    d["validation"] = validation_json(validate_planarity(g, p));
    return {p.planar ? "planar" : "nonplanar", d};
  }
  if (op == "outerplanar") {
    const OuterplanarityResult r = is_outerplanar(g);
    Json d = outerplanarity_json(r);
    d["validation"] = validation_json(validate_outerplanarity(g, r));
    return {r.outerplanar ? "outerplanar" : "not-outerplanar", d};
  }
  if (op == "linearforest") {
    const bool lf = is_linear_forest(g);
    return {lf ? "linear-forest" : "not-linear-forest", Json{{"linear_forest", lf}}};
  }
  if (op == "apex") {
    ApexOptions ao;
    ao.deterministic = ctx.deterministic;
    if (k < 0) {
      const ApexNumber a = apex_number(g, ao);
      return {"apex-number " + std::to_string(a.k), Json{{"k", a.k}, {"certificate", apex_json(a.certificate)}}};
    }
    auto c = is_k_apex(g, k, ao);
    if (!c) return {"not " + std::to_string(k) + "-apex", Json{{"k", k}, {"apex", false}}};
    return {std::to_string(k) + "-apex",
            Json{{"k", k}, {"apex", true}, {"certificate", apex_json(*c)}, {"validation", validation_json(validate_apex(g, *c, k))}}};
  }
  if (op == "minor") {
    if (target.empty()) throw InvalidArgument("check minor needs --target");
    const MinorResult r = has_minor(g, parse_target(target), ctx.budget(), target);
    Json d{{"status", to_string(r.status)}, {"nodes", r.nodes}};
    if (!r.reason.empty()) d["reason"] = r.reason;
    if (r.certificate) {
      d["certificate"] = certificate_json(*r.certificate);
      d["validation"] = validation_json(validate_certificate(g, *r.certificate));
    }
    return {to_string(r.status), d};
  }
  if (op == "hadwiger") {
    const HadwigerResult h = hadwiger_number(g, ctx.budget());
    Json d{{"value", h.value}, {"exact", h.exact}};
    if (h.certificate) d["certificate"] = certificate_json(*h.certificate);
    return {std::string(h.exact ? "hadwiger " : "hadwiger >= ") + std::to_string(h.value), d};
  }
  if (op == "il") {
    const IlResult r = is_il(g, ctx.budget());
    return {r.il ? "IL" : "nIL", il_json(r)};
  }
  IkOptions io;
  io.budget = ctx.budget();
  if (op == "ik") {
    const IkVerdict v = ik_status(g, io);
    return {to_string(v.status), ik_json(v)};
  }
  if (op == "maxnil") {
    const MaxNilResult r = is_max_nil(g, ctx.budget());
    return {r.maximal ? "maxnIL" : (r.il ? "IL" : "not-maximal"), max_nil_json(r)};
  }
  if (op == "maxnik") {
    const MaxNikResult r = certify_max_nik(g, io);
    return {to_string(r.status), max_nik_json(r)};
  }
  if (op == "nonsep") {
    const NonsepClassification c = classify_nonseparating(g);
    Json d = nonsep_json(c);
    d["validation"] = validation_json(validate_classification(g, c));
    return {to_string(c.kind), d};
  }
  MuOptions mo;
  mo.paper_rules_only = ctx.paper_rules_only;
  mo.budget = ctx.budget();
  if (op == "mu") {
    const MuInterval m = mu_bounds(g, mo);
    Json d = mu_json(m, g.order());
    d["validation"] = validation_json(validate_mu(g, m, mo.budget));
    const std::string v = m.exact() ? "mu = " + std::to_string(m.lo)
                                    : "mu in [" + std::to_string(m.lo) + "," + std::to_string(m.hi) + "]";
    return {v, d};
  }
  if (op == "klv") {
    const KlvResult r = check_klv(g, mo);
    const char* v = r.status == KlvStatus::Holds ? "holds" : r.status == KlvStatus::Fails ? "fails" : "inconclusive";
    return {v, klv_json(r, g.order())};
  }
  throw InvalidArgument("unknown check '" + op + "'");
}

int run_check(const std::string& op, const std::string& then, const Context& ctx, int k, const std::string& target) {
  for_each_input_graph(std::cin, [&](const Graph& input) {
    Graph g = input;
    std::string what = op;
    if (op == "complement") {
      g = nsp::complement(input);
      what = then;
      if (then.empty()) {
        std::cout << nsp::to_graph6(g) << '\n';
        return;
      }
    } else if (!then.empty()) {
      throw nsp::InvalidArgument("--then only applies to 'check complement'");
    }
    const CheckResult r = check_one(what, g, ctx, k, target);
    if (ctx.json) {
      Json j;
      j["input"] = nsp::to_graph6(input);
      if (op == "complement") j["graph"] = nsp::to_graph6(g);
      j["check"] = what;
      j["verdict"] = r.verdict;
      j["result"] = r.detail;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << nsp::to_graph6(input) << '\t' << r.verdict << '\n';
    }
  });
  return 0;
}

// --------------------------------------------------------------------------- closure / json

int run_closure(const std::string& moves, int max_order, const std::string& report, const Context& ctx) {
  std::vector<Graph> seeds;
  for_each_input_graph(std::cin, [&](const Graph& g) { seeds.push_back(g); });
  const nsp::ClosureResult r = nsp::closure(seeds, nsp::MoveSet::parse(moves), max_order);
  const Json j = nsp::closure_json(r);
  if (ctx.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& m : r.members) std::cout << nsp::to_graph6(m.graph) << '\n';
  }
  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) throw nsp::InvalidArgument("cannot write " + report);
    out << j.dump(2) << '\n';
  }
  if (r.partial) std::cerr << "closure: graph budget exhausted, family is partial\n";
  return 0;
}

int run_to_json() {
  for_each_input_graph(std::cin, [](const Graph& g) { std::cout << nsp::graph_json(g).dump() << '\n'; });
  return 0;
}

/// Accepts JSON lines or a single JSON array of graph objects.
int run_from_json() {
  std::stringstream buf;
  buf << std::cin.rdbuf();
  const std::string text = buf.str();
  auto emit = [](const Json& j) { std::cout << nsp::to_graph6(nsp::graph_from_json(j)) << '\n'; };
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const Json& j : Json::parse(text)) emit(j);
    return 0;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) emit(Json::parse(line));
  return 0;
}

// --------------------------------------------------------------------------- verify-paper

int run_verify(const std::vector<std::string>& suites, const std::string& range, const std::string& output,
               const Context& ctx) {
  nsp::SuiteOptions opt;
  opt.budget = ctx.budget();
  opt.deterministic = ctx.deterministic;
  opt.seed = ctx.seed;
  opt.paper_rules_only = ctx.paper_rules_only;
  if (!range.empty()) std::tie(opt.n_min, opt.n_max) = parse_range(range);

  std::vector<std::string> ids = suites;
  if (ids.size() == 1 && ids[0] == "all") ids = nsp::suite_ids();
  int code = 0;
  Json all = Json::array();
  std::string text;
  for (const std::string& id : ids) {
    const nsp::SuiteReport r = nsp::verify_paper(id, opt);
    code = std::max(code, r.exit_code());
    all.push_back(r.to_json());
    text += r.to_text();
  }
  const std::string body = ctx.json ? (all.size() == 1 ? all[0] : all).dump(2) + "\n" : text;
  if (output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(output);
    if (!out) throw nsp::InvalidArgument("cannot write " + output);
    out << body;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for non-separating planar graphs and their complements"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  const nsp::Budget env = nsp::Budget::from_env();
  ctx.budget_nodes = env.max_nodes;
  ctx.budget_seconds = env.max_seconds;
  app.add_option("--budget-nodes", ctx.budget_nodes, "minor-search node budget (0 = default; env NSP_BUDGET_NODES)");
  app.add_option("--budget-seconds", ctx.budget_seconds, "minor-search time budget (env NSP_BUDGET_SECONDS)");
  app.add_flag("--deterministic", ctx.deterministic, "least certificates, no timings in reports");
  app.add_option("--seed", ctx.seed, "seed for randomised suites");
  app.add_flag("--json", ctx.json, "structured output");
  app.add_flag("--paper-rules-only", ctx.paper_rules_only, "disable externally sourced mu rules");

  auto* gen = app.add_subcommand("gen", "emit a family as graph6 lines");
  std::string gen_kind;
  std::vector<std::string> gen_args;
  int gen_n = -1;
  gen->add_option("family", gen_kind,
                  "wheel|cycle|path|complete|empty|named|maxouterplanar|eprism|nonsep|join")
      ->required();
  gen->add_option("args", gen_args, "family parameters");
  gen->add_option("--n", gen_n, "order, when not given positionally");

  auto* check = app.add_subcommand("check", "run a check on each graph6 line of stdin");
  std::string check_op, then, target;
  int k = -1;
  check->add_option("op", check_op,
                    "planar|outerplanar|linearforest|apex|minor|hadwiger|il|ik|maxnil|maxnik|nonsep|mu|klv|complement")
      ->required();
  check->add_option("--then", then, "check to run on the complement");
  check->add_option("--k", k, "apex: deletion budget (default: compute the apex number)");
  check->add_option("--target", target, "minor: graph6 string or named id");

  auto* clos = app.add_subcommand("closure", "Delta-Y / Y-Delta closure of the graph6 seeds on stdin");
  std::string moves = "ty,yt", report;
  int max_order = 10;
  clos->add_option("--moves", moves, "ty, yt or both");
  clos->add_option("--max-order", max_order, "largest order kept");
  clos->add_option("--report", report, "also write the JSON family report here");

  app.add_subcommand("to-json", "graph6 lines to JSON lines");
  app.add_subcommand("from-json", "JSON lines (or array) to graph6 lines");

  auto* verify = app.add_subcommand("verify-paper", "run a theorem suite");
  std::vector<std::string> suites;
  std::string range, output;
  verify->add_option("suite", suites, "thm1|thm2|thm3|sec2|il9|klv|remark45|all")->required();
  verify->add_option("--n", range, "order or range A..B");
  verify->add_option("--output", output, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      for (const Graph& g : generate(gen_kind, gen_args, gen_n)) std::cout << nsp::to_graph6(g) << '\n';
      return 0;
    }
    if (*check) return run_check(check_op, then, ctx, k, target);
    if (*clos) return run_closure(moves, max_order, report, ctx);
    if (app.got_subcommand("to-json")) return run_to_json();
    if (app.got_subcommand("from-json")) return run_from_json();
    if (*verify) return run_verify(suites, range, output, ctx);
  } catch (const InputError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const nsp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const nsp::TooLarge& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return 3;
  } catch (const nsp::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
