#include "cli.hpp"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "counterexamples.hpp"
#include "dimlift/error.hpp"
#include "dimlift/json_io.hpp"
#include "dimlift/lift.hpp"
#include "dimlift/oracle.hpp"

namespace dimlift::cli {

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t max_vars = kDefaultMaxVars;
  std::string out;
  std::string format = "json";
  std::string input;
  std::string name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + cfg.out);
  f << text;
}

std::string names_of(const Poset& p, Poset::Mask m) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((m >> i) & 1U) s += (s.size() > 1 ? ", " : "") + p.name(i);
  return s + "}";
}

int cmd_dismantle(const RunConfig& cfg, std::ostream& out) {
  const Poset p = parse_poset(read_file(cfg.input));
  const DismantleResult r = dismantle(p);
  std::ostringstream os;
  if (r.order) {
    os << "dismantlable; removal order:";
    for (auto x : r.order->removal_sequence) os << ' ' << p.name(x);
    os << '\n';
  } else {
    os << "not dismantlable\n";
    for (auto m : r.stuck_sets) os << "stuck set " << names_of(p, m) << " (" << std::popcount(m) << " elements)\n";
  }
  emit(cfg, os.str(), out);
  return kOk;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SemDiagram d = parse_diagram(read_file(cfg.input));
  LiftOptions opt;
  opt.max_dim = cfg.max_dim;
  const LiftResult r = dislift(d, opt);
  emit(cfg, cfg.format == "dot" ? diagram_to_dot(d, &r) : lift_to_json(d, r, cfg.seed, cfg.max_dim), out);
  for (const auto& c : r.report.checks)
    if (!c.pass) err << "check failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  return r.report.all_pass() ? kOk : kNotConfirmed;
}

int cmd_counterexamples(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SuiteResult r = run_counterexample(cfg.name, cfg.seed);
  emit(cfg, cfg.name + ": " + r.summary + "\n", out);
  for (const auto& d : r.details) err << d << '\n';
  return r.confirmed ? kOk : kNotConfirmed;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
  const std::string text = read_file(cfg.input);
  emit(cfg, looks_like_diagram(text) ? diagram_to_dot(parse_diagram(text)) : to_dot(parse_poset(text)), out);
  return kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const LinSystem sys = parse_lin_system(read_file(cfg.input));
  const FeasibilityResult r = fm_solve(sys, cfg.max_vars);
  std::ostringstream os;
  os << (r.feasible() ? "feasible" : "infeasible") << '\n';
  if (r.feasible())
    for (std::size_t i = 0; i < sys.vars.size(); ++i) os << sys.vars[i] << " = " << r.witness[i] << '\n';
  emit(cfg, os.str(), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("DIMLIFT_MAX_DIM")) {
    try {
      cfg.max_dim = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: DIMLIFT_MAX_DIM is not a positive integer\n";
      return kParse;
    }
  }

  CLI::App app{"Liftings of finite Boolean semilattice diagrams by pseudo-simplicial vector spaces"};
  app.name("dimlift");
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Seed of every randomized suite")->capture_default_str();
  app.add_option("--max-dim", cfg.max_dim, "Largest dimension a constructed space may have")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-vars", cfg.max_vars, "Largest coupled variable group for elimination")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write the result to this file instead of stdout");
  app.add_option("--format", cfg.format, "Output format of lift")->check(CLI::IsMember({"json", "dot"}));

  auto* dis = app.add_subcommand("dismantle", "Find a dismantling order of a poset");
  dis->add_option("poset", cfg.input, "Poset JSON")->required();
  auto* lift = app.add_subcommand("lift", "Lift a diagram over a dismantlable poset");
  lift->add_option("diagram", cfg.input, "Diagram JSON")->required();
  auto* ce = app.add_subcommand("counterexamples", "Re-verify a counterexample on seeded samples");
  ce->add_option("name", cfg.name, "Which counterexample")->required()->check(CLI::IsMember(counterexample_names()));
  auto* dot = app.add_subcommand("export-dot", "Cover graph of a poset or diagram in DOT");
  dot->add_option("input", cfg.input, "Poset or diagram JSON")->required();
  auto* solve = app.add_subcommand("solve", "Decide feasibility of a linear system");
  solve->add_option("system", cfg.input, "Linear system JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  try {
    if (*dis) return cmd_dismantle(cfg, out);
    if (*lift) return cmd_lift(cfg, out, err);
    if (*ce) return cmd_counterexamples(cfg, out, err);
    if (*dot) return cmd_export_dot(cfg, out);
    if (*solve) return cmd_solve(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const UnsupportedInput& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}

}  // namespace dimlift::cli
