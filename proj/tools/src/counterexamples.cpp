#include "counterexamples.hpp"

#include "dimlift/error.hpp"
#include "dimlift/oracle.hpp"

namespace dimlift::cli {

SuiteResult run_nonsimpl_square(std::uint64_t seed, std::size_t trials) {
  SuiteResult r;
  Rng rng(seed);
  std::size_t infeasible = 0, control = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const SquareParams p = random_square_params(rng);
    if (!check_nonsimpl_square(p).feasible())
      ++infeasible;
    else
      r.details.push_back("trial " + std::to_string(i) + ": system unexpectedly feasible");
    const SquareParams pm = random_square_params(rng, true);
    if (check_nonsimpl_square(pm, true).feasible())
      ++control;
    else
      r.details.push_back("trial " + std::to_string(i) + ": relaxed control infeasible");
  }
  r.confirmed = infeasible == trials && control == trials;
  r.summary = std::to_string(infeasible) + "/" + std::to_string(trials) + " infeasible; relaxed control feasible on " +
              std::to_string(control) + "/" + std::to_string(trials);
  return r;
}

SuiteResult run_q_example() {
  SuiteResult r;
  const QExample one = q_example(Rational(1));
  const bool inf = !fm_solve(encode_factor_system(one.f.map, one.h, one.gg).system).feasible();
  bool ok = false;
  try {
    const QExample two = q_example(Rational(2));
    const PssHom g = factor_general(two.f, two.h, two.gg, Rational(1));
    ok = g.matrix() * two.f.map.matrix() == two.h.matrix() && idc_hom(g) == two.gg;
  } catch (const Error& e) {
    r.details.push_back(std::string("\u03bc=2: ") + e.what());
  }
  r.confirmed = inf && ok;
  r.summary = std::string("\u03bc=1 ") + (inf ? "infeasible" : "FEASIBLE") + "; \u03bc=2 " +
              (ok ? "factored and verified" : "NOT factored");
  return r;
}

SuiteResult run_idempotent(std::uint64_t seed, std::size_t trials) {
  SuiteResult r;
  Rng rng(seed);
  std::size_t exact = 0, nonzero = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t e = 1 + rng.below(3), f = 1 + rng.below(3);
    if (idempotent_identity(random_matrix(e, e, rng), random_matrix(e, f, rng), random_matrix(f, f, rng)).holds())
      ++exact;
    else
      r.details.push_back("trial " + std::to_string(i) + ": identity fails");
    if (check_positive_product_nonzero(random_positive_block(e, e, rng), random_positive_block(e, f, rng),
                                       random_positive_block(f, f, rng)))
      ++nonzero;
    else
      r.details.push_back("trial " + std::to_string(i) + ": positive product vanished");
  }
  r.confirmed = exact == trials && nonzero == trials;
  r.summary = r.confirmed ? "identity exact on " + std::to_string(trials) + " triples; positive products nonzero"
                          : "identity exact on " + std::to_string(exact) + "/" + std::to_string(trials) +
                                " triples; positive products nonzero on " + std::to_string(nonzero) + "/" +
                                std::to_string(trials);
  return r;
}

SuiteResult run_lex(std::uint64_t seed, std::size_t trials) {
  SuiteResult r;
  Rng rng(seed);
  std::size_t violated = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const LexCandidate c = random_lex_candidate(rng);
    if (check_lex_candidate(c.h, c.small, c.large, c.alpha))
      ++violated;
    else
      r.details.push_back("candidate " + std::to_string(i) + " lifts the embedding");
  }
  r.confirmed = violated == trials;
  r.summary = std::to_string(violated) + "/" + std::to_string(trials) + " candidates violate a requirement";
  return r;
}

const std::vector<std::string>& counterexample_names() {
  static const std::vector<std::string> names{"nonsimpl-square", "q-example", "idempotent", "lex"};
  return names;
}

SuiteResult run_counterexample(const std::string& name, std::uint64_t seed) {
  if (name == "nonsimpl-square") return run_nonsimpl_square(seed);
  if (name == "q-example") return run_q_example();
  if (name == "idempotent") return run_idempotent(seed);
  if (name == "lex") return run_lex(seed);
  throw PreconditionError("unknown counterexample '" + name + "'");
}

}  // namespace dimlift::cli
