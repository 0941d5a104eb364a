#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimlift/boolsem.hpp"
#include "dimlift/matrix.hpp"
#include "dimlift/genfact.hpp"
#include "dimlift/pss.hpp"
#include "dimlift/random.hpp"

namespace dimlift {

/// coeffs . x + constant
struct LinForm {
  RatVector coeffs;
  Rational constant;

  [[nodiscard]] Rational eval(const RatVector& x) const;
};

/// Equalities (form = 0), non-strict (form >= 0) and strict (form > 0) constraints.
struct LinSystem {
  std::vector<std::string> vars;
  std::vector<LinForm> eq, ge, gt;

  std::size_t add_var(std::string name);
  /// Zero form over the current variables.
  [[nodiscard]] LinForm form() const;
  /// Throws ShapeError if a form has the wrong number of coefficients.
  void check_shape() const;
  [[nodiscard]] bool satisfied_by(const RatVector& x) const;
};

enum class Verdict { kFeasible, kInfeasible };

struct FeasibilityResult {
  Verdict verdict = Verdict::kInfeasible;
  RatVector witness;  // when feasible

  [[nodiscard]] bool feasible() const { return verdict == Verdict::kFeasible; }
};

inline constexpr std::size_t kDefaultMaxVars = 12;

/// Exact Fourier-Motzkin elimination with strict inequalities. Equalities are
/// substituted away first; the remaining variables split into independent
/// groups, each limited to max_vars (ResourceError beyond).
FeasibilityResult fm_solve(const LinSystem& sys, std::size_t max_vars = kDefaultMaxVars);

/// Unknowns: the entries of g: G -> B in blocks where gg asks for a nonzero block.
struct FactorSystem {
  LinSystem system;
  std::size_t rows = 0, cols = 0;
  std::vector<std::pair<std::size_t, std::size_t>> entries;  // variable -> (row, col)

  [[nodiscard]] RatMatrix assemble(const RatVector& x) const;
  /// Variable assignment read off a candidate matrix.
  [[nodiscard]] RatVector encode(const RatMatrix& g) const;
};

/// g o f = h, every entry of a required block >= 0, every row sum of a required block > 0.
FactorSystem encode_factor_system(const PssHom& f, const PssHom& h, const BoolMap& gg);

/// Parameters of the two simplicial maps Q^2 -> Q^3 of the non-simplicial square.
struct SquareParams {
  Rational alpha, beta, xi, eta;
  Rational alpha1, beta1, xi1, eta1;
};

/// The linear system g f0 = h f1 in the unknowns a, b, c, u, w, a', b', c', v', w' (all > 0).
/// With relaxed set, the fourth-row equations are left out.
LinSystem nonsimpl_square_system(const SquareParams& p, bool relaxed = false);
FeasibilityResult check_nonsimpl_square(const SquareParams& p, bool relaxed = false);

/// Strictly positive parameters. With ratio_matched, eta'/xi' = eta/xi, the
/// only case in which the relaxed system is solvable.
SquareParams random_square_params(Rng& rng, bool ratio_matched = false);

/// The map Q^2 -> Q sending (x, y) to x + y against a canonical generic
/// lifting of (x, y) -> (x or y, y), with Boolean target map x or y.
struct QExample {
  Generic f;
  PssHom h;
  BoolMap gg;
};
QExample q_example(const Rational& mu);

struct IdempotentResidual {
  RatMatrix r1, r2, r3;  // alpha^2 - alpha, gamma^2 - gamma, alpha beta + beta gamma - beta
  RatMatrix lhs, rhs;    // 2 alpha beta gamma and alpha r3 + r3 gamma - r1 beta - beta r2
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// alpha: E -> E, beta: F -> E, gamma: F -> F as matrices.
IdempotentResidual idempotent_identity(const RatMatrix& alpha, const RatMatrix& beta, const RatMatrix& gamma);

/// Nonzero, nonnegative, every row sum positive.
bool is_nonzero_positive_block(const RatMatrix& m);

/// True iff 2 alpha beta gamma is again a nonzero positive block. Throws
/// PreconditionError unless all three are.
bool check_positive_product_nonzero(const RatMatrix& alpha, const RatMatrix& beta, const RatMatrix& gamma);

RatMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
RatMatrix random_positive_block(std::size_t rows, std::size_t cols, Rng& rng);

/// (a, b) >= 0 iff a > 0, or a = 0 and b >= 0.
struct LexPair {
  std::int64_t a = 0, b = 0;
  [[nodiscard]] bool nonnegative() const { return a > 0 || (a == 0 && b >= 0); }
};

struct LexViolation {
  enum class Kind { kSmallNotPositive, kLargeNotPositive, kNotInfinitesimal, kSquare };
  Kind kind = Kind::kSquare;
  std::optional<std::size_t> component;
  std::optional<std::int64_t> n;  // multiple at which b' - n a' leaves the cone
  std::string detail;
};

/// Candidate lifting of the lex example: small = f(0,1), large = f(1,0),
/// alpha: Idc H -> 2^2. Returns the first violated requirement.
std::optional<LexViolation> check_lex_candidate(const PssSpace& h, const RatVector& small, const RatVector& large,
                                                const SemIso& alpha);

struct LexCandidate {
  PssSpace h;
  RatVector small, large;
  SemIso alpha;
};

/// Two components of dimension <= max_dim; images drawn from mixed zero,
/// positive and signed blocks.
LexCandidate random_lex_candidate(Rng& rng, std::size_t max_dim = 3);

}  // namespace dimlift
