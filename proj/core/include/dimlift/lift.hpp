#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimlift/boolsem.hpp"
#include "dimlift/genfact.hpp"
#include "dimlift/poset.hpp"
#include "dimlift/pss.hpp"

namespace dimlift {

/// A functor from a finite poset to pseudo-simplicial spaces, with an arrow
/// for every comparable pair. Not validated on construction; see verify_lifting.
class PssDiagram {
 public:
  PssDiagram() = default;
  PssDiagram(Poset poset, std::vector<PssSpace> objects, std::vector<std::optional<PssHom>> arrows);

  [[nodiscard]] const Poset& poset() const { return poset_; }
  [[nodiscard]] const PssSpace& object(std::size_t x) const { return objects_.at(x); }
  [[nodiscard]] const std::vector<PssSpace>& objects() const { return objects_; }
  /// Throws PreconditionError unless x <= y.
  [[nodiscard]] const PssHom& arrow(std::size_t x, std::size_t y) const;
  /// Mutable access, for tests that tamper with a lifting.
  [[nodiscard]] std::optional<PssHom>& arrow_slot(std::size_t x, std::size_t y);

 private:
  Poset poset_;
  std::vector<PssSpace> objects_;
  std::vector<std::optional<PssHom>> arrows_;  // index x * n + y
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {});
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::size_t failures() const;
};

/// Checks Psi identities and functoriality, positivity of every arrow, the
/// arity of every iota and every naturality square, all exactly.
Report verify_lifting(const SemDiagram& phi, const PssDiagram& psi, const std::vector<SemIso>& iota);

struct LiftOptions {
  std::size_t max_dim = kDefaultMaxDim;
  DismantlePreference preference = DismantlePreference::kMinimalFirst;
  /// Use this removal sequence instead of searching for one.
  std::optional<DismantlingOrder> order;
};

struct LiftResult {
  PssDiagram psi;
  std::vector<SemIso> iota;
  DismantlingOrder order;
  /// Generic parameter used for each element (1 where no generic map was built).
  std::vector<Rational> mu;
  Report report;
};

/// Lifts a diagram over a dismantlable poset by re-inserting elements in the
/// reverse of a dismantling order. Throws UnsupportedInput if the poset is not
/// dismantlable, ResourceError if a space exceeds options.max_dim.
LiftResult dislift(const SemDiagram& phi, const LiftOptions& options = {});

/// Finite stage of a direct system: Boolean maps s_i: 2^{m_i} -> 2^{m_{i+1}},
/// positive maps t_i: H_i -> H_{i+1} between simplicial spaces, and
/// f_i: 2^{m_i} -> Idc H_i with Idc t_i o f_i = f_{i+1} o s_i.
struct ChainSpec {
  std::vector<std::size_t> arity;
  std::vector<BoolMap> s;
  std::vector<PssSpace> h;
  std::vector<PssHom> t;
  std::vector<BoolMap> f;

  [[nodiscard]] std::size_t length() const { return arity.empty() ? 0 : arity.size() - 1; }
};

/// Throws PreconditionError naming the first broken shape or square.
void validate_chain_spec(const ChainSpec& spec);

struct ChainLifting {
  std::vector<PssSpace> g;
  std::vector<PssHom> s;      // s_i: G_i -> G_{i+1}
  std::vector<PssHom> f;      // f_i: G_i -> H_i
  std::vector<SemIso> alpha;  // 2^{m_i} -> Idc G_i
  std::vector<Rational> mu;
  Report report;
};

ChainLifting lift_chain(const ChainSpec& spec, std::size_t max_dim = kDefaultMaxDim);

/// Deterministic compatible spec with arities in [1, max_arity] and
/// simplicial dimensions in [1, max_h_dim].
ChainSpec random_chain_spec(std::size_t length, std::size_t max_arity, std::size_t max_h_dim, std::uint64_t seed);

/// Finite join-semilattice with zero, as a join table.
struct JoinTable {
  std::vector<std::vector<std::size_t>> join;
  std::size_t zero = 0;

  [[nodiscard]] std::size_t size() const { return join.size(); }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return join[a][b] == b; }
};

/// Throws PreconditionError unless the table is associative, commutative,
/// idempotent and has zero as neutral element.
void validate_join_table(const JoinTable& s);

/// Join table of a finite lattice given as a poset; nullopt if some join is missing.
std::optional<JoinTable> join_table(const Poset& p);

/// Every join-semilattice with zero on n <= 6 elements, up to isomorphism.
std::vector<JoinTable> all_join_semilattices(std::size_t n);

/// The vector space Q^S with cone { v : v >= 0 and supp v in j[S] },
/// j(s) = { x : s not <= x }.
struct LiftSgResult {
  JoinTable table;
  std::vector<BitSet> support;  // j(s)

  [[nodiscard]] bool in_cone(const RatVector& v) const;
  /// Compact-ideal order on cone elements: inclusion of supports.
  [[nodiscard]] bool ideal_leq(const RatVector& a, const RatVector& b) const;
  /// j preserves joins and zero and is one-to-one.
  [[nodiscard]] bool is_embedding() const;
  /// The ideal order on the generators 1_{j(s)} is exactly the order of S.
  [[nodiscard]] bool reproduces_order() const;
};

LiftSgResult lift_sg(const JoinTable& s);

}  // namespace dimlift
