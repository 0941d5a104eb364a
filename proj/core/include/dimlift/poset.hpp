#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dimlift {

/// Finite partial order on at most 64 named elements.
///
/// The order is stored as one upward bitmask per element: bit j of up(i)
/// is set iff i <= j. Reflexivity, antisymmetry and transitivity are checked
/// on construction.
class Poset {
 public:
  static constexpr std::size_t kMaxElements = 64;
  using Mask = std::uint64_t;

  Poset() = default;
  /// leq[i][j] == true iff element i <= element j. Throws ParseError if not a partial order.
  Poset(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq);

  /// Reflexive-transitive closure of the given cover pairs (indices into names).
  /// Throws ParseError on a cycle (closure not antisymmetric) or a bad index.
  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  /// Same, with element names in the cover list.
  static Poset from_named_covers(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);
  /// Powerset lattice of {0..k-1}; element i is the subset with bitmask i.
  static Poset boolean_lattice(std::size_t k);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  /// Throws ParseError if absent.
  [[nodiscard]] std::size_t index_of(const std::string& name) const;

  [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return (up_[i] >> j) & 1U; }
  [[nodiscard]] bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  [[nodiscard]] bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  [[nodiscard]] Mask all() const;
  [[nodiscard]] Mask up_set(std::size_t i) const { return up_[i]; }
  [[nodiscard]] Mask down_set(std::size_t i) const { return down_[i]; }

  /// Upper / lower covers of i inside the subposet induced by `within` (i must belong to it).
  [[nodiscard]] Mask upper_covers(std::size_t i, Mask within) const;
  [[nodiscard]] Mask lower_covers(std::size_t i, Mask within) const;

  /// Number of cover steps in a longest chain; -1 for the empty poset.
  [[nodiscard]] int height() const;

  /// Element indices sorted so that i < j in the order implies i is listed first.
  [[nodiscard]] std::vector<std::size_t> linear_extension() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// All pairs (x, y) with x < y and nothing strictly between, sorted lexicographically.
std::vector<std::pair<std::size_t, std::size_t>> covers(const Poset& p);

/// Elements with at most one upper cover and at most one lower cover in the subposet `within`.
Poset::Mask doubly_irreducible(const Poset& p, Poset::Mask within);
/// Doubly-irreducible elements of the whole poset, ascending.
std::vector<std::size_t> doubly_irreducible(const Poset& p);

struct DismantlingOrder {
  /// Element indices in removal order; each is doubly irreducible in what remains.
  std::vector<std::size_t> removal_sequence;
};

enum class DismantlePreference {
  /// Candidates are tried in ascending element index.
  kAscendingIndex,
  /// Minimal doubly-irreducible elements first (ascending index within each
  /// group). Removing minimal elements first means they are re-inserted last
  /// by the lifting, through the cheap bottom-attach step.
  kMinimalFirst,
};

struct DismantleResult {
  std::optional<DismantlingOrder> order;
  /// Nonempty remaining subsets met during the search whose doubly-irreducible
  /// set is empty (ascending, deduplicated). Explains a failure.
  std::vector<Poset::Mask> stuck_sets;
};

/// Backtracking search for a dismantling order, memoized on the remaining-element mask.
/// Throws ResourceError if the poset has more than max_elements elements.
DismantleResult dismantle(const Poset& p, DismantlePreference pref = DismantlePreference::kAscendingIndex,
                          std::size_t max_elements = 24);

/// Convenience wrapper returning just the order.
std::optional<DismantlingOrder> dismantling_order(const Poset& p,
                                                  DismantlePreference pref = DismantlePreference::kAscendingIndex);

/// Replays the sequence step by step against doubly_irreducible().
bool is_valid_dismantling(const Poset& p, const DismantlingOrder& order);

/// Enumerates every partial order on n <= 6 elements up to isomorphism, in a
/// fixed deterministic order. Each representative is naturally labelled
/// (i < j in the order implies i < j as integers) and its elements are named
/// "0", "1", ...
std::vector<Poset> all_posets(std::size_t n);

/// Graphviz digraph of the cover relation. Optional per-node labels.
std::string to_dot(const Poset& p, const std::vector<std::string>& node_labels = {});

}  // namespace dimlift
