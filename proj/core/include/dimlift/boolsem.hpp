#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimlift/bitset.hpp"
#include "dimlift/poset.hpp"
#include "dimlift/random.hpp"

namespace dimlift {

/// The <v,0>-homomorphism 2^src -> 2^tgt sending atom i to atom_images[i].
/// The image of a subset is the union of the images of its atoms.
class BoolMap {
 public:
  BoolMap() = default;
  /// Throws ShapeError if an image has the wrong width.
  BoolMap(std::size_t src_arity, std::size_t tgt_arity, std::vector<BitSet> atom_images);

  static BoolMap identity(std::size_t n);
  static BoolMap zero(std::size_t src_arity, std::size_t tgt_arity);
  /// Atom i -> images[i], given as member lists.
  static BoolMap from_lists(std::size_t src_arity, std::size_t tgt_arity,
                            const std::vector<std::vector<std::size_t>>& images);

  [[nodiscard]] std::size_t src_arity() const { return src_; }
  [[nodiscard]] std::size_t tgt_arity() const { return tgt_; }
  [[nodiscard]] const std::vector<BitSet>& atom_images() const { return images_; }
  [[nodiscard]] const BitSet& atom_image(std::size_t i) const { return images_.at(i); }

  [[nodiscard]] BitSet image(const BitSet& x) const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const BoolMap&, const BoolMap&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::size_t src_ = 0;
  std::size_t tgt_ = 0;
  std::vector<BitSet> images_;
};

/// g o f. Throws ShapeError unless f.tgt_arity() == g.src_arity().
BoolMap bool_compose(const BoolMap& g, const BoolMap& f);

/// Atom permutation between two Boolean semilattices of the same arity: atom i -> perm[i].
class SemIso {
 public:
  SemIso() = default;
  /// Throws PreconditionError unless perm is a permutation.
  explicit SemIso(std::vector<std::size_t> perm);
  static SemIso identity(std::size_t n);

  [[nodiscard]] std::size_t arity() const { return perm_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& perm() const { return perm_; }
  [[nodiscard]] BoolMap as_map() const;
  [[nodiscard]] SemIso inverse() const;

  friend bool operator==(const SemIso&, const SemIso&) = default;

 private:
  std::vector<std::size_t> perm_;
};

/// A functor from a finite poset to finite Boolean semilattices, with an
/// arrow stored for every comparable pair x <= y.
class SemDiagram {
 public:
  SemDiagram() = default;
  /// Validates identities, arities and every composable triangle; throws CoherenceError on failure.
  SemDiagram(Poset poset, std::vector<std::size_t> arity, std::vector<std::optional<BoolMap>> arrows);

  [[nodiscard]] const Poset& poset() const { return poset_; }
  [[nodiscard]] std::size_t arity(std::size_t x) const { return arity_.at(x); }
  [[nodiscard]] const std::vector<std::size_t>& arities() const { return arity_; }
  /// Throws PreconditionError unless x <= y.
  [[nodiscard]] const BoolMap& arrow(std::size_t x, std::size_t y) const;

  /// The arrows on cover pairs only.
  [[nodiscard]] std::map<std::pair<std::size_t, std::size_t>, BoolMap> cover_arrows() const;

 private:
  Poset poset_;
  std::vector<std::size_t> arity_;
  std::vector<std::optional<BoolMap>> arrows_;  // index x * n + y
};

/// Composes the cover arrows along every path; throws CoherenceError naming
/// the first pair (x, y) where two paths disagree.
SemDiagram diagram_from_covers(const Poset& poset, const std::vector<std::size_t>& arities,
                               const std::map<std::pair<std::size_t, std::size_t>, BoolMap>& cover_arrows);

/// Deterministic-by-seed functorial diagram with arities in [0, max_arity].
SemDiagram random_diagram(const Poset& poset, std::size_t max_arity, std::uint64_t seed);

/// Random <v,0>-homomorphism 2^src -> 2^tgt; each atom-image bit is set with probability 1/2.
BoolMap random_bool_map(std::size_t src, std::size_t tgt, Rng& rng);

}  // namespace dimlift
