#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dimlift/boolsem.hpp"
#include "dimlift/matrix.hpp"
#include "dimlift/rational.hpp"

namespace dimlift {

/// Finite direct sum of simple spaces Q_X. Each component is the list of
/// labels of its canonical basis; vectors are coordinate lists in the
/// concatenated basis. Q_X is ordered strictly: v >= 0 iff v = 0 or every
/// coordinate of v is positive.
class PssSpace {
 public:
  PssSpace() = default;
  /// Throws PreconditionError on an empty component or a repeated label.
  explicit PssSpace(std::vector<std::vector<std::string>> components);

  /// Q^n: n singleton components labelled prefix0, prefix1, ...
  static PssSpace simplicial(std::size_t n, const std::string& prefix = "e");
  /// Q_X with the given basis labels.
  static PssSpace simple(std::vector<std::string> labels);

  [[nodiscard]] std::size_t component_count() const { return components_.size(); }
  [[nodiscard]] std::size_t total_dim() const { return total_; }
  [[nodiscard]] const std::vector<std::vector<std::string>>& components() const { return components_; }
  [[nodiscard]] const std::vector<std::string>& component(std::size_t i) const { return components_.at(i); }
  [[nodiscard]] std::size_t component_size(std::size_t i) const { return components_.at(i).size(); }
  /// Index of the first coordinate of component i.
  [[nodiscard]] std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  [[nodiscard]] std::size_t component_of(std::size_t coord) const;
  [[nodiscard]] std::vector<std::string> labels() const;

  /// Sum of all canonical basis vectors.
  [[nodiscard]] RatVector order_unit() const;
  /// Order-unit of component i, as a vector of the whole space.
  [[nodiscard]] RatVector component_unit(std::size_t i) const;

  /// Membership in the positive cone.
  [[nodiscard]] bool in_cone(const RatVector& v) const;
  /// Components on which v is nonzero.
  [[nodiscard]] BitSet support(const RatVector& v) const;

  friend bool operator==(const PssSpace& a, const PssSpace& b) { return a.components_ == b.components_; }

 private:
  std::vector<std::vector<std::string>> components_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// Why a matrix is not a positive homomorphism.
struct PositivityViolation {
  std::size_t src_component = 0;
  std::size_t tgt_component = 0;
  std::size_t row = 0;       // global row index
  RatVector witness;         // source vector in the cone
  RatVector image;           // its image, outside the cone
  [[nodiscard]] std::string str() const;
};

/// A block M_{j,i} is fine iff it is zero, or all entries are >= 0 and every row sum is > 0.
std::optional<PositivityViolation> find_positivity_violation(const RatMatrix& m, const PssSpace& src,
                                                             const PssSpace& tgt);

/// Positive homomorphism between pseudo-simplicial spaces, validated on construction.
class PssHom {
 public:
  PssHom() = default;
  /// Throws ShapeError on a size mismatch, PreconditionError on a positivity violation.
  PssHom(PssSpace src, PssSpace tgt, RatMatrix matrix);

  static PssHom zero(const PssSpace& src, const PssSpace& tgt);
  static PssHom identity(const PssSpace& a);

  [[nodiscard]] const PssSpace& src() const { return src_; }
  [[nodiscard]] const PssSpace& tgt() const { return tgt_; }
  [[nodiscard]] const RatMatrix& matrix() const { return m_; }

  /// Block from source component i to target component j.
  [[nodiscard]] RatMatrix block(std::size_t j, std::size_t i) const;
  [[nodiscard]] bool block_is_zero(std::size_t j, std::size_t i) const;
  [[nodiscard]] bool is_zero() const { return m_.is_zero(); }
  [[nodiscard]] RatVector apply(const RatVector& v) const { return m_.apply(v); }

  friend bool operator==(const PssHom&, const PssHom&) = default;

 private:
  PssSpace src_;
  PssSpace tgt_;
  RatMatrix m_;
};

PssHom hom_validate(const RatMatrix& m, const PssSpace& src, const PssSpace& tgt);

/// g o f. Throws ShapeError unless f.tgt() == g.src().
PssHom compose(const PssHom& g, const PssHom& f);

/// Arity of the Boolean semilattice of compact ideals.
inline std::size_t idc_space(const PssSpace& a) { return a.component_count(); }

/// Atom i goes to the set of target components j with a nonzero block (j, i).
BoolMap idc_hom(const PssHom& f);

/// Archimedean order: coordinatewise.
bool arch_leq(const PssSpace& space, const RatVector& x, const RatVector& y);

enum class Relation {
  kBelow,       // a <= lambda b in the strict order
  kBoth,        // both directions of kBelow
  kArchBelow,   // a <= lambda b coordinatewise
  kArchBoth,
};

/// Throws PreconditionError if lambda <= 0 or a, b violate the cone precondition.
bool rel_lambda(const PssSpace& space, const RatVector& a, const RatVector& b, const Rational& lambda,
                Relation kind);

}  // namespace dimlift
