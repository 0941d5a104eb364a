#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimlift/boolsem.hpp"
#include "dimlift/pss.hpp"
#include "dimlift/random.hpp"

namespace dimlift {

/// Default cap on the total dimension of any constructed space.
inline constexpr std::size_t kDefaultMaxDim = 200000;

/// Index structure of one simple generic space Q_F with F = P(I) x prod_{i in I} T_i.
/// Coordinates are ordered by subset X (binary-counter order over positions
/// in I) first, then by tuple phi (lexicographic, first position most significant).
struct GenComponent {
  std::vector<std::size_t> support;       // I: source component indices, ascending
  std::vector<std::size_t> factor_sizes;  // |T_i| for i in I, same order

  [[nodiscard]] std::size_t subset_count() const { return std::size_t{1} << support.size(); }
  [[nodiscard]] std::size_t tuple_count() const;
  [[nodiscard]] std::size_t dim() const { return subset_count() * tuple_count(); }
  [[nodiscard]] std::size_t index(std::uint64_t subset, std::size_t tuple_index) const {
    return static_cast<std::size_t>(subset) * tuple_count() + tuple_index;
  }
  [[nodiscard]] std::vector<std::size_t> tuple(std::size_t tuple_index) const;
  /// "g<j>{<X as source components>}(<phi>)"
  [[nodiscard]] std::vector<std::string> labels(const std::string& prefix) const;
};

/// A canonical generic map f_mu: src -> space built from a Boolean map.
struct Generic {
  PssSpace src;
  PssSpace space;
  PssHom map;
  SemIso iota;  // 2^n -> Idc space; always the identity permutation
  Rational mu;
  std::vector<GenComponent> parts;
};

/// Gen(A, f) with parameter mu >= 1; f: Idc A -> 2^n. Component j is the
/// simple space indexed by I_j = { i : j in f(atom i) }; an empty I_j gives Q.
/// Throws PreconditionError if mu < 1, ResourceError above max_dim.
Generic gen(const PssSpace& a, const BoolMap& f, const Rational& mu, std::size_t max_dim = kDefaultMaxDim,
            const std::string& label_prefix = "g");

/// gen() for a map into 2 (n = 1).
Generic gen_simple(const PssSpace& a, const BoolMap& f, const Rational& mu, std::size_t max_dim = kDefaultMaxDim);

/// The j-th simple part of a generic map, as a generic map of its own.
Generic generic_part(const Generic& f, std::size_t j);

struct FlatnessReport {
  Rational lambda_min{1};
  /// Set when lambda_min > 1: target component, the two source components and
  /// the coordinate (within the target component) attaining the ratio.
  std::optional<std::size_t> target, numerator, denominator, coordinate;
};

/// Least lambda >= 1 such that f is lambda-flat on every target component.
FlatnessReport flatness_constant(const PssHom& f);

/// q = min(2^(m-1), p) if m, p > 0, else 1.
std::size_t q_bound(std::size_t m, std::size_t p);

/// e_i -> sum of the order-units of the components in f(atom i).
/// src defaults to Q^m with labels e0, e1, ...
PssHom rev_lift(const BoolMap& f, const PssSpace& e, const std::optional<PssSpace>& src = std::nullopt);

/// h: G -> C with h o f = g, for f a simple canonical generic map and C simple.
PssHom factor_simple(const Generic& f, const PssHom& g);

/// g: G -> B with Idc g = gg and g o f = h, for G and B simple.
PssHom factor_idc(const Generic& f, const PssHom& h, const BoolMap& gg);

/// g: G -> B with Idc g = gg and g o f = h, for arbitrary pseudo-simplicial B.
/// lambda defaults to flatness_constant(h); requires f.mu >= q lambda.
PssHom factor_general(const Generic& f, const PssHom& h, const BoolMap& gg,
                      const std::optional<Rational>& lambda = std::nullopt);

/// A factorization problem with canonical f of parameter q * lambda.
struct FactorInstance {
  Generic f;
  PssHom h;
  BoolMap gg;
  Rational lambda;
};

/// Random source with up to max_components components of dimension <= max_comp_dim,
/// random Boolean maps of arity <= max_arity and a random positive h matching them.
FactorInstance random_factor_instance(Rng& rng, std::size_t max_components = 2, std::size_t max_comp_dim = 2,
                                      std::size_t max_arity = 2, std::size_t max_dim = kDefaultMaxDim);

}  // namespace dimlift
