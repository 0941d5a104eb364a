#include "dimlift/pss.hpp"

#include <set>

#include "dimlift/error.hpp"

namespace dimlift {

PssSpace::PssSpace(std::vector<std::vector<std::string>> components) : components_(std::move(components)) {
  std::set<std::string> seen;
  for (const auto& c : components_) {
    if (c.empty()) throw PreconditionError("pseudo-simplicial component must be nonempty");
    offsets_.push_back(total_);
    total_ += c.size();
    for (const auto& l : c)
      if (!seen.insert(l).second) throw PreconditionError("repeated basis label '" + l + "'");
  }
}

PssSpace PssSpace::simplicial(std::size_t n, const std::string& prefix) {
  std::vector<std::vector<std::string>> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back({prefix + std::to_string(i)});
  return PssSpace(std::move(comps));
}

PssSpace PssSpace::simple(std::vector<std::string> labels) { return PssSpace({std::move(labels)}); }

std::size_t PssSpace::component_of(std::size_t coord) const {
  if (coord >= total_) throw ShapeError("coordinate out of range");
  std::size_t i = 0;
  while (i + 1 < offsets_.size() && offsets_[i + 1] <= coord) ++i;
  return i;
}

std::vector<std::string> PssSpace::labels() const {
  std::vector<std::string> out;
  for (const auto& c : components_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

RatVector PssSpace::order_unit() const { return RatVector(total_, Rational(1)); }

RatVector PssSpace::component_unit(std::size_t i) const {
  RatVector v(total_);
  for (std::size_t k = 0; k < component_size(i); ++k) v[offsets_[i] + k] = 1;
  return v;
}

bool PssSpace::in_cone(const RatVector& v) const {
  if (v.size() != total_) throw ShapeError("vector does not belong to the space");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    std::size_t pos = 0, zero = 0;
    for (std::size_t k = 0; k < component_size(i); ++k) {
      int s = v[offsets_[i] + k].sign();
      if (s > 0) ++pos;
      if (s == 0) ++zero;
    }
    if (pos != component_size(i) && zero != component_size(i)) return false;
  }
  return true;
}

BitSet PssSpace::support(const RatVector& v) const {
  if (v.size() != total_) throw ShapeError("vector does not belong to the space");
  BitSet s(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t k = 0; k < component_size(i); ++k)
      if (!v[offsets_[i] + k].is_zero()) s.set(i);
  return s;
}

std::string PositivityViolation::str() const {
  return "block (target " + std::to_string(tgt_component) + ", source " + std::to_string(src_component) +
         ") fails at row " + std::to_string(row) + ": witness " + to_string(witness) + " maps to " +
         to_string(image);
}

std::optional<PositivityViolation> find_positivity_violation(const RatMatrix& m, const PssSpace& src,
                                                             const PssSpace& tgt) {
  if (m.rows() != tgt.total_dim() || m.cols() != src.total_dim())
    throw ShapeError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", spaces need " +
                     std::to_string(tgt.total_dim()) + "x" + std::to_string(src.total_dim()));
  for (std::size_t i = 0; i < src.component_count(); ++i) {
    const std::size_t c0 = src.offset(i), nc = src.component_size(i);
    for (std::size_t j = 0; j < tgt.component_count(); ++j) {
      const std::size_t r0 = tgt.offset(j), nr = tgt.component_size(j);
      bool nonzero = false;
      for (std::size_t r = r0; r < r0 + nr && !nonzero; ++r)
        for (std::size_t c = c0; c < c0 + nc; ++c)
          if (!m.at(r, c).is_zero()) {
            nonzero = true;
            break;
          }
      if (!nonzero) continue;
      for (std::size_t r = r0; r < r0 + nr; ++r) {
        RatVector w(src.total_dim());
        for (std::size_t c = c0; c < c0 + nc; ++c) w[c] = 1;
        std::optional<std::size_t> neg;
        Rational rest, rowsum;
        for (std::size_t c = c0; c < c0 + nc; ++c) {
          rowsum += m.at(r, c);
          if (m.at(r, c).is_negative() && !neg) neg = c;
        }
        if (neg) {
          // Weight the negative column enough to make this row of the image negative.
          for (std::size_t c = c0; c < c0 + nc; ++c)
            if (c != *neg) rest += m.at(r, c).abs();
          w[*neg] = rest / m.at(r, *neg).abs() + 1;
        } else if (rowsum.is_positive()) {
          continue;
        }
        RatVector img = m.apply(w);
        return PositivityViolation{i, j, r, std::move(w), std::move(img)};
      }
    }
  }
  return std::nullopt;
}

PssHom::PssHom(PssSpace src, PssSpace tgt, RatMatrix matrix)
    : src_(std::move(src)), tgt_(std::move(tgt)), m_(std::move(matrix)) {
  if (auto v = find_positivity_violation(m_, src_, tgt_))
    throw PreconditionError("not a positive homomorphism: " + v->str());
}

PssHom PssHom::zero(const PssSpace& src, const PssSpace& tgt) {
  return PssHom(src, tgt, RatMatrix(tgt.total_dim(), src.total_dim()));
}

PssHom PssHom::identity(const PssSpace& a) { return PssHom(a, a, RatMatrix::identity(a.total_dim())); }

RatMatrix PssHom::block(std::size_t j, std::size_t i) const {
  return m_.block(tgt_.offset(j), tgt_.component_size(j), src_.offset(i), src_.component_size(i));
}

bool PssHom::block_is_zero(std::size_t j, std::size_t i) const {
  for (std::size_t r = 0; r < tgt_.component_size(j); ++r)
    for (std::size_t c = 0; c < src_.component_size(i); ++c)
      if (!m_.at(tgt_.offset(j) + r, src_.offset(i) + c).is_zero()) return false;
  return true;
}

PssHom hom_validate(const RatMatrix& m, const PssSpace& src, const PssSpace& tgt) { return PssHom(src, tgt, m); }

PssHom compose(const PssHom& g, const PssHom& f) {
  if (!(f.tgt() == g.src())) throw ShapeError("compose: target of the first map is not the source of the second");
  return PssHom(f.src(), g.tgt(), g.matrix() * f.matrix());
}

BoolMap idc_hom(const PssHom& f) {
  std::vector<BitSet> im;
  for (std::size_t i = 0; i < f.src().component_count(); ++i) {
    BitSet b(f.tgt().component_count());
    for (std::size_t j = 0; j < f.tgt().component_count(); ++j)
      if (!f.block_is_zero(j, i)) b.set(j);
    im.push_back(b);
  }
  return BoolMap(f.src().component_count(), f.tgt().component_count(), std::move(im));
}

bool arch_leq(const PssSpace& space, const RatVector& x, const RatVector& y) {
  if (x.size() != space.total_dim() || y.size() != space.total_dim())
    throw ShapeError("arch_leq: vectors do not belong to the space");
  return leq_coordinatewise(x, y);
}

bool rel_lambda(const PssSpace& space, const RatVector& a, const RatVector& b, const Rational& lambda,
                Relation kind) {
  if (!lambda.is_positive()) throw PreconditionError("rel_lambda needs lambda > 0");
  const bool arch = kind == Relation::kArchBelow || kind == Relation::kArchBoth;
  if (arch) {
    if (!is_nonnegative(a) || !is_nonnegative(b))
      throw PreconditionError("archimedean relation needs nonnegative vectors");
  } else if (!space.in_cone(a) || !space.in_cone(b)) {
    throw PreconditionError("relation needs vectors in the positive cone");
  }
  auto below = [&](const RatVector& x, const RatVector& y) {
    RatVector ly = lambda * y;
    return arch ? arch_leq(space, x, ly) : space.in_cone(ly - x);
  };
  switch (kind) {
    case Relation::kBelow:
    case Relation::kArchBelow:
      return below(a, b);
    case Relation::kBoth:
    case Relation::kArchBoth:
      return below(a, b) && below(b, a);
  }
  return false;
}

}  // namespace dimlift
