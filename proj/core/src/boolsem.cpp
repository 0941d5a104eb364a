#include "dimlift/boolsem.hpp"

#include <algorithm>
#include <bit>

#include "dimlift/error.hpp"

namespace dimlift {

BoolMap::BoolMap(std::size_t src_arity, std::size_t tgt_arity, std::vector<BitSet> atom_images)
    : src_(src_arity), tgt_(tgt_arity), images_(std::move(atom_images)) {
  if (images_.size() != src_)
    throw ShapeError("BoolMap needs " + std::to_string(src_) + " atom images, got " + std::to_string(images_.size()));
  for (const auto& im : images_)
    if (im.width() != tgt_) throw ShapeError("BoolMap atom image has width " + std::to_string(im.width()) +
                                             ", expected " + std::to_string(tgt_));
}

BoolMap BoolMap::identity(std::size_t n) {
  std::vector<BitSet> im;
  for (std::size_t i = 0; i < n; ++i) im.push_back(BitSet(n, {i}));
  return BoolMap(n, n, std::move(im));
}

BoolMap BoolMap::zero(std::size_t src_arity, std::size_t tgt_arity) {
  return BoolMap(src_arity, tgt_arity, std::vector<BitSet>(src_arity, BitSet(tgt_arity)));
}

BoolMap BoolMap::from_lists(std::size_t src_arity, std::size_t tgt_arity,
                            const std::vector<std::vector<std::size_t>>& images) {
  std::vector<BitSet> im;
  for (const auto& l : images) im.push_back(BitSet::from_members(tgt_arity, l));
  return BoolMap(src_arity, tgt_arity, std::move(im));
}

BitSet BoolMap::image(const BitSet& x) const {
  if (x.width() != src_) throw ShapeError("BoolMap applied to a subset of the wrong width");
  BitSet out(tgt_);
  for (auto i : x.members()) out |= images_[i];
  return out;
}

bool BoolMap::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const BitSet& b) { return b.empty(); });
}

std::string BoolMap::str() const {
  std::string s = "2^" + std::to_string(src_) + "->2^" + std::to_string(tgt_) + " [";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + images_[i].str();
  return s + "]";
}

BoolMap bool_compose(const BoolMap& g, const BoolMap& f) {
  if (f.tgt_arity() != g.src_arity())
    throw ShapeError("bool_compose arity mismatch: " + f.str() + " then " + g.str());
  std::vector<BitSet> im;
  im.reserve(f.src_arity());
  for (const auto& a : f.atom_images()) im.push_back(g.image(a));
  return BoolMap(f.src_arity(), g.tgt_arity(), std::move(im));
}

SemIso::SemIso(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
  std::vector<bool> hit(perm_.size());
  for (auto p : perm_) {
    if (p >= perm_.size() || hit[p]) throw PreconditionError("SemIso requires a permutation");
    hit[p] = true;
  }
}

SemIso SemIso::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return SemIso(std::move(p));
}

BoolMap SemIso::as_map() const {
  std::vector<BitSet> im;
  for (auto p : perm_) im.push_back(BitSet(perm_.size(), {p}));
  return BoolMap(perm_.size(), perm_.size(), std::move(im));
}

SemIso SemIso::inverse() const {
  std::vector<std::size_t> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = i;
  return SemIso(std::move(inv));
}

namespace {

std::string pair_name(const Poset& p, std::size_t x, std::size_t y) { return p.name(x) + "<" + p.name(y); }

}  // namespace

SemDiagram::SemDiagram(Poset poset, std::vector<std::size_t> arity, std::vector<std::optional<BoolMap>> arrows)
    : poset_(std::move(poset)), arity_(std::move(arity)), arrows_(std::move(arrows)) {
  const std::size_t n = poset_.size();
  if (arity_.size() != n) throw ShapeError("diagram needs one arity per element");
  if (arrows_.size() != n * n) throw ShapeError("diagram arrow table has the wrong size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& a = arrows_[x * n + y];
      if (poset_.leq(x, y) != a.has_value())
        throw CoherenceError("arrow presence does not match the order at " + pair_name(poset_, x, y));
      if (!a) continue;
      if (a->src_arity() != arity_[x] || a->tgt_arity() != arity_[y])
        throw CoherenceError("arrow " + pair_name(poset_, x, y) + " has wrong arities");
      if (x == y && *a != BoolMap::identity(arity_[x]))
        throw CoherenceError("arrow at " + poset_.name(x) + " is not the identity");
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!poset_.lt(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!poset_.lt(y, z)) continue;
        if (bool_compose(*arrows_[y * n + z], *arrows_[x * n + y]) != *arrows_[x * n + z])
          throw CoherenceError("triangle " + poset_.name(x) + "<" + poset_.name(y) + "<" + poset_.name(z) +
                               " does not commute");
      }
    }
}

const BoolMap& SemDiagram::arrow(std::size_t x, std::size_t y) const {
  const std::size_t n = poset_.size();
  if (x >= n || y >= n || !poset_.leq(x, y)) throw PreconditionError("no arrow between incomparable elements");
  return *arrows_[x * n + y];
}

std::map<std::pair<std::size_t, std::size_t>, BoolMap> SemDiagram::cover_arrows() const {
  std::map<std::pair<std::size_t, std::size_t>, BoolMap> out;
  for (auto c : covers(poset_)) out.emplace(c, arrow(c.first, c.second));
  return out;
}

SemDiagram diagram_from_covers(const Poset& poset, const std::vector<std::size_t>& arities,
                               const std::map<std::pair<std::size_t, std::size_t>, BoolMap>& cover_arrows) {
  const std::size_t n = poset.size();
  if (arities.size() != n) throw ShapeError("diagram needs one arity per element");
  auto cov = covers(poset);
  for (const auto& [pr, m] : cover_arrows)
    if (std::find(cov.begin(), cov.end(), pr) == cov.end())
      throw PreconditionError("arrow given on a non-cover pair " + pair_name(poset, pr.first, pr.second));
  std::vector<std::optional<BoolMap>> arrows(n * n);
  for (std::size_t x = 0; x < n; ++x) arrows[x * n + x] = BoolMap::identity(arities[x]);
  for (auto [x, y] : cov) {
    auto it = cover_arrows.find({x, y});
    if (it == cover_arrows.end()) throw PreconditionError("missing arrow on cover " + pair_name(poset, x, y));
    if (it->second.src_arity() != arities[x] || it->second.tgt_arity() != arities[y])
      throw ShapeError("arrow " + pair_name(poset, x, y) + " does not match the arities");
  }
  for (auto y : poset.linear_extension()) {
    Poset::Mask lowers = poset.lower_covers(y, poset.all());
    for (auto x : poset.linear_extension()) {
      if (!poset.lt(x, y)) continue;
      std::optional<BoolMap> found;
      for (Poset::Mask m = lowers; m; m &= m - 1) {
        auto c = static_cast<std::size_t>(std::countr_zero(m));
        if (!poset.leq(x, c)) continue;
        BoolMap via = bool_compose(cover_arrows.at({c, y}), *arrows[x * n + c]);
        if (!found)
          found = std::move(via);
        else if (*found != via)
          throw CoherenceError("cover paths disagree on " + pair_name(poset, x, y));
      }
      arrows[x * n + y] = std::move(found);
    }
  }
  return SemDiagram(poset, arities, std::move(arrows));
}

BoolMap random_bool_map(std::size_t src, std::size_t tgt, Rng& rng) {
  std::vector<BitSet> im;
  for (std::size_t i = 0; i < src; ++i) {
    BitSet b(tgt);
    for (std::size_t j = 0; j < tgt; ++j)
      if (rng.chance(1, 2)) b.set(j);
    im.push_back(b);
  }
  return BoolMap(src, tgt, std::move(im));
}

namespace {

// For one target atom of y, a family S[z] of atom sets (z strictly below y)
// describing a cocone into 2: atom e of z maps onto the target atom iff e is in S[z].
// Compatible along arrows: S[z] = { e : arrow(z,c)(e) meets S[c] }.
using Cocone = std::map<std::size_t, BitSet>;

std::optional<Cocone> sample_cocone(const Poset& p, const std::vector<std::size_t>& arity,
                                    const std::vector<std::optional<BoolMap>>& arrows, Poset::Mask lowers,
                                    Rng& rng) {
  const std::size_t n = p.size();
  Cocone fixed;
  for (Poset::Mask m = lowers; m; m &= m - 1) {
    auto c = static_cast<std::size_t>(std::countr_zero(m));
    BitSet forbidden(arity[c]);
    std::vector<BitSet> required;
    for (const auto& [z, sz] : fixed) {
      if (!p.lt(z, c)) continue;
      const BoolMap& e = *arrows[z * n + c];
      for (std::size_t a = 0; a < arity[z]; ++a) {
        if (sz.test(a))
          required.push_back(e.atom_image(a));
        else
          forbidden |= e.atom_image(a);
      }
    }
    BitSet s(arity[c]);
    for (std::size_t a = 0; a < arity[c]; ++a)
      if (!forbidden.test(a) && rng.chance(1, 2)) s.set(a);
    for (const auto& r : required) {
      if (r.intersects(s)) continue;
      std::vector<std::size_t> avail;
      for (auto a : r.members())
        if (!forbidden.test(a)) avail.push_back(a);
      if (avail.empty()) return std::nullopt;
      s.set(avail[rng.below(avail.size())]);
    }
    fixed[c] = s;
    for (std::size_t z = 0; z < n; ++z) {
      if (!p.lt(z, c) || fixed.contains(z)) continue;
      const BoolMap& e = *arrows[z * n + c];
      BitSet sz(arity[z]);
      for (std::size_t a = 0; a < arity[z]; ++a)
        if (e.atom_image(a).intersects(s)) sz.set(a);
      fixed[z] = sz;
    }
  }
  return fixed;
}

}  // namespace

SemDiagram random_diagram(const Poset& poset, std::size_t max_arity, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = poset.size();
  std::vector<std::size_t> arity(n);
  for (auto& a : arity) a = (max_arity == 0 || rng.chance(1, 10)) ? 0 : 1 + rng.below(max_arity);

  // Arrows on all comparable pairs below the element being processed; filled
  // along a linear extension so every lower cover is complete when used.
  std::vector<std::optional<BoolMap>> arrows(n * n);
  std::map<std::pair<std::size_t, std::size_t>, BoolMap> cover_maps;
  for (auto y : poset.linear_extension()) {
    arrows[y * n + y] = BoolMap::identity(arity[y]);
    Poset::Mask lowers = poset.lower_covers(y, poset.all());
    std::map<std::size_t, std::vector<BitSet>> images;  // lower cover -> atom images in 2^arity[y]
    for (Poset::Mask m = lowers; m; m &= m - 1) {
      auto c = static_cast<std::size_t>(std::countr_zero(m));
      images[c] = std::vector<BitSet>(arity[c], BitSet(arity[y]));
    }
    for (std::size_t b = 0; b < arity[y]; ++b) {
      std::optional<Cocone> cone;
      for (int attempt = 0; attempt < 8 && !cone; ++attempt) cone = sample_cocone(poset, arity, arrows, lowers, rng);
      if (!cone) continue;  // the zero cocone is always compatible
      for (auto& [c, im] : images)
        for (auto a : cone->at(c).members()) im[a].set(b);
    }
    for (auto& [c, im] : images) cover_maps.emplace(std::make_pair(c, y), BoolMap(arity[c], arity[y], im));
    // Arrows into y from everything below, composed through any lower cover.
    for (std::size_t x = 0; x < n; ++x) {
      if (!poset.lt(x, y)) continue;
      for (Poset::Mask m = lowers; m; m &= m - 1) {
        auto c = static_cast<std::size_t>(std::countr_zero(m));
        if (!poset.leq(x, c)) continue;
        arrows[x * n + y] = bool_compose(cover_maps.at({c, y}), *arrows[x * n + c]);
        break;
      }
    }
  }
  return diagram_from_covers(poset, arity, cover_maps);
}

}  // namespace dimlift
