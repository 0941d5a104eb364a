#include "dimlift/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_set>

#include "dimlift/error.hpp"

namespace dimlift {

namespace {

using Mask = Poset::Mask;

Mask bit(std::size_t i) { return Mask{1} << i; }

void check_size(std::size_t n) {
  if (n > Poset::kMaxElements)
    throw ResourceError("poset with " + std::to_string(n) + " elements exceeds the 64-element limit");
}

}  // namespace

Poset::Poset(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  check_size(n);
  if (leq.size() != n) throw ParseError("order relation has wrong number of rows");
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw ParseError("order relation has a row of wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) {
        up_[i] |= bit(j);
        down_[j] |= bit(i);
      }
  }
  std::set<std::string> seen;
  for (const auto& s : names_)
    if (!seen.insert(s).second) throw ParseError("duplicate element name '" + s + "'");
  for (std::size_t i = 0; i < n; ++i) {
    if (!this->leq(i, i)) throw ParseError("order is not reflexive at '" + names_[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && this->leq(i, j) && this->leq(j, i))
        throw ParseError("order is not antisymmetric: '" + names_[i] + "' and '" + names_[j] + "'");
      if (this->leq(i, j) && (up_[j] & ~up_[i]) != 0)
        throw ParseError("order is not transitive above '" + names_[j] + "'");
    }
  }
}

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = names.size();
  check_size(n);
  std::vector<Mask> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw ParseError("cover pair references an unknown element");
    up[a] |= bit(b);
  }
  // Warshall-style closure on bitmasks.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i] & bit(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (up[i] & bit(j)) && (up[j] & bit(i)))
        throw ParseError("covers contain a cycle through '" + names[i] + "' and '" + names[j] + "'");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = (up[i] >> j) & 1U;
  return Poset(std::move(names), leq);
}

Poset Poset::from_named_covers(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  auto find = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw ParseError("cover references unknown element '" + s + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  for (const auto& [a, b] : covers) idx.emplace_back(find(a), find(b));
  return from_covers(std::move(names), idx);
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> cov;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) cov.emplace_back(i - 1, i);
  }
  return from_covers(std::move(names), cov);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return from_covers(std::move(names), {});
}

Poset Poset::boolean_lattice(std::size_t k) {
  if (k > 6) throw ResourceError("boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> cov;
  for (std::size_t s = 0; s < n; ++s) {
    std::string nm = "{";
    for (std::size_t b = 0; b < k; ++b)
      if (s & (std::size_t{1} << b)) nm += (nm.size() > 1 ? "," : "") + std::to_string(b);
    names.push_back(nm + "}");
    for (std::size_t b = 0; b < k; ++b)
      if (!(s & (std::size_t{1} << b))) cov.emplace_back(s, s | (std::size_t{1} << b));
  }
  return from_covers(std::move(names), cov);
}

std::size_t Poset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ParseError("unknown element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

Mask Poset::all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

Mask Poset::upper_covers(std::size_t i, Mask within) const {
  Mask above = up_[i] & within & ~bit(i);
  Mask out = 0;
  for (Mask m = above; m; m &= m - 1) {
    auto j = static_cast<std::size_t>(std::countr_zero(m));
    if ((down_[j] & above & ~bit(j)) == 0) out |= bit(j);
  }
  return out;
}

Mask Poset::lower_covers(std::size_t i, Mask within) const {
  Mask below = down_[i] & within & ~bit(i);
  Mask out = 0;
  for (Mask m = below; m; m &= m - 1) {
    auto j = static_cast<std::size_t>(std::countr_zero(m));
    if ((up_[j] & below & ~bit(j)) == 0) out |= bit(j);
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  // The down-set of x is a strict superset of the down-set of anything below x.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(down_[a]) < std::popcount(down_[b]);
  });
  return order;
}

int Poset::height() const {
  if (size() == 0) return -1;
  std::vector<int> depth(size(), 0);
  int best = 0;
  for (auto x : linear_extension()) {
    for (std::size_t y = 0; y < size(); ++y)
      if (lt(y, x)) depth[x] = std::max(depth[x], depth[y] + 1);
    best = std::max(best, depth[x]);
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (Mask m = p.upper_covers(i, p.all()); m; m &= m - 1)
      out.emplace_back(i, static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

Mask doubly_irreducible(const Poset& p, Mask within) {
  Mask out = 0;
  for (Mask m = within; m; m &= m - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(m));
    if (std::popcount(p.upper_covers(i, within)) <= 1 && std::popcount(p.lower_covers(i, within)) <= 1)
      out |= bit(i);
  }
  return out;
}

std::vector<std::size_t> doubly_irreducible(const Poset& p) {
  std::vector<std::size_t> out;
  for (Mask m = doubly_irreducible(p, p.all()); m; m &= m - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

namespace {

class DismantleSearch {
 public:
  DismantleSearch(const Poset& p, DismantlePreference pref) : p_(p), pref_(pref) {}

  bool run(Mask remaining, std::vector<std::size_t>& seq) {
    if (remaining == 0) return true;
    if (failed_.contains(remaining)) return false;
    Mask irr = doubly_irreducible(p_, remaining);
    if (irr == 0) stuck_.insert(remaining);
    for (auto c : candidates(irr, remaining)) {
      seq.push_back(c);
      if (run(remaining & ~bit(c), seq)) return true;
      seq.pop_back();
    }
    failed_.insert(remaining);
    return false;
  }

  [[nodiscard]] std::vector<Mask> stuck() const { return {stuck_.begin(), stuck_.end()}; }

 private:
  std::vector<std::size_t> candidates(Mask irr, Mask remaining) const {
    std::vector<std::size_t> first, rest;
    for (Mask m = irr; m; m &= m - 1) {
      auto c = static_cast<std::size_t>(std::countr_zero(m));
      bool minimal = p_.lower_covers(c, remaining) == 0;
      if (pref_ == DismantlePreference::kMinimalFirst && !minimal)
        rest.push_back(c);
      else
        first.push_back(c);
    }
    first.insert(first.end(), rest.begin(), rest.end());
    return first;
  }

  const Poset& p_;
  DismantlePreference pref_;
  std::unordered_set<Mask> failed_;
  std::set<Mask> stuck_;
};

}  // namespace

DismantleResult dismantle(const Poset& p, DismantlePreference pref, std::size_t max_elements) {
  if (p.size() > max_elements)
    throw ResourceError("dismantling search limited to " + std::to_string(max_elements) + " elements, got " +
                        std::to_string(p.size()));
  DismantleSearch search(p, pref);
  DismantleResult result;
  std::vector<std::size_t> seq;
  if (search.run(p.all(), seq)) result.order = DismantlingOrder{std::move(seq)};
  result.stuck_sets = search.stuck();
  return result;
}

std::optional<DismantlingOrder> dismantling_order(const Poset& p, DismantlePreference pref) {
  return dismantle(p, pref).order;
}

bool is_valid_dismantling(const Poset& p, const DismantlingOrder& order) {
  Mask remaining = p.all();
  if (order.removal_sequence.size() != p.size()) return false;
  for (auto x : order.removal_sequence) {
    if (x >= p.size() || !(remaining & bit(x))) return false;
    if (!(doubly_irreducible(p, remaining) & bit(x))) return false;
    remaining &= ~bit(x);
  }
  return remaining == 0;
}

std::string to_dot(const Poset& p, const std::vector<std::string>& node_labels) {
  std::ostringstream os;
  os << "digraph poset {\n";
  if (p.size()) os << "  rankdir=BT;\n";
  auto esc = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << esc(p.name(i));
    if (i < node_labels.size() && !node_labels[i].empty()) os << "\\n" << esc(node_labels[i]);
    os << "\"];\n";
  }
  for (auto [a, b] : covers(p)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dimlift
