#include "dimlift/bitset.hpp"

#include <bit>

#include "dimlift/error.hpp"

namespace dimlift {

namespace {
std::uint64_t width_mask(std::size_t width) {
  return width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}
}  // namespace

BitSet::BitSet(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width > kMaxWidth) throw ResourceError("bitset width " + std::to_string(width) + " exceeds 64");
  if ((bits & ~width_mask(width)) != 0) throw ShapeError("bitset has members beyond its width");
}

BitSet::BitSet(std::size_t width, std::initializer_list<std::size_t> members) : BitSet(width) {
  for (auto m : members) set(m);
}

BitSet BitSet::full(std::size_t width) { return BitSet(width, width_mask(width)); }

BitSet BitSet::from_members(std::size_t width, const std::vector<std::size_t>& members) {
  BitSet b(width);
  for (auto m : members) b.set(m);
  return b;
}

void BitSet::set(std::size_t i) {
  if (i >= width_)
    throw ShapeError("bit " + std::to_string(i) + " out of range for width " + std::to_string(width_));
  bits_ |= std::uint64_t{1} << i;
}

void BitSet::reset(std::size_t i) {
  if (i >= width_)
    throw ShapeError("bit " + std::to_string(i) + " out of range for width " + std::to_string(width_));
  bits_ &= ~(std::uint64_t{1} << i);
}

std::size_t BitSet::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> BitSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

BitSet& BitSet::operator|=(const BitSet& o) {
  if (width_ != o.width_) throw ShapeError("bitset width mismatch");
  bits_ |= o.bits_;
  return *this;
}

BitSet& BitSet::operator&=(const BitSet& o) {
  if (width_ != o.width_) throw ShapeError("bitset width mismatch");
  bits_ &= o.bits_;
  return *this;
}

std::string BitSet::str() const {
  std::string s = "{";
  bool first = true;
  for (auto m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

std::vector<BitSet> powerset(std::size_t width, std::size_t cap) {
  if (width > cap)
    throw ResourceError("powerset width " + std::to_string(width) + " exceeds cap " + std::to_string(cap));
  std::vector<BitSet> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << width); ++k) out.emplace_back(width, k);
  return out;
}

}  // namespace dimlift
