#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dimlift {

/// Subset of {0, ..., width-1}, width at most 64.
class BitSet {
 public:
  static constexpr std::size_t kMaxWidth = 64;

  BitSet() = default;
  explicit BitSet(std::size_t width, std::uint64_t bits = 0);
  BitSet(std::size_t width, std::initializer_list<std::size_t> members);
  static BitSet full(std::size_t width);
  static BitSet from_members(std::size_t width, const std::vector<std::size_t>& members);

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }

  [[nodiscard]] bool test(std::size_t i) const { return i < width_ && ((bits_ >> i) & 1U); }
  void set(std::size_t i);
  void reset(std::size_t i);

  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] bool subset_of(const BitSet& o) const { return (bits_ & ~o.bits_) == 0; }
  [[nodiscard]] bool intersects(const BitSet& o) const { return (bits_ & o.bits_) != 0; }
  [[nodiscard]] std::vector<std::size_t> members() const;

  BitSet& operator|=(const BitSet& o);
  BitSet& operator&=(const BitSet& o);
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend auto operator<=>(const BitSet&, const BitSet&) = default;

  /// "{0,2}" style.
  [[nodiscard]] std::string str() const;

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Default cap on powerset() width.
inline constexpr std::size_t kPowersetCap = 20;

/// All 2^width subsets in binary-counter order: the k-th entry has bit i set
/// iff bit i of k is set (element 0 is the least significant bit).
/// Throws ResourceError if width exceeds cap.
std::vector<BitSet> powerset(std::size_t width, std::size_t cap = kPowersetCap);

}  // namespace dimlift
