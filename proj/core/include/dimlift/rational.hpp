#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dimlift {

/// Arbitrary precision rational number.
///
/// Thin value wrapper around GMP's mpq_class. The value is always kept in
/// canonical form (positive denominator, coprime numerator and denominator),
/// so structural equality coincides with numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  /// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else and on q = 0.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_positive() const { return sign() > 0; }
  [[nodiscard]] bool is_negative() const { return sign() < 0; }
  [[nodiscard]] bool is_integer() const;

  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;

  /// Smallest integer not below the value. Throws ResourceError if it does not fit in 64 bits.
  [[nodiscard]] std::int64_t ceil_int64() const;

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;

  [[nodiscard]] const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// Exact three-way comparison.
std::strong_ordering rat_cmp(const Rational& a, const Rational& b);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

using RatVector = std::vector<Rational>;

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

/// Coordinatewise a <= b. Throws ShapeError on length mismatch.
bool leq_coordinatewise(const RatVector& a, const RatVector& b);
bool is_nonnegative(const RatVector& v);
bool is_zero(const RatVector& v);
Rational sum(const RatVector& v);
std::string to_string(const RatVector& v);

}  // namespace dimlift
