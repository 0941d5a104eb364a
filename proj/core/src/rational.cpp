#include "dimlift/rational.hpp"

#include <ostream>
#include <sstream>

#include "dimlift/error.hpp"

namespace dimlift {

Rational::Rational(long long n) : v_(std::to_string(n)) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

std::string Rational::numerator_str() const { return v_.get_num().get_str(); }
std::string Rational::denominator_str() const { return v_.get_den().get_str(); }

std::int64_t Rational::ceil_int64() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw ResourceError("integer part out of range: " + str());
  return q.get_si();
}

Rational Rational::abs() const { return Rational(::abs(v_)); }

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  return Rational(1 / v_);
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::strong_ordering rat_cmp(const Rational& a, const Rational& b) { return a <=> b; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace {
void require_same_length(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    throw ShapeError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
}
}  // namespace

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_length(a, b);
  RatVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_length(a, b);
  RatVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v);
  for (auto& x : r) x *= s;
  return r;
}

bool leq_coordinatewise(const RatVector& a, const RatVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

bool is_nonnegative(const RatVector& v) {
  for (const auto& x : v)
    if (x.is_negative()) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational sum(const RatVector& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace dimlift
