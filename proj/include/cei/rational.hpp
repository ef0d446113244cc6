#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cei {

// Exact fraction in lowest terms with a positive denominator.
//
// Values live in a pair of int64 while they fit. Any operation whose exact
// result does not fit promotes transparently to arbitrary precision, and
// results that fit again are demoted. Equality and ordering are exact.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  // Parses "p/q" or "p".
  static Rational parse(std::string_view text);

  bool is_wide() const { return wide_ != nullptr; }
  bool is_integer() const;
  int signum() const;

  // Present iff the value fits in int64 numerator and denominator.
  std::optional<std::pair<std::int64_t, std::int64_t>> as_int64() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  // Always "p/q", including integers ("6/1").
  std::string str() const;
  // Truncated decimal expansion with exactly `digits` fractional digits.
  std::string decimal(int digits = 12) const;
  double to_double() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  struct Wide;

 private:
  explicit Rational(std::shared_ptr<const Wide> wide);
  static Rational from_wide(Wide w);
  Wide widen() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Wide> wide_;
};

}  // namespace cei
