#include "cei/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

#include "cei/errors.hpp"

namespace cei {

using BigInt = boost::multiprecision::cpp_int;
using i128 = __int128;

struct Rational::Wide {
  BigInt num;
  BigInt den;
};

namespace {

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

BigInt to_big(i128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-out) : out;
}

void normalize(BigInt& num, BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool big_fits64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::shared_ptr<const Wide> wide) : wide_(std::move(wide)) {}

Rational Rational::from_wide(Wide w) {
  normalize(w.num, w.den);
  if (big_fits64(w.num) && big_fits64(w.den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(w.num);
    r.den_ = static_cast<std::int64_t>(w.den);
    return r;
  }
  return Rational(std::make_shared<const Wide>(std::move(w)));
}

Rational::Wide Rational::widen() const {
  if (wide_) return *wide_;
  return Wide{BigInt(num_), BigInt(den_)};
}

namespace {

// Reduces a 128-bit fraction; the caller guarantees den != 0.
Rational make_small_or_wide(i128 num, i128 den,
                            Rational (*wide_builder)(i128, i128)) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (fits64(num) && fits64(den)) {
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }
  return wide_builder(num, den);
}

Rational wide_from128(i128 num, i128 den) {
  return Rational::parse(to_big(num).str() + "/" + to_big(den).str());
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits64(n) && fits64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    *this = from_wide(Wide{to_big(n), to_big(d)});
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1")
                                                              : text.substr(slash + 1);
  if (!digits_ok(num_text, true) || !digits_ok(den_text, false)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num_text);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Wide w{BigInt(n), BigInt(std::string(den_text))};
  if (w.den == 0) throw ParseError("rational with zero denominator");
  return from_wide(std::move(w));
}

bool Rational::is_integer() const { return wide_ ? wide_->den == 1 : den_ == 1; }

int Rational::signum() const {
  if (wide_) return wide_->num.sign();
  return (num_ > 0) - (num_ < 0);
}

std::optional<std::pair<std::int64_t, std::int64_t>> Rational::as_int64() const {
  if (wide_) return std::nullopt;
  return std::make_pair(num_, den_);
}

std::string Rational::numerator_string() const {
  return wide_ ? wide_->num.str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return wide_ ? wide_->den.str() : std::to_string(den_);
}

std::string Rational::str() const { return numerator_string() + "/" + denominator_string(); }

std::string Rational::decimal(int digits) const {
  Wide w = widen();
  std::string out;
  if (w.num < 0) {
    out += '-';
    w.num = -w.num;
  }
  BigInt whole = w.num / w.den;
  BigInt rem = w.num % w.den;
  out += whole.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      BigInt digit = rem / w.den;
      rem %= w.den;
      out += static_cast<char>('0' + static_cast<int>(digit));
    }
  }
  return out;
}

double Rational::to_double() const {
  if (!wide_) return static_cast<double>(num_) / static_cast<double>(den_);
  boost::multiprecision::cpp_rational q(wide_->num, wide_->den);
  return q.convert_to<double>();
}

Rational Rational::operator-() const {
  if (!wide_) return Rational(0) - *this;
  return from_wide(Wide{-wide_->num, wide_->den});
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.wide_ && !b.wide_) {
    i128 g = gcd128(a.den_, b.den_);
    i128 num = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    i128 den = static_cast<i128>(a.den_) * (b.den_ / g);
    return make_small_or_wide(num, den, &wide_from128);
  }
  Rational::Wide x = a.widen(), y = b.widen();
  return Rational::from_wide({x.num * y.den + y.num * x.den, x.den * y.den});
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.wide_ && !b.wide_) {
    i128 g = gcd128(a.den_, b.den_);
    i128 num = static_cast<i128>(a.num_) * (b.den_ / g) - static_cast<i128>(b.num_) * (a.den_ / g);
    i128 den = static_cast<i128>(a.den_) * (b.den_ / g);
    return make_small_or_wide(num, den, &wide_from128);
  }
  Rational::Wide x = a.widen(), y = b.widen();
  return Rational::from_wide({x.num * y.den - y.num * x.den, x.den * y.den});
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.wide_ && !b.wide_) {
    i128 num = static_cast<i128>(a.num_) * b.num_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return make_small_or_wide(num, den, &wide_from128);
  }
  Rational::Wide x = a.widen(), y = b.widen();
  return Rational::from_wide({x.num * y.num, x.den * y.den});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.signum() == 0) throw InvalidArgument("division by zero rational");
  if (!a.wide_ && !b.wide_) {
    i128 num = static_cast<i128>(a.num_) * b.den_;
    i128 den = static_cast<i128>(a.den_) * b.num_;
    return make_small_or_wide(num, den, &wide_from128);
  }
  Rational::Wide x = a.widen(), y = b.widen();
  return Rational::from_wide({x.num * y.den, x.den * y.num});
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.wide_ || b.wide_) {
    // Both sides are normalized and demoted whenever they fit, so a wide and
    // a small value are never equal.
    if (!a.wide_ || !b.wide_) return false;
    return a.wide_->num == b.wide_->num && a.wide_->den == b.wide_->den;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.wide_ && !b.wide_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  Rational::Wide x = a.widen(), y = b.widen();
  BigInt lhs = x.num * y.den;
  BigInt rhs = y.num * x.den;
  int c = lhs.compare(rhs);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace cei
