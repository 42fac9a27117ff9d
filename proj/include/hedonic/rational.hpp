#ifndef HEDONIC_RATIONAL_HPP
#define HEDONIC_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "hedonic/error.hpp"

namespace hedonic {

/// Exact rational number backed by a normalized int64 fraction.
///
/// Every intermediate product is computed in 128-bit arithmetic; results that
/// do not fit back into int64 after reduction throw Errc::Overflow. All game
/// arithmetic in this library goes through this type -- there is no floating
/// point anywhere in the core.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool positive() const { return num_ > 0; }
  bool negative() const { return num_ < 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      assign_i128(static_cast<__int128>(num_) + o.num_, 1);
      return *this;
    }
    assign_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    assign_i128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(Errc::DivisionByZero, "rational division by zero");
    assign_i128(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  /// Smallest integer >= value.
  long long ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "n", "-n", "+n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text) {
    const auto fail = [&] {
      throw Error(Errc::ParseError, "invalid rational: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::size_t pos = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
      neg = text[0] == '-';
      pos = 1;
    }
    long long num = 0;
    std::size_t digits = 0;
    for (; pos < text.size() && text[pos] != '/'; ++pos, ++digits) {
      if (text[pos] < '0' || text[pos] > '9') fail();
      if (num > (std::numeric_limits<long long>::max() - 9) / 10) fail();
      num = num * 10 + (text[pos] - '0');
    }
    if (digits == 0) fail();
    long long den = 1;
    if (pos < text.size()) {
      ++pos;  // skip '/'
      den = 0;
      digits = 0;
      for (; pos < text.size(); ++pos, ++digits) {
        if (text[pos] < '0' || text[pos] > '9') fail();
        if (den > (std::numeric_limits<long long>::max() - 9) / 10) fail();
        den = den * 10 + (text[pos] - '0');
      }
      if (digits == 0 || den == 0) fail();
    }
    return Rational(neg ? -num : num, den);
  }

 private:
  void assign(long long num, long long den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    assign_i128(num, den);
  }

  void assign_i128(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    num /= a;
    den /= a;
    constexpr __int128 kMax = std::numeric_limits<long long>::max();
    constexpr __int128 kMin = std::numeric_limits<long long>::min();
    if (num > kMax || num < kMin || den > kMax) {
      throw Error(Errc::Overflow, "rational magnitude exceeds 64-bit range");
    }
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hedonic

template <>
struct std::hash<hedonic::Rational> {
  std::size_t operator()(const hedonic::Rational& r) const noexcept {
    std::size_t h = std::hash<long long>{}(r.num());
    return h ^ (std::hash<long long>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

#endif  // HEDONIC_RATIONAL_HPP
