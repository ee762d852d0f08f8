#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cclique {
namespace detail {
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail


/// Non-negative exact fraction. Bounds such as nz/a + n or m/n^{1/3} + n are
/// compared in this form so no inequality depends on rounding.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::uint64_t num, std::uint64_t den = 1) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::uint64_t num() const { return num_; }
  constexpr std::uint64_t den() const { return den_; }

  constexpr std::uint64_t floor() const { return num_ / den_; }
  constexpr std::uint64_t ceil() const { return (num_ + den_ - 1) / den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr Rational operator+(Rational x, Rational y) {
    using W = detail::uint128;
    W num = W(x.num_) * y.den_ + W(y.num_) * x.den_;
    W den = W(x.den_) * y.den_;
    return reduce(num, den);
  }
  friend constexpr Rational operator*(Rational x, Rational y) {
    using W = detail::uint128;
    return reduce(W(x.num_) * y.num_, W(x.den_) * y.den_);
  }
  friend constexpr Rational operator/(Rational x, Rational y) {
    using W = detail::uint128;
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return reduce(W(x.num_) * y.den_, W(x.den_) * y.num_);
  }

  friend constexpr bool operator==(Rational x, Rational y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational x, Rational y) {
    using W = detail::uint128;
    W lhs = W(x.num_) * y.den_;
    W rhs = W(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, Rational r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  static constexpr Rational reduce(detail::uint128 num, detail::uint128 den) {
    detail::uint128 a = num, b = den;
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    if (num > UINT64_MAX || den > UINT64_MAX) throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num_ = static_cast<std::uint64_t>(num);
    r.den_ = static_cast<std::uint64_t>(den);
    return r;
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace cclique
