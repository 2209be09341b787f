#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permdek {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! for n <= 20.
std::uint64_t factorial(int n);

BigInt binomial(int n, int k);

/// Exact probability in lowest terms.
class WinValue {
 public:
  WinValue() = default;
  explicit WinValue(Rational value);
  WinValue(const BigInt& num, const BigInt& den) : WinValue(Rational(num, den)) {}

  static WinValue one() { return WinValue(Rational(1)); }
  static WinValue zero() { return WinValue(Rational(0)); }

  const Rational& value() const noexcept { return value_; }
  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  /// "num/den"
  std::string to_string() const;
  double to_double() const;

  friend bool operator==(const WinValue& a, const WinValue& b) { return a.value_ == b.value_; }
  friend bool operator<(const WinValue& a, const WinValue& b) { return a.value_ < b.value_; }
  friend bool operator<=(const WinValue& a, const WinValue& b) { return a.value_ <= b.value_; }

 private:
  Rational value_{0};
};

}  // namespace permdek
