#include "permdek/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace permdek {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: n must be in 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

WinValue::WinValue(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw std::domain_error("win value outside [0,1]: " + value_.str());
  }
}

std::string WinValue::to_string() const { return num().str() + "/" + den().str(); }

double WinValue::to_double() const { return value_.convert_to<double>(); }

}  // namespace permdek
