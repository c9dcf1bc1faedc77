#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "bei/errors.hpp"

namespace bei::alg {

inline constexpr long long kDefaultCharacteristic = 32003;

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Prime field F_p, elements stored normalized in [0, p).
struct FpField {
  using elem = long long;
  long long p = kDefaultCharacteristic;

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(long long v) const {
    v %= p;
    return v < 0 ? v + p : v;
  }
  bool is_zero(elem a) const { return a == 0; }
  elem add(elem a, elem b) const {
    elem r = a + b;
    return r >= p ? r - p : r;
  }
  elem sub(elem a, elem b) const {
    elem r = a - b;
    return r < 0 ? r + p : r;
  }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem mul(elem a, elem b) const { return (a * b) % p; }
  elem inv(elem a) const {
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  // hook for coefficient-size accounting; nothing to watch mod p
  void observe(const elem&) const {}
  std::string to_string(elem a) const { return std::to_string(a); }
};

// Rational numbers with a bit-size budget.  Exceeding the budget raises
// resource_limit so callers degrade to an "Unknown" outcome instead of
// grinding on enormous coefficients.
struct QField {
  using elem = boost::multiprecision::cpp_rational;
  long long max_bits = 100000;

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(long long v) const { return elem(v); }
  bool is_zero(const elem& a) const { return a == 0; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const { return 1 / a; }
  elem div(const elem& a, const elem& b) const { return a / b; }
  void observe(const elem& a) const {
    using boost::multiprecision::msb;
    const auto& num = boost::multiprecision::numerator(a);
    const auto& den = boost::multiprecision::denominator(a);
    long long bits = 1;
    if (num != 0) bits = static_cast<long long>(msb(num < 0 ? -num : num)) + 1;
    if (den > 1) bits += static_cast<long long>(msb(den)) + 1;
    if (bits > max_bits) throw resource_limit("rational coefficient exceeds bit budget");
  }
  std::string to_string(const elem& a) const { return a.str(); }
};

}  // namespace bei::alg
