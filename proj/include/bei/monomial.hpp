#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>

#include "bei/errors.hpp"

namespace bei::alg {

// Hard cap on ring variables: 2n ring variables plus one elimination
// variable.  The support mask below relies on kMaxVars <= 32.
inline constexpr int kMaxVars = 24;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};  // exponents
  std::uint16_t deg = 0;                   // total degree
  std::uint32_t mask = 0;                  // bit v set iff e[v] > 0

  bool operator==(const Mono&) const = default;
};

inline Mono mono_one() { return Mono{}; }

inline Mono mono_var(int v, int exp = 1) {
  assert(v >= 0 && v < kMaxVars && exp > 0 && exp < 256);
  Mono m;
  m.e[v] = static_cast<std::uint8_t>(exp);
  m.deg = static_cast<std::uint16_t>(exp);
  m.mask = 1u << v;
  return m;
}

inline bool mono_is_one(const Mono& a) { return a.deg == 0; }

// a | b
inline bool mono_divides(const Mono& a, const Mono& b) {
  if (a.mask & ~b.mask) return false;
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  int d = a.deg + b.deg;
  if (d > 250) throw resource_limit("monomial degree overflow");
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  r.deg = static_cast<std::uint16_t>(d);
  r.mask = a.mask | b.mask;
  return r;
}

// a / b, requires b | a
inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    if (r.e[i]) r.mask |= 1u << i;
  }
  return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
    if (r.e[i]) r.mask |= 1u << i;
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

// exact because every variable index is below 32
inline bool mono_coprime(const Mono& a, const Mono& b) { return (a.mask & b.mask) == 0; }

enum class OrderKind { degrevlex, lex, elim_last };

// Term order on monomials in a fixed number of variables.  Variable 0 is the
// largest.  elim_last makes the last variable dominate (elimination order for
// it) and falls back to degrevlex on the remaining variables.
struct Order {
  OrderKind kind = OrderKind::degrevlex;
  int nvars = 0;

  // >0 iff a > b
  int cmp(const Mono& a, const Mono& b) const {
    switch (kind) {
      case OrderKind::degrevlex:
        return cmp_grevlex(a, b, nvars, a.deg, b.deg);
      case OrderKind::lex:
        for (int i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::elim_last: {
        const int t = nvars - 1;
        if (a.e[t] != b.e[t]) return a.e[t] > b.e[t] ? 1 : -1;
        return cmp_grevlex(a, b, t, a.deg - a.e[t], b.deg - b.e[t]);
      }
    }
    return 0;
  }

  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }

 private:
  static int cmp_grevlex(const Mono& a, const Mono& b, int nv, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = nv - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

inline std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::elim_last: return "elim";
  }
  return "?";
}

}  // namespace bei::alg
