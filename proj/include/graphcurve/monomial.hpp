// Packed exponent vectors and monomial orders (graded reverse
// lexicographic, plus a block order eliminating the last variable).
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace graphcurve {

inline constexpr int kMaxVars = 30;

enum class Order : std::uint8_t {
  kGrevlex,    // graded reverse lexicographic
  kElimLast,   // last variable dominates, grevlex within blocks
};

struct Monomial {
  std::uint16_t deg = 0;
  std::array<std::uint8_t, kMaxVars> e{};

  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const {
    return deg == o.deg && e == o.e;
  }
};

inline Monomial monomial_one() { return Monomial{}; }

inline Monomial monomial_var(int i, int exp = 1) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index");
  Monomial m;
  m.e[i] = static_cast<std::uint8_t>(exp);
  m.deg = static_cast<std::uint16_t>(exp);
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  // b / a, requires a | b
  Monomial r;
  r.deg = static_cast<std::uint16_t>(b.deg - a.deg);
  for (int i = 0; i < kMaxVars; ++i)
    r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// Returns <0, 0, >0 like memcmp; positive means a > b in the order.
inline int mono_cmp_grevlex(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

inline int mono_cmp(const Monomial& a, const Monomial& b, Order ord, int nvars) {
  switch (ord) {
    case Order::kGrevlex:
      return mono_cmp_grevlex(a, b, nvars);
    case Order::kElimLast: {
      int t = nvars - 1;
      if (a.e[t] != b.e[t]) return a.e[t] < b.e[t] ? -1 : 1;
      Monomial a2 = a, b2 = b;
      a2.e[t] = 0;
      a2.deg = static_cast<std::uint16_t>(a.deg - a.e[t]);
      b2.e[t] = 0;
      b2.deg = static_cast<std::uint16_t>(b.deg - b.e[t]);
      return mono_cmp_grevlex(a2, b2, nvars - 1 + 1);
    }
  }
  return 0;
}

inline std::uint64_t mono_hash(const Monomial& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < kMaxVars; ++i) {
    h ^= m.e[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string mono_to_string(const Monomial& m, int nvars) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m.e[i] > 1) s += "^" + std::to_string(int(m.e[i]));
  }
  return s;
}

}  // namespace graphcurve
