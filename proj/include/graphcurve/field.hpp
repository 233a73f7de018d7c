// Coefficient fields: a prime field with runtime modulus and exact
// rationals (GMP). Both satisfy the same small context interface that the
// polynomial layer is templated on.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace graphcurve {

// Thrown on malformed user input (bad JSON, bad polynomial text, bad
// graph/labeling documents). The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a computation hits a resource guardrail or is cancelled.
// The CLI maps this to exit code 1.
struct GuardrailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

// F_p with a fixed runtime prime. Elements are raw residues in [0,p);
// all arithmetic goes through the context so elements stay compact.
class GF {
 public:
  using Elem = std::uint32_t;

  GF() : p_(kDefaultPrime) {}
  explicit GF(std::uint32_t p) : p_(p) {
    if (p < 2) throw InputError("field characteristic must be at least 2");
  }

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem make(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::domain_error("modulus is not prime");
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Balanced representative, friendlier for display and for pasting into
  // other computer algebra systems (prints -1 instead of p-1).
  long long balanced(Elem a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_
                      : static_cast<long long>(a);
  }
  std::string to_string(Elem a) const { return std::to_string(balanced(a)); }

  bool operator==(const GF& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// Exact rationals. Kept for cross-characteristic audits; the prime field
// is the workhorse.
class QQ {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem make(long long n) const { return Elem(static_cast<long>(n)); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero rational");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const QQ&) const { return true; }

 private:
  static const Elem& inv_guard(const Elem& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero rational");
    return b;
  }
};

}  // namespace graphcurve
