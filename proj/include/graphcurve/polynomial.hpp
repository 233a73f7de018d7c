// Sparse multivariate polynomials over a coefficient field context.
// Terms are kept strictly decreasing in the ring's monomial order with no
// zero coefficients.
#pragma once

#include <algorithm>
#include <cassert>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "graphcurve/field.hpp"
#include "graphcurve/monomial.hpp"

namespace graphcurve {

template <class K>
struct Ring {
  int nvars = 0;
  Order order = Order::kGrevlex;
  K field{};

  bool operator==(const Ring& o) const {
    return nvars == o.nvars && order == o.order && field == o.field;
  }
};

template <class K>
struct Term {
  Monomial m;
  typename K::Elem c;
};

template <class K>
class Polynomial {
 public:
  using Elem = typename K::Elem;

  Polynomial() = default;
  explicit Polynomial(const Ring<K>& ring) : ring_(ring) {}

  // Sorts, merges equal monomials, drops zeros.
  Polynomial(const Ring<K>& ring, std::vector<Term<K>> terms) : ring_(ring) {
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term<K>& a, const Term<K>& b) {
                       return mono_cmp(a.m, b.m, ring.order, ring.nvars) > 0;
                     });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().m == t.m) {
        terms_.back().c = ring_.field.add(terms_.back().c, t.c);
        if (ring_.field.is_zero(terms_.back().c)) terms_.pop_back();
      } else if (!ring_.field.is_zero(t.c)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  const Ring<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term<K>& lt() const {
    assert(!terms_.empty());
    return terms_.front();
  }
  const Monomial& lm() const { return lt().m; }
  const Elem& lc() const { return lt().c; }

  int degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, int(t.m.deg));
    return d;
  }

  bool is_homogeneous() const {
    for (auto& t : terms_)
      if (t.m.deg != terms_.front().m.deg) return false;
    return true;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  Polynomial negated() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m, ring_.field.neg(t.c)});
    return r;
  }

  Polynomial scaled(const Elem& s) const {
    Polynomial r(ring_);
    if (ring_.field.is_zero(s)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m, ring_.field.mul(t.c, s)});
    return r;
  }

  Polynomial term_mul(const Monomial& m, const Elem& c) const {
    Polynomial r(ring_);
    if (ring_.field.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_)
      r.terms_.push_back({mono_mul(t.m, m), ring_.field.mul(t.c, c)});
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    std::vector<Term<K>> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
      for (auto& b : o.terms_)
        acc.push_back({mono_mul(a.m, b.m), ring_.field.mul(a.c, b.c)});
    return Polynomial(ring_, std::move(acc));
  }

  // f -= c * x^m * g, the inner step of division; merge in place.
  void sub_mul(const Elem& c, const Monomial& m, const Polynomial& g) {
    std::vector<Term<K>> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& F = ring_.field;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = mono_mul(g.terms_[j].m, m);
      Elem gc = F.neg(F.mul(g.terms_[j].c, c));
      if (i == terms_.size()) {
        if (!F.is_zero(gc)) out.push_back({gm, gc});
        ++j;
        continue;
      }
      int cmp = mono_cmp(terms_[i].m, gm, ring_.order, ring_.nvars);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        if (!F.is_zero(gc)) out.push_back({gm, gc});
        ++j;
      } else {
        Elem s = F.add(terms_[i].c, gc);
        if (!F.is_zero(s)) out.push_back({terms_[i].m, s});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.field.inv(lc()));
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].m == o.terms_[i].m) ||
          !ring_.field.eq(terms_[i].c, o.terms_[i].c))
        return false;
    return true;
  }

  // Deterministic tie-break ordering used to sort generator lists.
  static bool poly_less(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = mono_cmp(a.terms_[i].m, b.terms_[i].m, a.ring_.order,
                       a.ring_.nvars);
      if (c != 0) return c < 0;
    }
    return a.terms_.size() < b.terms_.size();
  }

 private:
  Polynomial merged(const Polynomial& o, bool subtract) const {
    const auto& F = ring_.field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (i == terms_.size()) {
        Elem c = subtract ? F.neg(o.terms_[j].c) : o.terms_[j].c;
        r.terms_.push_back({o.terms_[j].m, c});
        ++j;
        continue;
      }
      if (j == o.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      int cmp = mono_cmp(terms_[i].m, o.terms_[j].m, ring_.order, ring_.nvars);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        Elem c = subtract ? F.neg(o.terms_[j].c) : o.terms_[j].c;
        r.terms_.push_back({o.terms_[j].m, c});
        ++j;
      } else {
        Elem c = subtract ? F.sub(terms_[i].c, o.terms_[j].c)
                          : F.add(terms_[i].c, o.terms_[j].c);
        if (!F.is_zero(c)) r.terms_.push_back({terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring<K> ring_;
  std::vector<Term<K>> terms_;
};

template <class K>
Polynomial<K> poly_zero(const Ring<K>& r) {
  return Polynomial<K>(r);
}

template <class K>
Polynomial<K> poly_const(const Ring<K>& r, long long n) {
  auto c = r.field.make(n);
  if (r.field.is_zero(c)) return Polynomial<K>(r);
  return Polynomial<K>(r, {{monomial_one(), c}});
}

template <class K>
Polynomial<K> poly_var(const Ring<K>& r, int i) {
  if (i < 0 || i >= r.nvars) throw InputError("variable index out of range");
  return Polynomial<K>(r, {{monomial_var(i), r.field.one()}});
}

// x_j - x_k
template <class K>
Polynomial<K> poly_binomial_diff(const Ring<K>& r, int j, int k) {
  return poly_var(r, j) - poly_var(r, k);
}

// ---------------------------------------------------------------------------
// Plain-text syntax: terms like "3*x0^2*x5 - x1*x2". This is both the import
// and the export format so ideals can be pasted into other systems.

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  const auto& F = f.ring().field;
  std::string s;
  bool first = true;
  for (auto& t : f.terms()) {
    std::string c = F.to_string(t.c);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = mono_to_string(t.m, f.ring().nvars);
    if (mono == "1") {
      s += c;
    } else if (c == "1") {
      s += mono;
    } else {
      s += c + "*" + mono;
    }
  }
  return s;
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline long long parse_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw InputError("expected integer in polynomial at '" +
                                   s.substr(start, 8) + "'");
  return std::stoll(s.substr(start, i - start));
}

}  // namespace detail

// Accepts integer coefficients, '*' products, '^' powers, and variables
// "x<index>". Rational coefficients "a/b" are accepted too.
template <class K>
Polynomial<K> parse_polynomial(const Ring<K>& ring, const std::string& text) {
  std::vector<Term<K>> acc;
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i == text.size()) throw InputError("empty polynomial");
  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    detail::skip_ws(text, i);
    if (i == text.size()) break;
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '-') {
        sign = -sign;
        ++i;
        continue;
      }
      sign = (ch == '-') ? -1 : 1;
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term)
      throw InputError(std::string("unexpected '") + ch + "' in polynomial");
    // one term: [coeff][*x<i>[^e]]...
    auto coeff = ring.field.one();
    bool has_content = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      long long n = detail::parse_int(text, i);
      coeff = ring.field.make(n);
      has_content = true;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '/') {
        ++i;
        detail::skip_ws(text, i);
        long long d = detail::parse_int(text, i);
        if (d == 0) throw InputError("zero denominator in coefficient");
        coeff = ring.field.div(coeff, ring.field.make(d));
      }
    }
    Monomial m = monomial_one();
    while (true) {
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        detail::skip_ws(text, i);
      }
      if (i >= text.size() || text[i] != 'x') break;
      ++i;
      long long v = detail::parse_int(text, i);
      if (v < 0 || v >= ring.nvars)
        throw InputError("variable x" + std::to_string(v) + " out of range");
      long long e = 1;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        detail::skip_ws(text, i);
        e = detail::parse_int(text, i);
      }
      m = mono_mul(m, monomial_var(static_cast<int>(v), static_cast<int>(e)));
      has_content = true;
    }
    if (!has_content)
      throw InputError(std::string("unexpected '") + ch + "' in polynomial");
    if (sign < 0) coeff = ring.field.neg(coeff);
    acc.push_back({m, coeff});
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw InputError("trailing operator in polynomial");
  return Polynomial<K>(ring, std::move(acc));
}

}  // namespace graphcurve
