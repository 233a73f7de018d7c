// Hilbert series of S/I from the monomial ideal of leading terms, by the
// standard pivot-variable recursion. Also derives Krull dimension, degree
// and the Hilbert polynomial from the reduced numerator.
#pragma once

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "graphcurve/ideal.hpp"
#include "graphcurve/monomial.hpp"

namespace graphcurve {

// Dense integer polynomial in t, little-endian coefficients.
struct ZPoly {
  std::vector<long long> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long at(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
  }
  long long eval1() const {
    long long s = 0;
    for (auto x : c) s += x;
    return s;
  }
  bool operator==(const ZPoly& o) const { return c == o.c; }
};

inline ZPoly zp_const(long long v) {
  ZPoly p;
  if (v) p.c = {v};
  return p;
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(int(i)) + b.at(int(i));
  r.trim();
  return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(int(i)) - b.at(int(i));
  r.trim();
  return r;
}

inline ZPoly zp_shift(const ZPoly& a, int k) {
  if (a.is_zero()) return a;
  ZPoly r;
  r.c.assign(a.c.size() + k, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly{};
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

namespace detail {

inline std::vector<Monomial> prune_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    bool redundant = false;
    for (auto& k : kept)
      if (mono_divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

inline ZPoly hilbert_numerator_rec(std::vector<Monomial> gens, int nvars) {
  gens = prune_monomials(std::move(gens));
  if (gens.empty()) return zp_const(1);
  if (!gens.front().deg) return ZPoly{};  // contains 1
  // pairwise coprime: numerator factors as prod (1 - t^deg)
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!mono_coprime(gens[i], gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    ZPoly r = zp_const(1);
    for (auto& m : gens)
      r = zp_mul(r, zp_sub(zp_const(1), zp_shift(zp_const(1), m.deg)));
    return r;
  }
  // pivot on the most frequent variable
  std::array<int, kMaxVars> freq{};
  for (auto& m : gens)
    for (int v = 0; v < nvars; ++v)
      if (m.e[v]) ++freq[v];
  int pivot = 0;
  for (int v = 1; v < nvars; ++v)
    if (freq[v] > freq[pivot]) pivot = v;
  // N(M) = N(M + <x>) + t * N(M : x)
  std::vector<Monomial> plus, colon;
  plus.push_back(monomial_var(pivot));
  for (auto& m : gens) {
    if (m.e[pivot]) {
      Monomial q = m;
      q.e[pivot] -= 1;
      q.deg -= 1;
      colon.push_back(q);
    } else {
      plus.push_back(m);
      colon.push_back(m);
    }
  }
  return zp_add(hilbert_numerator_rec(std::move(plus), nvars),
                zp_shift(hilbert_numerator_rec(std::move(colon), nvars), 1));
}

}  // namespace detail

// Numerator N(t) with HS(S/M) = N(t)/(1-t)^nvars for the monomial ideal M.
inline ZPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  return detail::hilbert_numerator_rec(gens, nvars);
}

struct HilbertSummary {
  int nvars = 0;
  ZPoly numerator;          // over (1-t)^nvars
  ZPoly reduced;            // Q with numerator = (1-t)^codim * Q, Q(1) != 0
  int codim = 0;
  int krull_dim = 0;        // dimension of the affine cone = pole order
  long long degree = 1;     // Q(1)
  std::vector<mpq_class> hilbert_poly;  // coefficients in k^0, k^1, ...

  int scheme_dim() const { return krull_dim - 1; }  // projective dimension
};

// Hilbert function value HF(k) = dim (S/M)_k from the numerator.
inline long long hilbert_function_value(const HilbertSummary& h, int k) {
  auto binom = [](long long n, int r) -> long long {
    if (n < 0 || r < 0) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
  };
  long long s = 0;
  for (int i = 0; i < static_cast<int>(h.numerator.c.size()); ++i)
    s += h.numerator.c[i] * binom(k - i + h.nvars - 1, h.nvars - 1);
  return s;
}

inline HilbertSummary hilbert_from_numerator(ZPoly num, int nvars) {
  HilbertSummary h;
  h.nvars = nvars;
  h.numerator = num;
  // divide out (1-t) factors
  ZPoly q = num;
  int codim = 0;
  while (!q.is_zero() && q.eval1() == 0) {
    // q / (1-t): synthetic division
    ZPoly d;
    d.c.assign(q.c.size() - 1, 0);
    long long carry = 0;
    // write q = (1-t) * d  =>  d_0 = q_0, d_i = q_i + d_{i-1}
    for (std::size_t i = 0; i + 1 < q.c.size(); ++i) {
      carry = q.c[i] + carry;
      d.c[i] = carry;
    }
    d.trim();
    q = d;
    ++codim;
  }
  h.reduced = q;
  h.codim = codim;
  h.krull_dim = nvars - codim;
  h.degree = q.eval1();
  // Hilbert polynomial: HF(k) = sum_s Q_s * C(k - s + D - 1, D - 1), D = dim
  int D = h.krull_dim;
  std::vector<mpq_class> hp;
  if (D > 0) {
    hp.assign(D, mpq_class(0));
    for (int s = 0; s < static_cast<int>(q.c.size()); ++s) {
      if (!q.c[s]) continue;
      // expand C(k - s + D - 1, D - 1) = prod_{i=1}^{D-1} (k - s + i) / (D-1)!
      std::vector<mpq_class> poly{mpq_class(1)};
      for (int i = 1; i <= D - 1; ++i) {
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j + 1] += poly[j];
          next[j] += poly[j] * mpq_class(i - s);
        }
        poly = std::move(next);
      }
      mpq_class fact(1);
      for (int i = 2; i <= D - 1; ++i) fact *= i;
      for (std::size_t j = 0; j < poly.size(); ++j)
        hp[j] += mpq_class(static_cast<long>(q.c[s])) * poly[j] / fact;
    }
  }
  h.hilbert_poly = std::move(hp);
  return h;
}

template <class K>
HilbertSummary hilbert_summary(const Ideal<K>& I, const Guard& guard = Guard{}) {
  if (!I.is_homogeneous())
    throw InputError("Hilbert series requires a homogeneous ideal");
  std::vector<Monomial> lead;
  for (auto& g : I.groebner(guard)) lead.push_back(g.lm());
  return hilbert_from_numerator(hilbert_numerator(lead, I.ring().nvars),
                                I.ring().nvars);
}

}  // namespace graphcurve
