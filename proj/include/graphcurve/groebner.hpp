// Buchberger's algorithm with the Gebauer-Moeller pair update, sugar
// selection, full normal forms and reduced bases. Desk-scale ideals only
// (a dozen variables, quadric/cubic generators); no F4-style reduction.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "graphcurve/polynomial.hpp"

namespace graphcurve {

// Cooperative resource guard threaded through the long-running kernels.
struct Guard {
  std::size_t max_basis = 200000;
  int max_degree = 255;  // cap on polynomial degrees seen during reduction
  std::atomic<bool>* cancel = nullptr;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check(std::size_t basis_size, int degree) const {
    if (cancel && cancel->load(std::memory_order_relaxed))
      throw GuardrailError("computation cancelled");
    if (basis_size > max_basis)
      throw GuardrailError("basis size guardrail exceeded (" +
                           std::to_string(basis_size) + " > " +
                           std::to_string(max_basis) + ")");
    if (degree > max_degree)
      throw GuardrailError("degree guardrail exceeded (" +
                           std::to_string(degree) + " > " +
                           std::to_string(max_degree) + ")");
    if (deadline &&
        std::chrono::steady_clock::now() > *deadline)
      throw GuardrailError("time guardrail exceeded");
  }
};

// Full normal form. Every term of the result is irreducible modulo the
// leading terms of `basis`. If `quotients` is non-null it receives, per
// basis element, the multiplier terms used, so that
//   f = sum_k quotients[k] * basis[k] + remainder.
template <class K>
Polynomial<K> normal_form(
    const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
    std::type_identity_t<std::vector<Polynomial<K>>>* quotients = nullptr,
    const Guard* guard = nullptr) {
  const Ring<K>& ring = f.ring();
  const auto& F = ring.field;
  if (quotients) {
    quotients->assign(basis.size(), Polynomial<K>(ring));
  }
  std::vector<Term<K>> rem;
  Polynomial<K> p = f;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    if (guard && (++steps & 1023u) == 0) guard->check(basis.size(), p.lm().deg);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& g = basis[k];
      if (g.is_zero() || !mono_divides(g.lm(), p.lm())) continue;
      Monomial m = mono_div(p.lm(), g.lm());
      auto c = F.div(p.lc(), g.lc());
      p.sub_mul(c, m, g);
      if (quotients)
        (*quotients)[k] = (*quotients)[k] + Polynomial<K>(ring, {{m, c}});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(p.lt());
      std::vector<Term<K>> tail(p.terms().begin() + 1, p.terms().end());
      p = Polynomial<K>(ring, std::move(tail));
    }
  }
  return Polynomial<K>(ring, std::move(rem));
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Ring<K>& ring = f.ring();
  const auto& F = ring.field;
  Monomial l = mono_lcm(f.lm(), g.lm());
  Polynomial<K> a = f.term_mul(mono_div(l, f.lm()), F.inv(f.lc()));
  Polynomial<K> b = g.term_mul(mono_div(l, g.lm()), F.inv(g.lc()));
  return a - b;
}

namespace detail {

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

}  // namespace detail

// Reduced Groebner basis: monic, pairwise irreducible, sorted ascending by
// leading monomial (unique for the ring's order).
template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> basis,
                                        const Guard* guard = nullptr) {
  if (basis.empty()) return basis;
  const Ring<K> ring = basis.front().ring();
  // drop elements whose leading monomial is divisible by another's
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) {
              return mono_cmp(a.lm(), b.lm(), ring.order, ring.nvars) < 0;
            });
  std::vector<Polynomial<K>> kept;
  for (auto& g : basis) {
    bool redundant = false;
    for (auto& h : kept)
      if (mono_divides(h.lm(), g.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g.monic());
  }
  // tail-reduce each against the others
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial<K>> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = normal_form(kept[i], others, nullptr, guard).monic();
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) {
              return mono_cmp(a.lm(), b.lm(), ring.order, ring.nvars) < 0;
            });
  return kept;
}

template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens,
                                      const Guard& guard = Guard{}) {
  std::vector<Polynomial<K>> basis;
  std::vector<int> sugar;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return basis;
  const Ring<K> ring = basis.front().ring();
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) {
              return mono_cmp(a.lm(), b.lm(), ring.order, ring.nvars) < 0;
            });
  for (auto& g : basis) sugar.push_back(g.degree());

  std::vector<detail::SPair> pairs;
  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    int si = sugar[i] + (l.deg - basis[i].lm().deg);
    int sj = sugar[j] + (l.deg - basis[j].lm().deg);
    return std::max(si, sj);
  };
  // Gebauer-Moeller update with the new element t already in `basis`.
  auto update = [&](std::size_t t) {
    const Monomial& lt = basis[t].lm();
    std::vector<detail::SPair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      if (basis[i].is_zero()) continue;
      fresh.push_back({i, t, mono_lcm(basis[i].lm(), lt), 0});
    }
    // M rule: drop (i,t) when another (j,t) has a strictly smaller lcm.
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[a] || drop[b]) continue;
        if (!(fresh[b].lcm == fresh[a].lcm) &&
            mono_divides(fresh[b].lcm, fresh[a].lcm))
          drop[a] = true;
      }
    // F rule: among equal lcms keep one; prefer one with coprime lt's so
    // the first Buchberger criterion can erase the whole class.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      bool coprime_found =
          mono_coprime(basis[fresh[a].i].lm(), basis[fresh[a].j].lm());
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (drop[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
        drop[b] = true;
        if (mono_coprime(basis[fresh[b].i].lm(), basis[fresh[b].j].lm()))
          coprime_found = true;
      }
      if (coprime_found) drop[a] = true;  // first criterion
    }
    // B rule on the old pairs.
    std::vector<detail::SPair> survivors;
    for (auto& pr : pairs) {
      bool cancel = mono_divides(lt, pr.lcm) &&
                    !(mono_lcm(basis[pr.i].lm(), lt) == pr.lcm) &&
                    !(mono_lcm(basis[pr.j].lm(), lt) == pr.lcm);
      if (!cancel) survivors.push_back(pr);
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      fresh[a].sugar = pair_sugar(fresh[a].i, fresh[a].j, fresh[a].lcm);
      survivors.push_back(fresh[a]);
    }
    pairs = std::move(survivors);
  };

  for (std::size_t t = 1; t < basis.size(); ++t) update(t);

  while (!pairs.empty()) {
    guard.check(basis.size(), 0);
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      const auto& x = pairs[a];
      const auto& y = pairs[best];
      if (x.sugar != y.sugar) {
        if (x.sugar < y.sugar) best = a;
        continue;
      }
      int c = mono_cmp(x.lcm, y.lcm, ring.order, ring.nvars);
      if (c < 0 || (c == 0 && (x.i < y.i || (x.i == y.i && x.j < y.j))))
        best = a;
    }
    detail::SPair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    Polynomial<K> sp = s_polynomial(basis[pr.i], basis[pr.j]);
    Polynomial<K> nf = normal_form(sp, basis, nullptr, &guard);
    if (nf.is_zero()) continue;
    guard.check(basis.size() + 1, nf.degree());
    basis.push_back(nf.monic());
    sugar.push_back(std::max(pr.sugar, nf.degree()));
    update(basis.size() - 1);
  }
  return reduce_basis(std::move(basis), &guard);
}

// Exhaustive S-pair check (Buchberger's criterion); used by the property
// suites on every emitted basis.
template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis,
                       const Guard* guard = nullptr) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto nf = normal_form(s_polynomial(basis[i], basis[j]), basis, nullptr,
                            guard);
      if (!nf.is_zero()) return false;
    }
  return true;
}

}  // namespace graphcurve
