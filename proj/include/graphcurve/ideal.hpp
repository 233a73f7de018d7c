// Ideals with cached reduced Groebner bases, plus sum, product,
// membership and pairwise intersection via elimination of an auxiliary
// parameter from t*I + (1-t)*J.
#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "graphcurve/groebner.hpp"

namespace graphcurve {

template <class K>
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(const Ring<K>& ring) : ring_(ring) {}
  Ideal(const Ring<K>& ring, std::vector<Polynomial<K>> gens)
      : ring_(ring), gens_(std::move(gens)) {}

  // For generator lists already known to be a reduced Groebner basis.
  static Ideal from_groebner(const Ring<K>& ring,
                             std::vector<Polynomial<K>> gb) {
    Ideal I(ring, gb);
    I.gb_ = std::make_shared<std::vector<Polynomial<K>>>(std::move(gb));
    return I;
  }

  const Ring<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }

  void add_generator(Polynomial<K> g) {
    if (!g.is_zero()) gens_.push_back(std::move(g));
    gb_.reset();
  }

  bool is_homogeneous() const {
    for (auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  const std::vector<Polynomial<K>>& groebner(const Guard& guard = Guard{}) const {
    if (!gb_) gb_ = std::make_shared<std::vector<Polynomial<K>>>(
                  buchberger(gens_, guard));
    return *gb_;
  }

  bool contains(const Polynomial<K>& f, const Guard& guard = Guard{}) const {
    return normal_form(f, groebner(guard), nullptr, &guard).is_zero();
  }

  // Reduced bases are unique per order, so ideal equality is basis equality.
  bool equals(const Ideal& other, const Guard& guard = Guard{}) const {
    const auto& a = groebner(guard);
    const auto& b = other.groebner(guard);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

 private:
  Ring<K> ring_;
  std::vector<Polynomial<K>> gens_;
  mutable std::shared_ptr<std::vector<Polynomial<K>>> gb_;
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Polynomial<K>> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Polynomial<K>> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (auto& f : a.generators())
    for (auto& g : b.generators()) {
      auto h = f * g;
      if (!h.is_zero()) gens.push_back(std::move(h));
    }
  return Ideal<K>(a.ring(), std::move(gens));
}

namespace detail {

// Lift into the ring with one extra elimination variable t (last index).
template <class K>
Polynomial<K> lift_poly(const Ring<K>& ext, const Polynomial<K>& f) {
  std::vector<Term<K>> ts(f.terms().begin(), f.terms().end());
  return Polynomial<K>(ext, std::move(ts));
}

template <class K>
Polynomial<K> drop_poly(const Ring<K>& base, const Polynomial<K>& f) {
  std::vector<Term<K>> ts(f.terms().begin(), f.terms().end());
  return Polynomial<K>(base, std::move(ts));
}

}  // namespace detail

// I cap J by elimination: compute a Groebner basis of t*I + (1-t)*J in an
// order where t dominates, and keep the t-free elements. Every returned
// generator is verified to lie in both inputs.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& I, const Ideal<K>& J,
                            const Guard& guard = Guard{}) {
  const Ring<K>& ring = I.ring();
  if (ring.order != Order::kGrevlex)
    throw InputError("intersection requires a grevlex base ring");
  if (ring.nvars + 1 > kMaxVars)
    throw GuardrailError("too many variables for elimination");
  Ring<K> ext{ring.nvars + 1, Order::kElimLast, ring.field};
  int t = ring.nvars;
  Polynomial<K> tv = poly_var(ext, t);
  Polynomial<K> one_minus_t = poly_const(ext, 1) - tv;
  std::vector<Polynomial<K>> gens;
  for (auto& f : I.generators()) gens.push_back(tv * detail::lift_poly(ext, f));
  for (auto& g : J.generators())
    gens.push_back(one_minus_t * detail::lift_poly(ext, g));
  auto gb = buchberger(gens, guard);
  std::vector<Polynomial<K>> result;
  for (auto& g : gb) {
    bool has_t = false;
    for (auto& term : g.terms())
      if (term.m.e[t]) {
        has_t = true;
        break;
      }
    if (!has_t) result.push_back(detail::drop_poly(ring, g));
  }
  // The t-free slice of the elimination basis is already a Groebner basis
  // for the restricted order, which agrees with the base ring's grevlex.
  result = reduce_basis(std::move(result), &guard);
  for (auto& g : result)
    if (!I.contains(g, guard) || !J.contains(g, guard))
      throw GuardrailError("intersection postcondition failed");
  return Ideal<K>::from_groebner(ring, std::move(result));
}

}  // namespace graphcurve
