// The two independent routes to I_{C_G}: the combinatorial product list
// read off the labeled graph (forbidden-subgraph filter), and the oracle
// intersection of all line ideals. certify_theorem_1_5 checks one against
// the other plus the degree-2 linear-algebra space.
#pragma once

#include <string>
#include <vector>

#include "graphcurve/hilbert.hpp"
#include "graphcurve/ideal.hpp"
#include "graphcurve/labeling.hpp"
#include "graphcurve/linalg.hpp"

namespace graphcurve {

template <class K>
Polynomial<K> form_to_poly(const Ring<K>& ring, const LinearForm& f) {
  return f.is_var() ? poly_var(ring, f.a) : poly_binomial_diff(ring, f.a, f.b);
}

template <class K>
Polynomial<K> label_form(const Ring<K>& ring, const EdgeLabel& l) {
  return l.is_single() ? poly_var(ring, l.a)
                       : poly_binomial_diff(ring, l.a, l.b);
}

template <class K>
Ring<K> labeling_ring(const Labeling& l, const K& field) {
  if (l.num_indices() > kMaxVars - 1)
    throw GuardrailError("ambient dimension too large (max " +
                         std::to_string(kMaxVars - 1) + " variables)");
  return Ring<K>{l.num_indices(), Order::kGrevlex, field};
}

// The forms of a line ideal are already a reduced Groebner basis once
// sorted; no Buchberger run needed.
template <class K>
Ideal<K> line_ideal_poly(const Ring<K>& ring, const Labeling& l, int v) {
  std::vector<Polynomial<K>> forms;
  for (auto& f : line_ideal(l, v)) forms.push_back(form_to_poly(ring, f));
  std::sort(forms.begin(), forms.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) {
              return mono_cmp(a.lm(), b.lm(), ring.order, ring.nvars) < 0;
            });
  return Ideal<K>::from_groebner(ring, std::move(forms));
}

// ---------------------------------------------------------------------------
// Combinatorial generators (products of linear forms)

struct QuadricProduct {
  EdgeLabel f1, f2;
  int clause = 0;  // 1: x_i x_j, 2: x_i (x_j - x_k), 3: (x_i-x_j)(x_k-x_l)

  std::string to_string() const {
    auto wrap = [](const EdgeLabel& l) {
      std::string s = l.is_single() ? "x" + std::to_string(l.a)
                                    : "(x" + std::to_string(l.a) + "-x" +
                                          std::to_string(l.b) + ")";
      return s;
    };
    return wrap(f1) + "*" + wrap(f2);
  }
};

template <class K>
Polynomial<K> product_to_poly(const Ring<K>& ring, const QuadricProduct& q) {
  return label_form(ring, q.f1) * label_form(ring, q.f2);
}

namespace detail {

// Does the linear form of `lab` vanish identically on the line of v?
// Pure graph/label data; this is the operational content of the
// forbidden-subgraph rules.
inline bool label_vanishes_at(const Labeling& l, const EdgeLabel& lab, int v) {
  auto app = l.appearing(v);
  if (lab.is_single()) return !app[lab.a];
  bool incident_here = false;
  for (int e : l.incident(v))
    if (l.labels()[e] == lab) incident_here = true;
  if (incident_here) {
    // on the trivalent owner the two coordinates stay independent; on any
    // other incident vertex the edge forces x_a = x_b
    return !l.is_trivalent_vertex(v);
  }
  return !app[lab.a] && !app[lab.b];
}

}  // namespace detail

// Every product of two distinct edge-label forms that vanishes on the
// whole arrangement, in a fixed clause-then-index order.
inline std::vector<QuadricProduct> combinatorial_products_all(
    const Labeling& l) {
  const auto& labels = l.labels();
  auto in_ideal = [&](const EdgeLabel& a, const EdgeLabel& b) {
    for (int v = 0; v < l.graph().vertex_count(); ++v)
      if (!detail::label_vanishes_at(l, a, v) &&
          !detail::label_vanishes_at(l, b, v))
        return false;
    return true;
  };
  std::vector<EdgeLabel> singles, diffs;
  for (auto& lab : labels)
    (lab.is_single() ? singles : diffs).push_back(lab);
  std::sort(singles.begin(), singles.end(),
            [](const EdgeLabel& a, const EdgeLabel& b) { return a.a < b.a; });
  std::sort(diffs.begin(), diffs.end(),
            [](const EdgeLabel& a, const EdgeLabel& b) {
              return a.a != b.a ? a.a < b.a : a.b < b.b;
            });
  std::vector<QuadricProduct> out;
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      if (in_ideal(singles[i], singles[j]))
        out.push_back({singles[i], singles[j], 1});
  for (auto& d : diffs)
    for (auto& s : singles) {
      if (d.mentions(s.a)) continue;  // factors must have distinct variables
      if (in_ideal(s, d)) out.push_back({s, d, 2});
    }
  for (std::size_t i = 0; i < diffs.size(); ++i)
    for (std::size_t j = i + 1; j < diffs.size(); ++j) {
      if (diffs[j].mentions(diffs[i].a) || diffs[j].mentions(diffs[i].b))
        continue;
      if (in_ideal(diffs[i], diffs[j])) out.push_back({diffs[i], diffs[j], 3});
    }
  return out;
}

namespace detail {

inline int quad_index(int a, int b, int n) {
  // index of x_a x_b (a <= b) in the degree-2 monomial basis
  return a * n - a * (a - 1) / 2 + (b - a);
}

template <class K>
std::vector<typename K::Elem> quadric_coeffs(const Polynomial<K>& q) {
  int n = q.ring().nvars;
  int dim = n * (n + 1) / 2;
  std::vector<typename K::Elem> v(dim, q.ring().field.zero());
  for (auto& t : q.terms()) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      for (int rep = 0; rep < t.m.e[i]; ++rep) {
        if (a < 0)
          a = i;
        else
          b = i;
      }
    }
    if (b < 0) b = a;
    v[quad_index(a, b, n)] = t.c;
  }
  return v;
}

}  // namespace detail

// Minimal generating subset of the filtered products: a greedy pass in the
// fixed product order keeps each product that enlarges the degree-2 span.
template <class K>
std::vector<QuadricProduct> combinatorial_generators(const Labeling& l,
                                                     const Ring<K>& ring) {
  auto all = combinatorial_products_all(l);
  std::vector<QuadricProduct> kept;
  std::vector<std::vector<typename K::Elem>> rows;
  int dim = ring.nvars * (ring.nvars + 1) / 2;
  for (auto& q : all) {
    auto v = detail::quadric_coeffs(product_to_poly(ring, q));
    auto rows2 = rows;
    rows2.push_back(v);
    if (rank(mat_from_rows<K>(rows2, dim, ring.field)) >
        static_cast<int>(rows.size())) {
      rows.push_back(std::move(v));
      kept.push_back(q);
    }
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Degree-2 oracle: quadrics vanishing on every line, by restricting to
// three points per line (a quadric vanishes on a line iff it kills both
// spanning points and their sum).

template <class K>
std::vector<Polynomial<K>> quadrics_vanishing_on_lines(
    const Ring<K>& ring,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& lines) {
  const auto& F = ring.field;
  int n = ring.nvars;
  int dim = n * (n + 1) / 2;
  Mat<K> m(static_cast<int>(lines.size()) * 3, dim, F);
  int r = 0;
  for (auto& [p, q] : lines) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = p[i] + q[i];
    for (auto* pt : {&p, &q}) {
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          m.at(r, detail::quad_index(a, b, n)) =
              F.make(static_cast<long long>((*pt)[a]) * (*pt)[b]);
      ++r;
    }
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        m.at(r, detail::quad_index(a, b, n)) =
            F.make(static_cast<long long>(s[a]) * s[b]);
    ++r;
  }
  std::vector<Polynomial<K>> basis;
  for (auto& v : kernel_basis(m)) {
    std::vector<Term<K>> ts;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        auto c = v[detail::quad_index(a, b, n)];
        if (!F.is_zero(c))
          ts.push_back({mono_mul(monomial_var(a), monomial_var(b)), c});
      }
    basis.emplace_back(ring, std::move(ts));
  }
  return basis;
}

template <class K>
std::vector<Polynomial<K>> quadric_space(const Labeling& l,
                                         const Ring<K>& ring) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> lines;
  for (int v = 0; v < l.graph().vertex_count(); ++v)
    lines.push_back(line_points(l, v));
  return quadrics_vanishing_on_lines(ring, lines);
}

// ---------------------------------------------------------------------------
// Oracle route: fold the line ideals through pairwise intersection.

template <class K>
Ideal<K> intersection_ideal(const Labeling& l, const Ring<K>& ring,
                            const Guard& guard = Guard{}) {
  Ideal<K> acc = line_ideal_poly(ring, l, 0);
  for (int v = 1; v < l.graph().vertex_count(); ++v)
    acc = ideal_intersection(acc, line_ideal_poly(ring, l, v), guard);
  return acc;
}

// ---------------------------------------------------------------------------
// Certification: products vs oracle

struct Certificate {
  bool degree2 = false;     // span(products) == quadric space
  bool membership = false;  // every product lies in the oracle ideal
  bool generation = false;  // <products> == oracle ideal (equal reduced GBs)
  std::string details;

  bool pass() const { return degree2 && membership && generation; }
};

template <class K>
Certificate certify_theorem_1_5(const Labeling& l, const Ring<K>& ring,
                                const Guard& guard = Guard{}) {
  Certificate cert;
  auto all = combinatorial_products_all(l);
  auto gens = combinatorial_generators(l, ring);
  auto quad = quadric_space(l, ring);

  int dim = ring.nvars * (ring.nvars + 1) / 2;
  std::vector<std::vector<typename K::Elem>> prod_rows, quad_rows;
  for (auto& q : gens)
    prod_rows.push_back(detail::quadric_coeffs(product_to_poly(ring, q)));
  for (auto& q : quad) quad_rows.push_back(detail::quadric_coeffs(q));
  cert.degree2 =
      row_space_equal<K>(prod_rows, quad_rows, dim, ring.field);
  if (!cert.degree2)
    cert.details += "degree-2 span (" + std::to_string(prod_rows.size()) +
                    ") != quadric space (" + std::to_string(quad_rows.size()) +
                    "); ";

  Ideal<K> oracle = intersection_ideal(l, ring, guard);
  cert.membership = true;
  for (auto& q : all)
    if (!oracle.contains(product_to_poly(ring, q), guard)) {
      cert.membership = false;
      cert.details += "product " + q.to_string() + " not in the oracle; ";
      break;
    }

  if (cert.degree2) {
    std::vector<Polynomial<K>> pgens;
    for (auto& q : gens) pgens.push_back(product_to_poly(ring, q));
    Ideal<K> comb(ring, std::move(pgens));
    cert.generation = comb.equals(oracle, guard);
    if (!cert.generation) cert.details += "reduced bases differ; ";
  } else {
    cert.generation = false;
    cert.details += "generation skipped (degree-2 gate failed); ";
  }
  return cert;
}

}  // namespace graphcurve
