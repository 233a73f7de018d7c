// Secant varieties of the line arrangement: spans over (k+1)-subsets of
// vertices, containment pruning, and the ideal as an intersection of span
// ideals.
#pragma once

#include <string>
#include <vector>

#include "graphcurve/idealgen.hpp"

namespace graphcurve {

template <class K>
struct SpanSubspace {
  std::vector<int> vertices;
  std::vector<std::vector<typename K::Elem>> forms;  // basis, coeff vectors
  int proj_dim = 0;                                  // of the span
};

// Linear forms vanishing on every listed line: the kernel of the matrix
// whose rows are the lines' spanning points.
template <class K>
SpanSubspace<K> span_subspace(const Labeling& l, const Ring<K>& ring,
                              const std::vector<int>& vertices) {
  const auto& F = ring.field;
  int n = ring.nvars;
  Mat<K> pts(static_cast<int>(vertices.size()) * 2, n, F);
  int r = 0;
  for (int v : vertices) {
    auto [p, q] = line_points(l, v);
    for (int i = 0; i < n; ++i) pts.at(r, i) = F.make(p[i]);
    ++r;
    for (int i = 0; i < n; ++i) pts.at(r, i) = F.make(q[i]);
    ++r;
  }
  SpanSubspace<K> s;
  s.vertices = vertices;
  s.forms = kernel_basis(pts);
  s.proj_dim = (n - 1) - static_cast<int>(s.forms.size());
  return s;
}

template <class K>
Polynomial<K> coeffs_to_linear(const Ring<K>& ring,
                               const std::vector<typename K::Elem>& v) {
  std::vector<Term<K>> ts;
  for (int i = 0; i < ring.nvars; ++i)
    if (!ring.field.is_zero(v[i])) ts.push_back({monomial_var(i), v[i]});
  return Polynomial<K>(ring, std::move(ts));
}

template <class K>
struct SecantResult {
  int k = 1;
  bool fills_ambient = false;
  std::string status = "ok";
  std::vector<SpanSubspace<K>> components;  // retained spans
  Ideal<K> ideal;
};

// Sigma_k as the intersection of the span ideals over all (k+1)-subsets of
// vertices, after pruning spans contained in another candidate.
template <class K>
SecantResult<K> secant_ideal(const Labeling& l, int k, const Ring<K>& ring,
                             const Guard& guard = Guard{}) {
  if (k < 1) throw InputError("secant level k must be >= 1");
  SecantResult<K> out;
  out.k = k;
  out.ideal = Ideal<K>(ring);
  int ambient = l.ambient_dim();
  if (ambient <= 2 * k + 1) {
    out.fills_ambient = true;
    out.status = "fills ambient space (2k+1 >= d-g)";
    return out;
  }
  int d = l.graph().vertex_count();
  std::vector<SpanSubspace<K>> candidates;
  std::vector<int> subset(k + 1);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k + 1) {
      candidates.push_back(span_subspace(l, ring, subset));
      return;
    }
    for (int v = start; v < d; ++v) {
      subset[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);

  // prune: drop any span contained in another (containment of spans is
  // reverse inclusion of their form spaces); among equal spans the first
  // subset in lexicographic order survives
  int n = ring.nvars;
  std::vector<bool> dead(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size() && !dead[i]; ++j) {
      if (i == j || dead[j]) continue;
      bool i_in_j = row_space_contains<K>(candidates[i].forms,
                                          candidates[j].forms, n, ring.field);
      if (!i_in_j) continue;
      bool j_in_i = row_space_contains<K>(candidates[j].forms,
                                          candidates[i].forms, n, ring.field);
      if (j_in_i && i < j) continue;  // equal spans: keep the earlier one
      dead[i] = true;
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!dead[i]) out.components.push_back(candidates[i]);

  bool first = true;
  for (auto& comp : out.components) {
    std::vector<Polynomial<K>> forms;
    for (auto& f : comp.forms) forms.push_back(coeffs_to_linear(ring, f));
    std::sort(forms.begin(), forms.end(), Polynomial<K>::poly_less);
    Ideal<K> span(ring, std::move(forms));
    if (first) {
      out.ideal = Ideal<K>::from_groebner(ring, buchberger(span.generators(),
                                                           guard));
      first = false;
    } else {
      out.ideal = ideal_intersection(out.ideal, span, guard);
    }
  }
  if (first) {
    out.fills_ambient = true;
    out.status = "no candidate spans";
  }
  return out;
}

// Degree of Sigma_1 for a curve of degree d and genus g: C(d-1,2) - g,
// which equals the count of non-adjacent vertex pairs C(d,2) - m.
inline long long secant_degree_prediction(int d, int g) {
  long long c = static_cast<long long>(d - 1) * (d - 2) / 2 - g;
  long long pairs =
      static_cast<long long>(d) * (d - 1) / 2 - (d + g - 1);
  if (c != pairs)
    throw GuardrailError("secant degree identity violated");  // unreachable
  return c;
}

}  // namespace graphcurve
