// Edge labelings realizing the embedding of a graph curve into P^{d-g}:
// each trivalent vertex gets labels {e_j, e_k, e_j-e_k} on its edges, every
// other edge of the loop-augmented graph gets a fresh single index, and
// each vertex's line ideal is read off from its incident labels.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphcurve/graph.hpp"

namespace graphcurve {

// Single(a) when b < 0, otherwise the binomial label e_a - e_b with a < b.
struct EdgeLabel {
  int a = -1;
  int b = -1;

  bool is_single() const { return b < 0; }
  bool is_difference() const { return b >= 0; }
  bool mentions(int i) const { return a == i || b == i; }
  bool operator==(const EdgeLabel&) const = default;

  std::string to_string() const {
    return is_single() ? "e" + std::to_string(a)
                       : "e" + std::to_string(a) + "-e" + std::to_string(b);
  }
  static EdgeLabel parse(const std::string& text);
};

// A linear form x_a (b < 0) or x_a - x_b.
struct LinearForm {
  int a = -1;
  int b = -1;
  bool is_var() const { return b < 0; }
  bool operator==(const LinearForm&) const = default;
  std::string to_string() const {
    return is_var() ? "x" + std::to_string(a)
                    : "x" + std::to_string(a) + "-x" + std::to_string(b);
  }
};

using LinearIdeal = std::vector<LinearForm>;

class Labeling {
 public:
  const Graph& graph() const { return graph_; }
  int ambient_dim() const { return ambient_; }       // d - g
  int num_indices() const { return ambient_ + 1; }   // |Omega|
  const std::vector<Edge>& aug_edges() const { return aug_edges_; }
  const std::vector<EdgeLabel>& labels() const { return labels_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  bool assumptions_pass() const { return assumptions_pass_; }

  // Indices mentioned by any label at v.
  std::vector<bool> appearing(int v) const;
  bool is_trivalent_vertex(int v) const { return graph_.degree(v) == 3; }

  std::string to_json() const;

  friend Labeling label_edges(const Graph& g, bool allow_violations);
  friend Labeling ingest_labeling(const Graph& g, const std::string& doc,
                                  bool allow_violations);
  friend Labeling relabel_involution(const Labeling& l, int v);

 private:
  Graph graph_;
  int ambient_ = 0;
  std::vector<Edge> aug_edges_;      // sorted; loops encoded as (v,v)
  std::vector<EdgeLabel> labels_;    // parallel to aug_edges_
  std::vector<std::vector<int>> incident_;  // vertex -> aug edge indices
  bool assumptions_pass_ = false;

  void finalize(bool allow_violations);
  void validate(bool allow_violations) const;
};

// Deterministic labeling per the embedding construction: trivalent
// vertices in ascending order, their two smallest-neighbor edges getting
// fresh singles j < k, the third edge e_j-e_k; all remaining augmented
// edges (loops included) fresh singles in ascending edge order.
Labeling label_edges(const Graph& g, bool allow_violations = false);

// Labeling document: {"labels":[{"edge":[u,v],"label":"e3"},
// {"loop":5,"label":"e0-e6"}, ...]}. Indices may be any d-g+1 distinct
// values; non-dense sets are remapped order-preserving.
Labeling ingest_labeling(const Graph& g, const std::string& doc,
                         bool allow_violations = false);

// Generators of the line ideal of vertex v: exactly ambient-1 independent
// forms, variables and binomials only.
LinearIdeal line_ideal(const Labeling& l, int v);

// Two spanning points of the line of v (as coordinate vectors of length
// ambient+1 with entries 0/1).
std::pair<std::vector<int>, std::vector<int>> line_points(const Labeling& l,
                                                          int v);

// Swap the labels e_j and e_j-e_k at a trivalent vertex; an involution.
// The coordinate substitution x_k -> x_j - x_k carries old line ideals to
// new ones.
Labeling relabel_involution(const Labeling& l, int v);

}  // namespace graphcurve
