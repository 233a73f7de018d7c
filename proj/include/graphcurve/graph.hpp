// Simple undirected graphs with the combinatorial invariants the embedding
// needs: genus, girth, shortest-cycle counts, trivalent separation, and
// the admissibility checks (connected, simple, strictly subtrivalent,
// trivalent vertices three edges apart, triangle-free).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcurve/field.hpp"

namespace graphcurve {

struct Edge {
  int u = 0, v = 0;  // normalized u <= v; u == v encodes a loop of G~

  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;
  // Validates: indices in range, no self-loops, no duplicate edges.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return d_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  bool connected() const;
  std::vector<int> trivalent_vertices() const;

  std::string canonical_string() const;
  std::uint64_t hash() const;  // FNV-1a of the canonical form

 private:
  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// JSON wire format: {"vertices": <int>, "edges": [[u,v], ...]}.
Graph parse_graph(const std::string& json_text);
std::string graph_to_json(const Graph& g);

struct GraphInvariants {
  int genus = 0;
  std::optional<int> girth;              // nullopt for forests
  long long girth_cycle_count = 0;
  std::optional<int> trivalent_separation;  // nullopt with < 2 trivalents
  std::vector<int> degree_histogram;     // counts of degree 0..3
};

// Requires a connected graph (genus = m - d + 1 only makes sense there).
GraphInvariants invariants(const Graph& g);

// Count of simple cycles of length exactly `len` (used for the girth count
// and nothing longer; full cycle enumeration is deliberately out of reach).
long long count_cycles_of_length(const Graph& g, int len);

struct ValidationReport {
  bool connected = false;
  bool simple = false;
  bool strictly_subtrivalent = false;
  bool trivalent_separation_ok = false;  // >= 3 edges apart
  bool triangle_free = false;
  std::vector<std::string> violations;

  bool all_pass() const {
    return connected && simple && strictly_subtrivalent &&
           trivalent_separation_ok && triangle_free;
  }
};

ValidationReport validate_assumptions(const Graph& g);

// Named graph families for fixtures and the survey harness.
Graph make_cycle(int m);
Graph make_path(int d);
Graph make_subdivided_k4(int subdivisions_per_edge);
// Random graph with d vertices and genus g passing all assumptions, or
// throws after bounded retries.
Graph make_random_valid(int d, int g, std::uint64_t seed);

// Girth-driven syzygy predictions (empty when the graph is a forest).
struct GirthPredictions {
  int girth = 0;
  int curve_n2_fail_stage = 0;                // N_{2, girth-2} fails
  std::optional<int> secant_n3_fail_stage;    // N_{3, girth-4}, girth >= 5
  // beta_{girth-2, girth} = girth cycle count, applicable when
  // d = 2g+1+p with girth-2 <= p
  bool conj_beta_applicable = false;
  long long predicted_beta = 0;
};

std::optional<GirthPredictions> girth_predictions(const Graph& g);

}  // namespace graphcurve
