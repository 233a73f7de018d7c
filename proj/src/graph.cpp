#include "graphcurve/graph.hpp"

#include <algorithm>
#include <deque>
#include <array>
#include <cctype>
#include <random>
#include <set>

#include <json.hpp>

namespace graphcurve {

using nlohmann::json;

Graph::Graph(int vertex_count, std::vector<Edge> edges) : d_(vertex_count) {
  if (d_ <= 0) throw InputError("vertex count must be positive");
  std::set<Edge> seen;
  for (auto e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= d_)
      throw InputError("edge endpoint out of range: [" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + "]");
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!seen.insert(e).second)
      throw InputError("duplicate edge [" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "]");
  }
  edges_.assign(seen.begin(), seen.end());
  adj_.assign(d_, {});
  for (auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected() const {
  if (d_ == 0) return false;
  std::vector<bool> vis(d_, false);
  std::deque<int> q{0};
  vis[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj_[v])
      if (!vis[w]) {
        vis[w] = true;
        ++count;
        q.push_back(w);
      }
  }
  return count == d_;
}

std::vector<int> Graph::trivalent_vertices() const {
  std::vector<int> t;
  for (int v = 0; v < d_; ++v)
    if (degree(v) == 3) t.push_back(v);
  return t;
}

std::string Graph::canonical_string() const {
  std::string s = std::to_string(d_) + ";";
  for (auto& e : edges_)
    s += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
  return s;
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_string()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Graph parse_graph(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InputError("graph JSON needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_number_integer())
    throw InputError("\"vertices\" must be an integer");
  int d = j["vertices"].get<int>();
  std::vector<Edge> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InputError("each edge must be a pair of vertex indices");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(d, std::move(edges));
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = json::array();
  for (auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

namespace {

// BFS distances from a source.
std::vector<int> bfs_dist(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

// Exact girth: BFS from every vertex, watching for non-tree edges.
std::optional<int> compute_girth(const Graph& g) {
  int best = -1;
  int d = g.vertex_count();
  for (int s = 0; s < d; ++s) {
    std::vector<int> dist(d, -1), parent(d, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push_back(w);
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace

long long count_cycles_of_length(const Graph& g, int len) {
  // Backtracking over paths whose smallest vertex is the start; each cycle
  // is found once by requiring second vertex < last vertex.
  long long count = 0;
  int d = g.vertex_count();
  std::vector<bool> used(d, false);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v, int start) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (g.adjacent(v, start) && path[1] < path.back()) ++count;
      return;
    }
    for (int w : g.neighbors(v)) {
      if (used[w] || w <= start) continue;
      used[w] = true;
      path.push_back(w);
      self(self, w, start);
      path.pop_back();
      used[w] = false;
    }
  };
  for (int s = 0; s < d; ++s) {
    used[s] = true;
    path = {s};
    dfs(dfs, s, s);
    used[s] = false;
  }
  return count;
}

GraphInvariants invariants(const Graph& g) {
  if (!g.connected()) throw InputError("invariants require a connected graph");
  GraphInvariants inv;
  inv.genus = g.edge_count() - g.vertex_count() + 1;
  inv.girth = compute_girth(g);
  inv.girth_cycle_count =
      inv.girth ? count_cycles_of_length(g, *inv.girth) : 0;
  auto tri = g.trivalent_vertices();
  if (tri.size() >= 2) {
    int best = -1;
    for (std::size_t i = 0; i < tri.size(); ++i) {
      auto dist = bfs_dist(g, tri[i]);
      for (std::size_t j = i + 1; j < tri.size(); ++j)
        if (dist[tri[j]] >= 0 && (best < 0 || dist[tri[j]] < best))
          best = dist[tri[j]];
    }
    if (best >= 0) inv.trivalent_separation = best;
  }
  inv.degree_histogram.assign(4, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int deg = g.degree(v);
    if (deg > 3)
      inv.degree_histogram.resize(std::max<std::size_t>(
                                      inv.degree_histogram.size(), deg + 1),
                                  0);
    ++inv.degree_histogram[deg];
  }
  return inv;
}

ValidationReport validate_assumptions(const Graph& g) {
  ValidationReport r;
  r.connected = g.connected();
  if (!r.connected) r.violations.push_back("(1) graph is not connected");
  r.simple = true;  // the constructor rejects loops and duplicates
  int maxdeg = 0, below = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    maxdeg = std::max(maxdeg, g.degree(v));
    if (g.degree(v) < 3) ++below;
  }
  r.strictly_subtrivalent = (maxdeg <= 3 && below > 0);
  if (!r.strictly_subtrivalent)
    r.violations.push_back(
        maxdeg > 3 ? "(3) vertex of degree > 3"
                   : "(3) every vertex is trivalent");
  auto tri = g.trivalent_vertices();
  r.trivalent_separation_ok = true;
  if (tri.size() >= 2) {
    int best = -1;
    for (std::size_t i = 0; i < tri.size(); ++i) {
      auto dist = bfs_dist(g, tri[i]);
      for (std::size_t j = i + 1; j < tri.size(); ++j)
        if (dist[tri[j]] >= 0 && (best < 0 || dist[tri[j]] < best))
          best = dist[tri[j]];
    }
    if (best >= 0 && best < 3) {
      r.trivalent_separation_ok = false;
      r.violations.push_back("(4) trivalent vertices separated by only " +
                             std::to_string(best) + " edge(s)");
    }
  }
  r.triangle_free = true;
  for (auto& e : g.edges()) {
    for (int w : g.neighbors(e.u))
      if (w != e.v && g.adjacent(w, e.v)) {
        r.triangle_free = false;
        break;
      }
    if (!r.triangle_free) break;
  }
  if (!r.triangle_free) r.violations.push_back("(5) graph contains a triangle");
  return r;
}

Graph make_cycle(int m) {
  if (m < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
  return Graph(m, std::move(edges));
}

Graph make_path(int d) {
  if (d < 2) throw InputError("path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < d; ++i) edges.push_back({i, i + 1});
  return Graph(d, std::move(edges));
}

Graph make_subdivided_k4(int s) {
  if (s < 1) throw InputError("subdivisions per edge must be >= 1");
  std::vector<Edge> edges;
  int next = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      int prev = u;
      for (int k = 0; k < s; ++k) {
        edges.push_back({prev, next});
        prev = next++;
      }
      edges.push_back({prev, v});
    }
  return Graph(next, std::move(edges));
}

namespace {

// Purely random attempt: random subtrivalent tree plus g extra edges.
std::optional<Graph> random_attempt(int d, int g, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<int> deg(d, 0);
  for (int v = 1; v < d; ++v) {
    std::vector<int> cand;
    for (int u = 0; u < v; ++u)
      if (deg[u] < 3) cand.push_back(u);
    if (cand.empty()) return std::nullopt;
    int u = cand[rng() % cand.size()];
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  std::set<Edge> have(edges.begin(), edges.end());
  for (int k = 0; k < g; ++k) {
    std::vector<Edge> cand;
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) {
        if (deg[u] >= 3 || deg[v] >= 3) continue;
        if (have.count({u, v})) continue;
        cand.push_back({u, v});
      }
    if (cand.empty()) return std::nullopt;
    Edge e = cand[rng() % cand.size()];
    edges.push_back(e);
    have.insert(e);
    ++deg[e.u];
    ++deg[e.v];
  }
  Graph gr(d, edges);
  if (!validate_assumptions(gr).all_pass()) return std::nullopt;
  return gr;
}

// Known-valid fallbacks so low-genus requests cannot starve: padded cycles
// for g=1 and padded theta graphs for g=2.
std::optional<Graph> constructive(int d, int g, std::mt19937_64& rng) {
  if (g == 1 && d >= 4) {
    return make_cycle(d);
  }
  if (g == 2 && d >= 8) {
    // theta graph: junctions 0 and 1, three paths with >= 2 interior
    // vertices each
    int interior = d - 2;
    std::array<int, 3> len{2, 2, 2};
    int extra = interior - 6;
    while (extra-- > 0) ++len[rng() % 3];
    std::vector<Edge> edges;
    int next = 2;
    for (int p = 0; p < 3; ++p) {
      int prev = 0;
      for (int k = 0; k < len[p]; ++k) {
        edges.push_back({prev, next});
        prev = next++;
      }
      edges.push_back({prev, 1});
    }
    Graph gr(d, edges);
    if (validate_assumptions(gr).all_pass()) return gr;
  }
  return std::nullopt;
}

}  // namespace

Graph make_random_valid(int d, int g, std::uint64_t seed) {
  if (d < 2) throw InputError("random_valid needs d >= 2");
  if (g < 0) throw InputError("genus must be nonnegative");
  if (d < 2 * g + 2)
    throw InputError("unsatisfiable family: d >= 2g+2 is necessary");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    auto gr = random_attempt(d, g, rng);
    if (gr) return *gr;
  }
  if (auto gr = constructive(d, g, rng)) return *gr;
  throw InputError("random_valid(" + std::to_string(d) + "," +
                   std::to_string(g) + ") failed after bounded retries");
}

std::optional<GirthPredictions> girth_predictions(const Graph& g) {
  auto inv = invariants(g);
  if (!inv.girth) return std::nullopt;
  GirthPredictions p;
  p.girth = *inv.girth;
  p.curve_n2_fail_stage = p.girth - 2;
  if (p.girth >= 5) p.secant_n3_fail_stage = p.girth - 4;
  int free_stage = g.vertex_count() - 2 * inv.genus - 1;  // p in d = 2g+1+p
  if (p.girth - 2 <= free_stage && free_stage >= 1) {
    p.conj_beta_applicable = true;
    p.predicted_beta = inv.girth_cycle_count;
  }
  return p;
}

}  // namespace graphcurve
