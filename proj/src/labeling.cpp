#include "graphcurve/labeling.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

namespace graphcurve {

using nlohmann::json;

EdgeLabel EdgeLabel::parse(const std::string& text) {
  auto bad = [&] {
    return InputError("cannot parse edge label '" + text +
                      "' (expected e<i> or e<i>-e<j>)");
  };
  std::size_t i = 0;
  auto read_index = [&]() {
    if (i >= text.size() || text[i] != 'e') throw bad();
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) throw bad();
    return std::stoi(text.substr(start, i - start));
  };
  EdgeLabel l;
  l.a = read_index();
  if (i < text.size()) {
    if (text[i] != '-') throw bad();
    ++i;
    l.b = read_index();
    if (i != text.size()) throw bad();
    if (l.a == l.b) throw InputError("difference label with equal indices");
    if (l.a > l.b) std::swap(l.a, l.b);
  }
  return l;
}

namespace {

std::vector<Edge> augmented_edges(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) edges.push_back({v, v});
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::vector<bool> Labeling::appearing(int v) const {
  std::vector<bool> app(num_indices(), false);
  for (int e : incident_[v]) {
    const auto& l = labels_[e];
    app[l.a] = true;
    if (l.is_difference()) app[l.b] = true;
  }
  return app;
}

void Labeling::finalize(bool allow_violations) {
  incident_.assign(graph_.vertex_count(), {});
  for (std::size_t e = 0; e < aug_edges_.size(); ++e) {
    incident_[aug_edges_[e].u].push_back(static_cast<int>(e));
    if (!aug_edges_[e].is_loop())
      incident_[aug_edges_[e].v].push_back(static_cast<int>(e));
  }
  assumptions_pass_ = validate_assumptions(graph_).all_pass();
  validate(allow_violations);
}

void Labeling::validate(bool allow_violations) const {
  int n = num_indices();
  // every index in range, full index set used
  std::vector<int> single_uses(n, 0);
  std::set<int> used;
  for (auto& l : labels_) {
    if (l.a < 0 || l.a >= n || (l.is_difference() && (l.b < 0 || l.b >= n)))
      throw InputError("label index out of range for ambient P^" +
                       std::to_string(ambient_));
    used.insert(l.a);
    if (l.is_difference())
      used.insert(l.b);
    else
      ++single_uses[l.a];
  }
  if (static_cast<int>(used.size()) != n)
    throw InputError("labeling uses " + std::to_string(used.size()) +
                     " distinct indices, needs " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (single_uses[i] > 1)
      throw InputError("single label e" + std::to_string(i) +
                       " used on more than one edge");
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const auto& inc = incident_[v];
    if (graph_.degree(v) == 3) {
      // must be {e_j, e_k, e_j-e_k}
      std::vector<EdgeLabel> ls;
      for (int e : inc) ls.push_back(labels_[e]);
      int diffs = 0;
      EdgeLabel diff;
      std::set<int> singles;
      for (auto& l : ls) {
        if (l.is_difference()) {
          ++diffs;
          diff = l;
        } else {
          singles.insert(l.a);
        }
      }
      if (diffs != 1 || singles.size() != 2 || !singles.count(diff.a) ||
          !singles.count(diff.b))
        throw InputError("inconsistent label triple at trivalent vertex " +
                         std::to_string(v));
    } else {
      // the deletions at v must not collide, otherwise the line degenerates
      int diffs = 0;
      std::set<int> deleted;
      std::size_t expect = 0;
      for (int e : inc) {
        const auto& l = labels_[e];
        deleted.insert(l.a);
        ++expect;
        if (l.is_difference()) {
          deleted.insert(l.b);
          ++expect;
          ++diffs;
        }
      }
      if (deleted.size() != expect)
        throw InputError("degenerate line ideal at vertex " +
                         std::to_string(v) + " (labels share an index)");
      if (diffs >= 2 && !allow_violations && assumptions_pass_)
        throw InputError("two difference labels meet at vertex " +
                         std::to_string(v));
    }
  }
}

Labeling label_edges(const Graph& g, bool allow_violations) {
  if (g.vertex_count() < 2)
    throw InputError("labeling needs at least 2 vertices");
  if (!g.connected()) throw InputError("labeling requires a connected graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3)
      throw InputError("vertex " + std::to_string(v) + " has degree > 3");
  auto report = validate_assumptions(g);
  if (!report.all_pass() && !allow_violations) {
    std::string msg = "graph fails the embedding assumptions:";
    for (auto& v : report.violations) msg += " " + v;
    throw InputError(msg + " (pass --allow-violations to proceed)");
  }

  Labeling l;
  l.graph_ = g;
  int genus = g.edge_count() - g.vertex_count() + 1;
  l.ambient_ = g.vertex_count() - genus;
  l.aug_edges_ = augmented_edges(g);
  l.labels_.assign(l.aug_edges_.size(), EdgeLabel{});
  std::vector<bool> labeled(l.aug_edges_.size(), false);

  auto edge_index = [&](int u, int v) {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(l.aug_edges_.begin(), l.aug_edges_.end(), e);
    return static_cast<int>(it - l.aug_edges_.begin());
  };

  int fresh = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) continue;
    auto nbrs = g.neighbors(v);  // sorted ascending
    int e0 = edge_index(v, nbrs[0]);
    int e1 = edge_index(v, nbrs[1]);
    int e2 = edge_index(v, nbrs[2]);
    if (labeled[e0] || labeled[e1] || labeled[e2])
      throw InputError(
          "cannot label: trivalent vertices share an edge (separation < 2)");
    int j = fresh++;
    int k = fresh++;
    l.labels_[e0] = {j, -1};
    l.labels_[e1] = {k, -1};
    l.labels_[e2] = {j, k};
    labeled[e0] = labeled[e1] = labeled[e2] = true;
  }
  for (std::size_t e = 0; e < l.aug_edges_.size(); ++e) {
    if (labeled[e]) continue;
    l.labels_[e] = {fresh++, -1};
    labeled[e] = true;
  }
  if (fresh != l.num_indices())
    throw InputError("labeling used " + std::to_string(fresh) +
                     " indices, expected " + std::to_string(l.num_indices()));
  l.finalize(allow_violations);
  return l;
}

Labeling ingest_labeling(const Graph& g, const std::string& doc,
                         bool allow_violations) {
  if (!g.connected()) throw InputError("labeling requires a connected graph");
  json j;
  try {
    j = json::parse(doc);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed labeling JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
    throw InputError("labeling JSON needs a \"labels\" array");

  Labeling l;
  l.graph_ = g;
  int genus = g.edge_count() - g.vertex_count() + 1;
  l.ambient_ = g.vertex_count() - genus;
  l.aug_edges_ = augmented_edges(g);
  l.labels_.assign(l.aug_edges_.size(), EdgeLabel{});
  std::vector<bool> labeled(l.aug_edges_.size(), false);

  for (auto& item : j["labels"]) {
    if (!item.is_object() || !item.contains("label"))
      throw InputError("each labels[] entry needs \"label\"");
    Edge e;
    if (item.contains("edge")) {
      auto& ej = item["edge"];
      if (!ej.is_array() || ej.size() != 2)
        throw InputError("\"edge\" must be a pair [u,v]");
      e = {ej[0].get<int>(), ej[1].get<int>()};
      if (e.u > e.v) std::swap(e.u, e.v);
    } else if (item.contains("loop")) {
      int v = item["loop"].get<int>();
      e = {v, v};
    } else {
      throw InputError("labels[] entry needs \"edge\" or \"loop\"");
    }
    auto it = std::lower_bound(l.aug_edges_.begin(), l.aug_edges_.end(), e);
    if (it == l.aug_edges_.end() || !(*it == e))
      throw InputError("label names an edge not in the augmented graph: [" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + "]");
    std::size_t idx = it - l.aug_edges_.begin();
    if (labeled[idx])
      throw InputError("edge labeled twice: [" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "]");
    l.labels_[idx] = EdgeLabel::parse(item["label"].get<std::string>());
    labeled[idx] = true;
  }
  for (std::size_t e = 0; e < l.aug_edges_.size(); ++e)
    if (!labeled[e])
      throw InputError("edge [" + std::to_string(l.aug_edges_[e].u) + "," +
                       std::to_string(l.aug_edges_[e].v) + "] has no label");

  // order-preserving remap when the document uses a non-dense index set
  std::set<int> used;
  for (auto& lab : l.labels_) {
    used.insert(lab.a);
    if (lab.is_difference()) used.insert(lab.b);
  }
  if (static_cast<int>(used.size()) != l.num_indices())
    throw InputError("labeling uses " + std::to_string(used.size()) +
                     " distinct indices, needs " +
                     std::to_string(l.num_indices()));
  if (*used.rbegin() >= l.num_indices() || *used.begin() < 0) {
    std::map<int, int> remap;
    int next = 0;
    for (int i : used) remap[i] = next++;
    for (auto& lab : l.labels_) {
      lab.a = remap[lab.a];
      if (lab.is_difference()) lab.b = remap[lab.b];
    }
  }
  l.finalize(allow_violations);
  return l;
}

std::string Labeling::to_json() const {
  json j;
  j["labels"] = json::array();
  for (std::size_t e = 0; e < aug_edges_.size(); ++e) {
    json item;
    if (aug_edges_[e].is_loop())
      item["loop"] = aug_edges_[e].u;
    else
      item["edge"] = {aug_edges_[e].u, aug_edges_[e].v};
    item["label"] = labels_[e].to_string();
    j["labels"].push_back(item);
  }
  return j.dump();
}

LinearIdeal line_ideal(const Labeling& l, int v) {
  if (v < 0 || v >= l.graph().vertex_count())
    throw InputError("vertex out of range");
  int n = l.num_indices();
  std::vector<bool> keep(n, true);
  std::vector<LinearForm> diffs;
  if (l.is_trivalent_vertex(v)) {
    // labels are {e_j, e_k, e_j-e_k}: ideal generated by Omega \ {x_j,x_k}
    for (int e : l.incident(v)) {
      const auto& lab = l.labels()[e];
      if (lab.is_difference()) {
        keep[lab.a] = false;
        keep[lab.b] = false;
      }
    }
  } else {
    for (int e : l.incident(v)) {
      const auto& lab = l.labels()[e];
      keep[lab.a] = false;
      if (lab.is_difference()) {
        keep[lab.b] = false;
        diffs.push_back({lab.a, lab.b});
      }
    }
  }
  LinearIdeal forms;
  for (int i = 0; i < n; ++i)
    if (keep[i]) forms.push_back({i, -1});
  forms.insert(forms.end(), diffs.begin(), diffs.end());
  return forms;
}

std::pair<std::vector<int>, std::vector<int>> line_points(const Labeling& l,
                                                          int v) {
  int n = l.num_indices();
  std::vector<std::vector<int>> pts;
  if (l.is_trivalent_vertex(v)) {
    for (int e : l.incident(v)) {
      const auto& lab = l.labels()[e];
      if (lab.is_difference()) {
        std::vector<int> p(n, 0), q(n, 0);
        p[lab.a] = 1;
        q[lab.b] = 1;
        pts = {p, q};
      }
    }
  } else {
    for (int e : l.incident(v)) {
      const auto& lab = l.labels()[e];
      std::vector<int> p(n, 0);
      p[lab.a] = 1;
      if (lab.is_difference()) p[lab.b] = 1;
      pts.push_back(p);
    }
  }
  if (pts.size() != 2)
    throw InputError("vertex " + std::to_string(v) +
                     " does not define a line");
  return {pts[0], pts[1]};
}

Labeling relabel_involution(const Labeling& l, int v) {
  if (!l.is_trivalent_vertex(v))
    throw InputError("relabel involution needs a trivalent vertex");
  Labeling out = l;
  int diff_edge = -1, single_j_edge = -1;
  EdgeLabel diff;
  for (int e : l.incident(v)) {
    if (l.labels()[e].is_difference()) {
      diff_edge = e;
      diff = l.labels()[e];
    }
  }
  for (int e : l.incident(v))
    if (l.labels()[e] == EdgeLabel{diff.a, -1}) single_j_edge = e;
  if (diff_edge < 0 || single_j_edge < 0)
    throw InputError("trivalent vertex lacks the expected label triple");
  std::swap(out.labels_[diff_edge], out.labels_[single_j_edge]);
  out.finalize(true);
  return out;
}

}  // namespace graphcurve
