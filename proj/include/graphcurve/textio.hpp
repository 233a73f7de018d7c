// Text and JSON renderings: Betti diagrams in the standard total/rows
// layout, ideal files (newline-separated polynomials, '#' comments), and
// set-modulo-scalars comparison for golden files.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcurve/polynomial.hpp"
#include "graphcurve/resolution.hpp"

namespace graphcurve {

// Rows indexed by j - i starting at 0, columns by homological degree, "."
// for zero entries, with a leading "total:" row.
inline std::string betti_to_text(const BettiDiagram& b) {
  int pd = b.projective_dimension();
  int reg = b.regularity();
  std::vector<std::string> rowlabels;
  rowlabels.push_back("");
  rowlabels.push_back("total:");
  for (int r = 0; r <= reg; ++r) rowlabels.push_back(std::to_string(r) + ":");
  std::vector<std::vector<std::string>> cells(rowlabels.size());
  for (int i = 0; i <= pd; ++i) {
    cells[0].push_back(std::to_string(i));
    long long tot = b.total(i);
    cells[1].push_back(tot ? std::to_string(tot) : ".");
    for (int r = 0; r <= reg; ++r) {
      long long v = b.get(i, i + r);
      cells[2 + r].push_back(v ? std::to_string(v) : ".");
    }
  }
  std::size_t label_w = 0;
  for (auto& s : rowlabels) label_w = std::max(label_w, s.size());
  std::vector<std::size_t> col_w(pd + 1, 1);
  for (auto& row : cells)
    for (int i = 0; i <= pd; ++i)
      col_w[i] = std::max(col_w[i], row[i].size());
  std::ostringstream out;
  for (std::size_t r = 0; r < rowlabels.size(); ++r) {
    out << std::string(label_w - rowlabels[r].size(), ' ') << rowlabels[r];
    for (int i = 0; i <= pd; ++i) {
      out << ' ' << std::string(col_w[i] - cells[r][i].size(), ' ')
          << cells[r][i];
    }
    out << '\n';
  }
  if (!b.complete) out << "(incomplete: " << b.status << ")\n";
  return out.str();
}

inline nlohmann::ordered_json betti_to_json(const BettiDiagram& b,
                                            const HomologicalSummary& s) {
  nlohmann::ordered_json j;
  j["betti"] = nlohmann::ordered_json::array();
  for (auto& [ij, v] : b.beta)
    if (v) j["betti"].push_back({ij.first, ij.second, v});
  j["regularity"] = s.regularity;
  j["pd"] = s.projective_dimension;
  j["acm"] = s.acm;
  return j;
}

// Parses a diagram back from the JSON form (used for goldens).
inline BettiDiagram betti_from_json(const nlohmann::json& j) {
  BettiDiagram b;
  for (auto& cell : j.at("betti"))
    b.beta[{cell.at(0).get<int>(), cell.at(1).get<int>()}] =
        cell.at(2).get<long long>();
  return b;
}

// ---------------------------------------------------------------------------
// Ideal files

template <class K>
std::vector<Polynomial<K>> parse_ideal_file(const Ring<K>& ring,
                                            const std::string& text) {
  std::vector<Polynomial<K>> polys;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t z = line.find_last_not_of(" \t\r");
    polys.push_back(parse_polynomial(ring, line.substr(a, z - a + 1)));
  }
  return polys;
}

template <class K>
std::string ideal_to_text(const std::vector<Polynomial<K>>& polys,
                          const std::string& header = "") {
  std::string s;
  if (!header.empty()) s += "# " + header + "\n";
  for (auto& p : polys) s += to_string(p) + "\n";
  return s;
}

// Set equality modulo nonzero scalars. Returns an empty list on match,
// otherwise human-readable differences.
template <class K>
std::vector<std::string> generator_set_diff(
    const std::vector<Polynomial<K>>& actual,
    const std::vector<Polynomial<K>>& expected) {
  auto normalize = [](std::vector<Polynomial<K>> v) {
    for (auto& p : v) p = p.monic();
    std::sort(v.begin(), v.end(), Polynomial<K>::poly_less);
    return v;
  };
  auto a = normalize(actual);
  auto e = normalize(expected);
  std::vector<std::string> diff;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < e.size()) {
    if (i < a.size() && j < e.size() && a[i] == e[j]) {
      ++i;
      ++j;
    } else if (j == e.size() ||
               (i < a.size() && Polynomial<K>::poly_less(a[i], e[j]))) {
      diff.push_back("unexpected generator: " + to_string(a[i]));
      ++i;
    } else {
      diff.push_back("missing generator: " + to_string(e[j]));
      ++j;
    }
  }
  return diff;
}

// Cell-level Betti diff for golden comparisons.
inline std::vector<std::string> betti_diff(const BettiDiagram& actual,
                                           const BettiDiagram& expected) {
  std::vector<std::string> diff;
  auto keys = actual.beta;
  for (auto& [ij, v] : expected.beta) keys[ij] += 0;
  for (auto& [ij, unused] : keys) {
    long long a = actual.get(ij.first, ij.second);
    long long e = expected.get(ij.first, ij.second);
    if (a != e)
      diff.push_back("beta(" + std::to_string(ij.first) + "," +
                     std::to_string(ij.second) + ") = " + std::to_string(a) +
                     ", expected " + std::to_string(e));
  }
  return diff;
}

}  // namespace graphcurve
