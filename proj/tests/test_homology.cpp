#include <doctest.h>

#include <fstream>
#include <sstream>

#include "graphcurve/idealgen.hpp"
#include "graphcurve/resolution.hpp"
#include "graphcurve/textio.hpp"

using namespace graphcurve;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GC_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph ex44() { return parse_graph(slurp("ex44.json")); }
Labeling fig5() { return ingest_labeling(ex44(), slurp("fig5_labels.json")); }

const GF kF(kDefaultPrime);

Ideal<GF> curve_ideal(const Labeling& l) {
  auto r = labeling_ring(l, kF);
  std::vector<Polynomial<GF>> gens;
  for (auto& q : combinatorial_generators(l, r))
    gens.push_back(product_to_poly(r, q));
  return Ideal<GF>(r, std::move(gens));
}

// Independent route to the minimal Betti numbers: homology of the
// non-minimal complex tensored with the residue field, i.e. ranks of the
// constant strands. Exercises none of the unit-cancellation code.
BettiDiagram betti_by_tor_ranks(const Resolution<GF>& res) {
  const auto& ring = res.ring;
  const auto& F = ring.field;
  int levels = static_cast<int>(res.gens.size());
  std::map<std::pair<int, int>, long long> count;  // (level, shift) -> gens
  count[{0, 0}] = 1;
  for (int L = 1; L < levels; ++L)
    for (int s : res.orders[L].shift) count[{L, s}] += 1;

  // rank of the degree-d constant block of d_L
  auto block_rank = [&](int L, int d) -> int {
    if (L < 1 || L >= levels) return 0;
    std::vector<int> cols, rows;
    std::vector<int> sh_to =
        (L == 1) ? std::vector<int>{0} : res.orders[L - 1].shift;
    for (std::size_t c = 0; c < res.gens[L].size(); ++c)
      if (res.orders[L].shift[c] == d) cols.push_back(static_cast<int>(c));
    for (std::size_t r = 0; r < sh_to.size(); ++r)
      if (sh_to[r] == d) rows.push_back(static_cast<int>(r));
    if (cols.empty() || rows.empty()) return 0;
    Mat<GF> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), F);
    for (std::size_t cj = 0; cj < cols.size(); ++cj)
      for (auto& t : res.gens[L][cols[cj]].terms) {
        if (!t.mm.m.is_one()) continue;
        for (std::size_t ri = 0; ri < rows.size(); ++ri)
          if (rows[ri] == t.mm.comp)
            m.at(static_cast<int>(ri), static_cast<int>(cj)) = t.c;
      }
    return rank(m);
  };

  BettiDiagram b;
  for (auto& [key, v] : count) {
    long long minimal = v - block_rank(key.first, key.second) -
                        block_rank(key.first + 1, key.second);
    if (minimal < 0) throw std::logic_error("negative Betti rank");
    if (minimal) b.beta[{key.first, key.second}] = minimal;
  }
  return b;
}

}  // namespace

TEST_CASE("hypersurface: 0 -> S(-2) -> S -> S/I -> 0") {
  Ring<GF> r{3, Order::kGrevlex, kF};
  Ideal<GF> I(r, {parse_polynomial(r, "x0*x1")});
  auto res = minimal_free_resolution(I);
  CHECK(res.betti.get(0, 0) == 1);
  CHECK(res.betti.get(1, 2) == 1);
  CHECK(res.betti.beta.size() == 2);
  CHECK(res.euler_ok);
  auto s = summarize(res.betti, 3, res.hilbert.scheme_dim());
  CHECK(s.regularity == 1);
  CHECK(s.projective_dimension == 1);
  CHECK(s.codimension == 1);
  CHECK(s.acm);
  CHECK(check_Nkp(res.betti, 2, 1));
}

TEST_CASE("zero ideal resolves to the ring itself") {
  Ring<GF> r{3, Order::kGrevlex, kF};
  Ideal<GF> I(r);
  auto res = minimal_free_resolution(I);
  CHECK(res.betti.beta.size() == 1);
  CHECK(res.betti.get(0, 0) == 1);
}

TEST_CASE("koszul complex of two variables") {
  Ring<GF> r{3, Order::kGrevlex, kF};
  Ideal<GF> I(r, {poly_var(r, 0), poly_var(r, 1)});
  auto res = minimal_free_resolution(I);
  CHECK(res.betti.get(1, 1) == 2);
  CHECK(res.betti.get(2, 2) == 1);
  CHECK(res.euler_ok);
}

TEST_CASE("five-cycle curve: girth prediction N_{2,3} fails") {
  auto l = label_edges(make_cycle(5));
  auto res = minimal_free_resolution(curve_ideal(l));
  CHECK(res.euler_ok);
  CHECK(check_Nkp(res.betti, 2, 2));
  CHECK_FALSE(check_Nkp(res.betti, 2, 3));
  CHECK(res.betti.get(3, 5) != 0);  // the girth-cycle Betti number
  CHECK(res.betti.get(3, 5) == 1);  // one 5-cycle
  auto s = summarize(res.betti, 5, res.hilbert.scheme_dim());
  CHECK(s.acm);
  CHECK(s.regularity == 2);
}

TEST_CASE("tree curves are 2-regular and ACM") {
  for (int d : {2, 4, 6}) {
    auto l = label_edges(make_path(d));
    auto res = minimal_free_resolution(curve_ideal(l));
    CHECK(res.euler_ok);
    auto s = summarize(res.betti, l.num_indices(), res.hilbert.scheme_dim());
    CHECK(s.regularity == 1);
    CHECK(s.acm);
  }
}

TEST_CASE("example curve Betti diagram matches the printed table") {
  auto l = fig5();
  auto res = minimal_free_resolution(curve_ideal(l));
  REQUIRE(res.betti.complete);
  CHECK(res.euler_ok);
  auto expected =
      betti_from_json(nlohmann::json::parse(slurp("ex44_curve_betti.json")));
  auto diff = betti_diff(res.betti, expected);
  for (auto& d : diff) MESSAGE(d);
  CHECK(diff.empty());
  // totals row: 1, 26, 98, 168, 154, 72, 15, 2
  const long long totals[] = {1, 26, 98, 168, 154, 72, 15, 2};
  for (int i = 0; i <= 7; ++i) CHECK(res.betti.total(i) == totals[i]);
  auto s = summarize(res.betti, 9, res.hilbert.scheme_dim());
  CHECK(s.regularity == 2);
  CHECK(s.ideal_regularity == 3);  // the curve ideal is 3-regular
  CHECK(s.projective_dimension == 7);
  CHECK(s.codimension == 7);
  CHECK(s.acm);
  // N_{2,4} holds, N_{2,5} fails (beta_{5,7} = 2)
  CHECK(check_Nkp(res.betti, 2, 4));
  CHECK_FALSE(check_Nkp(res.betti, 2, 5));
  CHECK(res.betti.get(5, 7) == 2);
}

TEST_CASE("tor-rank oracle agrees with unit cancellation") {
  std::vector<Ideal<GF>> fixtures;
  {
    auto l = label_edges(make_cycle(6));
    fixtures.push_back(curve_ideal(l));
  }
  {
    auto l = label_edges(make_path(5));
    fixtures.push_back(curve_ideal(l));
  }
  {
    auto l = fig5();
    fixtures.push_back(curve_ideal(l));
  }
  for (auto& I : fixtures) {
    auto raw = schreyer_resolution(I);
    REQUIRE(raw.complete);
    auto viaTor = betti_by_tor_ranks(raw);
    auto viaCancel = minimalize(raw, Guard{}).betti();
    CHECK(viaTor.beta == viaCancel.beta);
  }
}

TEST_CASE("minimal complex has no unit entries and squares to zero") {
  auto l = label_edges(make_cycle(6));
  auto I = curve_ideal(l);
  auto res = minimal_free_resolution(I);
  const auto& C = res.complex;
  for (std::size_t L = 1; L < C.diff.size(); ++L)
    for (auto& col : C.diff[L])
      for (auto& [row, p] : col) {
        CHECK(!p.is_zero());
        CHECK_FALSE(p.lm().is_one());
      }
  // d_{L} o d_{L+1} = 0
  for (std::size_t L = 1; L + 1 < C.diff.size(); ++L) {
    for (auto& col : C.diff[L + 1]) {
      std::map<int, Polynomial<GF>> image;
      for (auto& [mid, p] : col)
        for (auto& [row, q] : C.diff[L][mid]) {
          auto it = image.try_emplace(row, Polynomial<GF>(I.ring())).first;
          it->second = it->second + p * q;
        }
      for (auto& [row, val] : image) CHECK(val.is_zero());
    }
  }
}

TEST_CASE("resolution ranks do not depend on the labeling") {
  auto l = fig5();
  auto auto_l = label_edges(ex44());
  auto b1 = minimal_free_resolution(curve_ideal(l)).betti;
  auto b2 = minimal_free_resolution(curve_ideal(auto_l)).betti;
  CHECK(b1.beta == b2.beta);
  auto swapped = relabel_involution(l, 3);
  auto b3 = minimal_free_resolution(curve_ideal(swapped)).betti;
  CHECK(b1.beta == b3.beta);
}

TEST_CASE("homological guardrails mark diagrams incomplete") {
  auto l = label_edges(make_cycle(6));
  auto I = curve_ideal(l);
  Guard tight;
  tight.max_basis = 10;
  auto res = schreyer_resolution(I, tight);
  CHECK_FALSE(res.complete);
  auto betti = minimalize(res, Guard{}).betti();
  CHECK_FALSE(betti.complete);
  CHECK_THROWS_AS(summarize(betti, 6, 1), GuardrailError);
  CHECK_THROWS_AS(check_Nkp(betti, 2, 2), GuardrailError);
}

TEST_CASE("betti text layout renders the printed table shape") {
  auto l = fig5();
  auto res = minimal_free_resolution(curve_ideal(l));
  auto text = betti_to_text(res.betti);
  MESSAGE(text);
  CHECK(text.find("total: 1 26 98 168 154 72 15 2") != std::string::npos);
  CHECK(text.find("0: 1  .  .   .   .  .  . .") != std::string::npos);
  CHECK(text.find("2: .  .  .   .   .  2  7 2") != std::string::npos);
}

TEST_CASE("rational coefficients give the same Betti table on a cycle") {
  auto l = label_edges(make_cycle(5));
  Ring<QQ> rq = labeling_ring(l, QQ{});
  std::vector<Polynomial<QQ>> gens;
  for (auto& q : combinatorial_generators(l, rq))
    gens.push_back(product_to_poly(rq, q));
  auto resq = minimal_free_resolution(Ideal<QQ>(rq, gens));
  auto resp = minimal_free_resolution(curve_ideal(l));
  CHECK(resq.betti.beta == resp.betti.beta);
  CHECK(resq.euler_ok);
}

TEST_CASE("cycle curves match Hochster's formula for cycle complexes") {
  // the embedded cycle curve is cut out by the squarefree monomials of
  // non-adjacent pairs, i.e. the Stanley-Reisner ideal of the n-cycle, so
  // beta_{i,j}(S/I) = sum over j-subsets W of dim H~_{j-i-1}(cycle|_W): a
  // proper subset with c >= 2 path components has H~_0 of rank c-1, landing
  // at i = |W|-1; the full vertex set has H~_1 of rank 1, landing at
  // (n-2, n). Exhaustive over subsets, no shared code with the resolution
  // engine.
  for (int n : {5, 6, 7, 8}) {
    std::map<std::pair<int, int>, long long> expected;
    expected[{0, 0}] = 1;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      int w = __builtin_popcount(mask);
      // components of the induced sub-paths of the cycle
      int comps = 0;
      for (int v = 0; v < n; ++v) {
        bool in = mask & (1u << v);
        bool prev = mask & (1u << ((v + n - 1) % n));
        if (in && !prev) ++comps;
      }
      if (comps >= 2) expected[{w - 1, w}] += comps - 1;
    }
    expected[{n - 2, n}] += 1;

    auto l = label_edges(make_cycle(n));
    auto res = minimal_free_resolution(curve_ideal(l));
    REQUIRE(res.betti.complete);
    CHECK(res.betti.beta == expected);
  }
}
