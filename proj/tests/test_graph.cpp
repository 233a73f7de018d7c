#include <doctest.h>

#include <fstream>
#include <sstream>

#include "graphcurve/graph.hpp"

using namespace graphcurve;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GC_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse: smallest connected graph") {
  auto g = parse_graph(R"({"vertices":2,"edges":[[0,1]]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse: normalization and errors") {
  auto g = parse_graph(R"({"vertices":3,"edges":[[2,0],[1,2]]})");
  CHECK(g.edges()[0] == Edge{0, 2});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK_THROWS_AS(parse_graph("{"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":2,"edges":[[0,5]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":2,"edges":[[0,1],[1,0]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":2,"edges":[[1,1]]})"), InputError);
}

TEST_CASE("the ten-vertex example graph") {
  auto g = parse_graph(slurp("ex44.json"));
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 11);
  CHECK(validate_assumptions(g).all_pass());
  auto inv = invariants(g);
  CHECK(inv.genus == 2);
  REQUIRE(inv.girth.has_value());
  CHECK(*inv.girth == 7);
  CHECK(inv.girth_cycle_count == 2);
  CHECK(g.trivalent_vertices() == std::vector<int>{3, 7});
  REQUIRE(inv.trivalent_separation.has_value());
  CHECK(*inv.trivalent_separation == 3);
}

TEST_CASE("triangle fails assumption (5) only") {
  auto g = parse_graph(slurp("triangle.json"));
  auto r = validate_assumptions(g);
  CHECK(r.connected);
  CHECK(r.simple);
  CHECK(r.strictly_subtrivalent);
  CHECK(r.trivalent_separation_ok);
  CHECK_FALSE(r.triangle_free);
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.violations.size() == 1);
}

TEST_CASE("subdivided K4 fails separation with distance 2") {
  auto g = make_subdivided_k4(1);
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 12);
  auto r = validate_assumptions(g);
  CHECK(r.connected);
  CHECK(r.strictly_subtrivalent);
  CHECK(r.triangle_free);
  CHECK_FALSE(r.trivalent_separation_ok);
  auto inv = invariants(g);
  CHECK(inv.genus == 3);
  CHECK(*inv.girth == 6);
  CHECK(inv.girth_cycle_count == 4);
  CHECK(*inv.trivalent_separation == 2);
}

TEST_CASE("cycles are their own unique shortest cycle") {
  auto g = make_cycle(8);
  auto inv = invariants(g);
  CHECK(inv.genus == 1);
  CHECK(*inv.girth == 8);
  CHECK(inv.girth_cycle_count == 1);
  CHECK_FALSE(inv.trivalent_separation.has_value());
}

TEST_CASE("forests have no girth and no girth cycles") {
  auto g = make_path(5);
  auto inv = invariants(g);
  CHECK(inv.genus == 0);
  CHECK_FALSE(inv.girth.has_value());
  CHECK(inv.girth_cycle_count == 0);
  CHECK_FALSE(girth_predictions(g).has_value());
}

TEST_CASE("invariants reject disconnected graphs") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(invariants(g), InputError);
  CHECK_FALSE(validate_assumptions(g).connected);
}

TEST_CASE("genus identity over random sweeps") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    int d = 5 + static_cast<int>(seed % 8);
    int g = static_cast<int>(seed % 2);
    auto gr = make_random_valid(d, g, seed);
    CHECK(gr.vertex_count() == d);
    CHECK(gr.edge_count() - gr.vertex_count() + 1 == g);
    CHECK(validate_assumptions(gr).all_pass());
    auto inv = invariants(gr);
    // Lemma: any graph passing all assumptions with d >= 2 has d >= 2g+2
    CHECK(d >= 2 * inv.genus + 2);
    // a girth cycle exists iff the girth is finite
    CHECK((inv.girth_cycle_count >= 1) == inv.girth.has_value());
  }
}

TEST_CASE("random_valid rejects unsatisfiable parameters") {
  CHECK_THROWS_AS(make_random_valid(5, 2, 1), InputError);
}

TEST_CASE("random_valid finds tight genus-2 graphs") {
  auto g = make_random_valid(8, 2, 42);
  CHECK(validate_assumptions(g).all_pass());
  CHECK(invariants(g).genus == 2);
}

TEST_CASE("validation is pure: permuted edge input gives identical report") {
  auto a = parse_graph(R"({"vertices":4,"edges":[[0,1],[1,2],[2,3]]})");
  auto b = parse_graph(R"({"vertices":4,"edges":[[2,3],[0,1],[2,1]]})");
  CHECK(a.canonical_string() == b.canonical_string());
  CHECK(a.hash() == b.hash());
  auto ra = validate_assumptions(a), rb = validate_assumptions(b);
  CHECK(ra.all_pass() == rb.all_pass());
}

TEST_CASE("girth predictions for the example graph") {
  auto g = parse_graph(slurp("ex44.json"));
  auto p = girth_predictions(g);
  REQUIRE(p.has_value());
  CHECK(p->girth == 7);
  CHECK(p->curve_n2_fail_stage == 5);
  REQUIRE(p->secant_n3_fail_stage.has_value());
  CHECK(*p->secant_n3_fail_stage == 3);
  CHECK(p->conj_beta_applicable);  // d = 2g+1+p with p = 5 = girth-2
  CHECK(p->predicted_beta == 2);
}

TEST_CASE("cycle counting by exhaustive enumeration on K4 subdivision") {
  auto g = make_subdivided_k4(1);
  CHECK(count_cycles_of_length(g, 6) == 4);
  CHECK(count_cycles_of_length(g, 8) == 3);  // the subdivided 4-cycles
  CHECK(count_cycles_of_length(g, 5) == 0);
}

TEST_CASE("family constructors: cycles and the documented random instance") {
  CHECK(invariants(make_cycle(5)).genus == 1);
  auto g = make_random_valid(12, 2, 1);
  CHECK(g.vertex_count() == 12);
  CHECK(invariants(g).genus == 2);
  CHECK(validate_assumptions(g).all_pass());
}
