// graphcurve: embed graph curves, generate their ideals as products of
// linear forms, compute Betti diagrams and secant varieties, and survey
// conjecture data over graph families.
//
// Exit codes: 0 success, 1 computation failure (guardrails, golden
// mismatch), 2 invalid input, 3 certificate FAIL.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcurve/idealgen.hpp"
#include "graphcurve/resolution.hpp"
#include "graphcurve/secant.hpp"
#include "graphcurve/textio.hpp"

using namespace graphcurve;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitCompute = 1;
constexpr int kExitInput = 2;
constexpr int kExitCertificate = 3;

struct Options {
  std::string graph_path;
  std::string labeling_path;
  std::string golden_path;
  bool allow_violations = false;
  std::uint32_t field = kDefaultPrime;
  std::string order = "grevlex";
  int k = 1;
  int jobs = 1;
  std::string format = "text";
  bool oracle = false;
  bool all_products = false;
  bool no_certificate = false;
  bool no_betti = false;
  bool timings = false;
  // survey family
  std::string family = "random_valid";
  int d = 10;
  int g = 1;
  int count = 1;
  int subdivisions = 1;
  std::uint64_t seed = 1;
};

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Guard env_guard() {
  Guard g;
  if (const char* s = std::getenv("GRAPHCURVE_MAX_BASIS"))
    g.max_basis = std::strtoull(s, nullptr, 10);
  return g;
}

int env_max_levels() {
  if (const char* s = std::getenv("GRAPHCURVE_MAX_DEGREE")) return std::atoi(s);
  return 0;  // derived from the ring
}

void emit_error(const std::string& kind, const std::string& what) {
  ordered_json j;
  j["error"] = kind;
  j["message"] = what;
  std::cerr << j.dump() << "\n";
}

ordered_json validation_to_json(const ValidationReport& r) {
  ordered_json j;
  j["connected"] = r.connected;
  j["simple"] = r.simple;
  j["strictly_subtrivalent"] = r.strictly_subtrivalent;
  j["trivalent_separation_ok"] = r.trivalent_separation_ok;
  j["triangle_free"] = r.triangle_free;
  j["pass"] = r.all_pass();
  j["violations"] = r.violations;
  return j;
}

ordered_json invariants_to_json(const GraphInvariants& inv) {
  ordered_json j;
  j["genus"] = inv.genus;
  if (inv.girth)
    j["girth"] = *inv.girth;
  else
    j["girth"] = nullptr;
  j["girth_cycle_count"] = inv.girth_cycle_count;
  if (inv.trivalent_separation)
    j["trivalent_separation"] = *inv.trivalent_separation;
  else
    j["trivalent_separation"] = nullptr;
  j["degree_histogram"] = inv.degree_histogram;
  return j;
}

Labeling load_labeling(const Options& opt, const Graph& g) {
  if (!opt.labeling_path.empty())
    return ingest_labeling(g, slurp_file(opt.labeling_path),
                           opt.allow_violations);
  return label_edges(g, opt.allow_violations);
}

// Curve ideal: combinatorial generators when the assumptions hold (they
// are certified equal to the oracle elsewhere), the line-ideal
// intersection otherwise or on request.
template <class K>
Ideal<K> curve_ideal(const Labeling& l, const Ring<K>& ring, bool force_oracle,
                     const Guard& guard) {
  if (force_oracle || !l.assumptions_pass())
    return intersection_ideal(l, ring, guard);
  std::vector<Polynomial<K>> gens;
  for (auto& q : combinatorial_generators(l, ring))
    gens.push_back(product_to_poly(ring, q));
  return Ideal<K>(ring, std::move(gens));
}

ordered_json certificate_to_json(const Certificate& c) {
  ordered_json arr = ordered_json::array();
  auto one = [&](const char* name, bool pass) {
    ordered_json j;
    j["check"] = name;
    j["status"] = pass ? "PASS" : "FAIL";
    arr.push_back(j);
  };
  one("degree2", c.degree2);
  one("membership", c.membership);
  one("generation", c.generation);
  ordered_json j;
  j["checks"] = arr;
  j["status"] = c.pass() ? "PASS" : "FAIL";
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

int run_validate(const Options& opt) {
  auto g = parse_graph(slurp_file(opt.graph_path));
  auto r = validate_assumptions(g);
  ordered_json j = validation_to_json(r);
  if (g.connected()) j["invariants"] = invariants_to_json(invariants(g));
  std::cout << j.dump(2) << "\n";
  return r.all_pass() ? 0 : kExitInput;
}

int run_embed(const Options& opt) {
  auto g = parse_graph(slurp_file(opt.graph_path));
  auto l = load_labeling(opt, g);
  if (opt.format == "json") {
    ordered_json j = ordered_json::parse(l.to_json());
    j["ambient_dim"] = l.ambient_dim();
    ordered_json li = ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
      ordered_json forms = ordered_json::array();
      for (auto& f : line_ideal(l, v)) forms.push_back(f.to_string());
      li.push_back(forms);
    }
    j["line_ideals"] = li;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# ambient P^" << l.ambient_dim() << "\n";
    for (std::size_t e = 0; e < l.aug_edges().size(); ++e) {
      auto& ed = l.aug_edges()[e];
      if (ed.is_loop())
        std::cout << "loop " << ed.u;
      else
        std::cout << "edge " << ed.u << "-" << ed.v;
      std::cout << ": " << l.labels()[e].to_string() << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::cout << "line " << v << ": ";
      bool first = true;
      for (auto& f : line_ideal(l, v)) {
        if (!first) std::cout << ", ";
        std::cout << f.to_string();
        first = false;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

template <class K>
int run_ideal(const Options& opt, const K& field) {
  auto g = parse_graph(slurp_file(opt.graph_path));
  auto l = load_labeling(opt, g);
  auto ring = labeling_ring(l, field);
  Guard guard = env_guard();

  auto gens = combinatorial_generators(l, ring);
  std::vector<Polynomial<K>> gen_polys;
  for (auto& q : gens) gen_polys.push_back(product_to_poly(ring, q));

  int status = 0;
  ordered_json out;
  out["ambient_dim"] = l.ambient_dim();
  out["generators"] = ordered_json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ordered_json item;
    item["product"] = gens[i].to_string();
    item["clause"] = gens[i].clause;
    item["polynomial"] = to_string(gen_polys[i]);
    out["generators"].push_back(item);
  }
  if (opt.all_products) {
    out["all_products"] = ordered_json::array();
    for (auto& q : combinatorial_products_all(l))
      out["all_products"].push_back(q.to_string());
  }
  if (opt.oracle) {
    auto oracle = intersection_ideal(l, ring, guard);
    std::vector<Polynomial<K>> basis = oracle.groebner(guard);
    if (opt.order == "elim") {
      // re-express the oracle basis in the block order that eliminates the
      // last variable, for elimination-style audits
      Ring<K> elim{ring.nvars, Order::kElimLast, field};
      std::vector<Polynomial<K>> lifted;
      for (auto& p : basis) {
        std::vector<Term<K>> ts(p.terms().begin(), p.terms().end());
        lifted.emplace_back(elim, std::move(ts));
      }
      basis = buchberger(lifted, guard);
    }
    out["oracle_basis"] = ordered_json::array();
    for (auto& p : basis) out["oracle_basis"].push_back(to_string(p));
  }
  if (!opt.no_certificate) {
    auto cert = certify_theorem_1_5(l, ring, guard);
    out["certificate"] = certificate_to_json(cert);
    if (!cert.pass()) status = kExitCertificate;
  }
  if (!opt.golden_path.empty()) {
    auto expected = parse_ideal_file(ring, slurp_file(opt.golden_path));
    auto diff = generator_set_diff(gen_polys, expected);
    out["golden"] = diff.empty() ? "match" : "mismatch";
    if (!diff.empty()) {
      out["golden_diff"] = diff;
      status = std::max(status, kExitCompute);
    }
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ideal_to_text(gen_polys, "combinatorial generators");
    if (out.contains("oracle_basis")) {
      std::cout << "# oracle reduced basis\n";
      for (auto& s : out["oracle_basis"])
        std::cout << s.get<std::string>() << "\n";
    }
    if (out.contains("certificate"))
      std::cout << "certificate: "
                << out["certificate"]["status"].get<std::string>() << "\n";
    if (out.contains("golden"))
      std::cout << "golden: " << out["golden"].get<std::string>() << "\n";
  }
  return status;
}

template <class K>
int run_betti(const Options& opt, const K& field) {
  auto g = parse_graph(slurp_file(opt.graph_path));
  auto l = load_labeling(opt, g);
  auto ring = labeling_ring(l, field);
  Guard guard = env_guard();
  auto I = curve_ideal(l, ring, opt.oracle, guard);
  auto res = minimal_free_resolution(I, guard, env_max_levels());
  int status = res.betti.complete ? 0 : kExitCompute;

  ordered_json out;
  if (res.betti.complete) {
    auto s = summarize(res.betti, ring.nvars, res.hilbert.scheme_dim());
    out = betti_to_json(res.betti, s);
    out["euler_ok"] = res.euler_ok;
    if (!res.euler_ok) status = kExitCompute;
  } else {
    out["status"] = res.betti.status;
  }
  if (!opt.golden_path.empty() && res.betti.complete) {
    auto expected =
        betti_from_json(nlohmann::json::parse(slurp_file(opt.golden_path)));
    auto diff = betti_diff(res.betti, expected);
    out["golden"] = diff.empty() ? "match" : "mismatch";
    if (!diff.empty()) {
      out["golden_diff"] = diff;
      status = std::max(status, kExitCompute);
    }
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << betti_to_text(res.betti);
    if (res.betti.complete) {
      auto s = summarize(res.betti, ring.nvars, res.hilbert.scheme_dim());
      std::cout << "regularity(S/I) = " << s.regularity
                << ", pd = " << s.projective_dimension
                << ", codim = " << s.codimension
                << (s.acm ? ", ACM" : ", not ACM") << "\n";
    }
    if (out.contains("golden"))
      std::cout << "golden: " << out["golden"].get<std::string>() << "\n";
  }
  return status;
}

template <class K>
int run_secant(const Options& opt, const K& field) {
  auto g = parse_graph(slurp_file(opt.graph_path));
  auto l = load_labeling(opt, g);
  auto ring = labeling_ring(l, field);
  Guard guard = env_guard();
  auto sec = secant_ideal(l, opt.k, ring, guard);
  int status = 0;

  ordered_json out;
  out["k"] = sec.k;
  out["status"] = sec.status;
  out["components"] = ordered_json::array();
  for (auto& c : sec.components) {
    ordered_json item;
    item["vertices"] = c.vertices;
    item["span_dim"] = c.proj_dim;
    out["components"].push_back(item);
  }
  std::vector<std::string> basis_text;
  for (auto& p : sec.ideal.groebner(guard)) basis_text.push_back(to_string(p));
  out["ideal"] = basis_text;
  if (!sec.fills_ambient) {
    auto h = hilbert_summary(sec.ideal, guard);
    out["dimension"] = h.scheme_dim();
    out["degree"] = h.degree;
    if (opt.k == 1)
      out["degree_predicted"] =
          secant_degree_prediction(g.vertex_count(), invariants(g).genus);
  }
  if (!opt.no_betti && !sec.fills_ambient) {
    auto res = minimal_free_resolution(sec.ideal, guard, env_max_levels());
    if (res.betti.complete) {
      auto s = summarize(res.betti, ring.nvars, res.hilbert.scheme_dim());
      out["betti"] = betti_to_json(res.betti, s);
      out["betti_text"] = betti_to_text(res.betti);
    } else {
      out["betti"] = nullptr;
      out["betti_status"] = res.betti.status;
      status = kExitCompute;
    }
  }
  if (!opt.golden_path.empty()) {
    auto expected = parse_ideal_file(ring, slurp_file(opt.golden_path));
    Ideal<K> golden(ring, expected);
    auto diff =
        generator_set_diff(sec.ideal.groebner(guard), golden.groebner(guard));
    out["golden"] = diff.empty() ? "match" : "mismatch";
    if (!diff.empty()) {
      out["golden_diff"] = diff;
      status = std::max(status, kExitCompute);
    }
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# secant level " << sec.k << ": " << sec.status << "\n";
    for (auto& c : out["components"])
      std::cout << "component " << c["vertices"].dump() << " span_dim "
                << c["span_dim"] << "\n";
    for (auto& s : basis_text) std::cout << s << "\n";
    if (out.contains("betti_text"))
      std::cout << out["betti_text"].get<std::string>();
    if (out.contains("golden"))
      std::cout << "golden: " << out["golden"].get<std::string>() << "\n";
  }
  return status;
}

// One survey row: the full pipeline on one graph, with guardrails applied
// per stage and observations recorded only for completed computations.
template <class K>
ordered_json survey_record(const Graph& g, const Options& opt, const K& field,
                           const Guard& guard) {
  using clock = std::chrono::steady_clock;
  ordered_json rec;
  char hashbuf[32];
  std::snprintf(hashbuf, sizeof hashbuf, "%016llx",
                static_cast<unsigned long long>(g.hash()));
  rec["graph_hash"] = hashbuf;
  rec["field"] = field.characteristic();
  rec["graph"] = ordered_json::parse(graph_to_json(g));
  auto inv = invariants(g);
  rec["invariants"] = invariants_to_json(inv);
  rec["validation"] = validation_to_json(validate_assumptions(g));

  auto l = label_edges(g, opt.allow_violations);
  rec["labeling"] = ordered_json::parse(l.to_json())["labels"];
  auto ring = labeling_ring(l, field);

  ordered_json timings;
  auto timed = [&](const char* name, auto&& fn) {
    auto t0 = clock::now();
    fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  clock::now() - t0)
                  .count();
    if (opt.timings) timings[name] = ms;
  };

  timed("certificate", [&] {
    auto cert = certify_theorem_1_5(l, ring, guard);
    rec["certificate"] = certificate_to_json(cert);
  });

  // predictions are always present; observations only when computed
  ordered_json pred;
  auto gp = girth_predictions(g);
  if (gp) {
    pred["curve_n2_fails_at"] = gp->curve_n2_fail_stage;
    if (gp->secant_n3_fail_stage)
      pred["secant_n3_fails_at"] = *gp->secant_n3_fail_stage;
    if (gp->conj_beta_applicable) {
      pred["beta_cell"] = {gp->girth - 2, gp->girth};
      pred["beta_predicted"] = gp->predicted_beta;
    }
  }
  rec["predictions"] = pred;

  ordered_json curve;
  BettiDiagram curve_betti;
  bool curve_ok = false;
  timed("curve_betti", [&] {
    try {
      auto I = curve_ideal(l, ring, false, guard);
      auto res = minimal_free_resolution(I, guard, env_max_levels());
      curve["complete"] = res.betti.complete;
      if (res.betti.complete) {
        auto s = summarize(res.betti, ring.nvars, res.hilbert.scheme_dim());
        curve["betti"] = betti_to_json(res.betti, s);
        curve["euler_ok"] = res.euler_ok;
        curve_betti = res.betti;
        curve_ok = true;
      } else {
        curve["status"] = res.betti.status;
      }
    } catch (const GuardrailError& e) {
      curve["complete"] = false;
      curve["status"] = e.what();
    }
  });
  rec["curve"] = curve;

  ordered_json secant;
  BettiDiagram secant_betti;
  bool secant_ok = false;
  int secant_dim = -1;
  timed("secant", [&] {
    try {
      auto sec = secant_ideal(l, 1, ring, guard);
      secant["status"] = sec.status;
      if (!sec.fills_ambient) {
        auto h = hilbert_summary(sec.ideal, guard);
        secant["dimension"] = h.scheme_dim();
        secant["degree"] = h.degree;
        secant["degree_predicted"] =
            secant_degree_prediction(g.vertex_count(), inv.genus);
        secant_dim = h.scheme_dim();
        auto res = minimal_free_resolution(sec.ideal, guard, env_max_levels());
        secant["complete"] = res.betti.complete;
        if (res.betti.complete) {
          auto s = summarize(res.betti, ring.nvars, res.hilbert.scheme_dim());
          secant["betti"] = betti_to_json(res.betti, s);
          secant_betti = res.betti;
          secant_ok = true;
        }
      }
    } catch (const GuardrailError& e) {
      secant["complete"] = false;
      secant["status"] = e.what();
    }
  });
  rec["secant"] = secant;

  ordered_json obs;
  if (gp && curve_ok) {
    obs["curve_n2_fails_as_predicted"] =
        !check_Nkp(curve_betti, 2, gp->curve_n2_fail_stage);
    if (gp->conj_beta_applicable)
      obs["beta_observed"] = curve_betti.get(gp->girth - 2, gp->girth);
  }
  if (gp && gp->secant_n3_fail_stage && secant_ok)
    obs["secant_n3_fails_as_predicted"] =
        !check_Nkp(secant_betti, 3, *gp->secant_n3_fail_stage);
  if (secant_ok) {
    // the secant regularity conjecture under the three conventions
    ordered_json conj52;
    conj52["expected_2k_plus_1"] = 3;
    conj52["reg_coordinate_ring"] = secant_betti.regularity();
    conj52["reg_ideal"] = secant_betti.regularity() + 1;
    conj52["reg_sheaf_if_saturated"] = secant_betti.regularity() + 1;
    conj52["acm"] = summarize(secant_betti, ring.nvars, secant_dim).acm;
    obs["secant_regularity"] = conj52;
  }
  rec["observations"] = obs;
  if (opt.timings) rec["timings"] = timings;
  return rec;
}

std::vector<Graph> survey_family(const Options& opt) {
  std::vector<Graph> graphs;
  if (opt.family == "cycle") {
    graphs.push_back(make_cycle(opt.d));
  } else if (opt.family == "path") {
    graphs.push_back(make_path(opt.d));
  } else if (opt.family == "subdivided_K4") {
    graphs.push_back(make_subdivided_k4(opt.subdivisions));
  } else if (opt.family == "random_valid") {
    for (int i = 0; i < opt.count; ++i)
      graphs.push_back(
          make_random_valid(opt.d, opt.g, opt.seed + static_cast<std::uint64_t>(i)));
  } else {
    throw InputError("unknown family: " + opt.family);
  }
  return graphs;
}

template <class K>
int run_survey(const Options& opt, const K& field) {
  auto graphs = survey_family(opt);
  Guard guard = env_guard();
  std::vector<ordered_json> results(graphs.size());
  std::vector<std::string> errors(graphs.size());
  std::atomic<std::size_t> next{0};
  int jobs = std::max(1, opt.jobs);
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) break;
      try {
        results[i] = survey_record(graphs[i], opt, field, guard);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int status = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!errors[i].empty()) {
      emit_error("survey_record", errors[i]);
      status = kExitCompute;
      continue;
    }
    std::cout << results[i].dump() << "\n";
    if (results[i].contains("certificate") &&
        results[i]["certificate"]["status"] != "PASS")
      status = std::max(status, kExitCertificate);
  }
  return status;
}

template <class K>
int dispatch(const std::string& cmd, const Options& opt, const K& field) {
  if (cmd == "ideal") return run_ideal(opt, field);
  if (cmd == "betti") return run_betti(opt, field);
  if (cmd == "secant") return run_secant(opt, field);
  if (cmd == "survey") return run_survey(opt, field);
  throw InputError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "graph curves in projective space: embeddings, ideals generated by "
      "products of linear forms, Betti diagrams, secant varieties"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_graph = true) {
    if (needs_graph)
      sub->add_option("--graph", opt.graph_path, "graph JSON file")
          ->required();
    sub->add_option("--labeling", opt.labeling_path,
                    "labeling JSON (auto-label otherwise)");
    sub->add_flag("--allow-violations", opt.allow_violations,
                  "proceed when the embedding assumptions fail");
    sub->add_option("--field", opt.field,
                    "prime field characteristic (0 = exact rationals)");
    sub->add_option("--order", opt.order,
                    "monomial order for printed oracle bases")
        ->check(CLI::IsMember({"grevlex", "elim"}));
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--golden", opt.golden_path, "golden file to diff");
  };

  auto* validate = app.add_subcommand("validate", "check the assumptions");
  validate->add_option("--graph", opt.graph_path, "graph JSON file")
      ->required();

  auto* embed = app.add_subcommand("embed", "labeling and line ideals");
  add_common(embed);

  auto* ideal = app.add_subcommand("ideal", "curve ideal generators");
  add_common(ideal);
  ideal->add_flag("--oracle", opt.oracle,
                  "also compute the line-ideal intersection oracle");
  ideal->add_flag("--all-products", opt.all_products,
                  "include the full filtered product list");
  ideal->add_flag("--no-certificate", opt.no_certificate,
                  "skip the generation certificate");

  auto* betti = app.add_subcommand("betti", "curve Betti diagram");
  add_common(betti);
  betti->add_flag("--oracle", opt.oracle,
                  "resolve the intersection oracle ideal");

  auto* secant = app.add_subcommand("secant", "secant variety ideal");
  add_common(secant);
  secant->add_option("--k", opt.k, "secant level (default 1)");
  secant->add_flag("--no-betti", opt.no_betti, "skip the resolution");

  auto* survey = app.add_subcommand("survey", "conjecture survey stream");
  add_common(survey, false);
  survey->add_option("--family", opt.family,
                     "cycle | path | subdivided_K4 | random_valid");
  survey->add_option("--d", opt.d, "vertex count");
  survey->add_option("--g", opt.g, "genus (random_valid)");
  survey->add_option("--count", opt.count, "number of graphs (random_valid)");
  survey->add_option("--seed", opt.seed, "random seed");
  survey->add_option("--s", opt.subdivisions, "subdivisions (subdivided_K4)");
  survey->add_option("--jobs", opt.jobs, "parallel jobs");
  survey->add_flag("--timings", opt.timings,
                   "include timings (breaks byte-for-byte determinism)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "validate") return run_validate(opt);
    if (cmd == "embed") return run_embed(opt);
    if (opt.field == 0) return dispatch(cmd, opt, QQ{});
    return dispatch(cmd, opt, GF(opt.field));
  } catch (const InputError& e) {
    emit_error("input", e.what());
    return kExitInput;
  } catch (const GuardrailError& e) {
    emit_error("guardrail", e.what());
    return kExitCompute;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kExitCompute;
  }
}
