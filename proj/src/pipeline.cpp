#include "framecover/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "framecover/cff.hpp"
#include "framecover/constructors.hpp"
#include "framecover/errors.hpp"
#include "framecover/hadamard.hpp"
#include "framecover/transforms.hpp"

namespace framecover::pipeline {

long long kneser_covering_formula(int t, int r) {
  const long long num = static_cast<long long>(t - r) * static_cast<long long>(binomial(t - 1, r - 1));
  if (num % r != 0) throw std::logic_error("covering formula is not integral");
  return num / r;
}

BicliqueCover star_cover(const LabeledGraph& g, const std::vector<int>& vertex_cover) {
  BicliqueCover cover{g.family(), 1, {}};
  for (int v : vertex_cover) {
    std::vector<int> nb = g.neighbors(v).positions();
    cover.bicliques.emplace_back(Biclique{{v}, std::move(nb)});
  }
  return cover;
}

namespace {

struct Outcome {
  std::ostringstream detail;
  bool pass = true;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

CheckResult finish(const std::string& name, Outcome& o) { return {name, o.pass, o.detail.str(), 0, 0}; }

CheckResult petersen_sfpc(const Options& opts) {
  Outcome o;
  const LabeledGraph g = kneser_graph(5, 2);
  const ExactBcResult bc = exact_bc(g, 1, opts.budget);
  o.expect(bc.size == 6, "bc(KG(5,2)) = 6");
  o.expect(verify_cover(g, bc.witness).passes(1), "exact witness verifies");
  const BinaryCode code = opts.code_fixture ? *opts.code_fixture : cover_to_code(bc.witness);
  o.expect(code.size() == 5 && code.length() == 6, "code is a (6,5)-code");
  bool sfpc = false;
  try {
    sfpc = is_sfpc(code, 2).pass;
  } catch (const ParameterError&) {
  }
  o.expect(sfpc, "code is a 2-SFPC");
  if (code.size() == 5) o.expect(verify_cover(g, code_to_cover(code, 2)).passes(1), "code_to_cover verifies");
  o.detail << "bc(KG(5,2))=" << bc.size << " nodes=" << bc.nodes << " code=" << code.size() << "x" << code.length();
  return finish("petersen-sfpc-equivalence", o);
}

CheckResult odd_kneser_covering(const Options& opts) {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    const int t = 2 * r + 1;
    const LabeledGraph g = kneser_graph(t, r);
    const long long formula = kneser_covering_formula(t, r);
    const VertexCover vc = covering_number(g, opts.budget);
    o.expect(vc.size == formula, "beta(KG(" + std::to_string(t) + "," + std::to_string(r) + ")) matches formula");
    o.expect(is_c4_free(g).free, "KG(2r+1,r) is C4-free");
    o.detail << (r > 1 ? "; " : "") << "beta(KG(" << t << "," << r << "))=" << vc.size << " formula=" << formula;
    try {
      const ExactBcResult bc = exact_bc(g, 1, opts.budget);
      o.expect(bc.size == formula, "exact bc equals formula");
      o.detail << " bc=" << bc.size;
    } catch (const BudgetError&) {
      // every maximal biclique is a star, so a biclique cover yields a vertex
      // cover of the same size: bc >= beta; the star cover gives bc <= beta
      bool stars_only = true;
      for (const auto& b : enumerate_maximal_bicliques(g, opts.budget))
        stars_only = stars_only && (b.x.size() == 1 || b.y.size() == 1);
      const BicliqueCover upper = star_cover(g, vc.witness);
      const bool upper_ok = verify_cover(g, upper).passes(1);
      o.expect(stars_only, "maximal bicliques are stars");
      o.expect(upper_ok && upper.size() == formula, "star cover of formula size verifies");
      o.detail << " bc in [" << (stars_only ? vc.size : 0) << "," << upper.size() << "] (bound coincidence";
      SearchBudget raised = opts.budget;
      raised.max_edges = std::max(raised.max_edges, g.edge_count());
      try {
        const ExactBcResult bc = exact_bc(g, 1, raised);
        o.expect(bc.size == formula, "exact bc with raised edge limit equals formula");
        o.detail << ", exact with edge limit " << raised.max_edges << ": " << bc.size;
      } catch (const BudgetError&) {
        o.detail << ", exact search over budget";
      }
      o.detail << ")";
    }
  }
  return finish("odd-kneser-covering-number", o);
}

CheckResult hadamard_complete(const Options& opts) {
  Outcome o;
  const HadamardMatrix h = sylvester(2);
  const BicliqueCover cover = k8d_cover(h);
  const LabeledGraph g = complete_graph(8);
  const CoverReport rep = verify_cover(g, cover);
  o.expect(rep.passes(2) && cover.size() == 4, "4 bicliques 2-cover K_8");
  const long long lb = bc_lower_bound(g, 2, opts.budget);
  o.expect(lb == 4, "edge-density bound is 4");
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    const int want = (v == u + 4) ? 4 : 2;
    o.expect(rep.multiplicities[e] == want, "edge multiplicity pattern");
  }
  o.detail << "size=" << cover.size() << " min_mult=" << rep.min_multiplicity.value_or(0) << " lower=" << lb;
  return finish("hadamard-complete-graph-cover", o);
}

CheckResult hadamard_kmm(const Options& opts) {
  Outcome o;
  const HadamardMatrix h = normalize(sylvester(2));
  const BicliqueCover cover = kmm_minus_cover(h);
  const LabeledGraph g = complete_bipartite_minus_matching(6);
  o.expect(verify_cover(g, cover).passes(1) && cover.size() == 4, "4 bicliques 1-cover K-_{6,6}");
  const CoverFreeFamily f = intersection_cover_to_cff(cover);
  o.expect(verify_cff(f, 1, 1, 1).pass && f.points() == 4 && f.size() == 6, "induced CFF(4,6) verifies");
  const MinNResult n = exact_min_n(1, 1, 1, 6, opts.budget, true);
  o.expect(n.n == 4, "N((1,1;1),6) = 4");
  o.expect(n.bc_intersection && *n.bc_intersection == 4, "bc(I_6(1,1)) = 4");
  o.detail << "cover=" << cover.size() << " N=" << n.n << " bc(I_6(1,1))=" << n.bc_intersection.value_or(-1);
  return finish("hadamard-kmm-cover", o);
}

CheckResult cff_intersection(const Options& opts) {
  Outcome o;
  for (int t = 2; t <= 6; ++t) {
    const MinNResult n = exact_min_n(1, 1, 1, t, opts.budget, true);
    o.expect(n.bc_intersection.has_value() && n.cross_check_agrees(), "N((1,1;1)," + std::to_string(t) + ") = bc");
    o.detail << "t=" << t << ":N=" << n.n << ",bc=" << n.bc_intersection.value_or(-1) << " ";
    if (t == 3) o.expect(n.n == 3, "N((1,1;1),3) = 3");
  }
  const ExactBcResult c6 = exact_bc(intersection_bigraph(3, 1, 1), 1, opts.budget);
  o.expect(c6.size == 3, "bc(C6) = 3");
  return finish("cff-intersection-equality", o);
}

CheckResult kneser_cff_sandwich(const Options& opts) {
  Outcome o;
  const LabeledGraph g = kneser_graph(5, 2);
  const ExactBcResult bc1 = exact_bc(g, 1, opts.budget);
  const ExactBcResult bc2 = exact_bc(g, 2, opts.budget);
  const CoverFreeFamily doubled = cover_to_cff(bc1.witness);
  o.expect(verify_cff(doubled, 2, 2, 1).pass, "cover_to_cff gives a (2,2;1)-CFF");
  o.expect(doubled.points() == 2 * bc1.size, "cover_to_cff has 2l points");
  const MinNResult n = exact_min_n(2, 2, 1, 5, opts.budget, false);
  const BicliqueCover back = cff_to_cover(n.witness, 2, 1);
  o.expect(verify_cover(g, back).passes(2), "cff_to_cover gives a 2-cover");
  o.expect(back.size() == n.n, "cff_to_cover has n bicliques");
  o.expect(bc2.size <= n.n && n.n <= 2 * bc1.size, "bc_2 <= N <= 2 bc_1");
  o.detail << "bc2=" << bc2.size << " N((2,2;1),5)=" << n.n << " 2*bc1=" << 2 * bc1.size;
  return finish("kneser-cff-sandwich", o);
}

CheckResult random_halving(const Options&) {
  Outcome o;
  const SfpcBound b = sfpc_bound(10, 2);
  const double expected = 252.0 / 40.0 * (1.0 + std::log(100.0));
  o.expect(std::abs(b.value - expected) <= 1e-9 * expected, "bound value");
  o.expect(b.floor_value == 35, "bound floor is 35");
  const RandomCoverResult rc = random_cover(10, 2, RandomTrialConfig{1, 50, std::nullopt});
  const LabeledGraph g = kneser_graph(10, 2);
  o.expect(verify_cover(g, rc.best).passes(1), "best random cover verifies");
  o.expect(rc.best.size() <= 35, "best random cover has size <= 35");
  o.detail << "bound=" << b.value << " p=" << rc.p << " best=" << rc.best.size() << " (trial " << rc.best_trial << ")";
  return finish("random-halving-bound", o);
}

CheckResult kneser_homomorphism(const Options& opts) {
  Outcome o;
  const HomomorphismCheck hc = check_kneser_phi(7, 3);
  o.expect(hc.homomorphism && hc.onto_edge, "phi is an onto-edge homomorphism");
  const LabeledGraph src = kneser_graph(7, 3);
  const VertexCover vc = covering_number(src, opts.budget);
  const BicliqueCover cover = star_cover(src, vc.witness);
  o.expect(verify_cover(src, cover).passes(1), "source 1-cover verifies");
  const BicliqueCover pushed = push_cover(cover);
  const LabeledGraph dst = kneser_graph(5, 2);
  const CoverReport rep = verify_cover(dst, pushed);
  o.expect(pushed.d == 3 && rep.passes(3), "pushed cover is a 3-cover of KG(5,2)");
  o.detail << "source=" << cover.size() << " pushed min_mult=" << rep.min_multiplicity.value_or(0) << " preimage bc:";
  for (int e : {0, 7, 14}) {
    const LabeledGraph pre = preimage_subgraph(7, 3, dst.edges()[e]);
    const ExactBcResult bc = exact_bc(pre, 1, opts.budget);
    o.expect(bc.size >= 3, "preimage bc >= 3");
    o.expect(has_induced_c6_or_3_matching(pre), "preimage has induced C6 or 3-matching");
    o.detail << " " << bc.size;
  }
  return finish("kneser-homomorphism", o);
}

}  // namespace

std::vector<Check> checks() {
  return {
      {"petersen-sfpc-equivalence", 10, petersen_sfpc},
      {"odd-kneser-covering-number", 300, odd_kneser_covering},
      {"hadamard-complete-graph-cover", 1, hadamard_complete},
      {"hadamard-kmm-cover", 30, hadamard_kmm},
      {"cff-intersection-equality", 120, cff_intersection},
      {"kneser-cff-sandwich", 600, kneser_cff_sandwich},
      {"random-halving-bound", 120, random_halving},
      {"kneser-homomorphism", 300, kneser_homomorphism},
  };
}

std::vector<CheckResult> run(const Options& opts, bool fail_fast,
                             const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  const auto all = checks();
  const std::size_t count = opts.quick ? 4 : all.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = all[i].run(opts);
    } catch (const std::exception& e) {
      res = {all[i].name, false, std::string("exception: ") + e.what(), 0, 0};
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.limit_seconds = all[i].limit_seconds;
    if (res.seconds > res.limit_seconds) {
      res.pass = false;
      res.detail += " (over time limit)";
    }
    results.push_back(res);
    if (on_result) on_result(res);
    if (fail_fast && !res.pass) break;
  }
  return results;
}

}  // namespace framecover::pipeline
