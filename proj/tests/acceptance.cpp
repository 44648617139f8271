// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.
// A1-A8 run the end-to-end checks and add independent cross-checks against
// the brute-force oracles and known values. A9 runs the invariant
// suites on random inputs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "framecover/cff.hpp"
#include "framecover/constructors.hpp"
#include "framecover/hadamard.hpp"
#include "framecover/pipeline.hpp"
#include "framecover/transforms.hpp"
#include "oracles.hpp"

using namespace framecover;

namespace {

struct Extra {
  bool pass = true;
  std::string detail;
};

void require(Extra& e, bool ok, const std::string& what) {
  if (!ok) {
    e.pass = false;
    e.detail += (e.detail.empty() ? "" : "; ") + what;
  }
}

// A1: the Petersen-derived code, checked by enumerating all 2^6 words
Extra a1() {
  Extra e;
  const ExactBcResult bc = exact_bc(kneser_graph(5, 2), 1);
  require(e, bc.size == 6, "bc_1(KG(5,2)) != 6");
  const BinaryCode code = cover_to_code(bc.witness);
  require(e, code.size() == 5 && code.length() == 6, "code is not a (6,5)-code");
  const oracle::Rows rows = oracle::rows_of(code);
  require(e, !oracle::sfpc_violation(rows, 2), "oracle finds a violating coalition pair");
  require(e, is_sfpc(code, 2).pass, "is_sfpc rejects the code");
  // each pair of disjoint coalitions of size <= 2, word by word
  int pairs = 0;
  for (const auto& c1 : oracle::coalitions(5, 2))
    for (const auto& c2 : oracle::coalitions(5, 2)) {
      if (c1 >= c2) continue;
      bool overlap = false;
      for (int a : c1) overlap = overlap || std::find(c2.begin(), c2.end(), a) != c2.end();
      if (overlap) continue;
      ++pairs;
      const bool lib = feasible_sets_disjoint(code, make_coalition(code, c1), make_coalition(code, c2)).disjoint;
      require(e, lib == oracle::feasible_sets_disjoint(rows, c1, c2), "separation disagrees with the oracle");
    }
  e.detail = "oracle checked " + std::to_string(pairs) + " coalition pairs over 64 words" +
             (e.detail.empty() ? "" : "; " + e.detail);
  return e;
}

// A2: covering numbers 2, 6, 20
Extra a2() {
  Extra e;
  const long long known[] = {2, 6, 20};
  for (int r = 1; r <= 3; ++r) {
    const LabeledGraph g = kneser_graph(2 * r + 1, r);
    const VertexCover vc = covering_number(g);
    require(e, vc.size == known[r - 1], "beta(KG(" + std::to_string(2 * r + 1) + "," + std::to_string(r) + ")) = " +
                                                std::to_string(vc.size));
    require(e, pipeline::kneser_covering_formula(2 * r + 1, r) == known[r - 1], "formula mismatch");
    if (g.vertex_count() <= 20) {
      const oracle::Set lex = oracle::min_vertex_cover(oracle::adjacency(g));
      require(e, static_cast<int>(lex.size()) == vc.size, "oracle vertex cover differs");
      require(e, lex == vc.witness, "lex-least witness differs");
    }
    require(e, !oracle::has_c4(oracle::adjacency(g)), "oracle finds a 4-cycle");
  }
  return e;
}

// A3: bc_2(K_8) = 4
Extra a3() {
  Extra e;
  const BicliqueCover c = k8d_cover(sylvester(2));
  require(e, c.size() == 4, "cover size != 4");
  const oracle::Adjacency adj = oracle::adjacency(complete_graph(8));
  require(e, oracle::max_biclique_edges(adj) == 16, "B(K_8) != 16");
  require(e, oracle::biclique_cover_number(adj, 2, 5) == 4, "brute-force bc_2(K_8) != 4");
  return e;
}

// A4: N((1,1;1),6) = 4
Extra a4() {
  Extra e;
  require(e, oracle::min_cff_points(1, 1, 1, 6, 5) == 4, "brute-force N((1,1;1),6) != 4");
  const BicliqueCover c = kmm_minus_cover(sylvester(2));
  require(e, oracle::biclique_cover_number(oracle::adjacency(complete_bipartite_minus_matching(6)), 1, 5) == 4,
          "brute-force bc_1(K-_{6,6}) != 4");
  require(e, c.size() == 4, "cover size != 4");
  return e;
}

// A5: N((1,1;1),t) = bc(I_t(1,1)) for t = 2..6, and N((1,1;1),3) = bc(C_6) = 3
Extra a5() {
  Extra e;
  std::string row;
  for (int t = 2; t <= 6; ++t) {
    const int n = oracle::min_cff_points(1, 1, 1, t, 6);
    const int bc = oracle::biclique_cover_number(oracle::adjacency(intersection_bigraph(t, 1, 1)), 1, 6);
    require(e, n == bc, "oracle N != oracle bc at t=" + std::to_string(t));
    require(e, exact_min_n(1, 1, 1, t).n == n, "exact_min_n differs from the oracle at t=" + std::to_string(t));
    row += (row.empty() ? "" : " ") + std::to_string(n);
  }
  require(e, oracle::min_cff_points(1, 1, 1, 3, 4) == 3, "N((1,1;1),3) != 3");
  e.detail = "oracle N = " + row + (e.detail.empty() ? "" : "; " + e.detail);
  return e;
}

// A6: the upper end of the sandwich is 2 * 6 = 12
Extra a6() {
  Extra e;
  const int bc1 = exact_bc(kneser_graph(5, 2), 1).size;
  const int bc2 = exact_bc(kneser_graph(5, 2), 2).size;
  const int n = exact_min_n(2, 2, 1, 5).n;
  require(e, 2 * bc1 == 12, "2 bc_1 != 12");
  require(e, bc2 <= n && n <= 12, "sandwich fails");
  const oracle::Adjacency adj = oracle::adjacency(kneser_graph(5, 2));
  require(e, oracle::max_biclique_edges(adj) == 3, "B(KG(5,2)) != 3");
  require(e, bc2 >= 10, "bc_2 below the density bound 2*15/3");
  e.detail = "bc_2=" + std::to_string(bc2) + " N=" + std::to_string(n) + " 2bc_1=" + std::to_string(2 * bc1);
  return e;
}

// A7: 252/40 (1 + ln 100) recomputed directly
Extra a7() {
  Extra e;
  const double expected = 252.0 / 40.0 * (1.0 + std::log(100.0));
  const SfpcBound b = sfpc_bound(10, 2);
  require(e, std::abs(b.value - expected) <= 1e-9 * expected, "bound differs from 252/40 (1 + ln 100)");
  require(e, std::abs(expected - 35.31) < 0.01, "bound is not about 35.31");
  const RandomCoverResult rc = random_cover(10, 2, {1, 50, std::nullopt});
  const BinaryCode code = cover_to_code(rc.best);
  require(e, code.length() <= 35, "code longer than 35");
  require(e, is_sfpc(code, 2).pass, "derived code is not a 2-SFPC");
  char buf[96];
  std::snprintf(buf, sizeof buf, "bound %.6f, derived 2-SFPC(%d,10)", b.value, code.length());
  e.detail = buf + (e.detail.empty() ? "" : "; " + e.detail);
  return e;
}

// A8: phi checked edge by edge from the definition
Extra a8() {
  Extra e;
  const auto src = oracle::kneser_edges(7, 3);
  const auto dst = oracle::kneser_edges(5, 2);
  std::set<std::pair<std::set<int>, std::set<int>>> hit;
  for (const auto& [a, b] : src) {
    const auto img = [](const std::set<int>& s) {
      const SubsetMask m = kneser_phi(7, 3, SubsetMask::from_elements(7, std::vector<int>(s.begin(), s.end())));
      const auto el = m.elements();
      return std::set<int>(el.begin(), el.end());
    };
    const std::set<int> ia = img(a), ib = img(b);
    require(e, dst.count({ia, ib}) + dst.count({ib, ia}) > 0, "an edge maps to a non-edge");
    hit.insert(std::min(std::pair{ia, ib}, std::pair{ib, ia}));
  }
  std::size_t dst_edges = 0;
  for (const auto& [a, b] : dst) dst_edges += a < b;
  require(e, hit.size() == dst_edges, "phi misses an edge of KG(5,2)");
  for (int k : {0, 7, 14}) {
    const LabeledGraph pre = preimage_subgraph(7, 3, kneser_graph(5, 2).edges()[k]);
    require(e, oracle::biclique_cover_number(oracle::adjacency(pre), 1) >= 3, "oracle preimage bc below 3");
  }
  e.detail = std::to_string(src.size() / 2) + " source edges onto " + std::to_string(dst_edges);
  return e;
}

// A9
Extra a9() {
  Extra e;
  std::mt19937_64 gen(20240901);
  int codes = 0, disjoint_checks = 0, majority_checks = 0, cff_checks = 0, cover_checks = 0;

  for (; codes < 1500; ++codes) {
    const int t = 2 + static_cast<int>(gen() % 7);
    const int v = 1 + static_cast<int>(gen() % 12);
    const oracle::Rows rows = oracle::random_rows(gen, t, v);
    const BinaryCode code = oracle::code_of(rows);
    for (int k = 0; k < 4; ++k) {
      oracle::Set c1, c2;
      for (int i = 0; i < t; ++i) {
        const auto roll = gen() % 3;
        if (roll == 0) c1.push_back(i);
        if (roll == 1) c2.push_back(i);
      }
      if (c1.empty() || c2.empty()) continue;
      ++disjoint_checks;
      const bool lib = feasible_sets_disjoint(code, make_coalition(code, c1), make_coalition(code, c2)).disjoint;
      if (lib != oracle::feasible_sets_disjoint(rows, c1, c2)) require(e, false, "separation disagrees with the oracle");
    }
    // maj(D) is in F(C) for C inside an odd D with |C| > |D|/2
    for (int k = 0; k < 3; ++k) {
      std::vector<int> perm(t);
      for (int i = 0; i < t; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), gen);
      const int dsize = 1 + 2 * static_cast<int>(gen() % ((t + 1) / 2));
      oracle::Set d(perm.begin(), perm.begin() + dsize);
      std::sort(d.begin(), d.end());
      const BitVec maj = majority_word(code, d);
      oracle::Word word(v);
      for (int j = 0; j < v; ++j) word[j] = maj.test(j);
      for_each_combination(dsize, (dsize + 1) / 2, [&](std::span<const int> idx) {
        oracle::Set c;
        for (int i : idx) c.push_back(d[i]);
        ++majority_checks;
        if (!oracle::in_feasible_set(rows, c, word)) require(e, false, "maj(D) outside F(C)");
        return true;
      });
    }
  }

  // CFF monotonicity, with the oracle deciding each verdict
  for (int trial = 0; trial < 400; ++trial) {
    const int t = 3 + static_cast<int>(gen() % 4);
    const int n = 2 + static_cast<int>(gen() % 10);
    std::vector<BitVec> blocks;
    for (int i = 0; i < t; ++i) {
      BitVec b(n);
      for (int j = 0; j < n; ++j) b.set(j, gen() % 2);
      blocks.push_back(b);
    }
    const CoverFreeFamily f(n, blocks);
    const oracle::Family fam = oracle::family_of(f);
    for (int r = 1; r <= 2; ++r)
      for (int w = 1; r + w <= t && w <= 2; ++w)
        for (int d = 1; d <= 2; ++d) {
          const bool pass = verify_cff(f, r, w, d).pass;
          ++cff_checks;
          if (pass != oracle::cff_holds(fam, r, w, d)) require(e, false, "CFF verdict disagrees with the oracle");
          if (!pass) continue;
          for (int r2 = 1; r2 <= r; ++r2)
            for (int w2 = 1; w2 <= w; ++w2)
              for (int d2 = 1; d2 <= d; ++d2)
                if (!verify_cff(f, r2, w2, d2).pass) require(e, false, "CFF property not downward closed");
        }
  }

  // multiplicities do not depend on the order of the bicliques
  for (int trial = 0; trial < 60; ++trial) {
    const int t = 5 + trial % 4;
    const LabeledGraph g = kneser_graph(t, 2);
    BicliqueCover c = random_cover(t, 2, {static_cast<std::uint64_t>(trial + 100), 1, 0.25}).best;
    const CoverReport base = verify_cover(g, c);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(c.bicliques.begin(), c.bicliques.end(), gen);
      ++cover_checks;
      const CoverReport again = verify_cover(g, c);
      if (again.multiplicities != base.multiplicities || again.min_multiplicity != base.min_multiplicity)
        require(e, false, "multiplicities depend on order");
    }
  }

  std::ostringstream s;
  s << codes << " codes, " << disjoint_checks << " separation, " << majority_checks << " majority, " << cff_checks
    << " CFF, " << cover_checks << " shuffled covers";
  e.detail = s.str() + (e.detail.empty() ? "" : "; " + e.detail);
  return e;
}

Extra guarded(const std::function<Extra()>& f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    return {false, std::string("exception: ") + ex.what()};
  }
}

}  // namespace

int main() {
  const std::function<Extra()> extras[] = {a1, a2, a3, a4, a5, a6, a7, a8};
  pipeline::Options opts;
  const std::vector<pipeline::CheckResult> results = pipeline::run(opts, false);
  bool all = true;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    const auto start = std::chrono::steady_clock::now();
    const Extra x = k < 8 ? guarded(extras[k]) : Extra{};
    const double extra_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.pass && x.pass;
    all = all && pass;
    std::printf("A%zu %s %s [%.2fs, limit %.0fs; cross-checks %.2fs] %s | %s\n", k + 1, pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.limit_seconds, extra_seconds, r.detail.c_str(), x.detail.c_str());
  }
  if (results.size() != 8) {
    std::printf("expected 8 end-to-end checks, got %zu\n", results.size());
    all = false;
  }
  const auto start = std::chrono::steady_clock::now();
  const Extra inv = guarded(a9);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  all = all && inv.pass;
  std::printf("A9 %s invariant-suites [%.2fs] %s\n", inv.pass ? "PASS" : "FAIL", seconds, inv.detail.c_str());
  std::fflush(stdout);
  return all ? 0 : 1;
}
