#include <doctest.h>

#include <algorithm>
#include <random>

#include "framecover/constructors.hpp"
#include "framecover/cover.hpp"
#include "framecover/errors.hpp"
#include "framecover/hadamard.hpp"
#include "oracles.hpp"

using namespace framecover;

namespace {

SubsetMask S(int t, std::initializer_list<int> e) { return SubsetMask::from_elements(t, std::vector<int>(e)); }

BicliqueCover single_edges(const LabeledGraph& g) {
  BicliqueCover c{g.family(), 1, {}};
  for (auto [u, v] : g.edges()) c.bicliques.emplace_back(Biclique{{u}, {v}});
  return c;
}

}  // namespace

TEST_SUITE("covers") {
  TEST_CASE("ground pair expansion") {
    const SubsetBiclique a = expand_ground_pair(make_ground_pair(S(4, {1, 2}), S(4, {3, 4}), 2));
    REQUIRE(a.x.size() == 1);
    REQUIRE(a.y.size() == 1);
    CHECK(a.x[0] == S(4, {1, 2}));
    CHECK(a.y[0] == S(4, {3, 4}));
    const SubsetBiclique b = expand_ground_pair(make_ground_pair(S(5, {1, 2, 3}), S(5, {4, 5}), 2));
    CHECK(b.x.size() == 3);
    CHECK(b.y.size() == 1);
    const SubsetBiclique c = expand_ground_pair(make_ground_pair(S(3, {1}), S(3, {2, 3}), 2));
    CHECK(c.x.empty());
    CHECK(c.y.size() == 1);
    CHECK_THROWS_AS(make_ground_pair(S(4, {1, 2}), S(4, {2, 3}), 1), ParameterError);
  }

  TEST_CASE("resolving ground pairs") {
    const LabeledGraph g = kneser_graph(5, 2);
    const Biclique b = resolve(g, make_ground_pair(S(5, {1, 2, 3}), S(5, {4, 5}), 2));
    CHECK(b.x.size() == 3);
    REQUIRE(b.y.size() == 1);
    CHECK(g.label(b.y[0]).subset == S(5, {4, 5}));

    const LabeledGraph i = intersection_bigraph(5, 2, 1);
    const Biclique bi = resolve(i, make_ground_pair(S(5, {1, 2}), S(5, {3, 4, 5}), 2));
    CHECK(bi.x.size() == 2);  // singletons of {1,2}, w-side
    CHECK(bi.y.size() == 3);
    for (int v : bi.x) CHECK(i.label(v).side == 0);
    for (int v : bi.y) CHECK(i.label(v).side == 1);
  }

  TEST_CASE("verifying covers") {
    const LabeledGraph petersen = kneser_graph(5, 2);
    const CoverReport r = verify_cover(petersen, single_edges(petersen));
    CHECK(r.valid_bicliques);
    CHECK(r.min_multiplicity == 1);
    CHECK(r.passes(1));
    CHECK_FALSE(r.passes(2));
    CHECK(r.uncovered.empty());
    CHECK(r.profile == std::map<int, int>{{1, 15}});

    const BicliqueCover had = k8d_cover(sylvester(2));
    const CoverReport rh = verify_cover(complete_graph(8), had);
    CHECK(had.size() == 4);
    CHECK(rh.min_multiplicity == 2);

    const LabeledGraph empty = custom_graph(3, {});
    const CoverReport re = verify_cover(empty, BicliqueCover{empty.family(), 5, {}});
    CHECK_FALSE(re.min_multiplicity);
    CHECK(re.passes(100));

    // a non-edge pair is reported
    BicliqueCover bad = single_edges(petersen);
    bad.bicliques.emplace_back(Biclique{{0}, {1}});
    const CoverReport rb = verify_cover(petersen, bad);
    CHECK_FALSE(rb.valid_bicliques);
    REQUIRE(rb.invalid);
    CHECK(rb.invalid->biclique == 15);
    CHECK(rb.invalid->u == 0);
    CHECK(rb.invalid->v == 1);
    CHECK_FALSE(rb.passes(1));

    // uncovered edges at the claimed level
    BicliqueCover partial = single_edges(petersen);
    partial.bicliques.pop_back();
    const CoverReport rp = verify_cover(petersen, partial);
    CHECK(rp.min_multiplicity == 0);
    CHECK(rp.uncovered == std::vector<Edge>{petersen.edges().back()});

    CHECK_THROWS_AS(verify_cover(kneser_graph(6, 2), partial), ParameterError);
  }

  TEST_CASE("empty and one-sided bicliques contribute nothing") {
    const LabeledGraph g = kneser_graph(5, 2);
    BicliqueCover c = single_edges(g);
    c.bicliques.emplace_back(Biclique{{}, {}});
    c.bicliques.emplace_back(Biclique{{3}, {}});
    c.bicliques.emplace_back(make_ground_pair(S(5, {1}), S(5, {2, 3}), 2));
    const CoverReport r = verify_cover(g, c);
    CHECK(r.valid_bicliques);
    CHECK(r.profile == std::map<int, int>{{1, 15}});
  }

  TEST_CASE("order invariance and duplication") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 40; ++trial) {
      const int t = 5 + trial % 3;
      const LabeledGraph g = kneser_graph(t, 2);
      BicliqueCover c = random_cover(t, 2, {static_cast<std::uint64_t>(trial), 1, 0.3}).best;
      const CoverReport base = verify_cover(g, c);
      std::shuffle(c.bicliques.begin(), c.bicliques.end(), gen);
      const CoverReport shuffled = verify_cover(g, c);
      CHECK(shuffled.multiplicities == base.multiplicities);
      CHECK(shuffled.profile == base.profile);
      CHECK(shuffled.min_multiplicity == base.min_multiplicity);
      CHECK(shuffled.uncovered == base.uncovered);

      BicliqueCover twice = c;
      twice.bicliques.insert(twice.bicliques.end(), c.bicliques.begin(), c.bicliques.end());
      const CoverReport doubled = verify_cover(g, twice);
      CHECK(*doubled.min_multiplicity == 2 * *base.min_multiplicity);
      for (std::size_t e = 0; e < base.multiplicities.size(); ++e)
        CHECK(doubled.multiplicities[e] == 2 * base.multiplicities[e]);
      // valid at d implies valid at every smaller d
      for (int d = 0; d <= *doubled.min_multiplicity; ++d) CHECK(doubled.passes(d));
    }
  }

  TEST_CASE("edge-density lower bound") {
    CHECK(bc_lower_bound(complete_graph(8), 2) == 4);
    CHECK(bc_lower_bound(complete_bipartite_minus_matching(6), 1) == 4);
    CHECK(bc_lower_bound(custom_graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), 1) == 1);
    CHECK(bc_lower_bound(custom_graph(4, {}), 3) == 0);
    CHECK(bc_lower_bound(kneser_graph(5, 2), 2) == 10);
  }

  TEST_CASE("serial and parallel multiplicities agree") {
    for (int t = 6; t <= 10; t += 2) {
      const LabeledGraph g = kneser_graph(t, 2);
      const BicliqueCover c = random_cover(t, 2, {9, 1, std::nullopt}).best;
      std::vector<Biclique> resolved;
      for (const auto& e : c.bicliques) resolved.push_back(resolve(g, e));
      CHECK(edge_multiplicities(g, resolved) == serial::edge_multiplicities(g, resolved));
    }
  }
}
