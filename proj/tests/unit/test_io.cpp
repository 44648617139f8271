#include <doctest.h>

#include <random>

#include "framecover/constructors.hpp"
#include "framecover/errors.hpp"
#include "framecover/hadamard.hpp"
#include "framecover/io.hpp"
#include "oracles.hpp"

using namespace framecover;

namespace {

template <class F>
std::pair<int, int> parse_error_at(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {-1, -1};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("code files") {
    const BinaryCode code = BinaryCode::from_strings({"0011", "0101", "1001"});
    const std::string text = io::format_code(code);
    CHECK(text == "3 4\n0011\n0101\n1001\n");
    CHECK(io::parse_code(text) == code);
    CHECK(io::parse_code("3 4\r\n0011\r\n0101\r\n1001\r\n\n\n") == code);

    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 50; ++trial) {
      const BinaryCode c = oracle::code_of(oracle::random_rows(gen, 1 + trial % 9, 1 + trial % 13));
      CHECK(io::parse_code(io::format_code(c)) == c);
    }

    CHECK(parse_error_at([] { io::parse_code(""); }) == std::pair{1, 1});
    CHECK(parse_error_at([] { io::parse_code("3\n0\n"); }) == std::pair{1, 1});
    CHECK(parse_error_at([] { io::parse_code("2 3\n010\n0x0\n"); }) == std::pair{3, 2});
    CHECK(parse_error_at([] { io::parse_code("2 3\n010\n01\n"); }) == std::pair{3, 3});
    CHECK(parse_error_at([] { io::parse_code("3 3\n010\n011\n"); }).first == 3);
  }

  TEST_CASE("cover-free family files") {
    const CoverFreeFamily f = CoverFreeFamily::from_strings({"1100", "1010", "0011"});
    CHECK(io::parse_cff(io::format_cff(f)).blocks() == f.blocks());
    CHECK(io::parse_cff(io::format_cff(f)).points() == 4);
    CHECK_THROWS_AS(io::parse_cff("0 4\n"), ParseError);
    CHECK(parse_error_at([] { io::parse_cff("2 2\n10\n2 1\n"); }) == std::pair{3, 1});
  }

  TEST_CASE("sign matrix files") {
    const SignMatrix h = sylvester(3);
    CHECK(io::parse_sign_matrix(io::format_sign_matrix(h)) == h);
    CHECK(parse_error_at([] { io::parse_sign_matrix("++\n+*\n"); }) == std::pair{2, 2});
    CHECK_THROWS_AS(io::parse_sign_matrix(""), ParseError);
  }

  TEST_CASE("JSON syntax errors carry positions") {
    const auto at = parse_error_at([] { io::parse_json("{\n  \"a\": 1,\n  \"b\": }\n"); });
    CHECK(at.first == 3);
    CHECK(at.second > 1);
    CHECK(io::parse_json("{\"x\": [1, 2]}")["x"][1] == 2);
  }

  TEST_CASE("graph documents") {
    const LabeledGraph graphs[] = {kneser_graph(5, 2), intersection_bigraph(5, 2, 1), complete_graph(6),
                                   complete_bipartite_minus_matching(4), custom_graph(5, {{0, 1}, {1, 4}, {2, 3}})};
    for (const auto& g : graphs) {
      for (bool explicit_lists : {true, false}) {
        if (!explicit_lists && g.family().kind == Family::custom) continue;
        const LabeledGraph back = io::graph_from_json(io::parse_json(io::graph_to_json(g, explicit_lists).dump()));
        CHECK(back.family() == g.family());
        CHECK(back.edges() == g.edges());
        CHECK(back.vertex_count() == g.vertex_count());
      }
    }
    io::json bad = io::graph_to_json(kneser_graph(5, 2));
    bad["edges"].erase(bad["edges"].begin());
    CHECK_THROWS_AS(io::graph_from_json(bad), ParseError);
    CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"family": {"kind": "hypercube"}})")), ParseError);
  }

  TEST_CASE("cover documents") {
    const BicliqueCover ground = random_cover(7, 3, {4, 1, 0.3}).best;
    const BicliqueCover explicit_k = exact_bc(kneser_graph(5, 2), 1).witness;
    const BicliqueCover inter = exact_bc(intersection_bigraph(4, 1, 1), 1).witness;
    const BicliqueCover had = k8d_cover(sylvester(2));
    const BicliqueCover kmm = kmm_minus_cover(sylvester(2));
    for (const BicliqueCover* c : {&ground, &explicit_k, &inter, &had, &kmm}) {
      const BicliqueCover back = io::cover_from_json(io::parse_json(io::cover_to_json(*c).dump(2)));
      CHECK(back.target == c->target);
      CHECK(back.d == c->d);
      CHECK(back.bicliques == c->bicliques);
      const LabeledGraph g = make_graph(c->target);
      CHECK(verify_cover(g, back).multiplicities == verify_cover(g, *c).multiplicities);
    }

    // ground pairs use 1-based elements
    const io::json j = io::cover_to_json(BicliqueCover{
        FamilyTag::kneser(4, 1), 1,
        {make_ground_pair(SubsetMask::from_elements(4, std::vector<int>{1, 2}), SubsetMask::from_elements(4, std::vector<int>{3, 4}), 1)}});
    CHECK(j["bicliques"][0]["A"] == io::json::array({1, 2}));
    CHECK(j["bicliques"][0]["B"] == io::json::array({3, 4}));

    io::json off = io::cover_to_json(explicit_k);
    off["bicliques"][0]["X"][0] = io::json::array({1, 9});
    CHECK_THROWS_AS(io::cover_from_json(off), ParseError);
    io::json bad_d = io::cover_to_json(had);
    bad_d["d"] = 0;
    CHECK_THROWS_AS(io::cover_from_json(bad_d), ParseError);
  }

  TEST_CASE("digests") {
    CHECK(io::digest("") == "cbf29ce484222325");
    CHECK(io::digest("a") == "af63dc4c8601ec8c");
    CHECK(io::digest("ab") != io::digest("ba"));
  }
}
