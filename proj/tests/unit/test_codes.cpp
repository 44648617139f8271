#include <doctest.h>

#include <random>

#include "framecover/code.hpp"
#include "framecover/errors.hpp"
#include "oracles.hpp"

using namespace framecover;

namespace {

BinaryCode C(std::vector<std::string> rows) { return BinaryCode::from_strings(rows); }

std::vector<int> members(const BitVec& b) { return b.positions(); }

}  // namespace

TEST_SUITE("codes") {
  TEST_CASE("code construction") {
    const BinaryCode c = C({"010", "011"});
    CHECK(c.size() == 2);
    CHECK(c.length() == 3);
    CHECK(c.column(2).to_string() == "01");
    CHECK_FALSE(c.duplicate_rows());
    CHECK(C({"01", "10", "01"}).duplicate_rows() == std::pair{0, 2});
    CHECK_THROWS_AS(C({}), ParameterError);
    CHECK_THROWS_AS(C({"01", "1"}), ParameterError);
    CHECK_THROWS_AS(C({""}), ParameterError);
    CHECK_THROWS_AS(C({"0a"}), ParameterError);
  }

  TEST_CASE("coalitions") {
    const BinaryCode c = C({"00", "01", "11"});
    CHECK(make_coalition(c, {2, 0}) == Coalition{0, 2});
    CHECK_THROWS_AS(make_coalition(c, {}), ParameterError);
    CHECK_THROWS_AS(make_coalition(c, {3}), ParameterError);
    CHECK(make_coalition(c, {1, 1}) == Coalition{1});
  }

  TEST_CASE("undetectable positions") {
    const BinaryCode c = C({"010", "011", "101"});
    CHECK(members(undetectable_positions(c, {0})) == std::vector<int>{0, 1, 2});
    CHECK(members(undetectable_positions(c, {0, 1})) == std::vector<int>{0, 1});
    CHECK(members(undetectable_positions(C({"01", "10"}), {0, 1})).empty());
    const AgreementProfile p = agreement(c, {0, 1});
    CHECK(p.ones.to_string() == "010");
    CHECK(p.zeros.to_string() == "100");
  }

  TEST_CASE("feasible set separation") {
    const BinaryCode a = C({"000", "111"});
    const Separation s = feasible_sets_disjoint(a, {0}, {1});
    CHECK(s.disjoint);
    CHECK(s.position == 0);

    const BinaryCode b = C({"00", "01", "10", "11"});
    const Separation s2 = feasible_sets_disjoint(b, {0, 1}, {2, 3});
    CHECK(s2.disjoint);
    CHECK(s2.position == 0);

    const BinaryCode c = C({"01", "10", "11"});
    CHECK_FALSE(feasible_sets_disjoint(c, {0, 1}, {2}).disjoint);
    CHECK(in_feasible_set(c, {0, 1}, BitVec::from_string("00")));
    CHECK_FALSE(in_feasible_set(c, {2}, BitVec::from_string("01")));
  }

  TEST_CASE("separation agrees with word enumeration on random codes") {
    std::mt19937_64 gen(2024);
    int trials = 0;
    for (; trials < 1200; ++trials) {
      const int t = 2 + static_cast<int>(gen() % 5);
      const int v = 1 + static_cast<int>(gen() % 12);
      const oracle::Rows rows = oracle::random_rows(gen, t, v);
      const BinaryCode code = oracle::code_of(rows);
      // two random nonempty coalitions, overlap allowed
      auto pick = [&] {
        oracle::Set s;
        while (s.empty())
          for (int i = 0; i < t; ++i)
            if (gen() & 1) s.push_back(i);
        return s;
      };
      const oracle::Set c1 = pick(), c2 = pick();
      const Separation sep = feasible_sets_disjoint(code, c1, c2);
      REQUIRE(sep.disjoint == oracle::feasible_sets_disjoint(rows, c1, c2));
      if (sep.disjoint) {
        REQUIRE(sep.position);
        const BitVec u1 = undetectable_positions(code, c1), u2 = undetectable_positions(code, c2);
        CHECK(u1.test(*sep.position));
        CHECK(u2.test(*sep.position));
        CHECK(code.row(c1[0]).test(*sep.position) != code.row(c2[0]).test(*sep.position));
      }
    }
    CHECK(trials >= 1000);
  }

  TEST_CASE("feasible set monotonicity") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 300; ++trial) {
      const int t = 3 + static_cast<int>(gen() % 4);
      const int v = 1 + static_cast<int>(gen() % 8);
      const oracle::Rows rows = oracle::random_rows(gen, t, v);
      const BinaryCode code = oracle::code_of(rows);
      Coalition small{static_cast<int>(gen() % t)};
      Coalition big = small;
      for (int i = 0; i < t; ++i)
        if (i != small[0] && (gen() & 1)) big.push_back(i);
      big = make_coalition(code, big);
      CHECK(undetectable_positions(code, big).subset_of(undetectable_positions(code, small)));
      for (long long bits = 0; bits < (1LL << v); ++bits) {
        oracle::Word x(v);
        BitVec xb(v);
        for (int j = 0; j < v; ++j) {
          x[j] = static_cast<int>(bits >> j & 1);
          xb.set(j, x[j]);
        }
        CHECK(in_feasible_set(code, small, xb) == oracle::in_feasible_set(rows, small, x));
        if (in_feasible_set(code, small, xb)) CHECK(in_feasible_set(code, big, xb));
      }
    }
  }

  TEST_CASE("secure frameproof examples") {
    const SfpcVerdict dup = is_sfpc(C({"01", "10", "01"}), 1);
    CHECK_FALSE(dup.pass);
    CHECK(dup.c1 == Coalition{0});
    CHECK(dup.c2 == Coalition{2});
    CHECK(is_sfpc(C({"000", "111"}), 1).pass);
    CHECK_THROWS_AS(is_sfpc(C({"0"}), 1), ParameterError);
    CHECK_THROWS_AS(is_sfpc(C({"0", "1"}), 2), ParameterError);
    CHECK_THROWS_AS(is_sfpc(C({"0", "1"}), 0), ParameterError);
    CHECK_THROWS_AS(is_sfpc(C({"00", "01", "10"}), 2, {true}), ParameterError);
  }

  TEST_CASE("secure frameproof check agrees with the oracle") {
    std::mt19937_64 gen(5);
    int passes = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int t = 2 + static_cast<int>(gen() % 5);
      const int v = 2 + static_cast<int>(gen() % 7);
      const int r = 1 + static_cast<int>(gen() % (t - 1));
      const oracle::Rows rows = oracle::random_rows(gen, t, v);
      const BinaryCode code = oracle::code_of(rows);
      const SfpcVerdict got = is_sfpc(code, r);
      const SfpcVerdict ref = serial::is_sfpc(code, r);
      const auto expect = oracle::sfpc_violation(rows, r);
      REQUIRE(got.pass == !expect.has_value());
      passes += got.pass;
      if (expect) {
        CHECK(got.c1 == expect->c1);
        CHECK(got.c2 == expect->c2);
      }
      CHECK(ref.pass == got.pass);
      CHECK(ref.c1 == got.c1);
      CHECK(ref.c2 == got.c2);
      if (t >= 2 * r) CHECK(is_sfpc(code, r, {true}).pass == got.pass);
      if (got.pass)
        for (int smaller = 1; smaller < r; ++smaller) CHECK(is_sfpc(code, smaller).pass);
    }
    CHECK(passes > 0);
  }

  TEST_CASE("frameproof check") {
    // weight-one words
    for (int t = 2; t <= 5; ++t) {
      oracle::Rows rows(t, oracle::Word(t, 0));
      for (int i = 0; i < t; ++i) rows[i][i] = 1;
      const BinaryCode code = oracle::code_of(rows);
      for (int r = 1; r < t; ++r) {
        CHECK(is_frameproof(code, r).pass);
        CHECK_FALSE(oracle::frameproof_violation(rows, r));
      }
    }
    CHECK(is_frameproof(C({"00", "11"}), 1).pass);
    CHECK(is_frameproof(C({"110", "101", "011"}), 2).pass);

    // the first failing code in enumeration order (3 rows of length 2,
    // lexicographic) for r = 2, found by the oracle
    std::optional<oracle::Rows> first;
    for (int a = 0; a < 4 && !first; ++a)
      for (int b = a + 1; b < 4 && !first; ++b)
        for (int c = b + 1; c < 4 && !first; ++c) {
          const oracle::Rows rows{{a >> 1 & 1, a & 1}, {b >> 1 & 1, b & 1}, {c >> 1 & 1, c & 1}};
          if (oracle::frameproof_violation(rows, 2)) first = rows;
        }
    REQUIRE(first);
    CHECK(*first == oracle::Rows{{0, 0}, {0, 1}, {1, 0}});
    const FrameproofVerdict v = is_frameproof(oracle::code_of(*first), 2);
    CHECK_FALSE(v.pass);
    const auto witness = oracle::frameproof_violation(*first, 2);
    CHECK(v.coalition == witness->coalition);
    CHECK(v.framed == witness->framed);
    // 01 and 10 agree nowhere, so together they can forge 00
    CHECK(v.coalition == Coalition{1, 2});
    CHECK(v.framed == 0);

    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 400; ++trial) {
      const int t = 2 + static_cast<int>(gen() % 5);
      const int v2 = 1 + static_cast<int>(gen() % 6);
      const int r = 1 + static_cast<int>(gen() % t);
      const oracle::Rows rows = oracle::random_rows(gen, t, v2);
      const auto expect = oracle::frameproof_violation(rows, r);
      const FrameproofVerdict got = is_frameproof(oracle::code_of(rows), r);
      REQUIRE(got.pass == !expect.has_value());
      if (expect) {
        CHECK(got.coalition == expect->coalition);
        CHECK(got.framed == expect->framed);
      }
    }
  }

  TEST_CASE("majority word") {
    CHECK(majority_word(C({"0", "0", "1"}), {0, 1, 2}).to_string() == "0");
    CHECK(majority_word(C({"110", "101", "011"}), {0, 1, 2}).to_string() == "111");
    CHECK_THROWS_AS(majority_word(C({"0", "1"}), {0, 1}), ParameterError);

    // maj(D) lies in F(C) for every r-subset C of a (2r-1)-set D
    std::mt19937_64 gen(77);
    for (int trial = 0; trial < 500; ++trial) {
      const int r = 1 + static_cast<int>(gen() % 3);
      const int t = 2 * r - 1 + static_cast<int>(gen() % 3);
      const int v = 1 + static_cast<int>(gen() % 12);
      const BinaryCode code = oracle::code_of(oracle::random_rows(gen, t, v));
      Coalition d(2 * r - 1);
      for (int i = 0; i < 2 * r - 1; ++i) d[i] = i;
      const BitVec maj = majority_word(code, d);
      for_each_combination(2 * r - 1, r, [&](std::span<const int> idx) {
        Coalition c;
        for (int i : idx) c.push_back(d[i]);
        CHECK(in_feasible_set(code, c, maj));
        return true;
      });
    }
  }

  TEST_CASE("unregistered majority word for frameproof codes") {
    // r-FPCs with t > 2r - 1 and r >= 2: maj(D) is never a codeword. For
    // r = 1 the set D is a single codeword and maj(D) is that codeword.
    CHECK(majority_word(C({"01", "10"}), {1}) == C({"01", "10"}).row(1));
    std::mt19937_64 gen(123);
    int seen = 0;
    for (int trial = 0; trial < 20000 && seen < 60; ++trial) {
      const int r = 2 + static_cast<int>(gen() % 2);
      const int t = 2 * r + static_cast<int>(gen() % 2);
      const int v = 3 + static_cast<int>(gen() % 5);
      const oracle::Rows rows = oracle::random_rows(gen, t, v);
      const BinaryCode code = oracle::code_of(rows);
      if (!is_frameproof(code, r).pass) continue;
      ++seen;
      for_each_combination(t, 2 * r - 1, [&](std::span<const int> idx) {
        const BitVec maj = majority_word(code, Coalition(idx.begin(), idx.end()));
        for (int i = 0; i < t; ++i) CHECK(code.row(i) != maj);
        return true;
      });
    }
    CHECK(seen > 0);
  }
}
