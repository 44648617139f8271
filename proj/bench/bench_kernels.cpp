// Times the OpenMP kernels against their serial references and checks that
// both return the same result. Usage: bench_kernels [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "framecover/cff.hpp"
#include "framecover/code.hpp"
#include "framecover/constructors.hpp"
#include "framecover/cover.hpp"
#include "framecover/graph.hpp"
#include "framecover/transforms.hpp"

namespace fc = framecover;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-28s %12.6f %12.6f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

fc::BinaryCode random_code(int t, int v, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<fc::BitVec> rows;
  for (int i = 0; i < t; ++i) {
    fc::BitVec b(v);
    for (int j = 0; j < v; ++j)
      if (gen() & 1) b.set(j);
    rows.push_back(b);
  }
  return fc::BinaryCode(rows);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  bool all_same = true;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

  {
    // a passing code exercises the full scan
    const fc::BinaryCode code = fc::cover_to_code(fc::random_cover(16, 3, {3, 1, std::nullopt}).best);
    fc::SfpcVerdict a, b;
    const double s = seconds([&] { a = fc::serial::is_sfpc(code, 3); }, reps);
    const double p = seconds([&] { b = fc::is_sfpc(code, 3); }, reps);
    const bool same = a.pass == b.pass && a.c1 == b.c1 && a.c2 == b.c2;
    all_same = all_same && same;
    row("is_sfpc t=16 r=3", s, p, same);
  }
  {
    const fc::BinaryCode code = random_code(40, 24, 11);
    fc::SfpcVerdict a, b;
    const double s = seconds([&] { a = fc::serial::is_sfpc(code, 2); }, reps);
    const double p = seconds([&] { b = fc::is_sfpc(code, 2); }, reps);
    const bool same = a.pass == b.pass && a.c1 == b.c1 && a.c2 == b.c2;
    all_same = all_same && same;
    row("is_sfpc random t=40 r=2", s, p, same);
  }
  {
    const fc::CoverFreeFamily f = fc::cover_to_cff(fc::random_cover(12, 3, {5, 1, std::nullopt}).best);
    fc::CffVerdict a, b;
    const double s = seconds([&] { a = fc::serial::verify_cff(f, 3, 3, 1); }, reps);
    const double p = seconds([&] { b = fc::verify_cff(f, 3, 3, 1); }, reps);
    const bool same = a.pass == b.pass && a.i_set == b.i_set && a.j_set == b.j_set;
    all_same = all_same && same;
    row("verify_cff (3,3;1) t=12", s, p, same);
  }
  {
    const fc::LabeledGraph g = fc::kneser_graph(12, 3);
    const fc::BicliqueCover cover = fc::random_cover(12, 3, {7, 1, std::nullopt}).best;
    std::vector<fc::Biclique> resolved;
    for (const auto& e : cover.bicliques) resolved.push_back(fc::resolve(g, e));
    std::vector<int> a, b;
    const double s = seconds([&] { a = fc::serial::edge_multiplicities(g, resolved); }, reps);
    const double p = seconds([&] { b = fc::edge_multiplicities(g, resolved); }, reps);
    all_same = all_same && a == b;
    row("edge_multiplicities KG(12,3)", s, p, a == b);
  }
  {
    const fc::RandomTrialConfig cfg{1, 16, std::nullopt};
    fc::RandomCoverResult a, b;
    const double s = seconds([&] { a = fc::serial::random_cover(10, 2, cfg); }, reps);
    const double p = seconds([&] { b = fc::random_cover(10, 2, cfg); }, reps);
    const bool same = a.sizes == b.sizes && a.best_trial == b.best_trial;
    all_same = all_same && same;
    row("random_cover 16 trials", s, p, same);
  }
  return all_same ? 0 : 1;
}
