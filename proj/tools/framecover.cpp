// framecover: generate, construct, convert, verify and search frameproof
// codes, biclique covers, cover-free families and Hadamard covers.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "framecover/cff.hpp"
#include "framecover/code.hpp"
#include "framecover/constructors.hpp"
#include "framecover/cover.hpp"
#include "framecover/errors.hpp"
#include "framecover/graph.hpp"
#include "framecover/hadamard.hpp"
#include "framecover/io.hpp"
#include "framecover/pipeline.hpp"
#include "framecover/transforms.hpp"

#ifndef FRAMECOVER_VERSION
#define FRAMECOVER_VERSION "dev"
#endif

namespace fc = framecover;
using fc::io::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Report {
  json doc = json::object();
  std::vector<std::string> lines;  // human summary
  std::vector<std::vector<std::string>> table;

  json& results() { return doc["results"]; }
  void say(const std::string& s) { lines.push_back(s); }
  void input(const std::string& path, const std::string& bytes) { doc["inputs"][path] = fc::io::digest(bytes); }
};

struct Globals {
  bool json_out = false;
  bool table = false;
  std::string out;
  std::string budget_text;
};

std::string join_ints(const std::vector<int>& v, int offset = 0) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + offset);
  return s + "}";
}

fc::SearchBudget budget_of(const Globals& g) {
  const fc::SearchBudget base = fc::SearchBudget::from_env();
  return g.budget_text.empty() ? base : fc::SearchBudget::parse(g.budget_text, base);
}

std::string load(Report& rep, const std::string& path) {
  std::string bytes = fc::io::read_file(path);
  rep.input(path, bytes);
  return bytes;
}

fc::BinaryCode load_code(Report& rep, const std::string& path) { return fc::io::parse_code(load(rep, path)); }
fc::CoverFreeFamily load_cff(Report& rep, const std::string& path) { return fc::io::parse_cff(load(rep, path)); }
fc::SignMatrix load_matrix(Report& rep, const std::string& path) { return fc::io::parse_sign_matrix(load(rep, path)); }
fc::BicliqueCover load_cover(Report& rep, const std::string& path) {
  return fc::io::cover_from_json(fc::io::parse_json(load(rep, path)));
}

// A descriptor such as "kneser:5,2", or a path to a graph JSON file.
fc::LabeledGraph load_graph(Report& rep, const std::string& spec) {
  if (std::filesystem::exists(spec)) return fc::io::graph_from_json(fc::io::parse_json(load(rep, spec)));
  return fc::make_graph(fc::FamilyTag::parse(spec));
}

// Graph for a cover: regenerated from its tag, or read from --graph for custom targets.
fc::LabeledGraph cover_graph(Report& rep, const fc::BicliqueCover& cover, const std::string& graph_spec) {
  if (!graph_spec.empty()) return load_graph(rep, graph_spec);
  if (cover.target.kind == fc::Family::custom)
    throw fc::ParameterError("cover targets a custom graph; pass it with --graph");
  return fc::make_graph(cover.target);
}

void emit(const Globals& g, Report& rep, const std::string& artifact) {
  if (g.out.empty()) {
    rep.doc["artifact"] = artifact;
    return;
  }
  fc::io::write_file(g.out, artifact);
  rep.doc["output"] = {{"path", g.out}, {"digest", fc::io::digest(artifact)}};
  rep.say("wrote " + g.out);
}

json cover_report_json(const fc::CoverReport& r, int d) {
  json j;
  j["valid_bicliques"] = r.valid_bicliques;
  if (r.invalid) j["invalid"] = {{"biclique", r.invalid->biclique}, {"u", r.invalid->u}, {"v", r.invalid->v}};
  j["min_multiplicity"] = r.min_multiplicity ? json(*r.min_multiplicity) : json(nullptr);
  j["level"] = d;
  j["pass"] = r.passes(d);
  json profile = json::object();
  for (const auto& [m, count] : r.profile) profile[std::to_string(m)] = count;
  j["profile"] = profile;
  json unc = json::array();
  for (std::size_t i = 0; i < r.uncovered.size() && i < 20; ++i) unc.push_back({r.uncovered[i].first, r.uncovered[i].second});
  j["uncovered"] = unc;
  j["uncovered_count"] = r.uncovered.size();
  return j;
}

// Verifies `cover` on `g` at level d, records the outcome under results[key].
bool check_cover(Report& rep, const fc::LabeledGraph& g, const fc::BicliqueCover& cover, int d,
                 const std::string& key = "verification") {
  const fc::CoverReport r = fc::verify_cover(g, cover);
  rep.results()[key] = cover_report_json(r, d);
  std::ostringstream s;
  s << key << ": " << (r.passes(d) ? "pass" : "FAIL") << " (" << cover.size() << " bicliques, min multiplicity "
    << (r.min_multiplicity ? std::to_string(*r.min_multiplicity) : "-") << ", level " << d << ")";
  if (r.invalid) s << "; biclique " << r.invalid->biclique << " has non-edge pair (" << r.invalid->u << ","
                   << r.invalid->v << ")";
  rep.say(s.str());
  return r.passes(d);
}

bool check_cff(Report& rep, const fc::CoverFreeFamily& f, int r, int w, int d, const std::string& key = "verification") {
  const fc::CffVerdict v = fc::verify_cff(f, r, w, d);
  json j{{"pass", v.pass}, {"r", r}, {"w", w}, {"d", d}, {"points", f.points()}, {"blocks", f.size()}};
  if (!v.pass) j["witness"] = {{"I", v.i_set}, {"J", v.j_set}, {"private_points", v.private_points}};
  rep.results()[key] = j;
  std::ostringstream s;
  s << key << ": " << (v.pass ? "pass" : "FAIL") << " ((" << r << "," << w << ";" << d << ")-CFF, " << f.points()
    << " points, " << f.size() << " blocks)";
  if (!v.pass) s << "; I=" << join_ints(v.i_set) << " J=" << join_ints(v.j_set) << " keeps " << v.private_points;
  rep.say(s.str());
  return v.pass;
}

bool check_sfpc(Report& rep, const fc::BinaryCode& code, int r, bool fast, const std::string& key = "verification") {
  const fc::SfpcVerdict v = fc::is_sfpc(code, r, fc::VerifyOptions{fast});
  json j{{"pass", v.pass}, {"r", r}, {"t", code.size()}, {"v", code.length()}, {"size_r_only", fast}};
  if (!v.pass) j["witness"] = {{"c1", v.c1}, {"c2", v.c2}};
  rep.results()[key] = j;
  std::string s = key + ": " + (v.pass ? "pass" : "FAIL") + " (" + std::to_string(r) + "-SFPC, t=" +
                  std::to_string(code.size()) + ", v=" + std::to_string(code.length()) + ")";
  if (!v.pass) s += "; rows " + join_ints(v.c1) + " and " + join_ints(v.c2) + " have intersecting feasible sets";
  rep.say(s);
  return v.pass;
}

int exit_of(bool pass) { return pass ? kPass : kFail; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frameproof codes, biclique covers and cover-free families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", FRAMECOVER_VERSION);
  Globals g;
  app.add_flag("--json", g.json_out, "Print the full report as JSON on stdout");
  app.add_flag("--table", g.table, "Print a bound-vs-achieved table where applicable");
  app.add_option("--out", g.out, "Write the produced artifact to this file");
  app.add_option("--budget", g.budget_text, "Search budget: edge limit or 'edges=N,vertices=N,nodes=N'");

  Report rep;
  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // gen-graph
  std::string graph_spec;
  {
    auto* sub = app.add_subcommand("gen-graph", "Generate a graph and write it as JSON");
    sub->add_option("--graph", graph_spec, "kneser:t,r | inter:t,r,w | kn:n | kmm:m")->required();
    on(sub, [&] {
      const fc::LabeledGraph gr = fc::make_graph(fc::FamilyTag::parse(graph_spec));
      rep.results() = {{"family", gr.family().to_string()}, {"vertices", gr.vertex_count()}, {"edges", gr.edge_count()}};
      rep.say(gr.family().to_string() + ": " + std::to_string(gr.vertex_count()) + " vertices, " +
              std::to_string(gr.edge_count()) + " edges");
      emit(g, rep, fc::io::graph_to_json(gr).dump(1) + "\n");
      return kPass;
    });
  }

  // verify
  std::string code_path, cff_path, cover_path, matrix_path;
  int r = 0, w = 0, d = 1;
  std::optional<int> level;
  bool fast = false;
  {
    auto* verify = app.add_subcommand("verify", "Verify an object")->require_subcommand(1);
    auto* sfpc = verify->add_subcommand("sfpc", "r-secure frameproof property of a code");
    sfpc->add_option("--code", code_path)->required();
    sfpc->add_option("--r", r)->required();
    sfpc->add_flag("--fast-size-r-only", fast, "Check only coalitions of size exactly r (needs t >= 2r)");
    on(sfpc, [&] { return exit_of(check_sfpc(rep, load_code(rep, code_path), r, fast)); });

    auto* fpc = verify->add_subcommand("fpc", "r-frameproof property of a code");
    fpc->add_option("--code", code_path)->required();
    fpc->add_option("--r", r)->required();
    on(fpc, [&] {
      const fc::BinaryCode code = load_code(rep, code_path);
      const fc::FrameproofVerdict v = fc::is_frameproof(code, r);
      json j{{"pass", v.pass}, {"r", r}, {"t", code.size()}, {"v", code.length()}};
      if (!v.pass) j["witness"] = {{"coalition", v.coalition}, {"framed", v.framed}};
      rep.results()["verification"] = j;
      rep.say(std::string("verification: ") + (v.pass ? "pass" : "FAIL") +
              (v.pass ? "" : "; coalition " + join_ints(v.coalition) + " frames row " + std::to_string(v.framed)));
      return exit_of(v.pass);
    });

    auto* cff = verify->add_subcommand("cff", "(r,w;d) cover-free property of a family");
    cff->add_option("--cff", cff_path)->required();
    cff->add_option("--r", r)->required();
    cff->add_option("--w", w)->required();
    cff->add_option("--d", d);
    on(cff, [&] { return exit_of(check_cff(rep, load_cff(rep, cff_path), r, w, d)); });

    auto* cover = verify->add_subcommand("cover", "d-biclique cover of its target graph");
    cover->add_option("--cover", cover_path)->required();
    cover->add_option("--graph", graph_spec, "Target graph file, required for custom targets");
    cover->add_option("--d", level, "Level to check (default: the cover's claimed d)");
    on(cover, [&] {
      const fc::BicliqueCover c = load_cover(rep, cover_path);
      return exit_of(check_cover(rep, cover_graph(rep, c, graph_spec), c, level.value_or(c.d)));
    });

    auto* had = verify->add_subcommand("hadamard", "H H^T = n I");
    had->add_option("--matrix", matrix_path)->required();
    on(had, [&] {
      const fc::SignMatrix h = load_matrix(rep, matrix_path);
      const bool ok = fc::verify_hadamard(h);
      rep.results()["verification"] = {{"pass", ok}, {"order", h.order()}, {"normalized", h.normalized()}};
      rep.say(std::string("verification: ") + (ok ? "pass" : "FAIL") + " (order " + std::to_string(h.order()) + ")");
      return exit_of(ok);
    });
  }

  // convert
  bool unchecked = false;
  {
    auto* conv = app.add_subcommand("convert", "Translate between codes, covers and cover-free families")
                     ->require_subcommand(1);
    auto* c2c = conv->add_subcommand("code-to-cover", "Code columns to ground-pair bicliques of KG(t,r)");
    c2c->add_option("--code", code_path)->required();
    c2c->add_option("--r", r)->required();
    on(c2c, [&] {
      const fc::BinaryCode code = load_code(rep, code_path);
      const fc::BicliqueCover cover = fc::code_to_cover(code, r);
      const bool ok = check_cover(rep, fc::make_graph(cover.target), cover, 1);
      emit(g, rep, fc::io::cover_to_json(cover).dump(1) + "\n");
      return exit_of(ok);
    });

    auto* v2c = conv->add_subcommand("cover-to-code", "1-cover of KG(t,r) to an r-SFPC");
    v2c->add_option("--cover", cover_path)->required();
    v2c->add_flag("--unchecked", unchecked, "Convert even if the cover does not verify");
    on(v2c, [&] {
      const fc::BicliqueCover cover = load_cover(rep, cover_path);
      if (cover.target.kind != fc::Family::kneser) throw fc::ParameterError("cover-to-code needs a Kneser target");
      const fc::BinaryCode code = fc::cover_to_code(cover, unchecked);
      const bool ok = cover.target.t >= 2 && cover.target.r < cover.target.t &&
                      check_sfpc(rep, code, cover.target.r, false);
      emit(g, rep, fc::io::format_code(code));
      return exit_of(ok);
    });

    auto* f2c = conv->add_subcommand("cff-to-cover", "(r,r;d)-CFF to a 2d-cover of KG(t,r)");
    f2c->add_option("--cff", cff_path)->required();
    f2c->add_option("--r", r)->required();
    f2c->add_option("--d", d);
    on(f2c, [&] {
      const fc::BicliqueCover cover = fc::cff_to_cover(load_cff(rep, cff_path), r, d);
      const bool ok = check_cover(rep, fc::make_graph(cover.target), cover, cover.d);
      emit(g, rep, fc::io::cover_to_json(cover).dump(1) + "\n");
      return exit_of(ok);
    });

    auto* c2f = conv->add_subcommand("cover-to-cff", "Cover of KG(t,r) or I_t(r,w) to a cover-free family");
    c2f->add_option("--cover", cover_path)->required();
    on(c2f, [&] {
      const fc::BicliqueCover cover = load_cover(rep, cover_path);
      bool ok = false;
      fc::CoverFreeFamily f{0, {}};
      if (cover.target.kind == fc::Family::kneser) {
        f = fc::cover_to_cff(cover);
        ok = check_cff(rep, f, cover.target.r, cover.target.r, cover.d);
      } else if (cover.target.kind == fc::Family::intersection || cover.target.kind == fc::Family::kmm) {
        f = fc::intersection_cover_to_cff(cover);
        const bool kmm = cover.target.kind == fc::Family::kmm;
        ok = check_cff(rep, f, kmm ? 1 : cover.target.r, kmm ? 1 : cover.target.w, cover.d);
      } else {
        throw fc::ParameterError("cover-to-cff needs a kneser, inter or kmm target");
      }
      emit(g, rep, fc::io::format_cff(f));
      return exit_of(ok);
    });
  }

  // project
  int s = 0, i_proj = 0, j_proj = 0;
  {
    auto* sub = app.add_subcommand("project", "Project a cover to smaller subsets");
    sub->add_option("--cover", cover_path)->required();
    sub->add_option("--s", s, "Kneser targets: subset size of the projection");
    sub->add_option("--i", i_proj, "Intersection targets: new w is w - j, new r is r - i");
    sub->add_option("--j", j_proj);
    on(sub, [&] {
      const fc::BicliqueCover cover = load_cover(rep, cover_path);
      const fc::SearchBudget budget = budget_of(g);
      fc::ProjectionResult pr = cover.target.kind == fc::Family::intersection
                                    ? fc::project_intersection_cover(cover, i_proj, j_proj, budget)
                                    : fc::project_cover(cover, s, budget);
      rep.results()["claimed"] = pr.cover.d;
      rep.results()["theoretical"] = pr.theoretical ? json(*pr.theoretical) : json(nullptr);
      rep.results()["observed"] = pr.observed;
      if (!pr.note.empty()) rep.results()["note"] = pr.note;
      rep.say("projected to " + pr.cover.target.to_string() + ": claimed " + std::to_string(pr.cover.d) +
              ", observed " + std::to_string(pr.observed) + (pr.note.empty() ? "" : " (" + pr.note + ")"));
      const bool ok = check_cover(rep, fc::make_graph(pr.cover.target), pr.cover, pr.cover.d);
      emit(g, rep, fc::io::cover_to_json(pr.cover).dump(1) + "\n");
      return exit_of(ok);
    });
  }

  // push-homomorphism
  {
    auto* sub = app.add_subcommand("push-homomorphism", "Push a cover of KG(t,r) to KG(t-2,r-1)");
    sub->add_option("--cover", cover_path)->required();
    on(sub, [&] {
      const fc::BicliqueCover cover = load_cover(rep, cover_path);
      if (cover.target.kind != fc::Family::kneser) throw fc::ParameterError("push-homomorphism needs a Kneser cover");
      const fc::HomomorphismCheck hc = fc::check_kneser_phi(cover.target.t, cover.target.r);
      rep.results()["homomorphism"] = hc.homomorphism;
      rep.results()["onto_edge"] = hc.onto_edge;
      rep.say(std::string("phi: homomorphism ") + (hc.homomorphism ? "yes" : "NO") + ", onto edges " +
              (hc.onto_edge ? "yes" : "NO"));
      const fc::BicliqueCover pushed = fc::push_cover(cover);
      const bool ok = check_cover(rep, fc::make_graph(pushed.target), pushed, pushed.d);
      emit(g, rep, fc::io::cover_to_json(pushed).dump(1) + "\n");
      return exit_of(ok && hc.homomorphism && hc.onto_edge);
    });
  }

  // hadamard
  int order = 0;
  {
    auto* had = app.add_subcommand("hadamard", "Hadamard matrices and the covers built from them")
                    ->require_subcommand(1);
    auto* gen = had->add_subcommand("gen", "Sylvester matrix of a power-of-two order");
    gen->add_option("--order", order)->required();
    on(gen, [&] {
      int k = 0;
      while (k < 13 && (1 << k) < order) ++k;
      if (order < 1 || (1 << k) != order) throw fc::ParameterError("order must be a power of two up to 4096");
      const fc::HadamardMatrix h = fc::sylvester(k);
      const bool ok = fc::verify_hadamard(h);
      rep.results()["verification"] = {{"pass", ok}, {"order", order}};
      rep.say("Sylvester matrix of order " + std::to_string(order) + (ok ? " verified" : " FAILED"));
      emit(g, rep, fc::io::format_sign_matrix(h));
      return exit_of(ok);
    });

    auto matrix_input = [&](CLI::App* sub) {
      auto* m = sub->add_option("--matrix", matrix_path, "Hadamard matrix file");
      auto* o = sub->add_option("--order", order, "Use the Sylvester matrix of this order");
      m->excludes(o);
    };
    auto obtain = [&]() {
      if (!matrix_path.empty()) return load_matrix(rep, matrix_path);
      int k = 0;
      while (k < 13 && (1 << k) < order) ++k;
      if (order < 4 || (1 << k) != order) throw fc::ParameterError("pass --matrix or a power-of-two --order >= 4");
      return fc::sylvester(k);
    };
    auto* k8d = had->add_subcommand("cover-k8d", "2d-cover of K_{8d} with 4d bicliques");
    matrix_input(k8d);
    on(k8d, [&, obtain] {
      const fc::SignMatrix h = obtain();
      if (!fc::verify_hadamard(h)) throw fc::ParameterError("matrix is not Hadamard");
      const fc::BicliqueCover cover = fc::k8d_cover(h);
      const fc::LabeledGraph gr = fc::make_graph(cover.target);
      const bool ok = check_cover(rep, gr, cover, cover.d);
      const long long lb = fc::bc_lower_bound(gr, cover.d, budget_of(g));
      rep.results()["lower_bound"] = lb;
      rep.say("edge-density lower bound: " + std::to_string(lb));
      emit(g, rep, fc::io::cover_to_json(cover).dump(1) + "\n");
      return exit_of(ok);
    });
    auto* kmm = had->add_subcommand("cover-kmm", "d-cover of K-_{8d-2,8d-2} with 4d bicliques");
    matrix_input(kmm);
    on(kmm, [&, obtain] {
      fc::SignMatrix h = obtain();
      if (!fc::verify_hadamard(h)) throw fc::ParameterError("matrix is not Hadamard");
      if (!h.normalized()) {
        h = fc::normalize(h);
        rep.results()["normalized_input"] = true;
        rep.say("input normalized");
      }
      const fc::BicliqueCover cover = fc::kmm_minus_cover(h);
      const bool ok = check_cover(rep, fc::make_graph(cover.target), cover, cover.d);
      emit(g, rep, fc::io::cover_to_json(cover).dump(1) + "\n");
      return exit_of(ok);
    });
  }

  // construct
  int t = 0, trials = 1;
  std::uint64_t seed = 1;
  std::optional<double> p;
  auto add_bound_row = [&](const fc::BicliqueCover& cover) {
    const fc::SfpcBound b = fc::sfpc_bound(t, r);
    rep.results()["bound"] = b.value;
    rep.table.push_back({std::to_string(t), std::to_string(r), std::to_string(b.value), std::to_string(cover.size())});
  };
  {
    auto* con = app.add_subcommand("construct", "Build covers of KG(t,r)")->require_subcommand(1);
    auto* rnd = con->add_subcommand("random", "Randomized halving-biclique construction");
    rnd->add_option("--t", t)->required();
    rnd->add_option("--r", r)->required();
    rnd->add_option("--seed", seed);
    rnd->add_option("--trials", trials);
    rnd->add_option("--p", p, "Override the selection probability");
    on(rnd, [&] {
      const fc::RandomCoverResult rc = fc::random_cover(t, r, fc::RandomTrialConfig{seed, trials, p});
      rep.doc["rng"] = {{"id", rc.rng}, {"seed", seed}};
      rep.results()["sizes"] = rc.sizes;
      rep.results()["best_trial"] = rc.best_trial;
      rep.results()["p"] = rc.p;
      rep.results()["p_formula"] = rc.p_formula;
      rep.results()["clamped"] = rc.clamped;
      rep.say("best of " + std::to_string(trials) + " trials: " + std::to_string(rc.best.size()) + " bicliques (trial " +
              std::to_string(rc.best_trial) + ", p=" + std::to_string(rc.p) + (rc.clamped ? ", clamped" : "") + ")");
      const bool ok = check_cover(rep, fc::kneser_graph(t, r), rc.best, 1);
      if (t >= 2 * r) add_bound_row(rc.best);
      emit(g, rep, fc::io::cover_to_json(rc.best).dump(1) + "\n");
      return exit_of(ok);
    });
    auto* greedy = con->add_subcommand("greedy", "Deterministic greedy halving cover");
    greedy->add_option("--t", t)->required();
    greedy->add_option("--r", r)->required();
    on(greedy, [&] {
      const fc::BicliqueCover cover = fc::greedy_cover(t, r);
      const bool ok = check_cover(rep, fc::kneser_graph(t, r), cover, 1);
      if (t >= 2 * r) add_bound_row(cover);
      emit(g, rep, fc::io::cover_to_json(cover).dump(1) + "\n");
      return exit_of(ok);
    });
  }

  // search
  bool no_cross_check = false;
  {
    auto* search = app.add_subcommand("search", "Exact searches")->require_subcommand(1);
    auto* ebc = search->add_subcommand("exact-bc", "bc_d of a small graph by branch and bound");
    ebc->add_option("--graph", graph_spec)->required();
    ebc->add_option("--d", d);
    on(ebc, [&] {
      const fc::LabeledGraph gr = load_graph(rep, graph_spec);
      const fc::ExactBcResult res = fc::exact_bc(gr, d, budget_of(g));
      rep.results()["bc"] = res.size;
      rep.results()["d"] = d;
      rep.results()["lower_bound"] = res.lower_bound;
      rep.results()["nodes"] = res.nodes;
      rep.say("bc_" + std::to_string(d) + "(" + gr.family().to_string() + ") = " + std::to_string(res.size) +
              " (root lower bound " + std::to_string(res.lower_bound) + ", " + std::to_string(res.nodes) + " nodes)");
      const bool ok = check_cover(rep, gr, res.witness, d);
      emit(g, rep, fc::io::cover_to_json(res.witness).dump(1) + "\n");
      return exit_of(ok);
    });
    auto* mn = search->add_subcommand("min-n", "N((r,w;d),t) by exhaustive column search");
    mn->add_option("--r", r)->required();
    mn->add_option("--w", w)->required();
    mn->add_option("--d", d);
    mn->add_option("--t", t)->required();
    mn->add_flag("--no-cross-check", no_cross_check, "Skip the biclique-cover cross-check");
    on(mn, [&] {
      const fc::MinNResult res = fc::exact_min_n(r, w, d, t, budget_of(g), !no_cross_check);
      rep.results()["n"] = res.n;
      rep.results()["nodes"] = res.nodes;
      rep.results()["bc_intersection"] = res.bc_intersection ? json(*res.bc_intersection) : json(nullptr);
      if (!res.cross_check_note.empty()) rep.results()["cross_check_note"] = res.cross_check_note;
      rep.say("N((" + std::to_string(r) + "," + std::to_string(w) + ";" + std::to_string(d) + ")," + std::to_string(t) +
              ") = " + std::to_string(res.n) +
              (res.bc_intersection ? ", bc of the intersection graph = " + std::to_string(*res.bc_intersection) : ""));
      const bool ok = check_cff(rep, res.witness, r, w, d) && res.cross_check_agrees();
      emit(g, rep, fc::io::format_cff(res.witness));
      return exit_of(ok);
    });
    auto* cn = search->add_subcommand("covering-number", "Exact minimum vertex cover");
    cn->add_option("--graph", graph_spec)->required();
    on(cn, [&] {
      const fc::LabeledGraph gr = load_graph(rep, graph_spec);
      const fc::VertexCover vc = fc::covering_number(gr, budget_of(g));
      bool ok = true;
      for (const auto& [u, v] : gr.edges())
        ok = ok && (std::binary_search(vc.witness.begin(), vc.witness.end(), u) ||
                    std::binary_search(vc.witness.begin(), vc.witness.end(), v));
      rep.results()["beta"] = vc.size;
      rep.results()["witness"] = vc.witness;
      rep.results()["witness_covers_edges"] = ok;
      rep.say("covering number " + std::to_string(vc.size) + ", witness " + join_ints(vc.witness));
      return exit_of(ok);
    });
  }

  // bound
  {
    auto* bound = app.add_subcommand("bound", "Evaluate bounds")->require_subcommand(1);
    auto* bcl = bound->add_subcommand("bc-lower", "ceil(d |E| / B(G))");
    bcl->add_option("--graph", graph_spec)->required();
    bcl->add_option("--d", d);
    on(bcl, [&] {
      const fc::LabeledGraph gr = load_graph(rep, graph_spec);
      const fc::SearchBudget budget = budget_of(g);
      const long long b = fc::max_biclique_edges(gr, budget);
      const long long lb = fc::bc_lower_bound(gr, d, budget);
      rep.results() = {{"edges", gr.edge_count()}, {"max_biclique_edges", b}, {"d", d}, {"lower_bound", lb}};
      rep.say("bc_" + std::to_string(d) + " >= " + std::to_string(lb) + " (|E|=" + std::to_string(gr.edge_count()) +
              ", B=" + std::to_string(b) + ")");
      return kPass;
    });
    auto* sb = bound->add_subcommand("sfpc", "Length bound from the random halving construction");
    sb->add_option("--t", t)->required();
    sb->add_option("--r", r)->required();
    sb->add_option("--trials", trials, "Also run the construction this many times");
    sb->add_option("--seed", seed);
    on(sb, [&, sb] {
      const fc::SfpcBound b = fc::sfpc_bound(t, r);
      rep.results() = {{"value", b.value},   {"floor", b.floor_value}, {"pool_size", b.pool_size},
                       {"alpha", b.alpha},   {"beta", b.beta},         {"p", b.p},
                       {"valid", b.valid}};
      if (!b.note.empty()) rep.results()["note"] = b.note;
      rep.say("bound " + std::to_string(b.value) + " (p=" + std::to_string(b.p) + (b.valid ? "" : ", " + b.note) + ")");
      std::string achieved = "-";
      bool ok = true;
      if (sb->count("--trials") > 0) {
        const fc::RandomCoverResult rc = fc::random_cover(t, r, fc::RandomTrialConfig{seed, trials, std::nullopt});
        rep.doc["rng"] = {{"id", rc.rng}, {"seed", seed}};
        ok = check_cover(rep, fc::kneser_graph(t, r), rc.best, 1);
        rep.results()["achieved"] = rc.best.size();
        achieved = std::to_string(rc.best.size());
      }
      rep.table.push_back({std::to_string(t), std::to_string(r), std::to_string(b.value), achieved});
      return exit_of(ok);
    });
  }

  // demo
  bool quick = false;
  std::string fixture;
  {
    auto* sub = app.add_subcommand("demo", "Run the end-to-end reproduction checks");
    sub->add_flag("--quick", quick, "Only the first four checks");
    sub->add_option("--fixture", fixture, "Code file replacing the derived (6,5)-code");
    on(sub, [&] {
      fc::pipeline::Options opts;
      opts.quick = quick;
      opts.budget = budget_of(g);
      if (!fixture.empty()) opts.code_fixture = load_code(rep, fixture);
      json checks = json::array();
      bool all = true;
      fc::pipeline::run(opts, true, [&](const fc::pipeline::CheckResult& c) {
        all = all && c.pass;
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds},
                          {"limit_seconds", c.limit_seconds}});
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2fs", c.seconds);
        rep.say(std::string(c.pass ? "PASS " : "FAIL ") + c.name + " [" + buf + "] " + c.detail);
        if (!g.json_out) {
          std::cout << rep.lines.back() << "\n" << std::flush;
          rep.lines.pop_back();
        }
      });
      rep.results()["checks"] = checks;
      return exit_of(all);
    });
  }

  std::vector<std::string> args(argv, argv + argc);
  std::string echo;
  for (std::size_t k = 1; k < args.size(); ++k) echo += (k > 1 ? " " : "") + args[k];
  rep.doc["command"] = echo;
  rep.doc["version"] = FRAMECOVER_VERSION;

  int code = kPass;
  const auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
    code = action ? action() : kUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  } catch (const fc::BudgetError& e) {
    code = kBudget;
    rep.doc["error"] = {{"kind", "budget"}, {"message", e.what()}};
    if (e.best_upper()) rep.doc["error"]["best_upper"] = *e.best_upper();
    rep.say(std::string("budget exceeded: ") + e.what() +
            (e.best_upper() ? " (best upper bound " + std::to_string(*e.best_upper()) + ")" : ""));
  } catch (const fc::ParseError& e) {
    code = kUsage;
    rep.doc["error"] = {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
    rep.say(std::string("parse error: ") + e.what());
  } catch (const fc::ParameterError& e) {
    code = kUsage;
    rep.doc["error"] = {{"kind", "parameter"}, {"message", e.what()}};
    rep.say(std::string("error: ") + e.what());
  } catch (const std::exception& e) {
    code = kUsage;
    rep.doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
    rep.say(std::string("error: ") + e.what());
  }
  rep.doc["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.doc["exit_code"] = code;
  rep.doc["verdict"] = code == kPass ? "pass" : code == kFail ? "fail" : code == kBudget ? "budget" : "error";

  if (g.json_out) {
    std::cout << rep.doc.dump(2) << "\n";
  } else {
    const bool artifact_on_stdout = g.out.empty() && rep.doc.contains("artifact") && code != kUsage && !g.table;
    std::ostream& os = (code == kUsage || artifact_on_stdout) ? std::cerr : std::cout;
    for (const auto& line : rep.lines) os << line << "\n";
    if (g.table && !rep.table.empty()) {
      std::printf("%4s %4s %12s %10s\n", "t", "r", "bound", "achieved");
      for (const auto& row : rep.table)
        std::printf("%4s %4s %12s %10s\n", row[0].c_str(), row[1].c_str(), row[2].c_str(), row[3].c_str());
    }
    if (artifact_on_stdout) std::cout << rep.doc["artifact"].get<std::string>();
  }
  return code;
}
