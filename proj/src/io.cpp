#include "framecover/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "framecover/errors.hpp"

namespace framecover::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write '" + path + "'");
  out << contents;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string s;
  int n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    lines.push_back({n, s});
  }
  while (!lines.empty() && lines.back().text.find_first_not_of(" \t") == std::string::npos) lines.pop_back();
  return lines;
}

std::vector<std::string> parse_binary_matrix(const std::string& text, const char* what) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(std::string("empty ") + what + " file", 1, 1);
  std::istringstream header(lines[0].text);
  long rows = -1, cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || (header >> extra) || rows < 0 || cols < 0)
    throw ParseError(std::string("expected header '<rows> <cols>' for ") + what, lines[0].number, 1);
  if (static_cast<long>(lines.size()) - 1 != rows)
    throw ParseError("header declares " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1),
                     lines.empty() ? 1 : lines.back().number, 1);
  std::vector<std::string> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    std::string row = l.text;
    while (!row.empty() && (row.back() == ' ' || row.back() == '\t')) row.pop_back();
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != '0' && row[c] != '1') throw ParseError("expected '0' or '1'", l.number, static_cast<int>(c) + 1);
    if (static_cast<long>(row.size()) != cols)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, header declares " + std::to_string(cols),
                       l.number, static_cast<int>(row.size()) + 1);
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_rows(std::size_t rows, std::size_t cols, const std::vector<BitVec>& bits) {
  std::string out = std::to_string(rows) + " " + std::to_string(cols) + "\n";
  for (const auto& b : bits) out += b.to_string() + "\n";
  return out;
}

}  // namespace

BinaryCode parse_code(const std::string& text) {
  auto rows = parse_binary_matrix(text, "code");
  try {
    return BinaryCode::from_strings(rows);
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format_code(const BinaryCode& code) {
  return format_rows(code.size(), code.length(), code.rows());
}

CoverFreeFamily parse_cff(const std::string& text) {
  const std::vector<Line> lines = content_lines(text);
  auto rows = parse_binary_matrix(text, "cover-free family");
  if (rows.empty()) throw ParseError("a family needs at least one block", lines[0].number, 1);
  // the header fixes the width even when every row is empty
  std::istringstream header(lines[0].text);
  int t = 0, n = 0;
  header >> t >> n;
  std::vector<BitVec> blocks;
  for (const auto& r : rows) blocks.push_back(BitVec::from_string(r));
  return {n, std::move(blocks)};
}

std::string format_cff(const CoverFreeFamily& f) { return format_rows(f.size(), f.points(), f.blocks()); }

SignMatrix parse_sign_matrix(const std::string& text) {
  std::vector<std::string> rows;
  for (const Line& l : content_lines(text)) {
    std::string row = l.text;
    while (!row.empty() && (row.back() == ' ' || row.back() == '\t')) row.pop_back();
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != '+' && row[c] != '-') throw ParseError("expected '+' or '-'", l.number, static_cast<int>(c) + 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix file", 1, 1);
  try {
    return SignMatrix::from_strings(rows);
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format_sign_matrix(const SignMatrix& h) {
  std::string out;
  for (const auto& row : h.to_strings()) out += row + "\n";
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
}

namespace {

template <class F>
auto schema(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ") + what + " document: " + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(std::string("bad ") + what + " document: " + e.what());
  }
}

std::vector<int> ids_of_mask(const SubsetMask& s) { return s.elements(); }

}  // namespace

json family_to_json(const FamilyTag& tag) {
  switch (tag.kind) {
    case Family::kneser:
      return {{"kind", "kneser"}, {"t", tag.t}, {"r", tag.r}};
    case Family::intersection:
      return {{"kind", "inter"}, {"t", tag.t}, {"r", tag.r}, {"w", tag.w}};
    case Family::complete:
      return {{"kind", "kn"}, {"n", tag.n}};
    case Family::kmm:
      return {{"kind", "kmm"}, {"m", tag.n}};
    case Family::custom:
      return {{"kind", "custom"}, {"n", tag.n}};
  }
  return {};
}

FamilyTag family_from_json(const json& j) {
  return schema("family", [&] {
    if (j.is_string()) return FamilyTag::parse(j.get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "kneser") return FamilyTag::kneser(j.at("t").get<int>(), j.at("r").get<int>());
    if (kind == "inter") return FamilyTag::intersection(j.at("t").get<int>(), j.at("r").get<int>(), j.at("w").get<int>());
    if (kind == "kn") return FamilyTag::complete(j.at("n").get<int>());
    if (kind == "kmm") return FamilyTag::kmm(j.at("m").get<int>());
    if (kind == "custom") return FamilyTag::custom(j.at("n").get<int>());
    throw ParseError("unknown graph family kind '" + kind + "'");
  });
}

json graph_to_json(const LabeledGraph& g, bool explicit_lists) {
  json j;
  j["family"] = family_to_json(g.family());
  if (explicit_lists || g.family().kind == Family::custom) {
    json vs = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(v);
    json es = json::array();
    for (const auto& [u, v] : g.edges()) es.push_back({u, v});
    j["vertices"] = std::move(vs);
    j["edges"] = std::move(es);
  }
  return j;
}

LabeledGraph graph_from_json(const json& j) {
  return schema("graph", [&] {
    const FamilyTag tag = family_from_json(j.at("family"));
    if (tag.kind == Family::custom) {
      const int n = static_cast<int>(j.at("vertices").size());
      std::vector<int> ids = j.at("vertices").get<std::vector<int>>();
      for (int i = 0; i < n; ++i)
        if (ids[i] != i) throw ParseError("custom graph vertices must be 0..n-1 in order");
      return custom_graph(n, j.at("edges").get<std::vector<Edge>>());
    }
    LabeledGraph g = make_graph(tag);
    if (j.contains("edges")) {
      std::vector<Edge> es = j.at("edges").get<std::vector<Edge>>();
      for (auto& [u, v] : es)
        if (u > v) std::swap(u, v);
      std::sort(es.begin(), es.end());
      if (es != g.edges()) throw ParseError("edge list does not match the " + tag.to_string() + " family");
    }
    return g;
  });
}

json cover_to_json(const BicliqueCover& cover) {
  json j;
  j["graph"] = family_to_json(cover.target);
  j["d"] = cover.d;
  json list = json::array();
  std::optional<LabeledGraph> g;
  for (const auto& entry : cover.bicliques) {
    if (const auto* gp = std::get_if<GroundPairBiclique>(&entry)) {
      list.push_back({{"A", ids_of_mask(gp->a)}, {"B", ids_of_mask(gp->b)}, {"r", gp->r}});
      continue;
    }
    Biclique b = std::get<Biclique>(entry);
    auto vertex = [&](int v) -> json {
      if (!cover.target.subset_labeled()) return json::array({v});
      if (!g) g = make_graph(cover.target);
      return ids_of_mask(g->label(v).subset);
    };
    if (cover.target.kind == Family::intersection) {
      if (!g) g = make_graph(cover.target);
      const bool x_rside = std::any_of(b.x.begin(), b.x.end(), [&](int v) { return g->label(v).side == 1; }) ||
                           std::any_of(b.y.begin(), b.y.end(), [&](int v) { return g->label(v).side == 0; });
      if (x_rside) std::swap(b.x, b.y);
    }
    json xs = json::array(), ys = json::array();
    for (int v : b.x) xs.push_back(vertex(v));
    for (int v : b.y) ys.push_back(vertex(v));
    list.push_back({{"X", std::move(xs)}, {"Y", std::move(ys)}});
  }
  j["bicliques"] = std::move(list);
  return j;
}

BicliqueCover cover_from_json(const json& j) {
  return schema("cover", [&] {
    BicliqueCover cover;
    cover.target = family_from_json(j.at("graph"));
    cover.d = j.at("d").get<int>();
    if (cover.d < 1) throw ParseError("cover multiplicity d must be >= 1");
    std::optional<LabeledGraph> g;
    const int t = cover.target.t;
    for (const auto& item : j.at("bicliques")) {
      if (item.contains("A")) {
        const auto a = item.at("A").get<std::vector<int>>();
        const auto b = item.at("B").get<std::vector<int>>();
        cover.bicliques.emplace_back(
            make_ground_pair(SubsetMask::from_elements(t, a), SubsetMask::from_elements(t, b), item.at("r").get<int>()));
        continue;
      }
      Biclique bc;
      for (int side = 0; side < 2; ++side) {
        auto& out = side == 0 ? bc.x : bc.y;
        for (const auto& vj : item.at(side == 0 ? "X" : "Y")) {
          const auto elems = vj.get<std::vector<int>>();
          if (!cover.target.subset_labeled()) {
            if (elems.size() != 1) throw ParseError("vertices of this family are written as [id]");
            out.push_back(elems[0]);
            continue;
          }
          if (!g) g = make_graph(cover.target);
          const int tag_side = cover.target.kind == Family::intersection ? side : 0;
          const auto id = g->vertex_of(SubsetMask::from_elements(t, elems), tag_side);
          if (!id) throw ParseError("vertex " + vj.dump() + " is not in " + cover.target.to_string());
          out.push_back(*id);
        }
      }
      cover.bicliques.emplace_back(std::move(bc));
    }
    return cover;
  });
}

}  // namespace framecover::io
