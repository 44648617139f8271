#include "framecover/budget.hpp"

#include <cstdlib>
#include <sstream>

#include "framecover/errors.hpp"

namespace framecover {

namespace {

std::int64_t parse_count(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 0) throw ParameterError("bad budget value '" + s + "'");
  return v;
}

}  // namespace

SearchBudget SearchBudget::parse(const std::string& text, SearchBudget base) {
  if (text.empty()) return base;
  if (text.find('=') == std::string::npos) {
    base.max_edges = static_cast<int>(parse_count(text));
    return base;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("bad budget item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::int64_t v = parse_count(item.substr(eq + 1));
    if (key == "edges")
      base.max_edges = static_cast<int>(v);
    else if (key == "vertices")
      base.max_vertices = static_cast<int>(v);
    else if (key == "nodes")
      base.max_nodes = v;
    else
      throw ParameterError("unknown budget key '" + key + "'");
  }
  return base;
}

SearchBudget SearchBudget::parse(const std::string& text) { return parse(text, SearchBudget{}); }

SearchBudget SearchBudget::from_env() {
  const char* env = std::getenv("FRAMECOVER_BUDGET");
  return env ? parse(env) : SearchBudget{};
}

}  // namespace framecover
