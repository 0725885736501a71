#include <algorithm>
#include <numeric>
#include <sstream>

#include "cosmo/engine.hpp"

namespace cosmo {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_relationship_dot(const RelationshipMap& map,
                                    const std::vector<std::vector<int>>& distances) {
  std::vector<std::size_t> order(map.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return map.names()[a] < map.names()[b]; });

  std::ostringstream out;
  out << "digraph relationships {\n";
  for (auto i : order) out << "  " << quoted(map.names()[i]) << ";\n";
  for (auto i : order) {
    for (auto j : order) {
      if (i == j) continue;
      const Relation& r = map.at(i, j);
      if (!r.discovered) continue;
      out << "  " << quoted(map.names()[i]) << " -> " << quoted(map.names()[j])
          << " [label=\"d=" << distances.at(i).at(j) << ", u=" << r.understanding
          << ", a=" << r.appreciation << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cosmo
