#include "gasket/vertex.hpp"

namespace gasket {

VertexId VertexId::canonical(Word w, int corner) {
  if (corner < 1 || corner > 3) throw config_error("corner outside {1,2,3}");
  // Strip trailing letters equal to the corner: F_i fixes p_i.
  while (!w.empty() && w.back() == corner) w.pop_back();
  VertexId a{std::move(w), corner};
  if (a.word.empty()) return a;
  const VertexId b = a.twin();
  return b < a ? b : a;
}

VertexId VertexId::twin() const {
  if (word.empty()) return *this;
  // (u·j, i) and (u·i, j) name the same midpoint vertex.
  const int j = word.back();
  Word u = word;
  u.pop_back();
  u.push_back(static_cast<std::uint8_t>(corner));
  return VertexId{std::move(u), j};
}

std::string VertexId::str() const {
  return word.str() + ":" + std::to_string(corner);
}

VertexId VertexId::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw config_error("vertex '" + text + "' is not word:corner");
  const std::string wpart = text.substr(0, colon);
  const std::string cpart = text.substr(colon + 1);
  if (cpart.size() != 1 || cpart[0] < '1' || cpart[0] > '3')
    throw config_error("vertex corner must be 1, 2 or 3");
  return canonical(Word::parse(wpart), cpart[0] - '0');
}

std::pair<int, int> EdgeId::side_corners(Side s) {
  switch (s) {
    case Side::l:
      return {1, 3};
    case Side::r:
      return {2, 3};
    default:
      return {1, 2};
  }
}

VertexId EdgeId::endpoint_a() const {
  return VertexId::canonical(cell, side_corners(side).first);
}

VertexId EdgeId::endpoint_b() const {
  return VertexId::canonical(cell, side_corners(side).second);
}

std::array<EdgeId, 2> EdgeId::children() const {
  const auto [a, b] = side_corners(side);
  return {EdgeId{cell.appended(static_cast<std::uint8_t>(a)), side},
          EdgeId{cell.appended(static_cast<std::uint8_t>(b)), side}};
}

std::string EdgeId::str() const {
  return cell.str() + "/" + to_string(side);
}

Eigen::Vector2d vertex_position(Geometry g, const VertexId& v) {
  const auto& maps = ifs_for(g);
  return fold_word_map(maps, v.word)(
      base_corners(g)[static_cast<std::size_t>(v.corner - 1)]);
}

Word vertex_address_prefix(const VertexId& v, int depth) {
  if (depth < 0) throw config_error("address depth must be nonnegative");
  Word w;
  for (int i = 0; i < depth; ++i) {
    w.push_back(i < v.word.length() ? v.word.at(i)
                                    : static_cast<std::uint8_t>(v.corner));
  }
  return w;
}

}  // namespace gasket
