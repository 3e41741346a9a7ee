#include "modelkit/galois.hpp"

#include <sstream>

namespace modelkit {

Result<GaloisConnection> GaloisConnection::make(LatticePtr lower, LatticePtr upper,
                                                std::vector<Obj> left,
                                                std::vector<Obj> right) {
  if (static_cast<int>(left.size()) != lower->size() ||
      static_cast<int>(right.size()) != upper->size())
    return Rejection{"table size mismatch", ""};
  for (Obj v : left)
    if (v < 0 || v >= upper->size()) return Rejection{"left table out of range", ""};
  for (Obj v : right)
    if (v < 0 || v >= lower->size()) return Rejection{"right table out of range", ""};
  for (int x = 0; x < lower->size(); ++x)
    for (int y = 0; y < lower->size(); ++y)
      if (lower->leq(x, y) && !upper->leq(left[x], left[y]))
        return Rejection{"left adjoint not monotone",
                         "at '" + lower->label(x) + "' <= '" + lower->label(y) + "'"};
  for (int x = 0; x < upper->size(); ++x)
    for (int y = 0; y < upper->size(); ++y)
      if (upper->leq(x, y) && !lower->leq(right[x], right[y]))
        return Rejection{"right adjoint not monotone",
                         "at '" + upper->label(x) + "' <= '" + upper->label(y) + "'"};
  for (int x = 0; x < lower->size(); ++x)
    for (int y = 0; y < upper->size(); ++y)
      if (upper->leq(left[x], y) != lower->leq(x, right[y]))
        return Rejection{"adjunction law fails",
                         "at ('" + lower->label(x) + "', '" + upper->label(y) + "')"};
  GaloisConnection g;
  g.lower = std::move(lower);
  g.upper = std::move(upper);
  g.left = std::move(left);
  g.right = std::move(right);
  return g;
}

MapClass preimage(const GaloisConnection& g, Side side, const MapClass& k) {
  const LatticePtr& dom = g.domain(side);
  const LatticePtr& cod = g.codomain(side);
  if (!k.lattice()->same_order_as(*cod))
    throw std::invalid_argument("preimage: class lives on the wrong lattice");
  MapClass out(dom);
  for (int i = 0; i < dom->map_count(); ++i) {
    const auto& f = dom->map_at(i);
    LatticeMap img{g.apply(side, f.src), g.apply(side, f.tgt)};
    if (k.contains(img)) out.insert(i);
  }
  return out;
}

GaloisConnection parse_adjunction(const std::string& text, const std::string& name) {
  // Split into the two lattice blocks and the left:/right: tables.
  std::vector<std::string> blocks(2);
  std::string left_lines, right_lines;
  int block = -1;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (size_t h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::string line = raw;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    if (line.rfind("objects:", 0) == 0) {
      ++block;
      if (block > 1) throw ParseError("adjunction file has more than two lattice blocks");
    }
    if (line.rfind("left:", 0) == 0) {
      left_lines += line.substr(5) + ",";
    } else if (line.rfind("right:", 0) == 0) {
      right_lines += line.substr(6) + ",";
    } else {
      if (block < 0) throw ParseError("adjunction file must start with a lattice block");
      blocks[block] += line + "\n";
    }
  }
  if (block < 1) throw ParseError("adjunction file needs two lattice blocks");
  LatticePtr lower = parse_lattice(blocks[0], name + ".lower");
  LatticePtr upper = parse_lattice(blocks[1], name + ".upper");

  auto parse_table = [&](const std::string& lines, const Lattice& dom,
                         const Lattice& cod, const char* what) {
    std::vector<Obj> table(dom.size(), -1);
    std::istringstream ls(lines);
    std::string entry;
    while (std::getline(ls, entry, ',')) {
      size_t b2 = entry.find_first_not_of(" \t\r");
      if (b2 == std::string::npos) continue;
      size_t e2 = entry.find_last_not_of(" \t\r");
      entry = entry.substr(b2, e2 - b2 + 1);
      size_t p = entry.find("->");
      if (p == std::string::npos)
        throw ParseError(std::string(what) + " entry '" + entry + "' is not 'x->y'");
      std::string xs = entry.substr(0, p), ys = entry.substr(p + 2);
      while (!xs.empty() && xs.back() == ' ') xs.pop_back();
      while (!ys.empty() && ys.front() == ' ') ys.erase(0, 1);
      auto x = dom.object(xs);
      if (!x) throw ParseError(std::string(what) + ": unknown object '" + xs + "'");
      auto y = cod.object(ys);
      if (!y) throw ParseError(std::string(what) + ": unknown object '" + ys + "'");
      if (table[*x] != -1)
        throw ParseError(std::string(what) + ": object '" + xs + "' mapped twice");
      table[*x] = *y;
    }
    for (int i = 0; i < dom.size(); ++i)
      if (table[i] == -1)
        throw ParseError(std::string(what) + ": no image for object '" + dom.label(i) + "'");
    return table;
  };

  auto left = parse_table(left_lines, *lower, *upper, "left");
  auto right = parse_table(right_lines, *upper, *lower, "right");
  auto g = GaloisConnection::make(lower, upper, std::move(left), std::move(right));
  if (!g.ok()) throw ParseError("invalid adjunction: " + g.rejection().to_string());
  return *g;
}

}  // namespace modelkit
