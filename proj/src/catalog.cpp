#include "modelkit/catalog.hpp"

namespace modelkit {

namespace {

LatticePtr chain(const std::string& name, int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Obj, Obj>> rel;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Lattice::make(name, std::move(labels), rel);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 5; ++n)
    out.push_back({"c" + std::to_string(n), chain("c" + std::to_string(n), n),
                   "chain with " + std::to_string(n) + (n == 1 ? " object" : " objects")});
  out.push_back({"b2",
                 Lattice::make("b2", {"bot", "a", "b", "top"},
                               {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                 "Boolean lattice on two atoms"});
  out.push_back({"b3",
                 Lattice::make("b3",
                               {"bot", "x", "y", "z", "xy", "xz", "yz", "top"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6},
                                {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}}),
                 "Boolean lattice on three atoms"});
  out.push_back({"n5",
                 Lattice::make("n5", {"bot", "a", "b", "c", "top"},
                               {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}),
                 "pentagon: bot<=a<=b<=top alongside bot<=c<=top"});
  out.push_back({"m3",
                 Lattice::make("m3", {"bot", "a", "b", "c", "top"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
                 "diamond with three incomparable atoms"});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

LatticePtr catalog_lattice(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e.lattice;
  return nullptr;
}

}  // namespace modelkit
