#pragma once

#include <string>
#include <vector>

#include "modelkit/lattice.hpp"

namespace modelkit {

struct CatalogEntry {
  std::string name;
  LatticePtr lattice;
  std::string notes;
};

/* The built-in lattices, in listing order. */
const std::vector<CatalogEntry>& catalog();

/* nullptr when the name is not in the catalog. */
LatticePtr catalog_lattice(const std::string& name);

}  // namespace modelkit
