#pragma once

#include <vector>

#include "modelkit/lattice.hpp"
#include "modelkit/result.hpp"

namespace modelkit {

/* A candidate (left, right) pair of map classes on one lattice. */
struct FactorisationSystem {
  MapClass left, right;
  const LatticePtr& lattice() const { return left.lattice(); }
  friend bool operator==(const FactorisationSystem& a, const FactorisationSystem& b) {
    return a.left == b.left && a.right == b.right;
  }
};

/* Verdict of is_wfs: ok, or the first violated condition plus a witness. */
Check is_wfs(const FactorisationSystem& fs);

struct Factorisation {
  Obj mid;
  LatticeMap left_part, right_part;
};

/* The unique (left, right) factorisation of f. Requires fs to pass is_wfs;
 * throws InternalError when the middle object is missing or ambiguous. */
Factorisation factor(const FactorisationSystem& fs, const LatticeMap& f);

struct EnumOptions {
  int jobs = 1;
  bool force = false;  // lifts the 24-non-identity-map guardrail
};

/* All weak factorisation systems on the lattice, deduplicated and sorted by
 * the bit pattern of the left class. Every subset of non-identity maps is
 * closed under rlp/llp, so the scan is complete. Throws std::invalid_argument
 * when the lattice exceeds the guardrail and force is not set. */
std::vector<FactorisationSystem> enumerate_ofs(const LatticePtr& lat,
                                               const EnumOptions& opts = {});

}  // namespace modelkit
