#pragma once

#include "modelkit/lattice.hpp"
#include "modelkit/result.hpp"

namespace modelkit {

enum class Side { Left, Right };

/*
 * A monotone adjoint pair: left: lower -> upper, right: upper -> lower with
 * left(x) <= y exactly when x <= right(y). Validated on construction.
 */
struct GaloisConnection {
  LatticePtr lower, upper;
  std::vector<Obj> left;
  std::vector<Obj> right;

  static Result<GaloisConnection> make(LatticePtr lower, LatticePtr upper,
                                       std::vector<Obj> left, std::vector<Obj> right);

  const LatticePtr& domain(Side s) const { return s == Side::Left ? lower : upper; }
  const LatticePtr& codomain(Side s) const { return s == Side::Left ? upper : lower; }
  Obj apply(Side s, Obj x) const { return s == Side::Left ? left[x] : right[x]; }
};

/* {f in domain(side) : the image pair of f lies in k}. k must live on the
 * codomain of the chosen adjoint. */
MapClass preimage(const GaloisConnection& g, Side side, const MapClass& k);

/*
 * Text format for adjunctions: two lattice blocks (each as in parse_lattice,
 * the first is the lower lattice, the second the upper), then tables
 *   left: x->y, ...      (one entry per lower object)
 *   right: y->x, ...     (one entry per upper object)
 * The adjunction law is validated on load.
 */
GaloisConnection parse_adjunction(const std::string& text, const std::string& name);

}  // namespace modelkit
