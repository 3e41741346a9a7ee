#pragma once

#include <optional>
#include <vector>

#include "modelkit/factorisation.hpp"
#include "modelkit/lattice.hpp"
#include "modelkit/report.hpp"
#include "modelkit/result.hpp"

namespace modelkit {

/* A triple (C, W, F) of map classes on one lattice. */
struct ModelStructure {
  MapClass cof, weq, fib;

  const LatticePtr& lattice() const { return cof.lattice(); }
  MapClass tcof() const { return cof & weq; }
  MapClass tfib() const { return fib & weq; }
  FactorisationSystem tcof_fib() const { return {tcof(), fib}; }
  FactorisationSystem cof_tfib() const { return {cof, tfib()}; }

  friend bool operator==(const ModelStructure& a, const ModelStructure& b) {
    return a.cof == b.cof && a.weq == b.weq && a.fib == b.fib;
  }
  friend bool operator!=(const ModelStructure& a, const ModelStructure& b) {
    return !(a == b);
  }
};

/* W closed under two-of-three on composable pairs; (C n W, F) and (C, F n W)
 * both pass is_wfs. Retract closure is automatic on a skeletal poset (the
 * only isomorphisms are identities) and is not re-checked here. */
Check is_model_structure(const ModelStructure& m);

/* Recovers the triple from its two factorisation systems: fs1 = (C n W, F),
 * fs2 = (C, F n W). W is read off by factoring each map through fs1 and
 * testing the right part against fs2.right. Rejections name the failed
 * condition with a witness. */
Result<ModelStructure> model_from_wfs_pair(const FactorisationSystem& fs1,
                                           const FactorisationSystem& fs2);

/* Census of all model structures, sorted by (C, W, F) bit patterns. */
std::vector<ModelStructure> enumerate_model_structures(const LatticePtr& lat,
                                                       const EnumOptions& opts = {});

/* Fibrant replacement r (middle of x -> top through (C n W, F)) and cofibrant
 * replacement q (middle of bottom -> x through (C, F n W)) for every object. */
struct Replacements {
  std::vector<Obj> r, q;
  Obj qr(Obj x) const { return q[r[x]]; }
  LatticeMap unit(Obj x) const { return {x, r[x]}; }    // x -> r(x)
  LatticeMap counit(Obj x) const { return {q[x], x}; }  // q(x) -> x
};
Replacements replacements(const ModelStructure& m);

ObjectSet fibrant_objects(const ModelStructure& m);
ObjectSet cofibrant_objects(const ModelStructure& m);
ObjectSet bifibrant_objects(const ModelStructure& m);

/* Two objects are weakly equivalent exactly when their fibrant-cofibrant
 * replacements coincide; a map is a weak equivalence exactly when its
 * endpoints are. Computed from the replacement tables, independently of W. */
bool weq_via_replacement(const ModelStructure& m, const Replacements& rep,
                         const LatticeMap& f);

struct PropernessWitness {
  LatticeMap weq, along;
};
struct PropernessReport {
  bool ok = true;
  std::optional<PropernessWitness> witness;
};
/* Weak equivalences stable under pushout along cofibrations. */
PropernessReport is_left_proper(const ModelStructure& m);
/* Weak equivalences stable under pullback along fibrations. */
PropernessReport is_right_proper(const ModelStructure& m);

/* (all, identities, all): the structure whose weak equivalences are only the
 * identities. */
ModelStructure discrete_structure(const LatticePtr& lat);
/* (identities, all, all): everything is a weak equivalence. */
ModelStructure codiscrete_structure(const LatticePtr& lat);

/* Transport across the order-dual lattice: maps reverse, C and F swap. */
MapClass dual_class(const MapClass& k, const LatticePtr& dual_lat);
ObjectSet dual_objects(const ObjectSet& s, const LatticePtr& dual_lat);
ModelStructure dual_structure(const ModelStructure& m, const LatticePtr& dual_lat);

/*
 * verify prop5: checks, for every structure in the lattice's census, the
 * seven replacement-functor facts — maps between (co)fibrant objects are
 * (co)fibrations; Q and R preserve and reflect weak equivalences; R
 * preserves cofibrations and collapses acyclic ones (Q dually with
 * fibrations); weak equivalences between bifibrant objects are identities;
 * the two replacement composites agree; and a map is a weak equivalence
 * exactly when its replacement endpoints coincide.
 */
Report verify_prop5(const LatticePtr& lat, const EnumOptions& opts = {});

}  // namespace modelkit
