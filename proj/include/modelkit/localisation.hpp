#pragma once

#include <string>
#include <vector>

#include "modelkit/model.hpp"
#include "modelkit/report.hpp"
#include "modelkit/transfer.hpp"

namespace modelkit {

/* A reflective subposet of a lattice: every object has a least member of
 * the subset above it, recorded in the reflector table. */
struct Reflection {
  LatticePtr ambient;
  ObjectSet subobjects;
  std::vector<Obj> reflector;
  LatticeMap unit(Obj x) const { return {x, reflector[x]}; }
};
/* Rejects with a witness object when some object has no least member of the
 * subset above it (equivalently: the subset is not meet-closed or misses
 * the top). */
Result<Reflection> make_reflection(const LatticePtr& lat, const ObjectSet& subset);

/*
 * A reflective subset of the fibrant objects of a base structure that is
 * invariant under weak equivalence of fibrant objects. The structure can be
 * localised onto it once the reflector preserves weak equivalences.
 */
struct Locality {
  ModelStructure base;
  Reflection reflection;
  const ObjectSet& locals() const { return reflection.subobjects; }
};
Result<Locality> is_locality(const ModelStructure& base, const ObjectSet& subset);

/* Whether the reflector carries every weak equivalence of the base to
 * another one; the failing map is named otherwise. */
Check is_homotopical(const Locality& loc);

/*
 * The base structure cut down to the subposet of local objects: every map
 * is a fibration, the weak equivalences are the maps with equal cofibrant
 * replacements, and the cofibrations lift against those. The result is
 * checked to coincide with the transfer of the base along the inclusion.
 */
struct RestrictedStructure {
  LatticePtr sub;                  // the subposet as a lattice of its own
  std::vector<Obj> to_ambient;     // ambient object for each subposet object
  std::vector<Obj> from_ambient;   // subposet index, -1 for non-members
  ModelStructure structure;        // lives on sub
};
RestrictedStructure restrict_to_locality(const Locality& loc);

/* The adjunction reflector -| inclusion between the ambient lattice and the
 * subposet of locals. */
GaloisConnection reflector_connection(const RestrictedStructure& rs, const Locality& loc);

/*
 * Requires is_homotopical(loc). Restricts the base to the locals, transfers
 * the restriction back along the reflector, and mixes the result with the
 * base keeping the base cofibrations. The output is checked to have the
 * base cofibrations, fibrant objects exactly the locals, and weak
 * equivalences exactly the maps whose local-reflected cofibrant
 * replacements coincide.
 */
ModelStructure localise_from_locality(const Locality& loc);

/* All census structures with the same cofibrations and at least the acyclic
 * cofibrations of the base, ordered by how many acyclic cofibrations they
 * add. */
std::vector<ModelStructure> enumerate_localisations(const ModelStructure& base,
                                                    const EnumOptions& opts = {});
/* Same filter over an already-computed census of the base's lattice. */
std::vector<ModelStructure> localisations_from_census(std::vector<ModelStructure> census,
                                                      const ModelStructure& base);

/* All subsets of `within` whose members each admit a least upper member,
 * in increasing subset-mask order over the members of `within`. Scans are
 * capped at 24 members unless forced. */
std::vector<ObjectSet> reflective_subposets(const LatticePtr& lat, const ObjectSet& within,
                                            bool force = false);

/* The hom-set E(Q(a), R(b)) as a truth value. */
bool derived_hom(const ModelStructure& m, Obj a, Obj b);

/* Objects that see every map of s as a derived-hom bijection. */
ObjectSet s_local_objects(const ModelStructure& m, const MapClass& s);
/* Maps seen as a derived-hom bijection by every member of the object set. */
MapClass local_equivalences_of(const ModelStructure& m, const ObjectSet& locals);
/* Maps seen as a derived-hom bijection by every s-local object. */
MapClass s_local_equivalences(const ModelStructure& m, const MapClass& s);

/*
 * Requires a left proper base. Forms the locality on the s-local fibrant
 * objects and localises onto it; the result is checked to have fibrant
 * objects the s-local fibrant ones and weak equivalences the s-local
 * equivalences.
 */
ModelStructure s_localise(const ModelStructure& m, const MapClass& s);

/*
 * verify thm1: the fibrant-object assignment is an order-reversing
 * bijection from the localisations of the base onto its homotopical
 * localities, with localise_from_locality as two-sided inverse.
 */
Report verify_thm1(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts = {});

/*
 * verify thm3 (base must be left proper): the bifibrant-object assignment
 * is an order-reversing bijection from the localisations of the base onto
 * the reflective subposets of its bifibrant core. Also re-checks the
 * supporting facts: every locality is homotopical here; localities
 * correspond to those subposets through intersection with the cofibrant
 * objects, with the fibrant preimage of the cofibrant replacement as
 * inverse; cofibrant replacement preserves and reflects locality, units are
 * cofibrations, reflectors preserve cofibrations; reflected pushouts of
 * weak equivalences between fibrant objects land on the reflected target;
 * the restriction to the fibrant subposet stays left proper; and every
 * localisation of the base is left proper.
 */
Report verify_thm3(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts = {});

/*
 * verify thm5 (base must be left proper): localising at the weak
 * equivalences of each enumerated localisation reproduces that
 * localisation exactly.
 */
Report verify_thm5(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts = {});

}  // namespace modelkit
