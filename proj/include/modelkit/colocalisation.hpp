#pragma once

#include "modelkit/localisation.hpp"

namespace modelkit {

/* Greatest-member-below counterpart of a Reflection: coreflector[x] is the
 * greatest member of the subset below x, and the counit is the comparison
 * coreflector[x] <= x. */
struct Coreflection {
  LatticePtr ambient;
  ObjectSet subobjects;
  std::vector<Obj> coreflector;

  LatticeMap counit(Obj x) const { return {coreflector[x], x}; }
};

Result<Coreflection> make_coreflection(const LatticePtr& lat, const ObjectSet& subset);

/* A coreflective subset of the cofibrant objects that is closed under weak
 * equivalence of cofibrant objects. */
struct Colocality {
  ModelStructure base;
  Coreflection coreflection;

  const ObjectSet& colocals() const { return coreflection.subobjects; }
};

Result<Colocality> is_colocality(const ModelStructure& base, const ObjectSet& subset);

/* Does the coreflector preserve weak equivalences? */
Check is_homotopical(const Colocality& coloc);

/* The colocalisation with the given colocal objects: same fibrations, more
 * weak equivalences. Requires is_homotopical. */
ModelStructure colocalise_from_colocality(const Colocality& coloc);

/* All colocalisations of the base: census members with the same fibrations
 * whose acyclic fibrations contain the base ones, ordered by inclusion of
 * acyclic fibrations. */
std::vector<ModelStructure> enumerate_colocalisations(const ModelStructure& base,
                                                      const EnumOptions& opts = {});
/* Same filter over an already-computed census of the base's lattice. */
std::vector<ModelStructure> colocalisations_from_census(std::vector<ModelStructure> census,
                                                        const ModelStructure& base);

/* Maps that every generator in k sees as an equivalence through the derived
 * hom, and the objects that see all such maps. */
MapClass k_colocal_equivalences(const ModelStructure& m, const ObjectSet& k);
ObjectSet k_colocal_objects(const ModelStructure& m, const ObjectSet& k);

/* Colocalise a right proper structure at a set of generator objects. */
ModelStructure k_colocalise(const ModelStructure& m, const ObjectSet& k);

/* Census-scale checks for the colocalisation story, run on the order-dual. */
Report verify_thm2(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts = {});
Report verify_thm4(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts = {});
Report verify_thm6(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts = {});

}  // namespace modelkit
