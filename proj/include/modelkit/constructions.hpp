#pragma once

#include "modelkit/colocalisation.hpp"

namespace modelkit {

/* Does the reflector commute with meets against members of the subset,
 * R(x /\ b) == R(x) /\ b? */
Check is_semi_left_exact(const Reflection& refl);

/* Does the coreflector commute with joins against members of the subset,
 * Q(x \/ b) == Q(x) \/ b? */
Check is_semi_right_exact(const Coreflection& coref);

/*
 * verify lemma1: for every reflective subset of the lattice, the
 * localisation of the discrete structure onto it is right proper exactly
 * when the reflection commutes with meets into the subset.
 */
Report verify_lemma1(const LatticePtr& lat, const EnumOptions& opts = {});

/*
 * Localise the discrete structure onto the reflective subset `fibrants`
 * (whose reflection must commute with meets into it), then colocalise at
 * the coreflective-in-`fibrants` subset `bifibrants`. The result has
 * fibrant objects `fibrants`, bifibrant objects `bifibrants`, and cofibrant
 * objects those whose reflection lands in `bifibrants`.
 */
ModelStructure prop15_build(const LatticePtr& lat, const ObjectSet& fibrants,
                            const ObjectSet& bifibrants);

/*
 * The mirror construction: colocalise the codiscrete structure onto the
 * coreflective subset `cofibrants` (whose coreflection must commute with
 * joins into it), then localise at the reflective-in-`cofibrants` subset
 * `bifibrants`.
 */
ModelStructure prop15_dual_build(const LatticePtr& lat, const ObjectSet& cofibrants,
                                 const ObjectSet& bifibrants);

/*
 * verify prop15: run prop15_build over every admissible pair (a reflective
 * subset with meet-commuting reflection, and a coreflective subset inside
 * it) and check the advertised fibrant, cofibrant and bifibrant objects;
 * dually for prop15_dual_build.
 */
Report verify_prop15(const LatticePtr& lat, const EnumOptions& opts = {});

}  // namespace modelkit
