#pragma once

#include "modelkit/galois.hpp"
#include "modelkit/model.hpp"
#include "modelkit/report.hpp"

namespace modelkit {

/*
 * Transfer of a structure on the lower lattice to the upper lattice: the
 * new weak equivalences and fibrations are the preimages under the right
 * adjoint, and the new cofibrations lift against the acyclic fibrations.
 * Fails (as a value) when some candidate acyclic cofibration is not a weak
 * equivalence, or when a factorisation axiom breaks; every axiom of the
 * result is re-verified exhaustively rather than assumed.
 */
Result<ModelStructure> projective_lift(const GaloisConnection& g, const ModelStructure& m);

/*
 * Dual transfer of a structure on the upper lattice to the lower lattice:
 * cofibrations and weak equivalences are the preimages under the left
 * adjoint, fibrations lift on the right against the acyclic cofibrations.
 */
Result<ModelStructure> injective_lift(const GaloisConnection& g, const ModelStructure& m);

/* Componentwise classes on the product lattice of the two factors. The
 * result is checked to be a model structure. */
ModelStructure product_structure(const ModelStructure& a, const ModelStructure& b,
                                 const LatticePtr& prod);

/* join: prod -> lat left adjoint to the diagonal x |-> (x, x). */
GaloisConnection join_diagonal_connection(const LatticePtr& lat, const LatticePtr& prod);
/* diagonal: lat -> prod left adjoint to meet: prod -> lat. */
GaloisConnection diagonal_meet_connection(const LatticePtr& lat, const LatticePtr& prod);

enum class MixKeep { Fibrations, Cofibrations };

/*
 * Mixing two structures on one lattice. Keeping fibrations requires
 * m1.fib inside m2.fib and m1.weq inside m2.weq and yields
 * (llp(F1 n W2), W2, F1); keeping cofibrations requires m1.cof inside
 * m2.cof and m1.weq inside m2.weq and yields (C1, W2, rlp(C1 n W2)).
 * Precondition failures are rejections; under the preconditions the mixed
 * triple always satisfies the model axioms (asserted).
 */
Result<ModelStructure> mix(const ModelStructure& m1, const ModelStructure& m2,
                           MixKeep keep);

/*
 * The same mix computed the long way round, as a cross-check: assemble the
 * auxiliary componentwise structure on the square lattice and transfer it
 * back along the diagonal (projectively when keeping fibrations,
 * injectively when keeping cofibrations). Rejects on exactly the same
 * preconditions as mix.
 */
Result<ModelStructure> mix_via_diagonal(const ModelStructure& m1,
                                        const ModelStructure& m2, MixKeep keep);

/*
 * verify prop11: over the lattice's census, every ordered pair admissible
 * for mixing is mixed both ways (directly and through the diagonal) and the
 * results must agree; mixing a structure with itself must return it. The
 * counts record how many ordered pairs of distinct structures satisfy the
 * nesting preconditions in each direction, for comparison.
 */
Report verify_prop11(const LatticePtr& lat, const EnumOptions& opts = {});

}  // namespace modelkit
