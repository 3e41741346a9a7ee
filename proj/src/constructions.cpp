#include "modelkit/constructions.hpp"

#include <stdexcept>

namespace modelkit {

namespace {

std::string obj_label(const LatticePtr& lat, Obj x) { return "'" + lat->label(x) + "'"; }

std::string map_label(const LatticePtr& lat, const LatticeMap& f) {
  return "'" + lat->label(f.src) + "<=" + lat->label(f.tgt) + "'";
}

std::string set_label(const ObjectSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& l : s.member_labels()) {
    if (!first) out += ", ";
    out += l;
    first = false;
  }
  return out + "}";
}

/* Does every member of `ambient` have a greatest member of `a` below it? */
bool coreflective_in(const LatticePtr& lat, const std::vector<Obj>& ambient,
                     const ObjectSet& a) {
  for (Obj b : ambient) {
    Obj greatest = -1;
    for (Obj x : a.members()) {
      if (!lat->leq(x, b)) continue;
      if (greatest == -1 || lat->leq(greatest, x)) greatest = x;
    }
    if (greatest == -1) return false;
    for (Obj x : a.members())
      if (lat->leq(x, b) && !lat->leq(x, greatest)) return false;
  }
  return true;
}

}  // namespace

Check is_semi_left_exact(const Reflection& refl) {
  const LatticePtr& lat = refl.ambient;
  std::vector<Obj> members = refl.subobjects.members();
  for (Obj x = 0; x < lat->size(); ++x)
    for (Obj b : members) {
      Obj lhs = refl.reflector[lat->meet(x, b)];
      Obj rhs = lat->meet(refl.reflector[x], b);
      if (lhs != rhs)
        return {false, "reflecting " + obj_label(lat, x) + " /\\ " + obj_label(lat, b) +
                           " gives " + obj_label(lat, lhs) +
                           " but meeting the reflection gives " + obj_label(lat, rhs)};
    }
  return {};
}

Check is_semi_right_exact(const Coreflection& coref) {
  const LatticePtr& lat = coref.ambient;
  std::vector<Obj> members = coref.subobjects.members();
  for (Obj x = 0; x < lat->size(); ++x)
    for (Obj b : members) {
      Obj lhs = coref.coreflector[lat->join(x, b)];
      Obj rhs = lat->join(coref.coreflector[x], b);
      if (lhs != rhs)
        return {false, "coreflecting " + obj_label(lat, x) + " \\/ " + obj_label(lat, b) +
                           " gives " + obj_label(lat, lhs) +
                           " but joining the coreflection gives " + obj_label(lat, rhs)};
    }
  return {};
}

Report verify_lemma1(const LatticePtr& lat, const EnumOptions& opts) {
  Report rep;
  rep.check = "lemma1";
  rep.lattice = lat->name();
  ModelStructure disc = discrete_structure(lat);
  std::vector<ObjectSet> subs = reflective_subposets(lat, ObjectSet::all(lat), opts.force);
  long long right_proper = 0, semi_left_exact = 0;
  for (const ObjectSet& b : subs) {
    Result<Locality> loc = is_locality(disc, b);
    if (!loc.ok())
      throw InternalError("reflective subset " + set_label(b) +
                          " is not a locality of the discrete structure: " +
                          loc.rejection().to_string());
    Check sle = is_semi_left_exact(loc->reflection);
    PropernessReport rp = is_right_proper(localise_from_locality(*loc));
    if (sle.ok) ++semi_left_exact;
    if (rp.ok) ++right_proper;
    if (rp.ok && !sle.ok)
      rep.fail("subset " + set_label(b) +
               ": the localisation is right proper but " + sle.why);
    if (!rp.ok && sle.ok)
      rep.fail("subset " + set_label(b) +
               ": the reflection commutes with meets but the weak equivalence " +
               map_label(lat, rp.witness->weq) + " pulled back along " +
               map_label(lat, rp.witness->along) + " leaves the class");
  }
  rep.count("reflections", static_cast<long long>(subs.size()));
  rep.count("right_proper", right_proper);
  rep.count("semi_left_exact", semi_left_exact);
  return rep;
}

ModelStructure prop15_build(const LatticePtr& lat, const ObjectSet& fibrants,
                            const ObjectSet& bifibrants) {
  if (!fibrants.lattice()->same_order_as(*lat) || !bifibrants.lattice()->same_order_as(*lat))
    throw std::invalid_argument("prop15_build: subsets live on a different lattice");
  ObjectSet b(lat, fibrants.bits()), a(lat, bifibrants.bits());
  if (!a.subset_of(b))
    throw std::invalid_argument(
        "prop15_build: the bifibrant candidates must lie in the fibrant candidates");
  Result<Reflection> refl = make_reflection(lat, b);
  if (!refl.ok())
    throw std::invalid_argument("prop15_build: " + refl.rejection().to_string());
  Check sle = is_semi_left_exact(*refl);
  if (!sle.ok)
    throw std::invalid_argument("prop15_build: " + sle.why);
  if (!coreflective_in(lat, b.members(), a))
    throw std::invalid_argument(
        "prop15_build: the bifibrant candidates are not coreflective among the fibrant ones");

  Result<Locality> loc = is_locality(discrete_structure(lat), b);
  if (!loc.ok())
    throw InternalError("the reflective subset is not a locality of the discrete structure: " +
                        loc.rejection().to_string());
  ModelStructure first = localise_from_locality(*loc);
  if (!is_right_proper(first).ok)
    throw InternalError("the localisation onto the reflective subset is not right proper");

  ObjectSet colocals(lat);
  for (Obj x = 0; x < lat->size(); ++x)
    if (a.contains(refl->reflector[x])) colocals.insert(x);
  Result<Colocality> coloc = is_colocality(first, colocals);
  if (!coloc.ok())
    throw InternalError("the objects reflecting into the bifibrant candidates are not a "
                        "colocality: " + coloc.rejection().to_string());
  Check hom = is_homotopical(*coloc);
  if (!hom.ok)
    throw InternalError("the colocality is not homotopical: " + hom.why);
  ModelStructure out = colocalise_from_colocality(*coloc);
  if (fibrant_objects(out) != b)
    throw InternalError("the two-step structure has the wrong fibrant objects");
  if (cofibrant_objects(out) != colocals)
    throw InternalError("the two-step structure has the wrong cofibrant objects");
  if (bifibrant_objects(out) != a)
    throw InternalError("the two-step structure has the wrong bifibrant objects");
  return out;
}

ModelStructure prop15_dual_build(const LatticePtr& lat, const ObjectSet& cofibrants,
                                 const ObjectSet& bifibrants) {
  if (!cofibrants.lattice()->same_order_as(*lat) || !bifibrants.lattice()->same_order_as(*lat))
    throw std::invalid_argument("prop15_dual_build: subsets live on a different lattice");
  LatticePtr dl = lat->dual();
  ModelStructure inner =
      prop15_build(dl, dual_objects(ObjectSet(lat, cofibrants.bits()), dl),
                   dual_objects(ObjectSet(lat, bifibrants.bits()), dl));
  return dual_structure(inner, lat);
}

Report verify_prop15(const LatticePtr& lat, const EnumOptions& opts) {
  Report rep;
  rep.check = "prop15";
  rep.lattice = lat->name();
  std::vector<ObjectSet> subs = reflective_subposets(lat, ObjectSet::all(lat), opts.force);
  long long admissible = 0;
  for (const ObjectSet& b : subs) {
    Result<Reflection> refl = make_reflection(lat, b);
    if (!refl.ok())
      throw InternalError("a reflective subset has no reflection: " +
                          refl.rejection().to_string());
    if (!is_semi_left_exact(*refl).ok) continue;
    std::vector<Obj> bm = b.members();
    for (unsigned long long mask = 0; mask < (1ull << bm.size()); ++mask) {
      ObjectSet a(lat);
      for (size_t i = 0; i < bm.size(); ++i)
        if (mask >> i & 1) a.insert(bm[i]);
      if (!coreflective_in(lat, bm, a)) continue;
      ++admissible;
      std::string tag = "pair " + set_label(b) + ", " + set_label(a) + ": ";
      try {
        ModelStructure built = prop15_build(lat, b, a);
        if (fibrant_objects(built) != b) rep.fail(tag + "wrong fibrant objects");
        if (bifibrant_objects(built) != a) rep.fail(tag + "wrong bifibrant objects");
        ObjectSet expected(lat);
        for (Obj x = 0; x < lat->size(); ++x)
          if (a.contains(refl->reflector[x])) expected.insert(x);
        if (cofibrant_objects(built) != expected)
          rep.fail(tag + "the cofibrant objects are not the ones reflecting into the "
                         "bifibrant candidates");
      } catch (const InternalError& e) {
        rep.fail(tag + e.what());
      }
    }
  }

  /* The mirror construction, driven by the admissible pairs of the dual. */
  LatticePtr dl = lat->dual();
  for (const ObjectSet& bd : reflective_subposets(dl, ObjectSet::all(dl), opts.force)) {
    Result<Reflection> refl_d = make_reflection(dl, bd);
    if (!refl_d.ok())
      throw InternalError("a reflective subset of the dual has no reflection: " +
                          refl_d.rejection().to_string());
    if (!is_semi_left_exact(*refl_d).ok) continue;
    std::vector<Obj> bm = bd.members();
    for (unsigned long long mask = 0; mask < (1ull << bm.size()); ++mask) {
      ObjectSet ad(dl);
      for (size_t i = 0; i < bm.size(); ++i)
        if (mask >> i & 1) ad.insert(bm[i]);
      if (!coreflective_in(dl, bm, ad)) continue;
      ObjectSet bp = dual_objects(bd, lat), ap = dual_objects(ad, lat);
      std::string tag = "mirror pair " + set_label(bp) + ", " + set_label(ap) + ": ";
      try {
        ModelStructure built = prop15_dual_build(lat, bp, ap);
        if (cofibrant_objects(built) != bp) rep.fail(tag + "wrong cofibrant objects");
        if (bifibrant_objects(built) != ap) rep.fail(tag + "wrong bifibrant objects");
        Result<Coreflection> coref = make_coreflection(lat, bp);
        if (!coref.ok())
          throw InternalError("the mirror subset is not coreflective: " +
                              coref.rejection().to_string());
        ObjectSet expected(lat);
        for (Obj x = 0; x < lat->size(); ++x)
          if (ap.contains(coref->coreflector[x])) expected.insert(x);
        if (fibrant_objects(built) != expected)
          rep.fail(tag + "the fibrant objects are not the ones coreflecting into the "
                         "bifibrant candidates");
      } catch (const InternalError& e) {
        rep.fail(tag + e.what());
      }
    }
  }

  rep.count("reflective_subposets", static_cast<long long>(subs.size()));
  rep.count("admissible_pairs", admissible);
  return rep;
}

}  // namespace modelkit
