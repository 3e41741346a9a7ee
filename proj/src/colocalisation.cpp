#include "modelkit/colocalisation.hpp"

#include <algorithm>
#include <stdexcept>

namespace modelkit {

namespace {

std::string obj_label(const LatticePtr& lat, Obj x) { return "'" + lat->label(x) + "'"; }

std::string map_label(const LatticePtr& lat, const LatticeMap& f) {
  return "'" + lat->label(f.src) + "<=" + lat->label(f.tgt) + "'";
}

}  // namespace

Result<Coreflection> make_coreflection(const LatticePtr& lat, const ObjectSet& subset) {
  if (!subset.lattice()->same_order_as(*lat))
    throw std::invalid_argument("make_coreflection: subset lives on a different lattice");
  std::vector<Obj> members = subset.members();
  Coreflection coref;
  coref.ambient = lat;
  coref.subobjects = ObjectSet(lat, subset.bits());
  coref.coreflector.assign(lat->size(), -1);
  for (Obj x = 0; x < lat->size(); ++x) {
    for (Obj m : members) {
      if (!lat->leq(m, x)) continue;
      if (coref.coreflector[x] == -1 || lat->leq(coref.coreflector[x], m))
        coref.coreflector[x] = m;
    }
    if (coref.coreflector[x] == -1)
      return Result<Coreflection>(Rejection{
          "not coreflective",
          "object " + obj_label(lat, x) + " has no member of the subset below it"});
    for (Obj m : members)
      if (lat->leq(m, x) && !lat->leq(m, coref.coreflector[x]))
        return Result<Coreflection>(Rejection{
            "not coreflective",
            "object " + obj_label(lat, x) + " has no greatest member of the subset below it"});
  }
  return Result<Coreflection>(std::move(coref));
}

Result<Colocality> is_colocality(const ModelStructure& base, const ObjectSet& subset) {
  const LatticePtr& lat = base.lattice();
  if (!subset.lattice()->same_order_as(*lat))
    throw std::invalid_argument("is_colocality: subset lives on a different lattice");
  ObjectSet cofib = cofibrant_objects(base);
  ObjectSet homed(lat, subset.bits());
  if (!homed.subset_of(cofib)) {
    Obj bad = (homed.bits() & cofib.bits().complement()).next(0);
    return Result<Colocality>(Rejection{
        "colocals not cofibrant",
        "object " + obj_label(lat, bad) + " is in the subset but not cofibrant"});
  }
  Result<Coreflection> coref = make_coreflection(lat, homed);
  if (!coref.ok()) return Result<Colocality>(coref.rejection());
  Replacements rp = replacements(base);
  for (Obj x : cofib.members())
    for (Obj y : cofib.members())
      if (rp.qr(x) == rp.qr(y) && homed.contains(x) != homed.contains(y))
        return Result<Colocality>(Rejection{
            "not saturated", "cofibrant objects " + obj_label(lat, x) + " and " +
                                 obj_label(lat, y) +
                                 " are weakly equivalent but only one is in the subset"});
  return Result<Colocality>(Colocality{base, std::move(*coref)});
}

Check is_homotopical(const Colocality& coloc) {
  const LatticePtr& lat = coloc.base.lattice();
  const std::vector<Obj>& coref = coloc.coreflection.coreflector;
  for (const LatticeMap& f : coloc.base.weq.members())
    if (!coloc.base.weq.contains({coref[f.src], coref[f.tgt]}))
      return {false, "the coreflector sends the weak equivalence " + map_label(lat, f) + " to " +
                         map_label(lat, {coref[f.src], coref[f.tgt]}) + " which is not one"};
  return {};
}

ModelStructure colocalise_from_colocality(const Colocality& coloc) {
  Check hom = is_homotopical(coloc);
  if (!hom.ok)
    throw std::invalid_argument("colocalise_from_colocality: " + hom.why);
  const LatticePtr& lat = coloc.base.lattice();
  LatticePtr dl = lat->dual();
  ModelStructure md = dual_structure(coloc.base, dl);
  Result<Locality> loc = is_locality(md, dual_objects(coloc.colocals(), dl));
  if (!loc.ok())
    throw InternalError("the dual of the colocality is not a locality: " +
                        loc.rejection().to_string());
  return dual_structure(localise_from_locality(*loc), lat);
}

std::vector<ModelStructure> colocalisations_from_census(std::vector<ModelStructure> census,
                                                        const ModelStructure& base) {
  MapClass base_tf = base.tfib();
  std::vector<ModelStructure> out;
  for (ModelStructure& m : census)
    if (m.fib == base.fib && base_tf.subset_of(m.tfib())) out.push_back(std::move(m));
  std::stable_sort(out.begin(), out.end(), [](const ModelStructure& a, const ModelStructure& b) {
    MapClass ta = a.tfib(), tb = b.tfib();
    if (ta.count() != tb.count()) return ta.count() < tb.count();
    return ta.bits() < tb.bits();
  });
  return out;
}

std::vector<ModelStructure> enumerate_colocalisations(const ModelStructure& base,
                                                      const EnumOptions& opts) {
  return colocalisations_from_census(enumerate_model_structures(base.lattice(), opts), base);
}

MapClass k_colocal_equivalences(const ModelStructure& m, const ObjectSet& k) {
  if (!k.lattice()->same_order_as(*m.lattice()))
    throw std::invalid_argument("k_colocal_equivalences: objects live on a different lattice");
  LatticePtr dl = m.lattice()->dual();
  ModelStructure md = dual_structure(m, dl);
  ObjectSet kd = dual_objects(ObjectSet(m.lattice(), k.bits()), dl);
  return dual_class(local_equivalences_of(md, kd), m.lattice());
}

ObjectSet k_colocal_objects(const ModelStructure& m, const ObjectSet& k) {
  if (!k.lattice()->same_order_as(*m.lattice()))
    throw std::invalid_argument("k_colocal_objects: objects live on a different lattice");
  LatticePtr dl = m.lattice()->dual();
  ModelStructure md = dual_structure(m, dl);
  ObjectSet kd = dual_objects(ObjectSet(m.lattice(), k.bits()), dl);
  MapClass equivs_d = local_equivalences_of(md, kd);
  return dual_objects(s_local_objects(md, equivs_d), m.lattice());
}

ModelStructure k_colocalise(const ModelStructure& m, const ObjectSet& k) {
  if (!is_right_proper(m).ok)
    throw std::invalid_argument("k_colocalise: the base structure is not right proper");
  if (!k.lattice()->same_order_as(*m.lattice()))
    throw std::invalid_argument("k_colocalise: objects live on a different lattice");
  const LatticePtr& lat = m.lattice();
  Replacements rp = replacements(m);
  ObjectSet kprime(lat);
  for (Obj x : k.members()) kprime.insert(rp.qr(x));
  MapClass equivs = k_colocal_equivalences(m, ObjectSet(lat, k.bits()));
  if (k_colocal_equivalences(m, kprime) != equivs)
    throw InternalError("replacing the generators by their bifibrant images changed the "
                        "colocal equivalences");
  ObjectSet colocal_all = k_colocal_objects(m, ObjectSet(lat, k.bits()));
  for (Obj x : k.members())
    if (!colocal_all.contains(rp.qr(x)))
      throw InternalError("the bifibrant image of generator " + obj_label(lat, x) +
                          " is not itself colocal");
  ObjectSet colocals = colocal_all & cofibrant_objects(m);
  Result<Colocality> coloc = is_colocality(m, colocals);
  if (!coloc.ok())
    throw InternalError("the colocal cofibrant objects are not a colocality: " +
                        coloc.rejection().to_string());
  Check hom = is_homotopical(*coloc);
  if (!hom.ok)
    throw InternalError("the colocality of colocal objects is not homotopical: " + hom.why);
  ModelStructure out = colocalise_from_colocality(*coloc);
  if (cofibrant_objects(out) != colocals)
    throw InternalError("colocalising at the generators produced the wrong cofibrant objects");
  if (out.weq != equivs)
    throw InternalError("colocalising at the generators produced the wrong weak equivalences");
  return out;
}

namespace {

Report dualized(const ModelStructure& base, const std::string& base_label,
                const EnumOptions& opts, const char* check,
                Report (*run)(const ModelStructure&, const std::string&, const EnumOptions&),
                std::initializer_list<std::pair<const char*, const char*>> renames) {
  LatticePtr dl = base.lattice()->dual();
  Report inner = run(dual_structure(base, dl), base_label, opts);
  Report rep;
  rep.check = check;
  rep.lattice = base.lattice()->name();
  rep.base = base_label;
  rep.ok = inner.ok;
  for (const auto& [key, value] : inner.counts) {
    std::string out_key = key;
    for (const auto& [from, to] : renames)
      if (key == from) out_key = to;
    rep.count(out_key, value);
  }
  for (const std::string& w : inner.witnesses)
    rep.witnesses.push_back("on the order-dual: " + w);
  return rep;
}

}  // namespace

Report verify_thm2(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts) {
  return dualized(base, base_label, opts, "thm2", verify_thm1,
                  {{"localisations", "colocalisations"},
                   {"homotopical_localities", "homotopical_colocalities"}});
}

Report verify_thm4(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts) {
  if (!is_right_proper(base).ok)
    throw std::invalid_argument("verify thm4: the base structure must be right proper");
  return dualized(base, base_label, opts, "thm4", verify_thm3,
                  {{"localisations", "colocalisations"},
                   {"reflective_subcats", "coreflective_subcats"}});
}

Report verify_thm6(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts) {
  if (!is_right_proper(base).ok)
    throw std::invalid_argument("verify thm6: the base structure must be right proper");
  Report rep;
  rep.check = "thm6";
  rep.lattice = base.lattice()->name();
  rep.base = base_label;
  std::vector<ModelStructure> colocs = enumerate_colocalisations(base, opts);
  long long recovered = 0;
  for (size_t i = 0; i < colocs.size(); ++i) {
    try {
      if (k_colocalise(base, cofibrant_objects(colocs[i])) == colocs[i])
        ++recovered;
      else
        rep.fail("colocalising at the cofibrant objects of colocalisation " +
                 std::to_string(i) + " does not reproduce it");
    } catch (const InternalError& e) {
      rep.fail("colocalising at the cofibrant objects of colocalisation " + std::to_string(i) +
               " failed: " + e.what());
    }
  }
  rep.count("colocalisations", static_cast<long long>(colocs.size()));
  rep.count("recovered", recovered);
  return rep;
}

}  // namespace modelkit
