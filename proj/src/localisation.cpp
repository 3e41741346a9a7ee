#include "modelkit/localisation.hpp"

#include <algorithm>
#include <stdexcept>

namespace modelkit {

namespace {

std::string map_label(const LatticePtr& lat, const LatticeMap& f) {
  return "'" + lat->label(f.src) + "<=" + lat->label(f.tgt) + "'";
}

std::string obj_label(const LatticePtr& lat, Obj x) { return "'" + lat->label(x) + "'"; }

}  // namespace

Result<Reflection> make_reflection(const LatticePtr& lat, const ObjectSet& subset) {
  if (!subset.lattice()->same_order_as(*lat))
    throw std::invalid_argument("make_reflection: subset lives on a different lattice");
  std::vector<Obj> members = subset.members();
  Reflection refl;
  refl.ambient = lat;
  refl.subobjects = ObjectSet(lat, subset.bits());
  refl.reflector.assign(lat->size(), -1);
  for (Obj x = 0; x < lat->size(); ++x) {
    for (Obj m : members) {
      if (!lat->leq(x, m)) continue;
      if (refl.reflector[x] == -1 || lat->leq(m, refl.reflector[x])) refl.reflector[x] = m;
    }
    if (refl.reflector[x] == -1)
      return Result<Reflection>(Rejection{
          "not reflective", "object " + obj_label(lat, x) + " has no member of the subset above it"});
    for (Obj m : members)
      if (lat->leq(x, m) && !lat->leq(refl.reflector[x], m))
        return Result<Reflection>(Rejection{
            "not reflective",
            "object " + obj_label(lat, x) + " has no least member of the subset above it"});
  }
  return Result<Reflection>(std::move(refl));
}

Result<Locality> is_locality(const ModelStructure& base, const ObjectSet& subset) {
  const LatticePtr& lat = base.lattice();
  ObjectSet fib = fibrant_objects(base);
  ObjectSet homed(lat, subset.bits());
  if (!subset.lattice()->same_order_as(*lat))
    throw std::invalid_argument("is_locality: subset lives on a different lattice");
  if (!homed.subset_of(fib)) {
    Obj bad = (homed.bits() & fib.bits().complement()).next(0);
    return Result<Locality>(Rejection{
        "locals not fibrant", "object " + obj_label(lat, bad) + " is in the subset but not fibrant"});
  }
  Result<Reflection> refl = make_reflection(lat, homed);
  if (!refl.ok()) return Result<Locality>(refl.rejection());
  Replacements rp = replacements(base);
  for (Obj x : fib.members())
    for (Obj y : fib.members())
      if (rp.qr(x) == rp.qr(y) && homed.contains(x) != homed.contains(y))
        return Result<Locality>(Rejection{
            "not saturated", "fibrant objects " + obj_label(lat, x) + " and " + obj_label(lat, y) +
                                 " are weakly equivalent but only one is in the subset"});
  return Result<Locality>(Locality{base, std::move(*refl)});
}

Check is_homotopical(const Locality& loc) {
  const LatticePtr& lat = loc.base.lattice();
  const std::vector<Obj>& refl = loc.reflection.reflector;
  for (const LatticeMap& f : loc.base.weq.members())
    if (!loc.base.weq.contains({refl[f.src], refl[f.tgt]}))
      return {false, "the reflector sends the weak equivalence " + map_label(lat, f) + " to " +
                         map_label(lat, {refl[f.src], refl[f.tgt]}) + " which is not one"};
  return {};
}

RestrictedStructure restrict_to_locality(const Locality& loc) {
  const LatticePtr& lat = loc.base.lattice();
  RestrictedStructure rs;
  rs.to_ambient = loc.locals().members();
  rs.from_ambient.assign(lat->size(), -1);
  for (size_t i = 0; i < rs.to_ambient.size(); ++i) rs.from_ambient[rs.to_ambient[i]] = static_cast<Obj>(i);
  std::vector<std::string> labels;
  std::vector<std::pair<Obj, Obj>> relations;
  for (Obj a : rs.to_ambient) labels.push_back(lat->label(a));
  for (size_t i = 0; i < rs.to_ambient.size(); ++i)
    for (size_t j = 0; j < rs.to_ambient.size(); ++j)
      if (lat->leq(rs.to_ambient[i], rs.to_ambient[j]))
        relations.emplace_back(static_cast<Obj>(i), static_cast<Obj>(j));
  rs.sub = Lattice::make(lat->name() + ".locals", std::move(labels), relations);

  Replacements rp = replacements(loc.base);
  MapClass weq = MapClass::none(rs.sub);
  for (int i = 0; i < rs.sub->map_count(); ++i) {
    const LatticeMap& f = rs.sub->map_at(i);
    if (rp.q[rs.to_ambient[f.src]] == rp.q[rs.to_ambient[f.tgt]]) weq.insert(i);
  }
  rs.structure = ModelStructure{weq.llp(), weq, MapClass::all(rs.sub)};
  if (rs.structure.tcof() != MapClass::identities(rs.sub))
    throw InternalError("restriction has a non-identity acyclic cofibration");
  Check c = is_model_structure(rs.structure);
  if (!c.ok) throw InternalError("restriction to the locals is not a model structure: " + c.why);
  GaloisConnection g = reflector_connection(rs, loc);
  Result<ModelStructure> lifted = projective_lift(g, loc.base);
  if (!lifted.ok() || *lifted != rs.structure)
    throw InternalError("restriction differs from the transfer along the inclusion");
  return rs;
}

GaloisConnection reflector_connection(const RestrictedStructure& rs, const Locality& loc) {
  const LatticePtr& lat = loc.base.lattice();
  std::vector<Obj> left(lat->size());
  for (Obj x = 0; x < lat->size(); ++x) left[x] = rs.from_ambient[loc.reflection.reflector[x]];
  Result<GaloisConnection> g =
      GaloisConnection::make(lat, rs.sub, std::move(left), rs.to_ambient);
  if (!g.ok())
    throw InternalError("reflector adjunction failed: " + g.rejection().to_string());
  return *g;
}

namespace {

/* Maps whose endpoints the reflector identifies. */
MapClass inverted_by_reflector(const LatticePtr& lat, const std::vector<Obj>& refl) {
  MapClass out = MapClass::none(lat);
  for (int i = 0; i < lat->map_count(); ++i) {
    const LatticeMap& f = lat->map_at(i);
    if (refl[f.src] == refl[f.tgt]) out.insert(i);
  }
  return out;
}

}  // namespace

ModelStructure localise_from_locality(const Locality& loc) {
  Check hom = is_homotopical(loc);
  if (!hom.ok)
    throw std::invalid_argument("localise_from_locality: " + hom.why);
  const LatticePtr& lat = loc.base.lattice();
  RestrictedStructure rs = restrict_to_locality(loc);
  GaloisConnection g = reflector_connection(rs, loc);
  Result<ModelStructure> lifted = injective_lift(g, rs.structure);
  if (!lifted.ok())
    throw InternalError("localisation transfer failed: " + lifted.rejection().to_string());
  if (lifted->tcof() != inverted_by_reflector(lat, loc.reflection.reflector))
    throw InternalError("transferred acyclic cofibrations are not the reflector-collapsed maps");
  if (fibrant_objects(*lifted) != loc.locals())
    throw InternalError("transferred fibrant objects are not the locals");
  Result<ModelStructure> mixed = mix(loc.base, *lifted, MixKeep::Cofibrations);
  if (!mixed.ok())
    throw InternalError("localisation mix failed: " + mixed.rejection().to_string());
  if (fibrant_objects(*mixed) != loc.locals())
    throw InternalError("localisation has the wrong fibrant objects");
  Replacements rp = replacements(loc.base);
  for (int i = 0; i < lat->map_count(); ++i) {
    const LatticeMap& f = lat->map_at(i);
    bool inverted = loc.reflection.reflector[rp.q[f.src]] == loc.reflection.reflector[rp.q[f.tgt]];
    if (mixed->weq.contains(i) != inverted)
      throw InternalError(
          "localisation weak equivalences are not the maps collapsed by the reflected "
          "cofibrant replacement");
  }
  return *mixed;
}

std::vector<ModelStructure> localisations_from_census(std::vector<ModelStructure> census,
                                                      const ModelStructure& base) {
  MapClass base_tc = base.tcof();
  std::vector<ModelStructure> out;
  for (ModelStructure& m : census)
    if (m.cof == base.cof && base_tc.subset_of(m.tcof())) out.push_back(std::move(m));
  std::stable_sort(out.begin(), out.end(), [](const ModelStructure& a, const ModelStructure& b) {
    MapClass ta = a.tcof(), tb = b.tcof();
    if (ta.count() != tb.count()) return ta.count() < tb.count();
    return ta.bits() < tb.bits();
  });
  return out;
}

std::vector<ModelStructure> enumerate_localisations(const ModelStructure& base,
                                                    const EnumOptions& opts) {
  return localisations_from_census(enumerate_model_structures(base.lattice(), opts), base);
}

bool derived_hom(const ModelStructure& m, Obj a, Obj b) {
  Replacements rp = replacements(m);
  return m.lattice()->leq(rp.q[a], rp.r[b]);
}

namespace {

ObjectSet local_objects_for(const ModelStructure& m, const Replacements& rp, const MapClass& s) {
  const LatticePtr& lat = m.lattice();
  ObjectSet out(lat);
  for (Obj x = 0; x < lat->size(); ++x) {
    bool local = true;
    for (const LatticeMap& f : s.members())
      if (lat->leq(rp.q[f.tgt], rp.r[x]) != lat->leq(rp.q[f.src], rp.r[x])) {
        local = false;
        break;
      }
    if (local) out.insert(x);
  }
  return out;
}

}  // namespace

ObjectSet s_local_objects(const ModelStructure& m, const MapClass& s) {
  if (!s.lattice()->same_order_as(*m.lattice()))
    throw std::invalid_argument("s_local_objects: maps live on a different lattice");
  Replacements rp = replacements(m);
  return local_objects_for(m, rp, s);
}

MapClass local_equivalences_of(const ModelStructure& m, const ObjectSet& locals) {
  const LatticePtr& lat = m.lattice();
  Replacements rp = replacements(m);
  MapClass out = MapClass::none(lat);
  for (int i = 0; i < lat->map_count(); ++i) {
    const LatticeMap& f = lat->map_at(i);
    bool seen = true;
    for (Obj x : locals.members())
      if (lat->leq(rp.q[f.tgt], rp.r[x]) != lat->leq(rp.q[f.src], rp.r[x])) {
        seen = false;
        break;
      }
    if (seen) out.insert(i);
  }
  return out;
}

MapClass s_local_equivalences(const ModelStructure& m, const MapClass& s) {
  return local_equivalences_of(m, s_local_objects(m, s));
}

ModelStructure s_localise(const ModelStructure& m, const MapClass& s) {
  if (!is_left_proper(m).ok)
    throw std::invalid_argument("s_localise: the base structure is not left proper");
  if (!s.lattice()->same_order_as(*m.lattice()))
    throw std::invalid_argument("s_localise: maps live on a different lattice");
  const LatticePtr& lat = m.lattice();
  Replacements rp = replacements(m);
  MapClass sprime = MapClass::none(lat);
  for (const LatticeMap& f : s.members()) sprime.insert({rp.qr(f.src), rp.qr(f.tgt)});
  ObjectSet local_all = local_objects_for(m, rp, sprime);
  if (local_all != local_objects_for(m, rp, MapClass(lat, s.bits())))
    throw InternalError("replacing the generating maps by their bifibrant images changed the "
                        "local objects");
  ObjectSet locals = local_all & fibrant_objects(m);
  Result<Locality> loc = is_locality(m, locals);
  if (!loc.ok())
    throw InternalError("the local fibrant objects are not a locality: " +
                        loc.rejection().to_string());
  Check hom = is_homotopical(*loc);
  if (!hom.ok)
    throw InternalError("the locality of local objects is not homotopical: " + hom.why);
  ModelStructure out = localise_from_locality(*loc);
  if (fibrant_objects(out) != locals)
    throw InternalError("localising at the maps produced the wrong fibrant objects");
  if (out.weq != local_equivalences_of(m, local_all))
    throw InternalError("localising at the maps produced the wrong weak equivalences");
  return out;
}

namespace {

/* All subsets of the fibrant objects that pass is_locality, as localities.
 * Deterministic order: increasing subset mask over fibrant members. */
std::vector<Locality> all_localities(const ModelStructure& base, const EnumOptions& opts) {
  ObjectSet fib = fibrant_objects(base);
  std::vector<Obj> members = fib.members();
  if (members.size() > 24 && !opts.force)
    throw std::invalid_argument("lattice '" + base.lattice()->name() + "' has " +
                                std::to_string(members.size()) +
                                " fibrant objects; locality scans are capped at 24 (use force "
                                "to override)");
  std::vector<Locality> out;
  for (unsigned long long mask = 0; mask < (1ull << members.size()); ++mask) {
    ObjectSet subset(base.lattice());
    for (size_t b = 0; b < members.size(); ++b)
      if (mask >> b & 1) subset.insert(members[b]);
    Result<Locality> loc = is_locality(base, subset);
    if (loc.ok()) out.push_back(std::move(*loc));
  }
  return out;
}

std::string object_set_label(const ObjectSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& l : s.member_labels()) {
    if (!first) out += ", ";
    out += l;
    first = false;
  }
  return out + "}";
}

}  // namespace

Report verify_thm1(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts) {
  Report rep;
  rep.check = "thm1";
  rep.lattice = base.lattice()->name();
  rep.base = base_label;
  std::vector<ModelStructure> locs = enumerate_localisations(base, opts);
  std::vector<Locality> hlocs;
  for (Locality& loc : all_localities(base, opts))
    if (is_homotopical(loc).ok) hlocs.push_back(std::move(loc));

  auto find_hloc = [&](const ObjectSet& s) {
    for (size_t i = 0; i < hlocs.size(); ++i)
      if (hlocs[i].locals() == s) return static_cast<int>(i);
    return -1;
  };

  std::vector<ObjectSet> images;
  std::vector<bool> hit(hlocs.size(), false);
  for (size_t i = 0; i < locs.size(); ++i) {
    ObjectSet fl = fibrant_objects(locs[i]);
    images.push_back(fl);
    int at = find_hloc(fl);
    if (at < 0) {
      rep.fail("fibrant objects " + object_set_label(fl) + " of localisation " +
               std::to_string(i) + " are not a homotopical locality");
      continue;
    }
    if (hit[at])
      rep.fail("two localisations share the fibrant objects " + object_set_label(fl));
    hit[at] = true;
    try {
      if (localise_from_locality(hlocs[at]) != locs[i])
        rep.fail("localising back from the fibrant objects " + object_set_label(fl) +
                 " does not return localisation " + std::to_string(i));
    } catch (const InternalError& e) {
      rep.fail("localising back from " + object_set_label(fl) + " failed: " + e.what());
    }
  }
  for (size_t i = 0; i < hlocs.size(); ++i) {
    if (hit[i]) continue;
    rep.fail("homotopical locality " + object_set_label(hlocs[i].locals()) +
             " is not realized by any localisation");
    try {
      ModelStructure built = localise_from_locality(hlocs[i]);
      if (fibrant_objects(built) != hlocs[i].locals())
        rep.fail("localising " + object_set_label(hlocs[i].locals()) +
                 " changes the local objects");
    } catch (const InternalError& e) {
      rep.fail("localising " + object_set_label(hlocs[i].locals()) + " failed: " + e.what());
    }
  }
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = 0; j < images.size(); ++j) {
      bool tc_incl = locs[i].tcof().subset_of(locs[j].tcof());
      bool locals_incl = images[j].subset_of(images[i]);
      if (tc_incl != locals_incl) {
        rep.fail("order reversal fails between localisations " + std::to_string(i) + " and " +
                 std::to_string(j));
      }
    }
  rep.count("localisations", static_cast<long long>(locs.size()));
  rep.count("homotopical_localities", static_cast<long long>(hlocs.size()));
  return rep;
}

std::vector<ObjectSet> reflective_subposets(const LatticePtr& lat, const ObjectSet& within,
                                            bool force) {
  std::vector<Obj> members = within.members();
  if (members.size() > 24 && !force)
    throw std::invalid_argument("lattice '" + lat->name() + "': subset scans over " +
                                std::to_string(members.size()) +
                                " objects are capped at 24 (use force to override)");
  std::vector<ObjectSet> out;
  for (unsigned long long mask = 0; mask < (1ull << members.size()); ++mask) {
    ObjectSet subset(lat);
    for (size_t b = 0; b < members.size(); ++b)
      if (mask >> b & 1) subset.insert(members[b]);
    bool reflective = true;
    for (Obj x : members) {
      Obj least = -1;
      for (Obj v : subset.members()) {
        if (!lat->leq(x, v)) continue;
        if (least == -1 || lat->leq(v, least)) least = v;
      }
      if (least == -1) {
        reflective = false;
        break;
      }
      for (Obj v : subset.members())
        if (lat->leq(x, v) && !lat->leq(least, v)) {
          reflective = false;
          break;
        }
      if (!reflective) break;
    }
    if (reflective) out.push_back(std::move(subset));
  }
  return out;
}

Report verify_thm3(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts) {
  if (!is_left_proper(base).ok)
    throw std::invalid_argument("verify thm3: the base structure must be left proper");
  Report rep;
  rep.check = "thm3";
  rep.lattice = base.lattice()->name();
  rep.base = base_label;
  const LatticePtr& lat = base.lattice();
  std::vector<ModelStructure> locs = enumerate_localisations(base, opts);
  ObjectSet cf = bifibrant_objects(base);
  ObjectSet cofib = cofibrant_objects(base);
  std::vector<ObjectSet> refl_subs = reflective_subposets(lat, cf, opts.force);
  Replacements rp = replacements(base);

  auto find_sub = [&](const ObjectSet& s) {
    for (size_t i = 0; i < refl_subs.size(); ++i)
      if (refl_subs[i] == s) return static_cast<int>(i);
    return -1;
  };

  /* The headline bijection. */
  std::vector<ObjectSet> images;
  std::vector<bool> hit(refl_subs.size(), false);
  for (size_t i = 0; i < locs.size(); ++i) {
    ObjectSet cfl = bifibrant_objects(locs[i]);
    images.push_back(cfl);
    int at = find_sub(cfl);
    if (at < 0) {
      rep.fail("bifibrant objects " + object_set_label(cfl) + " of localisation " +
               std::to_string(i) + " are not a reflective subposet of the bifibrant core");
      continue;
    }
    if (hit[at])
      rep.fail("two localisations share the bifibrant objects " + object_set_label(cfl));
    hit[at] = true;
  }
  for (size_t i = 0; i < refl_subs.size(); ++i)
    if (!hit[i])
      rep.fail("reflective subposet " + object_set_label(refl_subs[i]) +
               " is not realized by any localisation");
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = 0; j < images.size(); ++j) {
      bool tc_incl = locs[i].tcof().subset_of(locs[j].tcof());
      bool cf_incl = images[j].subset_of(images[i]);
      if (tc_incl != cf_incl)
        rep.fail("order reversal fails between localisations " + std::to_string(i) + " and " +
                 std::to_string(j));
    }

  /* Supporting facts. Every locality must be homotopical over a left proper
   * base, and localities must correspond to the reflective subposets by
   * intersecting with the cofibrant objects. */
  std::vector<Locality> localities = all_localities(base, opts);
  std::vector<bool> sub_hit(refl_subs.size(), false);
  for (size_t i = 0; i < localities.size(); ++i) {
    const Locality& loc = localities[i];
    Check hom = is_homotopical(loc);
    if (!hom.ok)
      rep.fail("locality " + object_set_label(loc.locals()) + " is not homotopical: " + hom.why);
    ObjectSet img = loc.locals() & cofib;
    int at = find_sub(img);
    if (at < 0) {
      rep.fail("locality " + object_set_label(loc.locals()) +
               " meets the cofibrant objects in " + object_set_label(img) +
               " which is not a reflective subposet of the bifibrant core");
      continue;
    }
    if (sub_hit[at])
      rep.fail("two localities share the cofibrant part " + object_set_label(img));
    sub_hit[at] = true;
    /* The inverse: fibrant objects whose cofibrant replacement lands in the
     * subposet must recover the locality. */
    ObjectSet back(lat);
    for (Obj x : fibrant_objects(base).members())
      if (img.contains(rp.q[x])) back.insert(x);
    if (back != loc.locals())
      rep.fail("the fibrant preimage of " + object_set_label(img) + " under cofibrant "
               "replacement is " + object_set_label(back) + ", not the locality " +
               object_set_label(loc.locals()));
    /* Cofibrant replacement preserves and reflects locality; units are
     * cofibrations; the reflector preserves cofibrations. */
    for (Obj x : fibrant_objects(base).members())
      if (loc.locals().contains(x) != loc.locals().contains(rp.q[x]))
        rep.fail("locality " + object_set_label(loc.locals()) +
                 ": cofibrant replacement changes membership at " + obj_label(lat, x));
    for (Obj x = 0; x < lat->size(); ++x)
      if (!base.cof.contains({x, loc.reflection.reflector[x]}))
        rep.fail("locality " + object_set_label(loc.locals()) + ": the unit at " +
                 obj_label(lat, x) + " is not a cofibration");
    for (const LatticeMap& c : base.cof.members())
      if (!base.cof.contains(
              {loc.reflection.reflector[c.src], loc.reflection.reflector[c.tgt]}))
        rep.fail("locality " + object_set_label(loc.locals()) +
                 ": the reflector does not preserve the cofibration " + map_label(lat, c));
    /* Reflected pushout of a weak equivalence between fibrant objects. */
    ObjectSet fib = fibrant_objects(base);
    for (const LatticeMap& f : base.weq.members())
      if (fib.contains(f.src) && fib.contains(f.tgt)) {
        Obj pushed = rp.r[lat->join(loc.reflection.reflector[f.src], f.tgt)];
        if (pushed != loc.reflection.reflector[f.tgt])
          rep.fail("locality " + object_set_label(loc.locals()) +
                   ": the reflected pushout along " + map_label(lat, f) + " lands on " +
                   obj_label(lat, pushed) + " instead of the reflected target");
      }
  }
  for (size_t i = 0; i < refl_subs.size(); ++i)
    if (!sub_hit[i])
      rep.fail("reflective subposet " + object_set_label(refl_subs[i]) +
               " does not arise from any locality");
  for (size_t i = 0; i < localities.size(); ++i)
    for (size_t j = 0; j < localities.size(); ++j) {
      bool li = localities[i].locals().subset_of(localities[j].locals());
      bool ci = (localities[i].locals() & cofib).subset_of(localities[j].locals() & cofib);
      if (li != ci)
        rep.fail("intersection with the cofibrant objects does not preserve the order between "
                 "localities " + std::to_string(i) + " and " + std::to_string(j));
    }

  /* The restriction to the fibrant subposet keeps left properness, and every
   * localisation of the left proper base is left proper. */
  Result<Locality> maximal = is_locality(base, fibrant_objects(base));
  if (!maximal.ok()) {
    rep.fail("the fibrant objects are not a locality: " + maximal.rejection().to_string());
  } else {
    try {
      RestrictedStructure rs = restrict_to_locality(*maximal);
      if (!is_left_proper(rs.structure).ok)
        rep.fail("the restriction to the fibrant objects is not left proper");
    } catch (const InternalError& e) {
      rep.fail(std::string("restricting to the fibrant objects failed: ") + e.what());
    }
  }
  for (size_t i = 0; i < locs.size(); ++i)
    if (!is_left_proper(locs[i]).ok)
      rep.fail("localisation " + std::to_string(i) + " is not left proper");

  rep.count("localisations", static_cast<long long>(locs.size()));
  rep.count("reflective_subcats", static_cast<long long>(refl_subs.size()));
  return rep;
}

Report verify_thm5(const ModelStructure& base, const std::string& base_label,
                        const EnumOptions& opts) {
  if (!is_left_proper(base).ok)
    throw std::invalid_argument("verify thm5: the base structure must be left proper");
  Report rep;
  rep.check = "thm5";
  rep.lattice = base.lattice()->name();
  rep.base = base_label;
  std::vector<ModelStructure> locs = enumerate_localisations(base, opts);
  long long recovered = 0;
  for (size_t i = 0; i < locs.size(); ++i) {
    try {
      if (s_localise(base, locs[i].weq) == locs[i])
        ++recovered;
      else
        rep.fail("localising at the weak equivalences of localisation " + std::to_string(i) +
                 " does not reproduce it");
    } catch (const InternalError& e) {
      rep.fail("localising at the weak equivalences of localisation " + std::to_string(i) +
               " failed: " + e.what());
    }
  }
  rep.count("localisations", static_cast<long long>(locs.size()));
  rep.count("recovered", recovered);
  return rep;
}

}  // namespace modelkit
