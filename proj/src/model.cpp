#include "modelkit/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "modelkit/parallel.hpp"

namespace modelkit {

namespace {

std::string map_label(const LatticePtr& lat, const LatticeMap& f) {
  return "'" + lat->label(f.src) + "<=" + lat->label(f.tgt) + "'";
}

/* Composable pairs here are comparable triples x <= y <= z. */
std::optional<std::string> two_of_three_failure(const MapClass& w) {
  const LatticePtr& lat = w.lattice();
  const int n = lat->size();
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      if (!lat->leq(x, y)) continue;
      for (Obj z = 0; z < n; ++z) {
        if (!lat->leq(y, z)) continue;
        bool f = w.contains({x, y}), g = w.contains({y, z}), gf = w.contains({x, z});
        if ((f && g && !gf) || (f && gf && !g) || (g && gf && !f))
          return "two-of-three fails on " + map_label(lat, {x, y}) + " then " +
                 map_label(lat, {y, z});
      }
    }
  return std::nullopt;
}

}  // namespace

Check is_model_structure(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  if (m.weq.lattice() != lat || m.fib.lattice() != lat)
    throw std::invalid_argument("is_model_structure: classes live on different lattices");
  if (auto why = two_of_three_failure(m.weq)) return {false, *why};
  Check c1 = is_wfs(m.tcof_fib());
  if (!c1.ok) return {false, "(acyclic cofibrations, fibrations): " + c1.why};
  Check c2 = is_wfs(m.cof_tfib());
  if (!c2.ok) return {false, "(cofibrations, acyclic fibrations): " + c2.why};
  return {};
}

Result<ModelStructure> model_from_wfs_pair(const FactorisationSystem& fs1,
                                           const FactorisationSystem& fs2) {
  const LatticePtr& lat = fs1.lattice();
  if (fs2.lattice() != lat)
    throw std::invalid_argument("model_from_wfs_pair: systems live on different lattices");
  /* Necessary nesting: fs1.left = C n W is inside fs2.left = C, and
   * fs2.right = F n W is inside fs1.right = F. */
  if (!fs1.left.subset_of(fs2.left))
    return Result<ModelStructure>(Rejection{
        "left classes not nested",
        "the first left class must sit inside the second; " +
            map_label(lat, lat->map_at((fs1.left.bits() & fs2.left.bits().complement()).next(0))) +
            " is only in the first"});
  if (!fs2.right.subset_of(fs1.right))
    return Result<ModelStructure>(Rejection{
        "right classes not nested",
        "the second right class must sit inside the first; " +
            map_label(lat, lat->map_at((fs2.right.bits() & fs1.right.bits().complement()).next(0))) +
            " is only in the first"});
  /* Candidate W: maps whose (C n W, F)-factorisation has right part in F n W. */
  MapClass weq = MapClass::none(lat);
  for (int i = 0; i < lat->map_count(); ++i) {
    Factorisation fac = factor(fs1, lat->map_at(i));
    if (fs2.right.contains(fac.right_part)) weq.insert(i);
  }
  if (auto why = two_of_three_failure(weq))
    return Result<ModelStructure>(Rejection{"two-of-three", *why});
  ModelStructure m{fs2.left, weq, fs1.right};
  MapClass tc = m.tcof();
  if (tc != fs1.left) {
    int d = first_diff(tc.bits(), fs1.left.bits());
    return Result<ModelStructure>(Rejection{
        "acyclic cofibrations disagree",
        "cofibrations meet weak equivalences differs from the first left class at " +
            map_label(lat, lat->map_at(d))});
  }
  MapClass tf = m.tfib();
  if (tf != fs2.right) {
    int d = first_diff(tf.bits(), fs2.right.bits());
    return Result<ModelStructure>(Rejection{
        "acyclic fibrations disagree",
        "fibrations meet weak equivalences differs from the second right class at " +
            map_label(lat, lat->map_at(d))});
  }
  return Result<ModelStructure>(std::move(m));
}

std::vector<ModelStructure> enumerate_model_structures(const LatticePtr& lat,
                                                       const EnumOptions& opts) {
  std::vector<FactorisationSystem> systems = enumerate_ofs(lat, opts);
  const size_t k = systems.size();
  std::vector<std::vector<ModelStructure>> found(k);
  parallel_chunks(opts.jobs, static_cast<int>(k), [&](int chunk) {
    const size_t i = static_cast<size_t>(chunk);
    for (size_t j = 0; j < k; ++j) {
      /* systems[i] plays (C n W, F) and systems[j] plays (C, F n W). */
      if (!systems[i].left.subset_of(systems[j].left)) continue;
      if (!systems[j].right.subset_of(systems[i].right)) continue;
      Result<ModelStructure> r = model_from_wfs_pair(systems[i], systems[j]);
      if (r.ok()) found[i].push_back(*r);
    }
  });
  std::vector<ModelStructure> out;
  for (auto& chunk : found)
    for (auto& m : chunk) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [](const ModelStructure& a, const ModelStructure& b) {
    if (a.cof.bits() != b.cof.bits()) return a.cof.bits() < b.cof.bits();
    if (a.weq.bits() != b.weq.bits()) return a.weq.bits() < b.weq.bits();
    return a.fib.bits() < b.fib.bits();
  });
  /* Each model structure arises from exactly one pairing, so duplicates
   * indicate a bug rather than expected double counting. */
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw InternalError("duplicate model structure in census");
  return out;
}

Replacements replacements(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  Replacements rep;
  rep.r.resize(lat->size());
  rep.q.resize(lat->size());
  FactorisationSystem tcf = m.tcof_fib();
  FactorisationSystem ctf = m.cof_tfib();
  for (Obj x = 0; x < lat->size(); ++x) {
    rep.r[x] = factor(tcf, {x, lat->top()}).mid;
    rep.q[x] = factor(ctf, {lat->bottom(), x}).mid;
  }
  return rep;
}

ObjectSet fibrant_objects(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  ObjectSet s(lat);
  for (Obj x = 0; x < lat->size(); ++x)
    if (m.fib.contains({x, lat->top()})) s.insert(x);
  return s;
}

ObjectSet cofibrant_objects(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  ObjectSet s(lat);
  for (Obj x = 0; x < lat->size(); ++x)
    if (m.cof.contains({lat->bottom(), x})) s.insert(x);
  return s;
}

ObjectSet bifibrant_objects(const ModelStructure& m) {
  return fibrant_objects(m) & cofibrant_objects(m);
}

bool weq_via_replacement(const ModelStructure& m, const Replacements& rep,
                         const LatticeMap& f) {
  (void)m;
  return rep.qr(f.src) == rep.qr(f.tgt);
}

PropernessReport is_left_proper(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  for (const LatticeMap& w : m.weq.members()) {
    if (w.identity()) continue;
    for (const LatticeMap& c : m.cof.members()) {
      if (c.src != w.src) continue;
      LatticeMap pushed = pushout(*lat, w, c);
      if (!m.weq.contains(pushed)) return {false, PropernessWitness{w, c}};
    }
  }
  return {};
}

PropernessReport is_right_proper(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  for (const LatticeMap& w : m.weq.members()) {
    if (w.identity()) continue;
    for (const LatticeMap& f : m.fib.members()) {
      if (f.tgt != w.tgt) continue;
      LatticeMap pulled = pullback(*lat, w, f);
      if (!m.weq.contains(pulled)) return {false, PropernessWitness{w, f}};
    }
  }
  return {};
}

ModelStructure discrete_structure(const LatticePtr& lat) {
  return {MapClass::all(lat), MapClass::identities(lat), MapClass::all(lat)};
}

ModelStructure codiscrete_structure(const LatticePtr& lat) {
  return {MapClass::identities(lat), MapClass::all(lat), MapClass::all(lat)};
}

MapClass dual_class(const MapClass& k, const LatticePtr& dual_lat) {
  const LatticePtr& lat = k.lattice();
  if (!dual_lat->same_order_as(*lat->dual()))
    throw std::invalid_argument("dual_class: target lattice is not the order dual");
  MapClass out = MapClass::none(dual_lat);
  for (const LatticeMap& f : k.members()) out.insert({f.tgt, f.src});
  return out;
}

ObjectSet dual_objects(const ObjectSet& s, const LatticePtr& dual_lat) {
  if (!dual_lat->same_order_as(*s.lattice()->dual()))
    throw std::invalid_argument("dual_objects: target lattice is not the order dual");
  ObjectSet out(dual_lat);
  for (Obj x : s.members()) out.insert(x);
  return out;
}

ModelStructure dual_structure(const ModelStructure& m, const LatticePtr& dual_lat) {
  return {dual_class(m.fib, dual_lat), dual_class(m.weq, dual_lat),
          dual_class(m.cof, dual_lat)};
}

Report verify_prop5(const LatticePtr& lat, const EnumOptions& opts) {
  Report rep;
  rep.check = "prop5";
  rep.lattice = lat->name();
  std::vector<ModelStructure> census = enumerate_model_structures(lat, opts);
  for (size_t idx = 0; idx < census.size(); ++idx) {
    const ModelStructure& m = census[idx];
    const Replacements rp = replacements(m);
    const ObjectSet fib = fibrant_objects(m);
    const ObjectSet cof = cofibrant_objects(m);
    const MapClass tc = m.tcof(), tf = m.tfib();
    const std::string tag = "structure " + std::to_string(idx) + ": ";
    for (int i = 0; i < lat->map_count(); ++i) {
      const LatticeMap& f = lat->map_at(i);
      const std::string lit = map_label(lat, f);
      if (fib.contains(f.src) && fib.contains(f.tgt) && !m.fib.contains(i))
        rep.fail(tag + "map " + lit + " between fibrant objects is not a fibration");
      if (cof.contains(f.src) && cof.contains(f.tgt) && !m.cof.contains(i))
        rep.fail(tag + "map " + lit + " between cofibrant objects is not a cofibration");
      const bool w = m.weq.contains(i);
      if (m.weq.contains({rp.r[f.src], rp.r[f.tgt]}) != w)
        rep.fail(tag + "fibrant replacement does not preserve/reflect weak equivalence at " + lit);
      if (m.weq.contains({rp.q[f.src], rp.q[f.tgt]}) != w)
        rep.fail(tag + "cofibrant replacement does not preserve/reflect weak equivalence at " + lit);
      if (m.cof.contains(i) && !m.cof.contains({rp.r[f.src], rp.r[f.tgt]}))
        rep.fail(tag + "fibrant replacement does not preserve the cofibration " + lit);
      if (tc.contains(i) && rp.r[f.src] != rp.r[f.tgt])
        rep.fail(tag + "fibrant replacement does not collapse the acyclic cofibration " + lit);
      if (m.fib.contains(i) && !m.fib.contains({rp.q[f.src], rp.q[f.tgt]}))
        rep.fail(tag + "cofibrant replacement does not preserve the fibration " + lit);
      if (tf.contains(i) && rp.q[f.src] != rp.q[f.tgt])
        rep.fail(tag + "cofibrant replacement does not collapse the acyclic fibration " + lit);
      if (w && !f.identity() && fib.contains(f.src) && cof.contains(f.src) &&
          fib.contains(f.tgt) && cof.contains(f.tgt))
        rep.fail(tag + "weak equivalence " + lit + " between bifibrant objects is not an identity");
      if (w != weq_via_replacement(m, rp, f))
        rep.fail(tag + "weak equivalence membership disagrees with replacement endpoints at " + lit);
    }
    for (Obj x = 0; x < lat->size(); ++x)
      if (rp.q[rp.r[x]] != rp.r[rp.q[x]])
        rep.fail(tag + "replacement composites differ at object '" + lat->label(x) + "'");
  }
  rep.count("models", static_cast<long long>(census.size()));
  rep.count("clauses", 7);
  return rep;
}

}  // namespace modelkit
