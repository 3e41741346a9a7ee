#include "modelkit/transfer.hpp"

#include <stdexcept>

namespace modelkit {

namespace {

std::string map_label(const LatticePtr& lat, const LatticeMap& f) {
  return "'" + lat->label(f.src) + "<=" + lat->label(f.tgt) + "'";
}

}  // namespace

Result<ModelStructure> projective_lift(const GaloisConnection& g, const ModelStructure& m) {
  if (!m.lattice()->same_order_as(*g.lower))
    throw std::invalid_argument("projective_lift: the structure must live on the lower lattice");
  MapClass weq = preimage(g, Side::Right, m.weq);
  MapClass fib = preimage(g, Side::Right, m.fib);
  MapClass acyclic_candidates = fib.llp();
  if (!acyclic_candidates.subset_of(weq)) {
    MapClass bad = acyclic_candidates & weq.complement();
    LatticeMap w = g.upper->map_at(bad.bits().next(0));
    return Result<ModelStructure>(Rejection{
        "acyclicity",
        "the map " + map_label(g.upper, w) +
            " lifts against every transferred fibration but is not a transferred weak equivalence"});
  }
  ModelStructure out{(fib & weq).llp(), weq, fib};
  Check c = is_model_structure(out);
  if (!c.ok) return Result<ModelStructure>(Rejection{"model axioms", c.why});
  return Result<ModelStructure>(std::move(out));
}

Result<ModelStructure> injective_lift(const GaloisConnection& g, const ModelStructure& m) {
  if (!m.lattice()->same_order_as(*g.upper))
    throw std::invalid_argument("injective_lift: the structure must live on the upper lattice");
  MapClass cof = preimage(g, Side::Left, m.cof);
  MapClass weq = preimage(g, Side::Left, m.weq);
  MapClass acyclic_candidates = cof.rlp();
  if (!acyclic_candidates.subset_of(weq)) {
    MapClass bad = acyclic_candidates & weq.complement();
    LatticeMap w = g.lower->map_at(bad.bits().next(0));
    return Result<ModelStructure>(Rejection{
        "acyclicity",
        "the map " + map_label(g.lower, w) +
            " lifts against every transferred cofibration but is not a transferred weak equivalence"});
  }
  ModelStructure out{cof, weq, (cof & weq).rlp()};
  Check c = is_model_structure(out);
  if (!c.ok) return Result<ModelStructure>(Rejection{"model axioms", c.why});
  return Result<ModelStructure>(std::move(out));
}

ModelStructure product_structure(const ModelStructure& a, const ModelStructure& b,
                                 const LatticePtr& prod) {
  const LatticePtr& la = a.lattice();
  const LatticePtr& lb = b.lattice();
  const int nb = lb->size();
  if (prod->size() != la->size() * nb)
    throw std::invalid_argument("product_structure: lattice is not the product of the factors");
  for (int i = 0; i < la->size(); ++i)
    for (int j = 0; j < nb; ++j)
      if (prod->label(i * nb + j) != la->label(i) + "*" + lb->label(j))
        throw std::invalid_argument("product_structure: lattice is not the product of the factors");
  auto componentwise = [&](const MapClass& ka, const MapClass& kb) {
    MapClass out(prod);
    for (int idx = 0; idx < prod->map_count(); ++idx) {
      const LatticeMap& f = prod->map_at(idx);
      LatticeMap fa{f.src / nb, f.tgt / nb}, fb{f.src % nb, f.tgt % nb};
      if (ka.contains(fa) && kb.contains(fb)) out.insert(idx);
    }
    return out;
  };
  ModelStructure out{componentwise(a.cof, b.cof), componentwise(a.weq, b.weq),
                     componentwise(a.fib, b.fib)};
  Check c = is_model_structure(out);
  if (!c.ok) throw InternalError("componentwise product is not a model structure: " + c.why);
  return out;
}

GaloisConnection join_diagonal_connection(const LatticePtr& lat, const LatticePtr& prod) {
  const int n = lat->size();
  std::vector<Obj> left(prod->size()), right(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) left[i * n + j] = lat->join(i, j);
  for (int x = 0; x < n; ++x) right[x] = x * n + x;
  auto g = GaloisConnection::make(prod, lat, std::move(left), std::move(right));
  if (!g.ok()) throw InternalError("join/diagonal adjunction failed: " + g.rejection().to_string());
  return *g;
}

GaloisConnection diagonal_meet_connection(const LatticePtr& lat, const LatticePtr& prod) {
  const int n = lat->size();
  std::vector<Obj> left(n), right(prod->size());
  for (int x = 0; x < n; ++x) left[x] = x * n + x;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) right[i * n + j] = lat->meet(i, j);
  auto g = GaloisConnection::make(lat, prod, std::move(left), std::move(right));
  if (!g.ok()) throw InternalError("diagonal/meet adjunction failed: " + g.rejection().to_string());
  return *g;
}

namespace {

/* Shared precondition check for both mix routes. */
std::optional<Rejection> mix_precondition(const ModelStructure& m1, const ModelStructure& m2,
                                          MixKeep keep) {
  const LatticePtr& lat = m1.lattice();
  if (!m2.lattice()->same_order_as(*lat))
    throw std::invalid_argument("mix: structures live on different lattices");
  auto overflow = [&](const Bits& a, const Bits& b) {
    return lat->map_at((a & b.complement()).next(0));
  };
  if (keep == MixKeep::Fibrations) {
    if (!m1.fib.bits().subset_of(m2.fib.bits()))
      return Rejection{"fibrations not nested",
                       "the first structure's fibrations must sit inside the second's; " +
                           map_label(lat, overflow(m1.fib.bits(), m2.fib.bits())) +
                           " is only in the first"};
  } else {
    if (!m1.cof.bits().subset_of(m2.cof.bits()))
      return Rejection{"cofibrations not nested",
                       "the first structure's cofibrations must sit inside the second's; " +
                           map_label(lat, overflow(m1.cof.bits(), m2.cof.bits())) +
                           " is only in the first"};
  }
  if (!m1.weq.bits().subset_of(m2.weq.bits()))
    return Rejection{"weak equivalences not nested",
                     "the first structure's weak equivalences must sit inside the second's; " +
                         map_label(lat, overflow(m1.weq.bits(), m2.weq.bits())) +
                         " is only in the first"};
  return std::nullopt;
}

}  // namespace

Result<ModelStructure> mix(const ModelStructure& m1, const ModelStructure& m2, MixKeep keep) {
  if (auto r = mix_precondition(m1, m2, keep)) return Result<ModelStructure>(*r);
  const LatticePtr& lat = m1.lattice();
  MapClass w2(lat, m2.weq.bits());
  ModelStructure out = keep == MixKeep::Fibrations
                           ? ModelStructure{(m1.fib & w2).llp(), w2, m1.fib}
                           : ModelStructure{m1.cof, w2, (m1.cof & w2).rlp()};
  Check c = is_model_structure(out);
  if (!c.ok) throw InternalError("mixing produced an invalid structure: " + c.why);
  return Result<ModelStructure>(std::move(out));
}

Result<ModelStructure> mix_via_diagonal(const ModelStructure& m1, const ModelStructure& m2,
                                        MixKeep keep) {
  if (auto r = mix_precondition(m1, m2, keep)) return Result<ModelStructure>(*r);
  const LatticePtr& lat = m1.lattice();
  LatticePtr prod = Lattice::product(lat, lat);
  MapClass all = MapClass::all(lat);
  ModelStructure m2_homed{MapClass(lat, m2.cof.bits()), MapClass(lat, m2.weq.bits()),
                          MapClass(lat, m2.fib.bits())};
  Result<ModelStructure> lifted = [&] {
    if (keep == MixKeep::Fibrations) {
      /* First factor forgets m1 down to (acyclic cofibrations, all, fibrations). */
      ModelStructure first{m1.tcof(), all, m1.fib};
      ModelStructure on_prod = product_structure(first, m2_homed, prod);
      return projective_lift(join_diagonal_connection(lat, prod), on_prod);
    }
    /* Dually the first factor becomes (cofibrations, all, acyclic fibrations). */
    ModelStructure first{m1.cof, all, m1.tfib()};
    ModelStructure on_prod = product_structure(first, m2_homed, prod);
    return injective_lift(diagonal_meet_connection(lat, prod), on_prod);
  }();
  if (!lifted.ok())
    throw InternalError("diagonal mixing failed unexpectedly: " + lifted.rejection().to_string());
  return lifted;
}

Report verify_prop11(const LatticePtr& lat, const EnumOptions& opts) {
  Report rep;
  rep.check = "prop11";
  rep.lattice = lat->name();
  std::vector<ModelStructure> census = enumerate_model_structures(lat, opts);
  const size_t n = census.size();
  long long mixed_fib = 0, mixed_cof = 0, f1_in_f2 = 0, f2_in_f1 = 0;
  auto pair_tag = [](size_t i, size_t j) {
    return "census pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  };
  auto run_both = [&](size_t i, size_t j, MixKeep keep, const char* what) {
    Result<ModelStructure> direct = mix(census[i], census[j], keep);
    if (!direct.ok()) {
      rep.fail("mix " + std::string(what) + " rejected an admissible " + pair_tag(i, j) + ": " +
               direct.rejection().to_string());
      return;
    }
    Result<ModelStructure> routed = mix_via_diagonal(census[i], census[j], keep);
    if (!routed.ok() || *direct != *routed) {
      rep.fail("mix " + std::string(what) + " disagrees with the diagonal construction for " +
               pair_tag(i, j));
      return;
    }
    const MapClass& kept = keep == MixKeep::Fibrations ? census[i].fib : census[i].cof;
    const MapClass& kept_out = keep == MixKeep::Fibrations ? direct->fib : direct->cof;
    if (kept_out != kept || direct->weq != census[j].weq)
      rep.fail("mix " + std::string(what) + " has the wrong kept class or weak equivalences for " +
               pair_tag(i, j));
    if (i == j && *direct != census[i])
      rep.fail("mixing structure " + std::to_string(i) + " with itself does not return it");
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const bool w_nested = census[i].weq.subset_of(census[j].weq);
      if (w_nested && census[i].fib.subset_of(census[j].fib)) {
        ++mixed_fib;
        if (i != j) ++f1_in_f2;
        run_both(i, j, MixKeep::Fibrations, "keeping fibrations");
      }
      if (w_nested && census[j].fib.subset_of(census[i].fib) && i != j) ++f2_in_f1;
      if (w_nested && census[i].cof.subset_of(census[j].cof)) {
        ++mixed_cof;
        run_both(i, j, MixKeep::Cofibrations, "keeping cofibrations");
      }
    }
  rep.count("models", static_cast<long long>(n));
  rep.count("mixed_keep_fibrations", mixed_fib);
  rep.count("mixed_keep_cofibrations", mixed_cof);
  rep.count("pairs_f1_in_f2", f1_in_f2);
  rep.count("pairs_f2_in_f1", f2_in_f1);
  return rep;
}

}  // namespace modelkit
