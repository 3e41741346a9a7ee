#pragma once

/*
 * Brute-force reference implementations used only by the tests. Everything
 * here is recomputed from the order relation alone — no reuse of the
 * library's precomputed lifting masks or enumeration strategies — so that
 * agreement between the two is meaningful.
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "modelkit/model.hpp"

namespace oracle {

using modelkit::Bits;
using modelkit::Lattice;
using modelkit::LatticeMap;
using modelkit::LatticePtr;
using modelkit::MapClass;
using modelkit::ModelStructure;
using modelkit::Obj;

/* l lifts against r: whenever the square exists (l sits over r), the
 * diagonal l.tgt <= r.src must exist. */
inline bool lifts(const Lattice& lat, const LatticeMap& l, const LatticeMap& r) {
  if (!lat.leq(l.src, r.src) || !lat.leq(l.tgt, r.tgt)) return true;
  return lat.leq(l.tgt, r.src);
}

inline MapClass llp(const MapClass& right) {
  const LatticePtr& lat = right.lattice();
  MapClass out = MapClass::none(lat);
  for (int i = 0; i < lat->map_count(); ++i) {
    bool all = true;
    for (const LatticeMap& r : right.members())
      if (!lifts(*lat, lat->map_at(i), r)) {
        all = false;
        break;
      }
    if (all) out.insert(i);
  }
  return out;
}

inline MapClass rlp(const MapClass& left) {
  const LatticePtr& lat = left.lattice();
  MapClass out = MapClass::none(lat);
  for (int i = 0; i < lat->map_count(); ++i) {
    bool all = true;
    for (const LatticeMap& l : left.members())
      if (!lifts(*lat, l, lat->map_at(i))) {
        all = false;
        break;
      }
    if (all) out.insert(i);
  }
  return out;
}

inline std::vector<Obj> factor_mids(const MapClass& left, const MapClass& right,
                                    const LatticeMap& f) {
  const Lattice& lat = *left.lattice();
  std::vector<Obj> mids;
  for (Obj m = 0; m < lat.size(); ++m)
    if (lat.leq(f.src, m) && lat.leq(m, f.tgt) && left.contains(LatticeMap{f.src, m}) &&
        right.contains(LatticeMap{m, f.tgt}))
      mids.push_back(m);
  return mids;
}

inline bool is_wfs(const MapClass& left, const MapClass& right) {
  if (llp(right) != left || rlp(left) != right) return false;
  const LatticePtr& lat = left.lattice();
  for (int i = 0; i < lat->map_count(); ++i)
    if (factor_mids(left, right, lat->map_at(i)).size() != 1) return false;
  return true;
}

/* Every weak factorisation system on the lattice, found by scanning all
 * candidate right classes. Left/right classes of any system necessarily
 * contain the identities (identities lift both ways against everything), so
 * only identity-containing subsets are scanned. */
inline std::vector<modelkit::FactorisationSystem> all_wfs(const LatticePtr& lat) {
  std::vector<int> gens;
  for (int i = 0; i < lat->map_count(); ++i)
    if (!lat->map_at(i).identity()) gens.push_back(i);
  std::vector<modelkit::FactorisationSystem> out;
  for (std::uint64_t mask = 0; mask < (1ull << gens.size()); ++mask) {
    MapClass right = MapClass::identities(lat);
    for (size_t b = 0; b < gens.size(); ++b)
      if (mask >> b & 1) right.insert(gens[b]);
    MapClass left = llp(right);
    if (rlp(left) != right) continue;
    bool factors = true;
    for (int i = 0; i < lat->map_count() && factors; ++i)
      factors = factor_mids(left, right, lat->map_at(i)).size() == 1;
    if (factors) out.push_back({std::move(left), std::move(right)});
  }
  std::sort(out.begin(), out.end(),
            [](const modelkit::FactorisationSystem& a,
               const modelkit::FactorisationSystem& b) {
              return a.left.bits() != b.left.bits() ? a.left.bits() < b.left.bits()
                                                    : a.right.bits() < b.right.bits();
            });
  return out;
}

/* Two-of-three over all composable pairs x <= y <= z. */
inline bool two_of_three(const MapClass& w) {
  const Lattice& lat = *w.lattice();
  for (Obj x = 0; x < lat.size(); ++x)
    for (Obj y = 0; y < lat.size(); ++y) {
      if (!lat.leq(x, y)) continue;
      for (Obj z = 0; z < lat.size(); ++z) {
        if (!lat.leq(y, z)) continue;
        bool f = w.contains(LatticeMap{x, y});
        bool g = w.contains(LatticeMap{y, z});
        bool gf = w.contains(LatticeMap{x, z});
        if ((f && g && !gf) || (f && gf && !g) || (g && gf && !f)) return false;
      }
    }
  return true;
}

inline bool is_model(const ModelStructure& m) {
  return two_of_three(m.weq) && is_wfs(m.cof & m.weq, m.fib) &&
         is_wfs(m.cof, m.fib & m.weq);
}

/* Census by scanning every triple of identity-containing map classes
 * directly against the axioms. Identities are forced into all three classes
 * with no loss: each class is the left or right half of some factorisation
 * system, hence contains them, and W contains them by two-of-three against
 * C n W. */
inline std::vector<ModelStructure> census(const LatticePtr& lat) {
  std::vector<int> gens;
  for (int i = 0; i < lat->map_count(); ++i)
    if (!lat->map_at(i).identity()) gens.push_back(i);
  const int k = static_cast<int>(gens.size());
  auto cls = [&](std::uint64_t mask) {
    MapClass out = MapClass::identities(lat);
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1) out.insert(gens[b]);
    return out;
  };
  std::vector<ModelStructure> out;
  for (std::uint64_t c = 0; c < (1ull << k); ++c) {
    MapClass cof = cls(c);
    for (std::uint64_t w = 0; w < (1ull << k); ++w) {
      MapClass weq = cls(w);
      if (!two_of_three(weq)) continue;
      for (std::uint64_t f = 0; f < (1ull << k); ++f) {
        ModelStructure m{cof, weq, cls(f)};
        if (is_wfs(m.tcof(), m.fib) && is_wfs(m.cof, m.tfib())) out.push_back(m);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ModelStructure& a, const ModelStructure& b) {
    if (a.cof.bits() != b.cof.bits()) return a.cof.bits() < b.cof.bits();
    if (a.weq.bits() != b.weq.bits()) return a.weq.bits() < b.weq.bits();
    return a.fib.bits() < b.fib.bits();
  });
  return out;
}

/* Fibrant and cofibrant replacement read off a structure by unique-mid
 * factorisation of x -> top and bottom -> x. */
struct Reps {
  std::vector<Obj> r, q;
};
inline Reps reps(const ModelStructure& m) {
  const LatticePtr& lat = m.lattice();
  Reps out;
  for (Obj x = 0; x < lat->size(); ++x) {
    auto rm = factor_mids(m.tcof(), m.fib, LatticeMap{x, lat->top()});
    auto qm = factor_mids(m.cof, m.tfib(), LatticeMap{lat->bottom(), x});
    if (rm.size() != 1 || qm.size() != 1)
      throw std::logic_error("oracle::reps needs a model structure");
    out.r.push_back(rm[0]);
    out.q.push_back(qm[0]);
  }
  return out;
}

/* The derived hom E(Qa, Rb) as a truth table. */
inline bool derived_hom(const ModelStructure& m, const Reps& rep, Obj a, Obj b) {
  return m.lattice()->leq(rep.q[a], rep.r[b]);
}

}  // namespace oracle
