#include "modelkit/factorisation.hpp"

#include <algorithm>
#include <set>

#include "modelkit/parallel.hpp"

namespace modelkit {

namespace {

/* Middle objects m with (src, m) in left and (m, tgt) in right. */
std::vector<Obj> factor_mids(const FactorisationSystem& fs, const LatticeMap& f) {
  const Lattice& lat = *fs.lattice();
  std::vector<Obj> mids;
  for (Obj m = 0; m < lat.size(); ++m) {
    if (!lat.leq(f.src, m) || !lat.leq(m, f.tgt)) continue;
    if (fs.left.contains(LatticeMap{f.src, m}) && fs.right.contains(LatticeMap{m, f.tgt}))
      mids.push_back(m);
  }
  return mids;
}

}  // namespace

Check is_wfs(const FactorisationSystem& fs) {
  const LatticePtr& lat = fs.lattice();
  if (!fs.right.lattice()->same_order_as(*lat))
    throw std::invalid_argument("is_wfs: classes live on different lattices");
  MapClass want_right = fs.left.rlp();
  if (want_right != fs.right) {
    LatticeMap w = lat->map_at(first_diff(want_right.bits(), fs.right.bits()));
    return {false, "right class is not the lifting complement of the left class "
                   "(differs at " + map_literal(*lat, w) + ")"};
  }
  MapClass want_left = fs.right.llp();
  if (want_left != fs.left) {
    LatticeMap w = lat->map_at(first_diff(want_left.bits(), fs.left.bits()));
    return {false, "left class is not the lifting complement of the right class "
                   "(differs at " + map_literal(*lat, w) + ")"};
  }
  for (int i = 0; i < lat->map_count(); ++i) {
    auto mids = factor_mids(fs, lat->map_at(i));
    if (mids.empty())
      return {false, "no factorisation for " + map_literal(*lat, lat->map_at(i))};
    if (mids.size() > 1)
      return {false, "factorisation of " + map_literal(*lat, lat->map_at(i)) +
                     " is not unique ('" + lat->label(mids[0]) + "' and '" +
                     lat->label(mids[1]) + "')"};
  }
  return {};
}

Factorisation factor(const FactorisationSystem& fs, const LatticeMap& f) {
  auto mids = factor_mids(fs, f);
  if (mids.size() != 1)
    throw InternalError("corrupted factorisation system: map " +
                        map_literal(*fs.lattice(), f) + " has " +
                        std::to_string(mids.size()) + " factorisations");
  return {mids[0], {f.src, mids[0]}, {mids[0], f.tgt}};
}

std::vector<FactorisationSystem> enumerate_ofs(const LatticePtr& lat,
                                               const EnumOptions& opts) {
  const int k = lat->nonidentity_count();
  if (k > 24 && !opts.force)
    throw std::invalid_argument(
        "lattice '" + lat->name() + "' has " + std::to_string(k) +
        " non-identity maps; enumeration is capped at 24 (use force to override)");

  std::vector<int> gens;
  for (int i = 0; i < lat->map_count(); ++i)
    if (!lat->map_at(i).identity()) gens.push_back(i);

  const uint64_t total = 1ull << k;
  const int jobs = opts.jobs < 1 ? 1 : opts.jobs;
  const int chunks = static_cast<int>(std::min<uint64_t>(total, jobs));
  std::vector<std::set<std::pair<Bits, Bits>>> found(chunks);

  parallel_chunks(jobs, chunks, [&](int c) {
    uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    const Bits all = Bits::ones(lat->map_count());
    for (uint64_t s = lo; s < hi; ++s) {
      Bits right = all;
      for (int b = 0; b < k; ++b)
        if (s >> b & 1) right &= lat->rlp_of_single(gens[b]);
      Bits left = all;
      for (int r = right.next(0); r >= 0; r = right.next(r + 1))
        left &= lat->llp_of_single(r);
      found[c].emplace(std::move(left), std::move(right));
    }
  });

  std::set<std::pair<Bits, Bits>> merged;
  for (auto& s : found) merged.merge(s);

  std::vector<FactorisationSystem> out;
  for (const auto& [l, r] : merged) {
    FactorisationSystem fs{MapClass(lat, l), MapClass(lat, r)};
    if (is_wfs(fs).ok) out.push_back(std::move(fs));
  }
  // merged is ordered by (left, right) bit patterns already; left determines
  // right, so this is the canonical order by left-class bit pattern.
  return out;
}

}  // namespace modelkit
