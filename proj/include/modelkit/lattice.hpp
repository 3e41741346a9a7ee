#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modelkit/bitset.hpp"
#include "modelkit/result.hpp"

namespace modelkit {

using Obj = int;

/* A comparable pair src <= tgt, i.e. the unique arrow src -> tgt. */
struct LatticeMap {
  Obj src = 0, tgt = 0;
  bool identity() const { return src == tgt; }
  friend bool operator==(const LatticeMap& a, const LatticeMap& b) {
    return a.src == b.src && a.tgt == b.tgt;
  }
  friend bool operator!=(const LatticeMap& a, const LatticeMap& b) { return !(a == b); }
  friend bool operator<(const LatticeMap& a, const LatticeMap& b) {
    return a.src != b.src ? a.src < b.src : a.tgt < b.tgt;
  }
};

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/*
 * A finite bounded lattice, viewed as a skeletal category whose hom-sets have
 * at most one element. Immutable after construction; safe to share across
 * threads. Comparable pairs ("maps") are enumerated once in a canonical order
 * (ascending by source index, then target index) and addressed by index; all
 * per-map lifting masks are precomputed.
 */
class Lattice {
 public:
  /* Builds from generating relations; computes the reflexive-transitive
   * closure, then validates antisymmetry and the existence of all binary
   * meets and joins. Throws ParseError on violation. */
  static LatticePtr make(std::string name, std::vector<std::string> labels,
                         const std::vector<std::pair<Obj, Obj>>& relations);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Obj x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Obj> object(std::string_view label) const;

  bool leq(Obj a, Obj b) const { return up_[a].test(b); }
  Obj meet(Obj a, Obj b) const { return meet_[a * size() + b]; }
  Obj join(Obj a, Obj b) const { return join_[a * size() + b]; }
  Obj bottom() const { return bottom_; }
  Obj top() const { return top_; }

  int map_count() const { return static_cast<int>(maps_.size()); }
  int nonidentity_count() const { return map_count() - size(); }
  const LatticeMap& map_at(int idx) const { return maps_[idx]; }
  /* -1 when src is not <= tgt */
  int map_index(Obj src, Obj tgt) const { return mapidx_[src * size() + tgt]; }
  int map_index(const LatticeMap& f) const { return map_index(f.src, f.tgt); }

  /* Whether l has the left lifting property against r: every commuting
   * square from l to r admits a diagonal. */
  bool lifts(int left_idx, int right_idx) const {
    return lift_rows_[left_idx].test(right_idx);
  }
  /* {r : lifts(l, r)} and {l : lifts(l, r)} as bit rows over map indices. */
  const Bits& rlp_of_single(int l) const { return lift_rows_[l]; }
  const Bits& llp_of_single(int r) const { return lift_cols_[r]; }

  /* Order-dual lattice: same objects and labels, order reversed. The name
   * gains (or sheds) a trailing "^op" so that dualizing twice round-trips. */
  LatticePtr dual() const;

  /* Componentwise-ordered product. The object at pair (i, j) of the factors
   * has index i * b.size() + j and label "<la>*<lb>". */
  static LatticePtr product(const LatticePtr& a, const LatticePtr& b);

  /* Structural identity: same labels in the same order, same order relation.
   * The name is ignored. */
  bool same_order_as(const Lattice& o) const;

  /* Deterministic serialization of the full content, for cache keys. */
  std::string content_key() const;

 private:
  Lattice() = default;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Bits> up_;            // up_[i] bit j  <=>  i <= j
  std::vector<Obj> meet_, join_;    // n*n tables
  Obj bottom_ = 0, top_ = 0;
  std::vector<LatticeMap> maps_;
  std::vector<int> mapidx_;         // n*n, -1 when incomparable
  std::vector<Bits> lift_rows_;     // lift_rows_[l] = {r : lifts(l, r)}
  std::vector<Bits> lift_cols_;     // lift_cols_[r] = {l : lifts(l, r)}
};

/* A set of maps of one lattice, stored as a bit row over map indices. */
class MapClass {
 public:
  MapClass() = default;
  explicit MapClass(LatticePtr lat)
      : lat_(std::move(lat)), bits_(lat_->map_count()) {}
  MapClass(LatticePtr lat, Bits bits) : lat_(std::move(lat)), bits_(std::move(bits)) {}

  static MapClass none(const LatticePtr& lat) { return MapClass(lat); }
  static MapClass all(const LatticePtr& lat) {
    return MapClass(lat, Bits::ones(lat->map_count()));
  }
  static MapClass identities(const LatticePtr& lat);

  const LatticePtr& lattice() const { return lat_; }
  const Bits& bits() const { return bits_; }
  int count() const { return bits_.count(); }

  bool contains(int idx) const { return bits_.test(idx); }
  bool contains(const LatticeMap& f) const {
    int i = lat_->map_index(f);
    return i >= 0 && bits_.test(i);
  }
  void insert(int idx) { bits_.set(idx); }
  void insert(const LatticeMap& f);
  void erase(int idx) { bits_.reset(idx); }

  MapClass& operator&=(const MapClass& o) { bits_ &= o.bits_; return *this; }
  MapClass& operator|=(const MapClass& o) { bits_ |= o.bits_; return *this; }
  friend MapClass operator&(MapClass a, const MapClass& b) { return a &= b; }
  friend MapClass operator|(MapClass a, const MapClass& b) { return a |= b; }
  MapClass complement() const { return MapClass(lat_, bits_.complement()); }

  bool subset_of(const MapClass& o) const { return bits_.subset_of(o.bits_); }
  friend bool operator==(const MapClass& a, const MapClass& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const MapClass& a, const MapClass& b) { return !(a == b); }

  std::vector<LatticeMap> members() const;

  /* {l : lifts(l, r) for every r in this class} */
  MapClass llp() const;
  /* {r : lifts(l, r) for every l in this class} */
  MapClass rlp() const;

 private:
  LatticePtr lat_;
  Bits bits_;
};

/* A set of objects of one lattice. */
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(LatticePtr lat) : lat_(std::move(lat)), bits_(lat_->size()) {}
  ObjectSet(LatticePtr lat, Bits bits) : lat_(std::move(lat)), bits_(std::move(bits)) {}
  static ObjectSet all(const LatticePtr& lat) {
    return ObjectSet(lat, Bits::ones(lat->size()));
  }

  const LatticePtr& lattice() const { return lat_; }
  const Bits& bits() const { return bits_; }
  int count() const { return bits_.count(); }
  bool contains(Obj x) const { return bits_.test(x); }
  void insert(Obj x) { bits_.set(x); }

  ObjectSet& operator&=(const ObjectSet& o) { bits_ &= o.bits_; return *this; }
  friend ObjectSet operator&(ObjectSet a, const ObjectSet& b) { return a &= b; }
  bool subset_of(const ObjectSet& o) const { return bits_.subset_of(o.bits_); }
  friend bool operator==(const ObjectSet& a, const ObjectSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const ObjectSet& a, const ObjectSet& b) { return !(a == b); }

  std::vector<Obj> members() const;
  std::vector<std::string> member_labels() const;

 private:
  LatticePtr lat_;
  Bits bits_;
};

/* Pushout of w: x -> y along c: x -> z (common source), namely z -> y v z. */
LatticeMap pushout(const Lattice& lat, const LatticeMap& w, const LatticeMap& c);
/* Pullback of w: y -> x along f: z -> x (common target), namely y ^ z -> z. */
LatticeMap pullback(const Lattice& lat, const LatticeMap& w, const LatticeMap& f);

/* "src<=tgt" using object labels. */
std::string map_literal(const Lattice& lat, const LatticeMap& f);
/* Parses "a<=b" against the lattice. Throws ParseError on unknown labels or
 * when the pair is not comparable. */
LatticeMap parse_map_literal(const Lattice& lat, std::string_view text);

/*
 * Text format for lattices:
 *   objects: bot a b top        (exactly one such line)
 *   le: bot<=a, bot<=b          (zero or more; entries comma-separated)
 *   le: a<=top, b<=top
 * '#' begins a comment anywhere on a line. The order is the
 * reflexive-transitive closure of the listed relations.
 */
LatticePtr parse_lattice(const std::string& text, const std::string& name);

}  // namespace modelkit
