#include "modelkit/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace modelkit {

namespace {

void check_label(const std::string& l) {
  if (l.empty()) throw ParseError("empty object label");
  if (l.find_first_of(" \t,") != std::string::npos ||
      l.find("<=") != std::string::npos || l.find("->") != std::string::npos)
    throw ParseError("object label '" + l + "' contains a reserved character");
}

}  // namespace

LatticePtr Lattice::make(std::string name, std::vector<std::string> labels,
                         const std::vector<std::pair<Obj, Obj>>& relations) {
  auto lat = std::shared_ptr<Lattice>(new Lattice);
  Lattice& L = *lat;
  L.name_ = std::move(name);
  L.labels_ = std::move(labels);
  const int n = L.size();
  if (n == 0) throw ParseError("lattice has no objects");
  for (const auto& l : L.labels_) check_label(l);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L.labels_[i] == L.labels_[j])
        throw ParseError("duplicate object label '" + L.labels_[i] + "'");

  L.up_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) L.up_[i].set(i);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("relation references an unknown object");
    L.up_[a].set(b);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (L.up_[i].test(k)) L.up_[i] |= L.up_[k];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L.up_[i].test(j) && L.up_[j].test(i))
        throw ParseError("order violation: '" + L.labels_[i] + "' <= '" +
                         L.labels_[j] + "' and '" + L.labels_[j] + "' <= '" +
                         L.labels_[i] + "' for distinct objects");

  std::vector<Bits> down(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (L.up_[i].test(j)) down[j].set(i);

  auto bound = [&](const Bits& cand, const std::vector<Bits>& cone) -> Obj {
    // greatest element of cand under the order whose cones are given:
    // m in cand with cand subset of cone[m]
    for (int m = cand.next(0); m >= 0; m = cand.next(m + 1))
      if (cand.subset_of(cone[m])) return m;
    return -1;
  };

  L.meet_.assign(n * n, -1);
  L.join_.assign(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Obj m = bound(down[i] & down[j], down);
      if (m < 0)
        throw ParseError("not a lattice: objects '" + L.labels_[i] + "' and '" +
                         L.labels_[j] + "' have no meet");
      L.meet_[i * n + j] = m;
      Obj u = bound(L.up_[i] & L.up_[j], L.up_);
      if (u < 0)
        throw ParseError("not a lattice: objects '" + L.labels_[i] + "' and '" +
                         L.labels_[j] + "' have no join");
      L.join_[i * n + j] = u;
    }
  L.bottom_ = 0;
  L.top_ = 0;
  for (int i = 1; i < n; ++i) {
    L.bottom_ = L.meet_[L.bottom_ * n + i];
    L.top_ = L.join_[L.top_ * n + i];
  }

  L.mapidx_.assign(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (L.up_[i].test(j)) {
        L.mapidx_[i * n + j] = static_cast<int>(L.maps_.size());
        L.maps_.push_back({i, j});
      }

  const int m = L.map_count();
  L.lift_rows_.assign(m, Bits(m));
  L.lift_cols_.assign(m, Bits(m));
  for (int l = 0; l < m; ++l)
    for (int r = 0; r < m; ++r) {
      const auto& f = L.maps_[l];
      const auto& g = L.maps_[r];
      bool square = L.leq(f.src, g.src) && L.leq(f.tgt, g.tgt);
      bool lift = !square || L.leq(f.tgt, g.src);
      if (lift) {
        L.lift_rows_[l].set(r);
        L.lift_cols_[r].set(l);
      }
    }
  return lat;
}

std::optional<Obj> Lattice::object(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

LatticePtr Lattice::dual() const {
  std::string n = name_;
  if (n.size() >= 3 && n.compare(n.size() - 3, 3, "^op") == 0)
    n.resize(n.size() - 3);
  else
    n += "^op";
  std::vector<std::pair<Obj, Obj>> rel;
  for (const auto& f : maps_)
    if (!f.identity()) rel.emplace_back(f.tgt, f.src);
  return make(std::move(n), labels_, rel);
}

LatticePtr Lattice::product(const LatticePtr& a, const LatticePtr& b) {
  const int na = a->size(), nb = b->size();
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back(a->label(i) + "*" + b->label(j));
  std::vector<std::pair<Obj, Obj>> rel;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          if (a->leq(i, k) && b->leq(j, l))
            rel.emplace_back(i * nb + j, k * nb + l);
  return make("(" + a->name() + " x " + b->name() + ")", std::move(labels), rel);
}

bool Lattice::same_order_as(const Lattice& o) const {
  return labels_ == o.labels_ && [&] {
    for (int i = 0; i < size(); ++i)
      if (up_[i] != o.up_[i]) return false;
    return true;
  }();
}

std::string Lattice::content_key() const {
  std::ostringstream os;
  os << name_ << '\n';
  for (const auto& l : labels_) os << l << ' ';
  os << '\n';
  for (const auto& row : up_) os << row.to_string() << '\n';
  return os.str();
}

MapClass MapClass::identities(const LatticePtr& lat) {
  MapClass k(lat);
  for (int i = 0; i < lat->map_count(); ++i)
    if (lat->map_at(i).identity()) k.insert(i);
  return k;
}

void MapClass::insert(const LatticeMap& f) {
  int i = lat_->map_index(f);
  if (i < 0)
    throw InternalError("map " + std::to_string(f.src) + "->" + std::to_string(f.tgt) +
                        " does not exist in lattice " + lat_->name());
  bits_.set(i);
}

std::vector<LatticeMap> MapClass::members() const {
  std::vector<LatticeMap> out;
  for (int i = bits_.next(0); i >= 0; i = bits_.next(i + 1))
    out.push_back(lat_->map_at(i));
  return out;
}

MapClass MapClass::llp() const {
  Bits acc = Bits::ones(lat_->map_count());
  for (int r = bits_.next(0); r >= 0; r = bits_.next(r + 1))
    acc &= lat_->llp_of_single(r);
  return MapClass(lat_, std::move(acc));
}

MapClass MapClass::rlp() const {
  Bits acc = Bits::ones(lat_->map_count());
  for (int l = bits_.next(0); l >= 0; l = bits_.next(l + 1))
    acc &= lat_->rlp_of_single(l);
  return MapClass(lat_, std::move(acc));
}

std::vector<Obj> ObjectSet::members() const {
  std::vector<Obj> out;
  for (int i = bits_.next(0); i >= 0; i = bits_.next(i + 1)) out.push_back(i);
  return out;
}

std::vector<std::string> ObjectSet::member_labels() const {
  std::vector<std::string> out;
  for (Obj x : members()) out.push_back(lat_->label(x));
  return out;
}

LatticeMap pushout(const Lattice& lat, const LatticeMap& w, const LatticeMap& c) {
  if (w.src != c.src) throw InternalError("pushout requires a common source");
  return {c.tgt, lat.join(w.tgt, c.tgt)};
}

LatticeMap pullback(const Lattice& lat, const LatticeMap& w, const LatticeMap& f) {
  if (w.tgt != f.tgt) throw InternalError("pullback requires a common target");
  return {lat.meet(w.src, f.src), f.src};
}

std::string map_literal(const Lattice& lat, const LatticeMap& f) {
  return lat.label(f.src) + "<=" + lat.label(f.tgt);
}

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) next = s.size();
    out.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

LatticeMap parse_map_literal(const Lattice& lat, std::string_view text) {
  std::string t = trim(text);
  size_t p = t.find("<=");
  if (p == std::string::npos)
    throw ParseError("expected 'a<=b', got '" + t + "'");
  std::string ls = trim(t.substr(0, p)), rs = trim(t.substr(p + 2));
  auto a = lat.object(ls);
  if (!a) throw ParseError("unknown object '" + ls + "' in '" + t + "'");
  auto b = lat.object(rs);
  if (!b) throw ParseError("unknown object '" + rs + "' in '" + t + "'");
  if (!lat.leq(*a, *b))
    throw ParseError("'" + ls + "' is not below '" + rs + "' in lattice " + lat.name());
  return {*a, *b};
}

LatticePtr parse_lattice(const std::string& text, const std::string& name) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rels;
  bool saw_objects = false;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (size_t h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("objects:", 0) == 0) {
      if (saw_objects) throw ParseError("duplicate 'objects:' line");
      saw_objects = true;
      std::istringstream ls(line.substr(8));
      std::string tok;
      while (ls >> tok) labels.push_back(tok);
    } else if (line.rfind("le:", 0) == 0) {
      for (const auto& entry : split(line.substr(3), ',')) {
        if (entry.empty()) continue;
        size_t p = entry.find("<=");
        if (p == std::string::npos)
          throw ParseError("expected 'a<=b' in le: entry '" + entry + "'");
        rels.emplace_back(trim(entry.substr(0, p)), trim(entry.substr(p + 2)));
      }
    } else {
      throw ParseError("unrecognized line '" + line + "'");
    }
  }
  if (!saw_objects) throw ParseError("missing 'objects:' line");

  auto find = [&](const std::string& l) -> Obj {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<Obj>(i);
    throw ParseError("unknown object '" + l + "' in relation");
  };
  std::vector<std::pair<Obj, Obj>> relations;
  for (const auto& [a, b] : rels) relations.emplace_back(find(a), find(b));
  return Lattice::make(name, std::move(labels), relations);
}

}  // namespace modelkit
