#include "modelkit/json_io.hpp"

#include "modelkit/catalog.hpp"

namespace modelkit {

Json lattice_to_json(const Lattice& lat) {
  Json j;
  j["name"] = lat.name();
  j["objects"] = lat.labels();
  Json le = Json::array();
  for (int i = 0; i < lat.map_count(); ++i) {
    const LatticeMap& f = lat.map_at(i);
    if (!f.identity()) le.push_back(map_literal(lat, f));
  }
  j["le"] = std::move(le);
  return j;
}

LatticePtr lattice_from_json(const Json& j) {
  if (j.is_string()) {
    LatticePtr lat = catalog_lattice(j.get<std::string>());
    if (!lat) throw ParseError("unknown lattice '" + j.get<std::string>() + "'");
    return lat;
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("objects"))
    throw ParseError("a lattice must be a catalog name or an object with "
                     "\"name\", \"objects\" and \"le\"");
  if (!j["name"].is_string() || !j["objects"].is_array())
    throw ParseError("lattice \"name\" must be a string and \"objects\" an array");
  std::vector<std::string> labels;
  for (const Json& o : j["objects"]) {
    if (!o.is_string()) throw ParseError("lattice objects must be strings");
    labels.push_back(o.get<std::string>());
  }
  auto find = [&](const std::string& l) -> Obj {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<Obj>(i);
    throw ParseError("unknown object '" + l + "' in lattice relations");
  };
  std::vector<std::pair<Obj, Obj>> rel;
  if (j.contains("le")) {
    if (!j["le"].is_array()) throw ParseError("lattice \"le\" must be an array");
    for (const Json& e : j["le"]) {
      if (e.is_string()) {
        std::string s = e.get<std::string>();
        size_t at = s.find("<=");
        if (at == std::string::npos)
          throw ParseError("relation '" + s + "' is not of the form a<=b");
        rel.emplace_back(find(s.substr(0, at)), find(s.substr(at + 2)));
      } else if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string()) {
        rel.emplace_back(find(e[0].get<std::string>()), find(e[1].get<std::string>()));
      } else {
        throw ParseError("relations must be \"a<=b\" strings or [\"a\",\"b\"] pairs");
      }
    }
  }
  return Lattice::make(j["name"].get<std::string>(), std::move(labels), rel);
}

Json map_class_to_json(const MapClass& k) {
  Json out = Json::array();
  const LatticePtr& lat = k.lattice();
  for (int i = 0; i < lat->map_count(); ++i)
    if (k.contains(i)) out.push_back(map_literal(*lat, lat->map_at(i)));
  return out;
}

MapClass map_class_from_json(const LatticePtr& lat, const Json& j) {
  if (!j.is_array()) throw ParseError("a map class must be an array of maps");
  MapClass out = MapClass::identities(lat);
  for (const Json& e : j) {
    LatticeMap f;
    if (e.is_string()) {
      f = parse_map_literal(*lat, e.get<std::string>());
    } else if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string()) {
      f = parse_map_literal(*lat, e[0].get<std::string>() + "<=" + e[1].get<std::string>());
    } else {
      throw ParseError("maps must be \"a<=b\" strings or [\"a\",\"b\"] pairs");
    }
    out.insert(f);
  }
  return out;
}

Json object_set_to_json(const ObjectSet& s) {
  Json out = Json::array();
  for (const std::string& l : s.member_labels()) out.push_back(l);
  return out;
}

namespace {

Json lattice_ref(const LatticePtr& lat) {
  LatticePtr named = catalog_lattice(lat->name());
  if (named && named->same_order_as(*lat)) return Json(lat->name());
  return lattice_to_json(*lat);
}

}  // namespace

Json fs_to_json(const FactorisationSystem& fs) {
  Json j;
  j["lattice"] = lattice_ref(fs.lattice());
  j["left"] = map_class_to_json(fs.left);
  j["right"] = map_class_to_json(fs.right);
  return j;
}

Json model_to_json(const ModelStructure& m) {
  Json j;
  j["lattice"] = lattice_ref(m.lattice());
  j["C"] = map_class_to_json(m.cof);
  j["W"] = map_class_to_json(m.weq);
  j["F"] = map_class_to_json(m.fib);
  return j;
}

ModelStructure model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice") || !j.contains("C") || !j.contains("W") ||
      !j.contains("F"))
    throw ParseError("a model structure needs \"lattice\", \"C\", \"W\" and \"F\"");
  LatticePtr lat = lattice_from_json(j["lattice"]);
  ModelStructure m{map_class_from_json(lat, j["C"]), map_class_from_json(lat, j["W"]),
                   map_class_from_json(lat, j["F"])};
  Check c = is_model_structure(m);
  if (!c.ok) throw ParseError("not a model structure: " + c.why);
  return m;
}

Json census_entry_to_json(const ModelStructure& m) {
  Json j = model_to_json(m);
  j["left_proper"] = is_left_proper(m).ok;
  j["right_proper"] = is_right_proper(m).ok;
  j["fibrant"] = object_set_to_json(fibrant_objects(m));
  j["cofibrant"] = object_set_to_json(cofibrant_objects(m));
  return j;
}

Json report_to_json(const Report& r) {
  Json j;
  j["theorem"] = r.check;
  j["lattice"] = r.lattice;
  if (r.base) j["base"] = *r.base;
  Json counts = Json::object();
  for (const auto& [key, value] : r.counts) counts[key] = value;
  j["counts"] = std::move(counts);
  j["bijection_ok"] = r.ok;
  j["witnesses"] = r.witnesses;
  return j;
}

std::string to_file_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace modelkit
