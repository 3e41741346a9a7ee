#include "modelkit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "modelkit/cache.hpp"
#include "modelkit/catalog.hpp"
#include "modelkit/constructions.hpp"
#include "modelkit/galois.hpp"
#include "modelkit/json_io.hpp"

namespace modelkit {

namespace {

struct Globals {
  std::string json_path;
  int jobs = 1;
  bool force = false;
  EnumOptions opts() const { return {jobs, force}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json_file(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw ParseError("'" + path + "' is not valid JSON");
  return j;
}

void write_json(const Globals& g, const Json& j) {
  if (g.json_path.empty()) return;
  std::ofstream out(g.json_path, std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + g.json_path + "'");
  out << to_file_text(j);
}

LatticePtr find_lattice(const std::string& name) {
  LatticePtr lat = catalog_lattice(name);
  if (!lat)
    throw ParseError("unknown lattice '" + name + "' (see `modelkit lattices list`)");
  return lat;
}

/* "discrete" or a model-structure JSON path; rehomed onto lat. */
ModelStructure load_base(const std::string& ref, const LatticePtr& lat) {
  if (ref == "discrete") return discrete_structure(lat);
  ModelStructure m = model_from_json(parse_json_file(ref));
  if (!m.lattice()->same_order_as(*lat))
    throw ParseError("the base structure in '" + ref + "' lives on a different lattice");
  return ModelStructure{MapClass(lat, m.cof.bits()), MapClass(lat, m.weq.bits()),
                        MapClass(lat, m.fib.bits())};
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    size_t e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

MapClass parse_maps_csv(const LatticePtr& lat, const std::string& csv) {
  MapClass out = MapClass::none(lat);
  for (const std::string& item : split_csv(csv)) out.insert(parse_map_literal(*lat, item));
  return out;
}

ObjectSet parse_objects_csv(const LatticePtr& lat, const std::string& csv) {
  ObjectSet out(lat);
  for (const std::string& item : split_csv(csv)) {
    std::optional<Obj> x = lat->object(item);
    if (!x) throw ParseError("unknown object '" + item + "' on lattice " + lat->name());
    out.insert(*x);
  }
  return out;
}

std::string set_text(const ObjectSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& l : s.member_labels()) {
    if (!first) out += ", ";
    out += l;
    first = false;
  }
  return out + "}";
}

std::string class_text(const MapClass& k) {
  if (k == MapClass::all(k.lattice())) return "all maps";
  std::string items;
  for (const LatticeMap& f : k.members()) {
    if (f.identity()) continue;
    if (!items.empty()) items += ", ";
    items += map_literal(*k.lattice(), f);
  }
  if (items.empty()) return "identities";
  return "identities + {" + items + "}";
}

void print_model(std::ostream& out, const ModelStructure& m) {
  out << "lattice: " << m.lattice()->name() << "\n";
  out << "C: " << class_text(m.cof) << "\n";
  out << "W: " << class_text(m.weq) << "\n";
  out << "F: " << class_text(m.fib) << "\n";
  out << "fibrant: " << set_text(fibrant_objects(m)) << "\n";
  out << "cofibrant: " << set_text(cofibrant_objects(m)) << "\n";
}

int finish_model(const Globals& g, const ModelStructure& m, std::ostream& out) {
  print_model(out, m);
  write_json(g, census_entry_to_json(m));
  return 0;
}

/* Hasse covers, for the compact `lattices show` output. */
bool is_cover(const Lattice& lat, const LatticeMap& f) {
  if (f.identity()) return false;
  for (Obj m = 0; m < lat.size(); ++m)
    if (m != f.src && m != f.tgt && lat.leq(f.src, m) && lat.leq(m, f.tgt)) return false;
  return true;
}

int cmd_lattices(const Globals& g, const std::string& action, const std::string& name,
                 std::ostream& out) {
  if (action == "list") {
    Json arr = Json::array();
    for (const CatalogEntry& e : catalog()) {
      out << e.name << ": " << e.lattice->size() << " objects, " << e.lattice->map_count()
          << " maps - " << e.notes << "\n";
      Json j;
      j["name"] = e.name;
      j["objects"] = e.lattice->size();
      j["maps"] = e.lattice->map_count();
      j["notes"] = e.notes;
      arr.push_back(std::move(j));
    }
    write_json(g, arr);
    return 0;
  }
  if (name.empty()) throw ParseError("lattices show needs a lattice name");
  LatticePtr lat = find_lattice(name);
  out << "# " << lat->name() << ": " << lat->size() << " objects, " << lat->map_count()
      << " maps (" << lat->nonidentity_count() << " non-identity)\n";
  out << "objects:";
  for (const std::string& l : lat->labels()) out << " " << l;
  out << "\n";
  std::string covers;
  for (int i = 0; i < lat->map_count(); ++i) {
    const LatticeMap& f = lat->map_at(i);
    if (!is_cover(*lat, f)) continue;
    if (!covers.empty()) covers += ", ";
    covers += map_literal(*lat, f);
  }
  if (!covers.empty()) out << "le: " << covers << "\n";
  write_json(g, lattice_to_json(*lat));
  return 0;
}

int cmd_enumerate(const Globals& g, const std::string& kind, const std::string& lattice_name,
                  const std::string& base_ref, std::ostream& out) {
  LatticePtr lat = find_lattice(lattice_name);
  Cache cache;

  auto models = [&]() {
    std::string key = lat->content_key() + "|models";
    if (auto hit = cache.load("models", key)) {
      std::vector<ModelStructure> ms;
      for (const Json& e : *hit) ms.push_back(model_from_json(e));
      return ms;
    }
    std::vector<ModelStructure> ms = enumerate_model_structures(lat, g.opts());
    if (cache.enabled()) {
      Json arr = Json::array();
      for (const ModelStructure& m : ms) arr.push_back(census_entry_to_json(m));
      cache.store("models", key, arr);
    }
    return ms;
  };

  if (kind == "ofs") {
    std::string key = lat->content_key() + "|ofs";
    Json arr;
    if (auto hit = cache.load("ofs", key)) {
      arr = std::move(*hit);
    } else {
      arr = Json::array();
      for (const FactorisationSystem& fs : enumerate_ofs(lat, g.opts()))
        arr.push_back(fs_to_json(fs));
      cache.store("ofs", key, arr);
    }
    out << "factorisation systems: " << arr.size() << "\n";
    write_json(g, arr);
    return 0;
  }

  std::vector<ModelStructure> chosen;
  if (kind == "models") {
    chosen = models();
  } else {
    ModelStructure base = load_base(base_ref, lat);
    chosen = kind == "localisations" ? localisations_from_census(models(), base)
                                     : colocalisations_from_census(models(), base);
  }
  Json arr = Json::array();
  for (const ModelStructure& m : chosen) arr.push_back(census_entry_to_json(m));
  out << (kind == "models" ? "model structures" : kind) << ": " << arr.size() << "\n";
  write_json(g, arr);
  return 0;
}

int cmd_localise(const Globals& g, const std::string& lattice_name, const std::string& base_ref,
                 bool have_maps, const std::string& maps_csv, bool have_objects,
                 const std::string& objects_csv, std::ostream& out) {
  if (have_maps == have_objects)
    throw ParseError("localise needs exactly one of --maps or --objects");
  LatticePtr lat = find_lattice(lattice_name);
  ModelStructure base = load_base(base_ref, lat);
  if (have_maps)
    return finish_model(g, s_localise(base, parse_maps_csv(lat, maps_csv)), out);
  Result<Locality> loc = is_locality(base, parse_objects_csv(lat, objects_csv));
  if (!loc.ok()) {
    out << "rejected: " << loc.rejection().to_string() << "\n";
    return 1;
  }
  Check hom = is_homotopical(*loc);
  if (!hom.ok) {
    out << "rejected: not homotopical: " << hom.why << "\n";
    return 1;
  }
  return finish_model(g, localise_from_locality(*loc), out);
}

int cmd_colocalise(const Globals& g, const std::string& lattice_name,
                   const std::string& base_ref, bool have_maps, bool have_objects,
                   const std::string& objects_csv, std::ostream& out) {
  if (have_maps)
    throw ParseError("colocalise takes --objects (generator objects), not --maps");
  if (!have_objects) throw ParseError("colocalise needs --objects");
  LatticePtr lat = find_lattice(lattice_name);
  ModelStructure base = load_base(base_ref, lat);
  return finish_model(g, k_colocalise(base, parse_objects_csv(lat, objects_csv)), out);
}

int cmd_mix(const Globals& g, const std::string& m1_path, const std::string& m2_path,
            const std::string& keep, std::ostream& out) {
  ModelStructure m1 = model_from_json(parse_json_file(m1_path));
  ModelStructure m2 = model_from_json(parse_json_file(m2_path));
  Result<ModelStructure> mixed =
      mix(m1, m2, keep == "fibrations" ? MixKeep::Fibrations : MixKeep::Cofibrations);
  if (!mixed.ok()) {
    out << "rejected: " << mixed.rejection().to_string() << "\n";
    return 1;
  }
  return finish_model(g, *mixed, out);
}

int cmd_lift(const Globals& g, const std::string& direction, const std::string& adjunction_path,
             const std::string& model_path, std::ostream& out) {
  std::string name = adjunction_path;
  if (size_t slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (size_t dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
  GaloisConnection conn = parse_adjunction(read_file(adjunction_path), name);
  ModelStructure m = model_from_json(parse_json_file(model_path));
  Result<ModelStructure> lifted =
      direction == "proj" ? projective_lift(conn, m) : injective_lift(conn, m);
  if (!lifted.ok()) {
    out << "rejected: " << lifted.rejection().to_string() << "\n";
    return 1;
  }
  return finish_model(g, *lifted, out);
}

int cmd_verify(const Globals& g, const std::string& name, const std::string& lattice_name,
               const std::string& base_ref, std::ostream& out) {
  LatticePtr lat = find_lattice(lattice_name);
  Report rep;
  if (name == "prop5") {
    rep = verify_prop5(lat, g.opts());
  } else if (name == "prop11") {
    rep = verify_prop11(lat, g.opts());
  } else if (name == "lemma1") {
    rep = verify_lemma1(lat, g.opts());
  } else if (name == "prop15") {
    rep = verify_prop15(lat, g.opts());
  } else {
    ModelStructure base = load_base(base_ref, lat);
    if (name == "thm1") rep = verify_thm1(base, base_ref, g.opts());
    if (name == "thm2") rep = verify_thm2(base, base_ref, g.opts());
    if (name == "thm3") rep = verify_thm3(base, base_ref, g.opts());
    if (name == "thm4") rep = verify_thm4(base, base_ref, g.opts());
    if (name == "thm5") rep = verify_thm5(base, base_ref, g.opts());
    if (name == "thm6") rep = verify_thm6(base, base_ref, g.opts());
  }
  out << rep.summary_line() << "\n";
  for (const std::string& w : rep.witnesses) out << "witness: " << w << "\n";
  write_json(g, Json::array({report_to_json(rep)}));
  return rep.ok ? 0 : 1;
}

int cmd_build(const Globals& g, const std::string& lattice_name, const std::string& locals_csv,
              const std::string& colocals_csv, std::ostream& out) {
  LatticePtr lat = find_lattice(lattice_name);
  return finish_model(
      g, prop15_build(lat, parse_objects_csv(lat, locals_csv),
                      parse_objects_csv(lat, colocals_csv)),
      out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"one-dimensional model structures on finite bounded lattices"};
  app.name("modelkit");
  Globals g;
  app.add_option("--json", g.json_path, "write the JSON result to this path");
  app.add_option("--jobs", g.jobs, "worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", g.force, "lift the enumeration guardrails");
  app.require_subcommand(1);

  auto* lattices_cmd = app.add_subcommand("lattices", "list or show the built-in lattices");
  std::string lat_action, lat_name;
  lattices_cmd->add_option("action", lat_action, "list | show")
      ->required()
      ->check(CLI::IsMember({"list", "show"}));
  lattices_cmd->add_option("name", lat_name, "lattice name for show");

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate structures on a lattice");
  std::string enum_kind, enum_lattice, enum_base = "discrete";
  enum_cmd->add_option("kind", enum_kind, "ofs | models | localisations | colocalisations")
      ->required()
      ->check(CLI::IsMember({"ofs", "models", "localisations", "colocalisations"}));
  enum_cmd->add_option("--lattice", enum_lattice, "catalog lattice name")->required();
  enum_cmd->add_option("--base", enum_base, "base structure: discrete or a JSON path");

  auto* localise_cmd =
      app.add_subcommand("localise", "localise a base structure at maps or onto local objects");
  std::string loc_lattice, loc_base = "discrete", loc_maps, loc_objects;
  localise_cmd->add_option("--lattice", loc_lattice, "catalog lattice name")->required();
  localise_cmd->add_option("--base", loc_base, "base structure: discrete or a JSON path");
  auto* loc_maps_opt = localise_cmd->add_option("--maps", loc_maps, "comma-separated a<=b maps");
  auto* loc_objs_opt =
      localise_cmd->add_option("--objects", loc_objects, "comma-separated local objects");

  auto* coloc_cmd =
      app.add_subcommand("colocalise", "colocalise a base structure at generator objects");
  std::string coloc_lattice, coloc_base = "discrete", coloc_maps, coloc_objects;
  coloc_cmd->add_option("--lattice", coloc_lattice, "catalog lattice name")->required();
  coloc_cmd->add_option("--base", coloc_base, "base structure: discrete or a JSON path");
  auto* coloc_maps_opt = coloc_cmd->add_option("--maps", coloc_maps, "unsupported here");
  auto* coloc_objs_opt =
      coloc_cmd->add_option("--objects", coloc_objects, "comma-separated generator objects");

  auto* mix_cmd = app.add_subcommand("mix", "mix two model structures");
  std::string mix_m1, mix_m2, mix_keep;
  mix_cmd->add_option("--m1", mix_m1, "first model-structure JSON path")->required();
  mix_cmd->add_option("--m2", mix_m2, "second model-structure JSON path")->required();
  mix_cmd->add_option("--keep", mix_keep, "fibrations | cofibrations")
      ->required()
      ->check(CLI::IsMember({"fibrations", "cofibrations"}));

  auto* lift_cmd = app.add_subcommand("lift", "transfer a model structure along an adjunction");
  std::string lift_dir, lift_adjunction, lift_model;
  lift_cmd->add_option("direction", lift_dir, "proj | inj")
      ->required()
      ->check(CLI::IsMember({"proj", "inj"}));
  lift_cmd->add_option("--adjunction", lift_adjunction, "adjunction file path")->required();
  lift_cmd->add_option("--model", lift_model, "model-structure JSON path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a census-scale verification");
  std::string verify_name, verify_lattice, verify_base = "discrete";
  verify_cmd
      ->add_option("name", verify_name,
                   "thm1..thm6 | prop5 | prop11 | prop15 | lemma1")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "prop5", "prop11",
                             "prop15", "lemma1"}));
  verify_cmd->add_option("--lattice", verify_lattice, "catalog lattice name")->required();
  verify_cmd->add_option("--base", verify_base, "base structure: discrete or a JSON path");

  auto* build_cmd = app.add_subcommand("build", "two-step localise-then-colocalise structure");
  std::string build_what, build_lattice, build_locals, build_colocals;
  build_cmd->add_option("what", build_what, "prop15")
      ->required()
      ->check(CLI::IsMember({"prop15"}));
  build_cmd->add_option("--lattice", build_lattice, "catalog lattice name")->required();
  build_cmd->add_option("--locals", build_locals, "comma-separated fibrant objects")
      ->required();
  build_cmd->add_option("--colocals", build_colocals, "comma-separated bifibrant objects")
      ->required();

  for (CLI::App* sub : {lattices_cmd, enum_cmd, localise_cmd, coloc_cmd, mix_cmd, lift_cmd,
                        verify_cmd, build_cmd})
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("modelkit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lattices_cmd->parsed()) return cmd_lattices(g, lat_action, lat_name, out);
    if (enum_cmd->parsed()) return cmd_enumerate(g, enum_kind, enum_lattice, enum_base, out);
    if (localise_cmd->parsed())
      return cmd_localise(g, loc_lattice, loc_base, loc_maps_opt->count() > 0, loc_maps,
                          loc_objs_opt->count() > 0, loc_objects, out);
    if (coloc_cmd->parsed())
      return cmd_colocalise(g, coloc_lattice, coloc_base, coloc_maps_opt->count() > 0,
                            coloc_objs_opt->count() > 0, coloc_objects, out);
    if (mix_cmd->parsed()) return cmd_mix(g, mix_m1, mix_m2, mix_keep, out);
    if (lift_cmd->parsed()) return cmd_lift(g, lift_dir, lift_adjunction, lift_model, out);
    if (verify_cmd->parsed())
      return cmd_verify(g, verify_name, verify_lattice, verify_base, out);
    if (build_cmd->parsed()) return cmd_build(g, build_lattice, build_locals, build_colocals, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
  err << "error: no verb given\n";
  return 2;
}

}  // namespace modelkit
