#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modelkit/cache.hpp"
#include "modelkit/catalog.hpp"
#include "modelkit/cli.hpp"
#include "modelkit/constructions.hpp"
#include "modelkit/json_io.hpp"

using namespace modelkit;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_dir() {
  static int n = 0;
  std::string d = "cli-scratch-" + std::to_string(++n);
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("lattices round-trip through JSON by name and inline") {
  LatticePtr b2 = catalog_lattice("b2");
  Json j = lattice_to_json(*b2);
  CHECK(j["name"] == "b2");
  CHECK(j["objects"].size() == 4);
  LatticePtr back = lattice_from_json(j);
  CHECK(back->same_order_as(*b2));
  // By catalog name.
  CHECK(lattice_from_json(Json("b2"))->same_order_as(*b2));
  CHECK_THROWS_AS(lattice_from_json(Json("nosuch")), ParseError);

  // An inline non-catalog lattice.
  LatticePtr chain6 = parse_lattice(
      "objects: p q r s t u\nle: p<=q, q<=r, r<=s, s<=t, t<=u\n", "six");
  LatticePtr again = lattice_from_json(lattice_to_json(*chain6));
  CHECK(again->same_order_as(*chain6));
  CHECK(again->name() == "six");
}

TEST_CASE("map classes serialize in index order and parse both spellings") {
  LatticePtr b2 = catalog_lattice("b2");
  MapClass ids = MapClass::identities(b2);
  Json j = map_class_to_json(ids);
  CHECK(j.size() == 4);
  // Strings or pairs, identities implied.
  MapClass k1 = map_class_from_json(b2, Json::parse(R"(["bot<=a"])"));
  MapClass k2 = map_class_from_json(b2, Json::parse(R"([["bot","a"]])"));
  CHECK(k1 == k2);
  CHECK(k1.contains(parse_map_literal(*b2, "bot<=a")));
  CHECK(ids.subset_of(k1));
  CHECK_THROWS_AS(map_class_from_json(b2, Json::parse(R"(["a<=b"])")), ParseError);
}

TEST_CASE("model structures validate on load") {
  LatticePtr b2 = catalog_lattice("b2");
  for (const ModelStructure& m : enumerate_model_structures(b2)) {
    ModelStructure back = model_from_json(model_to_json(m));
    CHECK(back == m);
    CHECK(back.lattice()->same_order_as(*b2));
  }
  Json bad = model_to_json(discrete_structure(b2));
  bad["W"].push_back("bot<=a");  // the acyclic cofibrations stop lifting against F
  CHECK_THROWS_WITH_AS(model_from_json(bad), doctest::Contains("not a model structure"),
                       ParseError);
}

TEST_CASE("census entries carry the derived facts") {
  LatticePtr c2 = catalog_lattice("c2");
  Json e = census_entry_to_json(discrete_structure(c2));
  CHECK(e["left_proper"] == true);
  CHECK(e["right_proper"] == true);
  CHECK(e["fibrant"].size() == 2);
  CHECK(e["cofibrant"].size() == 2);
}

TEST_CASE("reports serialize with ordered counts") {
  Report rep;
  rep.check = "thm1";
  rep.lattice = "c2";
  rep.base = "discrete";
  rep.count("localisations", 2);
  rep.count("homotopical_localities", 2);
  Json j = report_to_json(rep);
  CHECK(j["theorem"] == "thm1");
  CHECK(j["lattice"] == "c2");
  CHECK(j["base"] == "discrete");
  CHECK(j["bijection_ok"] == true);
  CHECK(j["counts"]["localisations"] == 2);
  CHECK(j["witnesses"].empty());
  CHECK(rep.summary_line() ==
        "bijection_ok: true, localisations: 2, homotopical_localities: 2");
}

TEST_CASE("the command line front end reports and exits by outcome") {
  CliRun ok = run({"verify", "thm1", "--lattice", "c2"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "bijection_ok: true, localisations: 2, homotopical_localities: 2\n");

  CliRun reject = run({"localise", "--lattice", "b2", "--objects", "a,b"});
  CHECK(reject.code == 1);
  CHECK(reject.out.substr(0, 9) == "rejected:");

  CliRun usage = run({"verify", "nosuch", "--lattice", "c2"});
  CHECK(usage.code == 2);

  CliRun unknown = run({"verify", "thm1", "--lattice", "zzz"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown lattice") != std::string::npos);

  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("modelkit") != std::string::npos);

  CliRun nothing = run({});
  CHECK(nothing.code == 2);
}

TEST_CASE("the worked flat-plane localisation prints and serializes exactly") {
  std::string dir = temp_dir();
  std::string json_path = dir + "/local.json";
  CliRun r = run({"--json", json_path, "localise", "--lattice", "b2", "--base",
                  "discrete", "--maps", "bot<=a"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "lattice: b2\n"
        "C: all maps\n"
        "W: identities + {bot<=a, b<=top}\n"
        "F: identities + {bot<=b, a<=top}\n"
        "fibrant: {a, top}\n"
        "cofibrant: {bot, a, b, top}\n");
  Json j = Json::parse(slurp(json_path));
  CHECK(j["lattice"] == "b2");
  CHECK(j["fibrant"] == Json::parse(R"(["a","top"])"));
  ModelStructure m = model_from_json(j);
  CHECK(m.weq.count() == 6);
}

TEST_CASE("a saved model structure can seed later commands as the base") {
  std::string dir = temp_dir();
  std::string base_path = dir + "/base.json";
  REQUIRE(run({"--json", base_path, "localise", "--lattice", "b2", "--maps", "bot<=a"})
              .code == 0);
  // Localisations of that base: itself and the full collapse.
  CliRun locs = run({"enumerate", "localisations", "--lattice", "b2", "--base", base_path});
  CHECK(locs.code == 0);
  CHECK(locs.out == "localisations: 2\n");
  // And the verify verbs accept it.
  CliRun vr = run({"verify", "thm1", "--lattice", "b2", "--base", base_path});
  CHECK(vr.code == 0);
}

TEST_CASE("verification runs are deterministic byte for byte") {
  std::string dir = temp_dir();
  for (const char* verb : {"thm1", "thm3", "prop5", "lemma1"}) {
    CAPTURE(verb);
    std::string p1 = dir + "/one.json", p2 = dir + "/two.json";
    CliRun a = run({"--json", p1, "--jobs", "1", "verify", verb, "--lattice", "b2"});
    CliRun b = run({"--json", p2, "--jobs", "1", "verify", verb, "--lattice", "b2"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(p1) == slurp(p2));
  }
}

TEST_CASE("enumeration results are reused from the cache directory") {
  std::string dir = temp_dir();
  setenv("MODELKIT_CACHE_DIR", dir.c_str(), 1);
  CliRun first = run({"enumerate", "models", "--lattice", "c2"});
  REQUIRE(first.code == 0);
  CHECK(first.out == "model structures: 3\n");
  // Exactly one cache file appears; doctor it to prove later runs read it.
  std::string cache_file;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") cache_file = e.path().string();
  REQUIRE_FALSE(cache_file.empty());
  Json blob = Json::parse(slurp(cache_file));
  REQUIRE(blob["data"].size() == 3);
  blob["data"].erase(2);
  {
    std::ofstream out(cache_file, std::ios::trunc);
    out << blob.dump();
  }
  CliRun doctored = run({"enumerate", "models", "--lattice", "c2"});
  CHECK(doctored.out == "model structures: 2\n");

  // A stale key is ignored and the census recomputed.
  blob["key"] = "something else";
  {
    std::ofstream out(cache_file, std::ios::trunc);
    out << blob.dump();
  }
  CliRun recomputed = run({"enumerate", "models", "--lattice", "c2"});
  CHECK(recomputed.out == "model structures: 3\n");

  // Corrupt JSON is likewise ignored.
  {
    std::ofstream out(cache_file, std::ios::trunc);
    out << "{corrupt";
  }
  CliRun after_corrupt = run({"enumerate", "models", "--lattice", "c2"});
  CHECK(after_corrupt.out == "model structures: 3\n");
  unsetenv("MODELKIT_CACHE_DIR");
}

TEST_CASE("lattice listings show shapes and text forms") {
  CliRun list = run({"lattices", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("b2: 4 objects, 9 maps") != std::string::npos);
  CliRun show = run({"lattices", "show", "n5"});
  CHECK(show.code == 0);
  CHECK(show.out.find("objects: bot a b c top") != std::string::npos);
  // The show output's cover list parses back to the same lattice.
  CliRun bad = run({"lattices", "show", "zzz"});
  CHECK(bad.code == 2);
}

TEST_CASE("the enumerate verbs agree with the library counts") {
  CliRun ofs = run({"enumerate", "ofs", "--lattice", "b2"});
  CHECK(ofs.code == 0);
  CHECK(ofs.out == "factorisation systems: " +
                       std::to_string(enumerate_ofs(catalog_lattice("b2")).size()) + "\n");
  CliRun colocs = run({"enumerate", "colocalisations", "--lattice", "b2"});
  CHECK(colocs.out == "colocalisations: 7\n");
}

TEST_CASE("mix and lift verbs are reachable end to end") {
  std::string dir = temp_dir();
  std::string m1 = dir + "/m1.json", m2 = dir + "/m2.json";
  REQUIRE(run({"--json", m1, "localise", "--lattice", "b2", "--maps", "bot<=a"}).code == 0);
  REQUIRE(run({"--json", m2, "colocalise", "--lattice", "b2", "--objects", "a"}).code == 0);
  // Keeping the fibrations of the colocalisation inside the localisation's
  // equivalences fails the nesting precondition.
  CliRun bad = run({"mix", "--m1", m2, "--m2", m1, "--keep", "cofibrations"});
  CHECK(bad.code == 1);
  CHECK(bad.out.substr(0, 9) == "rejected:");
  // A structure mixes with itself.
  CliRun good = run({"mix", "--m1", m1, "--m2", m1, "--keep", "fibrations"});
  CHECK(good.code == 0);

  std::string adj = dir + "/adj.txt";
  {
    std::ofstream out(adj);
    out << "objects: 0 1\nle: 0<=1\n\n"
           "objects: bot a b top\nle: bot<=a, bot<=b, a<=top, b<=top\n\n"
           "left: 0->bot, 1->top\n"
           "right: bot->0, a->0, b->0, top->1\n";
  }
  std::string flat = dir + "/flat.json";
  {
    std::ofstream out(flat);
    out << to_file_text(model_to_json(discrete_structure(catalog_lattice("c2"))));
  }
  CliRun lifted = run({"lift", "proj", "--adjunction", adj, "--model", flat});
  CHECK(lifted.code == 0);
  CHECK(lifted.out.find("lattice: adj.upper") != std::string::npos);
}

TEST_CASE("the build verb assembles the two-step structure") {
  CliRun r = run({"build", "prop15", "--lattice", "b2", "--locals", "a,top",
                  "--colocals", "a"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fibrant: {a, top}\n") != std::string::npos);
  CHECK(r.out.find("cofibrant: {bot, a}\n") != std::string::npos);
  CliRun bad = run({"build", "prop15", "--lattice", "b2", "--locals", "a,top",
                    "--colocals", "top"});
  CHECK(bad.code == 2);
}

TEST_CASE("content hashing is stable and collision-aware at this scale") {
  CHECK(content_hash("abc") == content_hash("abc"));
  CHECK(content_hash("abc") != content_hash("abd"));
  CHECK(content_hash("").size() == 16);
}
