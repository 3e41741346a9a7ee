#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modelkit/catalog.hpp"
#include "modelkit/lattice.hpp"
#include "oracles.hpp"

using namespace modelkit;

TEST_CASE("catalog shapes are as advertised") {
  struct Row {
    const char* name;
    int objects, maps;
  };
  for (Row row : {Row{"c1", 1, 1}, Row{"c2", 2, 3}, Row{"c3", 3, 6}, Row{"c4", 4, 10},
                  Row{"c5", 5, 15}, Row{"b2", 4, 9}, Row{"b3", 8, 27}, Row{"n5", 5, 13},
                  Row{"m3", 5, 12}}) {
    CAPTURE(row.name);
    LatticePtr lat = catalog_lattice(row.name);
    REQUIRE(lat != nullptr);
    CHECK(lat->size() == row.objects);
    CHECK(lat->map_count() == row.maps);
    CHECK(lat->nonidentity_count() == row.maps - row.objects);
    CHECK(lat->leq(lat->bottom(), lat->top()));
  }
  CHECK(catalog_lattice("nosuch") == nullptr);
}

TEST_CASE("meets and joins on the named lattices") {
  LatticePtr b2 = catalog_lattice("b2");
  Obj a = *b2->object("a"), b = *b2->object("b");
  CHECK(b2->meet(a, b) == b2->bottom());
  CHECK(b2->join(a, b) == b2->top());
  CHECK(b2->meet(a, a) == a);
  CHECK(b2->join(a, b2->bottom()) == a);

  LatticePtr n5 = catalog_lattice("n5");
  Obj na = *n5->object("a"), nb = *n5->object("b"), nc = *n5->object("c");
  CHECK(n5->leq(na, nb));
  CHECK_FALSE(n5->leq(na, nc));
  CHECK_FALSE(n5->leq(nc, na));
  CHECK(n5->meet(nb, nc) == n5->bottom());
  CHECK(n5->join(na, nc) == n5->top());

  LatticePtr m3 = catalog_lattice("m3");
  Obj ma = *m3->object("a"), mb = *m3->object("b"), mc = *m3->object("c");
  CHECK(m3->meet(ma, mb) == m3->bottom());
  CHECK(m3->join(mb, mc) == m3->top());
}

TEST_CASE("meet and join satisfy the lattice laws everywhere") {
  for (const char* name : {"c4", "b2", "b3", "n5", "m3"}) {
    CAPTURE(name);
    LatticePtr lat = catalog_lattice(name);
    for (Obj x = 0; x < lat->size(); ++x)
      for (Obj y = 0; y < lat->size(); ++y) {
        Obj m = lat->meet(x, y), j = lat->join(x, y);
        CHECK(lat->leq(m, x));
        CHECK(lat->leq(m, y));
        CHECK(lat->leq(x, j));
        CHECK(lat->leq(y, j));
        // m is the greatest lower bound, j the least upper bound.
        for (Obj z = 0; z < lat->size(); ++z) {
          if (lat->leq(z, x) && lat->leq(z, y)) CHECK(lat->leq(z, m));
          if (lat->leq(x, z) && lat->leq(y, z)) CHECK(lat->leq(j, z));
        }
        CHECK((lat->leq(x, y) == (m == x)));
        CHECK((lat->leq(x, y) == (j == y)));
      }
  }
}

TEST_CASE("map enumeration is canonical and indexed both ways") {
  LatticePtr lat = catalog_lattice("b2");
  for (int i = 0; i < lat->map_count(); ++i) {
    const LatticeMap& f = lat->map_at(i);
    CHECK(lat->leq(f.src, f.tgt));
    CHECK(lat->map_index(f) == i);
    if (i > 0) CHECK(lat->map_at(i - 1) < f);
  }
  Obj a = *lat->object("a"), b = *lat->object("b");
  CHECK(lat->map_index(a, b) == -1);
}

TEST_CASE("precomputed lifting masks match the square-by-square definition") {
  for (const char* name : {"c3", "b2", "n5", "m3"}) {
    CAPTURE(name);
    LatticePtr lat = catalog_lattice(name);
    for (int l = 0; l < lat->map_count(); ++l)
      for (int r = 0; r < lat->map_count(); ++r)
        CHECK(lat->lifts(l, r) == oracle::lifts(*lat, lat->map_at(l), lat->map_at(r)));
  }
}

TEST_CASE("llp and rlp of classes match the oracle") {
  LatticePtr lat = catalog_lattice("n5");
  // Walk a few structured subsets: every singleton plus a couple of unions.
  for (int i = 0; i < lat->map_count(); ++i) {
    MapClass k = MapClass::none(lat);
    k.insert(i);
    CHECK(k.llp() == oracle::llp(k));
    CHECK(k.rlp() == oracle::rlp(k));
  }
  MapClass ids = MapClass::identities(lat);
  CHECK(ids.rlp() == MapClass::all(lat));
  CHECK(ids.llp() == MapClass::all(lat));
  CHECK(MapClass::all(lat).rlp() == oracle::rlp(MapClass::all(lat)));
}

TEST_CASE("duality reverses the order and keeps labels and indices") {
  for (const char* name : {"c3", "b2", "n5", "m3"}) {
    CAPTURE(name);
    LatticePtr lat = catalog_lattice(name);
    LatticePtr d = lat->dual();
    CHECK(d->name() == lat->name() + "^op");
    CHECK(d->dual()->name() == lat->name());
    CHECK(d->size() == lat->size());
    for (Obj x = 0; x < lat->size(); ++x) {
      CHECK(d->label(x) == lat->label(x));
      for (Obj y = 0; y < lat->size(); ++y) {
        CHECK(d->leq(x, y) == lat->leq(y, x));
        CHECK(d->meet(x, y) == lat->join(x, y));
        CHECK(d->join(x, y) == lat->meet(x, y));
      }
    }
    CHECK(d->bottom() == lat->top());
    CHECK(d->top() == lat->bottom());
    CHECK(d->dual()->same_order_as(*lat));
  }
}

TEST_CASE("the square of the 2-chain is the Boolean lattice on two atoms") {
  LatticePtr c2 = catalog_lattice("c2");
  LatticePtr prod = Lattice::product(c2, c2);
  CHECK(prod->size() == 4);
  CHECK(prod->map_count() == 9);
  LatticePtr b2 = catalog_lattice("b2");
  // Same shape up to labels: count pairs in the order relation.
  int rel_prod = 0, rel_b2 = 0;
  for (Obj x = 0; x < 4; ++x)
    for (Obj y = 0; y < 4; ++y) {
      rel_prod += prod->leq(x, y);
      rel_b2 += b2->leq(x, y);
    }
  CHECK(rel_prod == rel_b2);
  CHECK(prod->label(1) == "0*1");
}

TEST_CASE("pushouts and pullbacks are joins and meets of cospans and spans") {
  LatticePtr b2 = catalog_lattice("b2");
  Obj bot = b2->bottom(), top = b2->top();
  Obj a = *b2->object("a"), b = *b2->object("b");
  LatticeMap po = pushout(*b2, LatticeMap{bot, a}, LatticeMap{bot, b});
  CHECK(po == LatticeMap{b, top});
  LatticeMap pb = pullback(*b2, LatticeMap{a, top}, LatticeMap{b, top});
  CHECK(pb == LatticeMap{bot, b});
}

TEST_CASE("map literals parse and print") {
  LatticePtr b2 = catalog_lattice("b2");
  LatticeMap f = parse_map_literal(*b2, "bot<=a");
  CHECK(map_literal(*b2, f) == "bot<=a");
  CHECK(parse_map_literal(*b2, " a <= top ") == LatticeMap{*b2->object("a"), b2->top()});
  CHECK_THROWS_AS(parse_map_literal(*b2, "a<=b"), ParseError);
  CHECK_THROWS_AS(parse_map_literal(*b2, "z<=top"), ParseError);
  CHECK_THROWS_AS(parse_map_literal(*b2, "nonsense"), ParseError);
}

TEST_CASE("lattice text format round-trips and is validated") {
  LatticePtr lat = parse_lattice(
      "# a comment\n"
      "objects: bot a b top\n"
      "le: bot<=a, bot<=b\n"
      "le: a<=top, b<=top  # more\n",
      "mine");
  CHECK(lat->name() == "mine");
  CHECK(lat->same_order_as(*catalog_lattice("b2")));

  // Two maximal elements: no top, hence no lattice.
  CHECK_THROWS_AS(parse_lattice("objects: x y\n", "bad"), ParseError);
  // Duplicated label.
  CHECK_THROWS_AS(parse_lattice("objects: x x\n", "bad"), ParseError);
  // A cycle collapses distinct labels; rejected as not antisymmetric.
  CHECK_THROWS_AS(parse_lattice("objects: x y\nle: x<=y, y<=x\n", "bad"), ParseError);
  // Bounded but without binary joins: two atoms with two upper bounds.
  CHECK_THROWS_AS(
      parse_lattice("objects: bot a b c d top\n"
                    "le: bot<=a, bot<=b, a<=c, b<=c, a<=d, b<=d, c<=top, d<=top\n",
                    "bad"),
      ParseError);
}

TEST_CASE("content keys identify lattices by name and structure") {
  LatticePtr b2 = catalog_lattice("b2");
  LatticePtr again = parse_lattice(
      "objects: bot a b top\nle: bot<=a, bot<=b, a<=top, b<=top\n", "b2");
  CHECK(b2->content_key() == again->content_key());
  CHECK(b2->content_key() != catalog_lattice("c4")->content_key());
  // A renamed copy keys differently even with the same order.
  LatticePtr renamed = parse_lattice(
      "objects: bot a b top\nle: bot<=a, bot<=b, a<=top, b<=top\n", "other");
  CHECK(renamed->same_order_as(*b2));
  CHECK(renamed->content_key() != b2->content_key());
}

TEST_CASE("object sets and map classes behave like bit sets") {
  LatticePtr b2 = catalog_lattice("b2");
  ObjectSet s(b2);
  CHECK(s.count() == 0);
  s.insert(*b2->object("a"));
  s.insert(b2->top());
  CHECK(s.count() == 2);
  CHECK(s.member_labels() == std::vector<std::string>{"a", "top"});
  CHECK(s.subset_of(ObjectSet::all(b2)));

  MapClass ids = MapClass::identities(b2);
  CHECK(ids.count() == 4);
  CHECK(ids.complement().count() == 5);
  CHECK((ids | ids.complement()) == MapClass::all(b2));
  CHECK((ids & ids.complement()) == MapClass::none(b2));
}
