#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixture_paths.hpp"
#include "nsalg/corpus.hpp"
#include "nsalg/neutro.hpp"

using namespace nsalg;

namespace {

Corpus& corpus() {
  static Corpus c{fixtures_dir()};
  return c;
}

NSubset nsubset(const NStructPtr& s, std::vector<std::vector<std::string>> parts) {
  NSubset out{s, {}};
  for (int i = 0; i < s->count(); ++i)
    out.parts.push_back(subset_of_labels(s->component(i).magma, parts.at(i)));
  return out;
}

}  // namespace

TEST_CASE("construction validates component kinds") {
  MagmaPtr la8 = corpus().magma("la8");
  MagmaPtr z4 = corpus().magma("z4");
  CHECK_THROWS_AS(make_n_structure("bad", {{la8, ComponentKind::group, true},
                                           {z4, ComponentKind::group, false}}),
                  Error);
  CHECK_THROWS_AS(make_n_structure("single", {{z4, ComponentKind::group, false}}), Error);
  NStructPtr ok = make_n_structure("ok", {{la8, ComponentKind::la_semigroup, true},
                                          {z4, ComponentKind::group, false}});
  CHECK(ok->count() == 2);
  CHECK_FALSE(ok->strong());
}

TEST_CASE("the three-component fixture has order 60 with the quoted sub-structures") {
  NStructPtr g = corpus().nstructure("ng_2_3_4");
  CHECK(n_order(*g) == 60);
  CHECK(g->count() == 3);

  const SoftSet& f = corpus().softset("ex_2_3_4");
  const NSubset& p = std::get<NSubset>(*f.find("P"));
  const NSubset& t = std::get<NSubset>(*f.find("T"));
  CHECK(p.total_size() == 10);
  CHECK(t.total_size() == 12);
  CHECK(is_sub_n_structure(p, SubNStrength::plain));
  CHECK(is_sub_n_structure(p, SubNStrength::neutrosophic));
  CHECK_FALSE(is_sub_n_structure(p, SubNStrength::strong));
  CHECK(is_lagrange_sub_n(p));
  CHECK(is_lagrange_sub_n(t));
}

TEST_CASE("strength is monotone: strong implies neutrosophic implies plain") {
  std::mt19937_64 rng(5);
  NStructPtr g = corpus().nstructure("bg_2_2_1");
  for (int iter = 0; iter < 200; ++iter) {
    NSubset s{g, {}};
    bool any_empty = false;
    for (int c = 0; c < g->count(); ++c) {
      MagmaPtr m = g->component(c).magma;
      Subset part{m, Bits(m->order())};
      for (int i = 0; i < m->order(); ++i)
        if (rng() % 3 == 0) part.bits.set(i);
      any_empty = any_empty || part.empty();
      s.parts.push_back(std::move(part));
    }
    if (any_empty) continue;
    bool strong = is_sub_n_structure(s, SubNStrength::strong);
    bool neutro = is_sub_n_structure(s, SubNStrength::neutrosophic);
    bool plain = is_sub_n_structure(s, SubNStrength::plain);
    if (strong) CHECK(neutro);
    if (neutro) CHECK(plain);
  }
}

TEST_CASE("empty parts are rejected") {
  NStructPtr g = corpus().nstructure("bg_2_2_1");
  NSubset s{g, {Subset{g->component(0).magma, Bits(g->component(0).magma->order())},
                subset_of_labels(g->component(1).magma, {"1"})}};
  CHECK_THROWS_AS(is_sub_n_structure(s, SubNStrength::plain), Error);
}

TEST_CASE("the quoted bigroup images pass the sub-bigroup test") {
  const SoftSet& f = corpus().softset("ex_2_2_1");
  SoftVerdict v = soft_predicate(f, "sub-N-structure", Quantifier::all);
  CHECK(v.holds);
  // the loose neutrosophic-subgroup parts are closed but not unit groups
  const NSubset& a1 = std::get<NSubset>(*f.find("a1"));
  CHECK_FALSE(is_subgroup(a1.parts[0]));
  CHECK(is_closed(a1.parts[0]));
}

TEST_CASE("soft lifting agrees with manual conjunction per component") {
  const SoftSet& f = corpus().softset("ex_2_2_1");
  NStructPtr g = f.universe().nstruct;
  for (int i = 0; i < f.size(); ++i) {
    const NSubset& img = std::get<NSubset>(f.image(i));
    bool manual = true;
    for (int c = 0; c < g->count(); ++c) {
      const auto& comp = g->component(c);
      bool part_ok = comp.kind == ComponentKind::group ? is_subgroup(img.parts[c])
                                                       : is_closed(img.parts[c]);
      manual = manual && part_ok;
    }
    bool lifted = is_sub_n_structure(img, SubNStrength::plain);
    CHECK(manual == lifted);
  }
}

TEST_CASE("normal and conjugate sub-N checks") {
  NStructPtr g = corpus().nstructure("bg_2_2_7");
  // components: adjoined dihedral (semigroup kind) and a cyclic group
  NSubset p = nsubset(g, {{"e", "y"}, {"1", "g2", "g4"}});
  NSubset q = nsubset(g, {{"e", "x", "x2"}, {"1", "g3"}});
  CHECK(is_sub_n_structure(p, SubNStrength::plain));
  CHECK(is_sub_n_structure(q, SubNStrength::plain));

  // {e,y} is not normal in the dihedral block: conjugating by x moves y
  CHECK_FALSE(is_normal_sub_n(p));
  NSubset cyc = nsubset(g, {{"e", "x", "x2"}, {"1", "g2", "g4"}});
  CHECK(is_normal_sub_n(cyc));

  CHECK(are_conjugate_sub_n(p, p, ConjMode::classical));
  auto parts = conjugate_parts(p, q, ConjMode::classical);
  CHECK(parts.size() == 2);
  CHECK_FALSE(parts[0]);  // sizes 2 vs 3
  CHECK_FALSE(parts[1]);
}

TEST_CASE("complementary conjugacy reported per part on the quoted pair") {
  const SoftSet& f = corpus().softset("ex_2_2_11");
  const NSubset& p = std::get<NSubset>(*f.find("a1"));
  const NSubset& q = std::get<NSubset>(*f.find("a2"));
  auto parts = conjugate_parts(p, q, ConjMode::complementary);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0]);  // {e,y} and {e,x,x2} generate the dihedral block
  CHECK(parts[1]);  // the additive pair covers the 36-element block
  CHECK(are_conjugate_sub_n(p, q, ConjMode::complementary));
}

TEST_CASE("N-ideal parts must absorb componentwise") {
  NStructPtr g = corpus().nstructure("bla_5_2_3");
  NSubset good = nsubset(g, {{"1", "3", "1I", "3I"}, {"2", "3", "2I", "3I"}});
  CHECK(is_n_ideal(good));
  NSubset bad = nsubset(g, {{"2", "3", "3I"}, {"2", "3", "2I", "3I"}});
  CHECK_FALSE(is_n_ideal(bad));
}

TEST_CASE("lagrange pre-condition failure raises") {
  NStructPtr g = corpus().nstructure("bg_2_2_1");
  NSubset not_sub = nsubset(g, {{"2"}, {"1"}});
  CHECK_THROWS_AS(is_lagrange_sub_n(not_sub), Error);
}

TEST_CASE("n_order is additive over components") {
  CHECK(n_order(*corpus().nstructure("bg_2_2_1")) == 8 + 12);
  CHECK(n_order(*corpus().nstructure("bla_5_2_1")) == 8 + 6);
  CHECK(n_order(*corpus().nstructure("ns_3_3_1")) == 12 + 4 + 9 + 36);
}

TEST_CASE("NSTR parse failures") {
  auto resolve = [&](const std::string& n) { return corpus().magma(n); };
  CHECK_THROWS_AS(parse_nstructure("nstructure x\ncomponent z4 kind loop neutrosophic maybe\nend\n",
                                   resolve),
                  Error);
  CHECK_THROWS_AS(parse_nstructure("nstructure x\n", resolve), Error);
  CHECK_THROWS_AS(
      parse_nstructure("nstructure x\ncomponent la8 kind group neutrosophic yes\n"
                       "component z4 kind group neutrosophic no\nend\n",
                       resolve),
      Error);
}
