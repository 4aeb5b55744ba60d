#include <algorithm>

#include "doctest.h"
#include "ringlab/io.hpp"
#include "ringlab/theorems.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::ring;

TEST_CASE("multiplicative closure") {
  FiniteRing z6 = ring("Z 6");
  CHECK(multiplicative_closure(z6, Subset::of(6, {2})) == Subset::of(6, {1, 2, 4}));
  CHECK(multiplicative_closure(z6, Subset(6)) == Subset::of(6, {1}));

  try {
    multiplicative_closure(ring("Z 4"), Subset::of(4, {2}));
    FAIL("zero absorption not detected");
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_absorbed);
    CHECK(std::string(e.what()).find("2*2") != std::string::npos);
  }
}

TEST_CASE("left Ore condition") {
  FiniteRing z6 = ring("Z 6");
  // commutative: every multiplicative set is Ore
  CHECK(is_left_ore(z6, Subset::of(6, {1, 2, 4})).ok);
  CHECK(is_left_ore(z6, units(z6)).ok);

  // units are always Ore
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    CHECK(is_left_ore(R, units(R)).ok);
  }

  // the saturation of the zero-first-column ideal of T2(F2) is not Ore;
  // its would-be ass is not even additively closed
  FiniteRing t2 = ring("@t2f2");
  Subset candidate = saturate(t2, Subset::of(8, {0, 1, 2, 3}));
  CHECK(candidate == Subset::of(8, {4, 5, 6, 7}));
  PairWitness ore = is_left_ore(t2, candidate);
  CHECK(!ore.ok);
  CHECK(ore.r == 2);
  CHECK(ore.s == 4);
  Subset would_be_ass = ass_set(t2, candidate);
  CHECK(would_be_ass == Subset::of(8, {0, 1, 3}));
  CHECK(!is_ideal(t2, would_be_ass));

  try {
    is_left_ore(z6, Subset::of(6, {1, 2}));  // not multiplicatively closed
    FAIL("precondition not checked");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_multiplicative);
  }
}

TEST_CASE("ass sets") {
  FiniteRing z6 = ring("Z 6");
  CHECK(ass_set(z6, Subset::of(6, {1, 2, 4})) == Subset::of(6, {0, 3}));
  CHECK(ass_set(z6, Subset::of(6, {1})) == Subset::of(6, {0}));
  CHECK(ass_set(z6, Subset::of(6, {1, 3, 5})) == Subset::of(6, {0, 2, 4}));
}

TEST_CASE("ass of a denominator set is an ideal") {
  for (const char* name :
       {"@z4", "@z6", "@z8", "@z12", "@f2", "@f3", "@gf4", "@m2f2", "@t2f2"}) {
    FiniteRing R = ring(name);
    for (const Subset& s : exhaustive_denominator_sets(R)) {
      CAPTURE(R.label());
      CHECK(is_ideal(R, ass_set(R, s)));
    }
  }
}

TEST_CASE("left denominator sets") {
  FiniteRing z6 = ring("Z 6");
  CHECK(is_left_denominator(z6, Subset::of(6, {1, 2, 4})).ok);
  CHECK(is_left_denominator(z6, units(z6)).ok);
  CHECK(is_left_denominator(ring("@t2f2"), Subset::of(8, {1, 3, 5, 7})).ok);
  CHECK(!is_left_denominator(ring("@t2f2"), Subset::of(8, {4, 5, 6, 7})).ok);
}

TEST_CASE("saturation") {
  FiniteRing z6 = ring("Z 6");
  CHECK(saturate(z6, Subset::of(6, {0, 3})) == Subset::of(6, {1, 2, 4, 5}));
  CHECK(saturate(z6, Subset::of(6, {0})) == units(z6));
  CHECK(saturate(ring("Z 4"), Subset::of(4, {0, 2})) == Subset::of(4, {1, 3}));
}

TEST_CASE("localizable ideals") {
  FiniteRing z6 = ring("Z 6");
  CHECK(is_localizable_ideal(z6, Subset::of(6, {0, 3})));
  CHECK(!is_localizable_ideal(ring("Z 4"), Subset::of(4, {0, 2})));
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    Subset zero(R.order());
    zero.insert(0);
    CHECK(is_localizable_ideal(R, zero));
  }
}

TEST_CASE("maximal denominator sets of the worked rings") {
  MaxDenProfile z6 = max_denominator_sets(ring("Z 6"));
  REQUIRE(z6.records.size() == 2);
  CHECK(z6.records[0].s == Subset::of(6, {1, 2, 4, 5}));
  CHECK(z6.records[0].ass == Subset::of(6, {0, 3}));
  CHECK(z6.records[0].core == Subset::of(6, {2, 4}));
  CHECK(z6.records[0].quotient.order() == 3);
  CHECK(z6.records[0].saturated);
  CHECK(z6.records[1].s == Subset::of(6, {1, 3, 5}));
  CHECK(z6.records[1].ass == Subset::of(6, {0, 2, 4}));
  CHECK(z6.records[1].core == Subset::of(6, {3}));
  CHECK(z6.records[1].quotient.order() == 2);
  CHECK(z6.localizable == Subset::of(6, {1, 2, 3, 4, 5}));
  CHECK(z6.completely_localizable == Subset::of(6, {1, 5}));
  CHECK(z6.ll_radical == Subset::of(6, {0}));

  MaxDenProfile z4 = max_denominator_sets(ring("Z 4"));
  REQUIRE(z4.records.size() == 1);
  CHECK(z4.records[0].s == Subset::of(4, {1, 3}));
  CHECK(z4.records[0].ass == Subset::of(4, {0}));
  CHECK(z4.records[0].core == Subset::of(4, {1, 3}));

  MaxDenProfile m2 = max_denominator_sets(ring("@m2f2"));
  REQUIRE(m2.records.size() == 1);
  CHECK(m2.records[0].s == units(ring("@m2f2")));
  CHECK(m2.records[0].ass == Subset::of(16, {0}));

  MaxDenProfile t2 = max_denominator_sets(ring("@t2f2"));
  REQUIRE(t2.records.size() == 1);
  CHECK(t2.records[0].s == Subset::of(8, {1, 3, 5, 7}));
  CHECK(t2.records[0].ass == Subset::of(8, {0, 2, 4, 6}));
  CHECK(t2.records[0].core == Subset::of(8, {1, 3}));
  CHECK(t2.records[0].quotient.order() == 2);
}

TEST_CASE("localize") {
  FiniteRing z6 = ring("Z 6");
  CHECK(localize(z6, Subset::of(6, {1, 3, 5})).den.quotient.order() == 2);
  CHECK(localize(z6, units(z6)).den.quotient.same_tables(z6));
  CHECK(localize(ring("@t2f2"), Subset::of(8, {1, 3, 5, 7})).den.quotient.order() == 2);

  try {
    localize(ring("@t2f2"), Subset::of(8, {4, 5, 6, 7}));
    FAIL("non-denominator set accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_denominator);
  }
}

TEST_CASE("fraction oracle agrees with the quotient realisation") {
  FiniteRing z6 = ring("Z 6");
  CHECK(fraction_oracle(z6, Subset::of(6, {1, 3, 5})).order() == 2);
  CHECK(fraction_oracle(z6, Subset::of(6, {1, 2, 4})).order() == 3);
  CHECK(fraction_oracle(z6, Subset::of(6, {1})).order() == 6);

  Limits tight;
  tight.oracle_max_pairs = 4;
  try {
    fraction_oracle(z6, Subset::of(6, {1, 3, 5}), tight);
    FAIL("pair bound not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::oracle_bound_exceeded);
  }
}

TEST_CASE("core") {
  FiniteRing z6 = ring("Z 6");
  CHECK(core(z6, Subset::of(6, {1, 3, 5})) == Subset::of(6, {3}));
  CHECK(core(z6, Subset::of(6, {1, 2, 4})) == Subset::of(6, {2, 4}));
  CHECK(core(ring("Z 4"), Subset::of(4, {1, 3})) == Subset::of(4, {1, 3}));

  try {
    core(ring("@t2f2"), Subset::of(8, {4, 5, 6, 7}));
    FAIL("non-Ore set accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_ore);
  }
}

TEST_CASE("ll radical") {
  CHECK(ll_radical(ring("Z 6")) == Subset::of(6, {0}));
  CHECK(ll_radical(ring("Z 4")) == Subset::of(4, {0}));
  CHECK(ll_radical(ring("@t2f2")) == Subset::of(8, {0, 2, 4, 6}));
}

TEST_CASE("denominator join") {
  FiniteRing z6 = ring("Z 6");
  CHECK(denominator_join(z6, Subset::of(6, {1}), Subset::of(6, {1, 2, 4})) ==
        Subset::of(6, {1, 2, 4}));
  Subset joined = denominator_join(z6, Subset::of(6, {1, 5}), Subset::of(6, {1, 2, 4}));
  CHECK(joined == Subset::of(6, {1, 2, 4, 5}));
  CHECK(ass_set(z6, joined) == Subset::of(6, {0, 3}));
  CHECK(denominator_join(z6, units(z6), units(z6)) == units(z6));

  try {
    denominator_join(z6, Subset::of(6, {1, 3, 5}), Subset::of(6, {1, 2, 4}));
    FAIL("nesting precondition not checked");
  } catch (const Error& e) {
    CHECK(e.code() == errc::precond_ass_not_nested);
  }
}

TEST_CASE("exhaustive denominator sets") {
  std::vector<Subset> z4 = exhaustive_denominator_sets(ring("Z 4"));
  REQUIRE(z4.size() == 2);
  CHECK(z4[0] == Subset::of(4, {1}));
  CHECK(z4[1] == Subset::of(4, {1, 3}));

  std::vector<Subset> f2 = exhaustive_denominator_sets(ring("Z 2"));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == Subset::of(2, {1}));

  std::vector<Subset> z6 = exhaustive_denominator_sets(ring("Z 6"));
  CHECK(z6.size() == 7);
  std::vector<Subset> maximal;
  for (const Subset& s : z6) {
    bool is_max = true;
    for (const Subset& t : z6)
      if (s != t && s.subset_of(t)) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  REQUIRE(maximal.size() == 2);
  CHECK(maximal[0] == Subset::of(6, {1, 3, 5}));
  CHECK(maximal[1] == Subset::of(6, {1, 2, 4, 5}));

  // the six submonoids of the unit group of M2(F2)
  CHECK(exhaustive_denominator_sets(ring("@m2f2")).size() == 6);

  try {
    exhaustive_denominator_sets(ring("@t3f2"));
    FAIL("oracle order bound not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::oracle_bound_exceeded);
  }
}

TEST_CASE("saturation dominance over every denominator set") {
  for (const char* name :
       {"@z4", "@z6", "@z8", "@z12", "@f2", "@f3", "@gf4", "@m2f2", "@t2f2"}) {
    FiniteRing R = ring(name);
    for (const Subset& s : exhaustive_denominator_sets(R)) {
      CAPTURE(R.label());
      Subset ass = ass_set(R, s);
      Subset sat = saturate(R, ass);
      CHECK(s.subset_of(sat));
      CHECK(is_left_denominator(R, sat).ok);
      CHECK(ass_set(R, sat) == ass);
    }
  }
}

TEST_CASE("phi map") {
  PhiMap z6 = phi_map(ring("Z 6"));
  REQUIRE(z6.entries.size() == 2);
  CHECK(z6.injective);
  CHECK(z6.surjective);
  for (const PhiEntry& e : z6.entries) CHECK(e.image_maximal);

  PhiMap t2 = phi_map(ring("@t2f2"));
  REQUIRE(t2.entries.size() == 1);
  CHECK(t2.entries[0].image == Subset::of(2, {1}));
  CHECK(t2.entries[0].image_maximal);
  CHECK(t2.surjective);

  PhiMap z4 = phi_map(ring("Z 4"));  // ll = 0, so the map is a bijection
  CHECK(z4.injective);
  CHECK(z4.surjective);

  // the induced map lands on maximal sets on every catalog ring
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    PhiMap phi = phi_map(R);
    CHECK(phi.injective);
    for (const PhiEntry& e : phi.entries) CHECK(e.image_maximal);
  }
}

TEST_CASE("core projects into the core of the image") {
  // checked on rings satisfying the surjectivity-characterisation hypotheses
  for (const FiniteRing& R : testing::catalog_rings()) {
    if (!verify_theorem(R, "thm-28Mar14").lhs) continue;
    CAPTURE(R.label());
    MaxDenProfile profile = max_denominator_sets(R);
    QuotientRing q = quotient_ring(R, profile.ll_radical);
    for (const DenRecord& rec : profile.records) {
      Subset image_s(q.ring.order()), image_core(q.ring.order());
      for (int x : rec.s.members()) image_s.insert(q.projection[x]);
      for (int x : rec.core.members()) image_core.insert(q.projection[x]);
      CHECK(image_core.subset_of(core(q.ring, image_s)));
    }
  }
}
