#include "doctest.h"
#include "ringlab/io.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::ring;

TEST_CASE("weakly left localizable") {
  CHECK(is_weakly_left_localizable(ring("Z 4")).value);
  CHECK(is_weakly_left_localizable(ring("Z 6")).value);

  Witnessed t2 = is_weakly_left_localizable(ring("@t2f2"));
  CHECK(!t2.value);
  CHECK(t2.witness == 4);  // the (1,1) matrix unit, least non-localizable non-nilpotent

  Witnessed m2 = is_weakly_left_localizable(ring("@m2f2"));
  CHECK(!m2.value);
  CHECK(m2.witness == 1);  // the (2,2) matrix unit
}

TEST_CASE("left localizable rings") {
  CHECK(is_left_localizable_ring(ring("Z 6")).value);
  CHECK(is_left_localizable_ring(ring("Z 3")).value);
  CHECK(is_left_localizable_ring(ring("@gf4")).value);

  Witnessed z4 = is_left_localizable_ring(ring("Z 4"));
  CHECK(!z4.value);
  CHECK(z4.witness == 2);

  Witnessed t2 = is_left_localizable_ring(ring("@t2f2"));
  CHECK(!t2.value);
  CHECK(t2.witness == 2);
}

TEST_CASE("left localization maximal") {
  CHECK(is_left_localization_maximal(ring("@m2f2")));
  CHECK(!is_left_localization_maximal(ring("Z 6")));
  CHECK(is_left_localization_maximal(ring("Z 4")));
}

TEST_CASE("nil modulo") {
  FiniteRing z6 = ring("Z 6");
  CHECK(!nil_modulo_check(z6, Subset::of(6, {0, 3}), Subset::of(6, {0, 2, 4})));
  CHECK(nil_modulo_check(z6, Subset::of(6, {0}), Subset::of(6, {0, 3})));
  CHECK(nil_modulo_check(ring("Z 12"), Subset::of(12, {0, 6}), Subset::of(12, {0})));
}

TEST_CASE("classification reports") {
  Report z12 = classification_report(ring("Z 12"));
  CHECK(z12.weakly_left_localizable);
  CHECK(!z12.left_localizable);
  CHECK(z12.maxden_count == 2);
  CHECK(z12.idempotents == std::vector<int>{4, 9});
  CHECK(z12.factor_orders == std::vector<int>{3, 4});
  CHECK(z12.semilocal);

  Report f3 = classification_report(ring("Z 3"));
  CHECK(f3.left_localizable);
  CHECK(f3.weakly_left_localizable);
  CHECK(f3.localization_maximal);
  CHECK(f3.nilpotents == Subset::of(3, {0}));

  Report t2 = classification_report(ring("@t2f2"));
  CHECK(!t2.weakly_left_localizable);
  CHECK(t2.maxden_count == 1);
  CHECK(t2.ll_size == 4);
}

TEST_CASE("localizable and nilpotent elements are disjoint everywhere") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    MaxDenProfile profile = max_denominator_sets(R);
    Subset nil = nilpotent_elements(R);
    CHECK((profile.localizable & nil).empty());
    bool wll = is_weakly_left_localizable(R).value;
    CHECK(wll == (profile.localizable.size() + nil.size() == R.order()));
  }
}

TEST_CASE("local rings with nil radical equal to rad are weakly localizable") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    if (!is_local(R)) continue;
    CAPTURE(R.label());
    if (jacobson_radical(R) == nil_radical(R)) CHECK(is_weakly_left_localizable(R).value);
  }
}

TEST_CASE("weak localizability respects products") {
  std::vector<const char*> names = {"@z4", "@z6", "@f2", "@f3", "@gf4", "@t2f2", "@m2f2"};
  for (const char* a : names)
    for (const char* b : names) {
      FiniteRing ra = ring(a), rb = ring(b);
      if (ra.order() * rb.order() > 129) continue;
      ProductRing p = product_ring({ra, rb});
      CAPTURE(p.ring.label());
      CHECK(is_weakly_left_localizable(p.ring).value ==
            (is_weakly_left_localizable(ra).value && is_weakly_left_localizable(rb).value));
    }
}

TEST_CASE("localization maximal plus weakly localizable equals local with nil rad") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    bool lhs = is_left_localization_maximal(R) && is_weakly_left_localizable(R).value;
    bool rhs = is_local(R) && jacobson_radical(R) == nil_radical(R);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("a maximal localization is local iff the set complement is an ideal") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    for (const DenRecord& rec : max_denominator_sets(R).records)
      CHECK(is_local(rec.quotient) == is_ideal(R, rec.s.complement()));
  }
}
