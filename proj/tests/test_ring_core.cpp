#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ringlab/io.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::ring;

TEST_CASE("construct orders and labels") {
  CHECK(ring("Z 6").order() == 6);
  CHECK(ring("Z 6").label() == "Z6");
  CHECK(ring("M 2 (Z 2)").order() == 16);
  CHECK(ring("T 2 (Z 2)").order() == 8);
  CHECK(ring("T 3 (Z 2)").order() == 64);
  CHECK(ring("P (Z 4, Z 3)").order() == 12);
  CHECK(ring("Q (Z 12; 6)").order() == 6);
}

TEST_CASE("construct rejects bad input") {
  CHECK_THROWS_AS(ring("Z 1"), Error);
  CHECK_THROWS_AS(ring("M 0 (Z 2)"), Error);
  // 16^4 = 65536 > 4096
  try {
    ring("M 2 (M 2 (Z 2))");
    FAIL("order bound not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_bound_exceeded);
  }
  try {
    ring("Q (Z 12; 99)");
    FAIL("generator range not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_tables);
  }
}

TEST_CASE("table validation reports an axiom witness") {
  // Z3 addition with a multiplication that breaks distributivity at 2*(1+1)
  TableData d;
  d.order = 3;
  d.one = 1;
  d.add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  d.mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  try {
    construct(RingExpr::table_ring(d));
    FAIL("invalid tables accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_tables);
    CHECK(std::string(e.what()).find("distributivity") != std::string::npos);
  }
}

TEST_CASE("validation above the exhaustive threshold") {
  CHECK(ring("Z 100").order() == 100);
  CHECK(units(ring("Z 100")).size() == 40);  // Euler phi(100)
}

TEST_CASE("units") {
  CHECK(units(ring("Z 6")) == Subset::of(6, {1, 5}));

  // gcd oracle on Z/n
  for (int n : {4, 6, 8, 12}) {
    FiniteRing zn = ring("Z " + std::to_string(n));
    Subset expected(n);
    for (int i = 0; i < n; ++i)
      if (std::gcd(i, n) == 1) expected.insert(i);
    CHECK(units(zn) == expected);
  }

  // determinant oracle on M2(F2)
  FiniteRing m = ring("@m2f2");
  Subset expected(16);
  for (int i = 0; i < 16; ++i)
    if (testing::m2_det(i) == 1) expected.insert(i);
  CHECK(units(m) == expected);
  CHECK(units(m).size() == 6);

  // both diagonal entries 1
  CHECK(units(ring("@t2f2")) == Subset::of(8, {5, 7}));
}

TEST_CASE("nilpotent elements") {
  CHECK(nilpotent_elements(ring("Z 4")) == Subset::of(4, {0, 2}));
  CHECK(nilpotent_elements(ring("Z 6")) == Subset::of(6, {0}));

  // 2x2 over F2: nilpotent iff trace 0 and determinant 0
  FiniteRing m = ring("@m2f2");
  Subset expected(16);
  for (int i = 0; i < 16; ++i)
    if (testing::m2_det(i) == 0 && testing::m2_trace(i) == 0) expected.insert(i);
  CHECK(nilpotent_elements(m) == expected);
  CHECK(nilpotent_elements(m).size() == 4);
}

TEST_CASE("jacobson radical") {
  CHECK(jacobson_radical(ring("Z 12")) == Subset::of(12, {0, 6}));
  CHECK(jacobson_radical(ring("@m2f2")) == Subset::of(16, {0}));
  // strictly upper triangular part
  CHECK(jacobson_radical(ring("@t2f2")) == Subset::of(8, {0, 2}));
}

TEST_CASE("nil radical") {
  CHECK(nil_radical(ring("Z 4")) == Subset::of(4, {0, 2}));
  CHECK(nil_radical(ring("@m2f2")) == Subset::of(16, {0}));
  CHECK(nil_radical(ring("@t2f2")) == Subset::of(8, {0, 2}));
}

TEST_CASE("radical containments across the catalog") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    Subset nilrad = nil_radical(R);
    CHECK(nilrad.subset_of(jacobson_radical(R)));
    CHECK(nilrad.subset_of(nilpotent_elements(R)));
    CHECK(is_ideal(R, nilrad));
  }
}

TEST_CASE("ideal enumeration") {
  FiniteRing z6 = ring("Z 6");
  std::vector<Subset> ideals = enumerate_ideals(z6);
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[0] == Subset::of(6, {0}));
  CHECK(ideals[1] == Subset::of(6, {0, 3}));
  CHECK(ideals[2] == Subset::of(6, {0, 2, 4}));
  CHECK(ideals[3] == Subset::full(6));

  CHECK(enumerate_ideals(ring("Z 3")).size() == 2);
  CHECK(enumerate_ideals(ring("@gf4")).size() == 2);
  CHECK(enumerate_ideals(ring("@m2f2")).size() == 2);
  CHECK(enumerate_ideals(ring("Z 12")).size() == 6);
}

TEST_CASE("ideal lattice is closed under sum and intersection") {
  for (const char* name : {"@z6", "@z12", "@t2f2", "@m2f2", "@gf4"}) {
    FiniteRing R = ring(name);
    std::vector<Subset> ideals = enumerate_ideals(R);
    for (const Subset& a : ideals)
      for (const Subset& b : ideals) {
        Subset sum = additive_closure(R, a | b);
        Subset meet = a & b;
        CHECK(std::find(ideals.begin(), ideals.end(), sum) != ideals.end());
        CHECK(std::find(ideals.begin(), ideals.end(), meet) != ideals.end());
      }
  }
}

TEST_CASE("quotient rings") {
  FiniteRing z6 = ring("Z 6");
  CHECK(quotient_ring(z6, Subset::of(6, {0, 2, 4})).ring.order() == 2);
  CHECK(quotient_ring(z6, Subset::of(6, {0, 3})).ring.order() == 3);

  QuotientRing trivial = quotient_ring(z6, Subset::of(6, {0}));
  CHECK(trivial.ring.same_tables(z6));
  for (int x = 0; x < 6; ++x) CHECK(trivial.projection[x] == x);

  try {
    quotient_ring(z6, Subset::full(6));
    FAIL("improper ideal accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::improper_ideal);
  }
}

TEST_CASE("quotient projection is a homomorphism on all pairs") {
  FiniteRing z6 = ring("Z 6");
  QuotientRing q = quotient_ring(z6, Subset::of(6, {0, 3}));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK(q.projection[z6.add(x, y)] == q.ring.add(q.projection[x], q.projection[y]));
      CHECK(q.projection[z6.mul(x, y)] == q.ring.mul(q.projection[x], q.projection[y]));
    }
  CHECK(q.projection[z6.one()] == q.ring.one());
}

TEST_CASE("product rings") {
  CHECK(ring("P (Z 4, Z 3)").order() == 12);
  // componentwise units: only (1,1)
  CHECK(units(ring("P (Z 2, Z 2)")) == Subset::of(4, {3}));

  // same invariants as Z6
  FiniteRing crt = ring("P (Z 2, Z 3)");
  FiniteRing z6 = ring("Z 6");
  CHECK(enumerate_ideals(crt).size() == enumerate_ideals(z6).size());
  CHECK(units(crt).size() == units(z6).size());
}

TEST_CASE("is_local") {
  CHECK(is_local(ring("Z 4")));
  CHECK(!is_local(ring("Z 6")));
  CHECK(!is_local(ring("@t2f2")));
  CHECK(is_local(ring("@gf4")));
  CHECK(!is_local(ring("@m2f2")));
}

TEST_CASE("central idempotent decomposition") {
  Decomposition z12 = central_idempotent_decomposition(ring("Z 12"));
  CHECK(z12.idempotents == std::vector<int>{4, 9});
  REQUIRE(z12.factors.size() == 2);
  CHECK(z12.factors[0].order() == 3);
  CHECK(z12.factors[1].order() == 4);

  Decomposition t2 = central_idempotent_decomposition(ring("@t2f2"));
  CHECK(t2.idempotents == std::vector<int>{5});  // the identity
  REQUIRE(t2.factors.size() == 1);
  CHECK(t2.factors[0].order() == 8);

  Decomposition f3 = central_idempotent_decomposition(ring("Z 3"));
  CHECK(f3.idempotents == std::vector<int>{1});
}

TEST_CASE("decomposition is an internal direct product") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    Decomposition dec = central_idempotent_decomposition(R);
    int n = R.order();
    int s = int(dec.idempotents.size());

    int sum = 0;
    for (int e : dec.idempotents) {
      sum = R.add(sum, e);
      CHECK(R.mul(e, e) == e);
      for (int x = 0; x < n; ++x) CHECK(R.mul(e, x) == R.mul(x, e));
    }
    CHECK(sum == R.one());
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < i; ++j)
        CHECK(R.mul(dec.idempotents[i], dec.idempotents[j]) == 0);

    long long product_order = 1;
    for (const FiniteRing& f : dec.factors) product_order *= f.order();
    CHECK(product_order == n);

    // r -> (e_1 r, ..., e_s r) is injective and a homomorphism
    std::vector<std::vector<int>> tuples;
    for (int x = 0; x < n; ++x) {
      std::vector<int> t;
      for (int i = 0; i < s; ++i) t.push_back(dec.projections[i][x]);
      tuples.push_back(t);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < x; ++y) CHECK(tuples[x] != tuples[y]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int i = 0; i < s; ++i) {
          const FiniteRing& f = dec.factors[i];
          CHECK(dec.projections[i][R.add(x, y)] ==
                f.add(dec.projections[i][x], dec.projections[i][y]));
          CHECK(dec.projections[i][R.mul(x, y)] ==
                f.mul(dec.projections[i][x], dec.projections[i][y]));
        }
  }
}

TEST_CASE("finite regularity collapse across the catalog") {
  for (const FiniteRing& R : testing::catalog_rings()) {
    CAPTURE(R.label());
    Subset u = units(R);
    CHECK(u == left_regular_elements(R));
    CHECK(u == right_regular_elements(R));
  }
}
