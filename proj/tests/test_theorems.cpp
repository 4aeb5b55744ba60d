#include <algorithm>

#include "doctest.h"
#include "ringlab/io.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::ring;

TEST_CASE("registry") {
  auto listed = list_theorems();
  CHECK(listed.size() == 16);
  auto has = [&](const char* id) {
    return std::any_of(listed.begin(), listed.end(),
                       [&](const auto& p) { return p.first == id; });
  };
  CHECK(has("thm-26Mar14"));
  CHECK(has("thm-C2Dec12"));
  CHECK(has("thm-3.9-finite"));
  CHECK(theorem_registry().size() == 16);

  try {
    verify_theorem(ring("Z 6"), "thm-nope");
    FAIL("unknown id accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_theorem);
  }
}

TEST_CASE("worked verdicts") {
  Verdict v = verify_theorem(ring("Z 12"), "thm-24Dec12");
  CHECK(v.applicable);
  CHECK(v.lhs);
  CHECK(v.rhs);
  CHECK(v.pass);

  v = verify_theorem(ring("@t2f2"), "thm-24Dec12");
  CHECK(!v.lhs);
  CHECK(!v.rhs);
  CHECK(v.pass);

  v = verify_theorem(ring("@m2f2"), "lem-a26Mar14");
  CHECK(!v.lhs);  // localization maximal but not weakly localizable
  CHECK(!v.rhs);  // not local
  CHECK(v.pass);

  // hypothesis-failure case is reported distinctly
  CHECK(!verify_theorem(ring("@m2f2"), "cor-b26Mar14").applicable);
  CHECK(!verify_theorem(ring("Z 6"), "thm-9Feb13").applicable);
  CHECK(verify_theorem(ring("@z4xz3"), "thm-9Feb13").applicable);
}

TEST_CASE("verify_all passes on the worked rings") {
  for (const char* name : {"@z6", "@z4", "@t2f2"}) {
    for (const Verdict& v : verify_all(ring(name))) {
      CAPTURE(v.id);
      CAPTURE(v.ring_label);
      CHECK(v.pass);
    }
  }
  CHECK(verify_all(ring("Z 6")).size() == 16);
}
