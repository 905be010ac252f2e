#include <doctest.h>

#include "fourcalc/invariants.hpp"

using namespace fourcalc;

TEST_CASE("derive computes all quantities exactly") {
  InvariantVector v = derive(52, 0, 0);
  CHECK(v.chi_h == 13);
  CHECK(v.c1_sq == 104);
  CHECK(v.b2_plus == 25);
  CHECK(v.b2_minus == 25);
  CHECK(v.realizable);

  InvariantVector s = derive(15, 5, 4);
  CHECK(s.chi_h == 5);
  CHECK(s.c1_sq == 45);
  CHECK(s.b2 == 21);
  CHECK(s.b2_plus == 13);
  CHECK(s.b2_minus == 8);
}

TEST_CASE("non-integral chi_h is marked, never rounded") {
  InvariantVector v = derive(2, 0, 0);
  CHECK(v.b2 == 0);
  CHECK_FALSE(v.chi_h.has_value());
  CHECK(v.c1_sq == 4);
}

TEST_CASE("degenerate inputs are flagged non-realizable, not rejected") {
  InvariantVector v = derive(-3, 0, 0);  // b2 = -5
  CHECK(v.b2 == -5);
  CHECK_FALSE(v.realizable);
  InvariantVector w = derive(3, 2, 0);  // b2 = 1, parity off
  CHECK_FALSE(w.b2_plus.has_value());
  CHECK_FALSE(w.realizable);
  InvariantVector x = derive(4, 4, 0);  // b2 = 2 < |sigma|
  CHECK(x.b2_minus == -1);
  CHECK_FALSE(x.realizable);
}

TEST_CASE("consistency_check evaluates both sides") {
  CHECK(consistency_check(derive(52, 0, 0), 104).pass);
  ConsistencyReport bad = consistency_check(derive(12, -4, 0), 16);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("claimed 16") != std::string::npos);
  CHECK(bad.violations[0].find("derived 12") != std::string::npos);
  CHECK(consistency_check(derive(0, 0, 0), 0, 0).pass);
  CHECK_FALSE(consistency_check(derive(52, 0, 0), 104, 14).pass);
  CHECK_FALSE(consistency_check(derive(2, 0, 0), 4, 1).pass);  // chi_h not integral
}

static InvariantVector freedman_input(i64 e, i64 sigma) {
  InvariantVector v = derive(e, sigma, 0, Spin::NonSpin);
  v.simply_connected = true;
  return v;
}

TEST_CASE("homeomorphism_type on the lemma values") {
  CHECK(homeomorphism_type(freedman_input(55, 1)) == HomeoType{27, 26});
  CHECK(homeomorphism_type(freedman_input(4, 0)) == HomeoType{1, 1});
  // hand-derived: b2+- = (e - 2 +- sigma)/2
  CHECK(homeomorphism_type(freedman_input(58, 2)) == HomeoType{29, 27});
}

TEST_CASE("homeomorphism_type preconditions") {
  InvariantVector v = freedman_input(55, 1);
  v.simply_connected = false;
  CHECK_THROWS_AS(homeomorphism_type(v), PreconditionViolated);
  InvariantVector w = freedman_input(55, 1);
  w.spin = Spin::Unknown;
  CHECK_THROWS_AS(homeomorphism_type(w), PreconditionViolated);
  CHECK_THROWS_AS(homeomorphism_type(freedman_input(3, 2)), PreconditionViolated);  // parity
  CHECK_THROWS_AS(homeomorphism_type(freedman_input(2, 0)), PreconditionViolated);  // b2+ = 0
}

TEST_CASE("homeomorphism_type round-trips against derive") {
  for (i64 a = 1; a <= 100; ++a)
    for (i64 b = 1; b <= 100; ++b) {
      InvariantVector v = derive(2 + a + b, a - b, 0, Spin::NonSpin);
      v.simply_connected = true;
      HomeoType t = homeomorphism_type(v);
      CHECK(t.a == a);
      CHECK(t.b == b);
    }
}

TEST_CASE("derive is deterministic on equal inputs") {
  CHECK(derive(7, -3, 2, Spin::Spin) == derive(7, -3, 2, Spin::Spin));
}

TEST_CASE("checked arithmetic fails hard on overflow") {
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_pow(5, 40), OverflowError);
  CHECK(checked_pow(5, 3) == 125);
}

TEST_CASE("floor and ceiling division on negatives") {
  CHECK(floor_div(-6, 8) == -1);
  CHECK(ceil_div(-6, 8) == 0);
  CHECK(ceil_div(-8, 8) == -1);
  CHECK(ceil_div(8, 8) == 1);
  CHECK(ceil_div(9, 8) == 2);
}
