#include "catch_amalgamated.hpp"

#include "schroederlab/serialize.hpp"
#include "support/oracles.hpp"

using namespace schroederlab;

TEST_CASE("polynomials round-trip through JSON", "[serialize]") {
  oracle::PolyGen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly p = gen.poly();
    const Json j = to_json(p);
    CHECK(laurent_from_json(Json::parse(j.dump())) == p);
  }
}

TEST_CASE("rationals keep big numerators", "[serialize]") {
  Rational q(mpz_class("123456789012345678901234567891"), mpz_class(7));
  q.canonicalize();
  CHECK(rational_from_json(to_json(q)) == q);
}

TEST_CASE("rational functions round-trip", "[serialize]") {
  const RatFunc f = RatFunc(var_a(1, 0) + 1) / RatFunc(var_a(3, 1) - var_c(2));
  CHECK(ratfunc_from_json(to_json(f)) == f);
}

TEST_CASE("paths round-trip", "[serialize]") {
  const StepSystem sys(3, PathFamily::Small);
  const Path p(sys, {-4, 4}, parse_word(sys, "a4^2 a1 a4 a3 a2 a4^4"));
  const Json j = to_json(p);
  CHECK(j.at("family") == "small");
  CHECK(path_from_json(j) == p);
}

TEST_CASE("moment tables round-trip", "[serialize]") {
  const MomentTable t = favard_moments(LbpSpec::primitive(2), -4, 4);
  const MomentTable back = moment_table_from_json(Json::parse(to_json(t).dump()));
  CHECK(back.ell == 2);
  REQUIRE(back.mu.size() == t.mu.size());
  for (const auto& [n, v] : t.mu) CHECK(back.at(n) == v);
}

TEST_CASE("x-polynomials round-trip", "[serialize]") {
  const XPoly p = favard_gf(2, 3);
  CHECK(xpoly_from_json(to_json(p)) == p);
}

TEST_CASE("malformed input is rejected", "[serialize]") {
  CHECK_THROWS(laurent_from_json(Json::parse(R"([{"coeff":{"num":"1","den":"1"},"vars":[{"family":"z","i":0,"j":0,"exp":1}]}])")));
  CHECK_THROWS(path_from_json(Json::parse(R"({"ell":1,"family":"nope","initial":[0,0],"word":[]})")));
}
