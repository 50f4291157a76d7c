#include "catch_amalgamated.hpp"

#include "schroederlab/narayana.hpp"
#include "support/oracles.hpp"

#include <sstream>

using namespace schroederlab;

namespace {

LaurentPoly a(int i) { return var_a(i, 0); }

}  // namespace

TEST_CASE("small Narayana polynomials at l = 3", "[narayana]") {
  CHECK(narayana(3, 0) == LaurentPoly(1));
  CHECK(narayana(3, 1) == a(4));
  CHECK(narayana(3, 3) == a(3) + a(2) * a(4) + a(1) * a(4).pow(2) + a(4).pow(3));
}

TEST_CASE("value at one counts B_n", "[narayana]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 0; n <= 8; ++n)
      CHECK(narayana_at_one(narayana(ell, n)) == path_count(StepSystem(ell, PathFamily::Big), big_start(ell, n), {n, 0}));
  const auto large = oracle::schroeder_numbers(6, false);
  for (int n = 0; n < 6; ++n) CHECK(narayana_at_one(narayana(1, n)) == static_cast<long>(large[n]));
}

TEST_CASE("divisibility", "[narayana]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = ell; n <= 7; ++n) {
      const auto q = divisibility(ell, n);
      REQUIRE(q);
      CHECK(*q * narayana_divisor(ell) == narayana(ell, n));
    }
  CHECK_THROWS_AS(divisibility(3, 2), std::invalid_argument);
}

TEST_CASE("Hankel factorization", "[narayana]") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int n = 1; n <= 3; ++n) {
      const auto [lhs, rhs] = hankel_factorization(ell, n);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("counting and symbolic big/small identities", "[narayana]") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int t = 0; t <= 2; ++t)
      for (int s = 0; s <= t; ++s)
        for (int r = 0; r < ell; ++r) {
          const auto [cl, cr] = count_identity(ell, s, t, r);
          CHECK(cl == cr);
          const auto [bl, br] = bs_identity(ell, s, t, r);
          CHECK(bl == br);
        }
}

TEST_CASE("moment bridge", "[narayana]") {
  LbpEngine e(LbpSpec::constant(2));
  for (int n = 0; n <= 5; ++n) {
    const auto [mu, rhs] = moment_bridge(e, n);
    CHECK(mu == rhs);
  }
}

TEST_CASE("OEIS table parsing and alignment", "[narayana]") {
  std::istringstream in("# comment\nA000001 2 1,2,3\n");
  const auto t = parse_oeis_table(in);
  REQUIRE(t.size() == 1);
  CHECK(t[0].id == "A000001");
  CHECK(t[0].offset == 2);
  CHECK(t[0].values.size() == 3);

  const auto table = load_oeis_table();
  for (const std::string id : {"A107708", "A007863"}) {
    const auto& e = find_oeis(table, id);
    for (int n = 0; n < 8; ++n) CHECK(oeis_enumerated(id, e.offset + n) == e.values[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS_AS(find_oeis(table, "A000000"), std::out_of_range);
}
