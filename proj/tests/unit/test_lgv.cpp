#include "catch_amalgamated.hpp"

#include "schroederlab/lgv.hpp"
#include "support/oracles.hpp"

using namespace schroederlab;

namespace {

std::vector<std::pair<int, int>> pairs(const std::vector<Point>& ps) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : ps) out.push_back({p.x, p.y});
  return out;
}

}  // namespace

TEST_CASE("non-intersecting sums match a naive permutation search", "[lgv]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 1; n <= (ell == 1 ? 3 : 2); ++n)
      for (SystemKind kind : {SystemKind::Pi, SystemKind::Omega}) {
        const SystemFamily fam{kind, n, ell};
        const auto k = kind == SystemKind::Pi ? oracle::Kind::Big : oracle::Kind::Small;
        const LaurentPoly ref = oracle::nonintersecting_sum(ell, k, pairs(fam.starts()), pairs(fam.ends()));
        INFO("ell=" << ell << " n=" << n);
        CHECK(brute_force_gf(fam) == ref);
        CHECK(gf_system_det(fam) == ref);
      }
}

TEST_CASE("LGV matrix determinant agrees with cofactor expansion", "[lgv]") {
  const auto m = lgv_matrix({SystemKind::Pi, 3, 2});
  CHECK(det(m) == oracle::cofactor_det(m));
}

TEST_CASE("Pi_n chain under the formula convention", "[lgv]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 1; n <= 3; ++n) {
      INFO("ell=" << ell << " n=" << n);
      const LaurentPoly pi = pi_gf(ell, n);
      CHECK(pi_from_omega(ell, n, omega_gf(ell, n)) == pi);
      CHECK(omega_gf(ell, n) == omega_from_pi(ell, n, pi_gf(ell, n - 1)));
      CHECK(pi_recurrence(ell, n) == pi);
      CHECK(gf_pi_closed(ell, n) == pi);
      CHECK(peel_factorization(ell, n, pi));
    }
}

TEST_CASE("the alternatives to the chosen conventions break the chain", "[lgv]") {
  // Omega starts at (-i, (i mod l) + l): the relation to Pi_n fails already at n = 1
  CHECK_FALSE(pi_from_omega(2, 1, omega_gf(2, 1, OmegaConvention::Definition)) == pi_gf(2, 1));
  // product over s < n misses the last row of linear factors
  CHECK_FALSE(gf_pi_closed(1, 2, ClosedRange::Printed) == pi_gf(1, 2));
}

TEST_CASE("Pi_1 is the single linear factor", "[lgv]") {
  for (int ell = 1; ell <= 3; ++ell) CHECK(pi_gf(ell, 1) == linear_factor(ell, 0, 1));
}

TEST_CASE("permutation sign", "[lgv]") {
  CHECK(permutation_sign({0, 1, 2}) == 1);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({2, 0, 1}) == 1);
}
