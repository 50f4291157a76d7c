#include "catch_amalgamated.hpp"

#include "schroederlab/bijection.hpp"

using namespace schroederlab;

TEST_CASE("phi is a sign-reversing involution off the fixed set", "[bijection]") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int n = 0; n <= 4; ++n)
      for (int k = -1; k <= 2; ++k) {
        const auto r = check_phi(ell, n, k);
        INFO("ell=" << ell << " n=" << n << " k=" << k << ": " << r.counterexample);
        CHECK(r.ok);
        CHECK(r.sum_all == r.sum_fixed);
        CHECK((r.domain - r.fixed) % 2 == 0);
      }
}

TEST_CASE("dual involution", "[bijection]") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 3; ++k) {
        const auto r = check_phi_tilde(ell, n, k);
        INFO("ell=" << ell << " n=" << n << " k=" << k << ": " << r.counterexample);
        CHECK(r.ok);
        CHECK(r.sum_all == r.sum_fixed);
      }
}

TEST_CASE("the involutions refuse fixed pairs", "[bijection]") {
  // (f(n), empty) lies in the fixed set J_2 once the prefix is long enough
  const int ell = 2, n = 2, k = 0;
  for (const auto& [eta, om] : positive_domain(ell, n, k))
    if (in_positive_fixed(eta, om, n, k)) CHECK_THROWS_AS(phi(eta, om), std::invalid_argument);
}

TEST_CASE("theta on the worked example", "[bijection]") {
  const StepSystem big(3, PathFamily::Big);
  const Path om(big, {-1, 1}, parse_word(big, "a1 a4^2 a3 a4 a2 a1 a4^3"));
  const ThetaImage img = theta(om);
  CHECK(img.marked.path.word == parse_word(big, "a1 a4^2 a3 a4 a2 a4"));
  CHECK(img.marked.mark == 1);
  CHECK(img.tail.initial == Point{9, 0});
  CHECK(img.tail.word == parse_word(big, "a1 a4^2"));
  CHECK(theta_inverse(img) == om);
}

TEST_CASE("rotation on the worked example", "[bijection]") {
  const StepSystem big(3, PathFamily::Big);
  const MarkedPath mp{Path(big, {-1, 1}, parse_word(big, "a1 a4^2 a3 a4 a2 a4")), 1};
  const Path img = rotate_to_small(mp);
  CHECK(img.initial == Point{-4, 4});
  CHECK(img.word_string() == "a4 a4 a1 a4 a3 a2 a4 a4 a4 a4");
  CHECK(is_valid(img));
}

TEST_CASE("theta, rotation and decomposition harnesses", "[bijection]") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int t = 0; t <= 2; ++t)
      for (int s = t - 2; s <= t; ++s)
        for (int r = 0; r < ell; ++r) {
          INFO("ell=" << ell << " s=" << s << " t=" << t << " r=" << r);
          CHECK(check_theta(ell, s, t, r).ok);
          CHECK(check_rotation(ell, s, t, r).ok);
          CHECK(check_marked_decomposition(ell, s, t, r).ok);
        }
}

TEST_CASE("the reduced marked set drops paths that start downward", "[bijection]") {
  for (const auto& mp : reduced_marked_bst(2, 0, 2, 1)) {
    CHECK(in_reduced_marked(mp));
    if (mark_index(mp) > 0) CHECK(mp.path.word[0] != 3);
  }
}

TEST_CASE("shift from Pi_{n-1} to Omega_n", "[bijection]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 1; n <= 3; ++n) {
      const auto r = check_shift(ell, n);
      INFO("ell=" << ell << " n=" << n << ": " << r.counterexample);
      CHECK(r.ok);
    }
}
