#include "catch_amalgamated.hpp"

#include "schroederlab/paths.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace schroederlab;

namespace {

oracle::Kind kind_of(PathFamily f) {
  switch (f) {
    case PathFamily::Big: return oracle::Kind::Big;
    case PathFamily::Small: return oracle::Kind::Small;
    default: return oracle::Kind::Dual;
  }
}

}  // namespace

TEST_CASE("enumeration matches a naive search", "[paths]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (PathFamily fam : {PathFamily::Big, PathFamily::Small, PathFamily::Dual})
      for (int x0 = -2; x0 <= 0; ++x0)
        for (int y0 = 0; y0 <= 3; ++y0)
          for (int x1 = 0; x1 <= 5; ++x1) {
            const StepSystem sys(ell, fam);
            std::set<std::vector<int>> lib, ref;
            for (const auto& p : enumerate(sys, {x0, y0}, {x1, 0})) {
              CHECK(is_valid(p));
              lib.insert(p.word);
            }
            for (const auto& w : oracle::paths(ell, kind_of(fam), x0, y0, x1, 0)) ref.insert(w.word);
            INFO("ell=" << ell << " family=" << family_name(fam) << " from " << x0 << "," << y0 << " to " << x1);
            CHECK(lib == ref);
            CHECK(path_count(sys, {x0, y0}, {x1, 0}) == static_cast<long>(ref.size()));
          }
}

TEST_CASE("v generating function matches the naive weighted sum", "[paths]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (PathFamily fam : {PathFamily::Big, PathFamily::Small})
      for (int s = -1; s <= 1; ++s)
        for (int r = 0; r <= ell; ++r) {
          const Point start = bst_start(ell, s, r);
          LaurentPoly ref;
          for (const auto& w : oracle::paths(ell, kind_of(fam), start.x, start.y, 2 * ell, 0))
            ref += oracle::weight_v(ell, kind_of(fam), w);
          CHECK(path_gf(StepSystem(ell, fam), start, bst_end(ell, 2), WeightKind::V) == ref);
        }
}

TEST_CASE("w generating function of B_n matches the naive weighted sum", "[paths]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 0; n <= 7; ++n) {
      LaurentPoly ref;
      const Point s = big_start(ell, n);
      for (const auto& w : oracle::paths(ell, oracle::Kind::Big, s.x, s.y, n, 0)) ref += oracle::weight_w_big(ell, w);
      CHECK(big_gf_w(ell, n) == ref);
    }
}

TEST_CASE("big paths at l = 1 are counted by the large Schroder numbers", "[paths]") {
  const auto large = oracle::schroeder_numbers(7, false);
  const auto small = oracle::schroeder_numbers(7, true);
  const StepSystem big(1, PathFamily::Big), sm(1, PathFamily::Small);
  for (int n = 0; n < 7; ++n) {
    CHECK(path_count(big, {0, 0}, {n, 0}) == static_cast<long>(large[n]));
    CHECK(path_count(sm, {0, 0}, {n, 0}) == static_cast<long>(small[n]));
  }
  CHECK(path_count(big, {0, 0}, {3, 0}) == 22);
}

TEST_CASE("unreachable endpoints give empty sets", "[paths]") {
  const StepSystem sys(3, PathFamily::Big);
  CHECK(enumerate(sys, {0, 0}, {4, 0}).empty());
  CHECK(path_gf(sys, {0, 0}, {4, 0}, WeightKind::V).is_zero());
  CHECK_THROWS_AS(enumerate(sys, {0, 0}, {3, -1}), std::domain_error);
}

TEST_CASE("step words print and parse", "[paths]") {
  const StepSystem sys(3, PathFamily::Big);
  const Path p(sys, {-1, 1}, parse_word(sys, "a1 a4^2 a3"));
  CHECK(p.word == std::vector<int>{1, 4, 4, 3});
  CHECK(p.word_string() == "a1 a4 a4 a3");
  CHECK(parse_word(sys, p.word_string()) == p.word);
  CHECK(parse_word(sys, "eps").empty());
  CHECK_THROWS_AS(parse_word(sys, "a9"), std::invalid_argument);
}

TEST_CASE("small paths forbid low up-steps", "[paths]") {
  const StepSystem sys(2, PathFamily::Small);
  CHECK_FALSE(is_valid(Path(sys, {0, 0}, {1})));
  CHECK(is_valid(Path(sys, {0, 1}, {1})));
  CHECK_FALSE(is_valid(Path(sys, {0, 1}, {2})));
  CHECK(is_valid(Path(sys, {0, 0}, {0})));
}

TEST_CASE("Favard paths of height n", "[paths]") {
  // height 1 at l = 1: chi_1 and alpha_1
  CHECK(favard_paths(1, 1).size() == 2);
  for (int ell = 1; ell <= 3; ++ell)
    for (int n = 0; n <= 4; ++n)
      for (const auto& eta : favard_paths(ell, n)) {
        CHECK(is_valid(eta));
        CHECK(eta.height() == n);
      }
}

TEST_CASE("marked paths put the mark on the final descent", "[paths]") {
  for (int ell = 1; ell <= 3; ++ell)
    for (int t = 0; t <= 2; ++t)
      for (int r = 0; r < ell; ++r)
        for (const auto& mp : marked_bst(ell, 0, t, r)) CHECK(is_valid(mp));
  // the degenerate set M^0_{t,t} holds the empty path with mark 0
  const auto m = marked_bst(2, 1, 1, 0);
  REQUIRE(m.size() == 1);
  CHECK(m[0].path.empty());
}
