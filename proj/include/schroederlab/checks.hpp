#pragma once

// Named identity checks shared by the command line and the acceptance run.
// Every check sweeps a fixed parameter range and reports the first failure.

#include "bijection.hpp"
#include "laurent.hpp"
#include "lbp.hpp"
#include "lgv.hpp"
#include "matrix.hpp"
#include "narayana.hpp"
#include "paths.hpp"
#include "serialize.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace schroederlab {

struct Verdict {
  std::string check;
  Json params = Json::object();
  bool ok = true;
  std::string counterexample;
  std::size_t checked = 0;

  void fail(const std::string& why) {
    if (ok) counterexample = why;
    ok = false;
  }
  void absorb(const Report& r, const std::string& where) {
    checked += r.checked;
    if (!r.ok) fail(where + ": " + r.counterexample);
  }
};

inline Json to_json(const Verdict& v) {
  return Json{{"check", v.check},
              {"params", v.params},
              {"ok", v.ok},
              {"counterexample", v.ok ? Json(nullptr) : Json(v.counterexample)}};
}

/// k=v pairs separated by spaces.
inline std::string params_text(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

namespace detail {

inline std::string show(const RatFunc& f) { return f.to_string(); }

inline void expect_equal(Verdict& v, const RatFunc& got, const RatFunc& want, const std::string& where) {
  ++v.checked;
  if (!(got == want)) v.fail(where + ": got " + show(got) + ", expected " + show(want));
}

inline std::string at(const std::string& what, std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s = what;
  for (const auto& [k, x] : kv) s += std::string(" ") + k + "=" + std::to_string(x);
  return s;
}

}  // namespace detail

// ------------------------------------------------------------------ moments

/// The printed l = 3 moment lists, mu_{-5} .. mu_6.
inline std::vector<std::pair<int, RatFunc>> golden_moments_ell3() {
  auto a = [](int i, int j) { return RatFunc(Var::a(i, j)); };
  std::vector<std::pair<int, RatFunc>> g;
  g.emplace_back(0, RatFunc(1));
  g.emplace_back(1, RatFunc(0));
  g.emplace_back(2, RatFunc(0));
  g.emplace_back(3, a(3, 0));
  g.emplace_back(4, a(3, 0) * a(4, 1));
  g.emplace_back(5, a(3, 0) * a(4, 2) * a(4, 1));
  g.emplace_back(6, a(3, 0) * (a(1, 0) * a(4, 1) * a(4, 2) + a(4, 1) * a(4, 2) * a(4, 3) + a(2, 0) * a(4, 1) + a(3, 0)));
  g.emplace_back(-1, RatFunc(0));
  g.emplace_back(-2, -a(4, 1) / a(3, 1));
  g.emplace_back(-3, a(2, 0) * a(4, 1) / (a(3, 1) * a(3, 0)) + 1 / a(3, 0));
  g.emplace_back(-4, a(4, 1) * a(4, 2) / (a(3, 1) * a(3, 2)));
  g.emplace_back(-5, -(a(4, 1).pow(2) * a(2, 0)) / (a(3, 1).pow(2) * a(3, 0)) -
                         a(4, 1) * a(2, 1) * a(4, 2) / (a(3, 1).pow(2) * a(3, 2)) - a(4, 1) / a(3, 1).pow(2) -
                         a(4, 1) / (a(3, 1) * a(3, 0)));
  return g;
}

inline Verdict check_moments_golden() {
  Verdict v{"moments-golden", {{"ell", 3}, {"from", -5}, {"to", 6}}};
  LbpEngine e(LbpSpec::primitive(3));
  for (const auto& [n, want] : golden_moments_ell3()) detail::expect_equal(v, e.mu(n), want, "mu_" + std::to_string(n));
  return v;
}

/// Favard solve against the path interpretation, degrees lo..hi.
inline Verdict check_moments_paths(int ell, int lo, int hi) {
  Verdict v{"moments-paths", {{"ell", ell}, {"from", lo}, {"to", hi}}};
  LbpEngine e(LbpSpec::primitive(ell));
  for (int n = lo; n <= hi; ++n) detail::expect_equal(v, moments_via_paths(ell, n), e.mu(n), "mu_" + std::to_string(n));
  return v;
}

/// L[P_n x^{-lk}] = 0 for 0 <= k < n <= nmax, and the k = n, k = -1 values.
inline Verdict check_orthogonality(int ell, int nmax) {
  Verdict v{"orthogonality", {{"ell", ell}, {"max_n", nmax}}};
  LbpEngine e(LbpSpec::primitive(ell));
  for (int n = 0; n <= nmax; ++n) {
    for (int k = 0; k < n; ++k) detail::expect_equal(v, e.orthogonality(n, k), 0, detail::at("vanishing", {{"n", n}, {"k", k}}));
    detail::expect_equal(v, e.orthogonality(n, n), orthogonality_diagonal(e, n), detail::at("k = n", {{"n", n}}));
    detail::expect_equal(v, e.orthogonality(n, -1), orthogonality_below(e, n), detail::at("k = -1", {{"n", n}}));
  }
  return v;
}

inline Verdict check_coeff_det(int ell, int kmax) {
  Verdict v{"coeff-det", {{"ell", ell}, {"max_k", kmax}}};
  LbpEngine e(LbpSpec::primitive(ell));
  for (int k = 0; k <= kmax; ++k) detail::expect_equal(v, coeff_det(e, k), coeff_det_expected(e, k), detail::at("det", {{"k", k}}));
  return v;
}

/// Random unit lower-triangular integer matrix with entries in [-3, 3].
inline Matrix<LaurentPoly> random_unit_lower(int ell, std::mt19937_64& rng) {
  Matrix<LaurentPoly> S = Matrix<LaurentPoly>::identity(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < i; ++j) S(i, j) = static_cast<int>(rng() % 7) - 3;
  return S;
}

/// Blockwise S^{-1} on the primitive moments against the direct solve of the
/// spec with initial polynomials S (1, x, ..., x^{l-1}), blocks -2..2.
inline Verdict check_transform(int ell, int trials, std::uint64_t seed) {
  Verdict v{"transform", {{"ell", ell}, {"trials", trials}, {"seed", seed}}};
  std::mt19937_64 rng(seed);
  const int lo = -2 * ell, hi = 3 * ell - 1;
  const MomentTable base = favard_moments(LbpSpec::primitive(ell), lo, hi);
  for (int trial = 0; trial < trials; ++trial) {
    const auto S = random_unit_lower(ell, rng);
    const MomentTable moved = transform_primitive(S, base);
    const MomentTable direct = favard_moments(LbpSpec::primitive(ell).with_initial(S), lo, hi);
    for (int n = lo; n <= hi; ++n)
      detail::expect_equal(v, moved.at(n), direct.at(n), detail::at("transformed", {{"trial", trial}, {"n", n}}));
  }
  return v;
}

// ------------------------------------------------------------ involutions

/// Exhaustive on every (n, k) with n <= nmax and |k| <= kmax; also compares
/// the signed sum over the domain with the sum over the fixed set.
inline Verdict check_involutions(int ell, int nmax, int kmax, bool dual) {
  Verdict v{dual ? "phi-tilde" : "phi", {{"ell", ell}, {"max_n", nmax}, {"max_k", kmax}}};
  for (int n = 0; n <= nmax; ++n)
    for (int k = -kmax; k <= kmax; ++k) {
      const InvolutionReport r = dual ? check_phi_tilde(ell, n, k) : check_phi(ell, n, k);
      const std::string where = detail::at("", {{"n", n}, {"k", k}}).substr(1);
      v.absorb(r, where);
      if (r.sum_all != r.sum_fixed) v.fail(where + ": signed sum " + r.sum_all.to_string() + " differs from fixed sum " + r.sum_fixed.to_string());
    }
  return v;
}

// ------------------------------------------------------------ bijections

/// Pairs t in [0, tmax], s in [t - tmax, t].
inline void for_each_st(int tmax, const std::function<void(int, int)>& f) {
  for (int t = 0; t <= tmax; ++t)
    for (int s = t - tmax; s <= t; ++s) f(s, t);
}

inline Verdict check_theta_suite(int ell, int tmax) {
  Verdict v{"theta", {{"ell", ell}, {"max_t", tmax}}};
  for_each_st(tmax, [&](int s, int t) {
    for (int r = 0; r < ell; ++r) v.absorb(check_theta(ell, s, t, r), detail::at("theta", {{"s", s}, {"t", t}, {"r", r}}));
  });
  return v;
}

/// Rotation onto the small paths, plus the decomposition of the marked set.
inline Verdict check_rotation_suite(int ell, int tmax) {
  Verdict v{"rotation", {{"ell", ell}, {"max_t", tmax}}};
  for_each_st(tmax, [&](int s, int t) {
    for (int r = 0; r < ell; ++r) {
      v.absorb(check_rotation(ell, s, t, r), detail::at("rotation", {{"s", s}, {"t", t}, {"i", r}}));
      v.absorb(check_marked_decomposition(ell, s, t, r), detail::at("decomposition", {{"s", s}, {"t", t}, {"r", r}}));
    }
  });
  return v;
}

inline Verdict check_shift_suite(int ell, int nmax) {
  Verdict v{"shift", {{"ell", ell}, {"max_n", nmax}}};
  for (int n = 1; n <= nmax; ++n) v.absorb(check_shift(ell, n), detail::at("shift", {{"n", n}}));
  return v;
}

/// The two worked step-word examples at l = 3.
inline Verdict check_figure_words() {
  Verdict v{"figure-words", {{"ell", 3}}};
  const StepSystem big(3, PathFamily::Big);
  const Path om(big, {-1, 1}, parse_word(big, "a1 a4^2 a3 a4 a2 a1 a4^3"));
  ++v.checked;
  if (!is_valid(om) || om.end() != Point{12, 0}) v.fail("theta example is not in B^1_{0,4}");
  const ThetaImage img = theta(om);
  ++v.checked;
  if (img.marked.path.word != parse_word(big, "a1 a4^2 a3 a4 a2 a4") || img.marked.mark != 1 ||
      img.tail.word != parse_word(big, "a1 a4^2"))
    v.fail("theta example maps to " + describe(img.marked.path) + " mark " + std::to_string(img.marked.mark) +
           " and " + describe(img.tail));
  const MarkedPath mp{Path(big, {-1, 1}, parse_word(big, "a1 a4^2 a3 a4 a2 a4")), 1};
  ++v.checked;
  if (!is_valid(mp) || !in_reduced_marked(mp)) v.fail("rotation example is not in N^1_{0,3}");
  const Path rot = rotate_to_small(mp);
  const StepSystem small(3, PathFamily::Small);
  ++v.checked;
  if (!(rot == Path(small, {-4, 4}, parse_word(small, "a4^2 a1 a4 a3 a2 a4^4"))) || !is_valid(rot))
    v.fail("rotation example maps to " + describe(rot));
  return v;
}

// ------------------------------------------------------ big/small identity

inline Verdict check_bs_identity(int ell, int tmax) {
  Verdict v{"bs-identity", {{"ell", ell}, {"max_t", tmax}}};
  for_each_st(tmax, [&](int s, int t) {
    for (int r = 0; r < ell; ++r) {
      const auto [lhs, rhs] = bs_identity(ell, s, t, r);
      detail::expect_equal(v, lhs, rhs, detail::at("identity", {{"s", s}, {"t", t}, {"r", r}}));
    }
  });
  return v;
}

/// The counting corollary; with oeis, also the bundled l = 2 prefixes.
inline Verdict check_counts(int ell, int tmax, bool oeis) {
  Verdict v{"counts", {{"ell", ell}, {"max_t", tmax}, {"oeis", oeis}}};
  for_each_st(tmax, [&](int s, int t) {
    for (int r = 0; r < ell; ++r) {
      const auto [lhs, rhs] = count_identity(ell, s, t, r);
      detail::expect_equal(v, lhs, rhs, detail::at("count", {{"s", s}, {"t", t}, {"r", r}}));
    }
  });
  if (oeis) {
    std::vector<OeisEntry> table;
    try {
      table = load_oeis_table();
    } catch (const std::exception& e) {
      v.fail(e.what());
      return v;
    }
    for (const std::string id : {"A107708", "A007863"}) {
      const OeisEntry& e = find_oeis(table, id);
      for (std::size_t k = 0; k < e.values.size(); ++k) {
        const int n = e.offset + static_cast<int>(k);
        detail::expect_equal(v, oeis_enumerated(id, n), e.values[k], id + " n=" + std::to_string(n));
      }
    }
  }
  return v;
}

// ----------------------------------------------------- non-intersecting

/// Largest n at which the non-intersecting systems are enumerated outright.
inline int brute_force_limit(int ell) { return ell == 1 ? 4 : 3; }

/// The chain for Pi_n and Omega_n at one n: brute force (when small enough)
/// against the determinants, the Omega-to-Pi relation, the shift relation,
/// the recurrence and the closed product.
inline Verdict check_pi_factorization(int ell, int n, OmegaConvention conv, ClosedRange range) {
  Verdict v{"pi-factorization",
            {{"ell", ell},
             {"n", n},
             {"omega_convention", conv == OmegaConvention::Formula ? "formula" : "defn"},
             {"closed_range", range == ClosedRange::Derived ? "derived" : "printed"}}};
  const SystemFamily pi{SystemKind::Pi, n, ell};
  const SystemFamily om{SystemKind::Omega, n, ell, conv};
  const LaurentPoly pi_det = gf_system_det(pi);
  const LaurentPoly om_det = gf_system_det(om);
  const bool brute = n <= brute_force_limit(ell);
  v.params["brute_force"] = brute;
  if (brute) {
    detail::expect_equal(v, brute_force_gf(pi), pi_det, "Pi_n brute force vs determinant");
    detail::expect_equal(v, brute_force_gf(om), om_det, "Omega_n brute force vs determinant");
  }
  detail::expect_equal(v, pi_from_omega(ell, n, om_det), pi_det, "Pi_n from Omega_n");
  if (n >= 1) detail::expect_equal(v, om_det, omega_from_pi(ell, n, gf_system_det({SystemKind::Pi, n - 1, ell})), "Omega_n from Pi_{n-1}");
  detail::expect_equal(v, pi_recurrence(ell, n), pi_det, "recurrence");
  detail::expect_equal(v, gf_pi_closed(ell, n, range), pi_det, "closed form");
  return v;
}

inline Verdict check_pi_chain(int ell, int nmax, OmegaConvention conv, ClosedRange range) {
  Verdict v{"pi-factorization",
            {{"ell", ell},
             {"max_n", nmax},
             {"omega_convention", conv == OmegaConvention::Formula ? "formula" : "defn"},
             {"closed_range", range == ClosedRange::Derived ? "derived" : "printed"}}};
  for (int n = 1; n <= nmax; ++n) {
    const Verdict one = check_pi_factorization(ell, n, conv, range);
    v.checked += one.checked;
    if (!one.ok) v.fail("n=" + std::to_string(n) + ": " + one.counterexample);
  }
  return v;
}

// ---------------------------------------------------------------- narayana

inline Verdict check_narayana_div(int ell, int nmax) {
  Verdict v{"narayana-div", {{"ell", ell}, {"max_n", nmax}}};
  for (int n = ell; n <= nmax; ++n) {
    ++v.checked;
    if (!divisibility(ell, n)) v.fail("N_" + std::to_string(n) + " is not divisible by " + narayana_divisor(ell).to_string());
  }
  return v;
}

inline Verdict check_hankel(int ell, int nmax) {
  Verdict v{"hankel", {{"ell", ell}, {"max_n", nmax}}};
  for (int n = 1; n <= nmax; ++n) {
    const auto [lhs, rhs] = hankel_factorization(ell, n);
    detail::expect_equal(v, lhs, rhs, detail::at("hankel", {{"n", n}}));
  }
  return v;
}

inline Verdict check_bridge(int ell, int nmax) {
  Verdict v{"bridge", {{"ell", ell}, {"max_n", nmax}}};
  LbpEngine e(LbpSpec::constant(ell));
  for (int n = 0; n <= nmax; ++n) {
    const auto [mu, rhs] = moment_bridge(e, n);
    detail::expect_equal(v, mu, rhs, detail::at("bridge", {{"n", n}}));
  }
  return v;
}

// ------------------------------------------------------------------ kernel

namespace detail {

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4) {
  const int nt = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
  std::vector<Term> ts;
  for (int k = 0; k < nt; ++k) {
    std::vector<std::pair<Var, int>> fs;
    const int nv = static_cast<int>(rng() % 3);
    for (int q = 0; q < nv; ++q) {
      const int which = static_cast<int>(rng() % 5);
      const Var x = which < 2   ? Var::a(which + 1, static_cast<int>(rng() % 2))
                    : which < 4 ? Var::b(which - 2, static_cast<int>(rng() % 3) - 1)
                                : Var::c(static_cast<int>(rng() % 3));
      fs.push_back({x, static_cast<int>(rng() % 5) - 2});
    }
    Rational c(static_cast<long>(rng() % 9) - 4, static_cast<unsigned long>(rng() % 3 + 1));
    c.canonicalize();
    ts.push_back({Monomial::from_factors(std::move(fs)), c});
  }
  return LaurentPoly::from_terms(std::move(ts));
}

inline LaurentPoly laplace_det(const Matrix<LaurentPoly>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    const LaurentPoly c = m(0, j) * laplace_det(m.minor(0, j));
    acc += j % 2 ? -c : c;
  }
  return acc;
}

inline bool canonical(const LaurentPoly& p) {
  const auto& ts = p.terms();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (ts[k].coeff == 0) return false;
    if (k > 0 && term_order(ts[k - 1].mono, ts[k].mono) <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Randomized kernel properties: canonical form, ring axioms, exact division,
/// Bareiss against cofactor expansion, and the c-shift homomorphism.
inline Verdict check_kernel(int cases, std::uint64_t seed) {
  Verdict v{"kernel", {{"cases", cases}, {"seed", seed}}};
  std::mt19937_64 rng(seed);
  auto rp = [&] { return detail::random_poly(rng); };
  for (int c = 0; c < cases; ++c) {
    const std::string tag = " (case " + std::to_string(c) + ")";
    const LaurentPoly p = rp(), q = rp(), r = rp();

    // canonical form: order independence and duplicate merging
    std::vector<Term> ts = p.terms();
    for (const auto& t : q.terms()) ts.push_back(t);
    std::shuffle(ts.begin(), ts.end(), rng);
    const LaurentPoly merged = LaurentPoly::from_terms(ts);
    ++v.checked;
    if (!(merged == p + q) || !detail::canonical(merged) || !detail::canonical(p * q))
      v.fail("canonical form" + tag + ": " + p.to_string() + " ; " + q.to_string());

    ++v.checked;
    if (!(p + q == q + p) || !((p + q) + r == p + (q + r)) || !(p * q == q * p) || !((p * q) * r == p * (q * r)) ||
        !(p * (q + r) == p * q + p * r) || !(p - p).is_zero() || !(p * LaurentPoly(1) == p))
      v.fail("ring axioms" + tag + ": " + p.to_string() + " ; " + q.to_string() + " ; " + r.to_string());

    if (!q.is_zero()) {
      ++v.checked;
      const auto back = exact_div(p * q, q);
      if (!back || !(*back == p)) v.fail("exact_div round trip" + tag + ": " + p.to_string() + " ; " + q.to_string());
    }

    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    Matrix<LaurentPoly> M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = detail::random_poly(rng, 2);
    ++v.checked;
    if (!(det(M) == detail::laplace_det(M))) v.fail("determinant vs cofactor expansion" + tag);

    const int d = static_cast<int>(rng() % 5) - 2;
    ++v.checked;
    if (!(shift_c(p * q, d) == shift_c(p, d) * shift_c(q, d)) || !(shift_c(p + q, d) == shift_c(p, d) + shift_c(q, d)) ||
        !(shift_c(shift_c(p, d), -d) == p))
      v.fail("shift_c homomorphism" + tag + ": " + p.to_string() + " ; " + q.to_string());
  }
  return v;
}

}  // namespace schroederlab
