#pragma once

// Non-intersecting systems of big and small l-Schroder paths: brute-force
// enumeration, determinant evaluation and the closed-form chain for v(Pi_n).

#include "laurent.hpp"
#include "matrix.hpp"
#include "paths.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace schroederlab {

enum class SystemKind { Pi, Omega };

/// Start points of Omega_n: Formula uses (-i-l, (i mod l)+l), the start of
/// the small-path sets in the determinant; Definition uses (-i, (i mod l)+l).
enum class OmegaConvention { Formula, Definition };

/// Upper limit of the outer product in the closed form: Derived is s = n,
/// Printed is s = n-1.
enum class ClosedRange { Derived, Printed };

struct SystemFamily {
  SystemKind kind = SystemKind::Pi;
  int n = 0;
  int ell = 1;
  OmegaConvention convention = OmegaConvention::Formula;

  std::vector<Point> starts() const {
    std::vector<Point> s;
    for (int i = 0; i < n; ++i) {
      if (kind == SystemKind::Pi)
        s.push_back({-i, mod(i, ell)});
      else
        s.push_back({convention == OmegaConvention::Formula ? -i - ell : -i, mod(i, ell) + ell});
    }
    return s;
  }
  std::vector<Point> ends() const {
    std::vector<Point> e;
    for (int i = 0; i < n; ++i) e.push_back({(kind == SystemKind::Pi ? i + 1 : i) * ell, 0});
    return e;
  }
  StepSystem steps() const { return StepSystem(ell, kind == SystemKind::Pi ? PathFamily::Big : PathFamily::Small); }
};

struct PathSystem {
  std::vector<Path> paths;
  std::vector<int> sigma;  // path i ends at end sigma[i]
  int sign = 1;
};

inline int permutation_sign(const std::vector<int>& sigma) {
  int s = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) s = -s;
  return s;
}

inline LaurentPoly system_weight(const PathSystem& ps) {
  LaurentPoly w = ps.sign;
  for (const auto& p : ps.paths) w *= weight_v(p);
  return w;
}

/// No two paths share a vertex.
inline bool non_intersecting(const PathSystem& ps) {
  std::vector<Point> all;
  for (const auto& p : ps.paths) {
    auto pts = p.points();
    all.insert(all.end(), pts.begin(), pts.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

/// Visits every non-intersecting system of the family, over all permutations.
inline void for_each_system(const SystemFamily& fam, const std::function<void(const PathSystem&)>& f) {
  const auto starts = fam.starts();
  const auto ends = fam.ends();
  const int n = fam.n;
  const StepSystem sys = fam.steps();
  std::vector<std::vector<std::vector<Path>>> cand(n, std::vector<std::vector<Path>>(n));
  int xmin = 0, xmax = 0, ymax = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cand[i][j] = enumerate(sys, starts[i], ends[j]);
      for (const auto& p : cand[i][j])
        for (const auto& q : p.points()) {
          xmin = std::min(xmin, q.x);
          xmax = std::max(xmax, q.x);
          ymax = std::max(ymax, q.y);
        }
    }
  const int w = xmax - xmin + 1;
  auto cell = [&](Point q) { return static_cast<std::size_t>(q.y) * w + (q.x - xmin); };
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> cells(n, std::vector<std::vector<std::vector<std::size_t>>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& p : cand[i][j]) {
        std::vector<std::size_t> cs;
        for (const auto& q : p.points()) cs.push_back(cell(q));
        cells[i][j].push_back(std::move(cs));
      }
  std::vector<char> used(static_cast<std::size_t>(ymax + 1) * w, 0);
  std::vector<char> end_used(n, 0);
  PathSystem cur;
  cur.sigma.assign(n, -1);
  std::vector<const Path*> chosen(n, nullptr);
  std::function<void(int)> dfs = [&](int i) {
    if (i == n) {
      PathSystem ps;
      for (int k = 0; k < n; ++k) ps.paths.push_back(*chosen[k]);
      ps.sigma = cur.sigma;
      ps.sign = permutation_sign(ps.sigma);
      f(ps);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (end_used[j]) continue;
      for (std::size_t k = 0; k < cand[i][j].size(); ++k) {
        const auto& cs = cells[i][j][k];
        bool free = true;
        for (auto c : cs)
          if (used[c]) {
            free = false;
            break;
          }
        if (!free) continue;
        for (auto c : cs) used[c] = 1;
        end_used[j] = 1;
        cur.sigma[i] = j;
        chosen[i] = &cand[i][j][k];
        dfs(i + 1);
        end_used[j] = 0;
        for (auto c : cs) used[c] = 0;
      }
    }
  };
  dfs(0);
}

inline std::vector<PathSystem> enumerate_systems(const SystemFamily& fam) {
  std::vector<PathSystem> out;
  for_each_system(fam, [&](const PathSystem& ps) { out.push_back(ps); });
  return out;
}

/// Signed weight sum over all non-intersecting systems (every system weight
/// is a single term, so terms are accumulated directly).
inline LaurentPoly brute_force_gf(const SystemFamily& fam) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for_each_system(fam, [&](const PathSystem& ps) {
    const LaurentPoly w = system_weight(ps);
    for (const auto& t : w.terms()) acc[t.mono] += t.coeff;
  });
  std::vector<Term> ts;
  for (auto& [m, c] : acc) ts.push_back({m, c});
  return LaurentPoly::from_terms(std::move(ts));
}

/// Matrix of single-path generating functions from start i to end j.
inline Matrix<LaurentPoly> lgv_matrix(const SystemFamily& fam) {
  const auto starts = fam.starts();
  const auto ends = fam.ends();
  Matrix<LaurentPoly> M(fam.n, fam.n);
  const StepSystem sys = fam.steps();
  for (int i = 0; i < fam.n; ++i)
    for (int j = 0; j < fam.n; ++j) M(i, j) = path_gf(sys, starts[i], ends[j], WeightKind::V);
  return M;
}

inline LaurentPoly gf_system_det(const SystemFamily& fam) { return det(lgv_matrix(fam)); }

/// sum_{i=0}^{l} b_{i,t} c_s^{l-i}
inline LaurentPoly linear_factor(int ell, int t, int s) {
  LaurentPoly f;
  for (int i = 0; i <= ell; ++i) f += LaurentPoly(Monomial::from_factors({{Var::b(i, t), 1}, {Var::c(s), ell - i}}));
  return f;
}

inline LaurentPoly c_pow(int j, int e) { return LaurentPoly(Monomial(Var::c(j), e)); }

inline LaurentPoly pi_gf(int ell, int n) { return gf_system_det({SystemKind::Pi, n, ell}); }
inline LaurentPoly omega_gf(int ell, int n, OmegaConvention conv = OmegaConvention::Formula) {
  return gf_system_det({SystemKind::Omega, n, ell, conv});
}

/// Right-hand side of v(Pi_n) = (v(Omega_n) with c_k -> c_{k+1}) prod_t c_{t+1}^{-l} sum_i b_{i,t} c_{t+1}^{l-i}.
inline LaurentPoly pi_from_omega(int ell, int n, const LaurentPoly& omega) {
  LaurentPoly r = shift_c(omega, 1);
  for (int t = 0; t < n; ++t) r = r * c_pow(t + 1, -ell) * linear_factor(ell, t, t + 1);
  return r;
}

/// c_0^l prod_{i=1}^{n-1} c_i^{l+1} prod_{i=1}^{floor((n-1)/l)} b_{0,-i}
inline LaurentPoly omega_shift_factor(int ell, int n) {
  std::vector<std::pair<Var, int>> fs{{Var::c(0), ell}};
  for (int i = 1; i <= n - 1; ++i) fs.push_back({Var::c(i), ell + 1});
  for (int i = 1; i <= (n - 1) / ell; ++i) fs.push_back({Var::b(0, -i), 1});
  return LaurentPoly(Monomial::from_factors(std::move(fs)));
}

/// Right-hand side of v(Omega_n) = (shift factor) v(Pi_{n-1}).
inline LaurentPoly omega_from_pi(int ell, int n, const LaurentPoly& pi_prev) {
  return omega_shift_factor(ell, n) * pi_prev;
}

/// One step of the recurrence for v(Pi_n) from v(Pi_{n-1}).
inline LaurentPoly pi_recurrence_step(int ell, int n, const LaurentPoly& prev) {
  std::vector<std::pair<Var, int>> fs;
  for (int i = 2; i <= n; ++i) fs.push_back({Var::c(i), 1});
  for (int i = 1; i <= (n - 1) / ell; ++i) fs.push_back({Var::b(0, -i), 1});
  LaurentPoly r(Monomial::from_factors(std::move(fs)));
  for (int t = 0; t < n; ++t) r *= linear_factor(ell, t, t + 1);
  return r * shift_c(prev, 1);
}

inline LaurentPoly pi_recurrence(int ell, int n) {
  LaurentPoly v = 1;
  for (int k = 1; k <= n; ++k) v = pi_recurrence_step(ell, k, v);
  return v;
}

/// Monomial prefactor prod_{i=2}^n c_i^{i-1} prod_{j=1}^{floor((i-1)/l)} b_{0,-j}.
inline LaurentPoly closed_prefactor(int ell, int n) {
  std::vector<std::pair<Var, int>> fs;
  for (int i = 2; i <= n; ++i) {
    fs.push_back({Var::c(i), i - 1});
    for (int j = 1; j <= (i - 1) / ell; ++j) fs.push_back({Var::b(0, -j), 1});
  }
  return LaurentPoly(Monomial::from_factors(std::move(fs)));
}

/// The linear factors sum_i b_{i,t} c_s^{l-i}, 0 <= t < s <= upper.
inline std::vector<LaurentPoly> closed_factors(int ell, int n, ClosedRange range = ClosedRange::Derived) {
  const int upper = range == ClosedRange::Derived ? n : n - 1;
  std::vector<LaurentPoly> fs;
  for (int s = 1; s <= upper; ++s)
    for (int t = 0; t < s; ++t) fs.push_back(linear_factor(ell, t, s));
  return fs;
}

inline LaurentPoly gf_pi_closed(int ell, int n, ClosedRange range = ClosedRange::Derived) {
  LaurentPoly r = closed_prefactor(ell, n);
  for (const auto& f : closed_factors(ell, n, range)) r *= f;
  return r;
}

/// Divides out every closed-form linear factor; true when each division is
/// exact and the cofactor left over is exactly the monomial prefactor.
inline bool peel_factorization(int ell, int n, const LaurentPoly& value) {
  LaurentPoly rest = value;
  for (const auto& f : closed_factors(ell, n)) {
    auto q = exact_div(rest, f);
    if (!q) return false;
    rest = std::move(*q);
  }
  return rest == closed_prefactor(ell, n);
}

}  // namespace schroederlab
