#pragma once

// Reference implementations for the tests. Nothing here calls the library's
// enumeration, weighting or elimination code; only the value types are shared.

#include "schroederlab/laurent.hpp"
#include "schroederlab/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using schroederlab::LaurentPoly;
using schroederlab::Matrix;
using schroederlab::Monomial;
using schroederlab::Rational;
using schroederlab::Var;

enum class Kind { Big, Small, Dual };

struct Step {
  int dx, dy;
};

// Labels 0..ell+1 in the same order as the library's word encoding.
inline std::vector<Step> steps(int ell, Kind k) {
  std::vector<Step> s;
  if (k == Kind::Dual) {
    for (int i = 0; i < ell; ++i) s.push_back({ell - i, ell - i});
    s.push_back({ell, 0});
    s.push_back({ell - 1, -1});
  } else {
    for (int i = 0; i <= ell; ++i) s.push_back({i, ell - i});
    s.push_back({1, -1});
  }
  return s;
}

inline int floor_mod(int a, int m) { return ((a % m) + m) % m; }

struct Walk {
  int x0, y0;
  std::vector<int> word;
};

/// Plain depth-first search with a crude potential bound; no memoization.
inline std::vector<Walk> paths(int ell, Kind k, int x0, int y0, int x1, int y1) {
  std::vector<Walk> out;
  const auto st = steps(ell, k);
  std::vector<int> w;
  auto bound_ok = [&](int x, int y) {
    if (x > x1 || y < 0) return false;
    return k == Kind::Dual ? x - y <= x1 - y1 : x + y <= x1 + y1;
  };
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (x == x1 && y == y1) out.push_back({x0, y0, w});
    for (int l = 0; l < static_cast<int>(st.size()); ++l) {
      if (k == Kind::Small && l >= 1 && l <= ell && y < l) continue;
      const int nx = x + st[l].dx, ny = y + st[l].dy;
      if (!bound_ok(nx, ny)) continue;
      w.push_back(l);
      self(self, nx, ny);
      w.pop_back();
    }
  };
  if (bound_ok(x0, y0)) rec(rec, x0, y0);
  return out;
}

inline std::vector<std::pair<int, int>> vertices(int ell, Kind k, const Walk& p) {
  const auto st = steps(ell, k);
  std::vector<std::pair<int, int>> v{{p.x0, p.y0}};
  int x = p.x0, y = p.y0;
  for (int l : p.word) {
    x += st[l].dx;
    y += st[l].dy;
    v.push_back({x, y});
  }
  return v;
}

/// v weight: a_i from (x, y) gets b_{i,(x+y)/l}, the down step gets c_{(x+y)/l}.
inline LaurentPoly weight_v(int ell, Kind k, const Walk& p) {
  LaurentPoly w = 1;
  const auto st = steps(ell, k);
  int x = p.x0, y = p.y0;
  for (int l : p.word) {
    const int j = (x + y) / ell;
    w *= l == ell + 1 ? LaurentPoly(Var::c(j)) : LaurentPoly(Var::b(l, j));
    x += st[l].dx;
    y += st[l].dy;
  }
  return w;
}

/// w weight of a big path: a_{i,y} for a step a_i (down = a_{l+1}) starting at
/// height y, and 1 for a_0.
inline LaurentPoly weight_w_big(int ell, const Walk& p) {
  LaurentPoly w = 1;
  const auto st = steps(ell, Kind::Big);
  int x = p.x0, y = p.y0;
  for (int l : p.word) {
    if (l >= 1) w *= LaurentPoly(Var::a(l, y));
    x += st[l].dx;
    y += st[l].dy;
  }
  return w;
}

/// Classical Schroder paths with steps (1,1), (2,0), (1,-1) from (0,0) to
/// (2n,0); with small, no flat step on the axis.
inline std::vector<std::uint64_t> schroeder_numbers(int count, bool small) {
  std::vector<std::uint64_t> out;
  for (int n = 0; n < count; ++n) {
    const int w = 2 * n;
    std::vector<std::vector<std::uint64_t>> f(w + 1, std::vector<std::uint64_t>(w + 2, 0));
    f[0][0] = 1;
    for (int x = 0; x < w; ++x)
      for (int y = 0; y <= w; ++y) {
        if (!f[x][y]) continue;
        if (y + 1 <= w) f[x + 1][y + 1] += f[x][y];
        if (y > 0) f[x + 1][y - 1] += f[x][y];
        if (x + 2 <= w && !(small && y == 0)) f[x + 2][y] += f[x][y];
      }
    out.push_back(f[w][0]);
  }
  return out;
}

/// Laplace expansion along the first row.
inline LaurentPoly cofactor_det(const Matrix<LaurentPoly>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<LaurentPoly> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, sc = 0; c < n; ++c)
        if (c != j) sub(i - 1, sc++) = m(i, c);
    LaurentPoly t = m(0, j) * cofactor_det(sub);
    acc += (j % 2) ? -t : t;
  }
  return acc;
}

/// Leibniz formula: sum over permutations of signed products.
inline LaurentPoly leibniz_det(const Matrix<LaurentPoly>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  LaurentPoly acc;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    LaurentPoly t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) t *= m(i, p[i]);
    acc += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

/// Random small Laurent polynomial over a handful of variables.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  LaurentPoly poly(int max_terms = 5) {
    LaurentPoly p;
    const int nt = uniform(0, max_terms);
    for (int k = 0; k < nt; ++k) {
      Monomial m;
      for (int v = uniform(0, 3); v > 0; --v) {
        static const Var pool[] = {Var::a(1, 0), Var::a(2, 1), Var::a(3, -1), Var::b(0, 0), Var::b(1, 2), Var::c(0), Var::c(1), Var::c(-2)};
        m = m * Monomial(pool[uniform(0, 7)], uniform(-3, 3));
      }
      Rational c(uniform(-5, 5), uniform(1, 4));
      c.canonicalize();
      p += LaurentPoly(m, c);
    }
    return p;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Signed weight sum over vertex-disjoint systems by trying every
/// permutation and every tuple of paths.
inline LaurentPoly nonintersecting_sum(int ell, Kind k, const std::vector<std::pair<int, int>>& starts,
                                       const std::vector<std::pair<int, int>>& ends) {
  const std::size_t n = starts.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  LaurentPoly total;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += sigma[i] > sigma[j];
    std::vector<std::vector<Walk>> cand(n);
    for (std::size_t i = 0; i < n; ++i)
      cand[i] = paths(ell, k, starts[i].first, starts[i].second, ends[sigma[i]].first, ends[sigma[i]].second);
    std::vector<std::size_t> pick(n, 0);
    bool any = std::all_of(cand.begin(), cand.end(), [](const auto& c) { return !c.empty(); });
    while (any) {
      std::set<std::pair<int, int>> seen;
      bool disjoint = true;
      LaurentPoly w = inv % 2 ? -1 : 1;
      for (std::size_t i = 0; i < n && disjoint; ++i) {
        for (const auto& v : vertices(ell, k, cand[i][pick[i]]))
          if (!seen.insert(v).second) disjoint = false;
        w *= weight_v(ell, k, cand[i][pick[i]]);
      }
      if (disjoint) total += w;
      std::size_t d = 0;
      while (d < n && ++pick[d] == cand[d].size()) pick[d++] = 0;
      if (d == n) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace oracle
