#pragma once

// l-Laurent bi-orthogonal polynomials: the (l+2)-term recurrence, the
// constructive moment solver, the linear functional and the determinant
// formulas for P_n, Q_n and tau_n.

#include "laurent.hpp"
#include "matrix.hpp"
#include "paths.hpp"
#include "ratfunc.hpp"

#include <functional>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schroederlab {

/// Laurent polynomial in the distinguished variable x.
class XPoly {
 public:
  XPoly() = default;
  XPoly(RatFunc c) { set(0, std::move(c)); }  // NOLINT(google-explicit-constructor)
  XPoly(int c) : XPoly(RatFunc(c)) {}        // NOLINT(google-explicit-constructor)

  static XPoly x_pow(int k, RatFunc c = 1) {
    XPoly p;
    p.set(k, std::move(c));
    return p;
  }

  const std::map<int, RatFunc>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? RatFunc() : it->second;
  }
  int degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.rbegin()->first;
  }
  int low_degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.begin()->first;
  }

  void set(int k, RatFunc c) {
    if (c.is_zero())
      c_.erase(k);
    else
      c_[k] = std::move(c);
  }
  void add(int k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }

  friend XPoly operator+(XPoly l, const XPoly& r) {
    for (const auto& [k, c] : r.c_) l.add(k, c);
    return l;
  }
  friend XPoly operator-(XPoly l, const XPoly& r) {
    for (const auto& [k, c] : r.c_) l.add(k, -c);
    return l;
  }
  friend XPoly operator*(const XPoly& l, const XPoly& r) {
    XPoly out;
    for (const auto& [a, ca] : l.c_)
      for (const auto& [b, cb] : r.c_) out.add(a + b, ca * cb);
    return out;
  }
  friend XPoly operator*(const RatFunc& s, const XPoly& p) {
    XPoly out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : p.c_) out.set(k, s * c);
    return out;
  }

  /// Multiplies by x^k.
  XPoly shift(int k) const {
    XPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(e + k, c);
    return out;
  }

  /// Substitutes x -> x^f.
  XPoly compose_power(int f) const {
    XPoly out;
    for (const auto& [e, c] : c_) out.add(e * f, c);
    return out;
  }

  bool operator==(const XPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    auto a = c_.begin();
    for (auto b = o.c_.begin(); b != o.c_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")";
      if (it->first != 0) s += "*x^" + std::to_string(it->first);
    }
    return s;
  }

 private:
  std::map<int, RatFunc> c_;
};

struct LbpSpec {
  int ell = 1;
  /// value of a_{i,j}
  std::function<RatFunc(int i, int j)> coeff;
  /// P_0, ..., P_{ell-1}
  std::vector<XPoly> initial;

  /// Symbolic coefficients a_{i,j} and monomial initial polynomials.
  static LbpSpec primitive(int ell) {
    LbpSpec s;
    s.ell = ell;
    s.coeff = [](int i, int j) { return RatFunc(Var::a(i, j)); };
    for (int k = 0; k < ell; ++k) s.initial.push_back(XPoly::x_pow(k));
    return s;
  }

  /// Constant coefficients a_{i,j} := a_i (stored as the variable a_{i,0}).
  static LbpSpec constant(int ell) {
    LbpSpec s = primitive(ell);
    s.coeff = [](int i, int) { return RatFunc(Var::a(i, 0)); };
    return s;
  }

  /// Same coefficients, initial polynomials S (1, x, ..., x^{ell-1})^T for a
  /// unit lower-triangular S.
  LbpSpec with_initial(const Matrix<LaurentPoly>& S) const {
    check_unit_lower(S, ell);
    LbpSpec s = *this;
    s.initial.clear();
    for (int i = 0; i < ell; ++i) {
      XPoly p;
      for (int j = 0; j <= i; ++j) p.set(j, RatFunc(S(i, j)));
      s.initial.push_back(p);
    }
    return s;
  }

  static void check_unit_lower(const Matrix<LaurentPoly>& S, int ell) {
    if (static_cast<int>(S.rows()) != ell || static_cast<int>(S.cols()) != ell)
      throw std::invalid_argument("S must be ell x ell");
    for (int i = 0; i < ell; ++i)
      for (int j = i; j < ell; ++j)
        if (!(S(i, j) == LaurentPoly(i == j ? 1 : 0)))
          throw std::invalid_argument("S must be unit lower triangular");
  }
};

struct MomentTable {
  int ell = 1;
  std::map<int, RatFunc> mu;

  const RatFunc& at(int n) const {
    auto it = mu.find(n);
    if (it == mu.end()) throw std::out_of_range("moment table has no entry for degree " + std::to_string(n));
    return it->second;
  }
  int n_min() const { return mu.empty() ? 0 : mu.begin()->first; }
  int n_max() const { return mu.empty() ? -1 : mu.rbegin()->first; }
};

/// Sum_k coeff_k mu_k over an explicit table.
inline RatFunc functional_eval(const MomentTable& table, const XPoly& f) {
  RatFunc acc;
  for (const auto& [k, c] : f.coeffs()) acc += c * table.at(k);
  return acc;
}

/// Lazily extended recurrence polynomials and moments for one spec.
class LbpEngine {
 public:
  explicit LbpEngine(LbpSpec spec) : spec_(std::move(spec)) {
    if (static_cast<int>(spec_.initial.size()) != spec_.ell)
      throw std::invalid_argument("LbpSpec needs exactly ell initial polynomials");
    for (int k = 0; k < spec_.ell; ++k) {
      const XPoly& p = spec_.initial[k];
      if (p.is_zero() || p.degree() != k || !(p.coeff(k) == RatFunc(1)) || p.low_degree() < 0)
        throw std::invalid_argument("initial polynomial " + std::to_string(k) + " must be monic of degree " +
                                    std::to_string(k));
    }
    mu_.emplace(0, RatFunc(1));
  }

  const LbpSpec& spec() const { return spec_; }
  int ell() const { return spec_.ell; }
  RatFunc a(int i, int j) const { return spec_.coeff(i, j); }

  const XPoly& P(int n) {
    if (n < 0) throw std::out_of_range("P_n needs n >= 0");
    while (static_cast<int>(P_.size()) <= n) P_.push_back(next_P());
    return P_[n];
  }

  const RatFunc& mu(int n) {
    if (n > 0) {
      while (pos_max_ < n) extend_positive();
    } else if (n < 0) {
      const int block = (-n + ell() - 1) / ell();
      while (neg_blocks_ < block) extend_negative();
    }
    return mu_.at(n);
  }

  RatFunc eval(const XPoly& f) {
    RatFunc acc;
    for (const auto& [k, c] : f.coeffs()) acc += c * mu(k);
    return acc;
  }

  /// L[P_n x^{-ell k}]
  RatFunc orthogonality(int n, int k) { return eval(P(n).shift(-ell() * k)); }

  MomentTable table(int n_min, int n_max) {
    if (n_min > 0 || n_max < 0) throw std::invalid_argument("moment window must contain 0");
    MomentTable t;
    t.ell = ell();
    for (int n = n_min; n <= n_max; ++n) t.mu.emplace(n, mu(n));
    return t;
  }

  /// Degrees of the moments computed so far.
  std::pair<int, int> window() const { return {mu_.begin()->first, mu_.rbegin()->first}; }

 private:
  XPoly next_P() {
    const int n = static_cast<int>(P_.size());
    const int ell = spec_.ell;
    if (n < ell) return spec_.initial[n];
    const int j = n - ell;
    XPoly p;
    for (int i = 1; i <= ell - 1; ++i) p = p - a(i, j) * P_[n - i];
    p = p + P_[n - ell].shift(ell) - a(ell, j) * P_[n - ell];
    if (n - ell - 1 >= 0) p = p - a(ell + 1, j) * P_[n - ell - 1].shift(ell);
    return p;
  }

  // L[P_n] = 0 has one new unknown, mu_n, with coefficient 1.
  void extend_positive() {
    const int n = pos_max_ + 1;
    const XPoly p = P(n);
    RatFunc acc;
    for (const auto& [k, c] : p.coeffs())
      if (k < n) acc -= c * mu(k);
    mu_[n] = acc;
    pos_max_ = n;
  }

  // Block b solves L[P_{b+i} x^{-b ell}] = 0, i = 1..ell, for
  // mu_{-b ell}, ..., mu_{-b ell + ell - 1}.
  void extend_negative() {
    const int b = neg_blocks_ + 1;
    const int ell = spec_.ell;
    Matrix<RatFunc> M(ell, ell);
    std::vector<RatFunc> rhs(ell);
    for (int i = 1; i <= ell; ++i) {
      const XPoly p = P(b + i);
      for (int j = 0; j < ell; ++j) M(i - 1, j) = p.coeff(j);
      RatFunc acc;
      for (const auto& [k, c] : p.coeffs())
        if (k >= ell) acc -= c * mu(k - b * ell);
      rhs[i - 1] = acc;
    }
    std::vector<RatFunc> x;
    try {
      x = solve_linear(M, rhs);
    } catch (const std::domain_error&) {
      throw std::domain_error("Favard block system " + std::to_string(b) +
                              " is singular: some a_{ell,i} vanishes under this spec");
    }
    for (int j = 0; j < ell; ++j) mu_[-b * ell + j] = x[j];
    neg_blocks_ = b;
  }

  LbpSpec spec_;
  std::deque<XPoly> P_;  // deque: P() hands out references that must survive growth
  std::map<int, RatFunc> mu_;
  int pos_max_ = 0;
  int neg_blocks_ = 0;
};

inline XPoly gen_P(LbpEngine& e, int n) { return e.P(n); }
inline XPoly gen_P(const LbpSpec& spec, int n) {
  LbpEngine e(spec);
  return e.P(n);
}

inline MomentTable favard_moments(const LbpSpec& spec, int n_min, int n_max) {
  LbpEngine e(spec);
  return e.table(n_min, n_max);
}

/// Moments of the primitive spec read off as path generating functions.
inline RatFunc moments_via_paths(int ell, int n) {
  if (n >= ell) return LaurentPoly(Var::a(ell, 0)) * big_gf_w(ell, n - ell);
  if (n >= 1) return 0;
  LaurentPoly g = dual_gf_w(ell, -n);
  return mod(n, ell) % 2 ? -g : g;
}

/// Sum over Favard paths of height n of w(eta) x^{width(eta)}.
inline XPoly favard_gf(int ell, int n) {
  XPoly p;
  for (const auto& eta : favard_paths(ell, n)) p.add(eta.width(), weight_w(eta));
  return p;
}

/// det([x^j] P_{k+i})_{i,j=0}^{ell-1}
inline RatFunc coeff_det(LbpEngine& e, int k) {
  const int ell = e.ell();
  Matrix<RatFunc> M(ell, ell);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) M(i, j) = e.P(k + i).coeff(j);
  return det(M);
}

inline RatFunc coeff_det_expected(const LbpEngine& e, int k) {
  RatFunc r = ((k * e.ell()) % 2) ? -1 : 1;
  for (int i = 0; i < k; ++i) r *= e.a(e.ell(), i);
  return r;
}

/// (-1)^n prod_{i=1}^n a_{ell+1,i} / a_{ell,i}, the value of L[P_n x^{-n ell}].
inline RatFunc orthogonality_diagonal(const LbpEngine& e, int n) {
  RatFunc r = n % 2 ? -1 : 1;
  for (int i = 1; i <= n; ++i) r = r * e.a(e.ell() + 1, i) / e.a(e.ell(), i);
  return r;
}

/// a_{ell,0} prod_{i=1}^n a_{ell+1,i}, the value of L[P_n x^{ell}].
inline RatFunc orthogonality_below(const LbpEngine& e, int n) {
  RatFunc r = e.a(e.ell(), 0);
  for (int i = 1; i <= n; ++i) r *= e.a(e.ell() + 1, i);
  return r;
}

/// Blockwise S^{-1} applied to every full block of the table.
inline MomentTable transform_primitive(const Matrix<LaurentPoly>& S, const MomentTable& table) {
  const int ell = table.ell;
  LbpSpec::check_unit_lower(S, ell);
  MomentTable out;
  out.ell = ell;
  const int m_lo = -floordiv(-table.n_min(), ell);  // ceil
  const int m_hi = floordiv(table.n_max() + 1, ell) - 1;
  for (int m = m_lo; m <= m_hi; ++m) {
    std::vector<RatFunc> y(ell);
    for (int i = 0; i < ell; ++i) {
      RatFunc v = table.at(m * ell + i);
      for (int j = 0; j < i; ++j) v -= RatFunc(S(i, j)) * y[j];
      y[i] = v;
      out.mu.emplace(m * ell + i, y[i]);
    }
  }
  return out;
}

/// tau_n = det(mu_{i - ell j})_{i,j=0}^{n-1}
inline RatFunc gen_tau(LbpEngine& e, int n) {
  Matrix<RatFunc> M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = e.mu(i - e.ell() * j);
  return det(M);
}

/// Q_n by expanding the bordered determinant along its last row.
inline std::pair<XPoly, RatFunc> gen_Q_tau(LbpEngine& e, int n) {
  const RatFunc tau = gen_tau(e, n);
  if (tau.is_zero()) throw std::domain_error("tau_n vanishes: degenerate spec");
  Matrix<RatFunc> B(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= n; ++j) B(i, j) = e.mu(i - e.ell() * j);
  XPoly q;
  for (int j = 0; j <= n; ++j) {
    RatFunc c = det(B.minor(n, j));
    if ((n + j) % 2) c = -c;
    q.set(j, c / tau);
  }
  return {q, tau};
}

/// P_n from its determinant expression (cross-check of the recurrence).
inline XPoly gen_P_det(LbpEngine& e, int n) {
  const RatFunc tau = gen_tau(e, n);
  Matrix<RatFunc> B(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < n; ++j) B(i, j) = e.mu(i - e.ell() * j);
  XPoly p;
  for (int i = 0; i <= n; ++i) {
    RatFunc c = det(B.minor(i, n));
    if ((i + n) % 2) c = -c;
    p.set(i, c / tau);
  }
  return p;
}

/// L[P_n(x) Q_m(x^{-ell})]
inline RatFunc bi_orthogonality(LbpEngine& e, int n, int m) {
  const XPoly q = gen_Q_tau(e, m).first;
  return e.eval(e.P(n) * q.compose_power(-e.ell()));
}

}  // namespace schroederlab
