#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients.
//
// Variables come from three integer-indexed families a_{i,j}, b_{i,j} and c_j.
// Terms are kept in a canonical order (graded by total degree, ties broken
// lexicographically along the variable order), so structural equality is
// mathematical equality.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schroederlab {

using Rational = mpq_class;

/// Safety cap on the number of terms a single polynomial may hold. Read once
/// from SCHROEDERLAB_MAX_TERMS (default 5,000,000).
inline std::size_t max_terms() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("SCHROEDERLAB_MAX_TERMS")) {
      try {
        const long long v = std::stoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
      } catch (...) {
      }
    }
    return static_cast<std::size_t>(5'000'000);
  }();
  return cap;
}

enum class Family : std::uint8_t { A = 0, B = 1, C = 2 };

struct Var {
  Family family = Family::A;
  int i = 0;
  int j = 0;

  static Var a(int i, int j) { return {Family::A, i, j}; }
  static Var b(int i, int j) { return {Family::B, i, j}; }
  static Var c(int j) { return {Family::C, 0, j}; }

  auto operator<=>(const Var&) const = default;

  // Order-preserving packing: family, then i, then j.
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(family) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(i + 0x8000)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(j) ^ 0x80000000u);
  }
  static Var from_key(std::uint64_t k) {
    Var v;
    v.family = static_cast<Family>(k >> 48);
    v.i = static_cast<int>((k >> 32) & 0xffff) - 0x8000;
    v.j = static_cast<int>(static_cast<std::uint32_t>(k & 0xffffffffu) ^ 0x80000000u);
    return v;
  }

  std::string to_string(bool drop_j = false) const {
    std::ostringstream os;
    switch (family) {
      case Family::A:
        os << "a_";
        if (drop_j) os << i; else os << '{' << i << ',' << j << '}';
        break;
      case Family::B:
        os << "b_";
        if (drop_j) os << i; else os << '{' << i << ',' << j << '}';
        break;
      case Family::C:
        os << "c_";
        if (j >= 0 && j < 10) os << j; else os << '{' << j << '}';
        break;
    }
    return os.str();
  }
};

class Monomial {
 public:
  struct Factor {
    std::uint64_t key;
    int exp;
    bool operator==(const Factor&) const = default;
  };

  Monomial() = default;
  explicit Monomial(Var v, int e = 1) {
    if (e != 0) factors_.push_back({v.key(), e});
    degree_ = e;
  }

  static Monomial from_factors(std::vector<std::pair<Var, int>> fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    Monomial m;
    for (const auto& [v, e] : fs) {
      if (!m.factors_.empty() && m.factors_.back().key == v.key()) {
        m.factors_.back().exp += e;
        if (m.factors_.back().exp == 0) m.factors_.pop_back();
      } else if (e != 0) {
        m.factors_.push_back({v.key(), e});
      }
      m.degree_ += e;
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_unit() const { return factors_.empty(); }

  int exponent(Var v) const {
    const auto k = v.key();
    auto it = std::lower_bound(factors_.begin(), factors_.end(), k,
                               [](const Factor& f, std::uint64_t key) { return f.key < key; });
    return (it != factors_.end() && it->key == k) ? it->exp : 0;
  }

  std::vector<std::pair<Var, int>> vars() const {
    std::vector<std::pair<Var, int>> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.emplace_back(Var::from_key(f.key), f.exp);
    return out;
  }

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    if (l.factors_.empty()) return r;
    if (r.factors_.empty()) return l;
    Monomial m;
    m.factors_.reserve(l.factors_.size() + r.factors_.size());
    auto a = l.factors_.begin(), ae = l.factors_.end();
    auto b = r.factors_.begin(), be = r.factors_.end();
    while (a != ae && b != be) {
      if (a->key < b->key) {
        m.factors_.push_back(*a++);
      } else if (b->key < a->key) {
        m.factors_.push_back(*b++);
      } else {
        const int e = a->exp + b->exp;
        if (e != 0) m.factors_.push_back({a->key, e});
        ++a;
        ++b;
      }
    }
    m.factors_.insert(m.factors_.end(), a, ae);
    m.factors_.insert(m.factors_.end(), b, be);
    m.degree_ = l.degree_ + r.degree_;
    return m;
  }

  Monomial inverse() const { return pow(-1); }

  Monomial pow(int e) const {
    Monomial m;
    if (e == 0) return m;
    m.factors_ = factors_;
    for (auto& f : m.factors_) f.exp *= e;
    m.degree_ = degree_ * e;
    return m;
  }

  /// Componentwise minimum of exponents (missing variables count as 0).
  static Monomial gcd_exponents(const Monomial& l, const Monomial& r) {
    Monomial m;
    auto a = l.factors_.begin(), ae = l.factors_.end();
    auto b = r.factors_.begin(), be = r.factors_.end();
    auto push = [&m](std::uint64_t k, int e) {
      if (e != 0) {
        m.factors_.push_back({k, e});
        m.degree_ += e;
      }
    };
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->key < b->key)) {
        push(a->key, std::min(a->exp, 0));
        ++a;
      } else if (a == ae || b->key < a->key) {
        push(b->key, std::min(b->exp, 0));
        ++b;
      } else {
        push(a->key, std::min(a->exp, b->exp));
        ++a;
        ++b;
      }
    }
    return m;
  }

  /// True when every exponent is nonnegative.
  bool is_polynomial() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp > 0; });
  }

  /// Polynomial divisibility: every exponent of *this is <= the one in other.
  bool divides(const Monomial& other) const {
    for (const auto& f : factors_)
      if (other.exponent(Var::from_key(f.key)) < f.exp) return false;
    return true;
  }

  Monomial rename(const std::function<Var(Var)>& f) const {
    std::vector<std::pair<Var, int>> fs;
    fs.reserve(factors_.size());
    for (const auto& fac : factors_) fs.emplace_back(f(Var::from_key(fac.key)), fac.exp);
    return from_factors(std::move(fs));
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& f : factors_) {
      h ^= f.key + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= static_cast<std::size_t>(f.exp) * 0x100000001b3ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && factors_ == o.factors_; }

  /// Canonical term order: total degree first, then graded-lex on the variable
  /// order (the first variable whose exponents differ decides; larger wins).
  friend std::strong_ordering term_order(const Monomial& l, const Monomial& r) {
    if (l.degree_ != r.degree_) return l.degree_ <=> r.degree_;
    auto a = l.factors_.begin(), ae = l.factors_.end();
    auto b = r.factors_.begin(), be = r.factors_.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->key < b->key)) return a->exp <=> 0;
      if (a == ae || b->key < a->key) return 0 <=> b->exp;
      if (a->exp != b->exp) return a->exp <=> b->exp;
      ++a;
      ++b;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string(bool drop_j = false) const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty()) s += '*';
      s += Var::from_key(f.key).to_string(drop_j);
      if (f.exp != 1) s += '^' + std::to_string(f.exp);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;  // sorted by key, no zero exponents
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c) {                   // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial(), c});
  }
  LaurentPoly(Var v) { terms_.push_back({Monomial(v), Rational(1)}); }  // NOLINT
  LaurentPoly(Monomial m, Rational c = 1) {                              // NOLINT
    if (c != 0) terms_.push_back({std::move(m), std::move(c)});
  }

  /// Builds a canonical polynomial from terms in any order, merging duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return term_order(l.mono, r.mono) > 0; });
    LaurentPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    p.check_size();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff == 1; }
  bool is_term() const { return terms_.size() == 1; }
  Rational constant_value() const {
    for (const auto& t : terms_)
      if (t.mono.is_unit()) return t.coeff;
    return 0;
  }
  const Term& leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }

  /// Coefficient of the given monomial (0 when absent).
  Rational coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  bool operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
      if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coeff != o.terms_[k].coeff) return false;
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& l, const LaurentPoly& r) { return merge(l, r, false); }
  friend LaurentPoly operator-(const LaurentPoly& l, const LaurentPoly& r) { return merge(l, r, true); }
  LaurentPoly& operator+=(const LaurentPoly& r) { return *this = *this + r; }
  LaurentPoly& operator-=(const LaurentPoly& r) { return *this = *this - r; }

  friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    if (l.terms_.size() == 1) return r.scaled(l.terms_[0]);
    if (r.terms_.size() == 1) return l.scaled(r.terms_[0]);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(l.size() * r.size(), 1u << 16));
    for (const auto& a : l.terms_)
      for (const auto& b : r.terms_) {
        auto [it, fresh] = acc.try_emplace(a.mono * b.mono);
        if (fresh)
          it->second = a.coeff * b.coeff;
        else
          it->second += a.coeff * b.coeff;
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) ts.push_back({m, std::move(c)});
    return from_terms(std::move(ts));
  }
  LaurentPoly& operator*=(const LaurentPoly& r) { return *this = *this * r; }

  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scaled({Monomial(), c}); }
  friend LaurentPoly operator*(int c, const LaurentPoly& p) { return Rational(c) * p; }

  /// p^e; negative e is only defined for single-term p (units of the ring).
  LaurentPoly pow(int e) const {
    if (e < 0) {
      if (terms_.size() != 1)
        throw std::domain_error("negative power of a non-monomial Laurent polynomial");
      const auto& t = terms_[0];
      Rational c = 1;
      for (int k = 0; k < -e; ++k) c /= t.coeff;
      return LaurentPoly(t.mono.pow(e), c);
    }
    LaurentPoly result = 1, base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Applies a variable renaming to every monomial.
  LaurentPoly rename(const std::function<Var(Var)>& f) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.mono.rename(f), t.coeff});
    return from_terms(std::move(ts));
  }

  /// Substitutes variables; vars mapped to nullopt are kept. Substituted
  /// images of negatively-powered variables must be single terms.
  LaurentPoly substitute(const std::function<std::optional<LaurentPoly>(Var)>& f) const {
    std::vector<Term> acc;
    std::map<std::pair<std::uint64_t, int>, LaurentPoly> power_cache;
    for (const auto& t : terms_) {
      LaurentPoly prod(t.coeff);
      std::vector<std::pair<Var, int>> kept;
      for (const auto& [v, e] : t.mono.vars()) {
        if (auto img = f(v)) {
          auto key = std::make_pair(v.key(), e);
          auto it = power_cache.find(key);
          if (it == power_cache.end()) it = power_cache.emplace(key, img->pow(e)).first;
          prod *= it->second;
        } else {
          kept.emplace_back(v, e);
        }
      }
      if (!kept.empty()) prod *= LaurentPoly(Monomial::from_factors(std::move(kept)));
      for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
    }
    return from_terms(std::move(acc));
  }

  /// Largest monomial m with m | every term (exponentwise minimum).
  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_[0].mono;
    for (std::size_t k = 1; k < terms_.size(); ++k) g = Monomial::gcd_exponents(g, terms_[k].mono);
    return g;
  }

  std::string to_string(bool drop_j = false) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      if (t.mono.is_unit()) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += t.mono.to_string(drop_j);
      }
    }
    return s;
  }

 private:
  LaurentPoly scaled(const Term& by) const {
    LaurentPoly p;
    if (by.coeff == 0) return p;
    p.terms_.reserve(terms_.size());
    // Multiplying every monomial by a fixed monomial preserves the order.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * by.mono, t.coeff * by.coeff});
    return p;
  }

  static LaurentPoly merge(const LaurentPoly& l, const LaurentPoly& r, bool subtract) {
    LaurentPoly p;
    p.terms_.reserve(l.size() + r.size());
    auto a = l.terms_.begin(), ae = l.terms_.end();
    auto b = r.terms_.begin(), be = r.terms_.end();
    while (a != ae && b != be) {
      const auto ord = term_order(a->mono, b->mono);
      if (ord > 0) {
        p.terms_.push_back(*a++);
      } else if (ord < 0) {
        p.terms_.push_back(subtract ? Term{b->mono, -b->coeff} : *b);
        ++b;
      } else {
        Rational c = subtract ? Rational(a->coeff - b->coeff) : Rational(a->coeff + b->coeff);
        if (c != 0) p.terms_.push_back({a->mono, std::move(c)});
        ++a;
        ++b;
      }
    }
    for (; a != ae; ++a) p.terms_.push_back(*a);
    for (; b != be; ++b) p.terms_.push_back(subtract ? Term{b->mono, -b->coeff} : *b);
    p.check_size();
    return p;
  }

  void check_size() const {
    if (terms_.size() > max_terms())
      throw std::length_error("polynomial exceeds SCHROEDERLAB_MAX_TERMS (" + std::to_string(max_terms()) +
                              " terms)");
  }

  std::vector<Term> terms_;  // strictly decreasing in term_order
};

/// Sums many polynomials in one pass; repeated += on a growing sum is quadratic.
class PolySum {
 public:
  void add(const LaurentPoly& p) {
    for (const auto& t : p.terms()) acc_[t.mono] += t.coeff;
  }
  PolySum& operator+=(const LaurentPoly& p) {
    add(p);
    return *this;
  }
  LaurentPoly value() const {
    std::vector<Term> ts;
    ts.reserve(acc_.size());
    for (const auto& [m, c] : acc_) ts.push_back({m, c});
    return LaurentPoly::from_terms(std::move(ts));
  }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

inline LaurentPoly var_a(int i, int j) { return LaurentPoly(Var::a(i, j)); }
inline LaurentPoly var_b(int i, int j) { return LaurentPoly(Var::b(i, j)); }
inline LaurentPoly var_c(int j) { return LaurentPoly(Var::c(j)); }

/// Renames every c_j to c_{j+delta}; a and b variables are untouched.
inline LaurentPoly shift_c(const LaurentPoly& p, int delta) {
  if (delta == 0) return p;
  return p.rename([delta](Var v) {
    if (v.family == Family::C) v.j += delta;
    return v;
  });
}

namespace detail {

struct DescendingOrder {
  bool operator()(const Monomial& l, const Monomial& r) const { return term_order(l, r) > 0; }
};

// Division of polynomials (nonnegative exponents) by a single divisor.
inline std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& f, const LaurentPoly& g) {
  std::map<Monomial, Rational, DescendingOrder> rem;
  for (const auto& t : f.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lg = g.leading();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->first.degree() < lg.mono.degree() || !lg.mono.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first * lg.mono.inverse();
    const Rational qc = it->second / lg.coeff;
    for (const auto& t : g.terms()) {
      const Monomial m = t.mono * qm;
      auto [pos, fresh] = rem.try_emplace(m);
      if (fresh)
        pos->second = -(qc * t.coeff);
      else
        pos->second -= qc * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, qc});
    if (quotient.size() > max_terms())
      throw std::length_error("quotient exceeds SCHROEDERLAB_MAX_TERMS");
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace detail

/// Exact division in the Laurent ring: returns q with f = q*g, or nullopt
/// when g does not divide f.
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (f.is_zero()) return LaurentPoly();
  if (g.is_term()) return f * g.pow(-1);
  // Strip monomial content so both sides become polynomials whose divisor has
  // no variable factor; Laurent divisibility then equals polynomial divisibility.
  const Monomial mf = f.monomial_content();
  const Monomial mg = g.monomial_content();
  const LaurentPoly f0 = f * LaurentPoly(mf.inverse());
  const LaurentPoly g0 = g * LaurentPoly(mg.inverse());
  auto q0 = detail::divide_polynomial(f0, g0);
  if (!q0) return std::nullopt;
  return *q0 * LaurentPoly(mf * mg.inverse());
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace schroederlab
