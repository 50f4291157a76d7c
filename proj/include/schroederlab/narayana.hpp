#pragma once

// l-Narayana polynomials: step-type generating polynomials of B_n, with the
// divisibility, Hankel and big/small counting identities and the OEIS table.

#include "laurent.hpp"
#include "lbp.hpp"
#include "lgv.hpp"
#include "matrix.hpp"
#include "paths.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schroederlab {

/// b_{0,j} -> 1, b_{i,j} -> a_i, c_j -> a_{l+1}, with a_i stored as a_{i,0}.
inline LaurentPoly specialize_narayana(const LaurentPoly& p, int ell) {
  return p.substitute([ell](Var v) -> std::optional<LaurentPoly> {
    if (v.family == Family::B) return v.i == 0 ? LaurentPoly(1) : var_a(v.i, 0);
    if (v.family == Family::C) return var_a(ell + 1, 0);
    return std::nullopt;
  });
}

/// N_n: B_n translated to start on x + y = 0 mod l, weighted by v, specialized.
inline LaurentPoly narayana(int ell, int n) {
  if (n < 0) throw std::invalid_argument("narayana: n must be non-negative");
  const int r = mod(n, ell), q = (n - r) / ell;
  return specialize_narayana(big_bst_gf(ell, 0, q, r), ell);
}

/// Value at a_i := 1, which is |B_n|.
inline Rational narayana_at_one(const LaurentPoly& p) {
  return p.substitute([](Var) -> std::optional<LaurentPoly> { return LaurentPoly(1); }).constant_value();
}

/// sum_{i=0}^{l} a_i a_{l+1}^{l-i}, a_0 = 1
inline LaurentPoly narayana_divisor(int ell) {
  LaurentPoly d;
  for (int i = 0; i <= ell; ++i) {
    std::vector<std::pair<Var, int>> fs{{Var::a(ell + 1, 0), ell - i}};
    if (i > 0) fs.push_back({Var::a(i, 0), 1});
    d += LaurentPoly(Monomial::from_factors(std::move(fs)));
  }
  return d;
}

/// Quotient N_n / D; nullopt would falsify divisibility. Rejects n < l.
inline std::optional<LaurentPoly> divisibility(int ell, int n) {
  if (n < ell) throw std::invalid_argument("divisibility: only claimed for n >= ell");
  return exact_div(narayana(ell, n), narayana_divisor(ell));
}

/// (det(N_{l(i+1)+j})_{i,j<n}, a_{l+1}^{C(n,2)} D^{C(n+1,2)})
inline std::pair<LaurentPoly, LaurentPoly> hankel_factorization(int ell, int n) {
  if (n < 1) throw std::invalid_argument("hankel_factorization: n must be positive");
  std::map<int, LaurentPoly> cache;
  Matrix<LaurentPoly> M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = ell * (i + 1) + j;
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, narayana(ell, k)).first;
      M(i, j) = it->second;
    }
  const LaurentPoly rhs = LaurentPoly(Monomial(Var::a(ell + 1, 0), n * (n - 1) / 2)) *
                          narayana_divisor(ell).pow(n * (n + 1) / 2);
  return {det(std::move(M)), rhs};
}

/// (|B^r_{s,t+1}|, (l+1) sum_{i<=r} |S^{i+l}_{s,t}|)
inline std::pair<Rational, Rational> count_identity(int ell, int s, int t, int r) {
  if (s > t || r < 0 || r >= ell) throw std::invalid_argument("count_identity: need s <= t and 0 <= r < ell");
  const Rational lhs = path_count(StepSystem(ell, PathFamily::Big), bst_start(ell, s, r), bst_end(ell, t + 1));
  Rational rhs = 0;
  const StepSystem small(ell, PathFamily::Small);
  for (int i = 0; i <= r; ++i) rhs += path_count(small, bst_start(ell, s, i + ell), bst_end(ell, t));
  return {lhs, (ell + 1) * rhs};
}

/// Both sides of v(B^r_{s,t+1}) = c_{t+1}^{-l} (sum_i c_s^{r-i} shifted v(S^{i+l}_{s,t})) sum_i b_{i,t} c_{t+1}^{l-i}.
inline std::pair<LaurentPoly, LaurentPoly> bs_identity(int ell, int s, int t, int r) {
  if (s > t || r < 0 || r >= ell) throw std::invalid_argument("bs_identity: need s <= t and 0 <= r < ell");
  const LaurentPoly lhs = big_bst_gf(ell, s, t + 1, r);
  LaurentPoly sum;
  for (int i = 0; i <= r; ++i) sum += c_pow(s, r - i) * shift_c(small_bst_gf(ell, s, t, i + ell), 1);
  return {lhs, c_pow(t + 1, -ell) * sum * linear_factor(ell, t, t + 1)};
}

/// (mu_{n+l}, a_l N_n) for the constant-coefficient spec.
inline std::pair<RatFunc, RatFunc> moment_bridge(LbpEngine& constant_engine, int n) {
  const int ell = constant_engine.spec().ell;
  return {constant_engine.mu(n + ell), RatFunc(var_a(ell, 0) * narayana(ell, n))};
}

// ------------------------------------------------------------ OEIS table

struct OeisEntry {
  std::string id;
  int offset = 0;
  std::vector<Rational> values;
};

inline std::vector<OeisEntry> parse_oeis_table(std::istream& in) {
  std::vector<OeisEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    OeisEntry e;
    std::string vals;
    if (!(ls >> e.id >> e.offset >> vals)) throw std::runtime_error("oeis table: malformed line: " + line);
    std::istringstream vs(vals);
    std::string v;
    while (std::getline(vs, v, ',')) e.values.emplace_back(v);
    out.push_back(std::move(e));
  }
  return out;
}

#ifdef SCHROEDERLAB_DATA_DIR
inline std::string default_oeis_path() { return std::string(SCHROEDERLAB_DATA_DIR) + "/oeis_prefixes.txt"; }
#else
inline std::string default_oeis_path() { return "data/oeis_prefixes.txt"; }
#endif

inline std::vector<OeisEntry> load_oeis_table(const std::string& path = default_oeis_path()) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open OEIS table " + path);
  return parse_oeis_table(in);
}

inline const OeisEntry& find_oeis(const std::vector<OeisEntry>& table, const std::string& id) {
  for (const auto& e : table)
    if (e.id == id) return e;
  throw std::out_of_range("OEIS table has no entry " + id);
}

/// Enumerated counts for the sequences the table is aligned against:
/// A107708(n) = |B_n| and A007863(n) = |dual B_{2n}|, both at l = 2.
inline Rational oeis_enumerated(const std::string& id, int n) {
  if (id == "A107708") return path_count(StepSystem(2, PathFamily::Big), big_start(2, n), {n, 0});
  if (id == "A007863") return path_count(StepSystem(2, PathFamily::Dual), dual_start(2, 2 * n), {2 * n, 0});
  throw std::out_of_range("no enumeration alignment for " + id);
}

}  // namespace schroederlab
