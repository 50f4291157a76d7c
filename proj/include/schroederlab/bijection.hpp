#pragma once

// The sign-reversing involutions behind the orthogonality lemmas and the
// weight-preserving bijections behind the Schroder path identities, each with
// an exhaustive harness.

#include "lgv.hpp"
#include "paths.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace schroederlab {

struct Report {
  bool ok = true;
  std::size_t checked = 0;
  std::string counterexample;

  void fail(const std::string& why) {
    if (ok) counterexample = why;
    ok = false;
  }
};

inline std::string describe(const Path& p) {
  std::ostringstream os;
  os << family_name(p.system.family()) << "(" << p.initial.x << "," << p.initial.y << "): " << p.word_string();
  return os.str();
}

inline std::string describe(const Path& a, const Path& b) { return "(" + describe(a) + " | " + describe(b) + ")"; }

// ------------------------------------------------------------------ prefixes

/// Word of f(h) = chi_r chi_l^q (positive) or F(h) = chi_r alpha_l^q (dual).
inline std::vector<int> favard_prefix(int ell, int h, bool dual) {
  const StepSystem sys(ell, PathFamily::Favard);
  std::vector<int> w;
  if (h % ell) w.push_back(sys.chi(h % ell));
  for (int j = 0; j < h / ell; ++j) w.push_back(dual ? sys.alpha(ell) : sys.chi(ell));
  return w;
}

inline std::size_t prefix_steps(int ell, int h) { return (h % ell ? 1 : 0) + h / ell; }

/// s(h) = a_0^q or S(h) = A_0^q, from (0, h mod l).
inline Path schroeder_prefix(int ell, int h, bool dual) {
  return Path(StepSystem(ell, dual ? PathFamily::Dual : PathFamily::Big), {0, h % ell},
              std::vector<int>(h / ell, 0));
}

/// Largest h with eta = f(h) eta_1 (or F(h) eta_1 when dual).
inline int favard_prefix_length(const Path& eta, bool dual) {
  const auto& sys = eta.system;
  const int ell = sys.ell();
  const int rep = dual ? sys.alpha(ell) : sys.chi(ell);
  std::size_t idx = 0;
  int h = 0;
  if (!eta.word.empty() && eta.word[0] < sys.chi(ell)) {
    h = sys.favard_index(eta.word[0]);
    idx = 1;
  }
  while (idx < eta.word.size() && eta.word[idx] == rep) {
    h += ell;
    ++idx;
  }
  return h;
}

/// Largest h with omega = s(h) omega_1: start height plus l per leading a_0 (A_0).
inline int schroeder_prefix_length(const Path& omega) {
  int h = omega.initial.y;
  for (int l : omega.word) {
    if (l != 0) break;
    h += omega.ell();
  }
  return h;
}

namespace detail {

inline std::vector<int> cat(std::vector<int> a, const std::vector<int>& b, std::size_t from = 0) {
  if (from < b.size()) a.insert(a.end(), b.begin() + static_cast<std::ptrdiff_t>(from), b.end());
  return a;
}

inline Path with_tail(Path prefix, const std::vector<int>& mid, const std::vector<int>& rest, std::size_t from) {
  prefix.word = cat(cat(std::move(prefix.word), mid), rest, from);
  return prefix;
}

}  // namespace detail

// --------------------------------------------------------------------- phi

/// Involution on I(n,k) minus J(n,k) for the positive-degree part.
inline std::pair<Path, Path> phi(const Path& eta, const Path& omega) {
  const auto& fs = eta.system;
  const int ell = fs.ell();
  const int he = favard_prefix_length(eta, false);
  const int ho = schroeder_prefix_length(omega);
  const StepSystem fav(ell, PathFamily::Favard);
  if (he > ho) {
    const std::size_t pf = prefix_steps(ell, ho);
    if (pf >= eta.word.size() || eta.word[pf] != fs.chi(ell)) throw std::logic_error("phi: unexpected Favard prefix");
    const std::size_t qo = static_cast<std::size_t>(ho / ell);
    if (qo >= omega.word.size()) throw std::invalid_argument("phi: pair lies in J_1");
    const int i = omega.word[qo];
    const int h2 = ho + ell - i;
    Path e2 = detail::with_tail(Path(fav, favard_origin(ell), favard_prefix(ell, h2, false)), {fs.alpha(i)}, eta.word, pf + 1);
    Path o2 = detail::with_tail(schroeder_prefix(ell, h2, false), {}, omega.word, qo + 1);
    return {std::move(e2), std::move(o2)};
  }
  const std::size_t pf = prefix_steps(ell, he);
  if (pf >= eta.word.size()) throw std::invalid_argument("phi: pair lies in J_2");
  const int sigma = eta.word[pf];
  if (fs.is_chi(sigma)) throw std::logic_error("phi: unexpected chi step after the prefix");
  const int i = fs.favard_index(sigma);
  const std::size_t qe = static_cast<std::size_t>(he / ell);
  Path e2 = detail::with_tail(Path(fav, favard_origin(ell), favard_prefix(ell, he + i, false)), {}, eta.word, pf + 1);
  Path o2 = detail::with_tail(schroeder_prefix(ell, he + i - ell, false), {i}, omega.word, qe);
  return {std::move(e2), std::move(o2)};
}

/// Involution on the dual domain minus its fixed part, for the non-positive-degree part.
inline std::pair<Path, Path> phi_tilde(const Path& eta, const Path& omega) {
  const auto& fs = eta.system;
  const int ell = fs.ell();
  const int he = favard_prefix_length(eta, true);
  const int ho = schroeder_prefix_length(omega);
  const StepSystem fav(ell, PathFamily::Favard);
  auto F = [&](int h) { return Path(fav, favard_origin(ell), favard_prefix(ell, h, true)); };
  if (he > ho) {
    const std::size_t pf = prefix_steps(ell, ho);
    if (pf >= eta.word.size() || eta.word[pf] != fs.alpha(ell))
      throw std::logic_error("phi_tilde: unexpected Favard prefix");
    const std::size_t qo = static_cast<std::size_t>(ho / ell);
    if (qo >= omega.word.size()) throw std::invalid_argument("phi_tilde: pair lies in the first fixed set");
    const int i = omega.word[qo];
    if (i == ell)
      return {detail::with_tail(F(ho), {fs.chi(ell)}, eta.word, pf + 1),
              detail::with_tail(schroeder_prefix(ell, ho, true), {}, omega.word, qo + 1)};
    const int h2 = ho + ell - i;
    return {detail::with_tail(F(h2), {fs.alpha(i)}, eta.word, pf + 1),
            detail::with_tail(schroeder_prefix(ell, h2, true), {}, omega.word, qo + 1)};
  }
  const std::size_t pf = prefix_steps(ell, he);
  if (pf >= eta.word.size()) throw std::invalid_argument("phi_tilde: pair lies in the second fixed set");
  const int sigma = eta.word[pf];
  const std::size_t qe = static_cast<std::size_t>(he / ell);
  if (sigma == fs.chi(ell))
    return {detail::with_tail(F(he), {fs.alpha(ell)}, eta.word, pf + 1),
            detail::with_tail(schroeder_prefix(ell, he, true), {ell}, omega.word, qe)};
  if (fs.is_chi(sigma)) throw std::logic_error("phi_tilde: unexpected chi step after the prefix");
  const int i = fs.favard_index(sigma);
  const int h2 = he + i - ell;
  return {detail::with_tail(F(h2), {fs.alpha(ell)}, eta.word, pf + 1),
          detail::with_tail(schroeder_prefix(ell, h2, true), {i}, omega.word, qe)};
}

// ------------------------------------------------------------ domains

using PathPair = std::pair<Path, Path>;

/// I(n,k): eta in F_n of width >= l(k+1), omega in B_{width - l(k+1)}.
inline std::vector<PathPair> positive_domain(int ell, int n, int k) {
  std::vector<PathPair> out;
  std::map<int, std::vector<Path>> cache;
  for (auto& eta : favard_paths(ell, n)) {
    const int m = eta.width() - ell * (k + 1);
    if (m < 0) continue;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, big_set(ell, m)).first;
    for (const auto& om : it->second) out.emplace_back(eta, om);
  }
  return out;
}

/// Dual domain: eta in F_n of width <= lk, omega in dual B_{lk - width}.
inline std::vector<PathPair> negative_domain(int ell, int n, int k) {
  std::vector<PathPair> out;
  std::map<int, std::vector<Path>> cache;
  for (auto& eta : favard_paths(ell, n)) {
    const int m = ell * k - eta.width();
    if (m < 0) continue;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, dual_set(ell, m)).first;
    for (const auto& om : it->second) out.emplace_back(eta, om);
  }
  return out;
}

inline bool in_positive_domain(const Path& eta, const Path& omega, int n, int k) {
  const int ell = eta.ell();
  if (eta.system.family() != PathFamily::Favard || !is_valid(eta) || eta.height() != n) return false;
  const int m = eta.width() - ell * (k + 1);
  return m >= 0 && omega.system == StepSystem(ell, PathFamily::Big) && is_valid(omega) &&
         omega.initial == big_start(ell, m) && omega.end() == Point{m, 0};
}

inline bool in_negative_domain(const Path& eta, const Path& omega, int n, int k) {
  const int ell = eta.ell();
  if (eta.system.family() != PathFamily::Favard || !is_valid(eta) || eta.height() != n) return false;
  const int m = ell * k - eta.width();
  return m >= 0 && omega.system == StepSystem(ell, PathFamily::Dual) && is_valid(omega) &&
         omega.initial == dual_start(ell, m) && omega.end() == Point{m, 0};
}

inline bool in_positive_fixed(const Path& eta, const Path& omega, int n, int k) {
  const int ell = eta.ell();
  const bool j1 = omega.empty() && !eta.word.empty() && eta.word[0] == eta.system.chi(ell) &&
                  eta.width() == ell * (k + 1);
  const bool j2 = eta.word == favard_prefix(ell, n, false) && schroeder_prefix_length(omega) >= n;
  return j1 || j2;
}

inline bool in_negative_fixed(const Path& eta, const Path& omega, int n, int k) {
  const int ell = eta.ell();
  const bool j1 = omega.empty() && !eta.word.empty() && eta.word[0] == eta.system.alpha(ell) &&
                  eta.width() == ell * k;
  const bool j2 = eta.word == favard_prefix(ell, n, true) && schroeder_prefix_length(omega) >= n;
  return j1 || j2;
}

struct InvolutionReport : Report {
  std::size_t domain = 0;
  std::size_t fixed = 0;
  LaurentPoly sum_all;    // signed weight over the whole domain
  LaurentPoly sum_fixed;  // signed weight over the fixed part
};

namespace detail {

template <class Map, class InDomain, class InFixed, class Weight>
InvolutionReport check_involution(const std::vector<PathPair>& dom, Map map, InDomain in_dom, InFixed in_fixed,
                                  Weight weight) {
  InvolutionReport rep;
  rep.domain = dom.size();
  PolySum all, fixed;
  for (const auto& [eta, om] : dom) {
    const LaurentPoly w = weight(eta, om);
    all += w;
    if (in_fixed(eta, om)) {
      ++rep.fixed;
      fixed += w;
      continue;
    }
    ++rep.checked;
    std::optional<PathPair> img;
    try {
      img = map(eta, om);
    } catch (const std::exception& e) {
      rep.fail(describe(eta, om) + ": " + e.what());
      continue;
    }
    const auto& [e2, o2] = *img;
    if (!in_dom(e2, o2) || in_fixed(e2, o2)) {
      rep.fail(describe(eta, om) + " maps outside the domain to " + describe(e2, o2));
      continue;
    }
    if (e2 == eta && o2 == om) {
      rep.fail(describe(eta, om) + " is a fixed point");
      continue;
    }
    std::optional<PathPair> back;
    try {
      back = map(e2, o2);
    } catch (const std::exception& e) {
      rep.fail(describe(e2, o2) + ": " + e.what());
      continue;
    }
    if (!(back->first == eta && back->second == om)) rep.fail(describe(eta, om) + " is not restored by a second application");
    if (weight(e2, o2) != -w) rep.fail(describe(eta, om) + " is not sign-reversed");
  }
  rep.sum_all = all.value();
  rep.sum_fixed = fixed.value();
  return rep;
}

}  // namespace detail

/// Exhaustive check of phi on I(n,k): image in I minus J, involutive without
/// fixed points, sign-reversing.
inline InvolutionReport check_phi(int ell, int n, int k) {
  return detail::check_involution(
      positive_domain(ell, n, k), [](const Path& e, const Path& o) { return phi(e, o); },
      [&](const Path& e, const Path& o) { return in_positive_domain(e, o, n, k); },
      [&](const Path& e, const Path& o) { return in_positive_fixed(e, o, n, k); },
      [](const Path& e, const Path& o) { return weight_w(e) * weight_w(o); });
}

inline InvolutionReport check_phi_tilde(int ell, int n, int k) {
  return detail::check_involution(
      negative_domain(ell, n, k), [](const Path& e, const Path& o) { return phi_tilde(e, o); },
      [&](const Path& e, const Path& o) { return in_negative_domain(e, o, n, k); },
      [&](const Path& e, const Path& o) { return in_negative_fixed(e, o, n, k); },
      [](const Path& e, const Path& o) {
        const LaurentPoly w = weight_w(e) * weight_w(o);
        return mod(e.width(), e.ell()) % 2 ? -w : w;
      });
}

// ------------------------------------------------------------------ theta

struct ThetaImage {
  MarkedPath marked;
  Path tail;  // in B^0_{t,t+1}
};

/// omega = omega_1 a_{l-k} down^{k+m}  ->  ((omega_1 down^m, m), a_{l-k} down^k).
inline ThetaImage theta(const Path& omega) {
  const int ell = omega.ell();
  const int down = ell + 1;
  const auto& w = omega.word;
  std::size_t p = w.size();
  while (p > 0 && w[p - 1] == down) --p;
  if (p == 0) throw std::invalid_argument("theta: path has no up-step");
  const int label = w[p - 1];
  const int k = ell - label;
  const int m = static_cast<int>(w.size() - p) - k;
  if (m < 0) throw std::logic_error("theta: trailing run shorter than the last up-step");
  std::vector<int> first(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p - 1));
  first.insert(first.end(), m, down);
  Path head(omega.system, omega.initial, std::move(first));
  const Point e = head.end();
  std::vector<int> tail{label};
  tail.insert(tail.end(), k, down);
  return {{std::move(head), m}, Path(omega.system, e, std::move(tail))};
}

inline Path theta_inverse(const ThetaImage& img) {
  std::vector<int> w = img.marked.path.word;
  w.resize(w.size() - static_cast<std::size_t>(img.marked.mark));
  w.insert(w.end(), img.tail.word.begin(), img.tail.word.end());
  w.insert(w.end(), img.marked.mark, img.marked.path.ell() + 1);
  return Path(img.marked.path.system, img.marked.path.initial, std::move(w));
}

/// Index (number of steps) at which the path visits its mark vertex.
inline std::size_t mark_index(const MarkedPath& mp) {
  const Point e = mp.path.end();
  const Point target{e.x - mp.mark, mp.mark};
  const auto pts = mp.path.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == target) return i;
  throw std::invalid_argument("marked path does not visit its mark");
}

/// N^i_{s,t}: marked paths of M^i_{s,t} that do not begin with a down-step
/// strictly before the mark.
inline bool in_reduced_marked(const MarkedPath& mp) {
  const std::size_t j = mark_index(mp);
  return j == 0 || mp.path.word[0] != mp.path.ell() + 1;
}

inline std::vector<MarkedPath> reduced_marked_bst(int ell, int s, int t, int i) {
  std::vector<MarkedPath> out;
  for (auto& mp : marked_bst(ell, s, t, i))
    if (in_reduced_marked(mp)) out.push_back(std::move(mp));
  return out;
}

/// Rotates every block a_j down^k up to the mark into down^k a_j, appends
/// down^l and moves the start by (-l, l): N^i_{s,t} -> S^{i+l}_{s,t}.
inline Path rotate_to_small(const MarkedPath& mp) {
  const int ell = mp.path.ell();
  const int down = ell + 1;
  const auto& w = mp.path.word;
  const std::size_t j = mark_index(mp);
  if (j > 0 && w[0] == down) throw std::invalid_argument("rotate_to_small: path begins with a down-step");
  std::vector<int> out;
  std::size_t b = 0;
  while (b < j) {
    std::size_t e = b + 1;
    while (e < j && w[e] == down) ++e;
    out.insert(out.end(), static_cast<int>(e - b - 1), down);
    out.push_back(w[b]);
    b = e;
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
  out.insert(out.end(), ell, down);
  return Path(StepSystem(ell, PathFamily::Small), mp.path.initial + Point{-ell, ell}, std::move(out));
}

namespace detail {

inline std::pair<Point, std::vector<int>> key(const Path& p) { return {p.initial, p.word}; }

}  // namespace detail

/// theta restricted to B^r_{s,t+1} (s <= t): bijective onto M^r_{s,t} x B^0_{t,t+1}
/// and weight-preserving.
inline Report check_theta(int ell, int s, int t, int r) {
  Report rep;
  const auto dom = big_bst(ell, s, t + 1, r);
  const auto marked = marked_bst(ell, s, t, r);
  const auto tails = big_bst(ell, t, t + 1, 0);
  std::set<std::tuple<Point, std::vector<int>, int, std::vector<int>>> seen;
  for (const auto& om : dom) {
    ++rep.checked;
    std::optional<ThetaImage> found;
    try {
      found = theta(om);
    } catch (const std::exception& e) {
      rep.fail(describe(om) + ": " + e.what());
      continue;
    }
    const ThetaImage& img = *found;
    const auto& mp = img.marked;
    if (!is_valid(mp) || mp.path.initial != bst_start(ell, s, r) || mp.path.end() != bst_end(ell, t))
      rep.fail(describe(om) + " first component is not in M");
    if (!is_valid(img.tail) || img.tail.initial != bst_end(ell, t) || img.tail.end() != bst_end(ell, t + 1))
      rep.fail(describe(om) + " second component is not in B^0_{t,t+1}");
    if (!(theta_inverse(img) == om)) rep.fail(describe(om) + " is not restored by the inverse");
    if (weight_v_marked(mp) * weight_v(img.tail) != weight_v(om)) rep.fail(describe(om) + " weight changes");
    if (!seen.insert({mp.path.initial, mp.path.word, mp.mark, img.tail.word}).second)
      rep.fail(describe(om) + " collides with another image");
  }
  if (dom.size() != marked.size() * tails.size())
    rep.fail("|B| = " + std::to_string(dom.size()) + " but |M| |B0| = " + std::to_string(marked.size() * tails.size()));
  return rep;
}

/// Rotation N^i_{s,t} -> S^{i+l}_{s,t}: bijective, with
/// v(marked) = c_{t+1}^{-l} (v(image) with c_k -> c_{k+1}).
inline Report check_rotation(int ell, int s, int t, int i) {
  Report rep;
  const auto dom = reduced_marked_bst(ell, s, t, i);
  const auto target = small_bst(ell, s, t, i + ell);
  std::set<std::pair<Point, std::vector<int>>> seen;
  const LaurentPoly inv = c_pow(t + 1, -ell);
  for (const auto& mp : dom) {
    ++rep.checked;
    const Path img = rotate_to_small(mp);
    const std::string who = describe(mp.path) + " mark " + std::to_string(mp.mark);
    if (!is_valid(img) || img.initial != bst_start(ell, s, i + ell) || img.end() != bst_end(ell, t)) {
      rep.fail(who + " rotates outside S: " + describe(img));
      continue;
    }
    if (!seen.insert(detail::key(img)).second) rep.fail(who + " collides with another image");
    if (weight_v_marked(mp) != inv * shift_c(weight_v(img), 1)) rep.fail(who + " weight relation fails");
  }
  if (dom.size() != target.size())
    rep.fail("|N| = " + std::to_string(dom.size()) + " but |S| = " + std::to_string(target.size()));
  return rep;
}

/// v(M^r_{s,t}) = sum_i c_s^{r-i} v(N^i_{s,t}).
inline Report check_marked_decomposition(int ell, int s, int t, int r) {
  Report rep;
  rep.checked = 1;
  LaurentPoly rhs;
  for (int i = 0; i <= r; ++i) {
    PolySum n;
    for (const auto& mp : reduced_marked_bst(ell, s, t, i)) n += weight_v_marked(mp);
    rhs += c_pow(s, r - i) * n.value();
  }
  if (marked_bst_gf(ell, s, t, r) != rhs) rep.fail("decomposition fails for r = " + std::to_string(r));
  return rep;
}

// ------------------------------------------------------------------ shift

/// Pi_{n-1} -> Omega_n (formula convention): path i moves by (-1-l, l+1) and
/// gains down^{l+1}, with a_0 in front when i = l-1 mod l; path 0 of the image
/// is down^l from (-l, l).
inline PathSystem shift_to_omega(int ell, const PathSystem& ps) {
  const StepSystem small(ell, PathFamily::Small);
  const int down = ell + 1;
  PathSystem out;
  out.paths.emplace_back(small, Point{-ell, ell}, std::vector<int>(ell, down));
  out.sigma.push_back(0);
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const Path& p = ps.paths[i];
    std::vector<int> w;
    Point start = p.initial + Point{-1 - ell, ell + 1};
    if (mod(static_cast<int>(i), ell) == ell - 1) {
      w.push_back(0);
      start = start - Point{0, ell};
    }
    w.insert(w.end(), p.word.begin(), p.word.end());
    w.insert(w.end(), ell + 1, down);
    out.paths.emplace_back(small, start, std::move(w));
    out.sigma.push_back(ps.sigma[i] + 1);
  }
  out.sign = permutation_sign(out.sigma);
  return out;
}

inline Report check_shift(int ell, int n) {
  Report rep;
  const SystemFamily pi{SystemKind::Pi, n - 1, ell};
  const SystemFamily om{SystemKind::Omega, n, ell, OmegaConvention::Formula};
  const auto starts = om.starts();
  const auto ends = om.ends();
  const LaurentPoly factor = omega_shift_factor(ell, n);
  std::set<std::vector<std::pair<Point, std::vector<int>>>> seen;
  std::size_t domain = 0;
  for_each_system(pi, [&](const PathSystem& ps) {
    ++domain;
    ++rep.checked;
    const PathSystem img = shift_to_omega(ell, ps);
    std::vector<std::pair<Point, std::vector<int>>> k;
    bool ok = non_intersecting(img) && img.sign == ps.sign;
    for (std::size_t i = 0; i < img.paths.size(); ++i) {
      const auto& p = img.paths[i];
      ok = ok && is_valid(p) && p.initial == starts[i] && p.end() == ends[static_cast<std::size_t>(img.sigma[i])];
      k.push_back(detail::key(p));
    }
    if (!ok) rep.fail("image of a system with permutation sign " + std::to_string(ps.sign) + " is not in Omega_n");
    if (!seen.insert(k).second) rep.fail("two systems share an image");
    if (system_weight(img) != factor * system_weight(ps)) rep.fail("weight relation fails");
  });
  std::size_t target = 0;
  for_each_system(om, [&](const PathSystem&) { ++target; });
  if (target != domain)
    rep.fail("|Pi_{n-1}| = " + std::to_string(domain) + " but |Omega_n| = " + std::to_string(target));
  return rep;
}

}  // namespace schroederlab
