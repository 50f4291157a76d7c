#pragma once

// Step systems and lattice paths: big, dual and small l-Schroder paths and
// Favard paths, their weights, exhaustive enumeration and dynamic-programming
// generating functions.

#include "laurent.hpp"
#include "ratfunc.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schroederlab {

/// Remainder in {0, ..., q-1}, also for negative p.
inline int mod(int p, int q) {
  const int r = p % q;
  return r < 0 ? r + q : r;
}
inline int floordiv(int p, int q) { return (p - mod(p, q)) / q; }

enum class PathFamily { Big, Dual, Small, Favard };

inline std::string family_name(PathFamily f) {
  switch (f) {
    case PathFamily::Big: return "big";
    case PathFamily::Dual: return "dual";
    case PathFamily::Small: return "small";
    case PathFamily::Favard: return "favard";
  }
  return "?";
}

inline std::optional<PathFamily> parse_family(const std::string& s) {
  if (s == "big") return PathFamily::Big;
  if (s == "dual") return PathFamily::Dual;
  if (s == "small") return PathFamily::Small;
  if (s == "favard") return PathFamily::Favard;
  return std::nullopt;
}

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                                      static_cast<std::uint32_t>(p.y));
  }
};

struct Step {
  int label;
  int dx;
  int dy;
};

/// The steps of one family at a fixed ell. Labels are small integers in a
/// fixed order; for Big/Small/Dual label i is the step a_i / A_i (0..ell+1).
/// For Favard, chi_i has label i-1 and alpha_i has label ell+i-1.
class StepSystem {
 public:
  StepSystem(int ell, PathFamily family) : ell_(ell), family_(family) {
    if (ell < 1) throw std::invalid_argument("StepSystem: ell must be positive");
    switch (family) {
      case PathFamily::Big:
      case PathFamily::Small:
        for (int i = 0; i <= ell; ++i) steps_.push_back({i, i, ell - i});
        steps_.push_back({ell + 1, 1, -1});
        break;
      case PathFamily::Dual:
        for (int i = 0; i < ell; ++i) steps_.push_back({i, ell - i, ell - i});
        steps_.push_back({ell, ell, 0});
        steps_.push_back({ell + 1, ell - 1, -1});
        break;
      case PathFamily::Favard:
        for (int i = 1; i <= ell; ++i) steps_.push_back({i - 1, i, i});
        for (int i = 1; i <= ell; ++i) steps_.push_back({ell + i - 1, 0, i});
        steps_.push_back({2 * ell, ell, ell + 1});
        break;
    }
  }

  int ell() const { return ell_; }
  PathFamily family() const { return family_; }
  const std::vector<Step>& steps() const { return steps_; }
  const Step& step(int label) const {
    if (label < 0 || label >= static_cast<int>(steps_.size()))
      throw std::out_of_range("StepSystem: unknown step label " + std::to_string(label));
    return steps_[label];
  }
  int down() const { return ell_ + 1; }
  int chi(int i) const { return i - 1; }
  int alpha(int i) const { return ell_ + i - 1; }
  bool is_chi(int label) const { return family_ == PathFamily::Favard && label < ell_; }
  /// Index i of chi_i or alpha_i for a Favard label.
  int favard_index(int label) const { return label < ell_ ? label + 1 : label - ell_ + 1; }

  std::string label_name(int label) const {
    step(label);
    switch (family_) {
      case PathFamily::Big:
      case PathFamily::Small: return "a" + std::to_string(label);
      case PathFamily::Dual: return "A" + std::to_string(label);
      case PathFamily::Favard:
        return (label < ell_ ? "chi" : "alpha") + std::to_string(favard_index(label));
    }
    return "?";
  }

  std::optional<int> parse_label(const std::string& s) const {
    for (const auto& st : steps_)
      if (label_name(st.label) == s) return st.label;
    return std::nullopt;
  }

  bool operator==(const StepSystem& o) const { return ell_ == o.ell_ && family_ == o.family_; }

 private:
  int ell_;
  PathFamily family_;
  std::vector<Step> steps_;
};

/// Origin of every Favard path.
inline Point favard_origin(int ell) { return {0, -ell + 1}; }

struct Path {
  StepSystem system;
  Point initial;
  std::vector<int> word;

  Path(StepSystem sys, Point init, std::vector<int> w = {})
      : system(std::move(sys)), initial(init), word(std::move(w)) {}

  int ell() const { return system.ell(); }
  bool empty() const { return word.empty(); }

  /// initial point followed by the ending point of every step
  std::vector<Point> points() const {
    std::vector<Point> pts;
    pts.reserve(word.size() + 1);
    Point p = initial;
    pts.push_back(p);
    for (int l : word) {
      const auto& s = system.step(l);
      p = p + Point{s.dx, s.dy};
      pts.push_back(p);
    }
    return pts;
  }

  Point end() const {
    Point p = initial;
    for (int l : word) {
      const auto& s = system.step(l);
      p = p + Point{s.dx, s.dy};
    }
    return p;
  }
  int width() const { return end().x - initial.x; }
  int height() const { return end().y - initial.y; }

  Path then(int label) const {
    Path p = *this;
    p.word.push_back(label);
    return p;
  }

  bool operator==(const Path& o) const {
    return system == o.system && initial == o.initial && word == o.word;
  }

  std::string word_string() const {
    if (word.empty()) return "eps";
    std::string s;
    for (int l : word) {
      if (!s.empty()) s += ' ';
      s += system.label_name(l);
    }
    return s;
  }
};

/// Inverse of word_string; also accepts powers such as "a4^2". "eps" is empty.
inline std::vector<int> parse_word(const StepSystem& sys, const std::string& s) {
  std::vector<int> w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "eps") continue;
    int times = 1;
    if (const auto hat = tok.find('^'); hat != std::string::npos) {
      times = std::stoi(tok.substr(hat + 1));
      tok = tok.substr(0, hat);
    }
    const auto label = sys.parse_label(tok);
    if (!label || times < 0) throw std::invalid_argument("unknown step '" + tok + "'");
    w.insert(w.end(), times, *label);
  }
  return w;
}

/// Whether the step with this label may start at p (floor and placement rules).
inline bool step_allowed(const StepSystem& sys, int label, Point p, std::size_t position) {
  const auto& s = sys.step(label);
  const int ell = sys.ell();
  switch (sys.family()) {
    case PathFamily::Big:
    case PathFamily::Dual: return p.y >= 0 && p.y + s.dy >= 0;
    case PathFamily::Small:
      if (p.y < 0 || p.y + s.dy < 0) return false;
      return !(label >= 1 && label <= ell && p.y <= label - 1);
    case PathFamily::Favard: {
      const int i = sys.favard_index(label);
      if (sys.is_chi(label)) return i == ell || position == 0;
      return p.y + i - 1 >= 0;
    }
  }
  return false;
}

inline bool is_valid(const Path& path) {
  const auto& sys = path.system;
  if (sys.family() == PathFamily::Favard && path.initial != favard_origin(sys.ell())) return false;
  if (sys.family() != PathFamily::Favard && path.initial.y < 0) return false;
  Point p = path.initial;
  for (std::size_t k = 0; k < path.word.size(); ++k) {
    const int l = path.word[k];
    if (l < 0 || l >= static_cast<int>(sys.steps().size())) return false;
    if (!step_allowed(sys, l, p, k)) return false;
    const auto& s = sys.step(l);
    p = p + Point{s.dx, s.dy};
  }
  return true;
}

// ---------------------------------------------------------------- weights

inline LaurentPoly step_weight_w(const StepSystem& sys, int label, Point p) {
  const int ell = sys.ell();
  const int t = p.y;
  switch (sys.family()) {
    case PathFamily::Favard: {
      if (sys.is_chi(label)) return 1;
      const int i = sys.favard_index(label);
      return LaurentPoly(Monomial(Var::a(i, t + i - 1)), -1);
    }
    case PathFamily::Big:
    case PathFamily::Small:
      if (label == 0) return 1;
      return LaurentPoly(Monomial(Var::a(label, t)));
    case PathFamily::Dual: {
      const Monomial inv_l(Var::a(ell, t), -1);
      if (label == 0) return LaurentPoly(inv_l, (ell + 1) % 2 ? -1 : 1);
      if (label == ell) return LaurentPoly(inv_l);
      const int sign = (ell + 1 + label) % 2 ? -1 : 1;
      return LaurentPoly(Monomial(Var::a(label, t)) * inv_l, sign);
    }
  }
  return 1;
}

inline LaurentPoly step_weight_v(const StepSystem& sys, int label, Point p) {
  const int ell = sys.ell();
  if (mod(p.x + p.y, ell) != 0)
    throw std::logic_error("weight v: step starts at a point with x+y not divisible by ell");
  const int j = (p.x + p.y) / ell;
  if (label == ell + 1) return LaurentPoly(Var::c(j));
  return LaurentPoly(Var::b(label, j));
}

using StepWeight = std::function<LaurentPoly(int label, Point start)>;

inline LaurentPoly path_weight(const Path& path, const StepWeight& w) {
  LaurentPoly acc = 1;
  Point p = path.initial;
  for (int l : path.word) {
    acc *= w(l, p);
    const auto& s = path.system.step(l);
    p = p + Point{s.dx, s.dy};
  }
  return acc;
}

inline LaurentPoly weight_w(const Path& path) {
  return path_weight(path, [&](int l, Point p) { return step_weight_w(path.system, l, p); });
}

inline LaurentPoly weight_v(const Path& path) {
  if (path.system.family() != PathFamily::Big && path.system.family() != PathFamily::Small)
    throw std::invalid_argument("weight v is defined on big and small paths only");
  return path_weight(path, [&](int l, Point p) { return step_weight_v(path.system, l, p); });
}

// ----------------------------------------------------------- marked paths

struct MarkedPath {
  Path path;
  int mark = 0;

  /// t with endpoint (t*ell, 0)
  int t() const { return floordiv(path.end().x, path.ell()); }

  bool operator==(const MarkedPath& o) const { return path == o.path && mark == o.mark; }
};

inline bool is_valid(const MarkedPath& mp) {
  const int ell = mp.path.ell();
  const Point e = mp.path.end();
  if (!is_valid(mp.path) || e.y != 0 || mod(e.x, ell) != 0 || mp.mark < 0) return false;
  if (mp.path.empty()) return mp.mark == 0;
  const Point target{e.x - mp.mark, mp.mark};
  for (const auto& q : mp.path.points())
    if (q == target) return true;
  return false;
}

inline LaurentPoly weight_v_marked(const MarkedPath& mp) {
  const int t = mp.t();
  return weight_v(mp.path) * LaurentPoly(Monomial::from_factors({{Var::c(t + 1), mp.mark}, {Var::c(t), -mp.mark}}));
}

// ------------------------------------------------------------ enumeration

namespace detail {

struct Bounds {
  const StepSystem& sys;
  Point end;
  // Necessary conditions keeping the search finite; exact reachability is memoized.
  bool inside(Point p) const {
    if (p.x > end.x) return false;
    switch (sys.family()) {
      case PathFamily::Big:
      case PathFamily::Small: return p.x + p.y <= end.x + end.y;
      case PathFamily::Dual: return p.x - p.y <= end.x - end.y;
      case PathFamily::Favard: return true;
    }
    return false;
  }
};

class Reach {
 public:
  Reach(const StepSystem& sys, Point end) : sys_(sys), bounds_{sys, end}, end_(end) {}

  bool operator()(Point p) {
    if (p == end_) return true;
    if (!bounds_.inside(p)) return false;
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& s : sys_.steps()) {
      if (!step_allowed(sys_, s.label, p, 1)) continue;
      if ((*this)(p + Point{s.dx, s.dy})) {
        ok = true;
        break;
      }
    }
    memo_.emplace(p, ok);
    return ok;
  }

 private:
  const StepSystem& sys_;
  Bounds bounds_;
  Point end_;
  std::unordered_map<Point, bool, PointHash> memo_;
};

inline void check_endpoints(const StepSystem& sys, Point end) {
  if (sys.family() == PathFamily::Favard) throw std::invalid_argument("use favard_paths for Favard enumeration");
  if (end.y < 0) throw std::domain_error("path endpoint lies below the x-axis");
}

}  // namespace detail

/// Reachability precondition from the mod-ell remark.
inline bool congruent_endpoints(const StepSystem& sys, Point start, Point end) {
  const int ell = sys.ell();
  if (sys.family() == PathFamily::Dual) return mod((start.x - start.y) - (end.x - end.y), ell) == 0;
  return mod((start.x + start.y) - (end.x + end.y), ell) == 0;
}

/// Calls f(word) for every valid path from start to end, in lexicographic
/// label order.
inline void for_each_path(const StepSystem& sys, Point start, Point end,
                          const std::function<void(const std::vector<int>&)>& f) {
  detail::check_endpoints(sys, end);
  if (start.y < 0 || !congruent_endpoints(sys, start, end)) return;
  detail::Reach reach(sys, end);
  if (!reach(start)) return;
  std::vector<int> word;
  std::function<void(Point)> dfs = [&](Point p) {
    if (p == end) {
      f(word);
      return;
    }
    for (const auto& s : sys.steps()) {
      if (!step_allowed(sys, s.label, p, word.size())) continue;
      const Point q = p + Point{s.dx, s.dy};
      if (!reach(q)) continue;
      word.push_back(s.label);
      dfs(q);
      word.pop_back();
    }
  };
  dfs(start);
}

inline std::vector<Path> enumerate(const StepSystem& sys, Point start, Point end) {
  std::vector<Path> out;
  for_each_path(sys, start, end, [&](const std::vector<int>& w) { out.emplace_back(sys, start, w); });
  return out;
}

/// Sum of path weights by dynamic programming over lattice points.
inline LaurentPoly path_gf(const StepSystem& sys, Point start, Point end, const StepWeight& w) {
  detail::check_endpoints(sys, end);
  if (start.y < 0 || !congruent_endpoints(sys, start, end)) return 0;
  detail::Bounds bounds{sys, end};
  std::unordered_map<Point, LaurentPoly, PointHash> memo;
  std::function<LaurentPoly(Point)> gf = [&](Point p) -> LaurentPoly {
    if (p == end) return 1;
    if (!bounds.inside(p)) return 0;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    LaurentPoly acc;
    for (const auto& s : sys.steps()) {
      if (!step_allowed(sys, s.label, p, 1)) continue;
      LaurentPoly rest = gf(p + Point{s.dx, s.dy});
      if (rest.is_zero()) continue;
      acc += w(s.label, p) * rest;
    }
    memo.emplace(p, acc);
    return acc;
  };
  return gf(start);
}

enum class WeightKind { W, V, Count };

inline StepWeight weight_fn(const StepSystem& sys, WeightKind kind) {
  switch (kind) {
    case WeightKind::W: return [sys](int l, Point p) { return step_weight_w(sys, l, p); };
    case WeightKind::V: return [sys](int l, Point p) { return step_weight_v(sys, l, p); };
    case WeightKind::Count: return [](int, Point) { return LaurentPoly(1); };
  }
  return {};
}

inline LaurentPoly path_gf(const StepSystem& sys, Point start, Point end, WeightKind kind) {
  return path_gf(sys, start, end, weight_fn(sys, kind));
}

inline Rational path_count(const StepSystem& sys, Point start, Point end) {
  return path_gf(sys, start, end, WeightKind::Count).constant_value();
}

/// Sum of weights over an explicit list of paths.
inline RatFunc gf(const std::vector<Path>& paths, WeightKind kind) {
  PolySum acc;
  for (const auto& p : paths) {
    switch (kind) {
      case WeightKind::W: acc += weight_w(p); break;
      case WeightKind::V: acc += weight_v(p); break;
      case WeightKind::Count: acc += 1; break;
    }
  }
  return acc.value();
}

// ----------------------------------------------------------- Favard paths

/// All Favard paths of the given height, in lexicographic label order.
inline std::vector<Path> favard_paths(int ell, int height) {
  const StepSystem sys(ell, PathFamily::Favard);
  std::vector<Path> out;
  if (height < 0) return out;
  std::vector<int> word;
  std::function<void(Point, int)> dfs = [&](Point p, int remaining) {
    if (remaining == 0) {
      out.emplace_back(sys, favard_origin(ell), word);
      return;
    }
    for (const auto& s : sys.steps()) {
      if (s.dy > remaining || !step_allowed(sys, s.label, p, word.size())) continue;
      word.push_back(s.label);
      dfs(p + Point{s.dx, s.dy}, remaining - s.dy);
      word.pop_back();
    }
  };
  dfs(favard_origin(ell), height);
  return out;
}

// ------------------------------------------------------------- path sets

/// B_n: big paths from (0, n mod ell) to (n, 0).
inline Point big_start(int ell, int n) { return {0, mod(n, ell)}; }
/// Dual B_n: dual paths from (0, (-n) mod ell) to (n, 0).
inline Point dual_start(int ell, int n) { return {0, mod(-n, ell)}; }

inline std::vector<Path> big_set(int ell, int n) {
  if (n < 0) return {};
  return enumerate(StepSystem(ell, PathFamily::Big), big_start(ell, n), {n, 0});
}
inline std::vector<Path> dual_set(int ell, int n) {
  if (n < 0) return {};
  return enumerate(StepSystem(ell, PathFamily::Dual), dual_start(ell, n), {n, 0});
}
inline LaurentPoly big_gf_w(int ell, int n) {
  if (n < 0) return 0;
  return path_gf(StepSystem(ell, PathFamily::Big), big_start(ell, n), {n, 0}, WeightKind::W);
}
inline LaurentPoly dual_gf_w(int ell, int n) {
  if (n < 0) return 0;
  return path_gf(StepSystem(ell, PathFamily::Dual), dual_start(ell, n), {n, 0}, WeightKind::W);
}

/// Start (s*ell - r, r) and end (t*ell, 0) of the sets B^r_{s,t}, S^r_{s,t}, M^r_{s,t}.
inline Point bst_start(int ell, int s, int r) { return {s * ell - r, r}; }
inline Point bst_end(int ell, int t) { return {t * ell, 0}; }

inline std::vector<Path> big_bst(int ell, int s, int t, int r) {
  return enumerate(StepSystem(ell, PathFamily::Big), bst_start(ell, s, r), bst_end(ell, t));
}
inline std::vector<Path> small_bst(int ell, int s, int t, int r) {
  return enumerate(StepSystem(ell, PathFamily::Small), bst_start(ell, s, r), bst_end(ell, t));
}
inline LaurentPoly big_bst_gf(int ell, int s, int t, int r) {
  return path_gf(StepSystem(ell, PathFamily::Big), bst_start(ell, s, r), bst_end(ell, t), WeightKind::V);
}
inline LaurentPoly small_bst_gf(int ell, int s, int t, int r) {
  return path_gf(StepSystem(ell, PathFamily::Small), bst_start(ell, s, r), bst_end(ell, t), WeightKind::V);
}

/// M^r_{s,t}: big paths in B^r_{s,t} with a mark (t*ell - m, m) on a vertex.
inline std::vector<MarkedPath> marked_bst(int ell, int s, int t, int r) {
  std::vector<MarkedPath> out;
  if (s == t && r == 0) {
    out.push_back({Path(StepSystem(ell, PathFamily::Big), bst_start(ell, s, r)), 0});
    return out;
  }
  for (auto& p : big_bst(ell, s, t, r)) {
    const auto pts = p.points();
    for (int m = 0;; ++m) {
      const Point target{t * ell - m, m};
      bool hit = false;
      for (const auto& q : pts) hit = hit || q == target;
      if (hit) {
        out.push_back({p, m});
      } else if (m > 0) {
        // marks sit on the final run of down-steps, so they are contiguous from 0
        break;
      }
    }
  }
  return out;
}

inline LaurentPoly marked_bst_gf(int ell, int s, int t, int r) {
  PolySum acc;
  for (const auto& mp : marked_bst(ell, s, t, r)) acc += weight_v_marked(mp);
  return acc.value();
}

}  // namespace schroederlab
