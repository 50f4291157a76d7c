#pragma once

// Command-line front end. Exit codes: 0 success or identity holds, 1 an
// identity is falsified, 2 usage error.

#include "checks.hpp"
#include "lbp.hpp"
#include "lgv.hpp"
#include "narayana.hpp"
#include "paths.hpp"
#include "serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schroederlab::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Point parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("expected x,y but got '" + s + "'");
  try {
    std::size_t a = 0, b = 0;
    const int x = std::stoi(s.substr(0, comma), &a);
    const int y = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError("expected x,y but got '" + s + "'");
  }
}

inline WeightKind parse_weight(const std::string& s) {
  if (s == "w") return WeightKind::W;
  if (s == "v") return WeightKind::V;
  if (s == "count") return WeightKind::Count;
  throw UsageError("--weight must be w, v or count");
}

struct Options {
  std::string format = "text";
  std::string out;
  int ell = 1;
  std::optional<int> n;
  std::string family = "big";
  std::string start, end;
  std::string weight = "v";
  std::optional<int> from, to;
  std::string spec = "primitive";
  std::string check;
  std::uint64_t seed = 1;
  int max_n = 3;
  std::optional<int> max_k;
  std::string omega_convention = "formula";
  std::string closed_range = "derived";
  bool oeis = false;
};

/// One named check: the size its --n bound means, its default, and the
/// largest size run by `verify all`.
struct CheckEntry {
  std::string name;
  std::string size;
  std::function<int(int ell)> default_n;
  std::function<Verdict(int ell, int n, const Options&)> run;
};

inline OmegaConvention parse_convention(const std::string& s) {
  if (s == "formula") return OmegaConvention::Formula;
  if (s == "defn") return OmegaConvention::Definition;
  throw UsageError("--omega-convention must be defn or formula");
}

inline ClosedRange parse_range(const std::string& s) {
  if (s == "derived") return ClosedRange::Derived;
  if (s == "printed") return ClosedRange::Printed;
  throw UsageError("--closed-range must be printed or derived");
}

inline const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> r = {
      {"moments-golden", "unused", [](int) { return 0; }, [](int, int, const Options&) { return check_moments_golden(); }},
      {"moments-paths", "degree range [-n l, (n+1) l]", [](int) { return 3; },
       [](int ell, int n, const Options& o) {
         return check_moments_paths(ell, o.from.value_or(-n * ell), o.to.value_or((n + 1) * ell));
       }},
      {"orthogonality", "max n", [](int) { return 6; },
       [](int ell, int n, const Options&) { return check_orthogonality(ell, n); }},
      {"coeff-det", "max k", [](int) { return 5; }, [](int ell, int n, const Options&) { return check_coeff_det(ell, n); }},
      {"transform", "trials", [](int) { return 5; },
       [](int ell, int n, const Options& o) { return check_transform(ell, n, o.seed); }},
      {"phi", "max n", [](int) { return 5; },
       [](int ell, int n, const Options& o) { return check_involutions(ell, n, o.max_k.value_or(3), false); }},
      {"phi-tilde", "max n", [](int) { return 5; },
       [](int ell, int n, const Options& o) { return check_involutions(ell, n, o.max_k.value_or(3), true); }},
      {"theta", "max t", [](int) { return 3; }, [](int ell, int n, const Options&) { return check_theta_suite(ell, n); }},
      {"rotation", "max t", [](int) { return 3; },
       [](int ell, int n, const Options&) { return check_rotation_suite(ell, n); }},
      {"shift", "max n", [](int) { return 3; }, [](int ell, int n, const Options&) { return check_shift_suite(ell, n); }},
      {"figure-words", "unused", [](int) { return 0; }, [](int, int, const Options&) { return check_figure_words(); }},
      {"bs-identity", "max t", [](int) { return 3; },
       [](int ell, int n, const Options&) { return check_bs_identity(ell, n); }},
      {"counts", "max t", [](int) { return 4; },
       [](int ell, int n, const Options& o) { return check_counts(ell, n, o.oeis); }},
      {"pi-factorization", "max n", [](int) { return 3; },
       [](int ell, int n, const Options& o) {
         return check_pi_chain(ell, n, parse_convention(o.omega_convention), parse_range(o.closed_range));
       }},
      {"narayana-div", "max n", [](int) { return 9; },
       [](int ell, int n, const Options&) { return check_narayana_div(ell, n); }},
      {"hankel", "max n", [](int ell) { return ell <= 2 ? 4 : 3; },
       [](int ell, int n, const Options&) { return check_hankel(ell, n); }},
      {"bridge", "max n", [](int) { return 8; }, [](int ell, int n, const Options&) { return check_bridge(ell, n); }},
      {"kernel", "cases", [](int) { return 200; },
       [](int, int n, const Options& o) { return check_kernel(n, o.seed); }},
  };
  return r;
}

inline const CheckEntry* find_check(const std::string& name) {
  for (const auto& c : registry())
    if (c.name == name) return &c;
  return nullptr;
}

inline bool ell_independent(const std::string& name) {
  return name == "moments-golden" || name == "figure-words" || name == "kernel";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int enumerate() {
    const auto fam = family();
    const StepSystem sys(o_.ell, fam);
    const WeightKind wk = parse_weight(o_.weight);
    std::vector<Path> paths;
    Json head = header(fam);
    if (fam == PathFamily::Favard) {
      paths = favard_paths(o_.ell, need_n());
    } else {
      const auto [s, e] = endpoints(sys);
      paths = enumerate_paths(sys, s, e);
    }
    if (json()) {
      Json arr = Json::array();
      for (const auto& p : paths) {
        Json j = to_json(p);
        if (wk != WeightKind::Count) j["weight"] = to_json(wk == WeightKind::W ? weight_w(p) : weight_v(p));
        arr.push_back(std::move(j));
      }
      head["weight"] = o_.weight;
      head["count"] = paths.size();
      head["paths"] = std::move(arr);
      out_ << head.dump(2) << "\n";
      return 0;
    }
    if (wk == WeightKind::Count) {
      out_ << paths.size() << "\n";
      return 0;
    }
    for (const auto& p : paths) out_ << p.word_string() << "\t" << (wk == WeightKind::W ? weight_w(p) : weight_v(p)) << "\n";
    out_ << "total\t" << gf(paths, wk) << "\n";
    return 0;
  }

  int generating_function() {
    const auto fam = family();
    const WeightKind wk = parse_weight(o_.weight);
    Json head = header(fam);
    head["weight"] = o_.weight;
    if (fam == PathFamily::Favard) {
      if (wk != WeightKind::W) throw UsageError("Favard paths carry the w weight only");
      const XPoly p = favard_gf(o_.ell, need_n());
      head["gf"] = to_json(p);
      emit(head, p.to_string());
      return 0;
    }
    const StepSystem sys(o_.ell, fam);
    const auto [s, e] = endpoints(sys);
    const LaurentPoly g = path_gf(sys, s, e, wk);
    head["gf"] = to_json(g);
    emit(head, g.to_string());
    return 0;
  }

  int moments() {
    const int lo = o_.from.value_or(-o_.ell), hi = o_.to.value_or(2 * o_.ell);
    if (lo > 0 || hi < 0) throw UsageError("--from must be <= 0 <= --to");
    LbpSpec spec;
    if (o_.spec == "primitive")
      spec = LbpSpec::primitive(o_.ell);
    else if (o_.spec == "constant")
      spec = LbpSpec::constant(o_.ell);
    else
      throw UsageError("--spec must be primitive or constant");
    const MomentTable t = favard_moments(spec, lo, hi);
    if (json()) {
      Json j = to_json(t);
      j["spec"] = o_.spec;
      out_ << j.dump(2) << "\n";
      return 0;
    }
    for (const auto& [n, v] : t.mu) out_ << "mu_" << n << " = " << v << "\n";
    return 0;
  }

  int narayana_poly() {
    const int n = need_n();
    const LaurentPoly p = narayana(o_.ell, n);
    const Rational one = narayana_at_one(p);
    Json j{{"ell", o_.ell}, {"n", n}, {"polynomial", to_json(p)}, {"value_at_one", to_json(one)}};
    emit(j, p.to_string(true));
    return 0;
  }

  int determinant() {
    const int n = need_n();
    SystemKind kind;
    if (o_.family == "pi")
      kind = SystemKind::Pi;
    else if (o_.family == "omega")
      kind = SystemKind::Omega;
    else
      throw UsageError("det needs --family pi or omega");
    const SystemFamily fam{kind, n, o_.ell, parse_convention(o_.omega_convention)};
    const LaurentPoly d = gf_system_det(fam);
    Json j{{"system", o_.family}, {"ell", o_.ell}, {"n", n}, {"det", to_json(d)}};
    if (kind == SystemKind::Omega) j["omega_convention"] = o_.omega_convention;
    emit(j, d.to_string());
    return 0;
  }

  int verify(const std::string& name) {
    if (name == "all") return verify_all();
    const CheckEntry* c = find_check(name);
    if (!c) throw UsageError("unknown check '" + name + "'");
    parse_convention(o_.omega_convention);
    parse_range(o_.closed_range);
    const int n = o_.n.value_or(c->default_n(o_.ell));
    if (n < 0) throw UsageError("--n must be non-negative");
    if (name == "narayana-div" && n < o_.ell) throw UsageError("divisibility is only claimed for n >= ell");
    const Verdict v = c->run(o_.ell, n, o_);
    if (json())
      out_ << to_json(v).dump(2) << "\n";
    else
      out_ << (v.ok ? "ok" : "FAIL") << "  " << v.check << "  " << params_text(v.params) << "  (" << v.checked
           << " comparisons)" << (v.ok ? "" : "\n  counterexample: " + v.counterexample) << "\n";
    return v.ok ? 0 : 1;
  }

  /// Every check for each l = 1..L, sizes capped by --max-n. Checks run
  /// concurrently; the table keeps registry order.
  int verify_all() {
    if (o_.max_n < 0) throw UsageError("--max-n must be non-negative");
    std::vector<std::future<Verdict>> jobs;
    for (int ell = 1; ell <= o_.ell; ++ell)
      for (const auto& c : registry()) {
        if (ell_independent(c.name) && ell != 1) continue;
        const int n = c.name == "kernel" ? c.default_n(ell) : std::min(o_.max_n, c.default_n(ell));
        if (c.name == "narayana-div" && n < ell) continue;
        Options opt = o_;
        opt.oeis = c.name == "counts" && ell == 2;
        jobs.push_back(std::async(std::launch::async, [&c, ell, n, opt] {
          try {
            return c.run(ell, n, opt);
          } catch (const std::exception& e) {
            Verdict v{c.name, {{"ell", ell}, {"n", n}}};
            v.fail(e.what());
            return v;
          }
        }));
      }
    std::vector<Verdict> vs;
    for (auto& j : jobs) vs.push_back(j.get());
    int passed = 0;
    for (const auto& v : vs) passed += v.ok;
    if (json()) {
      Json arr = Json::array();
      for (const auto& v : vs) arr.push_back(to_json(v));
      out_ << Json{{"passed", passed}, {"total", vs.size()}, {"verdicts", arr}}.dump(2) << "\n";
    } else {
      out_ << std::left << std::setw(18) << "check" << std::setw(6) << "" << "params\n";
      for (const auto& v : vs) {
        out_ << std::setw(18) << v.check << std::setw(6) << (v.ok ? "ok" : "FAIL") << params_text(v.params) << "\n";
        if (!v.ok) out_ << "    counterexample: " << v.counterexample << "\n";
      }
      out_ << passed << "/" << vs.size() << " checks passed\n";
    }
    return passed == static_cast<int>(vs.size()) ? 0 : 1;
  }

  /// Counts of the path families for n = 0..N with the Narayana values.
  int report() {
    const int nmax = o_.n.value_or(8);
    if (nmax < 0) throw UsageError("--n must be non-negative");
    const int ell = o_.ell;
    const StepSystem big(ell, PathFamily::Big), dual(ell, PathFamily::Dual), small(ell, PathFamily::Small);
    Json rows = Json::array();
    std::ostringstream text;
    text << "ell = " << ell << "\n" << std::left << std::setw(4) << "n" << std::setw(16) << "big" << std::setw(16)
         << "dual" << std::setw(16) << "small" << "\n";
    for (int n = 0; n <= nmax; ++n) {
      const Rational b = path_count(big, big_start(ell, n), {n, 0});
      const Rational d = path_count(dual, dual_start(ell, n), {n, 0});
      const Rational s = path_count(small, big_start(ell, n), {n, 0});
      rows.push_back(Json{{"n", n}, {"big", b.get_str()}, {"dual", d.get_str()}, {"small", s.get_str()}});
      text << std::setw(4) << n << std::setw(16) << b.get_str() << std::setw(16) << d.get_str() << std::setw(16)
           << s.get_str() << "\n";
    }
    emit(Json{{"ell", ell}, {"rows", rows}}, text.str(), false);
    return 0;
  }

 private:
  bool json() const { return o_.format == "json"; }

  void emit(const Json& j, const std::string& text, bool newline = true) {
    if (json())
      out_ << j.dump(2) << "\n";
    else
      out_ << text << (newline ? "\n" : "");
  }

  int need_n() const {
    if (!o_.n) throw UsageError("--n is required");
    if (*o_.n < 0) throw UsageError("--n must be non-negative");
    return *o_.n;
  }

  PathFamily family() const {
    const auto f = parse_family(o_.family);
    if (!f) throw UsageError("--family must be big, small, dual or favard");
    return *f;
  }

  Json header(PathFamily fam) const {
    Json j{{"family", family_name(fam)}, {"ell", o_.ell}};
    if (fam == PathFamily::Favard) {
      j["n"] = need_n();
    } else {
      j["start"] = {start_point().x, start_point().y};
      j["end"] = {end_point().x, end_point().y};
    }
    return j;
  }

  Point end_point() const {
    if (o_.end.empty()) throw UsageError("--end is required");
    return parse_point(o_.end);
  }
  Point start_point() const { return o_.start.empty() ? Point{0, 0} : parse_point(o_.start); }

  std::pair<Point, Point> endpoints(const StepSystem& sys) const {
    const Point s = start_point(), e = end_point();
    if (s.y < 0 || e.y < 0) throw UsageError("endpoints must lie weakly above the x-axis");
    if (!congruent_endpoints(sys, s, e) || s.x > e.x)
      throw UsageError("end point is unreachable from the start point");
    return {s, e};
  }

  static std::vector<Path> enumerate_paths(const StepSystem& sys, Point s, Point e) { return schroederlab::enumerate(sys, s, e); }

  const Options& o_;
  std::ostream& out_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and identity checks for l-Schroder paths and l-LBPs", "schroederlab"};
  app.require_subcommand(1);
  Options o;
  std::string check_pos;

  auto common = [&](CLI::App* s) {
    s->add_option("--ell", o.ell, "step parameter l >= 1");
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", o.out, "write output to this file");
  };
  auto endpoints = [&](CLI::App* s) {
    s->add_option("--family", o.family, "big, small, dual or favard");
    s->add_option("--start", o.start, "start point x,y (default 0,0)");
    s->add_option("--end", o.end, "end point x,y");
    s->add_option("--weight", o.weight, "w, v or count");
    s->add_option("--n", o.n, "height of the Favard paths");
  };

  auto* en = app.add_subcommand("enumerate", "list every path between two points");
  common(en);
  endpoints(en);
  auto* g = app.add_subcommand("gf", "generating function of the paths between two points");
  common(g);
  endpoints(g);
  auto* mo = app.add_subcommand("moments", "moment table from the Favard solve");
  common(mo);
  mo->add_option("--from", o.from, "lowest degree (<= 0)");
  mo->add_option("--to", o.to, "highest degree (>= 0)");
  mo->add_option("--spec", o.spec, "primitive or constant");
  auto* na = app.add_subcommand("narayana", "the l-Narayana polynomial N_n");
  common(na);
  na->add_option("--n", o.n, "index n")->required();
  auto* de = app.add_subcommand("det", "LGV determinant for Pi_n or Omega_n");
  common(de);
  de->add_option("--family", o.family, "pi or omega")->required();
  de->add_option("--n", o.n, "number of paths")->required();
  de->add_option("--omega-convention", o.omega_convention, "defn or formula");
  auto* ve = app.add_subcommand("verify", "run a named identity check");
  common(ve);
  ve->add_option("name", check_pos, "check name, or all");
  ve->add_option("--check", o.check, "check name, or all");
  ve->add_option("--n", o.n, "size bound (meaning depends on the check)");
  ve->add_option("--max-n", o.max_n, "size cap for verify all");
  ve->add_option("--max-k", o.max_k, "|k| bound for the involution checks");
  ve->add_option("--from", o.from, "lowest degree for moments-paths");
  ve->add_option("--to", o.to, "highest degree for moments-paths");
  ve->add_option("--seed", o.seed, "seed for randomized checks");
  ve->add_option("--omega-convention", o.omega_convention, "defn or formula");
  ve->add_option("--closed-range", o.closed_range, "printed or derived");
  ve->add_flag("--oeis", o.oeis, "also compare the bundled OEIS prefixes");
  auto* re = app.add_subcommand("report", "table of path counts for n = 0..N");
  common(re);
  re->add_option("--n", o.n, "largest n (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (o.ell < 1) throw UsageError("--ell must be at least 1");
    Runner r(o, buf);
    if (en->parsed())
      code = r.enumerate();
    else if (g->parsed())
      code = r.generating_function();
    else if (mo->parsed())
      code = r.moments();
    else if (na->parsed())
      code = r.narayana_poly();
    else if (de->parsed())
      code = r.determinant();
    else if (ve->parsed()) {
      const std::string name = !o.check.empty() ? o.check : check_pos;
      if (name.empty()) throw UsageError("verify needs a check name");
      code = r.verify(name);
    } else
      code = r.report();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace schroederlab::cli
