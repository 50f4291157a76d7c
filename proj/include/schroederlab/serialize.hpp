#pragma once

// Canonical JSON for the exact types, paths, x-polynomials and moment tables.

#include "laurent.hpp"
#include "lbp.hpp"
#include "paths.hpp"
#include "ratfunc.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace schroederlab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const Json& j) {
  Rational q(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

inline std::string family_letter(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
  }
  return "?";
}

inline Family family_from_letter(const std::string& s) {
  if (s == "a") return Family::A;
  if (s == "b") return Family::B;
  if (s == "c") return Family::C;
  throw std::invalid_argument("unknown variable family '" + s + "'");
}

/// Terms in canonical (descending) order.
inline Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& t : p.terms()) {
    Json vars = Json::array();
    for (const auto& [v, e] : t.mono.vars())
      vars.push_back(Json{{"family", family_letter(v.family)}, {"i", v.i}, {"j", v.j}, {"exp", e}});
    arr.push_back(Json{{"coeff", to_json(t.coeff)}, {"vars", vars}});
  }
  return arr;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  std::vector<Term> ts;
  for (const auto& t : j) {
    std::vector<std::pair<Var, int>> fs;
    for (const auto& v : t.at("vars")) {
      const Family f = family_from_letter(v.at("family").get<std::string>());
      fs.push_back({Var{f, v.at("i").get<int>(), v.at("j").get<int>()}, v.at("exp").get<int>()});
    }
    ts.push_back({Monomial::from_factors(std::move(fs)), rational_from_json(t.at("coeff"))});
  }
  return LaurentPoly::from_terms(std::move(ts));
}

inline Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

inline Json to_json(const Path& p) {
  return Json{{"ell", p.ell()},
              {"family", family_name(p.system.family())},
              {"initial", {p.initial.x, p.initial.y}},
              {"word", p.word}};
}

inline Path path_from_json(const Json& j) {
  const auto fam = parse_family(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("unknown path family");
  const auto& init = j.at("initial");
  return Path(StepSystem(j.at("ell").get<int>(), *fam), {init.at(0).get<int>(), init.at(1).get<int>()},
              j.at("word").get<std::vector<int>>());
}

inline Json to_json(const XPoly& p) {
  Json arr = Json::array();
  for (const auto& [k, c] : p.coeffs()) arr.push_back(Json{{"power", k}, {"coeff", to_json(c)}});
  return arr;
}

inline XPoly xpoly_from_json(const Json& j) {
  XPoly p;
  for (const auto& t : j) p.set(t.at("power").get<int>(), ratfunc_from_json(t.at("coeff")));
  return p;
}

/// Keys are decimal degree strings in increasing degree order.
inline Json to_json(const MomentTable& t) {
  Json mu = Json::object();
  for (const auto& [n, v] : t.mu) mu[std::to_string(n)] = to_json(v);
  return Json{{"ell", t.ell}, {"mu", mu}};
}

inline MomentTable moment_table_from_json(const Json& j) {
  MomentTable t;
  t.ell = j.at("ell").get<int>();
  for (const auto& [k, v] : j.at("mu").items()) t.mu.emplace(std::stoi(k), ratfunc_from_json(v));
  return t;
}

}  // namespace schroederlab
