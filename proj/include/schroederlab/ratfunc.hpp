#pragma once

// Quotients of Laurent polynomials. No gcd normalization is attempted;
// equality is decided by cross-multiplication. Denominators that are single
// terms are units of the Laurent ring and get folded into the numerator, which
// keeps every value arising from path weights a plain LaurentPoly.

#include "laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace schroederlab {

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Var v) : num_(v), den_(1) {}                // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    normalize();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// The numerator when the denominator is 1; throws otherwise.
  const LaurentPoly& as_poly() const {
    if (!den_.is_one()) throw std::domain_error("RatFunc is not a Laurent polynomial");
    return num_;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& l, const RatFunc& r) {
    if (l.den_ == r.den_) return RatFunc(l.num_ + r.num_, l.den_);
    return RatFunc(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
  }
  friend RatFunc operator-(const RatFunc& l, const RatFunc& r) {
    if (l.den_ == r.den_) return RatFunc(l.num_ - r.num_, l.den_);
    return RatFunc(l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_);
  }
  friend RatFunc operator*(const RatFunc& l, const RatFunc& r) {
    if (l.den_.is_one() && r.den_.is_one()) return RatFunc(l.num_ * r.num_);
    return RatFunc(l.num_ * r.num_, l.den_ * r.den_);
  }
  friend RatFunc operator/(const RatFunc& l, const RatFunc& r) {
    if (r.is_zero()) throw std::domain_error("RatFunc division by zero");
    return RatFunc(l.num_ * r.den_, l.den_ * r.num_);
  }
  RatFunc& operator+=(const RatFunc& r) { return *this = *this + r; }
  RatFunc& operator-=(const RatFunc& r) { return *this = *this - r; }
  RatFunc& operator*=(const RatFunc& r) { return *this = *this * r; }
  RatFunc& operator/=(const RatFunc& r) { return *this = *this / r; }

  bool operator==(const RatFunc& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
  }

  RatFunc pow(int e) const {
    if (e >= 0) return RatFunc(num_.pow(e), den_.pow(e));
    return RatFunc(den_.pow(-e), num_.pow(-e));
  }

  RatFunc rename(const std::function<Var(Var)>& f) const { return RatFunc(num_.rename(f), den_.rename(f)); }

  std::string to_string(bool drop_j = false) const {
    if (den_.is_one()) return num_.to_string(drop_j);
    return "(" + num_.to_string(drop_j) + ")/(" + den_.to_string(drop_j) + ")";
  }

 private:
  void normalize() {
    if (den_.is_one()) return;
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_.is_term()) {
      num_ = num_ * den_.pow(-1);
      den_ = 1;
      return;
    }
    // Strip the monomial content and the leading coefficient of the
    // denominator, then try an exact division.
    const LaurentPoly inv(den_.monomial_content().inverse(), 1 / den_.leading().coeff);
    num_ = num_ * inv;
    den_ = den_ * inv;
    if (den_.is_one()) return;
    if (auto q = exact_div(num_, den_)) {
      num_ = std::move(*q);
      den_ = 1;
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline RatFunc shift_c(const RatFunc& r, int delta) {
  if (delta == 0) return r;
  return RatFunc(shift_c(r.num(), delta), shift_c(r.den(), delta));
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace schroederlab
