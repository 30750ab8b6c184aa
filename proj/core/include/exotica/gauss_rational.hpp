#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace exotica {

using Rational = mpq_class;
using Integer = mpz_class;

/// Renders a rational as "p" or "p/q".
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'); throws Error on bad input.
Rational rational_from_string(const std::string& text);

/// An element re + im*i of Q(i). Both parts are kept canonical by GMP
/// (lowest terms, positive denominator).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// True when both parts are integers (a Gaussian integer).
  bool is_gaussian_integer() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
  }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws Error(kDivisionByZero) on zero.
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Total order (re first, then im); for deterministic output only.
  friend bool lex_less(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  GaussRational pow(unsigned e) const;

  /// "p/q", "p/q*i", or "a/b + c/d*i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace exotica
