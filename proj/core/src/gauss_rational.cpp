#include "exotica/gauss_rational.hpp"

#include <cctype>

#include "exotica/error.hpp"

namespace exotica {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kNegativeExponent: return "negative_exponent";
    case ErrorCode::kZeroPolynomial: return "zero_polynomial";
    case ErrorCode::kNotUnivariate: return "not_univariate";
    case ErrorCode::kUnknownVariable: return "unknown_variable";
    case ErrorCode::kSumNonzero: return "sum_nonzero";
    case ErrorCode::kCommonFactor: return "common_factor";
    case ErrorCode::kAllConstant: return "all_constant";
    case ErrorCode::kZeroDifference: return "zero_difference";
    case ErrorCode::kDegreeGap: return "degree_gap";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kNotNilpotent: return "not_nilpotent";
    case ErrorCode::kSearchSpaceTooLarge: return "search_space_too_large";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  std::size_t end = digits(pos);
  if (end == pos) throw Error(ErrorCode::kInvalidArgument, "bad rational: '" + text + "'");
  Integer num(text.substr(pos, end - pos));
  Integer den(1);
  if (end < text.size()) {
    if (text[end] != '/') throw Error(ErrorCode::kInvalidArgument, "bad rational: '" + text + "'");
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart || dend != text.size())
      throw Error(ErrorCode::kInvalidArgument, "bad rational: '" + text + "'");
    den = Integer(text.substr(dstart, dend - dstart));
    if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator in '" + text + "'");
  }
  Rational r(neg ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRational GaussRational::pow(unsigned e) const {
  GaussRational result(1);
  GaussRational base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return rational_to_string(v) + "*i";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string s = rational_to_string(re_);
  if (sgn(im_) < 0) return s + " - " + imag(-im_);
  return s + " + " + imag(im_);
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

}  // namespace exotica
