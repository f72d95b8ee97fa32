#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "trihom/error.hpp"

namespace trihom {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd-reduced, sign on the numerator, positive denominator).
using Rat = mpq_class;

inline Rat rat_abs(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

/// Parse a rational literal "p" or "p/q" (optional leading sign).
/// Throws ParseError on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

/// Canonical form of rat_parse's input: "p" when the denominator is 1,
/// otherwise "p/q".
std::string rat_to_string(const Rat& r);

/// Exact field element of the Gaussian-rational extension re + im*i.
/// Purely real values keep im == 0, so the same type serves both the
/// rational and the complex coefficient field.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(Rat re) : re_(std::move(re)), im_(0) {}
  Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Exact magnitude measure max(|re|, |im|); zero iff the value is zero.
  /// Residual reports use this so that magnitudes stay rational.
  Rat magnitude() const {
    Rat a = rat_abs(re_);
    Rat b = rat_abs(im_);
    return a < b ? b : a;
  }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    *this = *this / o;
    return *this;
  }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_real() && b.is_real()) return Scalar(a.re_ * b.re_);
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_,
                  a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error("division by zero scalar");
    if (b.is_real()) return Scalar(a.re_ / b.re_, a.im_ / b.re_);
    Rat norm = b.re_ * b.re_ + b.im_ * b.im_;
    return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / norm,
                  (a.im_ * b.re_ - a.re_ * b.im_) / norm);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  double to_double() const { return re_.get_d(); }

 private:
  Rat re_;
  Rat im_;
};

/// Parse "a", "a+bi", "a-bi" or "bi" with rational a, b. Imaginary parts
/// are rejected unless allow_imaginary is set.
Scalar scalar_parse(const std::string& text, bool allow_imaginary);

/// Canonical inverse of scalar_parse ("3", "-1/2", "1/2+3i", "-2i", ...).
std::string scalar_to_string(const Scalar& s);

}  // namespace trihom
