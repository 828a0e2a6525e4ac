#ifndef QSW_GAUSSRAT_HPP
#define QSW_GAUSSRAT_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qsw/errors.hpp"

namespace qsw {

using Rat = mpq_class;
using Int = mpz_class;

/// Builds p/q in canonical form (lowest terms, positive denominator).
inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Exact Gaussian rational re + im*i. Both components are arbitrary-precision
/// rationals kept in lowest terms with positive denominator (mpq invariant),
/// and equality is componentwise.
class GaussRat {
public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}
  GaussRat(Rat re) : re_(std::move(re)), im_(0) {}
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return im_ == 0 && re_ == 1; }

  /// True when the value is a rational integer (imaginary part zero,
  /// denominator one).
  bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

  /// True when the value is an integer divisible by m. Requires m != 0.
  bool divisible_by(long m) const {
    return is_integer() && mpz_divisible_ui_p(re_.get_num().get_mpz_t(),
                                              static_cast<unsigned long>(m));
  }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw DomainError("division of scalar by zero");
    if (im_ == 0 && o.im_ == 0) {
      re_ /= o.re_;
      return *this;
    }
    Rat norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rat re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rat im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }

  /// Display form "a+bi": exact rationals, never decimals.
  /// Examples: "3", "-1/2", "i", "-2i", "1+i", "1/2-3/2i".
  std::string str() const;

private:
  Rat re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& v);

} // namespace qsw

#endif
