#ifndef QSW_SERIES_HPP
#define QSW_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "qsw/gaussrat.hpp"

namespace qsw {

/// First disagreeing coefficient found by equal_up_to.
struct Mismatch {
  int xexp; // exponent of x = q^(1/2)
  GaussRat lhs, rhs;
};

/// Truncated Laurent series in x = q^(1/2) with GaussRat coefficients.
///
/// `order()` is the exponent N below which every coefficient is determined;
/// nothing is known at exponents >= N. Stored coefficients are nonzero, live
/// strictly below the order, and there are finitely many negative exponents.
/// q^n sits at x-exponent 2n. Values are immutable after construction and
/// safe to share across threads.
class XSeries {
public:
  /// The zero series truncated at `order`.
  explicit XSeries(int order = 0) : order_(order) {}

  /// c*x^e truncated at `order`. Requires order > e unless c = 0.
  static XSeries monomial(GaussRat c, int xexp, int order);
  static XSeries one(int order) { return monomial(GaussRat(1), 0, order); }

  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Least stored exponent; equals order() for the zero series.
  int low_exponent() const {
    return coeffs_.empty() ? order_ : coeffs_.begin()->first;
  }

  const std::map<int, GaussRat>& coeffs() const { return coeffs_; }

  /// Coefficient at x-exponent e (zero when absent). Throws
  /// InsufficientOrderError when e >= order().
  GaussRat coeff_x(int e) const;

  /// Coefficient of q^n, i.e. x-exponent 2n.
  GaussRat coeff_q(int n) const { return coeff_x(2 * n); }

  /// Forgets coefficients at exponents >= new_order. Requires
  /// new_order <= order().
  XSeries truncated(int new_order) const;

  /// truncated(new_order) when the series is known further than that,
  /// otherwise the series unchanged.
  XSeries capped(int new_order) const {
    return order_ > new_order ? truncated(new_order) : *this;
  }

  XSeries operator-() const;

  /// Sum and difference at order min(order(a), order(b)).
  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);

  /// Product at order min(order(a)+low(b), order(b)+low(a)).
  friend XSeries operator*(const XSeries& a, const XSeries& b);

  XSeries& operator+=(const XSeries& o) { return *this = *this + o; }
  XSeries& operator-=(const XSeries& o) { return *this = *this - o; }
  XSeries& operator*=(const XSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse in the Laurent ring. The input must have a
  /// nonzero lowest coefficient (throws ZeroSeriesError otherwise); the
  /// result has low exponent -low(a) and order order(a) - 2*low(a).
  XSeries inverse() const;

  friend XSeries operator/(const XSeries& a, const XSeries& b) {
    return a * b.inverse();
  }

  // The three factor primitives below multiply or divide by quantities that
  // are exact (not truncated), so the order bookkeeping only shifts:
  //   scaled_shift: order + k,  mul_binomial: order + min(0, m),
  //   div_binomial: order - min(0, m).

  /// c * x^k * this.
  XSeries scaled_shift(const GaussRat& c, int k) const;

  /// this * (1 - c*x^m).
  XSeries mul_binomial(const GaussRat& c, int m) const;

  /// this / (1 - c*x^m). Throws ZeroSeriesError when the binomial is zero
  /// (c = 1, m = 0).
  XSeries div_binomial(const GaussRat& c, int m) const;

  friend bool operator==(const XSeries& a, const XSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Human form in ascending exponents, e.g. "1 - q + q^2" or
  /// "1/2 + i * q^(1/2)". The zero series prints "0".
  std::string str() const;

private:
  void set(int e, GaussRat c); // drops zeros, enforces e < order_

  std::map<int, GaussRat> coeffs_;
  int order_;
};

std::ostream& operator<<(std::ostream& os, const XSeries& s);

/// Compares all coefficients at x-exponents <= 2*n_q; absent when they all
/// agree, otherwise the smallest disagreeing exponent. Both series must have
/// order >= 2*n_q + 1 (InsufficientOrderError).
std::optional<Mismatch> equal_up_to(const XSeries& a, const XSeries& b,
                                    int n_q);

enum class DivisibilityStatus { pass, not_divisible, non_integral };

/// Outcome of a coefficient divisibility scan. On failure `xexp` and `coeff`
/// identify the first offending coefficient; a non-integer coefficient is
/// reported as non_integral, an integer one not divisible by the modulus as
/// not_divisible.
struct DivisibilityReport {
  DivisibilityStatus status = DivisibilityStatus::pass;
  long modulus = 0;
  int xexp = 0;
  GaussRat coeff;

  bool pass() const { return status == DivisibilityStatus::pass; }
};

/// Scans coefficients at x-exponents <= 2*n_q for integrality and
/// divisibility by m. Requires order(a) >= 2*n_q + 1 and m >= 1.
DivisibilityReport divisibility_report(const XSeries& a, long m, int n_q);

} // namespace qsw

#endif
