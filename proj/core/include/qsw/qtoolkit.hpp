#ifndef QSW_QTOOLKIT_HPP
#define QSW_QTOOLKIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsw/series.hpp"

namespace qsw {

/// Parameter monomial coeff * x^xexp = coeff * q^(xexp/2). Canonical form:
/// a zero coefficient forces xexp = 0.
struct QMonomial {
  GaussRat coeff;
  int xexp = 0;

  QMonomial() = default;
  QMonomial(GaussRat c, int e) : coeff(std::move(c)), xexp(e) {
    if (coeff.is_zero()) xexp = 0;
  }

  /// q^n as a monomial (x-exponent 2n).
  static QMonomial q_power(int n) { return QMonomial(GaussRat(1), 2 * n); }
  static QMonomial constant(GaussRat c) { return QMonomial(std::move(c), 0); }

  bool is_zero() const { return coeff.is_zero(); }
  bool is_one() const { return coeff.is_one() && xexp == 0; }

  QMonomial operator*(const QMonomial& o) const {
    return QMonomial(coeff * o.coeff, xexp + o.xexp);
  }

  friend bool operator==(const QMonomial& a, const QMonomial& b) {
    return a.coeff == b.coeff && a.xexp == b.xexp;
  }

  /// The monomial as a series truncated at `order`.
  XSeries series(int order) const {
    return XSeries::monomial(coeff, xexp, order);
  }

  /// Expression-language form, reparseable: "q", "-q", "i*q2", "(1+i)*q^2".
  std::string str() const;
};

/// A basic hypergeometric series (r+1)phi_r: `upper` must hold exactly one
/// more parameter than `lower`; `base_xexp` is the x-exponent of the base
/// (2 for base q, 4 for base q^2); `argument` is the series z.
struct HypergeoSpec {
  std::vector<QMonomial> upper;
  std::vector<QMonomial> lower;
  XSeries argument;
  int base_xexp = 2;
};

/// Marker for infinite q-Pochhammer products.
inline constexpr std::optional<int> poch_inf = std::nullopt;

/// The q-Pochhammer symbol (a; x^ratio_xexp)_n as a truncated series;
/// coefficients are exact through q^order_q. `n = poch_inf` gives the
/// infinite product, which requires ratio_xexp > 0 for a nonzero `a`
/// (NonTerminatingProductError otherwise).
XSeries qpoch(const XSeries& a, int ratio_xexp, std::optional<int> n,
              int order_q);

/// Convenience overload for monomial first arguments.
XSeries qpoch(const QMonomial& a, int ratio_xexp, std::optional<int> n,
              int order_q);

/// Removes pairs of identical parameters appearing in both the upper and the
/// lower list (exact coefficient and exponent match, one pair per occurrence).
HypergeoSpec cancel_parameters(HypergeoSpec spec);

/// Evaluates the series sum_j prod(a_i; b)_j / [(b; b)_j prod(b_i; b)_j] z^j
/// exactly through q^order_q. Parameters are cancelled first. The sum must
/// either terminate (an upper parameter equal to q^-N after cancellation) or
/// have an argument with positive lowest exponent (NonTerminatingSeriesError
/// otherwise). A lower parameter that annihilates a Pochhammer factor inside
/// the summation range raises DivisionByZeroTermError.
XSeries phi(const HypergeoSpec& spec, int order_q);

/// Little q-Jacobi polynomial p_n(x; alpha, beta : q): the terminating
/// ₂φ₁ with upper parameters q^-n and alpha*beta*q^(n+1), lower parameter
/// alpha*q and argument q*x, summed over exactly n+1 terms after parameter
/// cancellation.
XSeries little_q_jacobi(int n, const XSeries& x_arg, const QMonomial& alpha,
                        const QMonomial& beta, int order_q);

/// The special value p_2n(-1; q^(-2n-1), -1 : q) computed directly as
/// sum_{j=0}^{2n} (-1; q)_j / (q; q)_j * (-q)^j.
XSeries little_jacobi_special(int n, int order_q);

} // namespace qsw

#endif
