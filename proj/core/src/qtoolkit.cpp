#include "qsw/qtoolkit.hpp"

#include <algorithm>

#include "qsw/errors.hpp"

namespace qsw {

namespace {

int working_order(int order_q) {
  if (order_q < 0) throw DomainError("truncation order must be >= 0");
  return 2 * order_q + 1;
}

// ceil(a/b) for a >= 0, b > 0
int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

std::string QMonomial::str() const {
  if (is_zero()) return "0";
  std::string pow;
  if (xexp == 1)
    pow = "q2";
  else if (xexp == 2)
    pow = "q";
  else if (xexp != 0)
    pow = (xexp % 2 == 0) ? "q^" + std::to_string(xexp / 2)
                          : "q2^" + std::to_string(xexp);

  std::string cs;
  if (coeff.is_real()) {
    cs = coeff.re().get_str();
  } else if (coeff.re() == 0) {
    if (coeff.im() == 1)
      cs = "i";
    else if (coeff.im() == -1)
      cs = "-i";
    else
      cs = coeff.im().get_str() + "*i";
  } else {
    std::string im;
    if (coeff.im() == 1)
      im = "+i";
    else if (coeff.im() == -1)
      im = "-i";
    else {
      im = coeff.im().get_str() + "*i";
      if (coeff.im() > 0) im.insert(0, "+");
    }
    cs = "(" + coeff.re().get_str() + im + ")";
  }
  if (pow.empty()) return cs;
  if (cs == "1") return pow;
  if (cs == "-1") return "-" + pow;
  return cs + "*" + pow;
}

XSeries qpoch(const QMonomial& a, int ratio_xexp, std::optional<int> n,
              int order_q) {
  const int W = working_order(order_q);
  if (n && *n < 0) throw DomainError("Pochhammer length must be >= 0");
  if (a.is_zero() || (n && *n == 0)) return XSeries::one(W);
  if (!n && ratio_xexp <= 0)
    throw NonTerminatingProductError(
        "infinite Pochhammer product needs a positive ratio exponent");

  // Laurent factors cost truncation order; pre-pay it so every coefficient
  // below W stays exact.
  long slack = 0;
  if (a.xexp < 0) {
    const int steps = ceil_div(-a.xexp, ratio_xexp > 0 ? ratio_xexp : 1);
    for (int k = 0; k < steps; ++k) {
      if (n && k >= *n) break;
      const long m = a.xexp + static_cast<long>(k) * ratio_xexp;
      if (m < 0) slack += -m;
    }
  }

  XSeries res = XSeries::one(W + static_cast<int>(slack));
  for (int k = 0;; ++k) {
    if (n && k >= *n) break;
    const int m = a.xexp + k * ratio_xexp;
    if (res.low_exponent() + m >= res.order()) break; // factor is 1 + O(x^order)
    res = res.mul_binomial(a.coeff, m);
  }
  return res.capped(W);
}

XSeries qpoch(const XSeries& a, int ratio_xexp, std::optional<int> n,
              int order_q) {
  const int W = working_order(order_q);
  if (n && *n < 0) throw DomainError("Pochhammer length must be >= 0");
  if (n && *n == 0) return XSeries::one(W);

  // A single-term series known through W behaves like an exact monomial.
  if (a.coeffs().size() <= 1 && a.order() >= W) {
    QMonomial mono = a.is_zero() ? QMonomial()
                                 : QMonomial(a.coeffs().begin()->second,
                                             a.coeffs().begin()->first);
    return qpoch(mono, ratio_xexp, n, order_q);
  }
  if (!n && !a.is_zero() && ratio_xexp <= 0)
    throw NonTerminatingProductError(
        "infinite Pochhammer product needs a positive ratio exponent");

  XSeries res = XSeries::one(W);
  const int la = a.low_exponent();
  for (int k = 0;; ++k) {
    if (n && k >= *n) break;
    if (!n && res.low_exponent() + la + k * ratio_xexp >= res.order()) break;
    XSeries factor = XSeries::one(a.order() + k * ratio_xexp) -
                     a.scaled_shift(GaussRat(1), k * ratio_xexp);
    res = res * factor;
    if (res.is_zero() && n) {
      // The remaining factors cannot resurrect a zero prefix.
      break;
    }
  }
  return res.capped(W);
}

HypergeoSpec cancel_parameters(HypergeoSpec spec) {
  for (auto it = spec.lower.begin(); it != spec.lower.end();) {
    auto match = std::find(spec.upper.begin(), spec.upper.end(), *it);
    if (match != spec.upper.end()) {
      spec.upper.erase(match);
      it = spec.lower.erase(it);
    } else {
      ++it;
    }
  }
  return spec;
}

namespace {

// Shared summation core. `forced_terms`, when set, bounds the sum to that
// many terms (the little q-Jacobi polynomial bound) independent of any
// terminating parameter.
XSeries phi_sum(const HypergeoSpec& s, int order_q,
                std::optional<int> forced_terms) {
  const int W = working_order(order_q);
  const int base = s.base_xexp;
  if (base <= 0)
    throw DomainError("hypergeometric base must be a positive power of x");

  // Last term index, from an exact q^-N upper parameter or the forced bound.
  std::optional<int> bound;
  if (forced_terms) bound = *forced_terms - 1;
  for (const auto& a : s.upper) {
    if (a.coeff.is_one() && a.xexp <= 0 && a.xexp % base == 0) {
      const int N = -a.xexp / base;
      if (!bound || N < *bound) bound = N;
    }
  }

  const XSeries& z = s.argument;
  if (!bound && !z.is_zero() && z.low_exponent() <= 0)
    throw NonTerminatingSeriesError(
        "series does not terminate and its argument has no positive lowest "
        "exponent");

  // First step past which every Pochhammer factor has nonnegative low
  // exponent.
  int j_safe = 0;
  for (const auto& p : s.upper)
    if (!p.is_zero() && p.xexp < 0)
      j_safe = std::max(j_safe, ceil_div(-p.xexp, base));
  for (const auto& p : s.lower)
    if (!p.is_zero() && p.xexp < 0)
      j_safe = std::max(j_safe, ceil_div(-p.xexp, base));

  // Order slack consumed by Laurent upper factors (and a Laurent argument in
  // the terminating case).
  long slack = 0;
  {
    const int max_step = bound ? *bound : j_safe;
    for (const auto& a : s.upper) {
      if (a.is_zero() || a.xexp >= 0) continue;
      for (int j = 0; j < max_step; ++j) {
        const long m = a.xexp + static_cast<long>(j) * base;
        if (m < 0) slack += -m;
      }
    }
    if (bound && !z.is_zero() && z.low_exponent() < 0)
      slack += static_cast<long>(*bound) * (-z.low_exponent());
  }

  XSeries term = XSeries::one(W + static_cast<int>(slack));
  XSeries acc(term.order());
  const long hard_cap =
      static_cast<long>(j_safe) + 2L * (W + slack) + 16; // defensive
  for (long j = 0;; ++j) {
    acc += term;
    if (bound && j >= *bound) break;
    if (!bound && j >= j_safe && term.low_exponent() >= W) break;
    if (term.is_zero()) break;
    if (j > hard_cap)
      throw NonTerminatingSeriesError("summation failed to stabilize");

    for (const auto& a : s.upper)
      if (!a.is_zero())
        term = term.mul_binomial(a.coeff, a.xexp + static_cast<int>(j) * base);
    term = term.div_binomial(GaussRat(1), base * (static_cast<int>(j) + 1));
    for (const auto& b : s.lower) {
      if (b.is_zero()) continue;
      const int m = b.xexp + static_cast<int>(j) * base;
      if (b.coeff.is_one() && m == 0)
        throw DivisionByZeroTermError(
            "lower parameter " + b.str() + " vanishes in term " +
            std::to_string(j + 1));
      term = term.div_binomial(b.coeff, m);
    }
    term = term * z;
  }
  return acc.capped(W);
}

} // namespace

XSeries phi(const HypergeoSpec& spec, int order_q) {
  if (spec.upper.size() != spec.lower.size() + 1)
    throw DomainError(
        "an (r+1)phi_r needs exactly one more upper than lower parameter");
  return phi_sum(cancel_parameters(spec), order_q, std::nullopt);
}

XSeries little_q_jacobi(int n, const XSeries& x_arg, const QMonomial& alpha,
                        const QMonomial& beta, int order_q) {
  if (n < 0) throw DomainError("polynomial index must be >= 0");
  HypergeoSpec s;
  s.base_xexp = 2;
  s.upper = {QMonomial(GaussRat(1), -2 * n),
             alpha * beta * QMonomial::q_power(n + 1)};
  s.lower = {alpha * QMonomial::q_power(1)};
  s.argument = x_arg.scaled_shift(GaussRat(1), 2);
  return phi_sum(cancel_parameters(std::move(s)), order_q, n + 1);
}

XSeries little_jacobi_special(int n, int order_q) {
  if (n < 0) throw DomainError("polynomial index must be >= 0");
  const int W = working_order(order_q);
  XSeries term = XSeries::one(W);
  XSeries acc = term;
  for (int j = 1; j <= 2 * n; ++j) {
    if (term.low_exponent() >= W) break; // all later terms past truncation
    term = term.mul_binomial(GaussRat(-1), 2 * (j - 1)); // * (1 + q^(j-1))
    term = term.scaled_shift(GaussRat(-1), 2);           // * (-q)
    term = term.div_binomial(GaussRat(1), 2 * j);        // / (1 - q^j)
    acc += term;
  }
  return acc;
}

} // namespace qsw
