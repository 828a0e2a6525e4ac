#include "qsw/series.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "qsw/errors.hpp"

namespace qsw {

void XSeries::set(int e, GaussRat c) {
  if (c.is_zero()) return;
  if (e >= order_)
    throw DomainError("coefficient exponent at or above truncation order");
  coeffs_.emplace(e, std::move(c));
}

XSeries XSeries::monomial(GaussRat c, int xexp, int order) {
  XSeries s(order);
  if (c.is_zero()) return s;
  if (order <= xexp)
    throw DomainError("monomial exponent must lie below the truncation order");
  s.coeffs_.emplace(xexp, std::move(c));
  return s;
}

GaussRat XSeries::coeff_x(int e) const {
  if (e >= order_)
    throw InsufficientOrderError("coefficient at x^" + std::to_string(e) +
                                 " is beyond truncation order " +
                                 std::to_string(order_));
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? GaussRat() : it->second;
}

XSeries XSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw DomainError("cannot extend a series past its truncation order");
  XSeries r(new_order);
  for (const auto& [e, c] : coeffs_) {
    if (e >= new_order) break;
    r.coeffs_.emplace(e, c);
  }
  return r;
}

XSeries XSeries::operator-() const {
  XSeries r(order_);
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  XSeries r(std::min(a.order_, b.order_));
  for (const auto& [e, c] : a.coeffs_) {
    if (e >= r.order_) break;
    r.coeffs_.emplace(e, c);
  }
  for (const auto& [e, c] : b.coeffs_) {
    if (e >= r.order_) break;
    auto [it, inserted] = r.coeffs_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) { return a + (-b); }

XSeries operator*(const XSeries& a, const XSeries& b) {
  const int la = a.low_exponent(), lb = b.low_exponent();
  const int order = std::min(a.order_ + lb, b.order_ + la);
  XSeries r(order);
  if (a.is_zero() || b.is_zero()) return r;

  // Dense accumulation over the reachable exponent window.
  const int base = la + lb;
  if (order <= base) return r;
  std::vector<GaussRat> acc(static_cast<std::size_t>(order - base));
  for (const auto& [ea, ca] : a.coeffs_) {
    const int room = order - ea;
    for (const auto& [eb, cb] : b.coeffs_) {
      if (eb >= room) break;
      acc[static_cast<std::size_t>(ea + eb - base)] += ca * cb;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!acc[k].is_zero())
      r.coeffs_.emplace(base + static_cast<int>(k), std::move(acc[k]));
  return r;
}

XSeries XSeries::inverse() const {
  if (is_zero())
    throw ZeroSeriesError("inverse of a series with no nonzero coefficient");
  const int l = low_exponent();
  const int rel = order_ - l; // determined length past the lowest term
  // Reciprocal of the unit u = x^-l * this, then shift back.
  std::vector<GaussRat> u(static_cast<std::size_t>(rel));
  for (const auto& [e, c] : coeffs_) u[static_cast<std::size_t>(e - l)] = c;
  std::vector<GaussRat> inv(static_cast<std::size_t>(rel));
  inv[0] = GaussRat(1) / u[0];
  for (int k = 1; k < rel; ++k) {
    GaussRat s;
    for (int j = 1; j <= k; ++j) {
      if (!u[static_cast<std::size_t>(j)].is_zero())
        s += u[static_cast<std::size_t>(j)] *
             inv[static_cast<std::size_t>(k - j)];
    }
    inv[static_cast<std::size_t>(k)] = -s / u[0];
  }
  XSeries r(order_ - 2 * l);
  for (int k = 0; k < rel; ++k)
    r.set(-l + k, std::move(inv[static_cast<std::size_t>(k)]));
  return r;
}

XSeries XSeries::scaled_shift(const GaussRat& c, int k) const {
  XSeries r(order_ + k);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e + k, c * v);
  return r;
}

XSeries XSeries::mul_binomial(const GaussRat& c, int m) const {
  if (m == 0) return scaled_shift(GaussRat(1) - c, 0);
  XSeries shifted = scaled_shift(-c, m);
  // this + (-c x^m)*this, with the exact-factor order order_+min(0,m).
  XSeries r(order_ + std::min(0, m));
  for (const auto& [e, v] : coeffs_) {
    if (e >= r.order_) break;
    r.coeffs_.emplace(e, v);
  }
  for (const auto& [e, v] : shifted.coeffs()) {
    if (e >= r.order_) break;
    auto [it, inserted] = r.coeffs_.emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

XSeries XSeries::div_binomial(const GaussRat& c, int m) const {
  if (m == 0) {
    if (c.is_one()) throw ZeroSeriesError("division by the zero binomial");
    return scaled_shift(GaussRat(1) / (GaussRat(1) - c), 0);
  }
  if (m < 0) {
    // 1/(1 - c x^m) = (-1/c) x^-m / (1 - (1/c) x^-m)
    GaussRat cinv = GaussRat(1) / c;
    return div_binomial(cinv, -m).scaled_shift(-cinv, -m);
  }
  if (is_zero()) return XSeries(order_);
  // b[e] = a[e] + c*b[e-m], ascending from the low exponent.
  const int lo = low_exponent();
  const int len = order_ - lo;
  std::vector<GaussRat> buf(static_cast<std::size_t>(len));
  for (const auto& [e, v] : coeffs_) buf[static_cast<std::size_t>(e - lo)] = v;
  for (int k = m; k < len; ++k) {
    const auto& prev = buf[static_cast<std::size_t>(k - m)];
    if (!prev.is_zero()) buf[static_cast<std::size_t>(k)] += c * prev;
  }
  XSeries r(order_);
  for (int k = 0; k < len; ++k)
    r.set(lo + k, std::move(buf[static_cast<std::size_t>(k)]));
  return r;
}

namespace {

// x-exponent display: "", "q", "q^3", "q^(1/2)", "q^(-3/2)".
std::string power_str(int e) {
  if (e == 0) return "";
  if (e % 2 == 0) {
    int n = e / 2;
    if (n == 1) return "q";
    return "q^" + std::to_string(n);
  }
  std::string frac = std::to_string(e) + "/2";
  return "q^(" + frac + ")";
}

} // namespace

std::string XSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::string cs = c.str();
    bool negative = (c.im() == 0 && c.re() < 0) || (c.re() == 0 && c.im() < 0);
    if (negative) cs.erase(0, 1);
    // Two-part Gaussian values need parentheses next to a power.
    bool composite = cs.find_first_of("+-") != std::string::npos;
    std::string pow = power_str(e);
    std::string term;
    if (pow.empty()) {
      term = composite ? "(" + cs + ")" : cs;
    } else if (!composite && cs == "1") {
      term = pow;
    } else {
      term = (composite ? "(" + cs + ")" : cs) + " * " + pow;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const XSeries& s) {
  return os << s.str();
}

std::optional<Mismatch> equal_up_to(const XSeries& a, const XSeries& b,
                                    int n_q) {
  const int bound = 2 * n_q;
  if (a.order() < bound + 1 || b.order() < bound + 1)
    throw InsufficientOrderError(
        "comparison through q^" + std::to_string(n_q) +
        " needs both orders >= " + std::to_string(bound + 1) + " (have " +
        std::to_string(a.order()) + ", " + std::to_string(b.order()) + ")");
  auto ia = a.coeffs().begin(), ea = a.coeffs().end();
  auto ib = b.coeffs().begin(), eb = b.coeffs().end();
  while (true) {
    int na = (ia != ea && ia->first <= bound) ? ia->first : bound + 1;
    int nb = (ib != eb && ib->first <= bound) ? ib->first : bound + 1;
    int e = std::min(na, nb);
    if (e > bound) return std::nullopt;
    GaussRat ca = (na == e) ? (ia++)->second : GaussRat();
    GaussRat cb = (nb == e) ? (ib++)->second : GaussRat();
    if (ca != cb) return Mismatch{e, ca, cb};
  }
}

DivisibilityReport divisibility_report(const XSeries& a, long m, int n_q) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  const int bound = 2 * n_q;
  if (a.order() < bound + 1)
    throw InsufficientOrderError("divisibility scan through q^" +
                                 std::to_string(n_q) + " needs order >= " +
                                 std::to_string(bound + 1));
  DivisibilityReport rep;
  rep.modulus = m;
  for (const auto& [e, c] : a.coeffs()) {
    if (e > bound) break;
    if (!c.is_integer()) {
      rep.status = DivisibilityStatus::non_integral;
      rep.xexp = e;
      rep.coeff = c;
      return rep;
    }
    if (!c.divisible_by(m)) {
      rep.status = DivisibilityStatus::not_divisible;
      rep.xexp = e;
      rep.coeff = c;
      return rep;
    }
  }
  return rep;
}

} // namespace qsw
