#include "qsw/gaussrat.hpp"

#include <ostream>

namespace qsw {

namespace {

// "2i", "-i", "1/3i"; sign always emitted when lead_sign is set.
std::string imag_str(const Rat& im, bool lead_sign) {
  std::string s;
  if (im == 1) {
    s = lead_sign ? "+i" : "i";
  } else if (im == -1) {
    s = "-i";
  } else {
    s = im.get_str();
    if (lead_sign && im > 0) s.insert(0, "+");
    s += "i";
  }
  return s;
}

} // namespace

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  if (im_ == 0) return re_.get_str();
  if (re_ == 0) return imag_str(im_, false);
  return re_.get_str() + imag_str(im_, true);
}

std::ostream& operator<<(std::ostream& os, const GaussRat& v) {
  return os << v.str();
}

} // namespace qsw
