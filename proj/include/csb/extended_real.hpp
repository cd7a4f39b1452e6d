#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace csb {

// A point on the extended real line: -inf < every finite value < +inf.
// The infinite endpoints are symbolic tags, never floating sentinels, and
// no arithmetic is defined on them. Generalized quantile functions take
// values here.
class ExtendedReal {
 public:
  static ExtendedReal neg_inf() { return ExtendedReal(Tag::NegInf, 0.0); }
  static ExtendedReal pos_inf() { return ExtendedReal(Tag::PosInf, 0.0); }
  static ExtendedReal finite(double v) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ExtendedReal::finite: value is not finite");
    }
    return ExtendedReal(Tag::Finite, v);
  }

  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_neg_inf() const { return tag_ == Tag::NegInf; }
  bool is_pos_inf() const { return tag_ == Tag::PosInf; }

  // Only valid for finite values.
  double value() const {
    if (!is_finite()) {
      throw std::logic_error("ExtendedReal::value: not finite");
    }
    return v_;
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != Tag::Finite || a.v_ == b.v_;
  }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.tag_ == Tag::Finite && a.v_ < b.v_;
  }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return a < b || a == b;
  }
  friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }
  friend bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.is_neg_inf()) return os << "-inf";
    if (x.is_pos_inf()) return os << "+inf";
    return os << x.v_;
  }

 private:
  enum class Tag { NegInf, Finite, PosInf };

  ExtendedReal(Tag t, double v) : tag_(t), v_(v) {}
  int rank() const { return tag_ == Tag::NegInf ? 0 : (tag_ == Tag::Finite ? 1 : 2); }

  Tag tag_;
  double v_;
};

}  // namespace csb
