#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "mskit/rational.hpp"

namespace mskit {

enum class Ord { Less, Equal, Greater };

// Absolute tolerance used when at least one operand of a comparison is an
// inexact real. Exact rationals always compare exactly.
double& comparison_tolerance();

// A parameter value: exact rational, inexact real, or +infinity.
// Arithmetic stays rational as long as every operand is rational and falls
// back to double otherwise. Comparisons against reals use the global
// tolerance band and report that they did (fuzzy flag), so that verdicts can
// note proximity to a breaking line.
class Scalar {
public:
  Scalar() : kind_(Kind::Rat), rat_(0) {}
  Scalar(int v) : kind_(Kind::Rat), rat_(v) {}
  Scalar(std::int64_t v) : kind_(Kind::Rat), rat_(v) {}
  Scalar(const Rational& r) : kind_(Kind::Rat), rat_(r) {}
  explicit Scalar(double v) : kind_(Kind::Real), real_(v) {
    if (std::isinf(v) && v > 0) kind_ = Kind::Inf;
    if (std::isnan(v)) throw std::domain_error("NaN parameter");
  }

  static Scalar infinity() {
    Scalar s;
    s.kind_ = Kind::Inf;
    return s;
  }
  static Scalar ratio(std::int64_t num, std::int64_t den) { return Scalar(Rational(num, den)); }

  bool is_inf() const { return kind_ == Kind::Inf; }
  bool is_rational() const { return kind_ == Kind::Rat; }
  bool is_real() const { return kind_ == Kind::Real; }

  const Rational& rat() const {
    if (kind_ != Kind::Rat) throw std::logic_error("not a rational");
    return rat_;
  }

  double to_double() const {
    switch (kind_) {
      case Kind::Rat: return rat_.to_double();
      case Kind::Real: return real_;
      case Kind::Inf: return std::numeric_limits<double>::infinity();
    }
    return 0;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ + b.rat_);
    return Scalar(a.to_double() + b.to_double());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_inf() && b.is_inf()) throw std::domain_error("inf - inf");
    if (a.is_inf()) return infinity();
    if (b.is_inf()) throw std::domain_error("subtracting infinity");
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ - b.rat_);
    return Scalar(a.to_double() - b.to_double());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_inf() || b.is_inf()) {
      if (a.is_zero() || b.is_zero()) throw std::domain_error("0 * inf");
      if (a.sign() < 0 || b.sign() < 0) throw std::domain_error("negative * inf");
      return infinity();
    }
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ * b.rat_);
    return Scalar(a.to_double() * b.to_double());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_inf()) return Scalar(0);
    if (a.is_inf()) return infinity();
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ / b.rat_);
    return Scalar(a.to_double() / b.to_double());
  }
  Scalar operator-() const {
    if (is_inf()) throw std::domain_error("negating infinity");
    if (is_rational()) return Scalar(-rat_);
    return Scalar(-real_);
  }
  Scalar abs() const {
    if (is_inf()) return *this;
    if (is_rational()) return Scalar(rat_.abs());
    return Scalar(std::fabs(real_));
  }
  Scalar reciprocal() const {
    if (is_inf()) return Scalar(0);
    return Scalar(1) / *this;
  }

  bool is_zero() const { return is_rational() ? rat_.is_zero() : (kind_ == Kind::Real && real_ == 0.0); }
  int sign() const {
    if (is_inf()) return 1;
    double v = to_double();
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
  }

  // Three-way comparison. `fuzzy` is set when the answer relied on the
  // tolerance band (inexact operand within tolerance of the other value).
  static Ord compare(const Scalar& a, const Scalar& b, bool* fuzzy = nullptr) {
    if (fuzzy) *fuzzy = false;
    if (a.is_inf() && b.is_inf()) return Ord::Equal;
    if (a.is_inf()) return Ord::Greater;
    if (b.is_inf()) return Ord::Less;
    if (a.is_rational() && b.is_rational()) {
      if (a.rat_ == b.rat_) return Ord::Equal;
      return a.rat_ < b.rat_ ? Ord::Less : Ord::Greater;
    }
    double x = a.to_double(), y = b.to_double();
    if (std::fabs(x - y) <= comparison_tolerance()) {
      if (fuzzy) *fuzzy = (x != y);
      return Ord::Equal;
    }
    return x < y ? Ord::Less : Ord::Greater;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == Ord::Equal; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != Ord::Equal; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) == Ord::Less; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) != Ord::Greater; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) == Ord::Greater; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) != Ord::Less; }

  static Scalar min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }
  static Scalar max(const Scalar& a, const Scalar& b) { return a >= b ? a : b; }

  // Accepts "inf", "a/b", plain integers (exact) and decimal/scientific
  // literals (inexact, tolerance band engaged).
  static Scalar parse(const std::string& text);

  std::string str() const {
    switch (kind_) {
      case Kind::Rat: return rat_.str();
      case Kind::Real: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", real_);
        return buf;
      }
      case Kind::Inf: return "inf";
    }
    return {};
  }

private:
  enum class Kind { Rat, Real, Inf };
  Kind kind_;
  Rational rat_;
  double real_ = 0.0;
};

}  // namespace mskit
