#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sympsum {

/// Sum exponent p in [1, inf]. The infinite case is a distinguished value
/// (IEEE infinity, tested with is_inf()), never approximated by a large float;
/// every formula that would touch it branches first.
class Exponent {
 public:
  explicit Exponent(double p) : p_(p) {
    if (!(p >= 1.0))  // also rejects NaN
      throw std::domain_error("Exponent: p must be in [1, inf], got " + std::to_string(p));
  }

  static Exponent inf() noexcept {
    Exponent e;
    e.p_ = std::numeric_limits<double>::infinity();
    return e;
  }

  bool is_inf() const noexcept { return std::isinf(p_); }

  /// Numeric value; +infinity for the distinguished case.
  double value() const noexcept { return p_; }

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Exponent& a, const Exponent& b) noexcept { return !(a == b); }

  /// "inf" or a shortest-form decimal ("2", "1.5").
  std::string str() const;

  /// Inverse of str(); accepts any finite decimal >= 1 or the literal "inf".
  static Exponent parse(const std::string& text);

 private:
  Exponent() = default;
  double p_ = 2.0;
};

}  // namespace sympsum
