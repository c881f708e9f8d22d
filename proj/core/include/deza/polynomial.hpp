#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace deza {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial over the integers, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial monomial_root(const BigInt& r);   // x - r
  static IntPolynomial quadratic_surd(const BigInt& d);  // x^2 - d

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(c_.size()) - 1;
  }
  const BigInt& coefficient(std::size_t i) const;
  BigInt evaluate(const BigInt& x) const;

  /// Exact division by (x - r); returns false and leaves *this unchanged
  /// when (x - r) does not divide.
  bool divide_by_root(const BigInt& r);
  /// Exact division by (x^2 - d); same contract.
  bool divide_by_quadratic(const BigInt& d);

  IntPolynomial operator*(const IntPolynomial& o) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "x^3 - 2x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace deza
