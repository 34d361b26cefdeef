#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sspart {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Index i holds the coefficient of q^i; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coefficients);

  static QPolynomial constant(BigInt c);
  /// c * q^power
  static QPolynomial monomial(std::size_t power, BigInt c = 1);

  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t power) const;
  BigInt at_one() const;

  /// Quotient of an exact division. Throws inexact_division if the remainder
  /// is nonzero or a quotient coefficient is not an integer, and
  /// invalid_argument for a zero divisor.
  QPolynomial divide_exact(const QPolynomial& divisor) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// "1 + q + 2*q^3"; "0" for the zero polynomial.
std::string to_string(const QPolynomial& p);

}  // namespace sspart
