#include "sspart/qpolynomial.hpp"

#include <algorithm>

#include "sspart/error.hpp"

namespace sspart {

QPolynomial::QPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial QPolynomial::constant(BigInt c) {
  return QPolynomial(std::vector<BigInt>{std::move(c)});
}

QPolynomial QPolynomial::monomial(std::size_t power, BigInt c) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return QPolynomial(std::move(coeffs));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt{0};
}

BigInt QPolynomial::at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw Error(ErrorKind::invalid_argument, "division by the zero polynomial");
  }
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw Error(ErrorKind::inexact_division,
                "(" + to_string(*this) + ") / (" + to_string(divisor) + ")");
  }
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) {
      throw Error(ErrorKind::inexact_division,
                  "(" + to_string(*this) + ") / (" + to_string(divisor) +
                      "): non-integral quotient coefficient");
    }
    quot[k] = top / lead;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= quot[k] * divisor.coeffs_[i];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw Error(ErrorKind::inexact_division,
                "(" + to_string(*this) + ") / (" + to_string(divisor) +
                    "): nonzero remainder");
  }
  return QPolynomial(std::move(quot));
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace sspart
