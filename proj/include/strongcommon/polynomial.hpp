#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strongcommon/rational.hpp"

namespace strongcommon {

// Dense univariate polynomial in the formal variable p with exact rational
// coefficients. coeffs()[j] is the coefficient of p^j. Trailing zeros are
// always stripped, so the zero polynomial has no coefficients and equality is
// structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  // The polynomial p.
  static Polynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of p^j; zero beyond the degree.
  Rational coeff(std::size_t j) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// Exact Horner evaluation.
Rational eval(const Polynomial& poly, const Rational& x);

// Returns poly / p^k when p^k divides poly (the zero polynomial is divisible by
// every power), std::nullopt otherwise.
std::optional<Polynomial> divide_by_p_power(const Polynomial& poly, std::size_t k);

// Index of the lowest nonzero coefficient; std::nullopt for zero.
std::optional<std::size_t> lowest_nonzero_index(const Polynomial& poly);

// Human-readable form such as "p^4 - p^3" or "1/4 - 1/2*p + 1/2*p^2".
std::string to_string(const Polynomial& poly);

// (p - 1) and (2p - 1), the two building blocks of the U_p kernel.
Polynomial p_minus_one();
Polynomial two_p_minus_one();

}  // namespace strongcommon
