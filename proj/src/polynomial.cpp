#include "strongcommon/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace strongcommon {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Rational Polynomial::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

Rational eval(const Polynomial& poly, const Rational& x) {
  Rational acc = 0;
  const auto& c = poly.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<Polynomial> divide_by_p_power(const Polynomial& poly, std::size_t k) {
  const auto& c = poly.coeffs();
  if (poly.is_zero()) return Polynomial{};
  if (c.size() <= k) return std::nullopt;
  if (std::any_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k),
                  [](const Rational& r) { return r != 0; })) {
    return std::nullopt;
  }
  return Polynomial(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

std::optional<std::size_t> lowest_nonzero_index(const Polynomial& poly) {
  const auto& c = poly.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) return j;
  }
  return std::nullopt;
}

std::string to_string(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = poly.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    Rational magnitude = abs(c[j]);
    if (first) {
      if (c[j] < 0) out << '-';
    } else {
      out << (c[j] < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = magnitude == 1;
    if (j == 0 || !unit) out << magnitude.get_str();
    if (j > 0) {
      if (!unit) out << '*';
      out << 'p';
      if (j > 1) out << '^' << j;
    }
  }
  return out.str();
}

Polynomial p_minus_one() { return Polynomial({-1, 1}); }

Polynomial two_p_minus_one() { return Polynomial({-1, 2}); }

}  // namespace strongcommon
