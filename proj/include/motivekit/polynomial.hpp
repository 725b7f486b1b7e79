#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "motivekit/numeric.hpp"

namespace motivekit {

// Dense univariate polynomial in t with exact integer coefficients,
// stored ascending by power.  Canonical form: the zero polynomial has an
// empty coefficient list, otherwise the last entry is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one();
  static Polynomial constant(Int c);
  // c * t^deg
  static Polynomial monomial(int deg, Int c = 1);
  // t^a - 1
  static Polynomial power_minus_one(int a);
  // t^a + 1
  static Polynomial power_plus_one(int a);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int i) const;
  bool non_negative() const;

  Int operator()(const Int& x) const;
  Int value_at_one() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

  // Human-readable form, e.g. "1 + 2t + 2t^2 + t^3".
  std::string str() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// True iff the coefficient list reads the same in both directions.
bool is_palindromic(const Polynomial& p);

// Quotient r with q*r == p exactly over the integers.
// Throws errc::not_divisible if no such r exists.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

// p(t^m) for m >= 1.
Polynomial substitute_power(const Polynomial& p, int m);

// Formal product of factors (t^a - 1) and (t^a + 1) divided by a product of
// the same shapes.  Expandable only when the multiplied-out denominator
// divides the multiplied-out numerator over the integers; intermediate
// pairings are never formed.
struct RationalProduct {
  std::vector<int> num_minus;  // exponents a of numerator factors (t^a - 1)
  std::vector<int> num_plus;   // exponents a of numerator factors (t^a + 1)
  std::vector<int> den_minus;
  std::vector<int> den_plus;
};

Polynomial expand_rational_product(const RationalProduct& rp);

}  // namespace motivekit
