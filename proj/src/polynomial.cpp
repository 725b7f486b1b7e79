#include "motivekit/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace motivekit {

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::one() { return constant(1); }

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::monomial(int deg, Int c) {
  if (deg < 0) fail(errc::invalid_argument, "monomial degree must be non-negative");
  Polynomial p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(deg) + 1, Int(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

Polynomial Polynomial::power_minus_one(int a) {
  if (a < 1) fail(errc::invalid_argument, "exponent must be >= 1");
  Polynomial p = monomial(a);
  p.coeffs_[0] = -1;
  return p;
}

Polynomial Polynomial::power_plus_one(int a) {
  if (a < 1) fail(errc::invalid_argument, "exponent must be >= 1");
  Polynomial p = monomial(a);
  p.coeffs_[0] = 1;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool Polynomial::non_negative() const {
  for (const Int& c : coeffs_)
    if (c < 0) return false;
  return true;
}

Int Polynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int Polynomial::value_at_one() const {
  Int acc = 0;
  for (const Int& c : coeffs_) acc += c;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) {
      os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

bool is_palindromic(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (c[i] != c[n - 1 - i]) return false;
  return true;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) fail(errc::invalid_argument, "division by the zero polynomial");
  if (p.is_zero()) return Polynomial();
  if (p.degree() < q.degree())
    fail(errc::not_divisible, "degree of dividend below degree of divisor");

  std::vector<Int> rem = p.coeffs();
  const auto& div = q.coeffs();
  const Int& lead = div.back();
  const int dq = q.degree();
  std::vector<Int> quot(static_cast<std::size_t>(p.degree() - dq) + 1, Int(0));

  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    Int& top = rem[static_cast<std::size_t>(i + dq)];
    if (top == 0) continue;
    if (top % lead != 0)
      fail(errc::not_divisible, "leading coefficient not divisible at t^" + std::to_string(i + dq));
    Int c = top / lead;
    for (int j = 0; j <= dq; ++j)
      rem[static_cast<std::size_t>(i + j)] -= c * div[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i)] = std::move(c);
  }
  for (const Int& c : rem)
    if (c != 0) fail(errc::not_divisible, "nonzero remainder");
  return Polynomial(std::move(quot));
}

Polynomial substitute_power(const Polynomial& p, int m) {
  if (m < 1) fail(errc::invalid_argument, "substitution power must be >= 1");
  if (m == 1 || p.is_zero()) return p;
  std::vector<Int> out(static_cast<std::size_t>(p.degree()) * m + 1, Int(0));
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i) * m] = p.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial expand_rational_product(const RationalProduct& rp) {
  auto accumulate = [](const std::vector<int>& minus, const std::vector<int>& plus) {
    Polynomial acc = Polynomial::one();
    for (int a : minus) acc *= Polynomial::power_minus_one(a);
    for (int a : plus) acc *= Polynomial::power_plus_one(a);
    return acc;
  };
  Polynomial num = accumulate(rp.num_minus, rp.num_plus);
  Polynomial den = accumulate(rp.den_minus, rp.den_plus);
  if (den == Polynomial::one()) return num;
  return exact_div(num, den);
}

}  // namespace motivekit
