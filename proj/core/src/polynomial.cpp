#include "deza/polynomial.hpp"

#include <stdexcept>

namespace deza {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending)
    : c_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial_root(const BigInt& r) {
  return IntPolynomial({-r, BigInt(1)});
}

IntPolynomial IntPolynomial::quadratic_surd(const BigInt& d) {
  return IntPolynomial({-d, BigInt(0), BigInt(1)});
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coefficient(std::size_t i) const {
  static const BigInt zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPolynomial::divide_by_root(const BigInt& r) {
  if (c_.empty()) return false;
  const auto n = c_.size() - 1;
  std::vector<BigInt> q(n);
  BigInt carry = 0;
  for (std::size_t i = n + 1; i-- > 0;) {
    BigInt value = c_[i] + carry * r;
    if (i == 0) {
      if (value != 0) return false;
    } else {
      q[i - 1] = value;
      carry = value;
    }
  }
  c_ = std::move(q);
  trim();
  return true;
}

bool IntPolynomial::divide_by_quadratic(const BigInt& d) {
  // p(x) = (x^2 - d) q(x): q_{i-2} = p_i + d q_i, from the top down.
  if (c_.size() < 3) return false;
  const auto n = c_.size() - 1;
  std::vector<BigInt> q(n - 1, 0);
  std::vector<BigInt> rem = c_;
  for (std::size_t i = n; i >= 2; --i) {
    q[i - 2] = rem[i];
    rem[i - 2] += d * rem[i];
    rem[i] = 0;
  }
  if (rem[0] != 0 || rem[1] != 0) return false;
  c_ = std::move(q);
  trim();
  return true;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const auto& c = c_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace deza
