#include "twistalex/field.hpp"
#include "twistalex/laurent.hpp"

namespace twistalex {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::domain_error("Fp: inverse of an unbound literal");
  }
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return Fp(x0, p_);
}

LaurentPoly<Rational> primitive_integer_part(const LaurentPoly<Rational>& f) {
  if (f.is_zero()) return f;
  BigInt l = 1, g = 0;
  for (const auto& c : f.coeffs()) {
    const BigInt d = boost::multiprecision::denominator(c);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    const BigInt n = boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(n));
  }
  Rational scale = Rational(l) / Rational(g);
  if (f.leading() < 0) scale = -scale;
  std::vector<Rational> c;
  for (const auto& x : f.coeffs()) c.push_back(x * scale);
  return LaurentPoly<Rational>(0, std::move(c));
}

}  // namespace twistalex
