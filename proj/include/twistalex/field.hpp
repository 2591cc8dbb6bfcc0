#ifndef TWISTALEX_FIELD_HPP
#define TWISTALEX_FIELD_HPP

// Exact coefficient fields: prime fields F_p with a runtime modulus, and the
// rationals backed by boost::multiprecision.  No floating point anywhere.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace twistalex {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

bool is_prime(std::int64_t n);

/// Element of Z/p for a prime p chosen at runtime.
///
/// An element built from a bare integer (`Fp(1)`) has no modulus yet; it is an
/// exact integer literal that adopts the modulus of the first element it meets.
/// This is what lets generic code (and Eigen's `Scalar(0)` / `Scalar(1)`)
/// create constants without threading the field through every call.
class Fp {
 public:
  Fp() = default;
  explicit Fp(std::int64_t literal) : v_(literal) {}
  Fp(std::int64_t value, std::uint32_t p) : v_(value), p_(p) { reduce(); }

  std::uint32_t modulus() const { return p_; }
  /// Representative in [0, p); for unbound literals the literal itself.
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool bound() const { return p_ != 0; }

  Fp inverse() const;

  Fp operator-() const { return Fp(-v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a.p_, b.p_);
    return Fp(a.in(p) + b.in(p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a.p_, b.p_);
    return Fp(a.in(p) - b.in(p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a.p_, b.p_);
    return Fp(a.in(p) * b.in(p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a.p_, b.p_);
    return Fp(a.in(p), p) * Fp(b.in(p), p).inverse();
  }
  friend bool operator==(const Fp& a, const Fp& b) {
    const std::uint32_t p = join(a.p_, b.p_);
    return Fp(a.in(p), p).v_ == Fp(b.in(p), p).v_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  static std::uint32_t join(std::uint32_t p, std::uint32_t q) {
    if (p == 0) return q;
    if (q == 0 || p == q) return p;
    throw std::logic_error("Fp: mixing elements of different prime fields");
  }
  std::int64_t in(std::uint32_t p) const {
    if (p == 0 || p_ != 0) return v_;
    const std::int64_t r = v_ % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  void reduce() {
    if (p_ == 0) return;
    v_ %= static_cast<std::int64_t>(p_);
    if (v_ < 0) v_ += p_;
  }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

/// Names the coefficient field at runtime: a prime p, or 0 for the rationals.
struct FieldSpec {
  std::uint32_t p = 0;

  bool rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <class Scalar>
Scalar make_scalar(std::int64_t v, const FieldSpec& field);

template <>
inline Fp make_scalar<Fp>(std::int64_t v, const FieldSpec& field) {
  return Fp(v, field.p);
}

template <>
inline Rational make_scalar<Rational>(std::int64_t v, const FieldSpec&) {
  return Rational(v);
}

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }
inline std::string to_string(const Rational& x) { return x.str(); }

inline Fp reduce_mod(const Rational& x, std::uint32_t p) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const BigInt pp(p);
  BigInt n = num % pp;
  BigInt d = den % pp;
  if (d == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
  return Fp(n.convert_to<std::int64_t>(), p) / Fp(d.convert_to<std::int64_t>(), p);
}

}  // namespace twistalex

namespace Eigen {
template <>
struct NumTraits<twistalex::Fp> : GenericNumTraits<twistalex::Fp> {
  using Real = twistalex::Fp;
  using NonInteger = twistalex::Fp;
  using Literal = twistalex::Fp;
  using Nested = twistalex::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};
}  // namespace Eigen

#endif  // TWISTALEX_FIELD_HPP
