#ifndef TWISTALEX_LAURENT_HPP
#define TWISTALEX_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "twistalex/field.hpp"

namespace twistalex {

/// Laurent polynomial in t over a field.
///
/// Stored densely as `coeffs_[i]` = coefficient of t^(low_ + i), trimmed so that
/// the first and last stored coefficients are nonzero.  The zero polynomial has
/// no coefficients.
template <class Scalar>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// Integer literal constant; used by Eigen for `Scalar(0)` and `Scalar(1)`.
  explicit LaurentPoly(int literal) {
    if (literal != 0) coeffs_.push_back(Scalar(literal));
  }
  explicit LaurentPoly(const Scalar& c) {
    if (!twistalex::is_zero(c)) coeffs_.push_back(c);
  }
  LaurentPoly(int low, std::vector<Scalar> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

  static LaurentPoly monomial(const Scalar& c, int exponent) {
    LaurentPoly f(c);
    f.low_ = f.coeffs_.empty() ? 0 : exponent;
    return f;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Span degree high - low; empty for the zero polynomial.
  std::optional<int> degree() const {
    if (is_zero()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_unit() const { return coeffs_.size() == 1; }

  Scalar coeff(int exponent) const {
    const int i = exponent - low_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[i];
  }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& leading() const { return coeffs_.back(); }
  const Scalar& trailing() const { return coeffs_.front(); }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Substitution t -> t^-1.
  LaurentPoly reflected() const {
    if (is_zero()) return {};
    std::vector<Scalar> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-high(), std::move(c));
  }

  /// Substitution t -> t^d for d > 0.
  LaurentPoly dilated(int d) const {
    if (is_zero() || d == 1) return *this;
    std::vector<Scalar> c((coeffs_.size() - 1) * d + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * d] = coeffs_[i];
    return LaurentPoly(low_ * d, std::move(c));
  }

  /// Canonical representative of the unit class {c t^j f}: lowest exponent 0
  /// and leading coefficient 1.
  LaurentPoly normalized() const {
    if (is_zero()) return {};
    const Scalar inv = Scalar(1) / leading();
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * inv);
    return LaurentPoly(0, std::move(c));
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add(o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (twistalex::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(c));
  }
  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& f) {
    if (twistalex::is_zero(s)) return {};
    LaurentPoly r = f;
    for (auto& x : r.coeffs_) x *= s;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    if (a.is_zero()) return true;
    return a.low_ == b.low_ && std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin());
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Division with remainder in F[t, t^-1] with the span degree as Euclidean
  /// function: a = q*b + r and r = 0 or deg r < deg b.
  friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (a.is_zero()) return {};
    const int nb = static_cast<int>(b.coeffs_.size());
    std::vector<Scalar> r = a.coeffs_;
    const int nr = static_cast<int>(r.size());
    if (nr < nb) return {LaurentPoly(), a};
    std::vector<Scalar> q(nr - nb + 1, Scalar(0));
    const Scalar inv = Scalar(1) / b.leading();
    for (int i = nr - nb; i >= 0; --i) {
      const Scalar c = r[i + nb - 1] * inv;
      q[i] = c;
      if (twistalex::is_zero(c)) continue;
      for (int j = 0; j < nb; ++j) r[i + j] -= c * b.coeffs_[j];
    }
    return {LaurentPoly(a.low_ - b.low_, std::move(q)), LaurentPoly(a.low_, std::move(r))};
  }

  /// Exact quotient; throws if b does not divide a.
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
    return q;
  }

  friend bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).second.is_zero();
  }

  /// Monic gcd (canonical form); gcd(0, 0) = 0.
  friend LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
      LaurentPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.normalized();
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (twistalex::is_zero(coeffs_[i])) continue;
      const int e = low_ + static_cast<int>(i);
      std::string c = twistalex::to_string(coeffs_[i]);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      const bool one = (c == "1");
      if (e == 0) {
        out += c;
        continue;
      }
      if (!one) out += c + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

 private:
  LaurentPoly& add(const LaurentPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    std::vector<Scalar> c(hi - lo + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[low_ - lo + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      if (subtract) c[o.low_ - lo + i] -= o.coeffs_[i];
      else c[o.low_ - lo + i] += o.coeffs_[i];
    }
    low_ = lo;
    coeffs_ = std::move(c);
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && twistalex::is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (twistalex::is_zero(coeffs_[last - 1])) --last;
    coeffs_.erase(coeffs_.begin() + last, coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + first);
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<Scalar> coeffs_;
};

template <class Scalar>
LaurentPoly<Scalar> lp_normalize(const LaurentPoly<Scalar>& f) {
  return f.normalized();
}

template <class Scalar>
std::optional<int> lp_degree(const LaurentPoly<Scalar>& f) {
  return f.degree();
}

inline std::string degree_string(std::optional<int> d) { return d ? std::to_string(*d) : "undefined"; }

/// Reduction of a rational Laurent polynomial with p-integral coefficients.
inline LaurentPoly<Fp> reduce_mod(const LaurentPoly<Rational>& f, std::uint32_t p) {
  std::vector<Fp> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(reduce_mod(x, p));
  return LaurentPoly<Fp>(f.low(), std::move(c));
}

/// Scales a rational polynomial to a primitive integer polynomial (content
/// removed, positive leading coefficient).
LaurentPoly<Rational> primitive_integer_part(const LaurentPoly<Rational>& f);

}  // namespace twistalex

namespace Eigen {
template <class Scalar>
struct NumTraits<twistalex::LaurentPoly<Scalar>> : GenericNumTraits<twistalex::LaurentPoly<Scalar>> {
  using Real = twistalex::LaurentPoly<Scalar>;
  using NonInteger = twistalex::LaurentPoly<Scalar>;
  using Literal = twistalex::LaurentPoly<Scalar>;
  using Nested = twistalex::LaurentPoly<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
};
}  // namespace Eigen

#endif  // TWISTALEX_LAURENT_HPP
