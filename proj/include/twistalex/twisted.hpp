#ifndef TWISTALEX_TWISTED_HPP
#define TWISTALEX_TWISTED_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistalex/fpgroup.hpp"
#include "twistalex/poly_matrix.hpp"
#include "twistalex/representation.hpp"

namespace twistalex {

/// A precondition on a (presentation, representation) pair does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A mathematical invariant that must hold failed; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Boundary maps of the twisted cellular complex of the presentation
/// 2-complex, acting on row vectors: C2 --d2--> C1 --d1--> C0, d2 * d1 = 0.
template <class Scalar>
struct TwistedComplex {
  PolyMatrix<Scalar> d2;  // (relators * k) x (generators * k)
  PolyMatrix<Scalar> d1;  // (generators * k) x k
  int k = 0;
};

namespace detail {

template <class Scalar>
LaurentPoly<Scalar> poly_from_terms(const std::map<int, Scalar>& terms) {
  if (terms.empty()) return {};
  const int lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<Scalar> c(hi - lo + 1, Scalar(0));
  for (const auto& [e, v] : terms) c[e - lo] = v;
  return LaurentPoly<Scalar>(lo, std::move(c));
}

}  // namespace detail

/// Fox matrix and vertex map evaluated under alpha (x) phi, where a letter g
/// contributes alpha(g) t^phi(g).
template <class Scalar>
TwistedComplex<Scalar> chain_complex(const Presentation& p, const Representation<Scalar>& rep) {
  if (!p.has_phi()) throw ContractError("chain_complex: presentation has no phi");
  if (!rep.satisfies(p)) throw ContractError("chain_complex: representation does not satisfy the relators");
  const int n = p.num_generators(), m = p.num_relators(), k = rep.dim;
  TwistedComplex<Scalar> c;
  c.k = k;
  c.d1 = poly_zero<Scalar>(n * k, k);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        auto e = LaurentPoly<Scalar>::monomial(rep.matrices[i](a, b), static_cast<int>(p.phi[i]));
        if (a == b) e -= LaurentPoly<Scalar>(make_scalar<Scalar>(1, rep.field));
        c.d1(i * k + a, b) = std::move(e);
      }

  c.d2 = poly_zero<Scalar>(m * k, n * k);
  for (int j = 0; j < m; ++j) {
    // Running prefix alpha(u) t^phi(u); the derivative picks it up (or its
    // negative after an inverse letter) at each occurrence.
    std::vector<std::map<int, FieldMatrix<Scalar>>> acc(n);
    FieldMatrix<Scalar> prefix = rep.identity();
    int e = 0;
    for (int x : p.relators[j].letters()) {
      const int g = std::abs(x) - 1;
      auto accumulate = [&](int sign) {
        auto [it, fresh] = acc[g].try_emplace(e, FieldMatrix<Scalar>(k, k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) {
            const Scalar v = sign > 0 ? prefix(a, b) : Scalar(0) - prefix(a, b);
            it->second(a, b) = fresh ? v : it->second(a, b) + v;
          }
      };
      if (x > 0) {
        accumulate(1);
        prefix = field_product<Scalar>(prefix, rep.matrices[g]);
        e += static_cast<int>(p.phi[g]);
      } else {
        prefix = field_product<Scalar>(prefix, rep.inverses[g]);
        e -= static_cast<int>(p.phi[g]);
        accumulate(-1);
      }
    }
    for (int g = 0; g < n; ++g) {
      if (acc[g].empty()) continue;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          std::map<int, Scalar> terms;
          for (const auto& [ex, mat] : acc[g])
            if (!is_zero(mat(a, b))) terms.emplace(ex, mat(a, b));
          c.d2(j * k + a, g * k + b) = detail::poly_from_terms(terms);
        }
    }
  }
  return c;
}

/// Order of H_0 = coker(d1); never zero for nontrivial phi.
template <class Scalar>
LaurentPoly<Scalar> delta0(const TwistedComplex<Scalar>& c) {
  PolyMatrix<Scalar> rel = c.d1.transpose();
  auto o = coker_order(rel, c.k).order;
  if (o.is_zero()) throw InvariantViolation("delta0 vanished; phi is trivial or the complex is wrong");
  return o;
}

template <class Scalar>
LaurentPoly<Scalar> delta0(const Presentation& p, const Representation<Scalar>& rep) {
  return delta0(chain_complex(p, rep));
}

template <class Scalar>
struct Delta1Result {
  LaurentPoly<Scalar> delta1;   // zero if H_1 has positive rank
  LaurentPoly<Scalar> torsion;  // order of the torsion part of H_1
  Eigen::Index free_rank = 0;
  Eigen::Index rank_d1 = 0;
  Eigen::Index rank_d2 = 0;
};

/// H_1 = ker d1 / im d2, via a Smith basis of ker d1 and a second Smith form of
/// im d2 in kernel coordinates.
template <class Scalar>
Delta1Result<Scalar> delta1(const TwistedComplex<Scalar>& c) {
  const Eigen::Index rows1 = c.d1.rows();
  const auto snf = smith_normal_form(c.d1, true);
  const Eigen::Index r = snf.rank();
  // Rows r.. of U span ker d1; express im d2 in that basis.
  const PolyMatrix<Scalar> coords = multiply(c.d2, snf.Uinv);
  for (Eigen::Index i = 0; i < coords.rows(); ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      if (!coords(i, j).is_zero()) throw InvariantViolation("delta1: image of d2 not contained in ker d1");
  PolyMatrix<Scalar> rel = coords.rightCols(rows1 - r).transpose();
  const auto o = coker_order(rel, rows1 - r);
  Delta1Result<Scalar> out;
  out.delta1 = o.order;
  out.torsion = o.torsion;
  out.free_rank = o.free_rank;
  out.rank_d1 = r;
  out.rank_d2 = (rows1 - r) - o.free_rank;
  return out;
}

template <class Scalar>
Delta1Result<Scalar> delta1(const Presentation& p, const Representation<Scalar>& rep) {
  return delta1(chain_complex(p, rep));
}

/// 1 for manifolds with toroidal boundary; for closed manifolds the order
/// Delta_0 of the adjoint representation with t -> t^-1.  Empty when
/// Delta_1 = 0 (duality does not apply).
template <class Scalar>
std::optional<LaurentPoly<Scalar>> delta2(const Presentation& p, const Representation<Scalar>& rep,
                                          const LaurentPoly<Scalar>& d1) {
  if (d1.is_zero()) return std::nullopt;
  if (p.kind == ManifoldKind::BoundaryTori) return LaurentPoly<Scalar>(make_scalar<Scalar>(1, rep.field));
  return delta0(p, adjoint(rep)).reflected().normalized();
}

template <class Scalar>
struct InvariantReport {
  LaurentPoly<Scalar> delta0, delta1, delta1_torsion;
  std::optional<LaurentPoly<Scalar>> delta2;
  std::optional<int> torsion_degree;
  Eigen::Index h1_free_rank = 0;
  int k = 0;
  FieldSpec field;
  ManifoldKind kind = ManifoldKind::BoundaryTori;
};

/// deg Delta_1 - deg Delta_0 - deg Delta_2, the degree of the torsion.
template <class Scalar>
std::optional<int> torsion_degree(const InvariantReport<Scalar>& r) {
  if (r.delta1.is_zero() || !r.delta2) return std::nullopt;
  return *r.delta1.degree() - *r.delta0.degree() - *r.delta2->degree();
}

template <class Scalar>
InvariantReport<Scalar> compute_invariants(const Presentation& p, const Representation<Scalar>& rep) {
  const auto c = chain_complex(p, rep);
  InvariantReport<Scalar> r;
  r.k = rep.dim;
  r.field = rep.field;
  r.kind = p.kind;
  r.delta0 = delta0(c);
  const auto d1 = delta1(c);
  r.delta1 = d1.delta1;
  r.delta1_torsion = d1.torsion;
  r.h1_free_rank = d1.free_rank;
  r.delta2 = delta2(p, rep, r.delta1);
  r.torsion_degree = torsion_degree(r);
  return r;
}

/// Lower bound (1/k) deg tau for the Thurston norm; empty when Delta_1 = 0.
template <class Scalar>
std::optional<Rational> norm_bound(const InvariantReport<Scalar>& r) {
  if (!r.torsion_degree) return std::nullopt;
  return Rational(*r.torsion_degree) / r.k;
}

struct GenusBound {
  Rational value;
  std::int64_t rounded = 0;  // ceiling of value
};

inline std::int64_t ceil_of(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  BigInt c = n / d;
  if (c * d < n) c += 1;
  return c.convert_to<std::int64_t>();
}

/// Knot genus bound: from a knot exterior ||phi|| = 2g - 1, from the 0-surgery
/// ||phi|| = 2g - 2.
template <class Scalar>
std::optional<GenusBound> genus_bound(const InvariantReport<Scalar>& r) {
  auto nb = norm_bound(r);
  if (!nb) return std::nullopt;
  const Rational shift = r.kind == ManifoldKind::Closed ? Rational(1) : Rational(1, 2);
  GenusBound g;
  g.value = *nb / 2 + shift;
  g.rounded = ceil_of(g.value);
  return g;
}

/// (1/k) deg of the torsion part of H_1, minus 1.  Valid for boundary classes
/// under the injectivity hypothesis, which the caller asserts.
template <class Scalar>
Rational boundary_class_bound(const InvariantReport<Scalar>& r) {
  return Rational(*r.delta1_torsion.degree()) / r.k - 1;
}

template <class Scalar>
struct WadaQuotient {
  LaurentPoly<Scalar> numerator, denominator;
  int omitted_generator = 0;  // 1-based
  int degree() const { return *numerator.degree() - *denominator.degree(); }
};

/// Torsion as det(Fox minor without column j) / det(alpha(x_j) t^phi(x_j) - 1)
/// for a deficiency-one presentation.  Empty if no generator is admissible
/// or the numerator vanishes (H_1 not torsion).
template <class Scalar>
std::optional<WadaQuotient<Scalar>> torsion_wada(const Presentation& p, const Representation<Scalar>& rep) {
  if (p.deficiency() != 1) throw ContractError("torsion_wada: presentation must have deficiency one");
  const auto c = chain_complex(p, rep);
  const int n = p.num_generators(), k = c.k;
  for (int j = 0; j < n; ++j) {
    const auto den = determinant<Scalar>(c.d1.middleRows(j * k, k));
    if (den.is_zero()) continue;
    PolyMatrix<Scalar> minor(c.d2.rows(), c.d2.cols() - k);
    for (Eigen::Index row = 0; row < minor.rows(); ++row)
      for (Eigen::Index col = 0; col < minor.cols(); ++col)
        minor(row, col) = c.d2(row, col < j * k ? col : col + k);
    auto num = determinant<Scalar>(minor);
    if (num.is_zero()) return std::nullopt;
    return WadaQuotient<Scalar>{num.normalized(), den.normalized(), j + 1};
  }
  return std::nullopt;
}

}  // namespace twistalex

#endif  // TWISTALEX_TWISTED_HPP
