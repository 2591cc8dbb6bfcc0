#ifndef TWISTALEX_REPRESENTATION_HPP
#define TWISTALEX_REPRESENTATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "twistalex/field.hpp"
#include "twistalex/fpgroup.hpp"
#include "twistalex/perm.hpp"
#include "twistalex/poly_matrix.hpp"

namespace twistalex {

enum class Flavor { Trivial, Permutation, Standard };

const char* to_string(Flavor f);
/// Accepts "trivial", "perm"/"permutation", "std"/"standard".
Flavor parse_flavor(const std::string& s);

/// Inverse over a field by Gauss-Jordan elimination; throws if singular.
template <class Scalar>
FieldMatrix<Scalar> field_inverse(const FieldMatrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("field_inverse: not square");
  FieldMatrix<Scalar> a = m;
  FieldMatrix<Scalar> inv = FieldMatrix<Scalar>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(a(piv, c))) ++piv;
    if (piv == n) throw std::domain_error("field_inverse: singular matrix");
    a.row(c).swap(a.row(piv));
    inv.row(c).swap(inv.row(piv));
    const Scalar s = Scalar(1) / a(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      const Scalar f = a(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class Scalar>
bool is_identity(const FieldMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == Scalar(i == j ? 1 : 0))) return false;
  return true;
}

/// Matrix representation G -> GL(dim, F), one matrix per generator; the action
/// is on column vectors and words evaluate as ordered products.
template <class Scalar>
struct Representation {
  int dim = 0;
  FieldSpec field;
  Flavor flavor = Flavor::Trivial;
  std::vector<FieldMatrix<Scalar>> matrices;
  std::vector<FieldMatrix<Scalar>> inverses;

  FieldMatrix<Scalar> evaluate(const Word& w) const {
    FieldMatrix<Scalar> r = identity();
    for (int x : w.letters()) r = field_product<Scalar>(r, x > 0 ? matrices[x - 1] : inverses[-x - 1]);
    return r;
  }

  FieldMatrix<Scalar> identity() const {
    FieldMatrix<Scalar> I(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) I(i, j) = make_scalar<Scalar>(i == j ? 1 : 0, field);
    return I;
  }

  bool satisfies(const Presentation& p) const {
    if (static_cast<int>(matrices.size()) != p.num_generators()) return false;
    for (const auto& r : p.relators)
      if (!is_identity<Scalar>(evaluate(r))) return false;
    return true;
  }
};

template <class Scalar>
Representation<Scalar> representation_from_matrices(std::vector<FieldMatrix<Scalar>> mats, FieldSpec field,
                                                    Flavor flavor) {
  Representation<Scalar> r;
  r.field = field;
  r.flavor = flavor;
  r.dim = mats.empty() ? 0 : static_cast<int>(mats.front().rows());
  for (const auto& m : mats) r.inverses.push_back(field_inverse<Scalar>(m));
  r.matrices = std::move(mats);
  return r;
}

/// Trivial one-dimensional representation on `num_generators` generators.
template <class Scalar>
Representation<Scalar> trivial_representation(int num_generators, FieldSpec field) {
  std::vector<FieldMatrix<Scalar>> mats;
  for (int i = 0; i < num_generators; ++i) {
    FieldMatrix<Scalar> one(1, 1);
    one(0, 0) = make_scalar<Scalar>(1, field);
    mats.push_back(one);
  }
  return representation_from_matrices<Scalar>(std::move(mats), field, Flavor::Trivial);
}

namespace detail {

// Permutation matrix with columns e_i -> e_{sigma(i)}.
template <class Scalar>
FieldMatrix<Scalar> permutation_matrix(const Perm& g, FieldSpec field) {
  const int k = g.degree();
  FieldMatrix<Scalar> m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = make_scalar<Scalar>(0, field);
  for (int j = 0; j < k; ++j) m(g(j), j) = make_scalar<Scalar>(1, field);
  return m;
}

// Action on the sum-zero subspace in the basis b_i = e_i - e_{i+1}.
template <class Scalar>
FieldMatrix<Scalar> standard_matrix(const Perm& g, FieldSpec field) {
  const int k = g.degree();
  FieldMatrix<Scalar> m(k - 1, k - 1);
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j) m(i, j) = make_scalar<Scalar>(0, field);
  for (int j = 0; j < k - 1; ++j) {
    // g(b_j) = e_a - e_b = sum_{a <= i < b} b_i, negated when a > b.
    const int a = g(j), b = g(j + 1);
    const int lo = std::min(a, b), hi = std::max(a, b);
    const int sign = a < b ? 1 : -1;
    for (int i = lo; i < hi; ++i) m(i, j) = make_scalar<Scalar>(sign, field);
  }
  return m;
}

}  // namespace detail

template <class Scalar>
Representation<Scalar> build_representation(const PermHom& h, Flavor flavor, FieldSpec field) {
  if (flavor == Flavor::Trivial) return trivial_representation<Scalar>(static_cast<int>(h.images.size()), field);
  if (flavor == Flavor::Standard && h.k < 2) throw InputError("standard representation needs k >= 2");
  Representation<Scalar> r;
  r.field = field;
  r.flavor = flavor;
  r.dim = flavor == Flavor::Standard ? h.k - 1 : h.k;
  for (const auto& g : h.images) {
    if (flavor == Flavor::Standard) {
      r.matrices.push_back(detail::standard_matrix<Scalar>(g, field));
      r.inverses.push_back(detail::standard_matrix<Scalar>(g.inverse(), field));
    } else {
      r.matrices.push_back(detail::permutation_matrix<Scalar>(g, field));
      r.inverses.push_back(detail::permutation_matrix<Scalar>(g.inverse(), field));
    }
  }
  return r;
}

/// Adjoint for the trivial involution: g -> transpose of the matrix of g^-1.
template <class Scalar>
Representation<Scalar> adjoint(const Representation<Scalar>& r) {
  Representation<Scalar> a = r;
  for (std::size_t i = 0; i < r.matrices.size(); ++i) {
    a.matrices[i] = r.inverses[i].transpose();
    a.inverses[i] = r.matrices[i].transpose();
  }
  return a;
}

}  // namespace twistalex

#endif  // TWISTALEX_REPRESENTATION_HPP
