#ifndef TWISTALEX_POLY_MATRIX_HPP
#define TWISTALEX_POLY_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "twistalex/laurent.hpp"

namespace twistalex {

template <class Scalar>
using PolyMatrix = Eigen::Matrix<LaurentPoly<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using FieldMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
PolyMatrix<Scalar> poly_identity(Eigen::Index n) {
  PolyMatrix<Scalar> I(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) I(i, j) = LaurentPoly<Scalar>(i == j ? 1 : 0);
  return I;
}

template <class Scalar>
PolyMatrix<Scalar> poly_zero(Eigen::Index rows, Eigen::Index cols) {
  return PolyMatrix<Scalar>::Constant(rows, cols, LaurentPoly<Scalar>());
}

template <class Scalar>
PolyMatrix<Scalar> multiply(const PolyMatrix<Scalar>& a, const PolyMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  PolyMatrix<Scalar> c = poly_zero<Scalar>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(l, j).is_zero()) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

/// Product over the field.  Written out because Eigen's scalar-promotion
/// overloads do not compile for boost rationals.
template <class Scalar>
FieldMatrix<Scalar> field_product(const FieldMatrix<Scalar>& a, const FieldMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("field_product: dimension mismatch");
  FieldMatrix<Scalar> c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar s = a(i, 0) * b(0, j);
      for (Eigen::Index l = 1; l < a.cols(); ++l) s += a(i, l) * b(l, j);
      c(i, j) = s;
    }
  return c;
}

template <class Scalar>
bool is_zero_matrix(const PolyMatrix<Scalar>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

/// U * A * V = D with D diagonal and the nonzero diagonal entries forming a
/// divisibility chain of canonical polynomials.  `Uinv` is the inverse of U.
template <class Scalar>
struct SmithDecomposition {
  PolyMatrix<Scalar> U, D, V, Uinv;
  std::vector<LaurentPoly<Scalar>> divisors;  // the nonzero ones, canonical

  Eigen::Index rank() const { return static_cast<Eigen::Index>(divisors.size()); }
};

namespace detail {

template <class Scalar>
class SmithReducer {
 public:
  SmithReducer(const PolyMatrix<Scalar>& a, bool transforms) : D(a), track_(transforms) {
    if (track_) {
      U = poly_identity<Scalar>(a.rows());
      Uinv = U;
      V = poly_identity<Scalar>(a.cols());
    }
  }

  void run() {
    const Eigen::Index m = D.rows(), n = D.cols();
    for (Eigen::Index s = 0; s < std::min(m, n); ++s) {
      auto pos = min_entry(s, s, m, s, n);
      if (!pos) break;
      swap_rows(s, pos->first);
      swap_cols(s, pos->second);
      for (;;) {
        clear_column(s);
        clear_row(s);
        if (!line_clear(s)) {
          auto p = min_line_entry(s);
          swap_rows(s, p.first);
          swap_cols(s, p.second);
          continue;
        }
        auto bad = non_divisible(s);
        if (!bad) break;
        add_row(s, *bad);
      }
      normalize_pivot(s);
    }
  }

  PolyMatrix<Scalar> D, U, Uinv, V;

 private:
  using Poly = LaurentPoly<Scalar>;

  std::optional<std::pair<Eigen::Index, Eigen::Index>> min_entry(Eigen::Index s, Eigen::Index r0, Eigen::Index r1,
                                                                 Eigen::Index c0, Eigen::Index c1) const {
    std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
    int best_deg = 0;
    for (Eigen::Index i = r0; i < r1; ++i)
      for (Eigen::Index j = c0; j < c1; ++j) {
        const auto& e = D(i, j);
        if (e.is_zero()) continue;
        const int d = *e.degree();
        if (!best || d < best_deg) {
          best = {i, j};
          best_deg = d;
          if (d == 0) return best;
        }
      }
    (void)s;
    return best;
  }

  std::pair<Eigen::Index, Eigen::Index> min_line_entry(Eigen::Index s) const {
    std::pair<Eigen::Index, Eigen::Index> best{s, s};
    int best_deg = *D(s, s).degree();
    for (Eigen::Index i = s + 1; i < D.rows(); ++i)
      if (!D(i, s).is_zero() && *D(i, s).degree() < best_deg) {
        best = {i, s};
        best_deg = *D(i, s).degree();
      }
    for (Eigen::Index j = s + 1; j < D.cols(); ++j)
      if (!D(s, j).is_zero() && *D(s, j).degree() < best_deg) {
        best = {s, j};
        best_deg = *D(s, j).degree();
      }
    return best;
  }

  bool line_clear(Eigen::Index s) const {
    for (Eigen::Index i = s + 1; i < D.rows(); ++i)
      if (!D(i, s).is_zero()) return false;
    for (Eigen::Index j = s + 1; j < D.cols(); ++j)
      if (!D(s, j).is_zero()) return false;
    return true;
  }

  std::optional<Eigen::Index> non_divisible(Eigen::Index s) const {
    const auto& piv = D(s, s);
    if (piv.is_unit()) return std::nullopt;
    for (Eigen::Index i = s + 1; i < D.rows(); ++i)
      for (Eigen::Index j = s + 1; j < D.cols(); ++j)
        if (!D(i, j).is_zero() && !divides(piv, D(i, j))) return i;
    return std::nullopt;
  }

  void clear_column(Eigen::Index s) {
    for (Eigen::Index i = s + 1; i < D.rows(); ++i) {
      if (D(i, s).is_zero()) continue;
      Poly q = divmod(D(i, s), D(s, s)).first;
      if (q.is_zero()) continue;
      for (Eigen::Index j = s; j < D.cols(); ++j)
        if (!D(s, j).is_zero()) D(i, j) -= q * D(s, j);
      if (track_) {
        for (Eigen::Index j = 0; j < U.cols(); ++j)
          if (!U(s, j).is_zero()) U(i, j) -= q * U(s, j);
        for (Eigen::Index r = 0; r < Uinv.rows(); ++r)
          if (!Uinv(r, i).is_zero()) Uinv(r, s) += q * Uinv(r, i);
      }
    }
  }

  void clear_row(Eigen::Index s) {
    for (Eigen::Index j = s + 1; j < D.cols(); ++j) {
      if (D(s, j).is_zero()) continue;
      Poly q = divmod(D(s, j), D(s, s)).first;
      if (q.is_zero()) continue;
      for (Eigen::Index i = s; i < D.rows(); ++i)
        if (!D(i, s).is_zero()) D(i, j) -= q * D(i, s);
      if (track_)
        for (Eigen::Index r = 0; r < V.rows(); ++r)
          if (!V(r, s).is_zero()) V(r, j) -= q * V(r, s);
    }
  }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    if (track_) {
      U.row(a).swap(U.row(b));
      Uinv.col(a).swap(Uinv.col(b));
    }
  }

  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    if (track_) V.col(a).swap(V.col(b));
  }

  // row s += row i
  void add_row(Eigen::Index s, Eigen::Index i) {
    for (Eigen::Index j = s; j < D.cols(); ++j) D(s, j) += D(i, j);
    if (track_) {
      for (Eigen::Index j = 0; j < U.cols(); ++j) U(s, j) += U(i, j);
      for (Eigen::Index r = 0; r < Uinv.rows(); ++r) Uinv(r, i) -= Uinv(r, s);
    }
  }

  void normalize_pivot(Eigen::Index s) {
    const Poly& piv = D(s, s);
    const Scalar lc = piv.leading();
    const int low = piv.low();
    const Poly unit = Poly::monomial(Scalar(1) / lc, -low);
    const Poly unit_inv = Poly::monomial(lc, low);
    D(s, s) = unit * D(s, s);
    if (track_) {
      for (Eigen::Index j = 0; j < U.cols(); ++j) U(s, j) = unit * U(s, j);
      for (Eigen::Index r = 0; r < Uinv.rows(); ++r) Uinv(r, s) = Uinv(r, s) * unit_inv;
    }
  }

  bool track_;
};

}  // namespace detail

/// Smith normal form over F[t, t^-1].  With `transforms = false` only D and
/// the divisors are filled in.
template <class Scalar>
SmithDecomposition<Scalar> smith_normal_form(const PolyMatrix<Scalar>& a, bool transforms = true) {
  detail::SmithReducer<Scalar> red(a, transforms);
  red.run();
  SmithDecomposition<Scalar> out;
  for (Eigen::Index s = 0; s < std::min(a.rows(), a.cols()); ++s) {
    if (red.D(s, s).is_zero()) break;
    out.divisors.push_back(red.D(s, s));
  }
  out.D = std::move(red.D);
  out.U = std::move(red.U);
  out.Uinv = std::move(red.Uinv);
  out.V = std::move(red.V);
  return out;
}

/// Order data for the module F[t^±1]^ambient / (column span of A).
template <class Scalar>
struct ModuleOrder {
  LaurentPoly<Scalar> order;    // zero when the module has positive free rank
  LaurentPoly<Scalar> torsion;  // order of the torsion submodule, always nonzero
  Eigen::Index free_rank = 0;
};

template <class Scalar>
LaurentPoly<Scalar> product_of(const std::vector<LaurentPoly<Scalar>>& fs) {
  LaurentPoly<Scalar> p(1);
  for (const auto& f : fs) p *= f;
  return p.normalized();
}

/// Order of the cokernel of A, where the columns of A are relations in a free
/// module of rank `ambient_rank` (so A must have that many rows).
template <class Scalar>
ModuleOrder<Scalar> coker_order(const PolyMatrix<Scalar>& a, Eigen::Index ambient_rank) {
  if (a.rows() != ambient_rank) throw std::invalid_argument("coker_order: ambient rank does not match row count");
  ModuleOrder<Scalar> out;
  if (a.cols() == 0 || a.rows() == 0) {
    out.free_rank = ambient_rank;
    out.torsion = LaurentPoly<Scalar>(1);
    out.order = ambient_rank == 0 ? LaurentPoly<Scalar>(1) : LaurentPoly<Scalar>();
    return out;
  }
  const auto snf = smith_normal_form(a, false);
  out.free_rank = ambient_rank - snf.rank();
  out.torsion = product_of(snf.divisors);
  out.order = out.free_rank > 0 ? LaurentPoly<Scalar>() : out.torsion;
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
template <class Scalar>
LaurentPoly<Scalar> determinant(PolyMatrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return LaurentPoly<Scalar>(1);
  LaurentPoly<Scalar> prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    for (Eigen::Index i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (m(piv, k).is_zero() || *m(i, k).degree() < *m(piv, k).degree()) piv = i;
    }
    if (m(piv, k).is_zero()) return {};
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        LaurentPoly<Scalar> x = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(x, prev);
      }
      m(i, k) = LaurentPoly<Scalar>();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Rank over the fraction field F(t).
template <class Scalar>
Eigen::Index poly_rank(const PolyMatrix<Scalar>& a) {
  return smith_normal_form(a, false).rank();
}

}  // namespace twistalex

#endif  // TWISTALEX_POLY_MATRIX_HPP
