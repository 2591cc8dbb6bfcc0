#include "twistalex/int_smith.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

namespace twistalex {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int_smith: integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int_smith: integer overflow");
  return r;
}

// Floor-free quotient toward zero; the remainder then has |r| < |b|.
std::int64_t quot(std::int64_t a, std::int64_t b) { return a / b; }

class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : D(a), U(IntMatrix::Identity(a.rows(), a.rows())), V(IntMatrix::Identity(a.cols(), a.cols())) {}

  void run() {
    const Eigen::Index m = D.rows(), n = D.cols();
    for (Eigen::Index s = 0; s < std::min(m, n); ++s) {
      if (!move_min_to(s, true)) break;
      for (;;) {
        for (Eigen::Index i = s + 1; i < m; ++i) {
          const std::int64_t q = quot(D(i, s), D(s, s));
          if (q != 0) row_axpy(i, s, q);
        }
        for (Eigen::Index j = s + 1; j < n; ++j) {
          const std::int64_t q = quot(D(s, j), D(s, s));
          if (q != 0) col_axpy(j, s, q);
        }
        if (!line_clear(s)) {
          move_min_to(s, false);
          continue;
        }
        bool fixed = true;
        for (Eigen::Index i = s + 1; i < m && fixed; ++i)
          for (Eigen::Index j = s + 1; j < n; ++j)
            if (D(i, j) % D(s, s) != 0) {
              D.row(s) += D.row(i);
              U.row(s) += U.row(i);
              fixed = false;
              break;
            }
        if (fixed) break;
      }
      if (D(s, s) < 0) {
        D.row(s) *= -1;
        U.row(s) *= -1;
      }
    }
  }

  IntMatrix D, U, V;

 private:
  bool line_clear(Eigen::Index s) const {
    for (Eigen::Index i = s + 1; i < D.rows(); ++i)
      if (D(i, s) != 0) return false;
    for (Eigen::Index j = s + 1; j < D.cols(); ++j)
      if (D(s, j) != 0) return false;
    return true;
  }

  // Moves the entry of least absolute value to (s, s); over the whole
  // trailing block, or only along row/column s.
  bool move_min_to(Eigen::Index s, bool block) {
    std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
    auto consider = [&](Eigen::Index i, Eigen::Index j) {
      if (D(i, j) == 0) return;
      if (!best || std::llabs(D(i, j)) < std::llabs(D(best->first, best->second))) best = {i, j};
    };
    if (block) {
      for (Eigen::Index i = s; i < D.rows(); ++i)
        for (Eigen::Index j = s; j < D.cols(); ++j) consider(i, j);
    } else {
      for (Eigen::Index i = s; i < D.rows(); ++i) consider(i, s);
      for (Eigen::Index j = s; j < D.cols(); ++j) consider(s, j);
    }
    if (!best) return false;
    if (best->first != s) {
      D.row(s).swap(D.row(best->first));
      U.row(s).swap(U.row(best->first));
    }
    if (best->second != s) {
      D.col(s).swap(D.col(best->second));
      V.col(s).swap(V.col(best->second));
    }
    return true;
  }

  // row i -= q * row s
  void row_axpy(Eigen::Index i, Eigen::Index s, std::int64_t q) {
    for (Eigen::Index j = 0; j < D.cols(); ++j) D(i, j) = checked_sub(D(i, j), checked_mul(q, D(s, j)));
    for (Eigen::Index j = 0; j < U.cols(); ++j) U(i, j) = checked_sub(U(i, j), checked_mul(q, U(s, j)));
  }

  // col j -= q * col s
  void col_axpy(Eigen::Index j, Eigen::Index s, std::int64_t q) {
    for (Eigen::Index i = 0; i < D.rows(); ++i) D(i, j) = checked_sub(D(i, j), checked_mul(q, D(i, s)));
    for (Eigen::Index i = 0; i < V.rows(); ++i) V(i, j) = checked_sub(V(i, j), checked_mul(q, V(i, s)));
  }
};

}  // namespace

IntSmith int_smith(const IntMatrix& a) {
  Reducer red(a);
  red.run();
  IntSmith out;
  out.divisors.reserve(std::min(a.rows(), a.cols()));
  for (Eigen::Index s = 0; s < std::min(a.rows(), a.cols()); ++s) {
    out.divisors.push_back(red.D(s, s));
    if (red.D(s, s) != 0) ++out.rank;
  }
  out.D = std::move(red.D);
  out.U = std::move(red.U);
  out.V = std::move(red.V);
  return out;
}

}  // namespace twistalex
