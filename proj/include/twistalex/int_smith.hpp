#ifndef TWISTALEX_INT_SMITH_HPP
#define TWISTALEX_INT_SMITH_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace twistalex {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer Smith normal form U * A * V = D with U, V unimodular.
/// `divisors` has min(rows, cols) entries, nonnegative, each dividing the next;
/// trailing zeros stand for free summands.
struct IntSmith {
  IntMatrix U, D, V;
  std::vector<std::int64_t> divisors;
  Eigen::Index rank = 0;
};

IntSmith int_smith(const IntMatrix& a);

}  // namespace twistalex

#endif  // TWISTALEX_INT_SMITH_HPP
