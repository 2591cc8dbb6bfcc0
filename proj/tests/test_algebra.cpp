#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace twistalex;
using oracle::Poly;

namespace {

Poly<Fp> fp_poly(std::uint32_t p, int low, std::vector<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.emplace_back(x, p);
  return Poly<Fp>(low, std::move(v));
}

template <class S>
bool matrices_equal(const PolyMatrix<S>& a, const PolyMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
void check_smith(const PolyMatrix<S>& a) {
  const auto snf = smith_normal_form(a, true);
  CHECK(matrices_equal<S>(multiply(multiply(snf.U, a), snf.V), snf.D));
  CHECK(matrices_equal<S>(multiply(snf.U, snf.Uinv), poly_identity<S>(a.rows())));
  for (Eigen::Index i = 0; i < snf.D.rows(); ++i)
    for (Eigen::Index j = 0; j < snf.D.cols(); ++j)
      if (i != j) CHECK(snf.D(i, j).is_zero());
  for (std::size_t s = 0; s < snf.divisors.size(); ++s) {
    CHECK(snf.divisors[s] == snf.divisors[s].normalized());
    if (s + 1 < snf.divisors.size()) CHECK(divides(snf.divisors[s], snf.divisors[s + 1]));
  }
  CHECK(snf.rank() == poly_rank<S>(a));
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("prime field arithmetic") {
    const Fp a(5, 7), b(4, 7);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((b - a).value() == 6);
    CHECK((a * b).value() == 6);
    CHECK((a / b * b) == a);
    for (std::int64_t x = 1; x < 13; ++x) CHECK((Fp(x, 13) * Fp(x, 13).inverse()).value() == 1);
    CHECK((Fp(-1, 5)).value() == 4);
    // unbound literals adopt the modulus they meet
    CHECK((Fp(1) + Fp(4, 5)).value() == 0);
    CHECK((Fp(3) * Fp(2, 5)).modulus() == 5);
    CHECK_THROWS(Fp(0, 7).inverse());
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
  }

  TEST_CASE("rational reduction") {
    CHECK(reduce_mod(Rational(3, 2), 5).value() == 4);
    CHECK_THROWS_AS(reduce_mod(Rational(1, 5), 5), std::domain_error);
  }

  TEST_CASE("laurent polynomial basics") {
    const auto f = fp_poly(5, -1, {1, 2, 3});  // t^-1 + 2 + 3t
    CHECK(f.low() == -1);
    CHECK(f.high() == 1);
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0).value() == 2);
    CHECK(f.coeff(7).is_zero());
    const auto n = f.normalized();
    CHECK(n.low() == 0);
    CHECK(n.leading().value() == 1);
    CHECK(f.reflected().reflected() == f);
    CHECK(f.shifted(3).low() == 2);
    CHECK(f.dilated(2).degree() == 4);
    CHECK((f - f).is_zero());
    CHECK_FALSE(Poly<Fp>().degree().has_value());
    CHECK(Poly<Rational>::monomial(Rational(2), 3).is_unit());
  }

  TEST_CASE("laurent printing") {
    const auto f = oracle::from_ints({-1, 0, 3, -1});
    CHECK(f.to_string() == "-1 + 3*t^2 - t^3");
    CHECK(Poly<Rational>().to_string() == "0");
    CHECK(Poly<Rational>::monomial(Rational(1), -2).to_string() == "t^-2");
  }

  TEST_CASE("division and gcd against random products") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
      for (int i = 0; i < 50; ++i) {
        auto g = oracle::random_poly<Fp>(rng, p, 3, 100);
        auto a = oracle::random_poly<Fp>(rng, p, 4, 100);
        auto b = oracle::random_poly<Fp>(rng, p, 4, 100);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        const auto x = a * g, y = b * g;
        const auto [q, r] = divmod(x, b);
        CHECK(q * b + r == x);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
        const auto d = gcd(x, y);
        CHECK(divides(g, d));
        CHECK(divides(d, x));
        CHECK(divides(d, y));
        CHECK(exact_div(x, g) == a);
      }
    }
  }

  TEST_CASE("gcd is a unit class invariant") {
    const auto f = fp_poly(7, 0, {1, 1});
    CHECK(gcd(f.shifted(4), (Fp(3, 7) * f).shifted(-2)) == f.normalized());
    CHECK(gcd(Poly<Fp>(), Poly<Fp>()).is_zero());
  }

  TEST_CASE("primitive integer part") {
    std::vector<Rational> c{Rational(2, 3), Rational(-4, 3), Rational(2, 3)};
    const auto f = primitive_integer_part(Poly<Rational>(-2, c));
    CHECK(oracle::int_coeffs(f) == std::vector<std::int64_t>{1, -2, 1});
    CHECK(f.low() == 0);
    const auto g = primitive_integer_part(oracle::from_ints({3, 0, -6}));
    CHECK(oracle::int_coeffs(g) == std::vector<std::int64_t>{-1, 0, 2});
  }

  TEST_CASE("determinant agrees with permutation expansion") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 13u})
      for (int n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 6; ++rep) {
          const auto a = oracle::random_matrix<Fp>(rng, p, n, n, 2);
          std::vector<std::vector<Poly<Fp>>> m(n, std::vector<Poly<Fp>>(n));
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
          CHECK(determinant<Fp>(a).normalized() == oracle::leibniz_det(m).normalized());
        }
  }

  TEST_CASE("smith form identities on random matrices up to 8x8") {
    std::mt19937_64 rng(2024);
    for (std::uint32_t p : {2u, 3u, 5u, 13u})
      for (int i = 0; i < 25; ++i) {
        const int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
        check_smith<Fp>(oracle::random_matrix<Fp>(rng, p, rows, cols, 2, 50 + static_cast<int>(rng() % 50)));
      }
    for (int i = 0; i < 15; ++i) {
      const int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
      check_smith<Rational>(oracle::random_matrix<Rational>(rng, 0, rows, cols, 2));
    }
  }

  TEST_CASE("module order equals the gcd of maximal minors") {
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {2u, 3u, 5u, 13u})
      for (int i = 0; i < 40; ++i) {
        const int rows = 1 + static_cast<int>(rng() % 4), cols = rows + static_cast<int>(rng() % 3) - 1;
        if (cols < 1) continue;
        const auto a = oracle::random_matrix<Fp>(rng, p, rows, cols, 2);
        const auto o = coker_order<Fp>(a, rows);
        CHECK(o.order == oracle::fitting_order<Fp>(a));
        CHECK(o.free_rank == rows - poly_rank<Fp>(a));
      }
  }

  TEST_CASE("module order edge cases") {
    const auto empty = PolyMatrix<Fp>(3, 0);
    const auto o = coker_order<Fp>(empty, 3);
    CHECK(o.free_rank == 3);
    CHECK(o.order.is_zero());
    CHECK_THROWS_AS(coker_order<Fp>(empty, 2), std::invalid_argument);
    const auto z = poly_zero<Fp>(2, 2);
    CHECK(coker_order<Fp>(z, 2).free_rank == 2);
  }

  TEST_CASE("integer smith form") {
    IntMatrix a(3, 3);
    a << 2, 4, 4, -6, 6, 12, 10, -4, -16;
    const auto s = int_smith(a);
    CHECK(s.divisors == std::vector<std::int64_t>{2, 6, 12});
    CHECK((s.U * a * s.V) == s.D);
    CHECK(s.rank == 3);
    IntMatrix b(2, 3);
    b << 1, 1, 0, 0, 0, 0;
    const auto t = int_smith(b);
    CHECK(t.rank == 1);
    CHECK(t.divisors == std::vector<std::int64_t>{1, 0});
  }

  TEST_CASE("integer smith form on random matrices") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
      IntMatrix a(r, c);
      for (int x = 0; x < r; ++x)
        for (int y = 0; y < c; ++y) a(x, y) = static_cast<std::int64_t>(rng() % 11) - 5;
      const auto s = int_smith(a);
      CHECK((s.U * a * s.V) == s.D);
      for (std::size_t k = 0; k + 1 < s.divisors.size(); ++k)
        if (s.divisors[k + 1] != 0) CHECK(s.divisors[k + 1] % s.divisors[k] == 0);
    }
  }
}
