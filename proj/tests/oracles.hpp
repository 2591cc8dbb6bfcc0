#ifndef TWISTALEX_TESTS_ORACLES_HPP
#define TWISTALEX_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests: Leibniz
// determinants, Fitting-ideal module orders, a classical Alexander polynomial
// straight from Fox derivatives, and random test data.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "twistalex/analysis.hpp"
#include "twistalex/fpgroup.hpp"
#include "twistalex/perm.hpp"
#include "twistalex/poly_matrix.hpp"

namespace oracle {

using namespace twistalex;

template <class S>
using Poly = LaurentPoly<S>;

/// Determinant by permutation expansion (no pivoting, no division).
template <class S>
Poly<S> leibniz_det(const std::vector<std::vector<Poly<S>>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly<S>(S(1));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly<S> total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly<S> term(S(1));
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void choose(int n, int r, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (r > n) return;
  for (;;) {
    f(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all r x r minors of A (zero if there are none or all vanish).
template <class S>
Poly<S> minors_gcd(const PolyMatrix<S>& a, int r) {
  if (r == 0) return Poly<S>(S(1));
  Poly<S> g;
  choose(static_cast<int>(a.rows()), r, [&](const std::vector<int>& rows) {
    choose(static_cast<int>(a.cols()), r, [&](const std::vector<int>& cols) {
      std::vector<std::vector<Poly<S>>> m(r, std::vector<Poly<S>>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[i][j] = a(rows[i], cols[j]);
      g = gcd(g, leibniz_det(m));
    });
  });
  return g.normalized();
}

/// Order of coker(A) for A with `rows` = ambient rank: the gcd of the maximal
/// minors (zeroth Fitting ideal), zero when there are too few columns.
template <class S>
Poly<S> fitting_order(const PolyMatrix<S>& a) {
  const int r = static_cast<int>(a.rows()), c = static_cast<int>(a.cols());
  if (r == 0) return Poly<S>(S(1));
  Poly<S> g;
  choose(c, r, [&](const std::vector<int>& cols) {
    std::vector<std::vector<Poly<S>>> m(r, std::vector<Poly<S>>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[i][j] = a(i, cols[j]);
    g = gcd(g, leibniz_det(m));
  });
  return g.normalized();
}

/// Classical Alexander polynomial over Q of a knot group presentation: the gcd
/// of the (n-1)-minors of the abelianized Fox matrix.  Uses only
/// fox_derivative.
inline Poly<Rational> fox_alexander(const Presentation& p) {
  const int n = p.num_generators(), m = p.num_relators();
  PolyMatrix<Rational> fox = poly_zero<Rational>(m, n);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      Poly<Rational> e;
      const auto d = fox_derivative(p.relators[j], i + 1, n);
      for (const auto& [w, c] : d.terms())
        e += Poly<Rational>::monomial(Rational(c), static_cast<int>(p.phi_of(w)));
      fox(j, i) = e;
    }
  // Elementary ideal E_1: gcd of (n-1) x (n-1) minors.
  Poly<Rational> g;
  choose(n, n - 1, [&](const std::vector<int>& cols) {
    choose(m, n - 1, [&](const std::vector<int>& rows) {
      std::vector<std::vector<Poly<Rational>>> mm(n - 1, std::vector<Poly<Rational>>(n - 1));
      for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) mm[a][b] = fox(rows[a], cols[b]);
      g = gcd(g, leibniz_det(mm));
    });
  });
  return primitive_integer_part(g);
}

/// Integer coefficient list (from t^0) of a primitive integer polynomial.
inline std::vector<std::int64_t> int_coeffs(const Poly<Rational>& f) {
  std::vector<std::int64_t> out;
  for (int e = f.low(); e <= f.high(); ++e) out.push_back(f.coeff(e).convert_to<std::int64_t>());
  return out;
}

inline Poly<Rational> from_ints(const std::vector<std::int64_t>& c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return Poly<Rational>(0, std::move(v));
}

template <class S>
S random_scalar(std::mt19937_64& rng, std::uint32_t p) {
  if constexpr (std::is_same_v<S, Fp>) {
    return Fp(static_cast<std::int64_t>(rng() % p), p);
  } else {
    return Rational(static_cast<std::int64_t>(rng() % 7) - 3);
  }
}

template <class S>
Poly<S> random_poly(std::mt19937_64& rng, std::uint32_t p, int max_degree, int density_percent = 70) {
  if (static_cast<int>(rng() % 100) >= density_percent) return {};
  std::vector<S> c;
  const int d = static_cast<int>(rng() % (max_degree + 1));
  for (int i = 0; i <= d; ++i) c.push_back(random_scalar<S>(rng, p));
  const int low = static_cast<int>(rng() % 3) - 1;
  return Poly<S>(low, std::move(c));
}

template <class S>
PolyMatrix<S> random_matrix(std::mt19937_64& rng, std::uint32_t p, int rows, int cols, int max_degree,
                            int density_percent = 70) {
  PolyMatrix<S> a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = random_poly<S>(rng, p, max_degree, density_percent);
  return a;
}

inline Perm random_perm(std::mt19937_64& rng, int k) {
  std::vector<std::uint8_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

inline int perm_order(const Perm& g) {
  int o = 1;
  for (int len : g.cycle_type()) o = std::lcm(o, len);
  return o;
}

struct RandomPair {
  Presentation p;
  PermHom h;
};

/// Deficiency-one presentation together with a hom to S_k satisfying it.
/// Relators are powers u^o of random words u with phi(u) = 0, where o is the
/// order of h(u); phi(x_1) = 1 keeps phi nontrivial.
inline RandomPair random_pair(std::mt19937_64& rng, int k) {
  RandomPair out;
  const int n = 2 + static_cast<int>(rng() % 2);
  auto& p = out.p;
  for (int i = 0; i < n; ++i) p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
  p.phi.assign(n, 0);
  p.phi[0] = 1;
  for (int i = 1; i < n; ++i) p.phi[i] = static_cast<std::int64_t>(rng() % 3) - 1;
  out.h.k = k;
  for (int i = 0; i < n; ++i) out.h.images.push_back(random_perm(rng, k));
  while (p.num_relators() < n - 1) {
    std::vector<int> letters;
    const int len = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % n);
      letters.push_back(rng() % 2 ? g : -g);
    }
    Word u(letters);
    const std::int64_t ph = p.phi_of(u);
    u = u * generator_word(1, static_cast<int>(-ph));
    if (u.empty()) continue;
    const int o = perm_order(out.h.evaluate(u));
    Word r;
    for (int i = 0; i < o; ++i) r = r * u;
    if (r.empty()) continue;
    p.relators.push_back(r);
  }
  p.label = "random";
  return out;
}

}  // namespace oracle

#endif  // TWISTALEX_TESTS_ORACLES_HPP
