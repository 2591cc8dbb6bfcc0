#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace twistalex;

namespace {

std::vector<Perm> all_perms(int k) {
  std::vector<std::uint8_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Every generator-image tuple that kills the relators, by exhaustion.
std::vector<PermHom> brute_force_homs(const Presentation& p, int k) {
  const auto perms = all_perms(k);
  const int n = p.num_generators();
  std::vector<PermHom> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    PermHom h;
    h.k = k;
    for (int i = 0; i < n; ++i) h.images.push_back(perms[idx[i]]);
    if (h.satisfies(p)) out.push_back(h);
    int i = n - 1;
    while (i >= 0 && ++idx[i] == perms.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

PermHom canonical(const PermHom& h) {
  PermHom best = h;
  for (const auto& g : all_perms(h.k)) {
    PermHom c = h;
    for (auto& x : c.images) x = g * x * g.inverse();
    best = std::min(best, c);
  }
  return best;
}

template <class S>
bool same(const FieldMatrix<S>& a, const FieldMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace

TEST_SUITE("reps") {
  TEST_CASE("permutations") {
    const Perm a = Perm::from_cycles(4, {{1, 2, 3}});
    const Perm b = Perm::from_cycles(4, {{3, 4}});
    CHECK(a.to_cycle_string() == "(1 2 3)");
    CHECK((a * b)(2) == a(b(2)));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.cycle_type() == std::vector<int>{1, 3});
    CHECK((a * b).cycles() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(Perm::identity(3).to_cycle_string() == "()");
  }

  TEST_CASE("hom search matches exhaustive enumeration") {
    for (const auto& p : {support::trefoil(), support::figure_eight(), support::load("trefoil_wirtinger.pres")}) {
      for (int k : {2, 3, 4}) {
        SearchOptions all;
        all.up_to_conjugacy = false;
        const auto found = collect_homs(p, k, all).homs;
        const auto expected = brute_force_homs(p, k);
        CHECK(found == expected);  // same set, same lexicographic order

        SearchOptions classes;
        const auto reps = collect_homs(p, k, classes).homs;
        std::set<PermHom> oracle_classes;
        for (const auto& h : expected) oracle_classes.insert(canonical(h));
        CHECK(reps.size() == oracle_classes.size());
        std::set<PermHom> got;
        for (const auto& h : reps) got.insert(canonical(h));
        CHECK(got == oracle_classes);
      }
    }
  }

  TEST_CASE("trefoil S3 hom count") {
    SearchOptions all;
    all.up_to_conjugacy = false;
    // six with x = y, six sending x, y to distinct transpositions
    CHECK(collect_homs(support::trefoil(), 3, all).homs.size() == 12);
  }

  TEST_CASE("search restrictions") {
    const auto p = support::trefoil();
    SearchOptions t;
    t.transitive_only = true;
    for (const auto& h : collect_homs(p, 3, t).homs) CHECK(h.transitive());
    SearchOptions nt;
    nt.skip_trivial = true;
    for (const auto& h : collect_homs(p, 3, nt).homs) CHECK_FALSE(h.images[0].is_identity());
    SearchOptions ct;
    ct.cycle_type = std::vector<int>{1, 2};
    for (const auto& h : collect_homs(p, 3, ct).homs)
      for (const auto& g : h.images) CHECK(g.cycle_type() == std::vector<int>{1, 2});
    SearchOptions mer;
    mer.meridional = true;
    for (const auto& h : collect_homs(p, 4, mer).homs) CHECK(h.images[0].cycle_type() == h.images[1].cycle_type());
    CHECK(collect_homs(p, 3, SearchOptions{}, 1).homs.size() == 1);
  }

  TEST_CASE("search can stop early") {
    int seen = 0;
    const auto status = search_homs(support::figure_eight(), 4, SearchOptions{}, [&](const PermHom&) {
      return ++seen < 2;
    });
    CHECK(status == SearchStatus::Stopped);
    CHECK(seen == 2);
  }

  TEST_CASE("representations are homomorphisms") {
    const auto p = support::figure_eight();
    SearchOptions so;
    so.skip_trivial = true;
    for (const auto& h : collect_homs(p, 4, so).homs)
      for (Flavor f : {Flavor::Trivial, Flavor::Permutation, Flavor::Standard})
        for (std::uint32_t prime : {2u, 5u}) {
          const auto r = build_representation<Fp>(h, f, FieldSpec{prime});
          CHECK(r.satisfies(p));
          CHECK(r.dim == (f == Flavor::Trivial ? 1 : f == Flavor::Permutation ? 4 : 3));
          const Word u({1, -2, 2, 2, 1}), v({-1, 2, 1});
          CHECK(same<Fp>(r.evaluate(u * v), field_product<Fp>(r.evaluate(u), r.evaluate(v))));
          if (f == Flavor::Permutation)
            CHECK(same<Fp>(r.evaluate(u), detail::permutation_matrix<Fp>(h.evaluate(u), FieldSpec{prime})));
          const auto a = adjoint(r);
          CHECK(a.satisfies(p));
          CHECK(same<Fp>(a.evaluate(u), field_inverse<Fp>(r.evaluate(u)).transpose()));
          const auto aa = adjoint(a);
          for (std::size_t i = 0; i < r.matrices.size(); ++i) CHECK(same<Fp>(aa.matrices[i], r.matrices[i]));
        }
  }

  TEST_CASE("matrix inverse over Q") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
      const auto g = oracle::random_perm(rng, 5);
      const auto m = detail::standard_matrix<Rational>(g, FieldSpec{0});
      const auto inv = field_inverse<Rational>(m);
      CHECK(is_identity<Rational>(field_product<Rational>(m, inv)));
      CHECK(same<Rational>(inv, detail::standard_matrix<Rational>(g.inverse(), FieldSpec{0})));
    }
  }

  TEST_CASE("relator violation is a contract error") {
    const auto p = support::trefoil();
    PermHom bad;
    bad.k = 3;
    bad.images = {Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{1, 2, 3}})};
    CHECK_FALSE(bad.satisfies(p));
    const auto r = build_representation<Fp>(bad, Flavor::Permutation, FieldSpec{3});
    CHECK_THROWS_AS(chain_complex(p, r), ContractError);
  }

  TEST_CASE("flavor names") {
    for (Flavor f : {Flavor::Trivial, Flavor::Permutation, Flavor::Standard}) CHECK(parse_flavor(to_string(f)) == f);
    CHECK_THROWS_AS(parse_flavor("adjoint"), InputError);
  }
}
