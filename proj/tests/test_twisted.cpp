#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace twistalex;
using oracle::Poly;

namespace {

const std::vector<std::int64_t> kConwayDelta1{1, 6, 9, 12, 0, 1, 3, 1, 3, 1, 0, 12, 9, 6, 1};

Poly<Fp> ints_mod(const std::vector<std::int64_t>& c, std::uint32_t p) {
  return reduce_mod(oracle::from_ints(c), p).normalized();
}

template <class S>
void check_against_minors(const Presentation& p, const PermHom& h, Flavor f, FieldSpec field) {
  const auto rep = build_representation<S>(h, f, field);
  const auto c = chain_complex(p, rep);
  REQUIRE(is_zero_matrix(multiply(c.d2, c.d1)));
  // H_0 = coker d1: gcd of the k x k minors
  CHECK(delta0(c).normalized() == oracle::fitting_order<S>(PolyMatrix<S>(c.d1.transpose())));
  // torsion of C_1 / im d2 is the torsion of H_1, since im d1 is free
  const auto d1 = delta1(c);
  const int r = static_cast<int>(poly_rank<S>(c.d2));
  CHECK(d1.rank_d2 == r);
  CHECK(d1.torsion.normalized() == oracle::minors_gcd<S>(c.d2, r));
  if (d1.free_rank == 0) CHECK(d1.delta1 == d1.torsion);
  else CHECK(d1.delta1.is_zero());
  // Euler characteristic over the fraction field
  const int k = c.k, n = p.num_generators(), m = p.num_relators();
  const auto b0 = k - d1.rank_d1, b1 = n * k - d1.rank_d1 - d1.rank_d2, b2 = m * k - d1.rank_d2;
  CHECK(b0 - b1 + b2 == k * (1 - n + m));
  CHECK(b1 == d1.free_rank);
}

}  // namespace

TEST_SUITE("twisted") {
  TEST_CASE("classical polynomial of every table knot") {
    for (const auto& e : support::table()) {
      CAPTURE(e.name);
      const Presentation p = to_presentation(e.input);
      const auto ours = classical_alexander(p);
      CHECK(ours == oracle::fox_alexander(p));
      REQUIRE(e.classical_alexander.has_value());
      CHECK(oracle::int_coeffs(ours) == *e.classical_alexander);
      const auto d = evaluate_classical(p, 0);
      CHECK(d.deg_d0 == 1);
      CHECK(d.deg_d2 == 0);
    }
  }

  TEST_CASE("invariants agree with minors on random presentations") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 60; ++i) {
      const int k = 2 + static_cast<int>(rng() % 2);
      const auto pair = oracle::random_pair(rng, k);
      const Flavor f = std::array{Flavor::Trivial, Flavor::Permutation, Flavor::Standard}[rng() % 3];
      const std::uint32_t prime = std::array{2u, 3u, 5u, 13u}[rng() % 4];
      CAPTURE(print_presentation(pair.p));
      check_against_minors<Fp>(pair.p, pair.h, f, FieldSpec{prime});
      if (i % 4 == 0) check_against_minors<Rational>(pair.p, pair.h, f, FieldSpec{0});
    }
  }

  TEST_CASE("invariants agree with minors on knots") {
    SearchOptions so;
    for (const auto& p : {support::trefoil(), support::figure_eight(), support::knot("12_1345")})
      for (const auto& h : collect_homs(p, 3, so).homs)
        for (Flavor f : {Flavor::Permutation, Flavor::Standard}) check_against_minors<Fp>(p, h, f, FieldSpec{5});
  }

  TEST_CASE("torsion degree from the Wada quotient") {
    SearchOptions so;
    so.skip_trivial = true;
    int compared = 0;
    for (const auto& name : {"11_409", "12_1345", "12_1546"}) {
      const Presentation p = support::knot(name);
      if (p.deficiency() != 1) continue;
      for (const auto& h : collect_homs(p, 4, so, 10).homs)
        for (Flavor f : {Flavor::Permutation, Flavor::Standard}) {
          const auto rep = build_representation<Fp>(h, f, FieldSpec{7});
          const auto r = compute_invariants(p, rep);
          const auto w = torsion_wada(p, rep);
          if (w && r.torsion_degree) {
            CHECK(w->degree() == *r.torsion_degree);
            ++compared;
          }
        }
    }
    CHECK(compared > 0);
    Presentation closed = support::trefoil();
    closed.relators.push_back(Word({1, -2}));
    CHECK_THROWS_AS(torsion_wada(closed, trivial_representation<Fp>(2, FieldSpec{3})), ContractError);
  }

  TEST_CASE("scaling phi dilates every polynomial") {
    const auto p = support::figure_eight();
    SearchOptions so;
    for (const auto& h : collect_homs(p, 4, so).homs)
      for (std::int64_t d : {2, 3}) {
        const auto rep = build_representation<Fp>(h, Flavor::Permutation, FieldSpec{5});
        const auto a = compute_invariants(p, rep);
        const auto b = compute_invariants(scaled_phi(p, d), rep);
        CHECK(b.delta0.normalized() == a.delta0.dilated(static_cast<int>(d)).normalized());
        CHECK(b.delta1.normalized() == a.delta1.dilated(static_cast<int>(d)).normalized());
        REQUIRE(a.torsion_degree);
        CHECK(b.torsion_degree == d * *a.torsion_degree);
      }
  }

  TEST_CASE("genus bounds for simple knots") {
    const auto tref = support::trefoil();
    const auto c = evaluate_classical(tref, 0);
    CHECK(c.delta1 == "1 - t + t^2");
    CHECK(c.delta0 == "-1 + t");
    REQUIRE(c.genus_bound);
    CHECK(c.genus_bound->value == 1);
    const auto unknot = support::load("unknot.pres");
    const auto u = evaluate_classical(unknot, 13);
    REQUIRE(u.genus_bound);
    CHECK(u.genus_bound->value == 0);
    GenusSearchOptions opts;
    opts.ks = {3, 4};
    const auto res = genus_search(support::figure_eight(), opts);
    REQUIRE(res.best);
    CHECK(res.best->degrees.genus_bound->value == 1);
  }

  TEST_CASE("genus search stops at the known genus") {
    GenusSearchOptions opts;
    opts.ks = {2, 3, 4, 5};
    opts.known_genus = 3;
    opts.search.meridional = true;
    const auto res = genus_search(support::load("conway.pres"), opts);
    CHECK(res.certified);
    CHECK(res.status == SearchStatus::Stopped);
    REQUIRE(res.best);
    CHECK(res.best->degrees.genus_bound->rounded == 3);
  }

  TEST_CASE("parallel searches are deterministic") {
    GenusSearchOptions g;
    g.ks = {3, 4, 5};
    const auto p = support::knot("11_401");
    const auto serial = genus_search(p, g);
    g.workers = 4;
    const auto parallel = genus_search(p, g);
    REQUIRE(serial.best);
    REQUIRE(parallel.best);
    CHECK(serial.best->hom == parallel.best->hom);
    CHECK(serial.evaluated == parallel.evaluated);

    FiberingOptions f;
    const auto q = support::knot("12_1823");
    const auto v1 = fibering_check(q, f);
    f.workers = 4;
    const auto v4 = fibering_check(q, f);
    REQUIRE(v1.certificate);
    REQUIRE(v4.certificate);
    CHECK(v1.certificate->hom == v4.certificate->hom);
    CHECK(v1.tasks_evaluated == v4.tasks_evaluated);
  }

  TEST_CASE("fibered knots are never obstructed") {
    FiberingOptions f;
    f.ks = {3, 4};
    f.primes = {2, 3, 5};
    f.known_genus = 1;
    for (const auto& p : {support::trefoil(), support::figure_eight()}) {
      const auto v = fibering_check(p, f);
      CHECK(v.status == VerdictStatus::NoObstructionFound);
      CHECK(v.neuwirth.satisfied == true);
      CHECK(v.complete);
    }
  }

  TEST_CASE("fibering inapplicable when the classical polynomial vanishes") {
    Presentation p;
    p.generators = {"a", "b"};
    p.phi = {1, 0};
    const auto v = fibering_check(p, FiberingOptions{});
    CHECK(v.status == VerdictStatus::Inapplicable);
    CHECK_FALSE(v.certificate.has_value());
  }

  TEST_CASE("non-monic classical polynomial obstructs by Neuwirth") {
    const auto v = fibering_check(support::knot("11_412"), FiberingOptions{});
    CHECK_FALSE(v.neuwirth.monic);
  }

  TEST_CASE("monicity report for the trefoil") {
    const auto p = support::trefoil();
    PermHom h;
    h.k = 3;
    h.images = {Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{2, 3}})};
    REQUIRE(h.satisfies(p));
    const auto m = monicity_check(p, h, Flavor::Standard, {2, 3, 5});
    CHECK(m.degree_q == 2);
    CHECK(m.monic);
    REQUIRE(m.per_prime.size() == 3);
    CHECK(m.per_prime[0].twisted_degree == 2);
    CHECK(m.per_prime[1].twisted_degree == 3);
    CHECK(m.per_prime[1].reduced_degree == 2);
    CHECK(m.per_prime[2].twisted_degree == 2);
  }

  TEST_CASE("closed manifolds use the adjoint for delta2") {
    const BraidWord b{2, {1, 1, 1}};
    const auto q = zero_surgery(braid_to_presentation(b), braid_longitude(b));
    SearchOptions so;
    for (const auto& h : collect_homs(q, 3, so).homs) {
      const auto rep = build_representation<Fp>(h, Flavor::Permutation, FieldSpec{5});
      const auto r = compute_invariants(q, rep);
      if (r.delta1.is_zero()) continue;
      REQUIRE(r.delta2);
      CHECK(*r.delta2 == delta0(q, adjoint(rep)).reflected().normalized());
    }
    const auto c = evaluate_classical(q, 7);
    CHECK(c.delta2 == "6 + t");  // t - 1 over F7
  }

  TEST_CASE("inconsistent Conway hom is rejected") {
    const auto p = support::load("conway.pres");
    CHECK_THROWS_AS(parse_hom(p, read_file(support::fixture("conway_invalid.hom"))), InputError);
  }

  TEST_CASE("search recovers the Conway representation") {
    const auto p = support::load("conway.pres");
    SearchOptions so;
    so.cycle_type = std::vector<int>{1, 1, 3};
    so.meridional = true;
    const auto expected = ints_mod(kConwayDelta1, 13);
    int matches = 0;
    std::optional<PermHom> first;
    search_homs(p, 5, so, [&](const PermHom& h) {
      const auto r = compute_invariants(p, build_representation<Fp>(h, Flavor::Standard, FieldSpec{13}));
      if (r.delta1.normalized() == expected && r.delta0.degree() == 0) {
        ++matches;
        if (!first) first = h;
      }
      return true;
    });
    CHECK(matches == 1);
    REQUIRE(first);
    CHECK(*first == parse_hom(p, read_file(support::fixture("conway.hom"))));
  }

  TEST_CASE("classical polynomial over a prime matches reduction") {
    for (const auto& e : support::table()) {
      const Presentation p = to_presentation(e.input);
      for (std::uint32_t prime : {5u, 7u}) {
        CAPTURE(e.name);
        CHECK(evaluate_classical(p, prime).delta1 == ints_mod(*e.classical_alexander, prime).to_string());
      }
    }
  }

  TEST_CASE("non-prime field is rejected") {
    CHECK_THROWS_AS(evaluate_classical(support::trefoil(), 4), InputError);
  }
}
