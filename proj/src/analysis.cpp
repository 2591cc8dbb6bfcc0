#include "twistalex/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace twistalex {

namespace {

template <class Scalar>
TwistedDegrees evaluate_in(const Presentation& p, const Representation<Scalar>& rep) {
  return summarize(compute_invariants(p, rep));
}

// Runs eval(0..n) on `workers` threads and returns the smallest index for
// which eval returned true (n if none).  Every index below the returned one is
// evaluated; later ones may be skipped.
std::size_t first_decisive(std::size_t n, int workers, const std::function<bool(std::size_t)>& eval) {
  std::atomic<std::size_t> next{0}, best{n};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || i > best.load()) return;
      if (eval(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const int w = std::max(1, workers);
  if (w == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return best.load();
}

SearchOptions nontrivial(SearchOptions s) {
  s.skip_trivial = true;
  return s;
}

}  // namespace

TwistedDegrees evaluate_hom(const Presentation& p, const PermHom& h, Flavor flavor, std::uint32_t prime) {
  const FieldSpec field{prime};
  if (prime == 0) return evaluate_in(p, build_representation<Rational>(h, flavor, field));
  if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
  return evaluate_in(p, build_representation<Fp>(h, flavor, field));
}

TwistedDegrees evaluate_classical(const Presentation& p, std::uint32_t prime) {
  const FieldSpec field{prime};
  if (prime == 0) return evaluate_in(p, trivial_representation<Rational>(p.num_generators(), field));
  if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
  return evaluate_in(p, trivial_representation<Fp>(p.num_generators(), field));
}

LaurentPoly<Rational> classical_alexander(const Presentation& p) {
  const auto rep = trivial_representation<Rational>(p.num_generators(), FieldSpec{0});
  return primitive_integer_part(delta1(p, rep).delta1);
}

GenusSearchResult genus_search(const Presentation& p, const GenusSearchOptions& opts) {
  GenusSearchResult out;
  out.classical = evaluate_classical(p, 0);
  std::vector<GenusCandidate> tasks;
  std::vector<int> ks = opts.ks;
  std::sort(ks.begin(), ks.end());
  for (int k : ks) {
    const HomList homs = collect_homs(p, k, nontrivial(opts.search));
    if (homs.status == SearchStatus::BudgetExhausted) out.status = homs.status;
    for (Flavor f : opts.flavors) {
      if (f == Flavor::Standard && k < 2) continue;
      for (const auto& h : homs.homs)
        for (auto prime : opts.primes) tasks.push_back({h, f, prime, {}});
    }
  }
  auto value = [](const GenusCandidate& c) { return c.degrees.genus_bound ? c.degrees.genus_bound->value : Rational(-1); };
  const std::size_t hit = first_decisive(tasks.size(), opts.workers, [&](std::size_t i) {
    auto& t = tasks[i];
    t.degrees = evaluate_hom(p, t.hom, t.flavor, t.prime);
    return opts.known_genus && t.degrees.genus_bound && t.degrees.genus_bound->rounded >= *opts.known_genus;
  });
  if (hit < tasks.size()) {
    out.best = tasks[hit];
    out.certified = true;
    out.evaluated = hit + 1;
    if (out.status == SearchStatus::Complete) out.status = SearchStatus::Stopped;
    return out;
  }
  out.evaluated = tasks.size();
  for (const auto& t : tasks)
    if (t.degrees.genus_bound && (!out.best || value(t) > value(*out.best))) out.best = t;
  if (opts.known_genus) {
    const auto classical_genus = out.classical.genus_bound;
    out.certified = classical_genus && classical_genus->rounded >= *opts.known_genus;
  }
  return out;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Obstructed: return "obstructed";
    case VerdictStatus::NoObstructionFound: return "no-obstruction-found";
    case VerdictStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

FiberingVerdict fibering_check(const Presentation& p, const FiberingOptions& opts) {
  if (!phi_is_primitive(p)) throw InputError("fibering_check: phi must be primitive");
  FiberingVerdict v;
  v.assumptions.push_back("only the listed primes were sampled; this can obstruct fibering but never certify it");

  const auto alex = classical_alexander(p);
  v.neuwirth.alexander = alex.to_string();
  v.neuwirth.degree = alex.degree();
  v.neuwirth.monic = !alex.is_zero() && (alex.leading() == 1 || alex.leading() == -1) &&
                     (alex.trailing() == 1 || alex.trailing() == -1);
  v.neuwirth.known_genus = opts.known_genus;
  if (opts.known_genus && alex.degree())
    v.neuwirth.satisfied = v.neuwirth.monic && *alex.degree() == 2 * *opts.known_genus;
  if (alex.is_zero()) {
    v.status = VerdictStatus::Inapplicable;
    v.assumptions.push_back("classical Delta_1 vanishes; the degree comparison does not apply");
    return v;
  }
  const Rational untwisted(*alex.degree());

  struct Task {
    PermHom hom;
    Flavor flavor;
    std::uint32_t prime;
    std::optional<FiberingCertificate> cert;
  };
  std::vector<Task> tasks;
  auto add_homs = [&](const std::vector<PermHom>& homs) {
    for (Flavor f : opts.flavors)
      for (const auto& h : homs) {
        if (f == Flavor::Standard && h.k < 2) continue;
        for (auto prime : opts.primes) tasks.push_back({h, f, prime, std::nullopt});
      }
  };
  if (!opts.homs.empty()) {
    add_homs(opts.homs);
  } else {
    std::vector<int> ks = opts.ks;
    std::sort(ks.begin(), ks.end());
    for (int k : ks) {
      const HomList homs = collect_homs(p, k, nontrivial(opts.search));
      if (homs.status == SearchStatus::BudgetExhausted) v.complete = false;
      add_homs(homs.homs);
    }
  }

  const std::size_t hit = first_decisive(tasks.size(), opts.workers, [&](std::size_t i) {
    auto& t = tasks[i];
    const TwistedDegrees d = evaluate_hom(p, t.hom, t.flavor, t.prime);
    FiberingCertificate c;
    c.hom = t.hom;
    c.flavor = t.flavor;
    c.prime = t.prime;
    c.k = d.k;
    c.deg_d0 = d.deg_d0;
    c.deg_d1 = d.deg_d1;
    c.deg_d2 = d.deg_d2;
    c.untwisted_side = untwisted;
    c.delta1_vanishes = !d.deg_d1.has_value();
    if (d.torsion_degree) c.twisted_side = Rational(*d.torsion_degree) / d.k + 1 + p.b3();
    const bool obstructs = c.delta1_vanishes || (c.twisted_side && *c.twisted_side != untwisted);
    if (obstructs) t.cert = c;
    return obstructs;
  });
  if (hit < tasks.size()) {
    v.status = VerdictStatus::Obstructed;
    v.certificate = tasks[hit].cert;
    v.tasks_evaluated = hit + 1;
  } else {
    v.status = VerdictStatus::NoObstructionFound;
    v.tasks_evaluated = tasks.size();
  }
  return v;
}

MonicityReport monicity_check(const Presentation& p, const PermHom& h, Flavor flavor,
                              const std::vector<std::uint32_t>& primes) {
  MonicityReport m;
  const auto rep_q = build_representation<Rational>(h, flavor, FieldSpec{0});
  const auto rq = compute_invariants(p, rep_q);
  const auto integral = primitive_integer_part(rq.delta1);
  m.delta1_integer = integral.to_string();
  m.degree_q = integral.degree();
  m.torsion_degree_q = rq.torsion_degree;
  m.monic = !integral.is_zero() && (integral.leading() == 1 || integral.leading() == -1) &&
            (integral.trailing() == 1 || integral.trailing() == -1);
  m.evidence_against_fibering = !m.monic;
  for (auto prime : primes) {
    PrimeDegrees d;
    d.prime = prime;
    if (!integral.is_zero()) d.reduced_degree = reduce_mod(integral, prime).degree();
    const auto rp = compute_invariants(p, build_representation<Fp>(h, flavor, FieldSpec{prime}));
    d.twisted_degree = rp.delta1.degree();
    d.torsion_degree = rp.torsion_degree;
    if (!d.twisted_degree || d.torsion_degree != m.torsion_degree_q) m.evidence_against_fibering = true;
    m.per_prime.push_back(d);
  }
  m.caveat = "only finitely many maximal ideals (the listed primes) were sampled";
  return m;
}

}  // namespace twistalex
