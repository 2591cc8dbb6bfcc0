#ifndef TWISTALEX_ANALYSIS_HPP
#define TWISTALEX_ANALYSIS_HPP

// Field-independent summaries of twisted invariants, and the drivers built on
// them: genus certification by representation search, the fibering
// obstruction, and the monicity test for integral representations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistalex/perm.hpp"
#include "twistalex/representation.hpp"
#include "twistalex/twisted.hpp"

namespace twistalex {

struct TwistedDegrees {
  FieldSpec field;
  int k = 0;  // representation dimension
  ManifoldKind kind = ManifoldKind::BoundaryTori;
  std::string delta0, delta1, delta1_torsion, delta2;
  std::optional<int> deg_d0, deg_d1, deg_d1_torsion, deg_d2;
  std::optional<int> torsion_degree;
  std::optional<Rational> norm_bound;
  std::optional<GenusBound> genus_bound;
  Rational boundary_class_bound;
};

template <class Scalar>
TwistedDegrees summarize(const InvariantReport<Scalar>& r) {
  TwistedDegrees s;
  s.field = r.field;
  s.k = r.k;
  s.kind = r.kind;
  s.delta0 = r.delta0.normalized().to_string();
  s.delta1 = r.delta1.normalized().to_string();
  s.delta1_torsion = r.delta1_torsion.normalized().to_string();
  s.delta2 = r.delta2 ? r.delta2->normalized().to_string() : "";
  s.deg_d0 = r.delta0.degree();
  s.deg_d1 = r.delta1.degree();
  s.deg_d1_torsion = r.delta1_torsion.degree();
  if (r.delta2) s.deg_d2 = r.delta2->degree();
  s.torsion_degree = r.torsion_degree;
  s.norm_bound = norm_bound(r);
  s.genus_bound = genus_bound(r);
  s.boundary_class_bound = boundary_class_bound(r);
  return s;
}

/// Invariants of (p, hom, flavor) over F_p, or over Q when prime == 0.
TwistedDegrees evaluate_hom(const Presentation& p, const PermHom& h, Flavor flavor, std::uint32_t prime);

/// Untwisted invariants (trivial rank-one representation) over F_p or Q.
TwistedDegrees evaluate_classical(const Presentation& p, std::uint32_t prime);

/// Classical Alexander polynomial over Q, scaled to a primitive integer
/// polynomial with positive leading coefficient.
LaurentPoly<Rational> classical_alexander(const Presentation& p);

struct GenusSearchOptions {
  std::vector<int> ks{5};
  std::vector<std::uint32_t> primes{13};
  std::vector<Flavor> flavors{Flavor::Standard, Flavor::Permutation};
  SearchOptions search;
  std::optional<std::int64_t> known_genus;
  int workers = 1;
};

struct GenusCandidate {
  PermHom hom;
  Flavor flavor = Flavor::Trivial;
  std::uint32_t prime = 0;
  TwistedDegrees degrees;
};

struct GenusSearchResult {
  TwistedDegrees classical;                // trivial representation over Q
  std::optional<GenusCandidate> best;      // largest twisted genus bound
  bool certified = false;                  // best bound reaches known_genus
  SearchStatus status = SearchStatus::Complete;
  std::size_t evaluated = 0;
};

/// Tries k ascending, then flavors in the given order, over all homs found;
/// stops once the known genus (if any) is certified.
GenusSearchResult genus_search(const Presentation& p, const GenusSearchOptions& opts);

enum class VerdictStatus { Obstructed, NoObstructionFound, Inapplicable };

const char* to_string(VerdictStatus s);

struct FiberingCertificate {
  PermHom hom;
  Flavor flavor = Flavor::Trivial;
  std::uint32_t prime = 0;
  int k = 0;  // representation dimension
  std::optional<int> deg_d0, deg_d1, deg_d2;
  bool delta1_vanishes = false;
  std::optional<Rational> twisted_side;  // deg(tau)/k + 1 + b3
  Rational untwisted_side;               // deg of the classical Delta_1
};

struct NeuwirthCheck {
  std::string alexander;  // primitive integer classical polynomial
  std::optional<int> degree;
  bool monic = false;
  std::optional<std::int64_t> known_genus;
  std::optional<bool> satisfied;  // monic and deg = 2 genus
};

struct FiberingOptions {
  std::vector<int> ks{3, 4, 5};
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  std::vector<Flavor> flavors{Flavor::Permutation, Flavor::Standard};
  SearchOptions search;
  /// When nonempty, used instead of searching.
  std::vector<PermHom> homs;
  std::optional<std::int64_t> known_genus;
  int workers = 1;
};

struct FiberingVerdict {
  VerdictStatus status = VerdictStatus::NoObstructionFound;
  std::optional<FiberingCertificate> certificate;
  NeuwirthCheck neuwirth;
  bool complete = true;  // false if a search budget ran out
  std::size_t tasks_evaluated = 0;
  std::vector<std::string> assumptions;
};

/// Compares deg(Delta_K) with (1/k) deg tau + 1 + b3 over every
/// (hom, flavor, prime); any mismatch or vanishing Delta_1 obstructs fibering.
FiberingVerdict fibering_check(const Presentation& p, const FiberingOptions& opts);

struct PrimeDegrees {
  std::uint32_t prime = 0;
  std::optional<int> reduced_degree;   // deg of Delta_1 over Z reduced mod p
  std::optional<int> twisted_degree;   // deg of Delta_1 computed over F_p
  std::optional<int> torsion_degree;   // over F_p
};

struct MonicityReport {
  std::string delta1_integer;  // primitive integer representative
  std::optional<int> degree_q;
  std::optional<int> torsion_degree_q;
  bool monic = false;
  std::vector<PrimeDegrees> per_prime;
  bool evidence_against_fibering = false;
  std::string caveat;
};

/// Delta_1 over Q for an integral representation, compared with its
/// reductions and with the invariants computed directly over F_p.
MonicityReport monicity_check(const Presentation& p, const PermHom& h, Flavor flavor,
                              const std::vector<std::uint32_t>& primes);

}  // namespace twistalex

#endif  // TWISTALEX_ANALYSIS_HPP
