#ifndef TWISTALEX_FPGROUP_HPP
#define TWISTALEX_FPGROUP_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistalex/int_smith.hpp"

namespace twistalex {

/// Raised for malformed user input (presentations, words, braids, files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Freely reduced word in the free group.  Letters are signed 1-based
/// generator indices: +i is generator i, -i its inverse.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  std::int64_t exponent_sum(int generator) const;
  /// Largest generator index occurring (0 for the empty word).
  int max_generator() const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

Word generator_word(int index, int power = 1);

/// Element of Z[F] as a sum of integer multiples of reduced words.
class GroupRingElem {
 public:
  void add(const Word& w, std::int64_t c);
  const std::map<Word, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b);
  friend GroupRingElem operator*(const Word& w, const GroupRingElem& x);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  std::map<Word, std::int64_t> terms_;
};

/// Left Fox derivative d w / d x_generator (generator is 1-based), with
/// d(uv) = du + u dv.
GroupRingElem fox_derivative(const Word& w, int generator, int num_generators);

enum class ManifoldKind { BoundaryTori, Closed };

const char* to_string(ManifoldKind kind);

/// Finitely presented group with a class phi in Hom(G, Z), given by its
/// values on generators.  An empty `phi` means "not yet chosen".
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::int64_t> phi;
  ManifoldKind kind = ManifoldKind::BoundaryTori;
  std::string label;
  /// Every generator is a meridian (Wirtinger or braid presentations), so
  /// homomorphisms to S_k send all generators to one conjugacy class.
  bool meridional = false;

  int num_generators() const { return static_cast<int>(generators.size()); }
  int num_relators() const { return static_cast<int>(relators.size()); }
  int deficiency() const { return num_generators() - num_relators(); }
  /// b3 of the manifold: 1 for closed, 0 for nonempty toroidal boundary.
  int b3() const { return kind == ManifoldKind::Closed ? 1 : 0; }
  bool has_phi() const { return !phi.empty(); }

  std::int64_t phi_of(const Word& w) const;
  int index_of(const std::string& name) const;  // 1-based, 0 if absent

  /// Throws InputError unless letters are in range and phi vanishes on relators.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Abelianized relator matrix: rows are relators, columns generators.
IntMatrix abelianization_matrix(const Presentation& p);

struct FirstHomology {
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
};

FirstHomology first_homology(const Presentation& p);

/// Chooses a primitive phi vanishing on all relators, or primitivizes the
/// given one.  Throws InputError when b1 = 0 or a given phi is not a cocycle.
Presentation derive_phi(const Presentation& p);

bool phi_is_primitive(const Presentation& p);

/// Presentation with phi replaced by d * phi.
Presentation scaled_phi(const Presentation& p, std::int64_t d);

struct BraidWord {
  int strands = 0;
  std::vector<int> letters;  // +i is sigma_i, -i its inverse

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Knot/link group of the braid closure via the Artin action on the free
/// group; one relator is dropped and phi sends every meridian to 1.
Presentation braid_to_presentation(const BraidWord& b);

/// Image of a word under the Artin action of the braid.
Word artin_action(const BraidWord& b, const Word& w);

/// x_lhs = w x_rhs w^-1.
struct ConjugationRelation {
  int lhs = 0;
  Word conjugator;
  int rhs = 0;
};

/// Wirtinger-type presentation: the last relation is dropped, phi = 1.
Presentation parse_wirtinger(const std::vector<std::string>& generators,
                             const std::vector<ConjugationRelation>& relations, const std::string& label = {});

/// Recognises `lhs = w y w^-1` given both sides as words; throws InputError
/// if the equation is not of that shape.
ConjugationRelation as_conjugation(const Word& lhs, const Word& rhs);

/// Adds the longitude as a relator and marks the manifold closed.
Presentation zero_surgery(const Presentation& p, const Word& longitude);

/// Longitude of the braid closure read off the braid, corrected by the writhe
/// so that its phi-value is zero.  Only meaningful for knots (one component).
Word braid_longitude(const BraidWord& b);

/// Number of components of the braid closure.
int braid_components(const BraidWord& b);

}  // namespace twistalex

#endif  // TWISTALEX_FPGROUP_HPP
