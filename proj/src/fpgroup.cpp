#include "twistalex/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace twistalex {

Word::Word(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw InputError("word letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -x) letters_.pop_back();
    else letters_.push_back(x);
  }
}

Word Word::inverse() const {
  std::vector<int> r(letters_.rbegin(), letters_.rend());
  for (int& x : r) x = -x;
  Word w;
  w.letters_ = std::move(r);
  return w;
}

std::int64_t Word::exponent_sum(int generator) const {
  std::int64_t s = 0;
  for (int x : letters_) {
    if (x == generator) ++s;
    else if (x == -generator) --s;
  }
  return s;
}

int Word::max_generator() const {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<int> r = a.letters_;
  r.reserve(a.size() + b.size());
  for (int x : b.letters_) {
    if (!r.empty() && r.back() == -x) r.pop_back();
    else r.push_back(x);
  }
  Word w;
  w.letters_ = std::move(r);
  return w;
}

Word generator_word(int index, int power) {
  std::vector<int> l(std::abs(power), power > 0 ? index : -index);
  return Word(std::move(l));
}

void GroupRingElem::add(const Word& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, c);
  return a;
}

GroupRingElem operator*(const Word& w, const GroupRingElem& x) {
  GroupRingElem r;
  for (const auto& [u, c] : x.terms_) r.add(w * u, c);
  return r;
}

GroupRingElem fox_derivative(const Word& w, int generator, int num_generators) {
  if (generator < 1 || generator > num_generators) throw InputError("fox_derivative: unknown generator index");
  if (w.max_generator() > num_generators) throw InputError("fox_derivative: word uses undeclared generator");
  GroupRingElem out;
  std::vector<int> prefix;
  for (int x : w.letters()) {
    if (x == generator) {
      out.add(Word(prefix), 1);
      prefix.push_back(x);
    } else if (x == -generator) {
      prefix.push_back(x);
      out.add(Word(prefix), -1);
    } else {
      prefix.push_back(x);
    }
  }
  return out;
}

const char* to_string(ManifoldKind kind) { return kind == ManifoldKind::Closed ? "closed" : "boundary-tori"; }

std::int64_t Presentation::phi_of(const Word& w) const {
  if (phi.empty()) throw std::logic_error("presentation has no phi");
  std::int64_t s = 0;
  for (int x : w.letters()) s += x > 0 ? phi[x - 1] : -phi[-x - 1];
  return s;
}

int Presentation::index_of(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? 0 : static_cast<int>(it - generators.begin()) + 1;
}

void Presentation::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j]) throw InputError("duplicate generator name '" + generators[i] + "'");
  for (const auto& r : relators)
    if (r.max_generator() > num_generators()) throw InputError("relator uses an undeclared generator");
  if (!phi.empty()) {
    if (phi.size() != generators.size()) throw InputError("phi must assign a value to every generator");
    for (std::size_t j = 0; j < relators.size(); ++j)
      if (phi_of(relators[j]) != 0)
        throw InputError("phi does not vanish on relator " + std::to_string(j + 1));
  }
}

IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix a = IntMatrix::Zero(p.num_relators(), p.num_generators());
  for (int j = 0; j < p.num_relators(); ++j)
    for (int x : p.relators[j].letters()) a(j, std::abs(x) - 1) += x > 0 ? 1 : -1;
  return a;
}

FirstHomology first_homology(const Presentation& p) {
  FirstHomology h;
  const IntSmith s = int_smith(abelianization_matrix(p));
  h.betti = p.num_generators() - s.rank;
  for (auto d : s.divisors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

namespace {

std::int64_t gcd_of(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace

bool phi_is_primitive(const Presentation& p) { return !p.phi.empty() && gcd_of(p.phi) == 1; }

Presentation derive_phi(const Presentation& p) {
  Presentation out = p;
  if (p.has_phi()) {
    if (p.phi.size() != p.generators.size()) throw InputError("phi must assign a value to every generator");
    for (const auto& r : p.relators)
      if (p.phi_of(r) != 0) throw InputError("phi does not vanish on all relators");
    const std::int64_t g = gcd_of(p.phi);
    if (g == 0) throw InputError("phi is trivial");
    for (auto& x : out.phi) x /= g;
    return out;
  }
  const IntMatrix a = abelianization_matrix(p);
  const IntSmith s = int_smith(a);
  if (s.rank >= p.num_generators()) throw InputError("first Betti number is zero: no nontrivial phi exists");
  // Columns rank.. of V span the kernel lattice; each is primitive.
  out.phi.assign(p.num_generators(), 0);
  for (int i = 0; i < p.num_generators(); ++i) out.phi[i] = s.V(i, s.rank);
  const std::int64_t g = gcd_of(out.phi);
  for (auto& x : out.phi) x /= g;
  // Deterministic sign: first nonzero value positive.
  for (auto x : out.phi) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out.phi) y = -y;
    break;
  }
  return out;
}

Presentation scaled_phi(const Presentation& p, std::int64_t d) {
  Presentation out = p;
  for (auto& x : out.phi) x *= d;
  return out;
}

namespace {

// Image of the single letter x under sigma_i^{sign}.
Word artin_letter(int x, int i, bool positive) {
  const int g = std::abs(x);
  Word img;
  if (positive) {
    if (g == i) img = Word({i, i + 1, -i});
    else if (g == i + 1) img = Word({i});
    else img = Word({g});
  } else {
    if (g == i) img = Word({i + 1});
    else if (g == i + 1) img = Word({-(i + 1), i, i + 1});
    else img = Word({g});
  }
  return x > 0 ? img : img.inverse();
}

void check_braid(const BraidWord& b) {
  if (b.strands < 1) throw InputError("braid must have at least one strand");
  for (int x : b.letters)
    if (x == 0 || std::abs(x) >= b.strands)
      throw InputError("braid letter " + std::to_string(x) + " out of range for " + std::to_string(b.strands) +
                       " strands");
}

}  // namespace

Word artin_action(const BraidWord& b, const Word& w) {
  Word cur = w;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const int i = std::abs(*it);
    Word next;
    for (int x : cur.letters()) next = next * artin_letter(x, i, *it > 0);
    cur = std::move(next);
  }
  return cur;
}

Presentation braid_to_presentation(const BraidWord& b) {
  check_braid(b);
  Presentation p;
  for (int i = 1; i <= b.strands; ++i) p.generators.push_back("x" + std::to_string(i));
  for (int i = 1; i < b.strands; ++i) {
    Word r = generator_word(i).inverse() * artin_action(b, generator_word(i));
    if (!r.empty()) p.relators.push_back(std::move(r));
    else p.relators.push_back(Word());
  }
  p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(), [](const Word& w) { return w.empty(); }),
                   p.relators.end());
  p.phi.assign(b.strands, 1);
  p.kind = ManifoldKind::BoundaryTori;
  p.meridional = true;
  return p;
}

namespace {

// Splits an Artin image A x_j A^-1 into (A, j).
std::pair<Word, int> split_conjugate(const Word& w) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0) throw std::logic_error("not a conjugate of a generator");
  const std::size_t half = l.size() / 2;
  std::vector<int> a(l.begin(), l.begin() + half);
  Word A(a);
  if (A.size() != half || A * generator_word(l[half]) * A.inverse() != w || l[half] < 0)
    throw std::logic_error("not a conjugate of a generator");
  return {A, l[half]};
}

}  // namespace

int braid_components(const BraidWord& b) {
  check_braid(b);
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int x : b.letters) std::swap(perm[std::abs(x) - 1], perm[std::abs(x)]);
  std::vector<bool> seen(b.strands, false);
  int c = 0;
  for (int i = 0; i < b.strands; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return c;
}

Word braid_longitude(const BraidWord& b) {
  check_braid(b);
  if (braid_components(b) != 1) throw InputError("braid closure is not a knot");
  Word loop;
  int i = 1;
  for (int step = 0; step < b.strands; ++step) {
    auto [A, j] = split_conjugate(artin_action(b, generator_word(i)));
    loop = loop * A;
    i = j;
  }
  // loop commutes with x1; remove the meridian power so phi vanishes.
  std::int64_t weight = 0;
  for (int x : loop.letters()) weight += x > 0 ? 1 : -1;
  return loop * generator_word(1, static_cast<int>(-weight));
}

ConjugationRelation as_conjugation(const Word& lhs, const Word& rhs) {
  if (lhs.size() != 1 || lhs.letters()[0] < 0) throw InputError("left side of a Wirtinger relation must be a generator");
  const auto& l = rhs.letters();
  if (l.size() % 2 == 0) throw InputError("right side is not of the form w y w^-1");
  const std::size_t half = l.size() / 2;
  Word w(std::vector<int>(l.begin(), l.begin() + half));
  const int y = l[half];
  if (y < 0 || w.size() != half || w * generator_word(y) * w.inverse() != rhs)
    throw InputError("right side is not of the form w y w^-1");
  return {lhs.letters()[0], w, y};
}

Presentation parse_wirtinger(const std::vector<std::string>& generators,
                             const std::vector<ConjugationRelation>& relations, const std::string& label) {
  Presentation p;
  p.generators = generators;
  p.label = label;
  const int n = static_cast<int>(generators.size());
  for (std::size_t j = 0; j < relations.size(); ++j) {
    const auto& r = relations[j];
    if (r.lhs < 1 || r.lhs > n || r.rhs < 1 || r.rhs > n || r.conjugator.max_generator() > n)
      throw InputError("Wirtinger relation " + std::to_string(j + 1) + " uses an undeclared generator");
    if (j + 1 == relations.size()) break;  // redundant
    Word rhs = r.conjugator * generator_word(r.rhs) * r.conjugator.inverse();
    p.relators.push_back(generator_word(r.lhs) * rhs.inverse());
  }
  p.phi.assign(n, 1);
  p.kind = ManifoldKind::BoundaryTori;
  p.meridional = true;
  p.validate();
  return p;
}

Presentation zero_surgery(const Presentation& p, const Word& longitude) {
  if (!p.has_phi()) throw InputError("zero_surgery: presentation has no phi");
  if (longitude.max_generator() > p.num_generators()) throw InputError("longitude uses an undeclared generator");
  if (p.phi_of(longitude) != 0) throw InputError("longitude has nonzero phi-value; not the 0-framed curve");
  Presentation out = p;
  out.relators.push_back(longitude);
  out.kind = ManifoldKind::Closed;
  if (!out.label.empty()) out.label += " (0-surgery)";
  return out;
}

}  // namespace twistalex
