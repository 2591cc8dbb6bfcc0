#ifndef TWISTALEX_PERM_HPP
#define TWISTALEX_PERM_HPP

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistalex/fpgroup.hpp"

namespace twistalex {

/// Permutation of {0..k-1}, stored as the image array.  Composition follows
/// function composition: (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(int k);
  /// Cycles given with 1-based points, e.g. {{1, 4, 2}}.
  static Perm from_cycles(int k, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<std::uint8_t>& images() const { return img_; }
  bool is_identity() const;

  Perm inverse() const;
  /// Sorted cycle lengths, including fixed points.
  std::vector<int> cycle_type() const;
  /// Disjoint cycles, 1-based points, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// "(1 4 2)(3 5)", "()" for the identity.
  std::string to_cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

/// Homomorphism G -> S_k given by generator images.
struct PermHom {
  int k = 0;
  std::vector<Perm> images;

  Perm evaluate(const Word& w) const;
  bool satisfies(const Presentation& p) const;
  /// Whether the image subgroup acts transitively on {0..k-1}.
  bool transitive() const;

  friend auto operator<=>(const PermHom&, const PermHom&) = default;
  friend bool operator==(const PermHom&, const PermHom&) = default;
};

struct SearchOptions {
  /// Restrict every generator image to this cycle type (sorted lengths).
  std::optional<std::vector<int>> cycle_type;
  /// All generator images share one cycle type (meridional generators).
  bool meridional = false;
  bool transitive_only = false;
  /// Emit one representative per S_k-conjugacy class of homomorphisms.
  bool up_to_conjugacy = true;
  bool skip_trivial = false;
  std::chrono::milliseconds budget{std::chrono::hours(24)};
};

enum class SearchStatus { Complete, Stopped, BudgetExhausted };

const char* to_string(SearchStatus s);

/// Backtracking enumeration of homomorphisms to S_k in lexicographic order of
/// the image tuples.  `visit` returns false to stop early.
SearchStatus search_homs(const Presentation& p, int k, const SearchOptions& opts,
                         const std::function<bool(const PermHom&)>& visit);

struct HomList {
  std::vector<PermHom> homs;
  SearchStatus status = SearchStatus::Complete;
};

HomList collect_homs(const Presentation& p, int k, const SearchOptions& opts, std::size_t limit = SIZE_MAX);

}  // namespace twistalex

#endif  // TWISTALEX_PERM_HPP
