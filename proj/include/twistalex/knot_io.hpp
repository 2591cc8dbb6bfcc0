#ifndef TWISTALEX_KNOT_IO_HPP
#define TWISTALEX_KNOT_IO_HPP

// Text formats (presentation DSL, braid words, hom files, knot tables) and the
// report document with its JSON and human-readable renderings.
//
// Every format may start with a header line "twistalex <kind> <version>";
// lines starting with '#' are comments.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "twistalex/analysis.hpp"
#include "twistalex/fpgroup.hpp"
#include "twistalex/perm.hpp"

namespace twistalex {

inline constexpr int kFormatVersion = 1;

/// InputError with a 1-based source position (0 when not applicable).
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

using KnotInput = std::variant<Presentation, BraidWord>;

/// Presentation DSL or a braid line:
///   gens: a b c
///   rel: a b a^-1 c^-1            (or rel: <word> = <word>)
///   wirtinger: a = j b j^-1       (conjugation relations; the last is dropped)
///   phi: a=1 b=1 c=1
///   kind: closed
///   label: free text
/// or
///   braid 3: 1 -2 1 -2
KnotInput parse_input(std::string_view text);

/// A presentation with phi set: braids are converted and a missing phi is
/// derived.
Presentation to_presentation(const KnotInput& in);

/// Words use whitespace-separated tokens `x`, `x^-1`, `x^n`.
Word parse_word(const Presentation& p, std::string_view text);
std::string format_word(const Presentation& p, const Word& w);

BraidWord parse_braid(std::string_view text);

std::string print_presentation(const Presentation& p);
std::string print_braid(const BraidWord& b);
std::string print_input(const KnotInput& in);

/// Hom file: lines `gen: (1 4 2)`, identity `()`; optional `degree: 5` (otherwise
/// the largest point mentioned).  Every generator must be listed.
PermHom parse_hom(const Presentation& p, std::string_view text);
std::string print_hom(const Presentation& p, const PermHom& h);
/// "a:(1 4 2) b:(4 5 1) ..." on a single line.
std::string hom_summary(const Presentation& p, const PermHom& h);

/// Cycle notation with space-separated points, e.g. "(1 4 2)(3 5)".
Perm parse_cycles(std::string_view text, int k);

struct KnotTableEntry {
  std::string name;
  KnotInput input;
  std::optional<std::int64_t> known_genus;
  std::optional<bool> known_fibered;
  std::optional<std::vector<std::int64_t>> classical_alexander;  // coefficients from t^0
  std::vector<int> ks;                                            // suggested search degrees
  std::vector<std::uint32_t> primes;                              // suggested primes
  std::string note;

  friend bool operator==(const KnotTableEntry&, const KnotTableEntry&) = default;
};

/// Rows `name | input | genus | fibered | alexander | ks | primes | note`.
/// The input column holds a braid line or DSL lines separated by ';'.
/// Empty cells are absent values.  Errors name the 1-based row.
std::vector<KnotTableEntry> parse_table(std::string_view text);
std::vector<KnotTableEntry> load_table(const std::filesystem::path& path);
std::string print_table(const std::vector<KnotTableEntry>& entries);

std::string read_file(const std::filesystem::path& path);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string content_hash(std::string_view text);

// ---------------------------------------------------------------------------
// Report documents

struct DegreeSet {
  std::optional<int> d0, d1, d2, d1torsion;
  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
};

struct HomDoc {
  int k = 0;
  std::vector<std::pair<std::string, std::string>> images;  // generator -> cycles
  friend bool operator==(const HomDoc&, const HomDoc&) = default;
};

struct CertificateDoc {
  HomDoc hom;
  std::string flavor;
  std::uint32_t p = 0;
  int k = 0;    // permutation degree
  int dim = 0;  // representation dimension
  DegreeSet degrees;
  bool delta1_vanishes = false;
  std::optional<std::string> twisted_side;
  std::string untwisted_side;
  friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};

struct NeuwirthDoc {
  std::string alexander;
  std::optional<int> degree;
  bool monic = false;
  std::optional<std::int64_t> known_genus;
  std::optional<bool> satisfied;
  friend bool operator==(const NeuwirthDoc&, const NeuwirthDoc&) = default;
};

struct VerdictDoc {
  std::string status;
  std::optional<CertificateDoc> certificate;
  std::optional<NeuwirthDoc> neuwirth;
  bool complete = true;
  std::uint64_t tasks_evaluated = 0;
  friend bool operator==(const VerdictDoc&, const VerdictDoc&) = default;
};

struct SearchDoc {
  std::string status;
  std::uint64_t evaluated = 0;
  std::optional<std::int64_t> known_genus;
  std::optional<bool> certified;
  std::optional<std::string> classical_genus_bound;
  std::vector<HomDoc> homs;  // `search` command listing
  friend bool operator==(const SearchDoc&, const SearchDoc&) = default;
};

struct ReportDocument {
  std::string command;
  std::string input;
  std::string input_hash;
  std::vector<std::int64_t> phi;
  std::string kind;
  std::optional<HomDoc> hom;
  std::string flavor;
  std::string field;
  DegreeSet degrees;
  std::map<std::string, std::string> polynomials;
  std::optional<int> torsion_degree;
  std::optional<std::string> norm_bound;
  std::optional<std::string> genus_rational;
  std::optional<std::int64_t> genus_rounded;
  std::optional<std::string> boundary_class_bound;
  std::optional<VerdictDoc> verdict;
  std::optional<SearchDoc> search;
  std::vector<std::string> assumptions;
  std::vector<std::pair<std::string, std::int64_t>> timings_ms;  // empty unless requested
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

HomDoc hom_doc(const Presentation& p, const PermHom& h);

/// Fills the invariant fields of `doc` from a summary.
void set_invariants(ReportDocument& doc, const TwistedDegrees& d);
VerdictDoc verdict_doc(const Presentation& p, const FiberingVerdict& v);

/// Base document for a command on an input (name, hash, phi, kind).
ReportDocument report_for(const std::string& command, const std::string& input_name, std::string_view input_text,
                          const Presentation& p);

enum class ReportFormat { Text, Json };

std::string emit_report(const ReportDocument& doc, ReportFormat format);
/// JSON array of documents, or the text renderings separated by blank lines.
std::string emit_reports(const std::vector<ReportDocument>& docs, ReportFormat format);
ReportDocument parse_report(std::string_view json_text);

}  // namespace twistalex

#endif  // TWISTALEX_KNOT_IO_HPP
