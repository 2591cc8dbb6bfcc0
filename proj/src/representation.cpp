#include "twistalex/representation.hpp"

namespace twistalex {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Trivial: return "trivial";
    case Flavor::Permutation: return "perm";
    case Flavor::Standard: return "std";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "trivial") return Flavor::Trivial;
  if (s == "perm" || s == "permutation") return Flavor::Permutation;
  if (s == "std" || s == "standard") return Flavor::Standard;
  throw InputError("unknown flavor '" + s + "' (expected trivial, perm or std)");
}

}  // namespace twistalex
