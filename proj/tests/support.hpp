#ifndef TWISTALEX_TESTS_SUPPORT_HPP
#define TWISTALEX_TESTS_SUPPORT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistalex/knot_io.hpp"

namespace support {

using namespace twistalex;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(TWISTALEX_FIXTURE_DIR) / name;
}

inline const std::vector<KnotTableEntry>& table() {
  static const std::vector<KnotTableEntry> t = load_table(fixture("knots.table"));
  return t;
}

inline const KnotTableEntry& entry(const std::string& name) {
  for (const auto& e : table())
    if (e.name == name) return e;
  throw std::out_of_range("no table entry " + name);
}

inline Presentation knot(const std::string& table_name) { return to_presentation(entry(table_name).input); }

inline Presentation load(const std::string& file) { return to_presentation(parse_input(read_file(fixture(file)))); }

inline Presentation trefoil() { return to_presentation(parse_input("braid 2: 1 1 1")); }
inline Presentation figure_eight() { return to_presentation(parse_input("braid 3: 1 -2 1 -2")); }

}  // namespace support

#endif  // TWISTALEX_TESTS_SUPPORT_HPP
