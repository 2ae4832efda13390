#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fixity/perm_group.hpp"

namespace fixity {

// One record of the bundled group catalog. Generator strings are 1-based
// cycle notation at the stated degree; expected_order, when present, must
// match the built group exactly (a mismatch means the data is corrupt).
struct CatalogEntry {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generator_strings;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;
  std::size_t line = 0;  // where the record starts, for error reporting

  bool has_tag(const std::string& t) const;
};

// Catalog grammar (UTF-8, line oriented, '#' starts a comment):
//
//   group <name>
//   degree <n>
//   gen <cycle-string>          (one or more)
//   order <expected-order>      (optional)
//   tags <t1,t2,...>            (optional)
//   end
//
// Generators are parsed eagerly so syntax errors carry line numbers.
std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

// Builds the group and validates expected_order.
PermGroup realize(const CatalogEntry& entry);

}  // namespace fixity
