#include "fixity/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fixity/cycles.hpp"
#include "fixity/error.hpp"

namespace fixity {

bool CatalogEntry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::optional<CatalogEntry> current;
  std::string raw;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("catalog: " + what, lineno, 0);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    std::string rest = trim(line.substr(keyword.size()));

    if (keyword == "group") {
      if (current) fail("missing 'end' before new group");
      if (rest.empty()) fail("group needs a name");
      current = CatalogEntry{};
      current->name = rest;
      current->line = lineno;
    } else if (!current) {
      fail("'" + keyword + "' outside a group record");
    } else if (keyword == "degree") {
      unsigned long v = 0;
      try {
        v = std::stoul(rest);
      } catch (const std::logic_error&) {
        fail("bad degree '" + rest + "'");
      }
      if (v == 0 || v > 1'000'000) fail("degree out of range");
      current->degree = unsigned(v);
    } else if (keyword == "gen") {
      if (current->degree == 0) fail("gen before degree");
      try {
        (void)parse_cycles(rest, current->degree);
      } catch (const ParseError& e) {
        fail(std::string("bad generator: ") + e.what());
      }
      current->generator_strings.push_back(rest);
    } else if (keyword == "order") {
      try {
        current->expected_order = std::stoull(rest);
      } catch (const std::logic_error&) {
        fail("bad order '" + rest + "'");
      }
    } else if (keyword == "tags") {
      std::string tag;
      std::istringstream ts(rest);
      while (std::getline(ts, tag, ',')) {
        tag = trim(tag);
        if (!tag.empty()) current->tags.push_back(tag);
      }
    } else if (keyword == "end") {
      if (current->degree == 0) fail("group without degree");
      if (current->generator_strings.empty()) fail("group without generators");
      entries.push_back(std::move(*current));
      current.reset();
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (current) fail("unterminated group record");
  return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file '" + path + "'");
  return load_catalog(in);
}

PermGroup realize(const CatalogEntry& entry) {
  std::vector<Perm> gens;
  for (const std::string& s : entry.generator_strings)
    gens.push_back(parse_cycles(s, entry.degree));
  PermGroup g = PermGroup::generated_by(std::move(gens));
  if (entry.expected_order && !(g.order() == *entry.expected_order))
    throw Error("catalog entry '" + entry.name + "': built order " +
                g.order().to_string() + " does not match expected " +
                std::to_string(*entry.expected_order));
  return g;
}

}  // namespace fixity
