#pragma once

#include <string>

#include "fixity/perm.hpp"

namespace fixity {

// Textual cycle notation, 1-based. Grammar: optional whitespace between
// tokens; each cycle is '(' p1 ',' p2 ',' ... ')' with decimal 1-based
// points (spaces also accepted as separators); "()" is the identity.
// Points absent from the text are fixed. A point may appear at most once
// across all cycles and must not exceed the declared degree.
Perm parse_cycles(const std::string& text, std::size_t degree);

// Canonical form: each cycle starts at its smallest point, cycles sorted by
// first point, fixed points omitted, identity printed as "()". Round-trips
// through parse_cycles.
std::string print_cycles(const Perm& p);

}  // namespace fixity
