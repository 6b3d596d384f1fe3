#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "garside/element.hpp"
#include "garside/structure.hpp"

namespace garside {

/// Parses the word syntax: whitespace-separated tokens `s<k>` (atom k ≥ 1)
/// or `D` (the Garside element), each optionally followed by `^<int>`.
/// Returns signed 1-based atoms with every exponent and `D` expanded.
///
/// Throws InputError carrying the byte offset of the first bad token, or of
/// an atom outside the structure.
std::vector<int> parse_word(std::string_view text, const Structure& structure);

Element parse_element(std::string_view text,
                      std::shared_ptr<const Structure> structure);

/// "s1 s3" style spelling of a simple; empty for the identity.
std::string format_simple(const Structure& structure, const Simple& s);

/// Canonical text form of a normal form: `D^r` (omitted when r = 0, plain `D`
/// when r = 1) followed by the atom words of the factors. Parsing the result
/// gives back the same element.
std::string format_element(const Element& x);

}  // namespace garside
