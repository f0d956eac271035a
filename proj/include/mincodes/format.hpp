#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mincodes/codes.hpp"

namespace mincodes {

// Text format for defining sets:
//
//   q k n          q written as p^m, or as a plain integer when m = 1
//   d_1            one column per line, k space-separated element encodings
//   ...
//   d_n
//
// Lines starting with '#' are comments and may precede the header.

using Manifest = std::vector<std::pair<std::string, std::string>>;

void write_defining_set(std::ostream& out, const DefiningSet& d, const Manifest& manifest = {});
std::string to_text(const DefiningSet& d, const Manifest& manifest = {});

/// Parses and range-checks a defining set; rank is not validated here.
/// Throws MalformedHeader, BadElementEncoding, or LengthMismatch, each
/// naming the offending line (1-based).
DefiningSet parse_defining_set(std::istream& in);
DefiningSet parse_defining_set(const std::string& text);

}  // namespace mincodes
