#pragma once
// Text format shared by every tool:
//   - optional first significant line "n <int>" fixing the ground set;
//   - each following non-blank, non-# line is one set as whitespace-separated
//     1-based integers; "-" denotes the empty set;
//   - "#" starts a comment line.
// Without a header the ground size is inferred as the largest element seen.
// Out-of-range elements, repeated elements within a line, and duplicate set
// lines are rejected.

#include "dfam/family.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dfam {

struct FamilyParseError : std::runtime_error {
    explicit FamilyParseError(const std::string& what) : std::runtime_error(what) {}
};

SetFamily parse_family(std::istream& in);
SetFamily parse_family_text(const std::string& text);
SetFamily load_family_file(const std::string& path);

// Writes the header line and members in canonical order; `comments` are
// emitted first, one "# ..." line each (pass text without the leading '#').
void write_family(std::ostream& out, const SetFamily& F,
                  const std::vector<std::string>& comments = {});
std::string family_to_text(const SetFamily& F,
                           const std::vector<std::string>& comments = {});

} // namespace dfam
