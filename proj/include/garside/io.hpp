#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "garside/braid.hpp"
#include "garside/curves.hpp"
#include "garside/family.hpp"
#include "garside/invariant_sets.hpp"

namespace garside {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Whitespace-separated signed letters. "D^k" tokens stand for Delta powers and
/// "." separators are ignored, so rendered braids parse back.
Braid parse_braid(StrandCount n, std::string_view text);
SignedWord parse_word(std::string_view text);

std::string word_to_string(const std::vector<int>& word);
/// "D^k . f1 . f2", each factor as its canonical positive word.
std::string to_text(const Braid& x);
nlohmann::json to_json(const Braid& x);
Braid braid_from_json(const nlohmann::json& j);

/// One row per line of 0/1 characters; an optional '|' after column b marks the
/// vertical-strand slot. Blank lines and spaces are ignored.
struct ParsedMatrix {
  BitMatrix rows;
  std::optional<int> b;
};
ParsedMatrix parse_matrix(std::string_view text);
/// Rows may also be separated by ',' or ';' for one-line input.
std::string matrix_to_text(const FamilyElement& e);
nlohmann::json to_json(const FamilyElement& e);
ParsedMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConjugacyGraph& g);
std::string to_dot(const ConjugacyGraph& g);

std::string to_string(const StandardCurve& c);

}  // namespace garside
