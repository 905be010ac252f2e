// Plain-text presentation format:
//   gens: a b c
//   rels: [a,b], a^2 b^-1
// Whitespace-insensitive; [x,y] expands to x^-1 y^-1 x y.
#pragma once

#include "fourcalc/presentation.hpp"

namespace fourcalc {

struct TextParseError : CalcError {
  using CalcError::CalcError;
};

// Parses a word over the given presentation's generators.
Word parse_word(const Presentation& p, const std::string& text);

Presentation parse_presentation(const std::string& text);

std::string word_to_string(const Presentation& p, const Word& w);
std::string presentation_to_string(const Presentation& p);

}  // namespace fourcalc
