#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "orw/algebra.hpp"
#include "orw/env.hpp"

namespace orw {

/// Reported for malformed element text; what() includes the byte offset.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& message);
    /// 0-based byte offset of the first offending character.
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Parses the canonical element syntax against a presentation:
///   element := '0' | term ('+' term)*
///   term    := rational '*' word | word
///   word    := gen+ | '1'              ('1' is the empty word, coeff form only)
///   gen     := NAME '[' index ']' | NAME   (bare names only for central families)
///   index   := integer or half-integer ('p/2')
///   rational:= integer or fraction ('p/q')
/// Whitespace may separate any two tokens. parse_element(env_str(e)) recovers e
/// whenever e has rational coefficients; inputs not in normal form parse to the
/// same free-algebra element they denote. Throws ParseError on syntax errors,
/// unknown family names, bare non-central names, and indices off a family's
/// lattice.
EnvElement parse_element(const AlgebraPresentation& algebra, const std::string& text);

}  // namespace orw
