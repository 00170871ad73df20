#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rte/dl.hpp"

namespace rte::dl {

// ASCII rendering of the usual DL notation: `&` for conjunction, `|` for
// disjunction, `!` for negation, `E R.C` / `A R.C` for the quantifiers,
// `R^-` for inverse roles, `top` / `bot` for the constants. Assertions
// print as `a : C` and `(a,b) : R`, GCIs as `C => D`. parse(print(x))
// reproduces x exactly.

std::string to_text(const Concept& c);
std::string to_text(const Role& r);
std::string to_text(const Assertion& a);
std::string to_text(const Gci& g);

// One line per axiom/assertion, GCIs first. `#` starts a comment.
std::string to_text(const KnowledgeBase& kb);

class TextParseError : public std::runtime_error {
 public:
  TextParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

Concept parse_concept(std::string_view text);
Role parse_role(std::string_view text);
Assertion parse_assertion(std::string_view text);
Gci parse_gci(std::string_view text);
KnowledgeBase parse_kb(std::string_view text);

}  // namespace rte::dl
