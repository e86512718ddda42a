#pragma once

#include <stdexcept>
#include <string>

#include "pumplib/dfa.hpp"

namespace pumplib {

/// Syntax error in a regular expression; position is a byte offset.
class RegexError : public std::runtime_error {
public:
    RegexError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Compiles expr to the minimal complete DFA over sigma.
///
/// Grammar (whitespace ignored):
///   expr    := term ('+' term)*          union
///   term    := factor factor*            concatenation by juxtaposition
///   factor  := atom postfix*
///   postfix := '*' | '^*' | '^+' | '^' digits
///   atom    := symbol | 'λ' | '∅' | '(' expr ')'
/// 'X^+' abbreviates 'XX*' and 'X^n' the n-fold concatenation ('X^0' = λ).
Dfa parse_regex(const std::string& expr, const Alphabet& sigma);

/// Letters occurring in expr, in ASCII order (for CLI convenience).
std::string regex_letters(const std::string& expr);

}  // namespace pumplib
