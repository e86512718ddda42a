#pragma once

#include <string>

#include "pumplib/dfa.hpp"

namespace pumplib {

/// Line-oriented text format, bit-exact on round trips:
///   alphabet: a b
///   states: 3
///   initial: 0
///   accepting: 0 2
///   delta: 0 a 1
///   ...                        (one line per (state, symbol), sorted)
std::string to_text(const Dfa& d);
Dfa from_text(const std::string& text);

/// JSON mirror with fields alphabet/states/initial/accepting/delta, where
/// delta is a list of [from, "symbol", to] triples in the same sort order.
std::string to_json(const Dfa& d);
Dfa from_json(const std::string& text);

/// Reads a DFA from a file; picks JSON when the name ends in ".json",
/// the text format otherwise.
Dfa load_dfa_file(const std::string& path);
void save_dfa_file(const Dfa& d, const std::string& path);

}  // namespace pumplib
