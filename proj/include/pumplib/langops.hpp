#pragma once

#include "pumplib/dfa.hpp"

namespace pumplib {
namespace langops {

/// The regularity-preserving operations under study. Binary operations first
/// extend both operands to the merged alphabet (completion with a sink);
/// every result is minimal except loopify's raw machine.

Dfa star(const Dfa& d);
Dfa reversal(const Dfa& d);
Dfa complement(const Dfa& d);
Dfa prefix_closure(const Dfa& d);
Dfa suffix_closure(const Dfa& d);
Dfa unite(const Dfa& d1, const Dfa& d2);
Dfa intersect(const Dfa& d1, const Dfa& d2);
Dfa difference(const Dfa& d1, const Dfa& d2);
Dfa symmetric_difference(const Dfa& d1, const Dfa& d2);
Dfa concatenate(const Dfa& d1, const Dfa& d2);

/// Subsequence closure (every scattered sub-word of every accepted word).
Dfa downward_closure(const Dfa& d);

/// Redirects the single transition (q, a) of a minimal DFA into a self-loop
/// at q. The raw machine is returned unminimized alongside the minimal DFA of
/// its language.
struct LoopifyResult {
    Dfa raw;
    Dfa minimized;
};
LoopifyResult loopify(const Dfa& d, State q, Symbol a);

}  // namespace langops
}  // namespace pumplib
