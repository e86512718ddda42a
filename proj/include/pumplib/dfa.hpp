#pragma once

#include <functional>
#include <vector>

#include "pumplib/alphabet.hpp"

namespace pumplib {

using State = int;

/// Complete deterministic finite automaton. The transition table is total:
/// delta has num_states * |alphabet| entries, delta[q * |alphabet| + s] being
/// the successor of q under the s-th symbol. Values are immutable after
/// construction by convention; all library operations return fresh automata.
struct Dfa {
    Alphabet alphabet;
    int num_states = 0;
    State initial = 0;
    std::vector<bool> accepting;  // one flag per state
    std::vector<State> delta;     // row-major, num_states x |alphabet|

    State step_idx(State q, int sym_idx) const {
        return delta[static_cast<std::size_t>(q) * alphabet.size() + sym_idx];
    }

    State step(State q, Symbol a) const {
        int s = alphabet.index(a);
        if (s < 0)
            throw std::invalid_argument("symbol '" + std::string(1, a) +
                                        "' outside the declared alphabet");
        return step_idx(q, s);
    }

    State run(State q, const Word& w) const {
        for (char c : w) q = step(q, c);
        return q;
    }

    bool accepts(const Word& w) const { return accepting[run(initial, w)]; }

    /// Checks the structural invariants; throws std::invalid_argument on violation.
    void validate() const;
};

/// Membership: true iff the extended transition maps the initial state
/// through w into an accepting state. Throws on symbols outside the alphabet.
inline bool membership(const Dfa& d, const Word& w) { return d.accepts(w); }

/// A possibly-partial automaton: delta entries of -1 are missing transitions.
struct PartialDfa {
    Alphabet alphabet;
    int num_states = 0;
    State initial = 0;
    std::vector<bool> accepting;
    std::vector<State> delta;  // -1 = undefined

    static PartialDfa empty(const Alphabet& sigma, int n, State initial);
    void set(State q, Symbol a, State to);
};

/// Totalises a partial automaton: missing transitions are routed to a
/// non-accepting sink (a fresh one unless a dead state already exists).
/// Complete inputs come back unchanged. The language is unchanged.
Dfa complete(const PartialDfa& p);

/// Re-declares d over a larger alphabet. Transitions on the new symbols go to
/// a dead state (reusing an existing one when present). Language unchanged as
/// a set of words.
Dfa extend_alphabet(const Dfa& d, const Alphabet& sigma);

/// States reachable from the initial state.
std::vector<bool> accessible(const Dfa& d);

/// States from which some accepting state is reachable.
std::vector<bool> co_accessible(const Dfa& d);

/// The minimal complete DFA for L(d): accessible states quotiented by the
/// Myhill-Nerode relation, renumbered in breadth-first order from the initial
/// state under the alphabet order (so serializations are reproducible).
Dfa minimize(const Dfa& d);

/// Deterministic state complexity: state count of minimize(d), sink included.
int sc(const Dfa& d);

/// Language equality. Requires equal alphabets (callers align first).
bool equivalent(const Dfa& a, const Dfa& b);

bool is_empty(const Dfa& d);

/// True iff L(d) is finite (no cycle on a path from the initial state to an
/// accepting state).
bool is_finite(const Dfa& d);

/// Reachable product automaton; state (q1,q2) accepts iff combine(q1 in F1,
/// q2 in F2). Requires equal alphabets.
Dfa product(const Dfa& d1, const Dfa& d2, const std::function<bool(bool, bool)>& combine);

/// All accepted words of length <= max_len, in length-then-lexicographic
/// order under the alphabet order.
std::vector<Word> enumerate_words(const Dfa& d, int max_len);

/// Shortest accepted word under (length, lex) order, if any.
std::optional<Word> shortest_word(const Dfa& d);

/// Shortest word of length >= min_len that d accepts, (length, lex)-minimal.
std::optional<Word> shortest_word_at_least(const Dfa& d, int min_len);

/// Shortest word moving the initial state to q, if q is accessible.
std::optional<Word> shortest_word_to(const Dfa& d, State q);

}  // namespace pumplib
