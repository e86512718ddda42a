#pragma once

#include <vector>

#include "pumplib/dfa.hpp"

namespace pumplib {

/// Nondeterministic automaton with epsilon moves. Construction intermediate
/// for reversal, closures, concatenation, star and regex compilation.
struct Nfa {
    Alphabet alphabet;
    int num_states = 0;
    std::vector<State> initials;
    std::vector<bool> accepting;
    std::vector<std::vector<std::vector<State>>> trans;  // [state][symbol index]
    std::vector<std::vector<State>> eps;                 // [state]

    static Nfa empty(const Alphabet& sigma, int n) {
        Nfa m;
        m.alphabet = sigma;
        m.num_states = n;
        m.accepting.assign(n, false);
        m.trans.assign(n, std::vector<std::vector<State>>(sigma.size()));
        m.eps.assign(n, {});
        return m;
    }

    void add_edge(State from, Symbol a, State to) {
        int s = alphabet.index(a);
        if (s < 0) throw std::invalid_argument("Nfa::add_edge: symbol outside alphabet");
        trans[from][s].push_back(to);
    }

    void add_eps(State from, State to) { eps[from].push_back(to); }
};

/// Epsilon-closure subset construction. The result is complete (the empty
/// subset acts as the sink) and accepts exactly L(n).
Dfa determinize(const Nfa& n);

}  // namespace pumplib
