#include "pumplib/langops.hpp"

#include "pumplib/nfa.hpp"

namespace pumplib {
namespace langops {

namespace {

std::pair<Dfa, Dfa> aligned(const Dfa& d1, const Dfa& d2) {
    Alphabet sigma = Alphabet::merged(d1.alphabet, d2.alphabet);
    return {extend_alphabet(d1, sigma), extend_alphabet(d2, sigma)};
}

Nfa from_dfa(const Dfa& d) {
    Nfa n = Nfa::empty(d.alphabet, d.num_states);
    n.initials = {d.initial};
    for (State q = 0; q < d.num_states; ++q) {
        n.accepting[q] = d.accepting[q];
        for (int s = 0; s < d.alphabet.size(); ++s) n.trans[q][s].push_back(d.step_idx(q, s));
    }
    return n;
}

}  // namespace

Dfa star(const Dfa& d) {
    Nfa n = from_dfa(d);
    State fresh = n.num_states;
    n.num_states++;
    n.accepting.push_back(true);
    n.trans.emplace_back(n.alphabet.size());
    n.eps.emplace_back();
    n.add_eps(fresh, d.initial);
    for (State q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) n.add_eps(q, d.initial);
    n.initials = {fresh};
    return minimize(determinize(n));
}

Dfa reversal(const Dfa& d) {
    Nfa n = Nfa::empty(d.alphabet, d.num_states);
    for (State q = 0; q < d.num_states; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s)
            n.trans[d.step_idx(q, s)][s].push_back(q);
    for (State q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) n.initials.push_back(q);
    n.accepting[d.initial] = true;
    return minimize(determinize(n));
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (State q = 0; q < out.num_states; ++q) out.accepting[q] = !out.accepting[q];
    return minimize(out);
}

Dfa prefix_closure(const Dfa& d) {
    std::vector<bool> acc = accessible(d), live = co_accessible(d);
    Dfa out = d;
    for (State q = 0; q < out.num_states; ++q) out.accepting[q] = acc[q] && live[q];
    return minimize(out);
}

Dfa suffix_closure(const Dfa& d) {
    Nfa n = from_dfa(d);
    std::vector<bool> acc = accessible(d);
    for (State q = 0; q < d.num_states; ++q)
        if (acc[q]) n.initials.push_back(q);
    return minimize(determinize(n));
}

Dfa unite(const Dfa& d1, const Dfa& d2) {
    auto [a, b] = aligned(d1, d2);
    return minimize(product(a, b, [](bool x, bool y) { return x || y; }));
}

Dfa intersect(const Dfa& d1, const Dfa& d2) {
    auto [a, b] = aligned(d1, d2);
    return minimize(product(a, b, [](bool x, bool y) { return x && y; }));
}

Dfa difference(const Dfa& d1, const Dfa& d2) {
    auto [a, b] = aligned(d1, d2);
    return minimize(product(a, b, [](bool x, bool y) { return x && !y; }));
}

Dfa symmetric_difference(const Dfa& d1, const Dfa& d2) {
    auto [a, b] = aligned(d1, d2);
    return minimize(product(a, b, [](bool x, bool y) { return x != y; }));
}

Dfa concatenate(const Dfa& d1, const Dfa& d2) {
    auto [a, b] = aligned(d1, d2);
    Nfa n = Nfa::empty(a.alphabet, a.num_states + b.num_states);
    n.initials = {a.initial};
    for (State q = 0; q < a.num_states; ++q) {
        for (int s = 0; s < a.alphabet.size(); ++s) n.trans[q][s].push_back(a.step_idx(q, s));
        if (a.accepting[q]) n.add_eps(q, a.num_states + b.initial);
    }
    for (State q = 0; q < b.num_states; ++q) {
        n.accepting[a.num_states + q] = b.accepting[q];
        for (int s = 0; s < b.alphabet.size(); ++s)
            n.trans[a.num_states + q][s].push_back(a.num_states + b.step_idx(q, s));
    }
    return minimize(determinize(n));
}

Dfa downward_closure(const Dfa& d) {
    Nfa n = from_dfa(d);
    for (State q = 0; q < d.num_states; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s) n.add_eps(q, d.step_idx(q, s));
    return minimize(determinize(n));
}

LoopifyResult loopify(const Dfa& d, State q, Symbol a) {
    if (q < 0 || q >= d.num_states) throw std::invalid_argument("loopify: bad state");
    int s = d.alphabet.index(a);
    if (s < 0) throw std::invalid_argument("loopify: symbol outside alphabet");
    if (minimize(d).num_states != d.num_states)
        throw std::invalid_argument("loopify: automaton must be minimal");
    LoopifyResult r;
    r.raw = d;
    r.raw.delta[static_cast<std::size_t>(q) * d.alphabet.size() + s] = q;
    r.minimized = minimize(r.raw);
    return r;
}

}  // namespace langops
}  // namespace pumplib
