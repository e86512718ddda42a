#include "pumplib/random_dfa.hpp"

namespace pumplib {

Dfa random_dfa(SplitMix64& rng, const RandomDfaParams& p) {
    static const std::string letters = "abcdefgh";
    int n = rng.range(p.min_states, p.max_states);
    int k = rng.range(p.min_alphabet, p.max_alphabet);
    Dfa d;
    d.alphabet = Alphabet(letters.substr(0, k));
    d.num_states = n;
    d.initial = 0;
    d.accepting.resize(n);
    d.delta.resize(static_cast<std::size_t>(n) * k);
    for (State q = 0; q < n; ++q)
        for (int s = 0; s < k; ++s)
            d.delta[static_cast<std::size_t>(q) * k + s] = static_cast<State>(rng.below(n));
    for (State q = 0; q < n; ++q) d.accepting[q] = rng.unit() < p.accept_density;
    d.validate();
    return d;
}

Dfa random_dfa(const RandomDfaParams& p) {
    SplitMix64 rng(p.seed);
    return random_dfa(rng, p);
}

}  // namespace pumplib
