#pragma once

#include <cstdint>

#include "pumplib/dfa.hpp"

namespace pumplib {

/// Fixed default seed for every randomized suite; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// splitmix64. Deliberately not std::mt19937 + distributions: the stream must
/// be identical across platforms so suite reports stay byte-stable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct RandomDfaParams {
    int min_states = 1;
    int max_states = 6;
    int min_alphabet = 1;
    int max_alphabet = 3;
    double accept_density = 0.4;
    std::uint64_t seed = kDefaultSeed;
};

/// Complete DFA drawn deterministically from the seed: uniform transition
/// targets, Bernoulli(accept_density) accepting flags, initial state 0.
Dfa random_dfa(const RandomDfaParams& params);

/// Same, drawing from an already-running stream.
Dfa random_dfa(SplitMix64& rng, const RandomDfaParams& params);

}  // namespace pumplib
