#pragma once

#include <optional>
#include <vector>

#include "pumplib/dfa.hpp"

namespace pumplib {

enum class PumpKind { Mpc, Mpl, Mps };

const char* to_string(PumpKind k);

/// The eventually periodic state sequence delta(q, y^t), t = 0, 1, ...
/// `states` lists the distinct states in visit order; preperiod + period ==
/// states.size() and the cycle starts at index preperiod.
struct Orbit {
    std::vector<State> states;
    int preperiod = 0;
    int period = 0;
};

/// Exact orbit of a non-empty word y at state q. Throws on empty y.
Orbit orbit(const Dfa& d, State q, const Word& y);

/// Validity of the pump y = w[i..j) read at state q, followed by the rest of
/// w and then `continuation`: true iff for every t >= 0 the run
/// q -> w[0..i) y^t w[j..) continuation ends in an accepting state.
bool pump_valid(const Dfa& d, State q, const Word& w, int i, int j,
                const Word& continuation = Word());

/// A pump certificate: in `word`, the window w = word[window_start ..
/// window_start+window_len) contains the pump y = w[i..j), justified by the
/// orbit of y at the state reached before it. Orbit states are numbered in
/// the canonical minimal automaton (minimize(d)).
struct Decomposition {
    PumpKind kind = PumpKind::Mpc;
    Word word;
    int window_start = 0;
    int window_len = 0;
    int i = 0, j = 0;
    Orbit orbit;
};

/// Re-checks a certificate against the automaton.
bool verify_decomposition(const Dfa& d, const Decomposition& c);

/// Sub-word occurrence (u, w, v) with u·w·v in L(d) that admits no valid pump
/// inside w at the level it defeats.
struct MpsCounterexample {
    Word u, w, v;
};

/// The bad-continuation search walks a deterministic product of subset
/// automata; this guards against pathological blow-up.
struct AnalysisOptions {
    long long node_budget = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct PumpingReport {
    int mpc = 0, mpl = 0, mps = 0, sc = 0;
    std::optional<Word> witness_mpc;               // longest unpumpable word
    std::optional<Word> witness_mpl;               // word that defeats p = mpl-1
    std::optional<MpsCounterexample> witness_mps;  // occurrence defeating p = mps-1
    std::vector<Decomposition> certificates;       // one per kind when derivable
};

/// All four constants plus witnesses and certificates. Asserts the chain
/// mpc <= mpl <= mps <= sc before returning.
PumpingReport analyze(const Dfa& d, const AnalysisOptions& opts = {});

int mpc(const Dfa& d, const AnalysisOptions& opts = {});
int mpl(const Dfa& d, const AnalysisOptions& opts = {});
int mps(const Dfa& d, const AnalysisOptions& opts = {});

/// Exact decision of the bounded-prefix pumping property at level p.
/// A defect, when present, is an accepted word of length >= p admitting no
/// valid pump inside its p-prefix (the first failing prefix in lexicographic
/// order, with the shortest, then lexicographically smallest continuation).
std::optional<Word> mpl_defect(const Dfa& d, int p, const AnalysisOptions& opts = {});
inline bool satisfies_mpl(const Dfa& d, int p, const AnalysisOptions& opts = {}) {
    return !mpl_defect(d, p, opts).has_value();
}

/// Exact decision of the sub-word pumping property at level p; the defect is
/// the first failing window in (state, window) order.
std::optional<MpsCounterexample> mps_defect(const Dfa& d, int p, const AnalysisOptions& opts = {});
inline bool satisfies_mps(const Dfa& d, int p, const AnalysisOptions& opts = {}) {
    return !mps_defect(d, p, opts).has_value();
}

}  // namespace pumplib
