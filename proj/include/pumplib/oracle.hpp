#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pumplib/pumping.hpp"

namespace pumplib {

/// Brute-force evaluations of the three pumping definitions, used to derive
/// expected test values and to cross-check the exact procedures. Everything
/// here works from membership queries and literal word surgery; nothing is
/// shared with the exact algorithms beyond the Dfa type.

/// Literal check of Lemma-style pumpability of the whole word w: some split
/// w = xyz with non-empty y keeps x y^t z in the language for t = 0..2|Q|
/// (the state seen after x y^t is eventually periodic with preperiod plus
/// period at most |Q|, so that range decides all t).
bool oracle_pumpable_mpc(const Dfa& d, const Word& w);

/// The literal t-loop itself: is x y^t z accepted for every t in 0..2|Q|?
bool oracle_pump_valid(const Dfa& d, const Word& x, const Word& y, const Word& z);

struct OracleValue {
    int value = 0;
    std::optional<Word> witness;
};

struct OracleMpsValue {
    int value = 0;
    std::optional<MpsCounterexample> witness;
};

/// Lower bound for mpc from accepted words of length <= len_bound; exact
/// whenever len_bound >= sc(d) - 1.
OracleValue oracle_mpc(const Dfa& d, int len_bound);

/// Lower bound for mpl: the largest level defeated by some accepted word of
/// length <= len_bound, plus one.
OracleValue oracle_mpl(const Dfa& d, int len_bound);

/// Lower bound for mps over all sub-word occurrences inside accepted words of
/// length <= len_bound.
OracleMpsValue oracle_mps(const Dfa& d, int len_bound);

struct CrossValidation {
    PumpingReport exact;
    OracleValue o_mpc, o_mpl;
    OracleMpsValue o_mps;
    std::vector<std::string> hard_failures;
    bool ok() const { return hard_failures.empty(); }
};

/// Runs both procedures and flags disagreements that cannot be explained by
/// the length bound: an oracle lower bound exceeding an exact value, or an
/// exact counterexample that does not re-verify literally.
CrossValidation cross_validate(const Dfa& d, int len_bound);

}  // namespace pumplib
