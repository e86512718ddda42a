#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pumplib/dfa.hpp"

namespace pumplib {
namespace witnesses {

/// Constructors for the witness language families realizing prescribed
/// pumping-constant combinations. Parameters are checked on entry; the
/// four-constant family self-validates against the exact analyzer.

/// Block languages over {a,b} with k-1 alternations: b-initial blocks, with
/// the first block non-empty (b_plus) or arbitrary (b_star). k = 0 denotes
/// the empty language.
Dfa b_plus(int k);
Dfa b_star(int k);

/// Binary-alphabet language with mpc = p1, mpl = p2, sc = p3
/// (1 <= p1 <= p2 <= p3). The p2 == p3 case is the unary cyclic automaton.
Dfa thm_binary(int p1, int p2, int p3);

/// Growing-alphabet family b^{p1-1}(a^{p2-p1+1})^* + c1^* + ... with
/// mpc = p1, mpl = p2 (1 <= p1 <= p2 < p3). Its minimal DFA has
/// footnote_expected_sc states, which exceeds p3 by one when p1 = p2 = 1 and
/// p3 >= 3.
Dfa footnote_family(int p1, int p2, int p3);
int footnote_expected_sc(int p1, int p2, int p3);

/// Quinary-alphabet language with (mpc, mpl, mps, sc) = (p1, p2, p3, p4),
/// 1 <= p1 <= p2 <= p3 <= p4. Self-validates; throws ValidationError when the
/// analyzer disagrees with the requested tuple.
Dfa thm_quinary(int p1, int p2, int p3, int p4);

class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, std::vector<int> computed)
        : std::runtime_error(what), computed_(std::move(computed)) {}
    const std::vector<int>& computed() const { return computed_; }

private:
    std::vector<int> computed_;
};

/// Kleene-star witness with mps(L) = n and mps(L*) = k, for n >= 1 and
/// 1 <= k <= 2n-1.
Dfa star_witness(int n, int k);

/// Pair (L1, L2) with mpl = mps = m for L1 and n for L2, whose intersection
/// has mpl = mps = k. Cases: k = 0 (needs (m,n) != (1,1)), k = 1, and k >= 2
/// (needs max(m,n) >= 2).
std::pair<Dfa, Dfa> intersection_witness(int m, int n, int k);

enum class Family {
    BPlus,
    BStar,
    BinaryTriple,
    Footnote,
    Quinary,
    StarWitness,
    IntersectionWitness,
};

struct WitnessSpec {
    Family family;
    std::map<std::string, int> params;  // p1..p4, n, k, m as the family needs
};

Family family_from_string(const std::string& name);
const char* to_string(Family f);

/// Dispatcher used by the CLI; intersection witnesses yield two automata.
std::vector<Dfa> build(const WitnessSpec& spec);

}  // namespace witnesses
}  // namespace pumplib
