#include <doctest.h>

#include <algorithm>
#include <set>

#include "pumplib/langops.hpp"
#include "pumplib/oracle.hpp"
#include "pumplib/pumping.hpp"
#include "pumplib/random_dfa.hpp"
#include "pumplib/regex.hpp"

using namespace pumplib;

namespace {

Dfa fig2(int p1, int p2) {  // unary cycle of length p2 accepting q_{p1-1}
    Dfa d;
    d.alphabet = Alphabet("a");
    d.num_states = p2;
    d.initial = 0;
    d.accepting.assign(p2, false);
    d.accepting[p1 - 1] = true;
    d.delta.resize(p2);
    for (State q = 0; q < p2; ++q) d.delta[q] = (q + 1) % p2;
    return d;
}

Dfa example_language() {
    return parse_regex("a^*+a^*bb^*+a^*bb^*aa^*+a^*bb^*aa^*bb^*", Alphabet("ab"));
}

}  // namespace

TEST_CASE("orbit enumerates the eventually periodic state sequence") {
    Dfa a_star = parse_regex("a^*", Alphabet("ab"));
    Orbit o = orbit(a_star, a_star.initial, "a");
    CHECK(o.states == std::vector<State>{a_star.initial});
    CHECK(o.preperiod == 0);
    CHECK(o.period == 1);

    Dfa cyc = fig2(1, 3);
    Orbit o3 = orbit(cyc, 0, "a");
    CHECK(o3.states == std::vector<State>{0, 1, 2});
    CHECK(o3.preperiod == 0);
    CHECK(o3.period == 3);

    CHECK_THROWS_AS(orbit(cyc, 0, ""), std::invalid_argument);

    SplitMix64 rng(3);
    RandomDfaParams p;
    p.max_states = 5;
    p.max_alphabet = 2;
    for (int i = 0; i < 30; ++i) {
        Dfa d = random_dfa(rng, p);
        Word y;
        for (int l = 0; l < 1 + static_cast<int>(rng.below(3)); ++l)
            y += d.alphabet.symbol(static_cast<int>(rng.below(d.alphabet.size())));
        State q = static_cast<State>(rng.below(d.num_states));
        Orbit o2 = orbit(d, q, y);
        std::set<State> brute;
        State cur = q;
        for (int t = 0; t <= 2 * d.num_states; ++t) {
            brute.insert(cur);
            cur = d.run(cur, y);
        }
        CHECK(std::set<State>(o2.states.begin(), o2.states.end()) == brute);
        CHECK(o2.preperiod + o2.period == static_cast<int>(o2.states.size()));
    }
}

TEST_CASE("pump_valid decides all exponents at once") {
    Dfa even = parse_regex("(a^2)^*", Alphabet("a"));
    Dfa m = minimize(even);
    CHECK(m.accepts("aa"));
    CHECK_FALSE(pump_valid(m, m.initial, "aa", 0, 1));  // odd pumps leave L
    CHECK(pump_valid(m, m.initial, "aa", 0, 2));

    Dfa a_star = parse_regex("a^*", Alphabet("a"));
    CHECK(pump_valid(a_star, a_star.initial, "a", 0, 1, "aa"));

    CHECK_THROWS_AS(pump_valid(m, m.initial, "aa", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(pump_valid(m, m.initial, "aa", 0, 3), std::invalid_argument);
}

TEST_CASE("mpc examples") {
    CHECK(analyze(parse_regex("\xe2\x88\x85", Alphabet("a"))).mpc == 0);
    CHECK(analyze(parse_regex("a^2a^*", Alphabet("a"))).mpc == 3);
    CHECK(analyze(example_language()).mpc == 1);
    CHECK(analyze(parse_regex("a+a^3", Alphabet("a"))).mpc == 4);  // finite {a, aaa}
}

TEST_CASE("satisfies_mpl and the mpl scan") {
    Dfa empty = parse_regex("\xe2\x88\x85", Alphabet("a"));
    CHECK(satisfies_mpl(empty, 0));
    CHECK(analyze(empty).mpl == 0);

    Dfa f = fig2(2, 3);
    CHECK(satisfies_mpl(f, sc(f)));
    auto defect = mpl_defect(f, 2);
    REQUIRE(defect.has_value());
    CHECK(*defect == "aaaa");  // a^{p2+p1-1}
    CHECK(analyze(f).mpl == 3);
    CHECK(analyze(f).mpc == 2);
    CHECK(analyze(f).sc == 3);

    CHECK(analyze(parse_regex("ab", Alphabet("ab"))).mpl == 3);  // finite {ab}
}

TEST_CASE("satisfies_mps and the mps scan") {
    Dfa all = parse_regex("(a+b)^*", Alphabet("ab"));
    CHECK(satisfies_mps(all, 1));
    CHECK(analyze(all).mps == 1);

    // star of (a^2)^* + (b^2)^*: blocks divisible by 2; fails at p = 2
    // (window ab inside aabb), holds at 3.
    Dfa blocks = langops::star(parse_regex("(a^2)^*+(b^2)^*", Alphabet("ab")));
    CHECK_FALSE(satisfies_mps(blocks, 2));
    CHECK(satisfies_mps(blocks, 3));
    CHECK(satisfies_mps(blocks, sc(blocks)));
    CHECK(analyze(blocks).mps == 3);

    CHECK(analyze(parse_regex("\xe2\x88\x85", Alphabet("a"))).mps == 0);
    CHECK(analyze(parse_regex("(a^3)^*", Alphabet("a"))).mps == 3);
    // finite {lambda, a, aa, b}
    CHECK(analyze(parse_regex("\xce\xbb+a+a^2+b", Alphabet("ab"))).mps == 3);
}

TEST_CASE("analyze reports all four constants with witnesses") {
    PumpingReport r0 = analyze(parse_regex("\xe2\x88\x85", Alphabet("ab")));
    CHECK(r0.mpc == 0);
    CHECK(r0.mpl == 0);
    CHECK(r0.mps == 0);
    CHECK(r0.sc == 1);
    CHECK_FALSE(r0.witness_mpc.has_value());

    PumpingReport r1 = analyze(parse_regex("(a+b)^*", Alphabet("ab")));
    CHECK(r1.mpc == 1);
    CHECK(r1.mpl == 1);
    CHECK(r1.mps == 1);
    CHECK(r1.sc == 1);

    Dfa ex = example_language();
    PumpingReport re = analyze(ex);
    CHECK(re.mpc == 1);
    CHECK(re.sc == 5);
    // mpl and mps are derived: cross-check against the brute-force oracle.
    CHECK(oracle_mpl(ex, 12).value == re.mpl);
    CHECK(oracle_mps(ex, 12).value == re.mps);
}

TEST_CASE("defect words defeat their level under the oracle") {
    Dfa f = fig2(2, 3);
    PumpingReport r = analyze(f);
    REQUIRE(r.witness_mpl.has_value());
    // No pump with |xy| <= mpl-1 exists in the witness.
    const Word& w = *r.witness_mpl;
    bool pumpable = false;
    for (int i = 0; i < r.mpl - 1 && !pumpable; ++i)
        for (int j = i + 1; j <= r.mpl - 1 && !pumpable; ++j)
            pumpable = oracle_pump_valid(f, w.substr(0, i), w.substr(i, j - i), w.substr(j));
    CHECK_FALSE(pumpable);
}

TEST_CASE("pumping properties on random automata") {
    SplitMix64 rng(99);
    RandomDfaParams p;
    p.max_states = 5;
    p.max_alphabet = 3;
    for (int i = 0; i < 60; ++i) {
        Dfa d = random_dfa(rng, p);
        PumpingReport r = analyze(d);

        // chain and zero-iff-empty
        CHECK(r.mpc <= r.mpl);
        CHECK(r.mpl <= r.mps);
        CHECK(r.mps <= r.sc);
        CHECK((r.mpc == 0) == is_empty(d));
        CHECK((r.mpl == 0) == is_empty(d));
        CHECK((r.mps == 0) == is_empty(d));

        // monotonicity at the threshold
        if (r.mpl >= 1) CHECK_FALSE(satisfies_mpl(d, r.mpl - 1));
        CHECK(satisfies_mpl(d, r.mpl));
        CHECK(satisfies_mpl(d, r.mpl + 1));
        if (r.mps >= 1) CHECK_FALSE(satisfies_mps(d, r.mps - 1));
        CHECK(satisfies_mps(d, r.mps));
        CHECK(satisfies_mps(d, r.mps + 1));

        // certificates re-verify against the canonical minimal automaton
        Dfa m = minimize(d);
        for (const Decomposition& c : r.certificates) CHECK(verify_decomposition(m, c));

        // finite languages: all three constants are 1 + max word length
        if (!is_empty(d) && is_finite(d)) {
            int longest = 0;
            for (const Word& w : enumerate_words(d, sc(d))) longest = std::max<int>(longest, w.size());
            CHECK(r.mpc == longest + 1);
            CHECK(r.mpl == longest + 1);
            CHECK(r.mps == longest + 1);
        }

        // reversal preserves mpc and mps
        PumpingReport rr = analyze(langops::reversal(d));
        CHECK(rr.mpc == r.mpc);
        CHECK(rr.mps == r.mps);
    }
}
