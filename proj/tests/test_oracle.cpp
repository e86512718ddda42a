#include <doctest.h>

#include "pumplib/oracle.hpp"
#include "pumplib/random_dfa.hpp"
#include "pumplib/regex.hpp"
#include "pumplib/witnesses.hpp"

using namespace pumplib;

TEST_CASE("oracle_pumpable_mpc on canonical words") {
    Dfa blocks = parse_regex("b^*a^*b^*", Alphabet("ab"));
    CHECK(oracle_pumpable_mpc(blocks, "bab"));  // pumped by its first letter
    CHECK(oracle_pumpable_mpc(blocks, "ab"));

    Dfa two = parse_regex("a^2a^*", Alphabet("a"));
    auto shortest = shortest_word(two);
    REQUIRE(shortest.has_value());
    CHECK_FALSE(oracle_pumpable_mpc(two, *shortest));  // pumping down shortens it

    CHECK_FALSE(oracle_pumpable_mpc(two, ""));  // no non-empty y inside lambda
}

TEST_CASE("oracle lower bounds on known languages") {
    Dfa fig2_23 = parse_regex("a(a^3)^*", Alphabet("a"));  // lengths 1 mod 3
    CHECK(oracle_mpl(fig2_23, 8).value == 3);

    CHECK(oracle_mpl(parse_regex("\xe2\x88\x85", Alphabet("a")), 8).value == 0);

    CHECK(oracle_mps(parse_regex("(a^3)^*", Alphabet("a")), 9).value == 3);
    CHECK(oracle_mps(parse_regex("(a+b)^*", Alphabet("ab")), 4).value == 1);

    // Quinary witness (2,3,4,6): a descend-and-reclimb window defeats level 3
    // (shortest occurrence lives in a word of length 8).
    Dfa quin = witnesses::thm_quinary(2, 3, 4, 6);
    CHECK(oracle_mps(quin, 8).value >= 4);
}

TEST_CASE("literal pump check agrees with the orbit-based one everywhere") {
    SplitMix64 rng(5);
    RandomDfaParams p;
    p.max_states = 4;
    p.max_alphabet = 2;
    for (int i = 0; i < 25; ++i) {
        Dfa d = random_dfa(rng, p);
        Dfa m = minimize(d);
        for (const Word& w : enumerate_words(m, 5))
            for (int a = 0; a < static_cast<int>(w.size()); ++a)
                for (int b = a + 1; b <= static_cast<int>(w.size()); ++b) {
                    bool lit = oracle_pump_valid(m, w.substr(0, a), w.substr(a, b - a),
                                                 w.substr(b));
                    CHECK(lit == pump_valid(m, m.initial, w, a, b));
                }
    }
}

TEST_CASE("cross_validate agrees on random automata and witnesses") {
    SplitMix64 rng(17);
    RandomDfaParams p;
    p.max_states = 5;
    p.max_alphabet = 2;
    for (int i = 0; i < 40; ++i) {
        Dfa d = random_dfa(rng, p);
        CrossValidation cv = cross_validate(d, 12);
        for (const std::string& h : cv.hard_failures) FAIL_CHECK(h);
        CHECK(cv.ok());
    }

    CHECK(cross_validate(parse_regex("\xe2\x88\x85", Alphabet("ab")), 6).ok());
    CHECK(cross_validate(witnesses::thm_binary(2, 3, 5), 10).ok());
    CHECK(cross_validate(witnesses::star_witness(2, 3), 10).ok());
}
