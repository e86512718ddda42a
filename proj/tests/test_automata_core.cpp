#include <doctest.h>

#include <set>

#include "pumplib/langops.hpp"
#include "pumplib/nfa.hpp"
#include "pumplib/random_dfa.hpp"
#include "pumplib/regex.hpp"
#include "pumplib/serialize.hpp"

using namespace pumplib;

namespace {

// All words over sigma of length <= max_len, length-then-lex.
std::vector<Word> all_words(const Alphabet& sigma, int max_len) {
    std::vector<Word> out{Word()};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int s = 0; s < sigma.size(); ++s) out.push_back(out[i] + sigma.symbol(s));
        level_begin = level_end;
    }
    return out;
}

// Myhill-Nerode class count from membership alone: distinct acceptance
// fingerprints of the residuals u^{-1}L over probe words of length <= len.
int brute_residual_count(const Dfa& d, int len) {
    std::vector<Word> probes = all_words(d.alphabet, len);
    std::set<std::vector<bool>> fingerprints;
    for (const Word& u : probes) {
        std::vector<bool> fp;
        fp.reserve(probes.size());
        for (const Word& w : probes) fp.push_back(d.accepts(u + w));
        fingerprints.insert(std::move(fp));
    }
    return static_cast<int>(fingerprints.size());
}

Dfa example_language() {
    return parse_regex("a^*+a^*bb^*+a^*bb^*aa^*+a^*bb^*aa^*bb^*", Alphabet("ab"));
}

}  // namespace

TEST_CASE("membership follows the extended transition function") {
    Dfa a_star = parse_regex("a^*", Alphabet("ab"));
    CHECK(a_star.accepts(""));
    CHECK(a_star.accepts("aaa"));
    CHECK_FALSE(a_star.accepts("ab"));
    CHECK_THROWS_AS(a_star.accepts("ax"), std::invalid_argument);

    // Three alternations after the leading b exceed the example language's
    // block pattern.
    Dfa ex = example_language();
    CHECK_FALSE(ex.accepts("babab"));
    CHECK(ex.accepts("aabbaabb"));
    CHECK(ex.accepts(""));
}

TEST_CASE("complete routes missing transitions to a sink") {
    Alphabet ab("ab");
    PartialDfa p = PartialDfa::empty(ab, 1, 0);
    p.accepting[0] = true;
    p.set(0, 'a', 0);
    Dfa d = complete(p);
    CHECK(d.num_states == 2);
    CHECK(d.accepts("aa"));
    CHECK_FALSE(d.accepts("ab"));

    // Idempotence on complete input.
    PartialDfa q;
    q.alphabet = d.alphabet;
    q.num_states = d.num_states;
    q.initial = d.initial;
    q.accepting = d.accepting;
    q.delta = d.delta;
    Dfa again = complete(q);
    CHECK(again.num_states == d.num_states);
    CHECK(again.delta == d.delta);
}

TEST_CASE("complete on the drawn block automaton yields p3 states") {
    // B*_{p3-1} for p3 = 5 drawn without its sink: a chain q0..q3 with
    // alternating advance letters and self-loops.
    const int p3 = 5;
    Alphabet ab("ab");
    PartialDfa p = PartialDfa::empty(ab, p3 - 1, 0);
    for (int i = 0; i < p3 - 1; ++i) {
        p.accepting[i] = true;
        p.set(i, i % 2 == 0 ? 'b' : 'a', i);  // self-loop
        if (i + 1 < p3 - 1) p.set(i, i % 2 == 0 ? 'a' : 'b', i + 1);
    }
    Dfa d = complete(p);
    CHECK(d.num_states == p3);
    CHECK(minimize(d).num_states == p3);
}

TEST_CASE("minimize merges equivalent states and is idempotent") {
    // Two equivalent accepting sinks.
    Alphabet a1("a");
    Dfa d;
    d.alphabet = a1;
    d.num_states = 3;
    d.initial = 0;
    d.accepting = {false, true, true};
    d.delta = {1, 2, 1};  // 0-a->1, 1-a->2, 2-a->1
    Dfa m = minimize(d);
    CHECK(m.num_states == 2);

    Dfa mm = minimize(m);
    CHECK(mm.num_states == m.num_states);
    CHECK(mm.delta == m.delta);
    CHECK(mm.accepting == m.accepting);
}

TEST_CASE("sc counts the sink of the minimal complete DFA") {
    CHECK(sc(parse_regex("(a+b)^*", Alphabet("ab"))) == 1);
    CHECK(sc(example_language()) == 5);
    CHECK(sc(parse_regex("\xe2\x88\x85", Alphabet("a"))) == 1);
}

TEST_CASE("determinize handles epsilon closures and reversal NFAs") {
    // Single initial accepting state, no transitions: the language {lambda}.
    Nfa n = Nfa::empty(Alphabet("a"), 1);
    n.initials = {0};
    n.accepting[0] = true;
    Dfa d = determinize(n);
    CHECK(d.accepts(""));
    CHECK_FALSE(d.accepts("a"));

    Dfa ab = parse_regex("ab", Alphabet("ab"));
    Dfa ba = langops::reversal(ab);
    CHECK(ba.accepts("ba"));
    CHECK_FALSE(ba.accepts("ab"));
    CHECK(enumerate_words(ba, 4) == std::vector<Word>{"ba"});
}

TEST_CASE("state count of b^*a^*b^* agrees with the residual-count oracle") {
    Dfa d = parse_regex("b^*a^*b^*", Alphabet("ab"));
    int brute = brute_residual_count(d, 6);
    CHECK(sc(d) == brute);
    CHECK(sc(d) == 4);  // frozen from the oracle
}

TEST_CASE("sc equals the brute-force residual count on random instances") {
    SplitMix64 rng(7);
    RandomDfaParams p;
    p.max_states = 4;
    p.max_alphabet = 2;
    for (int i = 0; i < 40; ++i) {
        Dfa d = random_dfa(rng, p);
        CHECK(sc(d) == brute_residual_count(d, d.num_states + 1));
    }
}

TEST_CASE("product combines acceptance pointwise") {
    Dfa ex = example_language();
    Dfa none = product(ex, langops::complement(ex), [](bool x, bool y) { return x && y; });
    CHECK(is_empty(none));

    Dfa empty = parse_regex("\xe2\x88\x85", Alphabet("ab"));
    Dfa either = product(ex, empty, [](bool x, bool y) { return x || y; });
    CHECK(equivalent(minimize(either), minimize(ex)));

    Dfa mismatched = parse_regex("a^*", Alphabet("a"));
    CHECK_THROWS_AS(product(ex, mismatched, [](bool x, bool y) { return x && y; }),
                    std::invalid_argument);
}

TEST_CASE("product membership is definitional on random pairs") {
    SplitMix64 rng(11);
    RandomDfaParams p;
    p.max_states = 5;
    p.min_alphabet = p.max_alphabet = 2;
    for (int i = 0; i < 50; ++i) {
        Dfa d1 = random_dfa(rng, p);
        Dfa d2 = random_dfa(rng, p);
        Dfa both = product(d1, d2, [](bool x, bool y) { return x != y; });
        for (const Word& w : all_words(d1.alphabet, 5))
            CHECK(both.accepts(w) == (d1.accepts(w) != d2.accepts(w)));
    }
}

TEST_CASE("emptiness and finiteness") {
    CHECK(is_empty(parse_regex("\xe2\x88\x85", Alphabet("a"))));
    CHECK(is_finite(parse_regex("\xe2\x88\x85", Alphabet("a"))));

    Dfa sq = parse_regex("(a^2)^*", Alphabet("a"));
    CHECK_FALSE(is_empty(sq));
    CHECK_FALSE(is_finite(sq));

    // {a^i | 0 <= i <= 2} + {b}: finite.
    Dfa fin = parse_regex("\xce\xbb+a+a^2+b", Alphabet("ab"));
    CHECK(is_finite(fin));
    CHECK_FALSE(is_empty(fin));
}

TEST_CASE("enumerate_words is ordered, duplicate-free and matches brute filtering") {
    Dfa empty = parse_regex("\xe2\x88\x85", Alphabet("ab"));
    CHECK(enumerate_words(empty, 5).empty());

    Dfa a_star = parse_regex("a^*", Alphabet("a"));
    CHECK(enumerate_words(a_star, 2) == std::vector<Word>{"", "a", "aa"});

    // Unary cyclic automaton with (p1, p2) = (2, 3): accepted lengths 1, 4, 7.
    Dfa cyc;
    cyc.alphabet = Alphabet("a");
    cyc.num_states = 3;
    cyc.initial = 0;
    cyc.accepting = {false, true, false};
    cyc.delta = {1, 2, 0};
    CHECK(enumerate_words(cyc, 7) == std::vector<Word>{"a", "aaaa", "aaaaaaa"});

    SplitMix64 rng(23);
    RandomDfaParams p;
    p.max_states = 5;
    p.max_alphabet = 3;
    for (int i = 0; i < 30; ++i) {
        Dfa d = random_dfa(rng, p);
        std::vector<Word> got = enumerate_words(d, 5);
        std::vector<Word> want;
        for (const Word& w : all_words(d.alphabet, 5))
            if (d.accepts(w)) want.push_back(w);
        // all_words is produced in length-then-lex order already
        CHECK(got == want);
    }
}

TEST_CASE("minimize preserves the language on random instances") {
    SplitMix64 rng(31);
    RandomDfaParams p;
    p.max_states = 6;
    p.max_alphabet = 3;
    for (int i = 0; i < 60; ++i) {
        Dfa d = random_dfa(rng, p);
        Dfa m = minimize(d);
        for (const Word& w : all_words(d.alphabet, 6)) CHECK(m.accepts(w) == d.accepts(w));
    }
}

TEST_CASE("double reversal preserves the language") {
    SplitMix64 rng(47);
    RandomDfaParams p;
    p.max_states = 5;
    p.max_alphabet = 3;
    for (int i = 0; i < 40; ++i) {
        Dfa d = random_dfa(rng, p);
        Dfa twice = langops::reversal(langops::reversal(d));
        CHECK(equivalent(minimize(d), twice));
    }
}

TEST_CASE("text serialization round-trips bit-exactly") {
    Dfa d = example_language();
    std::string text = to_text(d);
    Dfa back = from_text(text);
    CHECK(to_text(back) == text);

    std::string json = to_json(d);
    Dfa back2 = from_json(json);
    CHECK(to_json(back2) == json);

    SplitMix64 rng(53);
    RandomDfaParams p;
    p.max_states = 6;
    p.max_alphabet = 3;
    for (int i = 0; i < 50; ++i) {
        Dfa r = random_dfa(rng, p);
        CHECK(to_text(from_text(to_text(r))) == to_text(r));
        CHECK(to_json(from_json(to_json(r))) == to_json(r));
    }
}

TEST_CASE("text format rejects malformed input") {
    CHECK_THROWS_AS(from_text("alphabet: a\nstates: 1\ninitial: 0\naccepting:\n"),
                    std::runtime_error);  // missing delta lines
    CHECK_THROWS_AS(
        from_text("alphabet: a\nstates: 1\ninitial: 0\naccepting:\ndelta: 0 a 0\ndelta: 0 a 0\n"),
        std::runtime_error);  // duplicate
    CHECK_THROWS_AS(from_text("alphabet: a a\nstates: 1\ninitial: 0\naccepting:\ndelta: 0 a 0\n"),
                    std::invalid_argument);  // duplicate symbol
}

TEST_CASE("empty accepting set serializes as a bare keyword line") {
    Dfa d = parse_regex("\xe2\x88\x85", Alphabet("a"));
    std::string text = to_text(d);
    CHECK(text.find("accepting:\n") != std::string::npos);
    CHECK(to_text(from_text(text)) == text);
}
