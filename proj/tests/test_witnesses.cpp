#include <doctest.h>

#include "pumplib/langops.hpp"
#include "pumplib/pumping.hpp"
#include "pumplib/regex.hpp"
#include "pumplib/witnesses.hpp"

using namespace pumplib;
namespace W = pumplib::witnesses;

TEST_CASE("block languages") {
    CHECK(equivalent(W::b_star(3), parse_regex("b^*a^*b^*", Alphabet("ab"))));
    CHECK(equivalent(W::b_plus(4), parse_regex("b^+a^*b^*a^*", Alphabet("ab"))));
    CHECK(is_empty(W::b_plus(0)));
    CHECK(is_empty(W::b_star(0)));
    CHECK_THROWS_AS(W::b_plus(-1), std::invalid_argument);
}

TEST_CASE("thm_binary realizes (mpc, mpl, sc) triples") {
    Dfa d = W::thm_binary(1, 1, 2);
    CHECK(equivalent(d, parse_regex("a^*", Alphabet("ab"))));
    CHECK(sc(d) == 2);

    PumpingReport r = analyze(W::thm_binary(2, 3, 3));
    CHECK(r.mpc == 2);
    CHECK(r.mpl == 3);
    CHECK(r.sc == 3);

    PumpingReport r2 = analyze(W::thm_binary(1, 2, 5));
    CHECK(r2.mpc == 1);
    CHECK(r2.mpl == 2);
    CHECK(r2.sc == 5);

    CHECK_THROWS_AS(W::thm_binary(2, 1, 3), std::invalid_argument);
}

TEST_CASE("footnote family: corrected state counts") {
    Dfa d4 = W::footnote_family(1, 1, 4);
    CHECK(sc(d4) == 5);  // off-by-one case: p3 + 1 states

    Dfa d2 = W::footnote_family(1, 1, 2);
    CHECK(equivalent(d2, parse_regex("a^*", Alphabet("ab"))));
    CHECK(sc(d2) == 2);

    PumpingReport r = analyze(W::footnote_family(2, 3, 5));
    CHECK(r.mpc == 2);
    CHECK(r.mpl == 3);

    CHECK(W::footnote_expected_sc(1, 1, 4) == 5);
    CHECK(W::footnote_expected_sc(1, 1, 2) == 2);
    CHECK(W::footnote_expected_sc(2, 3, 5) == 5);
    CHECK_THROWS_AS(W::footnote_family(1, 2, 2), std::invalid_argument);
}

TEST_CASE("thm_quinary self-validates its four-tuple") {
    Dfa d = W::thm_quinary(1, 2, 4, 6);
    PumpingReport r = analyze(d);
    CHECK(r.mpc == 1);
    CHECK(r.mpl == 2);
    CHECK(r.mps == 4);
    CHECK(r.sc == 6);

    PumpingReport r2 = analyze(W::thm_quinary(2, 3, 4, 4));
    CHECK(r2.mpc == 2);
    CHECK(r2.mpl == 3);
    CHECK(r2.mps == 4);
    CHECK(r2.sc == 4);

    // Any tuple with p2 < p3: d^{p2+p1-1} pumps only by d^{p2}.
    Dfa q = W::thm_quinary(2, 3, 5, 6);
    Dfa d_only = langops::intersect(q, parse_regex("d^*", Alphabet("abcde")));
    CHECK(equivalent(d_only, parse_regex("(d^3)^*d^1", Alphabet("abcde"))));

    CHECK_THROWS_AS(W::thm_quinary(3, 2, 4, 5), std::invalid_argument);
}

TEST_CASE("star witness families") {
    PumpingReport r31 = analyze(W::star_witness(3, 1));
    CHECK(r31.mps == 3);  // finite language
    CHECK(analyze(langops::star(W::star_witness(3, 1))).mps == 1);

    Dfa w22 = W::star_witness(2, 2);
    CHECK(equivalent(w22, parse_regex("(a^2)^*", Alphabet("ab"))));

    Dfa w23 = W::star_witness(2, 3);
    CHECK(analyze(w23).mps == 2);
    CHECK(analyze(langops::star(w23)).mps == 3);

    CHECK_THROWS_AS(W::star_witness(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(W::star_witness(0, 1), std::invalid_argument);
}

TEST_CASE("intersection witness families") {
    auto [a0, b0] = W::intersection_witness(2, 3, 0);
    CHECK(is_empty(langops::intersect(a0, b0)));

    auto [a1, b1] = W::intersection_witness(2, 3, 1);
    Dfa i1 = langops::intersect(a1, b1);
    CHECK(equivalent(i1, extend_alphabet(parse_regex("b^*", Alphabet("b")), i1.alphabet)));
    PumpingReport r1 = analyze(i1);
    CHECK(r1.mpl == 1);
    CHECK(r1.mps == 1);

    auto [a4, b4] = W::intersection_witness(2, 2, 4);
    Dfa i4 = langops::intersect(a4, b4);
    PumpingReport r4 = analyze(i4);
    CHECK(r4.mpl == 4);
    CHECK(r4.mps == 4);
    CHECK(is_finite(i4));
    // The longest intersection word is (ba)^{(k-2)/2} d of length k-1, and the
    // (ba)^i d family is present for every admissible i.
    std::vector<Word> words = enumerate_words(i4, 6);
    CHECK(words == std::vector<Word>{"b", "d", "bad"});

    CHECK_THROWS_AS(W::intersection_witness(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(W::intersection_witness(1, 1, 3), std::invalid_argument);
}

TEST_CASE("witness dispatcher") {
    W::WitnessSpec spec{W::Family::BinaryTriple, {{"p1", 1}, {"p2", 2}, {"p3", 3}}};
    std::vector<Dfa> ds = W::build(spec);
    REQUIRE(ds.size() == 1);
    CHECK(analyze(ds[0]).mpl == 2);

    W::WitnessSpec pair{W::Family::IntersectionWitness, {{"m", 2}, {"n", 2}, {"k", 1}}};
    CHECK(W::build(pair).size() == 2);

    W::WitnessSpec missing{W::Family::StarWitness, {{"n", 2}}};
    CHECK_THROWS_AS(W::build(missing), std::invalid_argument);
    CHECK_THROWS_AS(W::family_from_string("nope"), std::invalid_argument);
}
