#include <doctest.h>

#include "pumplib/regex.hpp"

using namespace pumplib;

TEST_CASE("regex literals") {
    Dfa empty = parse_regex("\xe2\x88\x85", Alphabet("ab"));
    CHECK(sc(empty) == 1);
    CHECK(is_empty(empty));

    Dfa lambda = parse_regex("\xce\xbb", Alphabet("ab"));
    CHECK(lambda.accepts(""));
    CHECK_FALSE(lambda.accepts("a"));

    Dfa a_star = parse_regex("a^*", Alphabet("ab"));
    CHECK(sc(a_star) == 2);
}

TEST_CASE("regex operators: union, juxtaposition, star, plus, power") {
    Dfa d = parse_regex("b^1(a^2)^*", Alphabet("ab"));
    CHECK(d.accepts("b"));
    CHECK(d.accepts("baa"));
    CHECK_FALSE(d.accepts("ba"));
    CHECK_FALSE(d.accepts(""));

    Dfa plus = parse_regex("b^+", Alphabet("ab"));
    CHECK(plus.accepts("b"));
    CHECK(plus.accepts("bbb"));
    CHECK_FALSE(plus.accepts(""));

    // + is union (binds looser than juxtaposition), * binds tightest.
    Dfa u = parse_regex("ab+c^*", Alphabet("abc"));
    CHECK(u.accepts("ab"));
    CHECK(u.accepts(""));
    CHECK(u.accepts("ccc"));
    CHECK_FALSE(u.accepts("abc"));

    Dfa p0 = parse_regex("a^0", Alphabet("a"));
    CHECK(p0.accepts(""));
    CHECK_FALSE(p0.accepts("a"));

    CHECK(equivalent(parse_regex("a^*", Alphabet("ab")), parse_regex("a*", Alphabet("ab"))));
    CHECK(equivalent(parse_regex("a^+", Alphabet("ab")), parse_regex("aa^*", Alphabet("ab"))));
}

TEST_CASE("regex errors carry positions") {
    try {
        parse_regex("a(b", Alphabet("ab"));
        FAIL("expected a RegexError");
    } catch (const RegexError& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_regex("ax", Alphabet("ab"));
        FAIL("expected a RegexError");
    } catch (const RegexError& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_regex("a^", Alphabet("ab")), RegexError);
    CHECK_THROWS_AS(parse_regex("*a", Alphabet("ab")), RegexError);
    CHECK_THROWS_AS(parse_regex("", Alphabet("ab")), RegexError);
}

TEST_CASE("regex_letters extracts atoms only") {
    CHECK(regex_letters("b^1(a^2)^*") == "ab");
    CHECK(regex_letters("a^*+a^*bb^*") == "ab");
    CHECK(regex_letters("\xce\xbb+\xe2\x88\x85") == "");
    CHECK(regex_letters("c^12(d)^*") == "cd");
}
