#include "pumplib/oracle.hpp"

#include <algorithm>

namespace pumplib {

namespace {

Word repeat(const Word& y, int t) {
    Word out;
    out.reserve(y.size() * t);
    for (int i = 0; i < t; ++i) out += y;
    return out;
}

// Valid pumps (i, j) of word, 0 <= i < j <= |word|, with empty context.
std::vector<std::pair<int, int>> valid_pumps(const Dfa& d, const Word& word) {
    const int n = static_cast<int>(word.size());
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (oracle_pump_valid(d, word.substr(0, i), word.substr(i, j - i), word.substr(j)))
                out.push_back({i, j});
    return out;
}

}  // namespace

bool oracle_pump_valid(const Dfa& d, const Word& x, const Word& y, const Word& z) {
    for (int t = 0; t <= 2 * d.num_states; ++t)
        if (!d.accepts(x + repeat(y, t) + z)) return false;
    return true;
}

bool oracle_pumpable_mpc(const Dfa& d, const Word& w) { return !valid_pumps(d, w).empty(); }

OracleValue oracle_mpc(const Dfa& d, int len_bound) {
    OracleValue r;
    for (const Word& w : enumerate_words(d, len_bound)) {
        int len = static_cast<int>(w.size());
        if (r.witness && len <= static_cast<int>(r.witness->size())) continue;
        if (!oracle_pumpable_mpc(d, w)) {
            r.witness = w;
            r.value = len + 1;
        }
    }
    return r;
}

OracleValue oracle_mpl(const Dfa& d, int len_bound) {
    OracleValue r;
    for (const Word& w : enumerate_words(d, len_bound)) {
        const int n = static_cast<int>(w.size());
        int jmin = n + 1;
        for (auto [i, j] : valid_pumps(d, w)) jmin = std::min(jmin, j);
        int defeated = std::min(n, jmin - 1);
        if (defeated + 1 > r.value) {
            r.value = defeated + 1;
            r.witness = w;
        }
    }
    return r;
}

OracleMpsValue oracle_mps(const Dfa& d, int len_bound) {
    OracleMpsValue r;
    for (const Word& word : enumerate_words(d, len_bound)) {
        const int n = static_cast<int>(word.size());
        std::vector<std::pair<int, int>> pumps = valid_pumps(d, word);
        for (int s = 0; s <= n; ++s) {
            int jmin = n + 1;
            for (auto [i, j] : pumps)
                if (i >= s) jmin = std::min(jmin, j);
            int defeated = std::min(n - s, jmin - s - 1);
            if (defeated + 1 > r.value) {
                r.value = defeated + 1;
                r.witness = MpsCounterexample{word.substr(0, s), word.substr(s, defeated),
                                              word.substr(s + defeated)};
            }
        }
    }
    return r;
}

namespace {

// Literal re-check that `word` admits no pump (i, j <= p) inside the window
// word[ws..ws+wl), the remainder of the word serving as context.
bool literal_defeats(const Dfa& d, const Word& word, int ws, int wl, int p) {
    for (int i = 0; i < std::min(wl, p); ++i)
        for (int j = i + 1; j <= std::min(wl, p); ++j)
            if (oracle_pump_valid(d, word.substr(0, ws + i), word.substr(ws + i, j - i),
                              word.substr(ws + j)))
                return false;
    return true;
}

}  // namespace

CrossValidation cross_validate(const Dfa& d, int len_bound) {
    CrossValidation cv;
    cv.exact = analyze(d);
    cv.o_mpc = oracle_mpc(d, len_bound);
    cv.o_mpl = oracle_mpl(d, len_bound);
    cv.o_mps = oracle_mps(d, len_bound);

    auto fail = [&](const std::string& what) { cv.hard_failures.push_back(what); };

    if (cv.o_mpc.value > cv.exact.mpc)
        fail("oracle mpc lower bound " + std::to_string(cv.o_mpc.value) + " exceeds exact " +
             std::to_string(cv.exact.mpc));
    if (cv.o_mpl.value > cv.exact.mpl)
        fail("oracle mpl lower bound " + std::to_string(cv.o_mpl.value) + " exceeds exact " +
             std::to_string(cv.exact.mpl));
    if (cv.o_mps.value > cv.exact.mps)
        fail("oracle mps lower bound " + std::to_string(cv.o_mps.value) + " exceeds exact " +
             std::to_string(cv.exact.mps));

    if (cv.exact.witness_mpc) {
        const Word& w = *cv.exact.witness_mpc;
        if (!d.accepts(w)) fail("mpc witness not accepted: '" + w + "'");
        else if (oracle_pumpable_mpc(d, w)) fail("mpc witness is pumpable: '" + w + "'");
    }
    if (cv.exact.witness_mpl) {
        const Word& w = *cv.exact.witness_mpl;
        int p = cv.exact.mpl - 1;
        if (!d.accepts(w)) fail("mpl witness not accepted: '" + w + "'");
        else if (static_cast<int>(w.size()) < p) fail("mpl witness shorter than level");
        else if (!literal_defeats(d, w, 0, static_cast<int>(w.size()), p))
            fail("mpl witness does not defeat level " + std::to_string(p));
    }
    if (cv.exact.witness_mps) {
        const auto& [u, w, v] = *cv.exact.witness_mps;
        int p = cv.exact.mps - 1;
        Word word = u + w + v;
        if (!d.accepts(word)) fail("mps witness not accepted: '" + word + "'");
        else if (static_cast<int>(w.size()) < p) fail("mps witness window shorter than level");
        else if (!literal_defeats(d, word, static_cast<int>(u.size()),
                                  static_cast<int>(w.size()), p))
            fail("mps witness does not defeat level " + std::to_string(p));
    }
    // Certificates carry orbit states in the canonical minimal automaton's
    // numbering, so they are re-checked against that automaton.
    Dfa m = minimize(d);
    for (const Decomposition& c : cv.exact.certificates)
        if (!verify_decomposition(m, c))
            fail(std::string("certificate for ") + to_string(c.kind) + " does not re-verify");
    return cv;
}

}  // namespace pumplib
