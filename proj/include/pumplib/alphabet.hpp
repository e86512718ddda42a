#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pumplib {

/// A word over some alphabet. The empty word is the empty string.
using Word = std::string;
using Symbol = char;

/// k-prefix of w (the whole word when k >= |w|).
inline Word prefix(const Word& w, std::size_t k) { return w.substr(0, std::min(k, w.size())); }

/// k-suffix of w (the whole word when k >= |w|).
inline Word suffix(const Word& w, std::size_t k) {
    const std::size_t n = std::min(k, w.size());
    return w.substr(w.size() - n);
}

/// An ordered set of distinct single-character symbols. The declared order is
/// the tie-breaking order for every deterministic iteration in the library.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        if (symbols_.empty())
            throw std::invalid_argument("Alphabet: must contain at least one symbol");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            for (std::size_t j = i + 1; j < symbols_.size(); ++j)
                if (symbols_[i] == symbols_[j])
                    throw std::invalid_argument("Alphabet: duplicate symbol '" +
                                                std::string(1, symbols_[i]) + "'");
    }

    int size() const { return static_cast<int>(symbols_.size()); }

    Symbol symbol(int idx) const { return symbols_.at(static_cast<std::size_t>(idx)); }

    /// Index of a symbol, or -1 when the symbol is not declared.
    int index(Symbol s) const {
        auto pos = symbols_.find(s);
        return pos == std::string::npos ? -1 : static_cast<int>(pos);
    }

    bool contains(Symbol s) const { return index(s) >= 0; }

    const std::string& symbols() const { return symbols_; }

    bool operator==(const Alphabet& other) const = default;

    /// Merged alphabet, sorted by character so the result does not depend on
    /// argument order.
    static Alphabet merged(const Alphabet& a, const Alphabet& b) {
        std::string s = a.symbols_;
        for (char c : b.symbols_)
            if (s.find(c) == std::string::npos) s.push_back(c);
        std::sort(s.begin(), s.end());
        return Alphabet(s);
    }

private:
    std::string symbols_;
};

/// Throws when w uses a symbol outside sigma.
inline void check_word(const Alphabet& sigma, const Word& w) {
    for (char c : w)
        if (!sigma.contains(c))
            throw std::invalid_argument("word uses symbol '" + std::string(1, c) +
                                        "' outside the declared alphabet");
}

}  // namespace pumplib
