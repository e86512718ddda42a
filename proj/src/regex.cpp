#include "pumplib/regex.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include "pumplib/nfa.hpp"

namespace pumplib {

namespace {

struct Node;
using NodePtr = std::shared_ptr<Node>;

struct Node {
    enum Kind { kSymbol, kEpsilon, kEmpty, kConcat, kUnion, kStar, kPower } kind;
    char symbol = 0;
    int power = 0;
    NodePtr left, right;
};

NodePtr make(Node::Kind kind, NodePtr l = nullptr, NodePtr r = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

class Parser {
public:
    Parser(const std::string& text, const Alphabet& sigma) : text_(text), sigma_(sigma) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_space();
        if (pos_ != text_.size()) throw RegexError("unexpected input", pos_);
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_atom() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        if (c == '(' ) return true;
        if (c == ')' || c == '+' || c == '*' || c == '^') return false;
        return true;
    }

    NodePtr expr() {
        NodePtr e = term();
        while (eat('+')) e = make(Node::kUnion, e, term());
        return e;
    }

    NodePtr term() {
        NodePtr e = factor();
        while (peek_atom()) e = make(Node::kConcat, e, factor());
        return e;
    }

    NodePtr factor() {
        NodePtr e = atom();
        for (;;) {
            skip_space();
            if (pos_ >= text_.size()) break;
            if (text_[pos_] == '*') {
                ++pos_;
                e = make(Node::kStar, e);
            } else if (text_[pos_] == '^') {
                ++pos_;
                skip_space();
                if (pos_ >= text_.size()) throw RegexError("dangling '^'", pos_);
                char c = text_[pos_];
                if (c == '*') {
                    ++pos_;
                    e = make(Node::kStar, e);
                } else if (c == '+') {
                    ++pos_;
                    // X^+ = XX*
                    e = make(Node::kConcat, e, make(Node::kStar, e));
                } else if (c >= '0' && c <= '9') {
                    int n = 0;
                    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                        n = n * 10 + (text_[pos_] - '0');
                        if (n > 1000) throw RegexError("power too large", pos_);
                        ++pos_;
                    }
                    auto p = make(Node::kPower, e);
                    p->power = n;
                    e = p;
                } else {
                    throw RegexError("expected '*', '+' or digits after '^'", pos_);
                }
            } else {
                break;
            }
        }
        return e;
    }

    NodePtr atom() {
        skip_space();
        if (pos_ >= text_.size()) throw RegexError("expected an atom", pos_);
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) throw RegexError("missing ')'", pos_);
            return e;
        }
        // UTF-8 lambda (empty word) and empty-set literals.
        if (match_utf8("\xce\xbb")) return make(Node::kEpsilon);
        if (match_utf8("\xe2\x88\x85")) return make(Node::kEmpty);
        char c = text_[pos_];
        if (c == ')' || c == '+' || c == '*' || c == '^')
            throw RegexError(std::string("unexpected '") + c + "'", pos_);
        if (static_cast<unsigned char>(c) >= 0x80)
            throw RegexError("unrecognized multi-byte character", pos_);
        if (!sigma_.contains(c))
            throw RegexError(std::string("symbol '") + c + "' outside the declared alphabet", pos_);
        ++pos_;
        auto n = make(Node::kSymbol);
        n->symbol = c;
        return n;
    }

    bool match_utf8(const char* bytes) {
        std::size_t len = std::char_traits<char>::length(bytes);
        if (text_.compare(pos_, len, bytes) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    const std::string& text_;
    const Alphabet& sigma_;
    std::size_t pos_ = 0;
};

// Thompson fragments: one start, one accept, edges appended to a growing Nfa.
struct Builder {
    Nfa nfa;

    explicit Builder(const Alphabet& sigma) { nfa = Nfa::empty(sigma, 0); }

    State fresh() {
        nfa.num_states++;
        nfa.accepting.push_back(false);
        nfa.trans.emplace_back(nfa.alphabet.size());
        nfa.eps.emplace_back();
        return nfa.num_states - 1;
    }

    struct Frag {
        State start, accept;
    };

    Frag compile(const NodePtr& n) {
        switch (n->kind) {
            case Node::kSymbol: {
                Frag f{fresh(), fresh()};
                nfa.add_edge(f.start, n->symbol, f.accept);
                return f;
            }
            case Node::kEpsilon: {
                Frag f{fresh(), fresh()};
                nfa.add_eps(f.start, f.accept);
                return f;
            }
            case Node::kEmpty:
                return {fresh(), fresh()};
            case Node::kConcat: {
                Frag a = compile(n->left), b = compile(n->right);
                nfa.add_eps(a.accept, b.start);
                return {a.start, b.accept};
            }
            case Node::kUnion: {
                Frag a = compile(n->left), b = compile(n->right);
                Frag f{fresh(), fresh()};
                nfa.add_eps(f.start, a.start);
                nfa.add_eps(f.start, b.start);
                nfa.add_eps(a.accept, f.accept);
                nfa.add_eps(b.accept, f.accept);
                return f;
            }
            case Node::kStar: {
                Frag a = compile(n->left);
                Frag f{fresh(), fresh()};
                nfa.add_eps(f.start, a.start);
                nfa.add_eps(f.start, f.accept);
                nfa.add_eps(a.accept, a.start);
                nfa.add_eps(a.accept, f.accept);
                return f;
            }
            case Node::kPower: {
                if (n->power == 0) {
                    Frag f{fresh(), fresh()};
                    nfa.add_eps(f.start, f.accept);
                    return f;
                }
                Frag whole = compile(n->left);
                for (int i = 1; i < n->power; ++i) {
                    Frag next = compile(n->left);
                    nfa.add_eps(whole.accept, next.start);
                    whole.accept = next.accept;
                }
                return whole;
            }
        }
        throw std::logic_error("unreachable");
    }
};

}  // namespace

Dfa parse_regex(const std::string& expr, const Alphabet& sigma) {
    Parser parser(expr, sigma);
    NodePtr ast = parser.parse();
    Builder b(sigma);
    Builder::Frag f = b.compile(ast);
    b.nfa.initials = {f.start};
    b.nfa.accepting[f.accept] = true;
    return minimize(determinize(b.nfa));
}

std::string regex_letters(const std::string& expr) {
    std::string out;
    bool in_power = false;  // inside a ^digits run
    for (char c : expr) {
        if (static_cast<unsigned char>(c) >= 0x80) {
            in_power = false;
            continue;  // multi-byte literal (lambda / empty set)
        }
        if (c == ' ' || c == '\t') continue;
        if (c == '^') {
            in_power = true;
            continue;
        }
        if (in_power && c >= '0' && c <= '9') continue;
        in_power = false;
        if (c == '(' || c == ')' || c == '+' || c == '*') continue;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pumplib
