#include "pumplib/dfa.hpp"

#include <deque>
#include <map>
#include <queue>

namespace pumplib {

void Dfa::validate() const {
    if (num_states <= 0) throw std::invalid_argument("Dfa: needs at least one state");
    if (alphabet.size() <= 0) throw std::invalid_argument("Dfa: empty alphabet");
    if (initial < 0 || initial >= num_states) throw std::invalid_argument("Dfa: bad initial state");
    if (static_cast<int>(accepting.size()) != num_states)
        throw std::invalid_argument("Dfa: accepting vector size mismatch");
    if (delta.size() != static_cast<std::size_t>(num_states) * alphabet.size())
        throw std::invalid_argument("Dfa: transition table size mismatch");
    for (State t : delta)
        if (t < 0 || t >= num_states) throw std::invalid_argument("Dfa: transition target out of range");
}

PartialDfa PartialDfa::empty(const Alphabet& sigma, int n, State initial) {
    PartialDfa p;
    p.alphabet = sigma;
    p.num_states = n;
    p.initial = initial;
    p.accepting.assign(n, false);
    p.delta.assign(static_cast<std::size_t>(n) * sigma.size(), -1);
    return p;
}

void PartialDfa::set(State q, Symbol a, State to) {
    int s = alphabet.index(a);
    if (s < 0) throw std::invalid_argument("PartialDfa::set: symbol outside alphabet");
    if (q < 0 || q >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("PartialDfa::set: state out of range");
    delta[static_cast<std::size_t>(q) * alphabet.size() + s] = to;
}

namespace {

// Dead = non-accepting and unable to reach an accepting state.
std::vector<bool> dead_states(const Dfa& d) {
    std::vector<bool> live = co_accessible(d);
    std::vector<bool> dead(d.num_states);
    for (State q = 0; q < d.num_states; ++q) dead[q] = !live[q];
    return dead;
}

}  // namespace

Dfa complete(const PartialDfa& p) {
    const int k = p.alphabet.size();
    bool missing = false;
    for (State t : p.delta) missing |= (t < 0);

    Dfa d;
    d.alphabet = p.alphabet;
    d.initial = p.initial;
    d.accepting = p.accepting;
    if (!missing) {
        d.num_states = p.num_states;
        d.delta = p.delta;
        d.validate();
        return d;
    }
    State sink = p.num_states;
    d.num_states = p.num_states + 1;
    d.accepting.push_back(false);
    d.delta.assign(static_cast<std::size_t>(d.num_states) * k, sink);
    for (State q = 0; q < p.num_states; ++q)
        for (int s = 0; s < k; ++s) {
            State t = p.delta[static_cast<std::size_t>(q) * k + s];
            if (t >= 0) d.delta[static_cast<std::size_t>(q) * k + s] = t;
        }
    d.validate();
    return d;
}

Dfa extend_alphabet(const Dfa& d, const Alphabet& sigma) {
    for (int s = 0; s < d.alphabet.size(); ++s)
        if (!sigma.contains(d.alphabet.symbol(s)))
            throw std::invalid_argument("extend_alphabet: target alphabet must contain the original");
    if (sigma == d.alphabet) return d;

    std::vector<bool> dead = dead_states(d);
    State sink = -1;
    for (State q = 0; q < d.num_states; ++q)
        if (dead[q]) { sink = q; break; }

    Dfa out;
    out.alphabet = sigma;
    out.num_states = d.num_states + (sink < 0 ? 1 : 0);
    out.initial = d.initial;
    out.accepting = d.accepting;
    if (sink < 0) {
        sink = d.num_states;
        out.accepting.push_back(false);
    }
    out.delta.assign(static_cast<std::size_t>(out.num_states) * sigma.size(), sink);
    for (State q = 0; q < d.num_states; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s)
            out.delta[static_cast<std::size_t>(q) * sigma.size() + sigma.index(d.alphabet.symbol(s))] =
                d.step_idx(q, s);
    out.validate();
    return out;
}

std::vector<bool> accessible(const Dfa& d) {
    std::vector<bool> seen(d.num_states, false);
    std::deque<State> todo{d.initial};
    seen[d.initial] = true;
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop_front();
        for (int s = 0; s < d.alphabet.size(); ++s) {
            State t = d.step_idx(q, s);
            if (!seen[t]) {
                seen[t] = true;
                todo.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<bool> co_accessible(const Dfa& d) {
    // Reverse reachability from the accepting set.
    std::vector<std::vector<State>> rev(d.num_states);
    for (State q = 0; q < d.num_states; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s) rev[d.step_idx(q, s)].push_back(q);
    std::vector<bool> seen(d.num_states, false);
    std::deque<State> todo;
    for (State q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) {
            seen[q] = true;
            todo.push_back(q);
        }
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop_front();
        for (State p : rev[q])
            if (!seen[p]) {
                seen[p] = true;
                todo.push_back(p);
            }
    }
    return seen;
}

Dfa minimize(const Dfa& d) {
    d.validate();
    const int k = d.alphabet.size();

    // Work on the accessible part only.
    std::vector<bool> acc = accessible(d);
    std::vector<State> pack(d.num_states, -1);
    std::vector<State> unpack;
    for (State q = 0; q < d.num_states; ++q)
        if (acc[q]) {
            pack[q] = static_cast<State>(unpack.size());
            unpack.push_back(q);
        }
    const int n = static_cast<int>(unpack.size());

    // Moore partition refinement: split by acceptance, then by successor
    // class signatures until stable.
    std::vector<int> cls(n);
    for (int q = 0; q < n; ++q) cls[q] = d.accepting[unpack[q]] ? 1 : 0;
    {
        bool has0 = false, has1 = false;
        for (int c : cls) (c ? has1 : has0) = true;
        if (!has0 || !has1)
            for (int& c : cls) c = 0;
    }
    int num_cls = 1;
    for (int c : cls) num_cls = std::max(num_cls, c + 1);

    for (;;) {
        std::map<std::vector<int>, int> sig_to_cls;
        std::vector<int> next(n);
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[q]);
            for (int s = 0; s < k; ++s) sig.push_back(cls[pack[d.step_idx(unpack[q], s)]]);
            auto [it, added] = sig_to_cls.emplace(std::move(sig), static_cast<int>(sig_to_cls.size()));
            next[q] = it->second;
        }
        int next_num = static_cast<int>(sig_to_cls.size());
        bool stable = (next_num == num_cls);
        cls = std::move(next);
        num_cls = next_num;
        if (stable) break;
    }

    // Canonical numbering: BFS from the initial class in alphabet order.
    std::vector<int> order(num_cls, -1);
    std::vector<int> rep(num_cls, -1);  // a representative packed state per class
    for (int q = 0; q < n; ++q)
        if (rep[cls[q]] < 0) rep[cls[q]] = q;
    int assigned = 0;
    std::deque<int> todo{cls[pack[d.initial]]};
    order[cls[pack[d.initial]]] = assigned++;
    while (!todo.empty()) {
        int c = todo.front();
        todo.pop_front();
        for (int s = 0; s < k; ++s) {
            int t = cls[pack[d.step_idx(unpack[rep[c]], s)]];
            if (order[t] < 0) {
                order[t] = assigned++;
                todo.push_back(t);
            }
        }
    }

    Dfa out;
    out.alphabet = d.alphabet;
    out.num_states = num_cls;
    out.initial = 0;
    out.accepting.assign(num_cls, false);
    out.delta.assign(static_cast<std::size_t>(num_cls) * k, 0);
    for (int c = 0; c < num_cls; ++c) {
        State q = unpack[rep[c]];
        out.accepting[order[c]] = d.accepting[q];
        for (int s = 0; s < k; ++s)
            out.delta[static_cast<std::size_t>(order[c]) * k + s] = order[cls[pack[d.step_idx(q, s)]]];
    }
    out.validate();
    return out;
}

int sc(const Dfa& d) { return minimize(d).num_states; }

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("equivalent: alphabets differ (align them first)");
    Dfa ma = minimize(a), mb = minimize(b);
    return ma.num_states == mb.num_states && ma.accepting == mb.accepting && ma.delta == mb.delta;
}

bool is_empty(const Dfa& d) {
    std::vector<bool> acc = accessible(d);
    for (State q = 0; q < d.num_states; ++q)
        if (acc[q] && d.accepting[q]) return false;
    return true;
}

bool is_finite(const Dfa& d) {
    std::vector<bool> acc = accessible(d), live = co_accessible(d);
    std::vector<bool> trim(d.num_states);
    for (State q = 0; q < d.num_states; ++q) trim[q] = acc[q] && live[q];

    // Cycle detection on the trim part.
    std::vector<int> color(d.num_states, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<State, int>> stack;
    for (State start = 0; start < d.num_states; ++start) {
        if (!trim[start] || color[start] != 0) continue;
        stack.push_back({start, 0});
        color[start] = 1;
        while (!stack.empty()) {
            auto& [q, s] = stack.back();
            if (s == d.alphabet.size()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            State t = d.step_idx(q, s++);
            if (!trim[t]) continue;
            if (color[t] == 1) return false;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return true;
}

Dfa product(const Dfa& d1, const Dfa& d2, const std::function<bool(bool, bool)>& combine) {
    if (d1.alphabet != d2.alphabet)
        throw std::invalid_argument("product: alphabets differ (align them first)");
    const int k = d1.alphabet.size();

    std::map<std::pair<State, State>, State> id;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State a, State b) {
        auto [it, added] = id.emplace(std::make_pair(a, b), static_cast<State>(pairs.size()));
        if (added) pairs.push_back({a, b});
        return it->second;
    };

    Dfa out;
    out.alphabet = d1.alphabet;
    out.initial = intern(d1.initial, d2.initial);
    std::vector<State> flat;
    for (State q = 0; q < static_cast<State>(pairs.size()); ++q) {
        auto [a, b] = pairs[q];
        for (int s = 0; s < k; ++s) flat.push_back(intern(d1.step_idx(a, s), d2.step_idx(b, s)));
    }
    out.num_states = static_cast<int>(pairs.size());
    out.delta = std::move(flat);
    out.accepting.resize(out.num_states);
    for (State q = 0; q < out.num_states; ++q)
        out.accepting[q] = combine(d1.accepting[pairs[q].first], d2.accepting[pairs[q].second]);
    out.validate();
    return out;
}

std::vector<Word> enumerate_words(const Dfa& d, int max_len) {
    std::vector<bool> live = co_accessible(d);
    std::vector<Word> out;
    Word w;
    // Depth-first in symbol order at a fixed length gives lexicographic order.
    std::function<void(State, int)> walk = [&](State q, int remaining) {
        if (remaining == 0) {
            if (d.accepting[q]) out.push_back(w);
            return;
        }
        if (!live[q]) return;
        for (int s = 0; s < d.alphabet.size(); ++s) {
            w.push_back(d.alphabet.symbol(s));
            walk(d.step_idx(q, s), remaining - 1);
            w.pop_back();
        }
    };
    for (int len = 0; len <= max_len; ++len) walk(d.initial, len);
    return out;
}

namespace {

// BFS over (state, capped length) layers; expanding symbols in alphabet order
// makes the first hit (length, lex)-minimal.
std::optional<Word> bfs_word(const Dfa& d, int min_len) {
    struct Node {
        State q;
        int len;  // capped at min_len
        int parent;
        char sym;
    };
    std::vector<Node> arena;
    std::vector<bool> seen(static_cast<std::size_t>(d.num_states) * (min_len + 1), false);
    auto mark = [&](State q, int len) {
        std::size_t idx = static_cast<std::size_t>(q) * (min_len + 1) + len;
        if (seen[idx]) return false;
        seen[idx] = true;
        return true;
    };
    std::deque<int> todo;
    arena.push_back({d.initial, 0, -1, 0});
    mark(d.initial, 0);
    todo.push_back(0);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop_front();
        Node node = arena[cur];
        if (node.len >= min_len && d.accepting[node.q]) {
            Word w;
            for (int i = cur; arena[i].parent >= 0; i = arena[i].parent) w.push_back(arena[i].sym);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int s = 0; s < d.alphabet.size(); ++s) {
            State t = d.step_idx(node.q, s);
            int len = std::min(node.len + 1, min_len);
            if (!mark(t, len)) continue;
            arena.push_back({t, len, cur, d.alphabet.symbol(s)});
            todo.push_back(static_cast<int>(arena.size()) - 1);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Word> shortest_word(const Dfa& d) { return bfs_word(d, 0); }

std::optional<Word> shortest_word_at_least(const Dfa& d, int min_len) {
    return bfs_word(d, std::max(0, min_len));
}

std::optional<Word> shortest_word_to(const Dfa& d, State q) {
    if (q < 0 || q >= d.num_states) throw std::invalid_argument("shortest_word_to: bad state");
    std::vector<int> parent(d.num_states, -2);
    std::vector<char> via(d.num_states, 0);
    std::deque<State> todo{d.initial};
    parent[d.initial] = -1;
    while (!todo.empty()) {
        State cur = todo.front();
        todo.pop_front();
        if (cur == q) {
            Word w;
            for (State x = q; parent[x] >= 0; x = parent[x]) w.push_back(via[x]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int s = 0; s < d.alphabet.size(); ++s) {
            State t = d.step_idx(cur, s);
            if (parent[t] == -2) {
                parent[t] = cur;
                via[t] = d.alphabet.symbol(s);
                todo.push_back(t);
            }
        }
    }
    return std::nullopt;
}

}  // namespace pumplib
