#include "pumplib/pumping.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace pumplib {

const char* to_string(PumpKind k) {
    switch (k) {
        case PumpKind::Mpc: return "mpc";
        case PumpKind::Mpl: return "mpl";
        case PumpKind::Mps: return "mps";
    }
    return "?";
}

Orbit orbit(const Dfa& d, State q, const Word& y) {
    if (y.empty()) throw std::invalid_argument("orbit: y must be non-empty");
    check_word(d.alphabet, y);
    Orbit o;
    std::vector<int> pos(d.num_states, -1);
    State cur = q;
    for (;;) {
        if (pos[cur] >= 0) {
            o.preperiod = pos[cur];
            o.period = static_cast<int>(o.states.size()) - pos[cur];
            return o;
        }
        pos[cur] = static_cast<int>(o.states.size());
        o.states.push_back(cur);
        cur = d.run(cur, y);
    }
}

bool pump_valid(const Dfa& d, State q, const Word& w, int i, int j, const Word& continuation) {
    if (i < 0 || j <= i || j > static_cast<int>(w.size()))
        throw std::invalid_argument("pump_valid: need 0 <= i < j <= |w|");
    if (q < 0 || q >= d.num_states) throw std::invalid_argument("pump_valid: bad state");
    State before = d.run(q, w.substr(0, i));
    Orbit orb = orbit(d, before, w.substr(i, j - i));
    Word rest = w.substr(j) + continuation;
    for (State o : orb.states)
        if (!d.accepting[d.run(o, rest)]) return false;
    return true;
}

bool verify_decomposition(const Dfa& d, const Decomposition& c) {
    if (c.window_start < 0 || c.window_len < 0 ||
        c.window_start + c.window_len > static_cast<int>(c.word.size()))
        return false;
    Word u = c.word.substr(0, c.window_start);
    Word w = c.word.substr(c.window_start, c.window_len);
    Word v = c.word.substr(c.window_start + c.window_len);
    if (c.i < 0 || c.j <= c.i || c.j > c.window_len) return false;
    if (!d.accepts(c.word)) return false;
    if (!pump_valid(d, d.run(d.initial, u), w, c.i, c.j, v)) return false;
    Orbit o = orbit(d, d.run(d.initial, u + w.substr(0, c.i)), w.substr(c.i, c.j - c.i));
    return o.states == c.orbit.states && o.preperiod == c.orbit.preperiod &&
           o.period == c.orbit.period;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : b) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Exact decision machinery, run on a minimized automaton.
class Analyzer {
public:
    Analyzer(const Dfa& m, const AnalysisOptions& opts)
        : m_(m), live_(co_accessible(m)), opts_(opts) {
        words_ = (m_.num_states + 63) / 64;
        accept_mask_.assign(words_, 0);
        for (State q = 0; q < m_.num_states; ++q)
            if (m_.accepting[q]) set_bit(accept_mask_, q);
        live_mask_.assign(words_, 0);
        for (State q = 0; q < m_.num_states; ++q)
            if (live_[q]) set_bit(live_mask_, q);
    }

    const Dfa& automaton() const { return m_; }

    // Bounded-prefix property at level p; defect = first failing prefix with
    // its shortest bad continuation appended.
    std::optional<Word> mpl_defect(int p) {
        if (p == 0) return shortest_word(m_);
        std::optional<Word> found;
        walk_windows(m_.initial, p, [&](const std::vector<State>& path, const Word& w) {
            auto bad = bad_continuation(path, w);
            if (bad) {
                found = w + *bad;
                return true;
            }
            return false;
        });
        return found;
    }

    // Sub-word property at level p; windows are enumerated from every state
    // in canonical order.
    std::optional<MpsCounterexample> mps_defect(int p) {
        if (p == 0) {
            auto w = shortest_word(m_);
            if (!w) return std::nullopt;
            return MpsCounterexample{Word(), Word(), *w};
        }
        std::optional<MpsCounterexample> found;
        for (State q = 0; q < m_.num_states && !found; ++q) {
            if (!live_[q]) continue;
            walk_windows(q, p, [&](const std::vector<State>& path, const Word& w) {
                auto bad = bad_continuation(path, w);
                if (bad) {
                    found = MpsCounterexample{*shortest_word_to(m_, q), w, *bad};
                    return true;
                }
                return false;
            });
        }
        return found;
    }

    // 1 + length of the longest unpumpable accepted word. Any accepted word
    // whose state path repeats a state is pumpable via that loop, and any
    // word of length >= mpl pumps inside its mpl-prefix, so the search space
    // is the repeat-free path tree cut at depth mpl-1.
    std::pair<int, Word> mpc_with_witness(int mpl_value) {
        int best_len = -1;
        Word best;
        std::vector<State> path{m_.initial};
        std::vector<bool> onpath(m_.num_states, false);
        onpath[m_.initial] = true;
        Word w;
        auto consider = [&]() {
            if (static_cast<int>(w.size()) <= best_len) return;
            if (!m_.accepting[path.back()]) return;
            if (!unpumpable(path, w)) return;
            best_len = static_cast<int>(w.size());
            best = w;
        };
        std::function<void()> dfs = [&]() {
            consider();
            if (static_cast<int>(w.size()) >= mpl_value - 1) return;
            for (int s = 0; s < m_.alphabet.size(); ++s) {
                State t = m_.step_idx(path.back(), s);
                if (!live_[t] || onpath[t]) continue;
                onpath[t] = true;
                path.push_back(t);
                w.push_back(m_.alphabet.symbol(s));
                dfs();
                w.pop_back();
                path.pop_back();
                onpath[t] = false;
            }
        };
        if (live_[m_.initial]) dfs();
        if (best_len < 0) throw std::logic_error("mpc: no unpumpable word found in a non-empty language");
        return {best_len + 1, best};
    }

    // First valid pump of the window w = word[ws..ws+wl) (with the rest of
    // the word as continuation), scanning j ascending then i ascending, with
    // j capped at max_j.
    std::optional<Decomposition> first_pump(PumpKind kind, const Word& word, int ws, int wl,
                                            int max_j) {
        State q = m_.run(m_.initial, word.substr(0, ws));
        Word w = word.substr(ws, wl);
        Word v = word.substr(ws + wl);
        for (int j = 1; j <= std::min(wl, max_j); ++j)
            for (int i = 0; i < j; ++i)
                if (pump_valid(m_, q, w, i, j, v)) {
                    Decomposition c;
                    c.kind = kind;
                    c.word = word;
                    c.window_start = ws;
                    c.window_len = wl;
                    c.i = i;
                    c.j = j;
                    c.orbit = orbit(m_, m_.run(q, w.substr(0, i)), w.substr(i, j - i));
                    return c;
                }
        return std::nullopt;
    }

private:
    static void set_bit(Bits& b, int q) { b[q >> 6] |= 1ull << (q & 63); }
    static bool get_bit(const Bits& b, int q) { return (b[q >> 6] >> (q & 63)) & 1; }

    static bool subset_of(const Bits& a, const Bits& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i]) return false;
        return true;
    }

    static int popcount(const Bits& b) {
        int n = 0;
        for (std::uint64_t w : b) n += __builtin_popcountll(w);
        return n;
    }

    // Enumerates repeat-free live paths of length exactly p from q, in
    // lexicographic order. Paths revisiting a state carry a state loop, hence
    // a pump valid for every continuation, so their windows (and every
    // extension's) are auto-satisfied and the subtree is pruned. Dead states
    // admit no accepted completion, so those subtrees are vacuous.
    void walk_windows(State q, int p,
                      const std::function<bool(const std::vector<State>&, const Word&)>& visit) {
        std::vector<State> path{q};
        std::vector<bool> onpath(m_.num_states, false);
        onpath[q] = true;
        Word w;
        std::function<bool()> dfs = [&]() {
            if (static_cast<int>(w.size()) == p) return visit(path, w);
            for (int s = 0; s < m_.alphabet.size(); ++s) {
                State t = m_.step_idx(path.back(), s);
                if (!live_[t] || onpath[t]) continue;
                onpath[t] = true;
                path.push_back(t);
                w.push_back(m_.alphabet.symbol(s));
                bool stop = dfs();
                w.pop_back();
                path.pop_back();
                onpath[t] = false;
                if (stop) return true;
            }
            return false;
        };
        dfs();
    }

    // Orbit image of candidate (i, j) under the window tail, as a bit set.
    Bits candidate_targets(const std::vector<State>& path, const Word& w, int i, int j,
                           const std::vector<std::vector<State>>& tail) {
        Bits t(words_, 0);
        std::vector<bool> seen(m_.num_states, false);
        State cur = path[i];
        Word y = w.substr(i, j - i);
        while (!seen[cur]) {
            seen[cur] = true;
            set_bit(t, tail[j][cur]);
            cur = m_.run(cur, y);
        }
        return t;
    }

    // Whole-word unpumpability (no (i, j) admits a valid pump with empty
    // continuation).
    bool unpumpable(const std::vector<State>& path, const Word& w) {
        const int n = static_cast<int>(w.size());
        std::vector<std::vector<State>> tail = tail_functions(w);
        for (int j = n; j >= 1; --j)
            for (int i = 0; i < j; ++i) {
                bool ok = true;
                std::vector<bool> seen(m_.num_states, false);
                State cur = path[i];
                Word y = w.substr(i, j - i);
                while (!seen[cur]) {
                    seen[cur] = true;
                    if (!m_.accepting[tail[j][cur]]) {
                        ok = false;
                        break;
                    }
                    cur = m_.run(cur, y);
                }
                if (ok) return false;
            }
        return true;
    }

    // tail[j][q] = state after reading w[j..) from q.
    std::vector<std::vector<State>> tail_functions(const Word& w) {
        const int n = static_cast<int>(w.size());
        std::vector<std::vector<State>> tail(n + 1, std::vector<State>(m_.num_states));
        for (State q = 0; q < m_.num_states; ++q) tail[n][q] = q;
        for (int j = n - 1; j >= 0; --j) {
            int s = m_.alphabet.index(w[j]);
            for (State q = 0; q < m_.num_states; ++q) tail[j][q] = tail[j + 1][m_.step_idx(q, s)];
        }
        return tail;
    }

    // Shortest (then lexicographically smallest) continuation v such that the
    // window's word u·w·v is accepted but every pump candidate has an orbit
    // state from which the rest of the word is rejected. Returns nullopt when
    // every accepted continuation validates some candidate.
    std::optional<Word> bad_continuation(const std::vector<State>& path, const Word& w) {
        const int p = static_cast<int>(w.size());
        const State main = path[p];
        std::vector<std::vector<State>> tail = tail_functions(w);

        std::vector<Bits> sets;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                Bits t = candidate_targets(path, w, i, j, tail);
                if (popcount(t) == 1 && get_bit(t, main)) return std::nullopt;  // always valid
                sets.push_back(std::move(t));
            }
        Bits node = pack_node(main, std::move(sets));
        auto it = memo_.find(node);
        if (it != memo_.end()) return it->second;
        auto result = bad_search(node);
        memo_.emplace(std::move(node), result);
        return result;
    }

    // Canonical node layout: [main, set count, sorted sets...]. Sets with a
    // dead member can never validate again (the dead state rejects forever),
    // so they impose no constraint and are dropped; supersets of a remaining
    // set follow from it and are dropped too. This keeps the reachable space
    // small: subsets that drift apart converge again once pruned.
    Bits pack_node(State main_q, std::vector<Bits>&& sets) {
        std::vector<Bits> kept;
        for (Bits& s : sets)
            if (subset_of(s, live_mask_)) kept.push_back(std::move(s));
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        Bits node;
        node.reserve(2 + kept.size() * words_);
        node.push_back(static_cast<std::uint64_t>(main_q));
        node.push_back(0);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < kept.size() && !dominated; ++j)
                if (j != i && subset_of(kept[j], kept[i]) && kept[j] != kept[i]) dominated = true;
            if (!dominated) {
                node.insert(node.end(), kept[i].begin(), kept[i].end());
                ++node[1];
            }
        }
        return node;
    }

    // BFS over the deterministic product (main state, one state subset per
    // candidate). A node is bad when main accepts and every subset still
    // contains a rejecting state.
    std::optional<Word> bad_search(const Bits& start) {
        auto is_bad = [&](const Bits& node) {
            State q = static_cast<State>(node[0]);
            if (!m_.accepting[q]) return false;
            std::size_t count = node[1];
            for (std::size_t c = 0; c < count; ++c) {
                bool has_rejector = false;
                for (int wd = 0; wd < words_ && !has_rejector; ++wd)
                    if (node[2 + c * words_ + wd] & ~accept_mask_[wd]) has_rejector = true;
                if (!has_rejector) return false;
            }
            return true;
        };

        struct Entry {
            Bits node;
            int parent;
            char sym;
        };
        std::vector<Entry> arena;
        std::unordered_set<Bits, BitsHash> visited;
        std::deque<int> todo;

        arena.push_back({start, -1, 0});
        visited.insert(start);
        todo.push_back(0);

        auto reconstruct = [&](int idx) {
            Word v;
            for (int i = idx; arena[i].parent >= 0; i = arena[i].parent) v.push_back(arena[i].sym);
            std::reverse(v.begin(), v.end());
            return v;
        };

        while (!todo.empty()) {
            int cur = todo.front();
            todo.pop_front();
            if (++used_ > opts_.node_budget)
                throw BudgetExceeded(
                    "bad-continuation search exceeded the node budget of " +
                    std::to_string(opts_.node_budget) +
                    " (raise AnalysisOptions::node_budget to push further)");
            const Bits node = arena[cur].node;
            if (is_bad(node)) return reconstruct(cur);
            State q = static_cast<State>(node[0]);
            if (!live_[q]) continue;  // acceptance unreachable: no bad word below
            const std::size_t count = node[1];
            for (int s = 0; s < m_.alphabet.size(); ++s) {
                std::vector<Bits> images(count, Bits(words_, 0));
                for (std::size_t c = 0; c < count; ++c) {
                    const std::uint64_t* in = &node[2 + c * words_];
                    for (int wd = 0; wd < words_; ++wd) {
                        std::uint64_t bits = in[wd];
                        while (bits) {
                            int b = __builtin_ctzll(bits);
                            bits &= bits - 1;
                            State t = m_.step_idx((wd << 6) + b, s);
                            images[c][t >> 6] |= 1ull << (t & 63);
                        }
                    }
                }
                Bits next = pack_node(m_.step_idx(q, s), std::move(images));
                if (visited.insert(next).second) {
                    arena.push_back({std::move(next), cur, m_.alphabet.symbol(s)});
                    todo.push_back(static_cast<int>(arena.size()) - 1);
                }
            }
        }
        return std::nullopt;
    }

    const Dfa& m_;
    std::vector<bool> live_;
    AnalysisOptions opts_;
    long long used_ = 0;
    int words_;
    Bits accept_mask_, live_mask_;
    std::unordered_map<Bits, std::optional<Word>, BitsHash> memo_;
};

}  // namespace

std::optional<Word> mpl_defect(const Dfa& d, int p, const AnalysisOptions& opts) {
    if (p < 0) throw std::invalid_argument("mpl_defect: p must be >= 0");
    Dfa m = minimize(d);
    Analyzer az(m, opts);
    return az.mpl_defect(p);
}

std::optional<MpsCounterexample> mps_defect(const Dfa& d, int p, const AnalysisOptions& opts) {
    if (p < 0) throw std::invalid_argument("mps_defect: p must be >= 0");
    Dfa m = minimize(d);
    Analyzer az(m, opts);
    return az.mps_defect(p);
}

PumpingReport analyze(const Dfa& d, const AnalysisOptions& opts) {
    Dfa m = minimize(d);
    PumpingReport r;
    r.sc = m.num_states;
    if (is_empty(m)) return r;  // (0, 0, 0, 1)

    Analyzer az(m, opts);

    std::optional<Word> mpl_witness;
    int p = 0;
    for (;; ++p) {
        if (p > m.num_states) throw std::logic_error("mpl scan ran past sc");
        auto defect = az.mpl_defect(p);
        if (!defect) break;
        mpl_witness = std::move(defect);
    }
    r.mpl = p;
    r.witness_mpl = mpl_witness;

    auto [mpc_value, mpc_witness] = az.mpc_with_witness(r.mpl);
    r.mpc = mpc_value;
    r.witness_mpc = mpc_witness;

    // The chain gives mps >= mpl, so the scan starts there.
    std::optional<MpsCounterexample> mps_witness;
    int q = r.mpl;
    for (;; ++q) {
        if (q > m.num_states) throw std::logic_error("mps scan ran past sc");
        auto defect = az.mps_defect(q);
        if (!defect) break;
        mps_witness = std::move(defect);
    }
    r.mps = q;
    if (mps_witness) {
        r.witness_mps = mps_witness;
    } else if (mpl_witness) {
        // mps == mpl: the bounded-prefix defect at level mpl-1, read as the
        // occurrence (lambda, prefix, rest).
        r.witness_mps = MpsCounterexample{Word(), prefix(*mpl_witness, r.mpl - 1),
                                          mpl_witness->substr(std::min<std::size_t>(
                                              mpl_witness->size(), r.mpl - 1))};
    }

    if (!(r.mpc <= r.mpl && r.mpl <= r.mps && r.mps <= r.sc))
        throw std::logic_error("pumping constant chain violated");

    if (auto w = shortest_word_at_least(m, r.mpc))
        if (auto c = az.first_pump(PumpKind::Mpc, *w, 0, static_cast<int>(w->size()),
                                   static_cast<int>(w->size())))
            r.certificates.push_back(std::move(*c));
    if (auto w = shortest_word_at_least(m, r.mpl))
        if (auto c = az.first_pump(PumpKind::Mpl, *w, 0, static_cast<int>(w->size()), r.mpl))
            r.certificates.push_back(std::move(*c));
    if (auto w = shortest_word_at_least(m, r.mps))
        if (auto c = az.first_pump(PumpKind::Mps, *w, 0, r.mps, r.mps))
            r.certificates.push_back(std::move(*c));
    return r;
}

int mpc(const Dfa& d, const AnalysisOptions& opts) { return analyze(d, opts).mpc; }
int mpl(const Dfa& d, const AnalysisOptions& opts) { return analyze(d, opts).mpl; }
int mps(const Dfa& d, const AnalysisOptions& opts) { return analyze(d, opts).mps; }

}  // namespace pumplib
