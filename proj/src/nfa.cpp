#include "pumplib/nfa.hpp"

#include <algorithm>
#include <map>

namespace pumplib {

namespace {

std::vector<State> eps_closure(const Nfa& n, std::vector<State> set) {
    std::vector<bool> in(n.num_states, false);
    for (State q : set) in[q] = true;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (State t : n.eps[set[i]])
            if (!in[t]) {
                in[t] = true;
                set.push_back(t);
            }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

}  // namespace

Dfa determinize(const Nfa& n) {
    const int k = n.alphabet.size();
    std::map<std::vector<State>, State> id;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> set) {
        auto [it, added] = id.emplace(std::move(set), static_cast<State>(subsets.size()));
        if (added) subsets.push_back(it->first);
        return it->second;
    };

    Dfa d;
    d.alphabet = n.alphabet;
    d.initial = intern(eps_closure(n, n.initials));
    std::vector<State> flat;
    for (State q = 0; q < static_cast<State>(subsets.size()); ++q) {
        std::vector<State> cur = subsets[q];
        for (int s = 0; s < k; ++s) {
            std::vector<State> next;
            for (State p : cur)
                for (State t : n.trans[p][s]) next.push_back(t);
            flat.push_back(intern(eps_closure(n, std::move(next))));
        }
    }
    d.num_states = static_cast<int>(subsets.size());
    d.delta = std::move(flat);
    d.accepting.assign(d.num_states, false);
    for (State q = 0; q < d.num_states; ++q)
        for (State p : subsets[q])
            if (n.accepting[p]) d.accepting[q] = true;
    d.validate();
    return d;
}

}  // namespace pumplib
