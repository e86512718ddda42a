#include "pumplib/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pumplib {

std::string to_text(const Dfa& d) {
    std::ostringstream out;
    out << "alphabet:";
    for (int s = 0; s < d.alphabet.size(); ++s) out << ' ' << d.alphabet.symbol(s);
    out << '\n';
    out << "states: " << d.num_states << '\n';
    out << "initial: " << d.initial << '\n';
    out << "accepting:";
    for (State q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) out << ' ' << q;
    out << '\n';
    for (State q = 0; q < d.num_states; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s)
            out << "delta: " << q << ' ' << d.alphabet.symbol(s) << ' ' << d.step_idx(q, s) << '\n';
    return out.str();
}

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::runtime_error("DFA text format: " + what);
}

std::string expect_line(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line)) bad("missing '" + key + "' line");
    if (line.rfind(key, 0) != 0) bad("expected '" + key + "' line, got: " + line);
    return line.substr(key.size());
}

}  // namespace

Dfa from_text(const std::string& text) {
    std::istringstream in(text);

    std::string syms;
    {
        std::istringstream fields(expect_line(in, "alphabet:"));
        std::string tok;
        while (fields >> tok) {
            if (tok.size() != 1) bad("alphabet symbols must be single characters: " + tok);
            syms += tok;
        }
        if (syms.empty()) bad("empty alphabet");
    }
    Dfa d;
    d.alphabet = Alphabet(syms);
    {
        std::istringstream fields(expect_line(in, "states:"));
        if (!(fields >> d.num_states) || d.num_states <= 0) bad("bad state count");
    }
    {
        std::istringstream fields(expect_line(in, "initial:"));
        if (!(fields >> d.initial)) bad("bad initial state");
    }
    d.accepting.assign(d.num_states, false);
    {
        std::istringstream fields(expect_line(in, "accepting:"));
        int q;
        while (fields >> q) {
            if (q < 0 || q >= d.num_states) bad("accepting state out of range");
            d.accepting[q] = true;
        }
    }
    const int k = d.alphabet.size();
    d.delta.assign(static_cast<std::size_t>(d.num_states) * k, -1);
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("delta:", 0) != 0) bad("expected 'delta:' line, got: " + line);
        std::istringstream fields(line.substr(6));
        int q, to;
        std::string sym;
        if (!(fields >> q >> sym >> to) || sym.size() != 1) bad("malformed delta line: " + line);
        int s = d.alphabet.index(sym[0]);
        if (s < 0) bad("delta symbol outside alphabet: " + sym);
        if (q < 0 || q >= d.num_states || to < 0 || to >= d.num_states) bad("delta state out of range");
        std::size_t idx = static_cast<std::size_t>(q) * k + s;
        if (d.delta[idx] != -1) bad("duplicate delta entry: " + line);
        d.delta[idx] = to;
        ++seen;
    }
    if (seen != d.num_states * k) bad("transition table incomplete");
    d.validate();
    return d;
}

std::string to_json(const Dfa& d) {
    nlohmann::ordered_json j;
    j["alphabet"] = nlohmann::ordered_json::array();
    for (int s = 0; s < d.alphabet.size(); ++s) j["alphabet"].push_back(std::string(1, d.alphabet.symbol(s)));
    j["states"] = d.num_states;
    j["initial"] = d.initial;
    j["accepting"] = nlohmann::ordered_json::array();
    for (State q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) j["accepting"].push_back(q);
    j["delta"] = nlohmann::ordered_json::array();
    for (State q = 0; q < d.num_states; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s)
            j["delta"].push_back({q, std::string(1, d.alphabet.symbol(s)), d.step_idx(q, s)});
    return j.dump(2) + "\n";
}

Dfa from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string syms;
    for (const auto& s : j.at("alphabet")) {
        std::string t = s.get<std::string>();
        if (t.size() != 1) throw std::runtime_error("DFA json: alphabet symbols must be single characters");
        syms += t;
    }
    Dfa d;
    d.alphabet = Alphabet(syms);
    d.num_states = j.at("states").get<int>();
    if (d.num_states <= 0) throw std::runtime_error("DFA json: bad state count");
    d.initial = j.at("initial").get<State>();
    d.accepting.assign(d.num_states, false);
    for (const auto& q : j.at("accepting")) {
        int i = q.get<int>();
        if (i < 0 || i >= d.num_states) throw std::runtime_error("DFA json: accepting state out of range");
        d.accepting[i] = true;
    }
    const int k = d.alphabet.size();
    d.delta.assign(static_cast<std::size_t>(d.num_states) * k, -1);
    for (const auto& e : j.at("delta")) {
        int q = e.at(0).get<int>();
        std::string sym = e.at(1).get<std::string>();
        int to = e.at(2).get<int>();
        int s = sym.size() == 1 ? d.alphabet.index(sym[0]) : -1;
        if (s < 0) throw std::runtime_error("DFA json: bad delta symbol");
        if (q < 0 || q >= d.num_states || to < 0 || to >= d.num_states)
            throw std::runtime_error("DFA json: delta state out of range");
        d.delta[static_cast<std::size_t>(q) * k + s] = to;
    }
    d.validate();
    return d;
}

namespace {

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

Dfa load_dfa_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ends_with(path, ".json") ? from_json(buf.str()) : from_text(buf.str());
}

void save_dfa_file(const Dfa& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << (ends_with(path, ".json") ? to_json(d) : to_text(d));
}

}  // namespace pumplib
