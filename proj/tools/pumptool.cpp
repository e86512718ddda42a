#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "pumplib/langops.hpp"
#include "pumplib/oracle.hpp"
#include "pumplib/pumping.hpp"
#include "pumplib/regex.hpp"
#include "pumplib/serialize.hpp"
#include "pumplib/suites.hpp"
#include "pumplib/witnesses.hpp"

namespace {

using namespace pumplib;

Dfa load_input(const std::string& input, const std::string& alphabet_override) {
    if (std::filesystem::exists(input)) return load_dfa_file(input);
    // Not a file: treat as a regular expression.
    std::string letters = alphabet_override.empty() ? regex_letters(input) : alphabet_override;
    if (letters.empty())
        throw std::invalid_argument(
            "regex has no letters; pass --alphabet to declare the alphabet");
    return parse_regex(input, Alphabet(letters));
}

nlohmann::ordered_json orbit_json(const Orbit& o) {
    nlohmann::ordered_json j;
    j["states"] = o.states;
    j["preperiod"] = o.preperiod;
    j["period"] = o.period;
    return j;
}

nlohmann::ordered_json report_json(const PumpingReport& r) {
    nlohmann::ordered_json j;
    j["mpc"] = r.mpc;
    j["mpl"] = r.mpl;
    j["mps"] = r.mps;
    j["sc"] = r.sc;
    auto& w = j["witnesses"];
    w["mpc"] = r.witness_mpc ? nlohmann::ordered_json(*r.witness_mpc) : nullptr;
    w["mpl"] = r.witness_mpl ? nlohmann::ordered_json(*r.witness_mpl) : nullptr;
    if (r.witness_mps) {
        w["mps"] = {{"u", r.witness_mps->u}, {"w", r.witness_mps->w}, {"v", r.witness_mps->v}};
    } else {
        w["mps"] = nullptr;
    }
    j["certificates"] = nlohmann::ordered_json::array();
    for (const Decomposition& c : r.certificates) {
        nlohmann::ordered_json cj;
        cj["kind"] = to_string(c.kind);
        cj["word"] = c.word;
        cj["window_start"] = c.window_start;
        cj["window_len"] = c.window_len;
        cj["i"] = c.i;
        cj["j"] = c.j;
        cj["orbit"] = orbit_json(c.orbit);
        j["certificates"].push_back(std::move(cj));
    }
    return j;
}

void write_output(const Dfa& d, const std::string& out_path) {
    if (out_path.empty())
        std::cout << to_text(d);
    else
        save_dfa_file(d, out_path);
}

int cmd_analyze(const std::string& input, const std::string& alphabet, const std::string& format,
                bool witnesses_flag, long long budget) {
    Dfa d = load_input(input, alphabet);
    AnalysisOptions opts;
    opts.node_budget = budget;
    PumpingReport r = analyze(d, opts);
    if (format == "json") {
        nlohmann::ordered_json j = report_json(r);
        if (!witnesses_flag) {
            j.erase("witnesses");
            j.erase("certificates");
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "mpc: " << r.mpc << "\nmpl: " << r.mpl << "\nmps: " << r.mps
                  << "\nsc: " << r.sc << "\n";
        if (witnesses_flag) {
            std::cout << "witness mpc: " << (r.witness_mpc ? "'" + *r.witness_mpc + "'" : "-")
                      << "\n";
            std::cout << "witness mpl: " << (r.witness_mpl ? "'" + *r.witness_mpl + "'" : "-")
                      << "\n";
            if (r.witness_mps)
                std::cout << "witness mps: u='" << r.witness_mps->u << "' w='"
                          << r.witness_mps->w << "' v='" << r.witness_mps->v << "'\n";
            else
                std::cout << "witness mps: -\n";
            for (const Decomposition& c : r.certificates)
                std::cout << "certificate " << to_string(c.kind) << ": word='" << c.word
                          << "' window=[" << c.window_start << ","
                          << c.window_start + c.window_len << ") pump=(" << c.i << "," << c.j
                          << ") orbit size " << c.orbit.states.size() << "\n";
        }
    }
    return 0;
}

int cmd_apply(const std::string& op, const std::string& file1, const std::string& file2,
              const std::string& out, int state, const std::string& symbol, bool raw) {
    Dfa d1 = load_dfa_file(file1);
    static const std::map<std::string, Dfa (*)(const Dfa&)> unary = {
        {"star", langops::star},
        {"reversal", langops::reversal},
        {"complement", langops::complement},
        {"prefix_closure", langops::prefix_closure},
        {"suffix_closure", langops::suffix_closure},
        {"downward_closure", langops::downward_closure},
    };
    static const std::map<std::string, Dfa (*)(const Dfa&, const Dfa&)> binary = {
        {"union", langops::unite},
        {"intersection", langops::intersect},
        {"difference", langops::difference},
        {"symmetric_difference", langops::symmetric_difference},
        {"concatenation", langops::concatenate},
    };
    if (auto it = unary.find(op); it != unary.end()) {
        if (!file2.empty()) throw std::invalid_argument(op + " takes one automaton");
        write_output(it->second(d1), out);
        return 0;
    }
    if (auto it = binary.find(op); it != binary.end()) {
        if (file2.empty()) throw std::invalid_argument(op + " needs two automata");
        write_output(it->second(d1, load_dfa_file(file2)), out);
        return 0;
    }
    if (op == "loopify") {
        if (symbol.size() != 1) throw std::invalid_argument("loopify needs --symbol (one letter)");
        langops::LoopifyResult lr = langops::loopify(d1, state, symbol[0]);
        write_output(raw ? lr.raw : lr.minimized, out);
        return 0;
    }
    throw std::invalid_argument("unknown operation: " + op);
}

int cmd_construct(const std::string& family, const std::map<std::string, int>& params,
                  const std::string& out) {
    witnesses::WitnessSpec spec{witnesses::family_from_string(family), params};
    std::vector<Dfa> ds = witnesses::build(spec);
    if (ds.size() == 1) {
        write_output(ds[0], out);
        return 0;
    }
    if (out.empty()) {
        std::cout << to_text(ds[0]) << "\n" << to_text(ds[1]);
        return 0;
    }
    auto dot = out.rfind('.');
    std::string stem = dot == std::string::npos ? out : out.substr(0, dot);
    std::string ext = dot == std::string::npos ? "" : out.substr(dot);
    save_dfa_file(ds[0], stem + ".1" + ext);
    save_dfa_file(ds[1], stem + ".2" + ext);
    return 0;
}

int cmd_verify(const std::string& which, const suites::SuiteParams& params,
               const std::string& report_path, bool json_out) {
    std::vector<suites::SuiteReport> reports;
    if (which == "all") {
        reports = suites::run_all(params);
    } else {
        reports.push_back(suites::run_suite(which, params));
    }
    bool ok = true;
    for (const auto& rep : reports) {
        ok = ok && rep.all_pass();
        std::cout << (rep.all_pass() ? "PASS" : "FAIL") << "  " << rep.name << " ("
                  << rep.passed() << "/" << rep.results.size() << ")\n";
        for (const auto& r : rep.results)
            if (!r.pass)
                std::cout << "  FAIL " << r.operation << " " << r.inputs << ": observed "
                          << r.observed << ", expected " << r.expected << "\n";
    }
    if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write report: " + report_path);
        f << (json_out ? suites::to_json(reports, params) : suites::to_markdown(reports, params));
    }
    return ok ? 0 : 1;
}

int cmd_search(int states, int alphabet, const std::string& op, const std::string& constant,
               int samples, std::uint64_t seed) {
    PumpKind kind;
    if (constant == "mpc") kind = PumpKind::Mpc;
    else if (constant == "mpl") kind = PumpKind::Mpl;
    else if (constant == "mps") kind = PumpKind::Mps;
    else throw std::invalid_argument("--constant must be mpc, mpl or mps");

    static const std::map<std::string, Dfa (*)(const Dfa&)> unary = {
        {"star", langops::star},
        {"reversal", langops::reversal},
        {"complement", langops::complement},
        {"prefix_closure", langops::prefix_closure},
        {"suffix_closure", langops::suffix_closure},
        {"downward_closure", langops::downward_closure},
    };
    static const std::map<std::string, Dfa (*)(const Dfa&, const Dfa&)> binary = {
        {"union", langops::unite},
        {"intersection", langops::intersect},
        {"difference", langops::difference},
        {"symmetric_difference", langops::symmetric_difference},
        {"concatenation", langops::concatenate},
    };
    bool is_unary = unary.count(op) > 0;
    if (!is_unary && binary.count(op) == 0) throw std::invalid_argument("unknown operation: " + op);

    auto value = [&](const Dfa& d) {
        PumpingReport r = analyze(d);
        return kind == PumpKind::Mpc ? r.mpc : kind == PumpKind::Mpl ? r.mpl : r.mps;
    };

    SplitMix64 rng(seed);
    RandomDfaParams rp;
    rp.min_states = rp.max_states = states;
    rp.min_alphabet = rp.max_alphabet = alphabet;
    // observed[input constants][output constant] = frequency
    std::map<std::vector<int>, std::map<int, int>> observed;
    for (int i = 0; i < samples; ++i) {
        Dfa d1 = random_dfa(rng, rp);
        if (is_unary) {
            observed[{value(d1)}][value(unary.at(op)(d1))]++;
        } else {
            Dfa d2 = random_dfa(rng, rp);
            observed[{value(d1), value(d2)}][value(binary.at(op)(d1, d2))]++;
        }
    }
    std::cout << "# observed g-set frequencies: op=" << op << " constant=" << constant
              << " states=" << states << " alphabet=" << alphabet << " samples=" << samples
              << " seed=" << seed << "\n";
    std::cout << (is_unary ? "| n | k | count |\n|---|---|---|\n"
                           : "| m | n | k | count |\n|---|---|---|---|\n");
    for (const auto& [ins, ks] : observed)
        for (const auto& [k, count] : ks) {
            std::cout << "|";
            for (int v : ins) std::cout << " " << v << " |";
            std::cout << " " << k << " | " << count << " |\n";
        }
    return 0;
}

int cmd_oracle(const std::string& file, int bound) {
    Dfa d = load_dfa_file(file);
    CrossValidation cv = cross_validate(d, bound);
    std::cout << "exact:  mpc=" << cv.exact.mpc << " mpl=" << cv.exact.mpl
              << " mps=" << cv.exact.mps << " sc=" << cv.exact.sc << "\n";
    std::cout << "oracle: mpc>=" << cv.o_mpc.value << " mpl>=" << cv.o_mpl.value
              << " mps>=" << cv.o_mps.value << " (length bound " << bound << ")\n";
    if (cv.ok()) {
        std::cout << "agreement: no hard failures\n";
        return 0;
    }
    for (const std::string& h : cv.hard_failures) std::cout << "HARD FAILURE: " << h << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal pumping constants (mpc, mpl, mps, sc) for regular languages"};
    app.require_subcommand(1);

    std::string input, alphabet, format = "text", out, file2, symbol, report_path;
    bool witnesses_flag = false, raw = false, json_out = false;
    long long budget = AnalysisOptions().node_budget;
    int state = 0, bound = 12;

    auto* a = app.add_subcommand("analyze", "compute the four constants of a DFA file or regex");
    a->add_option("input", input, "DFA file (text or .json) or a regular expression")->required();
    a->add_option("--alphabet", alphabet, "alphabet for regex input (default: its letters)");
    a->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    a->add_flag("--witnesses", witnesses_flag, "include witnesses and certificates");
    a->add_option("--budget", budget, "node budget for the bad-continuation search");

    std::string op, family;
    auto* ap = app.add_subcommand("apply", "apply a language operation to DFA file(s)");
    ap->add_option("op", op,
                   "star|reversal|complement|prefix_closure|suffix_closure|downward_closure|"
                   "union|intersection|difference|symmetric_difference|concatenation|loopify")
        ->required();
    ap->add_option("file", input, "first automaton")->required();
    ap->add_option("file2", file2, "second automaton (binary operations)");
    ap->add_option("-o,--out", out, "output file (stdout if omitted)");
    ap->add_option("--state", state, "loopify: state whose transition is redirected");
    ap->add_option("--symbol", symbol, "loopify: letter whose transition is redirected");
    ap->add_flag("--raw", raw, "loopify: emit the unminimized modified machine");

    std::map<std::string, int> params;
    auto* c = app.add_subcommand("construct", "build a witness family automaton");
    c->add_option("family", family,
                  "b_plus|b_star|thm_binary|footnote|thm_quinary|star_witness|"
                  "intersection_witness")
        ->required();
    for (const char* key : {"p1", "p2", "p3", "p4", "n", "k", "m"})
        c->add_option("--" + std::string(key), params[key]);
    c->add_option("-o,--out", out, "output file (pairs get .1/.2 suffixes)");

    std::string which;
    suites::SuiteParams sp;
    int max_param = 0;
    auto* v = app.add_subcommand("verify", "run a theorem-reproduction suite");
    v->add_option("suite", which, "binary|quinary|star|intersection|chain|table1|loopify|lemma4|anchors|oracle|all")
        ->required();
    v->add_option("--max-param", max_param, "cap the family parameters");
    v->add_option("--samples", sp.samples, "random samples per property");
    v->add_option("--seed", sp.seed, "PRNG seed");
    v->add_option("--report", report_path, "write a Markdown (or JSON) report here");
    v->add_flag("--json", json_out, "write the report as JSON");

    int states = 4, alpha_size = 2, samples = 200;
    std::uint64_t seed = kDefaultSeed;
    std::string constant = "mps";
    auto* s = app.add_subcommand("search", "chart observed output constants of an operation");
    s->add_option("--states", states, "state count of sampled DFAs")->required();
    s->add_option("--alphabet", alpha_size, "alphabet size of sampled DFAs")->required();
    s->add_option("--op", op, "operation (see apply)")->required();
    s->add_option("--constant", constant, "mpc|mpl|mps")->required();
    s->add_option("--samples", samples, "number of samples");
    s->add_option("--seed", seed, "PRNG seed");

    auto* o = app.add_subcommand("oracle", "cross-validate exact values against the brute oracle");
    o->add_option("file", input, "DFA file")->required();
    o->add_option("--bound", bound, "word length bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (a->parsed()) return cmd_analyze(input, alphabet, format, witnesses_flag, budget);
        if (ap->parsed()) return cmd_apply(op, input, file2, out, state, symbol, raw);
        if (c->parsed()) {
            // Only forward parameters the user actually set.
            std::map<std::string, int> given;
            for (const auto& [key, val] : params)
                if (c->count("--" + key) > 0) given[key] = val;
            return cmd_construct(family, given, out);
        }
        if (v->parsed()) {
            if (max_param > 0) {
                sp.binary_max_p = max_param;
                sp.quinary_max_p = max_param;
                sp.star_max_n = max_param;
                sp.intersection_max_mn = max_param;
            }
            if (v->count("--samples") > 0) {
                sp.chain_samples = sp.samples;
                sp.oracle_samples = sp.samples;
            }
            return cmd_verify(which, sp, report_path, json_out);
        }
        if (s->parsed()) return cmd_search(states, alpha_size, op, constant, samples, seed);
        if (o->parsed()) return cmd_oracle(input, bound);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
