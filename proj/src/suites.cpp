#include "pumplib/suites.hpp"

#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>

#include "pumplib/langops.hpp"
#include "pumplib/oracle.hpp"
#include "pumplib/pumping.hpp"
#include "pumplib/regex.hpp"
#include "pumplib/serialize.hpp"
#include "pumplib/witnesses.hpp"

namespace pumplib {
namespace suites {

namespace {

int kind_value(const PumpingReport& r, PumpKind k) {
    switch (k) {
        case PumpKind::Mpc: return r.mpc;
        case PumpKind::Mpl: return r.mpl;
        case PumpKind::Mps: return r.mps;
    }
    return -1;
}

std::string fmt(const char* pattern, const std::vector<long long>& args) {
    std::string out;
    std::size_t a = 0;
    for (const char* c = pattern; *c; ++c) {
        if (*c == '#' && a < args.size())
            out += std::to_string(args[a++]);
        else
            out += *c;
    }
    return out;
}

std::string instance_provenance(std::uint64_t seed, std::initializer_list<const Dfa*> ds) {
    std::string out = "seed=" + std::to_string(seed);
    int i = 0;
    for (const Dfa* d : ds) out += "\ninstance " + std::to_string(++i) + ":\n" + to_text(*d);
    return out;
}

Dfa empty_lang() { return parse_regex("\xe2\x88\x85", Alphabet("a")); }
Dfa lambda_lang() { return parse_regex("\xce\xbb", Alphabet("a")); }
Dfa sigma_star() { return parse_regex("(a+b)^*", Alphabet("ab")); }

}  // namespace

SuiteReport suite_binary(const SuiteParams& p) {
    SuiteReport rep{"binary", {}};
    for (int p1 = 1; p1 <= p.binary_max_p; ++p1)
        for (int p2 = p1; p2 <= p.binary_max_p; ++p2)
            for (int p3 = p2; p3 <= p.binary_max_p; ++p3) {
                Dfa d = witnesses::thm_binary(p1, p2, p3);
                PumpingReport r = analyze(d);
                ExperimentResult e;
                e.operation = "thm_binary";
                e.inputs = fmt("p1=#,p2=#,p3=#", {p1, p2, p3});
                e.observed = fmt("mpc=#,mpl=#,sc=#", {r.mpc, r.mpl, r.sc});
                e.expected = fmt("mpc=#,mpl=#,sc=#", {p1, p2, p3});
                e.pass = (r.mpc == p1 && r.mpl == p2 && r.sc == p3);
                if (!e.pass) e.provenance = instance_provenance(p.seed, {&d});
                rep.results.push_back(std::move(e));
            }
    return rep;
}

SuiteReport suite_quinary(const SuiteParams& p) {
    SuiteReport rep{"quinary", {}};
    for (int p1 = 1; p1 <= p.quinary_max_p; ++p1)
        for (int p2 = p1; p2 <= p.quinary_max_p; ++p2)
            for (int p3 = p2; p3 <= p.quinary_max_p; ++p3)
                for (int p4 = p3; p4 <= p.quinary_max_p; ++p4) {
                    ExperimentResult e;
                    e.operation = "thm_quinary";
                    e.inputs = fmt("p1=#,p2=#,p3=#,p4=#", {p1, p2, p3, p4});
                    e.expected = fmt("(#,#,#,#)", {p1, p2, p3, p4});
                    try {
                        Dfa d = witnesses::thm_quinary(p1, p2, p3, p4);
                        PumpingReport r = analyze(d);
                        e.observed = fmt("(#,#,#,#)", {r.mpc, r.mpl, r.mps, r.sc});
                        e.pass = (r.mpc == p1 && r.mpl == p2 && r.mps == p3 && r.sc == p4);
                        if (!e.pass) e.provenance = instance_provenance(p.seed, {&d});
                    } catch (const witnesses::ValidationError& err) {
                        e.observed = err.what();
                        e.pass = false;
                    }
                    rep.results.push_back(std::move(e));
                }
    return rep;
}

SuiteReport suite_star(const SuiteParams& p) {
    SuiteReport rep{"star", {}};
    for (int n = 1; n <= p.star_max_n; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k) {
            Dfa d = witnesses::star_witness(n, k);
            Dfa st = langops::star(d);
            int mn = analyze(d).mps;
            int mk = analyze(st).mps;
            ExperimentResult e;
            e.operation = "star_witness";
            e.inputs = fmt("n=#,k=#", {n, k});
            e.observed = fmt("mps(L)=#,mps(L*)=#", {mn, mk});
            e.expected = fmt("mps(L)=#,mps(L*)=#", {n, k});
            e.pass = (mn == n && mk == k);
            if (!e.pass) e.provenance = instance_provenance(p.seed, {&d, &st});
            rep.results.push_back(std::move(e));
        }
    {
        Dfa st = langops::star(empty_lang());
        int got = analyze(st).mps;
        rep.results.push_back({"star_witness", "L=empty", fmt("mps(L*)=#", {got}), "mps(L*)=1",
                               got == 1, ""});
    }
    // Universal upper bound mps(L*) <= 2 mps(L) - 1 on seeded random DFAs.
    {
        SplitMix64 rng(p.seed);
        RandomDfaParams rp;
        rp.max_states = 6;
        rp.max_alphabet = 3;
        int checked = 0, violations = 0;
        std::string prov;
        long attempts = 0;
        while (checked < p.samples && attempts < 200LL * p.samples) {
            ++attempts;
            Dfa d = random_dfa(rng, rp);
            int n = analyze(d).mps;
            if (n < 1) continue;
            Dfa st = langops::star(d);
            int k = analyze(st).mps;
            ++checked;
            if (k > std::max(1, 2 * n - 1)) {
                ++violations;
                if (prov.empty()) prov = instance_provenance(p.seed, {&d, &st});
            }
        }
        rep.results.push_back({"star_bound", fmt("samples=#", {checked}),
                               fmt("violations=#", {violations}),
                               "mps(L*) <= max(1, 2 mps(L) - 1), zero violations",
                               checked >= p.samples && violations == 0, prov});
    }
    return rep;
}

SuiteReport suite_intersection(const SuiteParams& p) {
    SuiteReport rep{"intersection", {}};
    for (int m = 1; m <= p.intersection_max_mn; ++m)
        for (int n = 1; n <= p.intersection_max_mn; ++n)
            for (int k = 0; k <= p.intersection_max_k; ++k) {
                if (k == 0 && m == 1 && n == 1) continue;
                if (k >= 2 && m == 1 && n == 1) continue;
                auto [d1, d2] = witnesses::intersection_witness(m, n, k);
                Dfa both = langops::intersect(d1, d2);
                PumpingReport r1 = analyze(d1), r2 = analyze(d2), ri = analyze(both);
                ExperimentResult e;
                e.operation = "intersection_witness";
                e.inputs = fmt("m=#,n=#,k=#", {m, n, k});
                e.observed = fmt("L1:(mpl=#,mps=#) L2:(mpl=#,mps=#) L1&L2:(mpl=#,mps=#)",
                                 {r1.mpl, r1.mps, r2.mpl, r2.mps, ri.mpl, ri.mps});
                e.expected = fmt("L1:(mpl=#,mps=#) L2:(mpl=#,mps=#) L1&L2:(mpl=#,mps=#)",
                                 {m, m, n, n, k, k});
                e.pass = r1.mpl == m && r1.mps == m && r2.mpl == n && r2.mps == n &&
                         ri.mpl == k && ri.mps == k;
                if (!e.pass) e.provenance = instance_provenance(p.seed, {&d1, &d2, &both});
                rep.results.push_back(std::move(e));
            }
    return rep;
}

SuiteReport suite_chain(const SuiteParams& p) {
    SuiteReport rep{"chain", {}};
    SplitMix64 rng(p.seed);
    RandomDfaParams rp;
    rp.max_states = 6;
    rp.max_alphabet = 3;
    int violations = 0;
    std::string prov;
    for (int i = 0; i < p.chain_samples; ++i) {
        Dfa d = random_dfa(rng, rp);
        try {
            PumpingReport r = analyze(d);  // analyze also asserts the chain
            bool ok = r.mpc <= r.mpl && r.mpl <= r.mps && r.mps <= r.sc &&
                      ((r.mpc == 0) == is_empty(d)) && ((r.mps == 0) == is_empty(d));
            if (!ok) ++violations;
            if (!ok && prov.empty()) prov = instance_provenance(p.seed, {&d});
        } catch (const std::exception&) {
            ++violations;
            if (prov.empty()) prov = instance_provenance(p.seed, {&d});
        }
    }
    rep.results.push_back({"chain mpc<=mpl<=mps<=sc", fmt("samples=#", {p.chain_samples}),
                           fmt("violations=#", {violations}), "zero violations", violations == 0,
                           prov});
    return rep;
}

namespace {

enum class Op {
    Star,
    Reversal,
    Complement,
    PrefixClosure,
    SuffixClosure,
    Union,
    Subtraction,
    Concatenation,
    Intersection,
    SymmetricDifference,
};

const Op kUnaryOps[] = {Op::Star, Op::Reversal, Op::Complement, Op::PrefixClosure,
                        Op::SuffixClosure};
const Op kBinaryOps[] = {Op::Union, Op::Subtraction, Op::Concatenation, Op::Intersection,
                         Op::SymmetricDifference};

const char* op_name(Op op) {
    switch (op) {
        case Op::Star: return "kleene_star";
        case Op::Reversal: return "reversal";
        case Op::Complement: return "complement";
        case Op::PrefixClosure: return "prefix_closure";
        case Op::SuffixClosure: return "suffix_closure";
        case Op::Union: return "union";
        case Op::Subtraction: return "set_subtraction";
        case Op::Concatenation: return "concatenation";
        case Op::Intersection: return "intersection";
        case Op::SymmetricDifference: return "symmetric_difference";
    }
    return "?";
}

Dfa apply_unary(Op op, const Dfa& d) {
    switch (op) {
        case Op::Star: return langops::star(d);
        case Op::Reversal: return langops::reversal(d);
        case Op::Complement: return langops::complement(d);
        case Op::PrefixClosure: return langops::prefix_closure(d);
        case Op::SuffixClosure: return langops::suffix_closure(d);
        default: throw std::logic_error("not unary");
    }
}

Dfa apply_binary(Op op, const Dfa& d1, const Dfa& d2) {
    switch (op) {
        case Op::Union: return langops::unite(d1, d2);
        case Op::Subtraction: return langops::difference(d1, d2);
        case Op::Concatenation: return langops::concatenate(d1, d2);
        case Op::Intersection: return langops::intersect(d1, d2);
        case Op::SymmetricDifference: return langops::symmetric_difference(d1, d2);
        default: throw std::logic_error("not binary");
    }
}

// Table 1 cell membership: is k an admissible output constant given the
// operand constants?
bool cell_contains(Op op, PumpKind kind, int m, int n, int k) {
    switch (op) {
        case Op::Star:
            if (kind == PumpKind::Mpc) return k == 1;
            if (kind == PumpKind::Mpl) return n == 0 ? k == 1 : (1 <= k && k <= n);
            return n == 0 ? k == 1 : (1 <= k && k <= 2 * n - 1);
        case Op::Reversal:
            if (kind == PumpKind::Mpl) return n == 0 ? k == 0 : k >= 1;
            return k == n;
        case Op::Complement:
            if (n == 0) return k == 1;
            if (n == 1) return k != 1;
            return k >= 1;
        case Op::PrefixClosure:
            if (n == 0) return k == 0;
            return kind == PumpKind::Mpc ? k >= 1 : (1 <= k && k <= n);
        case Op::SuffixClosure:
            if (n == 0) return k == 0;
            if (kind == PumpKind::Mpc) return k >= 1;
            if (kind == PumpKind::Mpl) return n == 1 ? k == 1 : k >= 1;
            return 1 <= k && k <= n;
        case Op::Union:
            if (m == 0 || n == 0) return k == std::max(m, n);
            return 1 <= k && k <= std::max(m, n);
        case Op::Subtraction:
            if (m == 0) return k == 0;
            if (n == 0) return k == m;
            if (n == 1) return k != 1;
            return k >= 0;
        case Op::Concatenation:
            if (m == 0 || n == 0) return k == 0;
            return 1 <= k && k <= m + n - 1;
        case Op::Intersection:
            if (m == 0 || n == 0) return k == 0;
            if (m == 1 && n == 1) return kind == PumpKind::Mpc ? k != 2 : k == 1;
            return k >= 0;
        case Op::SymmetricDifference:
            if (m == 0 || n == 0) return k == std::max(m, n);
            if (m == 1 && n == 1) return k != 1;
            if (m == n) return k >= 0;
            return k >= 1;
    }
    return false;
}

std::string cell_description(Op op, PumpKind kind) {
    switch (op) {
        case Op::Star:
            if (kind == PumpKind::Mpc) return "{1}";
            if (kind == PumpKind::Mpl) return "{1} if n=0, else {1..n}";
            return "{1} if n=0, else {1..2n-1}";
        case Op::Reversal:
            if (kind == PumpKind::Mpl) return "{0} if n=0, else N";
            return "{n}";
        case Op::Complement: return "{1} if n=0; N0\\{1} if n=1; else N";
        case Op::PrefixClosure:
            return kind == PumpKind::Mpc ? "{0} if n=0, else N" : "{0} if n=0, else {1..n}";
        case Op::SuffixClosure:
            if (kind == PumpKind::Mpc) return "{0} if n=0, else N";
            if (kind == PumpKind::Mpl) return "{0} if n=0; {1} if n=1; else N";
            return "{0} if n=0, else {1..n}";
        case Op::Union: return "{max(m,n)} if m=0 or n=0, else {1..max(m,n)}";
        case Op::Subtraction: return "{0} if m=0; {m} if n=0; N0\\{1} if n=1; else N0";
        case Op::Concatenation: return "{0} if m=0 or n=0, else {1..m+n-1}";
        case Op::Intersection:
            return kind == PumpKind::Mpc ? "{0} if m=0 or n=0; N0\\{2} if m=n=1; else N0"
                                         : "{0} if m=0 or n=0; {1} if m=n=1; else N0";
        case Op::SymmetricDifference:
            return "{max(m,n)} if m=0 or n=0; N0\\{1} if m=n=1; N0 if m=n>1; else N";
    }
    return "?";
}

struct CellStats {
    int checked = 0;
    int violations = 0;
    std::string provenance;
};

}  // namespace

SuiteReport suite_table1(const SuiteParams& p) {
    SuiteReport rep{"table1", {}};
    const PumpKind kinds[] = {PumpKind::Mpc, PumpKind::Mpl, PumpKind::Mps};

    std::vector<std::pair<Dfa, Dfa>> pairs;
    // Planned edge operands first: they exercise the m=0 / n=0 / m=n=1 cells.
    Dfa empt = empty_lang(), lam = lambda_lang(), all = sigma_star();
    for (const Dfa* a : {&empt, &lam, &all})
        for (const Dfa* b : {&empt, &lam, &all}) pairs.push_back({*a, *b});
    SplitMix64 rng(p.seed);
    RandomDfaParams rp;
    rp.max_states = 6;
    rp.max_alphabet = 3;
    while (static_cast<int>(pairs.size()) < p.samples) {
        Dfa d1 = random_dfa(rng, rp);
        Dfa d2 = random_dfa(rng, rp);
        pairs.push_back({std::move(d1), std::move(d2)});
    }

    std::map<std::pair<Op, PumpKind>, CellStats> stats;
    for (const auto& [d1, d2] : pairs) {
        PumpingReport r1 = analyze(d1), r2 = analyze(d2);
        for (Op op : kUnaryOps) {
            Dfa out = apply_unary(op, d1);
            PumpingReport ro = analyze(out);
            for (PumpKind kind : kinds) {
                CellStats& cs = stats[{op, kind}];
                ++cs.checked;
                int n = kind_value(r1, kind), k = kind_value(ro, kind);
                if (!cell_contains(op, kind, 0, n, k)) {
                    ++cs.violations;
                    if (cs.provenance.empty())
                        cs.provenance = fmt("n=#,k=#\n", {n, k}) +
                                        instance_provenance(p.seed, {&d1});
                }
            }
        }
        for (Op op : kBinaryOps) {
            Dfa out = apply_binary(op, d1, d2);
            PumpingReport ro = analyze(out);
            for (PumpKind kind : kinds) {
                CellStats& cs = stats[{op, kind}];
                ++cs.checked;
                int m = kind_value(r1, kind), n = kind_value(r2, kind),
                    k = kind_value(ro, kind);
                if (!cell_contains(op, kind, m, n, k)) {
                    ++cs.violations;
                    if (cs.provenance.empty())
                        cs.provenance = fmt("m=#,n=#,k=#\n", {m, n, k}) +
                                        instance_provenance(p.seed, {&d1, &d2});
                }
            }
        }
    }

    for (Op op : kUnaryOps)
        for (PumpKind kind : kinds) {
            const CellStats& cs = stats[{op, kind}];
            rep.results.push_back({std::string(op_name(op)) + "/" + to_string(kind),
                                   fmt("samples=#", {cs.checked}),
                                   fmt("violations=#", {cs.violations}),
                                   cell_description(op, kind), cs.violations == 0,
                                   cs.provenance});
        }
    for (Op op : kBinaryOps)
        for (PumpKind kind : kinds) {
            const CellStats& cs = stats[{op, kind}];
            rep.results.push_back({std::string(op_name(op)) + "/" + to_string(kind),
                                   fmt("samples=#", {cs.checked}),
                                   fmt("violations=#", {cs.violations}),
                                   cell_description(op, kind), cs.violations == 0,
                                   cs.provenance});
        }
    return rep;
}

SuiteReport suite_loopify(const SuiteParams& p) {
    SuiteReport rep{"loopify", {}};
    SplitMix64 rng(p.seed);
    RandomDfaParams rp;
    rp.max_states = 6;
    rp.max_alphabet = 3;
    int checked = 0;
    int viol[3] = {0, 0, 0};
    std::string prov[3];
    while (checked < p.samples) {
        Dfa m = minimize(random_dfa(rng, rp));
        State q = static_cast<State>(rng.below(m.num_states));
        Symbol a = m.alphabet.symbol(static_cast<int>(rng.below(m.alphabet.size())));
        langops::LoopifyResult lr = langops::loopify(m, q, a);
        PumpingReport before = analyze(m), after = analyze(lr.minimized);
        ++checked;
        int delta[3] = {after.mpc - before.mpc, after.mpl - before.mpl, after.mps - before.mps};
        for (int k = 0; k < 3; ++k)
            if (delta[k] > 0) {
                ++viol[k];
                if (prov[k].empty())
                    prov[k] = fmt("q=#,symbol index=#\n", {q, m.alphabet.index(a)}) +
                              instance_provenance(p.seed, {&m, &lr.raw});
            }
    }
    const char* kind_names[3] = {"mpc", "mpl", "mps"};
    for (int k = 0; k < 3; ++k)
        rep.results.push_back({std::string("loopify ") + kind_names[k] +
                                   "(L(B)) <= " + kind_names[k] + "(L(A))",
                               fmt("samples=#", {checked}), fmt("violations=#", {viol[k]}),
                               "zero violations", viol[k] == 0, prov[k]});
    return rep;
}

SuiteReport suite_lemma4(const SuiteParams& p) {
    SuiteReport rep{"lemma4", {}};
    std::vector<Dfa> population;
    for (int k = 0; k <= 8; ++k) population.push_back(witnesses::b_star(k));
    for (int p3 = 1; p3 <= 8; ++p3) population.push_back(witnesses::thm_binary(1, 1, p3));
    population.push_back(sigma_star());
    population.push_back(lambda_lang());
    SplitMix64 rng(p.seed);
    RandomDfaParams rp;
    rp.max_states = 6;
    rp.max_alphabet = 3;
    for (int i = 0; i < p.samples; ++i) population.push_back(random_dfa(rng, rp));

    int mps1 = 0, mps1_bad = 0;
    int mpl1 = 0, mpl1_bad = 0;
    int mpc1 = 0, mpc1_bad = 0;
    std::string prov_mps, prov_mpl, prov_mpc;
    for (const Dfa& d : population) {
        PumpingReport r = analyze(d);
        Dfa m = minimize(d);
        if (r.mps == 1) {
            ++mps1;
            bool ok = equivalent(langops::prefix_closure(m), m) &&
                      equivalent(langops::suffix_closure(m), m) &&
                      equivalent(langops::downward_closure(m), m);
            if (!ok) {
                ++mps1_bad;
                if (prov_mps.empty()) prov_mps = instance_provenance(p.seed, {&d});
            }
        }
        if (r.mpl == 1) {
            ++mpl1;
            if (!equivalent(langops::suffix_closure(m), m)) {
                ++mpl1_bad;
                if (prov_mpl.empty()) prov_mpl = instance_provenance(p.seed, {&d});
            }
        }
        if (r.mpc == 1) {
            ++mpc1;
            if (!d.accepts(Word())) {
                ++mpc1_bad;
                if (prov_mpc.empty()) prov_mpc = instance_provenance(p.seed, {&d});
            }
        }
    }
    rep.results.push_back({"mps=1 implies prefix/suffix/downward closed",
                           fmt("applicable=#", {mps1}), fmt("violations=#", {mps1_bad}),
                           "zero violations", mps1_bad == 0 && mps1 > 0, prov_mps});
    rep.results.push_back({"mpl=1 implies suffix closed", fmt("applicable=#", {mpl1}),
                           fmt("violations=#", {mpl1_bad}), "zero violations",
                           mpl1_bad == 0 && mpl1 > 0, prov_mpl});
    rep.results.push_back({"mpc=1 implies lambda in L", fmt("applicable=#", {mpc1}),
                           fmt("violations=#", {mpc1_bad}), "zero violations",
                           mpc1_bad == 0 && mpc1 > 0, prov_mpc});
    return rep;
}

SuiteReport suite_anchors(const SuiteParams&) {
    SuiteReport rep{"anchors", {}};
    {
        Dfa d = parse_regex("a^*+a^*bb^*+a^*bb^*aa^*+a^*bb^*aa^*bb^*", Alphabet("ab"));
        PumpingReport r = analyze(d);
        rep.results.push_back({"example language", "a^*+a^*bb^*+a^*bb^*aa^*+a^*bb^*aa^*bb^*",
                               fmt("mpc=#,sc=#", {r.mpc, r.sc}), "mpc=1,sc=5",
                               r.mpc == 1 && r.sc == 5, ""});
    }
    for (int n = 1; n <= 5; ++n) {
        Dfa d = parse_regex(fmt("a^#a^*", {n}), Alphabet("a"));
        PumpingReport r = analyze(d);
        rep.results.push_back({"a^n a^*", fmt("n=#", {n}), fmt("mpc=#", {r.mpc}),
                               fmt("mpc=#", {n + 1}), r.mpc == n + 1, ""});
    }
    for (int p3 = 2; p3 <= 6; ++p3) {
        Dfa d = witnesses::footnote_family(1, 1, p3);
        PumpingReport r = analyze(d);
        int want_sc = witnesses::footnote_expected_sc(1, 1, p3);
        rep.results.push_back({"footnote_family", fmt("p1=1,p2=1,p3=#", {p3}),
                               fmt("mpc=#,mpl=#,sc=#", {r.mpc, r.mpl, r.sc}),
                               fmt("mpc=1,mpl=1,sc=#", {want_sc}),
                               r.mpc == 1 && r.mpl == 1 && r.sc == want_sc, ""});
    }
    return rep;
}

SuiteReport suite_oracle(const SuiteParams& p) {
    SuiteReport rep{"oracle", {}};
    SplitMix64 rng(p.seed);
    RandomDfaParams rp;
    rp.max_states = 5;
    rp.max_alphabet = 2;
    int failures = 0;
    std::string prov;
    for (int i = 0; i < p.oracle_samples; ++i) {
        Dfa d = random_dfa(rng, rp);
        CrossValidation cv = cross_validate(d, p.oracle_bound);
        if (!cv.ok()) {
            ++failures;
            if (prov.empty()) {
                prov = instance_provenance(p.seed, {&d});
                for (const std::string& h : cv.hard_failures) prov += "\n" + h;
            }
        }
    }
    rep.results.push_back({"cross_validate random", fmt("samples=#,bound=#",
                                                        {p.oracle_samples, p.oracle_bound}),
                           fmt("hard failures=#", {failures}), "zero hard failures",
                           failures == 0, prov});

    struct Named {
        const char* name;
        Dfa d;
        int bound;
    };
    std::vector<Named> family_checks;
    family_checks.push_back({"thm_binary(2,3,5)", witnesses::thm_binary(2, 3, 5), 10});
    family_checks.push_back({"thm_binary(1,2,5)", witnesses::thm_binary(1, 2, 5), 10});
    family_checks.push_back({"star_witness(2,3)", witnesses::star_witness(2, 3), 10});
    family_checks.push_back({"thm_quinary(1,2,4,6)", witnesses::thm_quinary(1, 2, 4, 6), 8});
    family_checks.push_back({"thm_quinary(2,3,4,6)", witnesses::thm_quinary(2, 3, 4, 6), 8});
    for (const Named& nc : family_checks) {
        CrossValidation cv = cross_validate(nc.d, nc.bound);
        std::string detail;
        for (const std::string& h : cv.hard_failures) detail += h + "; ";
        rep.results.push_back({std::string("cross_validate ") + nc.name,
                               fmt("bound=#", {nc.bound}),
                               cv.ok() ? "agreement" : detail, "zero hard failures", cv.ok(),
                               cv.ok() ? "" : instance_provenance(p.seed, {&nc.d})});
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "binary", "quinary", "star",    "intersection", "chain",
        "table1", "loopify", "lemma4",  "anchors",      "oracle"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
    if (name == "binary") return suite_binary(p);
    if (name == "quinary") return suite_quinary(p);
    if (name == "star") return suite_star(p);
    if (name == "intersection") return suite_intersection(p);
    if (name == "chain") return suite_chain(p);
    if (name == "table1") return suite_table1(p);
    if (name == "loopify") return suite_loopify(p);
    if (name == "lemma4") return suite_lemma4(p);
    if (name == "anchors") return suite_anchors(p);
    if (name == "oracle") return suite_oracle(p);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const SuiteParams& p) {
    std::vector<SuiteReport> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, p));
    return out;
}

std::string to_markdown(const std::vector<SuiteReport>& reports, const SuiteParams& p) {
    std::ostringstream out;
    out << "# Verification report\n\n";
    out << "seed: " << p.seed << "\n\n";
    out << "| suite | passed | failed |\n|---|---|---|\n";
    for (const auto& rep : reports)
        out << "| " << rep.name << " | " << rep.passed() << " | " << rep.failed() << " |\n";
    out << "\n";

    for (const auto& rep : reports) {
        if (rep.name != "table1") continue;
        out << "## Operational complexity grid\n\n";
        out << "| operation | mpc | mpl | mps |\n|---|---|---|---|\n";
        std::map<std::string, std::map<std::string, const ExperimentResult*>> grid;
        for (const auto& r : rep.results) {
            auto slash = r.operation.find('/');
            grid[r.operation.substr(0, slash)][r.operation.substr(slash + 1)] = &r;
        }
        for (const auto& [op, cells] : grid) {
            out << "| " << op;
            for (const char* kind : {"mpc", "mpl", "mps"}) {
                auto it = cells.find(kind);
                if (it == cells.end())
                    out << " | -";
                else
                    out << " | " << it->second->expected << " — "
                        << (it->second->pass ? "pass" : "FAIL") << " (" << it->second->inputs
                        << ")";
            }
            out << " |\n";
        }
        out << "\n";
    }

    for (const auto& rep : reports) {
        out << "## " << rep.name << " (" << rep.passed() << "/" << rep.results.size()
            << " passed)\n\n";
        out << "| operation | inputs | observed | expected | status |\n|---|---|---|---|---|\n";
        for (const auto& r : rep.results)
            out << "| " << r.operation << " | " << r.inputs << " | " << r.observed << " | "
                << r.expected << " | " << (r.pass ? "pass" : "FAIL") << " |\n";
        out << "\n";
        for (const auto& r : rep.results)
            if (!r.pass && !r.provenance.empty()) {
                out << "Failure replay for `" << r.operation << "` (" << r.inputs << "):\n\n```\n"
                    << r.provenance << "\n```\n\n";
            }
    }
    return out.str();
}

std::string to_json(const std::vector<SuiteReport>& reports, const SuiteParams& p) {
    std::ostringstream out;
    auto esc = [](const std::string& s) {
        std::string e;
        for (char c : s) {
            if (c == '"' || c == '\\') e += std::string("\\") + c;
            else if (c == '\n') e += "\\n";
            else e += c;
        }
        return e;
    };
    out << "{\n  \"seed\": " << p.seed << ",\n  \"suites\": [\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        out << "    {\"name\": \"" << rep.name << "\", \"passed\": " << rep.passed()
            << ", \"failed\": " << rep.failed() << ", \"results\": [\n";
        for (std::size_t j = 0; j < rep.results.size(); ++j) {
            const auto& r = rep.results[j];
            out << "      {\"operation\": \"" << esc(r.operation) << "\", \"inputs\": \""
                << esc(r.inputs) << "\", \"observed\": \"" << esc(r.observed)
                << "\", \"expected\": \"" << esc(r.expected) << "\", \"pass\": "
                << (r.pass ? "true" : "false") << ", \"provenance\": \"" << esc(r.provenance)
                << "\"}" << (j + 1 < rep.results.size() ? "," : "") << "\n";
        }
        out << "    ]}" << (i + 1 < reports.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

}  // namespace suites
}  // namespace pumplib
