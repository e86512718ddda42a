// Acceptance suite: runs every verification suite at its full documented
// scale and prints one line per criterion. Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pumplib/suites.hpp"

using namespace pumplib;
using suites::SuiteReport;

namespace {

struct Criterion {
    int id;
    std::string description;
    int passed = 0, total = 0;
    bool ok() const { return total > 0 && passed == total; }
};

void tally(Criterion& c, const SuiteReport& rep, const std::string& op_prefix = "") {
    for (const auto& r : rep.results) {
        if (!op_prefix.empty() && r.operation.rfind(op_prefix, 0) != 0) continue;
        ++c.total;
        c.passed += r.pass;
    }
}

}  // namespace

int main() {
    suites::SuiteParams params;  // spec-scale defaults

    std::vector<Criterion> cs;
    auto now = [] { return std::chrono::steady_clock::now(); };
    auto t0 = now();

    {
        Criterion c{1, "binary simultaneous regulation: (mpc,mpl,sc)=(p1,p2,p3), p<=8"};
        tally(c, suites::suite_binary(params));
        cs.push_back(c);
    }
    {
        Criterion c{2, "quinary four-constant regulation: (mpc,mpl,mps,sc)=(p1..p4), p<=7"};
        tally(c, suites::suite_quinary(params));
        cs.push_back(c);
    }
    {
        SuiteReport star = suites::suite_star(params);
        Criterion c3{3, "star range: mps(L)=n, mps(L*)=k for n<=5, k<=2n-1, plus empty"};
        tally(c3, star, "star_witness");
        cs.push_back(c3);
        Criterion c4{4, "star upper bound: mps(L*) <= max(1, 2n-1) on 500 random DFAs"};
        tally(c4, star, "star_bound");
        cs.push_back(c4);
    }
    {
        Criterion c{5, "intersection range: components (m,n), intersection k, under mpl and mps"};
        tally(c, suites::suite_intersection(params));
        cs.push_back(c);
    }
    {
        Criterion c{6, "chain mpc<=mpl<=mps<=sc on 1000 random DFAs"};
        tally(c, suites::suite_chain(params));
        cs.push_back(c);
    }
    {
        Criterion c{7, "Table 1 rows: exact reversal/star cells and set membership elsewhere"};
        tally(c, suites::suite_table1(params));
        cs.push_back(c);
    }
    {
        Criterion c{8, "loop modification: K(loopify(d)) <= K(d) on 500 samples"};
        tally(c, suites::suite_loopify(params));
        cs.push_back(c);
    }
    {
        Criterion c{9, "mps=1/mpl=1/mpc=1 closure consequences, zero violations"};
        tally(c, suites::suite_lemma4(params));
        cs.push_back(c);
    }
    {
        Criterion c{10, "section-1 anchors: example language, a^n a^*, footnote family"};
        tally(c, suites::suite_anchors(params));
        cs.push_back(c);
    }
    {
        Criterion c{11, "oracle equivalence: zero hard failures on 500 DFAs at bound 12"};
        tally(c, suites::suite_oracle(params));
        cs.push_back(c);
    }

    bool all = true;
    for (const Criterion& c : cs) {
        all = all && c.ok();
        std::printf("%s  criterion %2d: %s (%d/%d)\n", c.ok() ? "PASS" : "FAIL", c.id,
                    c.description.c_str(), c.passed, c.total);
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(now() - t0).count();
    std::printf("%s  acceptance suite finished in %llds\n", all ? "PASS" : "FAIL",
                static_cast<long long>(secs));
    return all ? 0 : 1;
}
