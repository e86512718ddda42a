#pragma once

#include <string>
#include <vector>

#include "pumplib/random_dfa.hpp"

namespace pumplib {
namespace suites {

struct ExperimentResult {
    std::string operation;
    std::string inputs;
    std::string observed;
    std::string expected;
    bool pass = false;
    std::string provenance;  // seed and replayable instance(s); filled on failure
};

struct SuiteReport {
    std::string name;
    std::vector<ExperimentResult> results;

    int passed() const {
        int n = 0;
        for (const auto& r : results) n += r.pass;
        return n;
    }
    int failed() const { return static_cast<int>(results.size()) - passed(); }
    bool all_pass() const { return failed() == 0; }
};

/// Desk-scale defaults; every cap is a parameter, not a constant.
struct SuiteParams {
    int binary_max_p = 8;
    int quinary_max_p = 7;
    int star_max_n = 5;
    int intersection_max_mn = 4;
    int intersection_max_k = 8;
    int samples = 500;        // table1 / loopify / lemma4 / star bound
    int chain_samples = 1000;
    int oracle_samples = 500;
    int oracle_bound = 12;
    std::uint64_t seed = kDefaultSeed;
};

SuiteReport suite_binary(const SuiteParams& p = {});
SuiteReport suite_quinary(const SuiteParams& p = {});
SuiteReport suite_star(const SuiteParams& p = {});
SuiteReport suite_intersection(const SuiteParams& p = {});
SuiteReport suite_chain(const SuiteParams& p = {});
SuiteReport suite_table1(const SuiteParams& p = {});
SuiteReport suite_loopify(const SuiteParams& p = {});
SuiteReport suite_lemma4(const SuiteParams& p = {});
SuiteReport suite_anchors(const SuiteParams& p = {});
SuiteReport suite_oracle(const SuiteParams& p = {});

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& p = {});
std::vector<SuiteReport> run_all(const SuiteParams& p = {});

/// Deterministic (byte-stable) report writers.
std::string to_markdown(const std::vector<SuiteReport>& reports, const SuiteParams& p);
std::string to_json(const std::vector<SuiteReport>& reports, const SuiteParams& p);

}  // namespace suites
}  // namespace pumplib
