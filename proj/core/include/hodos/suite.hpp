#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hodos/complex.hpp"
#include "hodos/expanders.hpp"

namespace hodos {

struct CorpusInstance {
    std::string name;
    Complex complex;
    int ell = 1;
    std::string graph_spec;  // builtin shorthand, empty for non-partite
    LabelledRegularGraph H;  // on C([n], ell); unused when non-partite
};

// Deterministic corpus of small complexes: partite products with random
// weights plus a sprinkling of non-partite complete complexes, each paired
// with an auxiliary graph on its ell-subset types.
std::vector<CorpusInstance> generate_corpus(std::uint64_t seed, int count);

// One instance per *.json complex file (sorted by filename); ell defaults to
// n-1 and the graph to a cycle.
std::vector<CorpusInstance> load_corpus(const std::filesystem::path& dir);

struct SuiteRow {
    std::string instance;
    std::string check;
    std::string status;  // pass | fail | skipped: requires partite
    double slack = 0.0;  // nonnegative margin when passing
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    bool all_ok() const { return failed == 0; }
};

SuiteResult run_suite(const std::vector<CorpusInstance>& corpus);

std::string suite_csv(const SuiteResult& result);
std::string suite_json(const SuiteResult& result);

// report.csv + report.json under out_dir, written atomically.
void write_suite_artifacts(const SuiteResult& result,
                           const std::filesystem::path& out_dir);

}  // namespace hodos
