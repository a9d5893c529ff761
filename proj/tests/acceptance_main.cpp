// Acceptance suite: one criterion per --criterion index, every threshold
// pinned in code. Runs everything when no index is given. Exit code 0 only
// if every executed criterion passes.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "clusterforge/verify.hpp"

using namespace clusterforge;
using verify::SuiteReport;
using verify::VerifyOptions;

namespace {

VerifyOptions acceptance_options() {
    VerifyOptions opts;
    // Enumeration budget sized for the U^5/V^5 point counts; larger
    // Kronecker modules are refused loudly instead of hanging.
    opts.budget = 80'000'000;
    opts.n_max = 10;
    opts.cc_max = 7;
    opts.root_bound = 6;
    if (const char* env = std::getenv("CLUSTER_FORGE_SEED"))
        opts.seed = std::strtoull(env, nullptr, 10);
    return opts;
}

struct CriterionOutcome {
    bool pass = false;
    std::vector<SuiteReport> reports;
};

CriterionOutcome run_criterion(int index) {
    VerifyOptions opts = acceptance_options();
    CriterionOutcome out;
    switch (index) {
        case 1:
            out.reports.push_back(verify::kronecker_threefold(opts));
            break;
        case 2:
            out.reports.push_back(verify::kronecker_w1(opts));
            break;
        case 3:
            out.reports.push_back(verify::kronecker_series(opts));
            break;
        case 4:
            out.reports.push_back(verify::exploration_counts(opts));
            break;
        case 5:
            out.reports.push_back(verify::denominator_suite("all", opts));
            break;
        case 6:
            out.reports.push_back(verify::exchange_suite(opts));
            break;
        case 7:
            out.reports.push_back(verify::bijection_suite("a2", opts));
            out.reports.push_back(verify::bijection_suite("a3", opts));
            break;
        case 8:
            out.reports.push_back(verify::connectivity_suite("a3", opts));
            out.reports.push_back(verify::connectivity_suite("a4", opts));
            break;
        case 9:
            out.reports.push_back(verify::property_suite(opts));
            break;
        default:
            throw std::invalid_argument("criterion index must be 1..9");
    }
    out.pass = true;
    for (const auto& r : out.reports) out.pass = out.pass && r.pass();
    return out;
}

const char* criterion_title(int index) {
    switch (index) {
        case 1: return "Kronecker threefold agreement (mutation, recurrence, character map)";
        case 2: return "w1 linearization";
        case 3: return "generating-series identity";
        case 4: return "exploration counts for a1..a4";
        case 5: return "denominator theorem (a2, a3, a4, Kronecker up to 5)";
        case 6: return "exchange identity fixtures";
        case 7: return "tilting/cluster bijection (a2, a3)";
        case 8: return "connectivity corollaries (a3, a4)";
        case 9: return "property suites";
    }
    return "";
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (selected.empty())
        for (int i = 1; i <= 9; ++i) selected.push_back(i);

    bool all_pass = true;
    for (int index : selected) {
        auto start = std::chrono::steady_clock::now();
        CriterionOutcome outcome;
        try {
            outcome = run_criterion(index);
        } catch (const std::exception& ex) {
            std::cout << "[criterion " << index << "] FAIL -- " << criterion_title(index)
                      << ": " << ex.what() << "\n";
            all_pass = false;
            continue;
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "[criterion " << index << "] " << (outcome.pass ? "PASS" : "FAIL")
                  << " -- " << criterion_title(index) << " (" << seconds << " s)\n";
        for (const auto& report : outcome.reports) std::cout << report.to_text();
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
