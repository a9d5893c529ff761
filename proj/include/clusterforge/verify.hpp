#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "clusterforge/ccmap.hpp"

namespace clusterforge::verify {

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool pass() const;
    nlohmann::json to_json() const;
    /// One line per check, plus a summary line.
    std::string to_text() const;
};

struct VerifyOptions {
    /// Enumeration budget for Grassmannian point counts.
    uint64_t budget = 10'000'000;
    uint32_t prime = kDefaultPrime;
    uint64_t seed = 0;
    /// Kronecker recurrence range (y_0..y_{n_max}).
    int n_max = 10;
    /// Kronecker cluster-character comparison range (U^0..U^{cc_max}).
    int cc_max = 7;
    int64_t root_bound = 6;
    int64_t max_seeds = 100000;
    int max_depth = 64;
    bool parallel = false;
    int threads = 0;
};

/// The Kronecker variables y_n: y_0 = x_2, y_1 = x_1,
/// y_{n+1} = (y_n^2 + 1)/y_{n-1}.
std::vector<LaurentPoly> kronecker_y_by_recurrence(int n_max);
/// The same sequence read off iterated seed mutation.
std::vector<LaurentPoly> kronecker_y_by_mutation(int n_max);

/// Threefold Kronecker agreement: mutation vs recurrence for n <= n_max and
/// the cluster character of U^n vs y_{n+2} for n <= cc_max.
SuiteReport kronecker_threefold(const VerifyOptions& opts = {});
/// X_{W^1} against its closed form, and w_1 y_n == y_{n+1} + y_{n-1}.
SuiteReport kronecker_w1(const VerifyOptions& opts = {});
/// Truncated generating-series identity for the y_n.
SuiteReport kronecker_series(const VerifyOptions& opts = {});
/// Exchange-graph node/variable counts for a1..a4, double-checked against
/// the root count.
SuiteReport exploration_counts(const VerifyOptions& opts = {});
/// Denominator theorem over every exceptional indecomposable of the quiver
/// ("a2", "a3", "a4", "kronecker", or "all").
SuiteReport denominator_suite(const std::string& quiver, const VerifyOptions& opts = {});
/// Exchange identity on the fixture bank (both theorem cases).
SuiteReport exchange_suite(const VerifyOptions& opts = {});
/// Variable and tilting bijections for the given finite-type quiver.
SuiteReport bijection_suite(const std::string& quiver, const VerifyOptions& opts = {});
/// Connectivity of variable-support subgraphs and of the acyclic-seed
/// subgraph.
SuiteReport connectivity_suite(const std::string& quiver, const VerifyOptions& opts = {});
/// Laurent arithmetic properties: ring axioms, serialization round trips,
/// denominator lemmas, weak positivity of computed cluster variables.
SuiteReport laurent_suite(const VerifyOptions& opts = {});
/// Mutation involutivity, Laurent phenomenon during exploration,
/// interpolation stability, Euler-form consistency, formula equivalence.
SuiteReport property_suite(const VerifyOptions& opts = {});

/// CLI dispatch: suite is one of denominator | exchange | bijection |
/// laurent | connectivity | kronecker. The quiver argument applies where the
/// suite is quiver-specific ("all" runs the defaults).
std::vector<SuiteReport> run_suite(const std::string& suite, const std::string& quiver,
                                   const VerifyOptions& opts = {});

} // namespace clusterforge::verify
