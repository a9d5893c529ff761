#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "clusterforge/bigint.hpp"
#include "clusterforge/errors.hpp"
#include "clusterforge/repcore.hpp"

namespace clusterforge {

/// Gaussian binomial [m choose e]_q, the number of e-dimensional subspaces
/// of F_q^m.
Int gaussian_binomial(int m, int e, uint64_t q);

/// Streams the e-dimensional subspaces of F_p^m exactly once, as reduced
/// row echelon bases (e x m matrices).
class SubspaceEnumerator {
public:
    SubspaceEnumerator(uint32_t p, int m, int e);

    /// Writes the next basis into `out` (resized to e x m); returns false
    /// when exhausted.
    bool next(fp::Matrix& out);
    void reset();

private:
    bool advance_free_values();
    bool advance_pivots();
    void rebuild(fp::Matrix& out) const;

    uint32_t p_;
    int m_, e_;
    bool fresh_ = true;
    bool done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_positions_; // (row, col)
    std::vector<uint32_t> free_values_;
};

/// Number of subrepresentations of M with dimension vector e, i.e. tuples of
/// subspaces (N_i), dim N_i = e_i, with M_a(N_{s(a)}) <= N_{t(a)} for every
/// arrow. Enumerates subspaces on a cheapest vertex cover of the active
/// arrows and counts the remaining vertices in closed form. Throws
/// BudgetExceededError when the enumeration would exceed `budget` subspace
/// tuples.
Int count_subreps(const QuiverRep& m, const DimVec& e, uint64_t budget = 10'000'000);

/// Counts several strata at once, sharing one enumeration sweep between
/// strata with the same enumerated-vertex data; groups run in parallel when
/// threads != 1.
std::vector<Int> count_subreps_multi(const QuiverRep& m, const std::vector<DimVec>& strata,
                                     uint64_t budget = 10'000'000, int threads = 1);

/// Point-count polynomial in q, exact integer coefficients.
struct CountingPolynomial {
    std::vector<Int> coefficients; // coefficients[k] multiplies q^k

    int degree() const;
    Int eval(const Int& q) const;
    Int at_one() const;
};

struct ChiOptions {
    uint64_t budget = 10'000'000;
    /// Skip this many primes before sampling (for disjoint-sample checks).
    int skip_primes = 0;
    /// Extra agreeing sample points required beyond the interpolated degree.
    int verify_points = 1;
    bool parallel = false;
    int threads = 0;
};

/// A representation per prime; must produce the same isomorphism type over
/// every sampled prime (explicit integral matrices, or generic sampling with
/// the rigidity invariants re-verified).
using ModuleFamily = std::function<QuiverRep(uint32_t prime)>;

struct ChiCertificate {
    CountingPolynomial polynomial;
    std::vector<uint32_t> primes;
    std::vector<Int> counts;
    int64_t chi = 0;
};

/// Safe interpolation degree bound sum_i e_i (m_i - e_i).
int64_t default_degree_bound(const DimVec& dims, const DimVec& e);

/// Euler characteristic of the subrepresentation Grassmannian Gr_e, computed
/// by counting points over increasing primes and interpolating the counting
/// polynomial; returns its value at q = 1. Sampling stops once the
/// interpolant is stable with `verify_points` confirming primes, and never
/// uses more than degree_bound + 1 primes. Throws
/// NonIntegralInterpolationError if the samples are not consistent with an
/// integer polynomial of degree <= degree_bound.
int64_t euler_char(const ModuleFamily& family, const DimVec& e, int64_t degree_bound,
                   const ChiOptions& opts = {});
ChiCertificate euler_char_certified(const ModuleFamily& family, const DimVec& e,
                                    int64_t degree_bound, const ChiOptions& opts = {});

/// Euler characteristics of every stratum e <= dims of a module family,
/// sharing sweeps between strata and primes. Strata are listed in
/// lexicographic order with their certificates.
struct ChiTable {
    std::vector<DimVec> strata;
    std::vector<ChiCertificate> certificates;
};
ChiTable chi_table_for_family(const ModuleFamily& family, const DimVec& dims,
                              const ChiOptions& opts = {});

/// Primes 2, 3, 5, ... on demand.
uint32_t nth_prime(int index);

} // namespace clusterforge
