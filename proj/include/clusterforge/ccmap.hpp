#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "clusterforge/grassmannian.hpp"
#include "clusterforge/laurent.hpp"
#include "clusterforge/mutation.hpp"
#include "clusterforge/repcore.hpp"

namespace clusterforge {

/// A cluster-category object given per prime: a module family plus shifted
/// projective multiplicities. The family must return the same isomorphism
/// type over every prime.
struct ObjectFamily {
    std::string name;
    ContextPtr ctx;
    DimVec module_dims;
    std::vector<int> sp_mult;
    ModuleFamily module_at;

    ClusterObject at(uint32_t p) const;
    ObjectFamily direct_sum(const ObjectFamily& other) const;
};

ObjectFamily zero_object_family(const ContextPtr& ctx);
ObjectFamily sp_object_family(const ContextPtr& ctx, int i);
ObjectFamily simple_object_family(const ContextPtr& ctx, int i);
ObjectFamily projective_object_family(const ContextPtr& ctx, int i);
ObjectFamily interval_object_family(const ContextPtr& ctx, int a, int b);
ObjectFamily kronecker_object_family(const ContextPtr& ctx, KroneckerKind kind, int n);
/// Generic exceptional module with dimension vector d, re-sampled per prime
/// with the rigidity invariants re-verified.
ObjectFamily root_object_family(const ContextPtr& ctx, const DimVec& d, uint64_t seed = 0);

/// Parses object specs of the CLI form: "SP:i", "S:i", "P:i", "I:i",
/// "interval:a:b", "kronecker:U:n" (also V, W), "root:d1,d2,...". Direct
/// sums are written with "+" between summands. Indices are 1-based.
ObjectFamily parse_object_spec(const ContextPtr& ctx, const std::string& spec,
                               uint64_t seed = 0);

struct CCOptions {
    ChiOptions chi;
    /// Prime used for the structural checks (Ext preconditions etc.).
    uint32_t structure_prime = kDefaultPrime;
    uint64_t generic_seed = 0;
};

/// Result of the cluster-character computation.
struct CCResult {
    std::string object;
    LaurentPoly polynomial;
    FractionForm denominator;
    std::vector<std::pair<DimVec, int64_t>> chi_table;

    nlohmann::json to_json() const;
};

/// Monomial x^v with exponent <alpha_i, v> in the variable x_i.
Monomial x_power(const QuiverAlgebraContext& ctx, const DimVec& v);
LaurentPoly x_power_poly(const QuiverAlgebraContext& ctx, const DimVec& v);
/// The same exponents written without the Coxeter map:
/// exponent_i = -<e, alpha_i> - <alpha_i, m - e>.
Monomial x_power_definition_route(const QuiverAlgebraContext& ctx, const DimVec& m,
                                  const DimVec& e);

/// X_M = sum_e chi_c(Gr_e(M)) x^{tau(e) - dim M + e} over all strata e.
CCResult cc_of_module(const ObjectFamily& fam, const CCOptions& opts = {});
/// cc of the module part times prod x_i^{sp multiplicity}.
CCResult cc_of_object(const ObjectFamily& fam, const CCOptions& opts = {});

struct DenominatorReport {
    std::string object;
    bool pass = false;
    std::vector<int32_t> denominator;
    DimVec delta;
    std::string polynomial;
};

/// Denominator check: the fraction-form exponent vector of X_M must equal
/// delta(M) (the dimension vector, for an exceptional module). Precondition:
/// the object is exceptional.
DenominatorReport verify_denominator(const ObjectFamily& fam, const CCOptions& opts = {});

struct ExchangeReport {
    std::string pair;
    bool precondition_ok = false;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

/// Checks X_M X_N == X_B + X_B' for an exchange pair with
/// ext_dim_cluster(M, N) == 1 and given middle terms.
ExchangeReport verify_exchange(const ObjectFamily& m, const ObjectFamily& n,
                               const ObjectFamily& b, const ObjectFamily& bp,
                               const CCOptions& opts = {});

/// Middle terms {B, B'} of the exchange triangles for the pair
/// (module M, SP_i), built from kernels and cokernels of the canonical maps
/// M -> I_i and P_i -> M.
std::pair<ObjectFamily, ObjectFamily> sp_exchange_middle_terms(const ObjectFamily& m, int i,
                                                               const CCOptions& opts = {});

struct BijectionReport {
    bool pass = false;
    size_t root_count = 0;
    size_t variable_count = 0;
    bool injective = false;
    std::vector<std::string> missing; // X_M not among the cluster variables
    std::vector<std::string> extra;   // cluster variables never reached
};

/// Checks that {X_M : M exceptional indecomposable} together with the x_i
/// equals the cluster-variable set of the (complete) exchange graph, and
/// that distinct roots give distinct polynomials.
BijectionReport variable_bijection_check(const ContextPtr& ctx, const ExchangeGraph& graph,
                                         int64_t bound, const CCOptions& opts = {});

struct TiltingReport {
    bool pass = false;
    size_t tilting_count = 0;
    size_t cluster_count = 0;
    bool clusters_match = false;
    bool two_completion = false;
};

/// Enumerates maximal rigid n-sets in the compatibility graph of the rigid
/// indecomposables (modules from roots plus the SP_i), maps them through the
/// cluster character and compares with the unordered clusters of the graph;
/// also checks that every almost-complete set extends in exactly two ways.
TiltingReport tilting_bijection_check(const ContextPtr& ctx, const ExchangeGraph& graph,
                                      int64_t bound, const CCOptions& opts = {});

} // namespace clusterforge
