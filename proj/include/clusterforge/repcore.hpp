#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "clusterforge/fp.hpp"
#include "clusterforge/quiver.hpp"

namespace clusterforge {

/// Element of the Grothendieck group Z^n. Module classes are componentwise
/// nonnegative; arithmetic results may have arbitrary signs.
using DimVec = std::vector<int64_t>;

using IntMatrix = std::vector<std::vector<int64_t>>;

inline constexpr uint32_t kDefaultPrime = 101;

/// Euler form, Coxeter action, and projective/injective dimension vectors of
/// the path algebra of an acyclic quiver.
struct QuiverAlgebraContext {
    QuiverSpec quiver;
    int n = 0;
    std::vector<Arrow> arrows;      // expanded, multiplicity 1 each
    IntMatrix euler;                // <d,e> = d . euler . e
    IntMatrix euler_inverse;        // path-count matrix
    IntMatrix coxeter;              // Phi with <x, Phi y> = -<y, x>
    std::vector<DimVec> dim_projective;
    std::vector<DimVec> dim_injective;
};

using ContextPtr = std::shared_ptr<const QuiverAlgebraContext>;

/// Builds the context; validates acyclicity, the integrality of the Coxeter
/// matrix, and the identity Phi(dim P_j) == -dim I_j.
ContextPtr make_context(const QuiverSpec& q);
ContextPtr preset_context(const std::string& name);

int64_t euler_form(const QuiverAlgebraContext& ctx, const DimVec& d, const DimVec& e);
DimVec coxeter_tau(const QuiverAlgebraContext& ctx, const DimVec& e);
DimVec coxeter_tau_inverse(const QuiverAlgebraContext& ctx, const DimVec& e);

/// Representation of the context's quiver over F_p: one matrix per expanded
/// arrow, shaped dims[target] x dims[source].
struct QuiverRep {
    ContextPtr ctx;
    uint32_t p = kDefaultPrime;
    std::vector<int> dims;
    std::vector<fp::Matrix> arrow_maps;

    DimVec dim_vector() const { return DimVec(dims.begin(), dims.end()); }
    int64_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    void validate() const;

    nlohmann::json to_json() const;
};

QuiverRep zero_rep(const ContextPtr& ctx, uint32_t p);
QuiverRep simple_rep(const ContextPtr& ctx, int i, uint32_t p);
QuiverRep projective_rep(const ContextPtr& ctx, int i, uint32_t p);
QuiverRep injective_rep(const ContextPtr& ctx, int i, uint32_t p);
/// Indecomposable supported on the vertex interval [a, b] of a linearly
/// oriented A_n quiver (0-based, inclusive).
QuiverRep interval_rep(const ContextPtr& ctx, int a, int b, uint32_t p);
QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n);
QuiverRep rep_from_json(const ContextPtr& ctx, const nlohmann::json& j);

enum class KroneckerKind { U, V, W };

/// The postprojective U^n, preinjective V^n and tube modules W^n(lambda) of
/// the Kronecker quiver, with the standard identity/shift block matrices.
/// lambda is a point of P^1 given as (lambda0 : lambda1); (1:0) picks the
/// nilpotent-beta tube module.
QuiverRep kronecker_module(const ContextPtr& ctx, KroneckerKind kind, int n,
                           uint32_t p, std::pair<uint32_t, uint32_t> lambda = {1, 0});

/// A morphism of representations: one matrix per vertex, N_a f_s == f_t M_a.
struct RepMorphism {
    QuiverRep source;
    QuiverRep target;
    std::vector<fp::Matrix> components;
};

int64_t hom_dim(const QuiverRep& m, const QuiverRep& n);
std::vector<RepMorphism> hom_basis(const QuiverRep& m, const QuiverRep& n);

/// dim Ext^1 computed as hom_dim(M,N) - <dim M, dim N>; throws on a negative
/// result, which would indicate an internal inconsistency.
int64_t ext_dim(const QuiverRep& m, const QuiverRep& n);
/// Independent route: dimension of the cokernel of the cocycle map.
int64_t ext_dim_via_cocycle(const QuiverRep& m, const QuiverRep& n);

/// Extension 0 -> M -> B -> N -> 0 realized by the cocycle (c_a), with arrow
/// blocks [[M_a, c_a], [0, N_a]]. The cocycle entries are shaped
/// M.dims[target] x N.dims[source], one per expanded arrow.
QuiverRep build_extension(const QuiverRep& n, const QuiverRep& m,
                          const std::vector<fp::Matrix>& cocycle);
std::vector<fp::Matrix> zero_cocycle(const QuiverRep& n, const QuiverRep& m);
/// A cocycle representing a nonzero class of Ext^1(N, M); requires
/// ext_dim(N, M) > 0. Deterministic.
std::vector<fp::Matrix> nonsplit_cocycle(const QuiverRep& n, const QuiverRep& m);

/// Kernel and cokernel of a morphism, as representations with the induced
/// arrow maps.
QuiverRep kernel_rep(const RepMorphism& f);
QuiverRep cokernel_rep(const RepMorphism& f);

bool is_rigid(const QuiverRep& m);
/// Rigid with one-dimensional endomorphism space (certifies an
/// indecomposable exceptional module).
bool is_exceptional(const QuiverRep& m);

/// Object of the cluster category: a module plus a multiset of shifted
/// projectives SP_i.
struct ClusterObject {
    QuiverRep module_part;
    std::vector<int> sp_multiplicity; // size n

    static ClusterObject module(QuiverRep m);
    static ClusterObject shifted_projective(const ContextPtr& ctx, int i, uint32_t p);
    static ClusterObject zero(const ContextPtr& ctx, uint32_t p);
    ClusterObject direct_sum(const ClusterObject& other) const;
    bool is_zero_object() const;
    std::string describe() const;

    /// delta vector: dim of the module part minus the SP multiplicities.
    DimVec delta() const;
};

/// Symmetric Ext^1 dimension in the cluster category.
/// For modules: ext(M,N) + ext(N,M); for SP_i against a module M: (dim M)_i;
/// SP against SP: 0. Extended additively over direct sums.
int64_t ext_dim_cluster(const QuiverRep& m, const QuiverRep& n);
int64_t ext_dim_cluster(const ClusterObject& x, const ClusterObject& y);
bool is_rigid(const ClusterObject& x);
bool is_exceptional(const ClusterObject& x);

/// All nonzero d with 0 <= d_i <= bound and <d,d> == 1.
std::vector<DimVec> positive_roots(const QuiverAlgebraContext& ctx, int64_t bound);

/// Samples arrow matrices until hom_dim(M,M) == 1 and ext_dim(M,M) == 0.
/// Requires <d,d> == 1. Throws std::runtime_error when attempts are
/// exhausted (try a larger prime). Deterministic for a fixed seed.
QuiverRep generic_rep(const ContextPtr& ctx, const DimVec& d, uint32_t p,
                      int attempts = 200, uint64_t seed = 0);

/// Multiplicities (c_j) with dims == sum c_j dim I_j, for a representation
/// known to be injective; throws if no nonnegative solution exists.
std::vector<int64_t> injective_multiplicities(const QuiverAlgebraContext& ctx, const DimVec& dims);
std::vector<int64_t> projective_multiplicities(const QuiverAlgebraContext& ctx, const DimVec& dims);

} // namespace clusterforge
