#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "clusterforge/laurent.hpp"
#include "clusterforge/quiver.hpp"

namespace clusterforge {

/// An ordered cluster of n Laurent polynomials together with an antisymmetric
/// exchange matrix.
struct Seed {
    std::vector<LaurentPoly> cluster;
    ExchangeMatrix matrix;

    int n() const { return matrix.n; }
    void validate() const;
    bool operator==(const Seed& rhs) const {
        return cluster == rhs.cluster && matrix == rhs.matrix;
    }

    nlohmann::json to_json() const;
    static Seed from_json(const nlohmann::json& j);
};

/// The seed (x_1,...,x_n; B_Q).
Seed initial_seed(const QuiverSpec& q);

/// Matrix mutation in direction j (0-based). Involutive, preserves
/// antisymmetry.
ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, int j);

/// Seed mutation: replaces cluster entry j via the exchange relation
/// u_j u_j' = prod_{b_ij>0} u_i^{b_ij} + prod_{b_ij<0} u_i^{-b_ij}
/// (empty products are 1) and mutates the matrix. Throws NotDivisibleError
/// if the division is not exact, which signals a genuine bug.
Seed seed_mutate(const Seed& s, int j);

/// Representative of the seed under simultaneous permutation of cluster
/// entries and matrix rows/columns, minimizing the serialized form.
/// Idempotent.
Seed canonical_seed(const Seed& s);

/// Size of the orbit of the canonical seed under S_n, i.e. the number of
/// labeled seeds this unlabeled node accounts for.
int64_t labeled_orbit_size(const Seed& canonical);

struct ExchangeGraphEdge {
    int from = 0;
    int to = 0;
    int direction = 0; // 0-based mutation index on the canonical form of `from`
};

/// Exchange graph with canonical (unlabeled) seeds as nodes.
struct ExchangeGraph {
    std::vector<Seed> nodes;   // canonical representatives, discovery order
    std::vector<int> depths;   // BFS distance from the initial seed
    std::vector<ExchangeGraphEdge> edges; // deduplicated, deterministic order
    bool complete = false;     // closed under all mutations
    bool truncated = false;    // a resource cap was hit

    int64_t labeled_seed_count() const;
    nlohmann::json to_json() const;
};

struct ExploreOptions {
    int64_t max_seeds = 100000;
    int max_depth = 64;
    bool parallel = false;
    int threads = 0; // 0 = hardware default
};

/// Breadth-first closure of the initial seed under all n mutations, up to
/// the caps. Hitting a cap sets the truncated flag; it never throws for that
/// reason. Output is deterministic and independent of the parallel flag.
ExchangeGraph explore(const Seed& initial, const ExploreOptions& opts = {});

/// Deduplicated, canonically ordered union of all cluster entries.
std::vector<LaurentPoly> cluster_variables(const ExchangeGraph& g);

struct Subgraph {
    std::vector<int> node_ids;
    std::vector<ExchangeGraphEdge> edges;
    bool connected = false;
};

/// Induced subgraph on the seeds whose cluster contains v. Requires a
/// complete graph; throws if v is not a cluster variable of g.
Subgraph variable_support_subgraph(const ExchangeGraph& g, const LaurentPoly& v);

/// Induced subgraph on the seeds whose matrix defines an acyclic quiver.
Subgraph acyclic_seed_subgraph(const ExchangeGraph& g);

/// True iff no two distinct nodes share the same unordered cluster.
bool seed_determined_by_cluster(const ExchangeGraph& g);

} // namespace clusterforge
