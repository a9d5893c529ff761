#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace clusterforge {

/// Antisymmetric integer exchange matrix. Indices are 0-based internally;
/// the CLI and serialized forms use the 1-based convention.
struct ExchangeMatrix {
    int n = 0;
    std::vector<int64_t> entries; // row major, size n*n

    ExchangeMatrix() = default;
    explicit ExchangeMatrix(int n_) : n(n_), entries(static_cast<size_t>(n_) * n_, 0) {}
    static ExchangeMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

    int64_t at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
    int64_t& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }

    bool is_antisymmetric() const;
    void require_antisymmetric() const;

    bool operator==(const ExchangeMatrix& rhs) const = default;

    nlohmann::json to_json() const;
    static ExchangeMatrix from_json(const nlohmann::json& j);
};

struct Arrow {
    int source = 0; // 0-based
    int target = 0;
    int multiplicity = 1;
};

/// Finite quiver without loops or 2-cycles.
struct QuiverSpec {
    int n = 0;
    std::vector<Arrow> arrows;

    /// Number of arrows i -> j, multiplicities summed.
    int64_t arrow_count(int i, int j) const;
    bool has_loops_or_two_cycles() const;
    /// True iff there is no oriented cycle.
    bool is_acyclic() const;
    /// A topological order of the vertices; throws if cyclic.
    std::vector<int> topological_order() const;
    /// Arrows expanded so every multiplicity is 1, in deterministic order.
    std::vector<Arrow> expanded_arrows() const;

    nlohmann::json to_json() const;
};

/// Dictionary between antisymmetric matrices and quivers: b_ij > 0 gives
/// b_ij arrows from i to j. Mutually inverse on valid inputs.
QuiverSpec quiver_from_matrix(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_quiver(const QuiverSpec& q);

/// Built-in quivers: "a1".."a6" (linear orientation 1->2->...->n),
/// "d4" (three sources pointing into the center), "kronecker" (1 => 2).
QuiverSpec preset_quiver(const std::string& name);
std::vector<std::string> preset_names();

/// Parses {"n":., "matrix":[[..]]} or {"n":., "arrows":[[s,t,mult?],..]}
/// (1-based vertices in files).
QuiverSpec quiver_from_json(const nlohmann::json& j);

} // namespace clusterforge
