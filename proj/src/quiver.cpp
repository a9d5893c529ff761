#include "clusterforge/quiver.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace clusterforge {

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows) {
    ExchangeMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n)
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExchangeMatrix::is_antisymmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

void ExchangeMatrix::require_antisymmetric() const {
    if (!is_antisymmetric())
        throw std::invalid_argument("exchange matrix is not antisymmetric");
}

nlohmann::json ExchangeMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n; ++j) row.push_back(at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExchangeMatrix ExchangeMatrix::from_json(const nlohmann::json& j) {
    std::vector<std::vector<int64_t>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<int64_t>>());
    return from_rows(rows);
}

int64_t QuiverSpec::arrow_count(int i, int j) const {
    int64_t c = 0;
    for (const auto& a : arrows)
        if (a.source == i && a.target == j) c += a.multiplicity;
    return c;
}

bool QuiverSpec::has_loops_or_two_cycles() const {
    for (const auto& a : arrows) {
        if (a.source == a.target) return true;
        if (arrow_count(a.target, a.source) > 0) return true;
    }
    return false;
}

bool QuiverSpec::is_acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<int> QuiverSpec::topological_order() const {
    std::vector<int> indeg(n, 0);
    for (const auto& a : arrows)
        if (a.multiplicity > 0) indeg[a.target]++;
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (const auto& a : arrows) {
            if (a.source == v && a.multiplicity > 0 && --indeg[a.target] == 0)
                ready.push_back(a.target);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("quiver has an oriented cycle");
    return order;
}

std::vector<Arrow> QuiverSpec::expanded_arrows() const {
    std::vector<Arrow> out;
    for (const auto& a : arrows)
        for (int k = 0; k < a.multiplicity; ++k) out.push_back({a.source, a.target, 1});
    return out;
}

nlohmann::json QuiverSpec::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : arrows) arr.push_back({a.source + 1, a.target + 1, a.multiplicity});
    nlohmann::json j;
    j["n"] = n;
    j["arrows"] = std::move(arr);
    return j;
}

QuiverSpec quiver_from_matrix(const ExchangeMatrix& b) {
    b.require_antisymmetric();
    QuiverSpec q;
    q.n = b.n;
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            if (b.at(i, j) > 0)
                q.arrows.push_back({i, j, static_cast<int>(b.at(i, j))});
    return q;
}

ExchangeMatrix matrix_from_quiver(const QuiverSpec& q) {
    if (q.has_loops_or_two_cycles())
        throw std::invalid_argument("quiver has a loop or 2-cycle");
    ExchangeMatrix b(q.n);
    for (const auto& a : q.arrows) {
        b.at(a.source, a.target) += a.multiplicity;
        b.at(a.target, a.source) -= a.multiplicity;
    }
    return b;
}

QuiverSpec preset_quiver(const std::string& name) {
    QuiverSpec q;
    if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '6') {
        q.n = name[1] - '0';
        for (int i = 0; i + 1 < q.n; ++i) q.arrows.push_back({i, i + 1, 1});
        return q;
    }
    if (name == "d4") {
        q.n = 4;
        q.arrows = {{0, 2, 1}, {1, 2, 1}, {3, 2, 1}};
        return q;
    }
    if (name == "kronecker") {
        q.n = 2;
        q.arrows = {{0, 1, 2}};
        return q;
    }
    throw std::invalid_argument("unknown preset quiver: " + name);
}

std::vector<std::string> preset_names() {
    return {"a1", "a2", "a3", "a4", "a5", "a6", "d4", "kronecker"};
}

QuiverSpec quiver_from_json(const nlohmann::json& j) {
    if (j.contains("matrix")) {
        return quiver_from_matrix(ExchangeMatrix::from_json(j.at("matrix")));
    }
    QuiverSpec q;
    q.n = j.at("n").get<int>();
    for (const auto& item : j.at("arrows")) {
        Arrow a;
        a.source = item.at(0).get<int>() - 1;
        a.target = item.at(1).get<int>() - 1;
        a.multiplicity = item.size() > 2 ? item.at(2).get<int>() : 1;
        if (a.source < 0 || a.source >= q.n || a.target < 0 || a.target >= q.n)
            throw std::invalid_argument("arrow endpoint out of range");
        q.arrows.push_back(a);
    }
    if (q.has_loops_or_two_cycles())
        throw std::invalid_argument("quiver has a loop or 2-cycle");
    return q;
}

} // namespace clusterforge
