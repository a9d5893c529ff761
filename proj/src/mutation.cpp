#include "clusterforge/mutation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace clusterforge {

void Seed::validate() const {
    matrix.require_antisymmetric();
    if (static_cast<int>(cluster.size()) != matrix.n)
        throw std::invalid_argument("seed: cluster size does not match matrix size");
    for (size_t i = 0; i < cluster.size(); ++i)
        for (size_t j = i + 1; j < cluster.size(); ++j)
            if (cluster[i] == cluster[j])
                throw std::invalid_argument("seed: cluster entries are not pairwise distinct");
}

nlohmann::json Seed::to_json() const {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& u : cluster) c.push_back(u.to_json());
    nlohmann::json j;
    j["n"] = matrix.n;
    j["cluster"] = std::move(c);
    j["matrix"] = matrix.to_json();
    return j;
}

Seed Seed::from_json(const nlohmann::json& j) {
    Seed s;
    s.matrix = ExchangeMatrix::from_json(j.at("matrix"));
    for (const auto& item : j.at("cluster")) s.cluster.push_back(LaurentPoly::from_json(item));
    s.validate();
    return s;
}

Seed initial_seed(const QuiverSpec& q) {
    Seed s;
    s.matrix = matrix_from_quiver(q);
    for (int i = 0; i < q.n; ++i) s.cluster.push_back(LaurentPoly::variable(q.n, i));
    return s;
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, int j) {
    if (j < 0 || j >= b.n) throw std::out_of_range("matrix_mutate: index out of range");
    ExchangeMatrix r(b.n);
    for (int i = 0; i < b.n; ++i) {
        for (int k = 0; k < b.n; ++k) {
            if (i == j || k == j) {
                r.at(i, k) = -b.at(i, k);
            } else {
                int64_t bij = b.at(i, j), bjk = b.at(j, k);
                r.at(i, k) = b.at(i, k) + (std::abs(bij) * bjk + bij * std::abs(bjk)) / 2;
            }
        }
    }
    return r;
}

Seed seed_mutate(const Seed& s, int j) {
    if (j < 0 || j >= s.n()) throw std::out_of_range("seed_mutate: index out of range");
    const int n = s.n();
    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        int64_t bij = s.matrix.at(i, j);
        for (int64_t k = 0; k < bij; ++k) pos *= s.cluster[i];
        for (int64_t k = 0; k < -bij; ++k) neg *= s.cluster[i];
    }
    Seed r;
    r.cluster = s.cluster;
    r.cluster[j] = (pos + neg).exact_div(s.cluster[j]);
    r.matrix = matrix_mutate(s.matrix, j);
    return r;
}

namespace {

std::string seed_key_permuted(const std::vector<std::string>& entry_keys,
                              const ExchangeMatrix& b, const std::vector<int>& perm) {
    std::ostringstream os;
    for (int idx : perm) os << entry_keys[idx] << "#";
    os << "/";
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t k = 0; k < perm.size(); ++k) os << b.at(perm[i], perm[k]) << ",";
    return os.str();
}

std::string seed_key(const Seed& s) {
    std::ostringstream os;
    for (const auto& u : s.cluster) os << u.key() << "#";
    os << "/";
    for (int i = 0; i < s.matrix.n; ++i)
        for (int k = 0; k < s.matrix.n; ++k) os << s.matrix.at(i, k) << ",";
    return os.str();
}

} // namespace

Seed canonical_seed(const Seed& s) {
    const int n = s.n();
    std::vector<std::string> entry_keys;
    entry_keys.reserve(n);
    for (const auto& u : s.cluster) entry_keys.push_back(u.key());

    std::vector<int> perm(n), best(n);
    std::iota(perm.begin(), perm.end(), 0);
    best = perm;
    std::string best_key = seed_key_permuted(entry_keys, s.matrix, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::string k = seed_key_permuted(entry_keys, s.matrix, perm);
        if (k < best_key) {
            best_key = std::move(k);
            best = perm;
        }
    }
    Seed r;
    r.cluster.reserve(n);
    r.matrix = ExchangeMatrix(n);
    for (int i = 0; i < n; ++i) {
        r.cluster.push_back(s.cluster[best[i]]);
        for (int k = 0; k < n; ++k) r.matrix.at(i, k) = s.matrix.at(best[i], best[k]);
    }
    return r;
}

int64_t labeled_orbit_size(const Seed& canonical) {
    const int n = canonical.n();
    std::vector<std::string> entry_keys;
    for (const auto& u : canonical.cluster) entry_keys.push_back(u.key());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string id_key = seed_key_permuted(entry_keys, canonical.matrix, perm);
    int64_t stabilizer = 0, total = 0;
    do {
        ++total;
        if (seed_key_permuted(entry_keys, canonical.matrix, perm) == id_key) ++stabilizer;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / stabilizer;
}

int64_t ExchangeGraph::labeled_seed_count() const {
    int64_t total = 0;
    for (const auto& s : nodes) total += labeled_orbit_size(s);
    return total;
}

nlohmann::json ExchangeGraph::to_json() const {
    nlohmann::json jn = nlohmann::json::array();
    for (size_t i = 0; i < nodes.size(); ++i) {
        nlohmann::json node;
        node["id"] = i;
        node["depth"] = depths[i];
        node["seed"] = nodes[i].to_json();
        jn.push_back(std::move(node));
    }
    nlohmann::json je = nlohmann::json::array();
    for (const auto& e : edges) je.push_back({e.from, e.to, e.direction + 1});
    nlohmann::json j;
    j["nodes"] = std::move(jn);
    j["edges"] = std::move(je);
    j["complete"] = complete;
    j["truncated"] = truncated;
    j["node_count"] = nodes.size();
    j["edge_count"] = edges.size();
    j["labeled_seed_count"] = labeled_seed_count();
    j["variable_count"] = cluster_variables(*this).size();
    return j;
}

namespace {

struct MutationResult {
    int from;
    int direction;
    Seed canonical;
    std::string key;
};

template <typename Fn>
void parallel_for(int64_t count, int threads, Fn&& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int64_t> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

ExchangeGraph explore(const Seed& initial, const ExploreOptions& opts) {
    if (opts.max_seeds < 1) throw std::invalid_argument("explore: max_seeds must be >= 1");
    initial.validate();
    const int n = initial.n();

    ExchangeGraph g;
    std::map<std::string, int> visited;
    Seed root = canonical_seed(initial);
    visited[seed_key(root)] = 0;
    g.nodes.push_back(std::move(root));
    g.depths.push_back(0);

    std::set<std::pair<int, int>> edge_pairs;
    std::deque<int> frontier{0};
    bool capped = false;

    while (!frontier.empty() && !capped) {
        // One BFS level at a time; the merge below is in (node, direction)
        // order, so results do not depend on scheduling.
        std::vector<int> level(frontier.begin(), frontier.end());
        frontier.clear();
        if (g.depths[level.front()] >= opts.max_depth) {
            capped = true;
            break;
        }
        std::vector<MutationResult> results(static_cast<size_t>(level.size()) * n);
        parallel_for(static_cast<int64_t>(results.size()), opts.parallel ? opts.threads : 1,
                     [&](int64_t idx) {
                         int node = level[idx / n];
                         int dir = static_cast<int>(idx % n);
                         MutationResult& r = results[idx];
                         r.from = node;
                         r.direction = dir;
                         r.canonical = canonical_seed(seed_mutate(g.nodes[node], dir));
                         r.key = seed_key(r.canonical);
                     });
        for (auto& r : results) {
            auto it = visited.find(r.key);
            int target;
            if (it != visited.end()) {
                target = it->second;
            } else if (static_cast<int64_t>(g.nodes.size()) >= opts.max_seeds) {
                capped = true;
                continue;
            } else {
                target = static_cast<int>(g.nodes.size());
                visited.emplace(r.key, target);
                g.nodes.push_back(std::move(r.canonical));
                g.depths.push_back(g.depths[r.from] + 1);
                frontier.push_back(target);
            }
            auto pair = std::minmax(r.from, target);
            if (edge_pairs.insert({pair.first, pair.second}).second)
                g.edges.push_back({r.from, target, r.direction});
        }
    }

    g.truncated = capped;
    g.complete = !capped;
    return g;
}

std::vector<LaurentPoly> cluster_variables(const ExchangeGraph& g) {
    std::set<LaurentPoly> vars;
    for (const auto& s : g.nodes) vars.insert(s.cluster.begin(), s.cluster.end());
    return {vars.begin(), vars.end()};
}

namespace {

Subgraph induced_subgraph(const ExchangeGraph& g, const std::vector<int>& ids) {
    Subgraph sub;
    sub.node_ids = ids;
    std::set<int> inset(ids.begin(), ids.end());
    for (const auto& e : g.edges)
        if (inset.count(e.from) && inset.count(e.to)) sub.edges.push_back(e);
    if (ids.empty()) {
        sub.connected = false;
        return sub;
    }
    std::map<int, std::vector<int>> adj;
    for (const auto& e : sub.edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::set<int> seen{ids.front()};
    std::deque<int> queue{ids.front()};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (seen.insert(w).second) queue.push_back(w);
    }
    sub.connected = seen.size() == inset.size();
    return sub;
}

} // namespace

Subgraph variable_support_subgraph(const ExchangeGraph& g, const LaurentPoly& v) {
    if (!g.complete)
        throw std::invalid_argument("variable_support_subgraph: graph is not complete");
    std::vector<int> ids;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& c = g.nodes[i].cluster;
        if (std::find(c.begin(), c.end(), v) != c.end()) ids.push_back(static_cast<int>(i));
    }
    if (ids.empty())
        throw std::invalid_argument("variable_support_subgraph: not a cluster variable of g");
    return induced_subgraph(g, ids);
}

Subgraph acyclic_seed_subgraph(const ExchangeGraph& g) {
    if (!g.complete)
        throw std::invalid_argument("acyclic_seed_subgraph: graph is not complete");
    std::vector<int> ids;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (quiver_from_matrix(g.nodes[i].matrix).is_acyclic()) ids.push_back(static_cast<int>(i));
    return induced_subgraph(g, ids);
}

bool seed_determined_by_cluster(const ExchangeGraph& g) {
    if (!g.complete)
        throw std::invalid_argument("seed_determined_by_cluster: graph is not complete");
    std::set<std::string> clusters;
    for (const auto& s : g.nodes) {
        std::vector<std::string> keys;
        for (const auto& u : s.cluster) keys.push_back(u.key());
        std::sort(keys.begin(), keys.end());
        std::string joined;
        for (const auto& k : keys) joined += k + "|";
        if (!clusters.insert(joined).second) return false;
    }
    return true;
}

} // namespace clusterforge
