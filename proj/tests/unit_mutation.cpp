#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "clusterforge/mutation.hpp"

using namespace clusterforge;

namespace {

ExchangeMatrix mat(const std::vector<std::vector<int64_t>>& rows) {
    return ExchangeMatrix::from_rows(rows);
}

ExchangeMatrix random_antisymmetric(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    ExchangeMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int64_t v = entry(rng);
            b.at(i, j) = v;
            b.at(j, i) = -v;
        }
    return b;
}

} // namespace

TEST_CASE("matrix mutation") {
    auto b = mat({{0, 1}, {-1, 0}});
    CHECK(matrix_mutate(b, 0) == mat({{0, -1}, {1, 0}}));

    auto k = mat({{0, 2}, {-2, 0}});
    CHECK(matrix_mutate(matrix_mutate(k, 1), 1) == k);

    auto a3 = mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK(matrix_mutate(a3, 1) == mat({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));

    CHECK_THROWS_AS(matrix_mutate(b, 2), std::out_of_range);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto m = random_antisymmetric(rng, n);
        int j = static_cast<int>(rng() % n);
        auto mm = matrix_mutate(m, j);
        CHECK(mm.is_antisymmetric());
        CHECK(matrix_mutate(mm, j) == m);
    }
}

TEST_CASE("seed mutation") {
    auto kron = initial_seed(preset_quiver("kronecker"));
    auto s = seed_mutate(kron, 1);
    LaurentPoly x1 = LaurentPoly::variable(2, 0);
    LaurentPoly x2 = LaurentPoly::variable(2, 1);
    CHECK(s.cluster[0] == x1);
    CHECK(s.cluster[1] == (x1 * x1 + LaurentPoly::constant(2, 1)).exact_div(x2));

    // n = 1: both exchange products are empty, u u' = 2.
    auto a1 = initial_seed(preset_quiver("a1"));
    auto t = seed_mutate(a1, 0);
    CHECK(t.cluster[0] ==
          LaurentPoly::constant(1, 2).exact_div(LaurentPoly::variable(1, 0)));

    CHECK(seed_mutate(s, 1) == kron);
    CHECK(seed_mutate(seed_mutate(a1, 0), 0) == a1);
}

TEST_CASE("quiver matrix dictionary") {
    auto k = mat({{0, 2}, {-2, 0}});
    auto q = quiver_from_matrix(k);
    CHECK(q.arrow_count(0, 1) == 2);
    CHECK(q.arrow_count(1, 0) == 0);

    auto a3 = preset_quiver("a3");
    CHECK(matrix_from_quiver(a3) == mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));

    auto a2 = preset_quiver("a2");
    CHECK(matrix_from_quiver(quiver_from_matrix(matrix_from_quiver(a2))) ==
          matrix_from_quiver(a2));

    QuiverSpec bad;
    bad.n = 2;
    bad.arrows = {{0, 1, 1}, {1, 0, 1}};
    CHECK_THROWS_AS(matrix_from_quiver(bad), std::invalid_argument);
}

TEST_CASE("canonical seeds") {
    auto kron = initial_seed(preset_quiver("kronecker"));
    Seed swapped;
    swapped.cluster = {kron.cluster[1], kron.cluster[0]};
    swapped.matrix = mat({{0, -2}, {2, 0}});
    CHECK(canonical_seed(kron) == canonical_seed(swapped));

    std::mt19937_64 rng(99);
    auto a3 = initial_seed(preset_quiver("a3"));
    Seed s = a3;
    for (int step = 0; step < 30; ++step) {
        s = seed_mutate(s, static_cast<int>(rng() % 3));
        auto c = canonical_seed(s);
        CHECK(canonical_seed(c) == c);
    }

    // two relabeled A_2 seeds collapse to one node
    auto a2 = initial_seed(preset_quiver("a2"));
    Seed relabeled;
    relabeled.cluster = {a2.cluster[1], a2.cluster[0]};
    relabeled.matrix = mat({{0, -1}, {1, 0}});
    CHECK(canonical_seed(a2) == canonical_seed(relabeled));
}

TEST_CASE("exploration of finite types") {
    auto g2 = explore(initial_seed(preset_quiver("a2")));
    CHECK(g2.complete);
    CHECK(g2.nodes.size() == 5);
    CHECK(g2.edges.size() == 5);
    CHECK(cluster_variables(g2).size() == 5);
    CHECK(g2.labeled_seed_count() == 10);

    auto g3 = explore(initial_seed(preset_quiver("a3")));
    CHECK(g3.complete);
    CHECK(g3.nodes.size() == 14);
    CHECK(cluster_variables(g3).size() == 9);

    auto g1 = explore(initial_seed(preset_quiver("a1")));
    CHECK(g1.nodes.size() == 2);
    CHECK(cluster_variables(g1).size() == 2);
}

TEST_CASE("exploration caps") {
    ExploreOptions opts;
    opts.max_seeds = 10;
    auto g = explore(initial_seed(preset_quiver("kronecker")), opts);
    CHECK(g.truncated);
    CHECK_FALSE(g.complete);
    CHECK(g.nodes.size() <= 10);

    ExploreOptions depth_opts;
    depth_opts.max_depth = 2;
    auto gd = explore(initial_seed(preset_quiver("kronecker")), depth_opts);
    CHECK(gd.truncated);
}

TEST_CASE("cluster variables of a2") {
    auto g = explore(initial_seed(preset_quiver("a2")));
    auto vars = cluster_variables(g);
    LaurentPoly x1 = LaurentPoly::variable(2, 0);
    LaurentPoly x2 = LaurentPoly::variable(2, 1);
    LaurentPoly one = LaurentPoly::constant(2, 1);
    std::set<LaurentPoly> expected{
        x1, x2, (one + x2).exact_div(x1), (one + x1).exact_div(x2),
        (one + x1 + x2).exact_div(x1 * x2)};
    CHECK(std::set<LaurentPoly>(vars.begin(), vars.end()) == expected);
}

TEST_CASE("support and acyclic subgraphs") {
    auto g2 = explore(initial_seed(preset_quiver("a2")));
    LaurentPoly x1 = LaurentPoly::variable(2, 0);
    auto sub = variable_support_subgraph(g2, x1);
    CHECK(sub.node_ids.size() == 2);
    CHECK(sub.connected);
    CHECK_THROWS_AS(variable_support_subgraph(g2, LaurentPoly::constant(2, 7)),
                    std::invalid_argument);

    auto acyc2 = acyclic_seed_subgraph(g2);
    CHECK(acyc2.node_ids.size() == 5);
    CHECK(acyc2.connected);

    auto g3 = explore(initial_seed(preset_quiver("a3")));
    for (const auto& v : cluster_variables(g3)) {
        auto s = variable_support_subgraph(g3, v);
        CHECK(s.connected);
    }
    auto acyc3 = acyclic_seed_subgraph(g3);
    CHECK(!acyc3.node_ids.empty());
    CHECK(acyc3.node_ids.size() < g3.nodes.size());
    CHECK(acyc3.connected);

    auto g1 = explore(initial_seed(preset_quiver("a1")));
    auto sub1 = variable_support_subgraph(g1, LaurentPoly::variable(1, 0));
    CHECK(sub1.node_ids.size() == 1);
    CHECK(sub1.connected);
    CHECK(acyclic_seed_subgraph(g1).node_ids.size() == g1.nodes.size());
}

TEST_CASE("seed determined by cluster") {
    for (const char* name : {"a1", "a2", "a3"}) {
        auto g = explore(initial_seed(preset_quiver(name)));
        CHECK(seed_determined_by_cluster(g));
    }
}

TEST_CASE("involutivity of random mutations") {
    std::mt19937_64 rng(4242);
    std::vector<Seed> pool;
    for (const char* name : {"a2", "a3", "kronecker"})
        pool.push_back(initial_seed(preset_quiver(name)));
    for (int trial = 0; trial < 300; ++trial) {
        Seed s = pool[rng() % pool.size()];
        int walk = static_cast<int>(rng() % 5);
        for (int i = 0; i < walk; ++i) s = seed_mutate(s, static_cast<int>(rng() % s.n()));
        int j = static_cast<int>(rng() % s.n());
        CHECK(seed_mutate(seed_mutate(s, j), j) == s);
    }
}

TEST_CASE("graph regularity and determinism") {
    for (const char* name : {"a2", "a3", "a4"}) {
        auto g = explore(initial_seed(preset_quiver(name)));
        const int n = g.nodes.front().n();
        for (size_t v = 0; v < g.nodes.size(); ++v) {
            int degree = 0;
            for (const auto& e : g.edges)
                if (e.from == static_cast<int>(v) || e.to == static_cast<int>(v)) ++degree;
            CHECK(degree == n);
        }
    }

    auto a = explore(initial_seed(preset_quiver("a3"))).to_json().dump();
    auto b = explore(initial_seed(preset_quiver("a3"))).to_json().dump();
    CHECK(a == b);

    ExploreOptions par;
    par.parallel = true;
    par.threads = 4;
    auto cpar = explore(initial_seed(preset_quiver("a3")), par).to_json().dump();
    CHECK(a == cpar);
}

TEST_CASE("seed serialization") {
    auto s = seed_mutate(initial_seed(preset_quiver("a3")), 1);
    CHECK(Seed::from_json(s.to_json()) == s);
}
