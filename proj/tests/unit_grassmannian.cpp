#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "clusterforge/grassmannian.hpp"

using namespace clusterforge;

namespace {

ModuleFamily kronecker_family(const ContextPtr& ctx, KroneckerKind kind, int n) {
    return [ctx, kind, n](uint32_t p) { return kronecker_module(ctx, kind, n, p); };
}

} // namespace

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(5, 5, 7) == 1);
    CHECK(gaussian_binomial(3, 4, 7) == 0);
    // symmetry [m,e] == [m,m-e]
    for (int m = 0; m <= 6; ++m)
        for (int e = 0; e <= m; ++e)
            CHECK(gaussian_binomial(m, e, 5) == gaussian_binomial(m, m - e, 5));
}

TEST_CASE("subspace enumeration") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int m = 0; m <= 4; ++m) {
            for (int e = 0; e <= m; ++e) {
                SubspaceEnumerator en(p, m, e);
                fp::Matrix b;
                std::set<std::vector<uint32_t>> seen;
                int64_t count = 0;
                while (en.next(b)) {
                    ++count;
                    CHECK(b.rows == e);
                    CHECK(b.cols == m);
                    CHECK(fp::rank(b) == e);
                    CHECK(seen.insert(b.a).second); // echelon form is canonical
                }
                CHECK(Int(count) == gaussian_binomial(m, e, p));
            }
        }
    }
}

TEST_CASE("counting subrepresentations") {
    auto ctx = preset_context("kronecker");

    auto u1 = kronecker_module(ctx, KroneckerKind::U, 1, 5);
    CHECK(count_subreps(u1, {0, 0}) == 1);
    CHECK(count_subreps(u1, {1, 2}) == 1);
    // every line in the socle is a subrepresentation: q + 1 of them
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        auto rep = kronecker_module(ctx, KroneckerKind::U, 1, p);
        CHECK(count_subreps(rep, {0, 1}) == Int(p) + 1);
    }
    // W^1((1:0)) has no subrepresentation of dimension (1,0)
    for (uint32_t p : {2u, 3u, 5u, 13u}) {
        auto w = kronecker_module(ctx, KroneckerKind::W, 1, p);
        CHECK(count_subreps(w, {1, 0}) == 0);
        CHECK(count_subreps(w, {1, 1}) == 1);
    }

    CHECK_THROWS_AS(count_subreps(u1, {2, 0}), std::invalid_argument);
    auto w2 = kronecker_module(ctx, KroneckerKind::W, 2, 2);
    CHECK_THROWS_AS(count_subreps(w2, {1, 1}, 1), BudgetExceededError);
}

TEST_CASE("counting against naive full enumeration") {
    // Cross-check the vertex-cover strategy against enumerating every tuple.
    auto ctx = preset_context("a3");
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 12; ++trial) {
        QuiverRep rep;
        rep.ctx = ctx;
        rep.p = trial % 2 ? 3 : 2;
        rep.dims = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                    static_cast<int>(rng() % 3)};
        for (const auto& ar : ctx->arrows)
            rep.arrow_maps.push_back(
                fp::Matrix::random(rep.dims[ar.target], rep.dims[ar.source], rep.p, rng));

        DimVec e(3);
        for (int i = 0; i < 3; ++i) e[i] = static_cast<int64_t>(rng() % (rep.dims[i] + 1));

        // naive: iterate all subspace triples and test every arrow
        Int naive = 0;
        SubspaceEnumerator e0(rep.p, rep.dims[0], static_cast<int>(e[0]));
        fp::Matrix b0, b1, b2;
        while (e0.next(b0)) {
            SubspaceEnumerator e1(rep.p, rep.dims[1], static_cast<int>(e[1]));
            while (e1.next(b1)) {
                SubspaceEnumerator e2(rep.p, rep.dims[2], static_cast<int>(e[2]));
                while (e2.next(b2)) {
                    const fp::Matrix* bases[3] = {&b0, &b1, &b2};
                    bool ok = true;
                    for (size_t a = 0; a < ctx->arrows.size() && ok; ++a) {
                        const Arrow& ar = ctx->arrows[a];
                        fp::Matrix mapped =
                            fp::mul(rep.arrow_maps[a], fp::transpose(*bases[ar.source]));
                        fp::Matrix tgt = *bases[ar.target];
                        std::vector<int> piv = fp::rref(tgt);
                        ok = fp::rows_contained(tgt, piv, fp::transpose(mapped));
                    }
                    if (ok) naive += 1;
                }
            }
        }
        CHECK(count_subreps(rep, e) == naive);
    }
}

TEST_CASE("multi-stratum counting agrees with the single-stratum path") {
    auto ctx = preset_context("kronecker");
    for (uint32_t p : {2u, 3u, 5u}) {
        auto u3 = kronecker_module(ctx, KroneckerKind::U, 3, p);
        std::vector<DimVec> strata;
        for (int64_t e1 = 0; e1 <= 3; ++e1)
            for (int64_t e2 = 0; e2 <= 4; ++e2) strata.push_back({e1, e2});
        auto multi = count_subreps_multi(u3, strata);
        auto multi_mt = count_subreps_multi(u3, strata, 10'000'000, 3);
        for (size_t i = 0; i < strata.size(); ++i) {
            CHECK(multi[i] == count_subreps(u3, strata[i]));
            CHECK(multi_mt[i] == multi[i]);
        }
    }
}

TEST_CASE("euler characteristics") {
    auto ctx = preset_context("kronecker");

    auto fam_u1 = kronecker_family(ctx, KroneckerKind::U, 1);
    DimVec e{0, 1};
    auto cert = euler_char_certified(fam_u1, e, default_degree_bound({1, 2}, e));
    CHECK(cert.chi == 2); // from q + 1
    CHECK(cert.polynomial.coefficients == std::vector<Int>{1, 1});

    auto fam_w1 = kronecker_family(ctx, KroneckerKind::W, 1);
    CHECK(euler_char(fam_w1, {1, 1}, default_degree_bound({1, 1}, {1, 1})) == 1);
    CHECK(euler_char(fam_w1, {0, 0}, 0) == 1);
    CHECK(euler_char(fam_w1, {1, 0}, default_degree_bound({1, 1}, {1, 0})) == 0);

    // chi(Gr_e(U^2)): strata of the full Grassmannian of the socle
    auto fam_u2 = kronecker_family(ctx, KroneckerKind::U, 2);
    CHECK(euler_char(fam_u2, {0, 1}, default_degree_bound({2, 3}, {0, 1})) == 3);
    CHECK(euler_char(fam_u2, {1, 2}, default_degree_bound({2, 3}, {1, 2})) == 2);
}

TEST_CASE("interpolation stability across disjoint prime sets") {
    auto ctx = preset_context("kronecker");
    for (int n = 0; n <= 3; ++n) {
        auto fam = kronecker_family(ctx, KroneckerKind::U, n);
        DimVec dims{n, n + 1};
        for (int64_t e1 = 0; e1 <= n; ++e1) {
            for (int64_t e2 = 0; e2 <= n + 1; ++e2) {
                DimVec e{e1, e2};
                ChiOptions a, b;
                b.skip_primes = 6;
                int64_t bound = default_degree_bound(dims, e);
                CHECK(euler_char(fam, e, bound, a) == euler_char(fam, e, bound, b));
            }
        }
    }
}

TEST_CASE("euler characteristic multiplicativity over direct sums") {
    // chi_c(Gr_g(M + N)) == sum_{e+f=g} chi_c(Gr_e(M)) chi_c(Gr_f(N)).
    // Raw point counts do not satisfy this (Gr_1(k^2) has q+1 points); the
    // identity holds at q = 1.
    auto ctx = preset_context("kronecker");
    ModuleFamily m_fam = kronecker_family(ctx, KroneckerKind::U, 1);
    ModuleFamily n_fam = kronecker_family(ctx, KroneckerKind::W, 1);
    ModuleFamily sum_fam = [&](uint32_t p) { return direct_sum(m_fam(p), n_fam(p)); };
    DimVec mdims{1, 2}, ndims{1, 1}, sdims{2, 3};
    for (int64_t g1 = 0; g1 <= 2; ++g1) {
        for (int64_t g2 = 0; g2 <= 3; ++g2) {
            DimVec g{g1, g2};
            int64_t lhs = euler_char(sum_fam, g, default_degree_bound(sdims, g));
            int64_t rhs = 0;
            for (int64_t e1 = 0; e1 <= g1; ++e1)
                for (int64_t e2 = 0; e2 <= g2; ++e2) {
                    DimVec e{e1, e2}, f{g1 - e1, g2 - e2};
                    if (e[0] > mdims[0] || e[1] > mdims[1]) continue;
                    if (f[0] > ndims[0] || f[1] > ndims[1]) continue;
                    rhs += euler_char(m_fam, e, default_degree_bound(mdims, e)) *
                           euler_char(n_fam, f, default_degree_bound(ndims, f));
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("duality between U and V families") {
    auto ctx = preset_context("kronecker");
    for (int n = 0; n <= 3; ++n) {
        for (uint32_t p : {2u, 3u, 5u}) {
            auto u = kronecker_module(ctx, KroneckerKind::U, n, p);
            auto v = kronecker_module(ctx, KroneckerKind::V, n, p);
            for (int64_t e1 = 0; e1 <= n; ++e1)
                for (int64_t e2 = 0; e2 <= n + 1; ++e2)
                    CHECK(count_subreps(u, {e1, e2}) ==
                          count_subreps(v, {n + 1 - e2, n - e1}));
        }
    }
}

TEST_CASE("inconsistent family is rejected") {
    auto ctx = preset_context("kronecker");
    // dimension vector flips between primes
    ModuleFamily bad = [ctx](uint32_t p) {
        return kronecker_module(ctx, KroneckerKind::U, p == 2 ? 1 : 2, p);
    };
    CHECK_THROWS_AS(euler_char(bad, {0, 1}, 4), NonIntegralInterpolationError);

    // same dimensions but a rank jump at p = 2: the count is not polynomial
    ModuleFamily flaky = [ctx](uint32_t p) {
        auto w = kronecker_module(ctx, KroneckerKind::W, 1, p);
        if (p == 2) w.arrow_maps[0].at(0, 0) = 0; // degenerate only mod 2
        return w;
    };
    CHECK_THROWS_AS(euler_char(flaky, {1, 0}, 3), NonIntegralInterpolationError);
}
