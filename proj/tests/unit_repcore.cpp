#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <nlohmann/json.hpp>

#include "clusterforge/repcore.hpp"

using namespace clusterforge;

namespace {

QuiverRep random_rep(const ContextPtr& ctx, std::mt19937_64& rng, int max_dim, uint32_t p) {
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = p;
    rep.dims.resize(ctx->n);
    for (auto& d : rep.dims) d = static_cast<int>(rng() % (max_dim + 1));
    for (const auto& ar : ctx->arrows)
        rep.arrow_maps.push_back(
            fp::Matrix::random(rep.dims[ar.target], rep.dims[ar.source], p, rng));
    return rep;
}

} // namespace

TEST_CASE("euler form") {
    auto kron = preset_context("kronecker");
    CHECK(euler_form(*kron, {1, 0}, {0, 1}) == -2);
    CHECK(euler_form(*kron, {1, 0}, {1, 0}) == 1);
    CHECK(euler_form(*kron, {0, 1}, {0, 1}) == 1);

    auto a3 = preset_context("a3");
    CHECK(euler_form(*a3, {1, 1, 1}, {1, 1, 1}) == 1);
    for (int i = 0; i < 3; ++i) {
        DimVec e(3, 0);
        e[i] = 1;
        CHECK(euler_form(*a3, e, e) == 1);
    }
    CHECK_THROWS_AS(euler_form(*a3, {1, 0}, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("projective and injective dimension vectors") {
    auto kron = preset_context("kronecker");
    CHECK(kron->dim_projective[0] == DimVec{1, 2});
    CHECK(kron->dim_projective[1] == DimVec{0, 1});
    CHECK(kron->dim_injective[0] == DimVec{1, 0});
    CHECK(kron->dim_injective[1] == DimVec{2, 1});

    for (const char* name : {"a2", "a3", "a4", "d4", "kronecker"}) {
        auto ctx = preset_context(name);
        for (int i = 0; i < ctx->n; ++i) {
            auto p = projective_rep(ctx, i, kDefaultPrime);
            auto inj = injective_rep(ctx, i, kDefaultPrime);
            CHECK(p.dim_vector() == ctx->dim_projective[i]);
            CHECK(inj.dim_vector() == ctx->dim_injective[i]);
            CHECK(is_exceptional(p));
            CHECK(is_exceptional(inj));
            // projectives have no extensions into anything
            CHECK(ext_dim(p, inj) == 0);
        }
    }
}

TEST_CASE("coxeter translate") {
    for (const char* name : {"a2", "a3", "a4", "d4", "kronecker"}) {
        auto ctx = preset_context(name);
        for (int j = 0; j < ctx->n; ++j) {
            DimVec lhs = coxeter_tau(*ctx, ctx->dim_projective[j]);
            DimVec expected = ctx->dim_injective[j];
            for (auto& v : expected) v = -v;
            CHECK(lhs == expected);
        }
        std::mt19937_64 rng(31337);
        for (int trial = 0; trial < 50; ++trial) {
            DimVec x(ctx->n), y(ctx->n);
            for (auto& v : x) v = static_cast<int64_t>(rng() % 9) - 4;
            for (auto& v : y) v = static_cast<int64_t>(rng() % 9) - 4;
            CHECK(euler_form(*ctx, x, coxeter_tau(*ctx, y)) == -euler_form(*ctx, y, x));
            CHECK(coxeter_tau(*ctx, coxeter_tau_inverse(*ctx, x)) == x);
        }
    }

    // Postprojective orbit on the Kronecker quiver: tau dim U^{n+2} == dim U^n.
    auto kron = preset_context("kronecker");
    for (int n = 0; n <= 6; ++n) {
        DimVec big{n + 2, n + 3};
        CHECK(coxeter_tau(*kron, big) == DimVec{n, n + 1});
    }
}

TEST_CASE("kronecker module fixtures") {
    auto ctx = preset_context("kronecker");
    auto u0 = kronecker_module(ctx, KroneckerKind::U, 0, 5);
    CHECK(u0.dims == std::vector<int>{0, 1});
    auto v0 = kronecker_module(ctx, KroneckerKind::V, 0, 5);
    CHECK(v0.dims == std::vector<int>{1, 0});
    auto w1 = kronecker_module(ctx, KroneckerKind::W, 1, 5);
    CHECK(w1.dims == std::vector<int>{1, 1});
    CHECK(w1.arrow_maps[0].at(0, 0) == 1);
    CHECK(w1.arrow_maps[1].at(0, 0) == 0);

    // U^1 is the projective P_1, U^0 = P_2 = S_2.
    auto u1 = kronecker_module(ctx, KroneckerKind::U, 1, kDefaultPrime);
    CHECK(u1.dim_vector() == ctx->dim_projective[0]);
    CHECK_THROWS_AS(kronecker_module(ctx, KroneckerKind::W, 0, 5), std::invalid_argument);
}

TEST_CASE("hom dimensions") {
    auto ctx = preset_context("kronecker");
    auto s2 = simple_rep(ctx, 1, kDefaultPrime);
    CHECK(hom_dim(s2, s2) == 1);

    auto u0 = kronecker_module(ctx, KroneckerKind::U, 0, kDefaultPrime);
    auto u1 = kronecker_module(ctx, KroneckerKind::U, 1, kDefaultPrime);
    CHECK(hom_dim(u0, u1) == 2);
    CHECK(euler_form(*ctx, u0.dim_vector(), u1.dim_vector()) + ext_dim(u0, u1) == 2);

    for (int n = 1; n <= 4; ++n) {
        auto un = kronecker_module(ctx, KroneckerKind::U, n, kDefaultPrime);
        CHECK(hom_dim(un, un) >= 1);
    }
}

TEST_CASE("ext dimensions") {
    auto ctx = preset_context("kronecker");
    auto s1 = simple_rep(ctx, 0, kDefaultPrime);
    auto s2 = simple_rep(ctx, 1, kDefaultPrime);
    CHECK(ext_dim(s1, s2) == 2);
    CHECK(ext_dim(s2, s1) == 0);

    for (int i = 0; i < 2; ++i) {
        auto p = projective_rep(ctx, i, kDefaultPrime);
        auto w = kronecker_module(ctx, KroneckerKind::W, 2, kDefaultPrime);
        CHECK(ext_dim(p, w) == 0);
        CHECK(ext_dim(p, s1) == 0);
    }

    auto w1 = kronecker_module(ctx, KroneckerKind::W, 1, kDefaultPrime);
    CHECK(ext_dim(w1, w1) == 1);
    CHECK_FALSE(is_rigid(w1));
}

TEST_CASE("hom minus ext equals euler form on random pairs") {
    std::mt19937_64 rng(2024);
    for (const char* name : {"a3", "kronecker", "d4"}) {
        auto ctx = preset_context(name);
        for (int trial = 0; trial < 70; ++trial) {
            auto m = random_rep(ctx, rng, 3, 101);
            auto n = random_rep(ctx, rng, 3, 101);
            int64_t h = hom_dim(m, n);
            int64_t e_cocycle = ext_dim_via_cocycle(m, n);
            CHECK(h - e_cocycle == euler_form(*ctx, m.dim_vector(), n.dim_vector()));
            CHECK(ext_dim(m, n) == e_cocycle);
        }
    }
}

TEST_CASE("cluster ext dimension") {
    auto ctx = preset_context("kronecker");
    auto sp1 = ClusterObject::shifted_projective(ctx, 0, kDefaultPrime);
    auto sp2 = ClusterObject::shifted_projective(ctx, 1, kDefaultPrime);
    CHECK(ext_dim_cluster(sp1, sp2) == 0);
    CHECK(ext_dim_cluster(sp1, sp1) == 0);

    auto u1 = ClusterObject::module(kronecker_module(ctx, KroneckerKind::U, 1, kDefaultPrime));
    CHECK(ext_dim_cluster(sp1, u1) == 1);
    CHECK(ext_dim_cluster(u1, sp1) == 1);

    auto s1 = simple_rep(ctx, 0, kDefaultPrime);
    auto s2 = simple_rep(ctx, 1, kDefaultPrime);
    CHECK(ext_dim_cluster(s1, s2) == ext_dim(s1, s2) + ext_dim(s2, s1));

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = ClusterObject::module(random_rep(ctx, rng, 3, 101));
        auto n = ClusterObject::module(random_rep(ctx, rng, 3, 101));
        CHECK(ext_dim_cluster(m, n) == ext_dim_cluster(n, m));
    }
}

TEST_CASE("extensions") {
    auto ctx = preset_context("kronecker");
    auto w1 = kronecker_module(ctx, KroneckerKind::W, 1, kDefaultPrime);
    auto u0 = kronecker_module(ctx, KroneckerKind::U, 0, kDefaultPrime);

    // zero cocycle gives the split extension
    auto split = build_extension(w1, u0, zero_cocycle(w1, u0));
    auto direct = direct_sum(u0, w1);
    CHECK(split.dim_vector() == direct.dim_vector());
    CHECK(hom_dim(split, split) == hom_dim(direct, direct));
    CHECK(ext_dim(split, split) == ext_dim(direct, direct));

    // the nonsplit extension of W^1(0) by U^0 is U^1
    CHECK(ext_dim(w1, u0) == 1);
    auto b = build_extension(w1, u0, nonsplit_cocycle(w1, u0));
    CHECK(b.dim_vector() == DimVec{1, 2});
    CHECK(hom_dim(b, b) == 1);
    CHECK(ext_dim(b, b) == 0);

    // a nonzero coboundary gives a representation isomorphic to the direct
    // sum: c_a = g_t N_a - M_a g_s for a random tuple g
    std::mt19937_64 cob_rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = kronecker_module(ctx, KroneckerKind::U, 1 + static_cast<int>(cob_rng() % 2),
                                  kDefaultPrime);
        auto n = kronecker_module(ctx, KroneckerKind::W, 1, kDefaultPrime);
        std::vector<fp::Matrix> g;
        for (int i = 0; i < ctx->n; ++i)
            g.push_back(fp::Matrix::random(m.dims[i], n.dims[i], kDefaultPrime, cob_rng));
        std::vector<fp::Matrix> cob;
        for (size_t a = 0; a < ctx->arrows.size(); ++a) {
            const Arrow& ar = ctx->arrows[a];
            cob.push_back(fp::add(fp::mul(g[ar.target], n.arrow_maps[a]),
                                  fp::neg(fp::mul(m.arrow_maps[a], g[ar.source]))));
        }
        auto split_ext = build_extension(n, m, cob);
        auto plain = direct_sum(m, n);
        CHECK(hom_dim(split_ext, split_ext) == hom_dim(plain, plain));
        CHECK(ext_dim(split_ext, split_ext) == ext_dim(plain, plain));
        CHECK(hom_dim(split_ext, plain) == hom_dim(plain, plain));
    }

    // dim additivity for random cocycles
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_rep(ctx, rng, 2, 101);
        auto n = random_rep(ctx, rng, 2, 101);
        std::vector<fp::Matrix> c;
        for (const auto& ar : ctx->arrows)
            c.push_back(fp::Matrix::random(m.dims[ar.target], n.dims[ar.source], 101, rng));
        auto e = build_extension(n, m, c);
        DimVec want = m.dim_vector();
        for (int i = 0; i < ctx->n; ++i) want[i] += n.dims[i];
        CHECK(e.dim_vector() == want);
    }

    CHECK_THROWS_AS(nonsplit_cocycle(u0, w1), std::invalid_argument); // Ext^1(U^0, W^1)=0
}

TEST_CASE("kernels and cokernels") {
    auto ctx = preset_context("kronecker");
    auto p1 = projective_rep(ctx, 0, kDefaultPrime);
    auto w1 = kronecker_module(ctx, KroneckerKind::W, 1, kDefaultPrime);

    auto maps = hom_basis(p1, w1);
    REQUIRE(maps.size() == 1);
    auto ker = kernel_rep(maps[0]);
    auto cok = cokernel_rep(maps[0]);
    CHECK(ker.dim_vector() == DimVec{0, 1}); // P_2 inside P_1
    CHECK(cok.dim_vector() == DimVec{0, 0}); // the map is onto

    auto zeta = hom_basis(w1, injective_rep(ctx, 0, kDefaultPrime));
    REQUIRE(zeta.size() == 1);
    CHECK(kernel_rep(zeta[0]).dim_vector() == DimVec{0, 1});
    CHECK(cokernel_rep(zeta[0]).dim_vector() == DimVec{0, 0});

    // composite sanity on a random morphism space
    auto a3 = preset_context("a3");
    auto m12 = interval_rep(a3, 0, 1, kDefaultPrime);
    auto s1 = simple_rep(a3, 0, kDefaultPrime);
    auto surj = hom_basis(m12, s1);
    REQUIRE(surj.size() == 1);
    CHECK(kernel_rep(surj[0]).dim_vector() == DimVec{0, 1, 0});
    CHECK(cokernel_rep(surj[0]).dim_vector() == DimVec{0, 0, 0});
}

TEST_CASE("rigidity and exceptionality") {
    auto ctx = preset_context("kronecker");
    for (int n = 0; n <= 4; ++n) {
        auto u = kronecker_module(ctx, KroneckerKind::U, n, kDefaultPrime);
        CHECK(is_exceptional(u));
        auto v = kronecker_module(ctx, KroneckerKind::V, n, kDefaultPrime);
        CHECK(is_exceptional(v));
    }
    auto w1 = kronecker_module(ctx, KroneckerKind::W, 1, kDefaultPrime);
    CHECK_FALSE(is_rigid(w1));
    for (int i = 0; i < 2; ++i) CHECK(is_exceptional(projective_rep(ctx, i, kDefaultPrime)));

    auto sp1 = ClusterObject::shifted_projective(ctx, 0, kDefaultPrime);
    CHECK(is_exceptional(sp1));
    auto mixed = sp1.direct_sum(ClusterObject::shifted_projective(ctx, 1, kDefaultPrime));
    CHECK(is_rigid(mixed));
    CHECK_FALSE(is_exceptional(mixed));
    CHECK(ClusterObject::zero(ctx, kDefaultPrime).is_zero_object());
}

TEST_CASE("positive roots") {
    auto a2 = preset_context("a2");
    auto roots2 = positive_roots(*a2, 4);
    CHECK(roots2 == std::vector<DimVec>{{0, 1}, {1, 0}, {1, 1}});

    auto a3 = preset_context("a3");
    CHECK(positive_roots(*a3, 4).size() == 6);

    auto a4 = preset_context("a4");
    CHECK(positive_roots(*a4, 4).size() == 10);

    auto d4 = preset_context("d4");
    CHECK(positive_roots(*d4, 4).size() == 12);

    for (int i = 0; i < a3->n; ++i) {
        DimVec alpha(a3->n, 0);
        alpha[i] = 1;
        CHECK(std::find(positive_roots(*a3, 4).begin(), positive_roots(*a3, 4).end(), alpha) !=
              positive_roots(*a3, 4).end());
    }
}

TEST_CASE("generic representations") {
    auto kron = preset_context("kronecker");
    auto m = generic_rep(kron, {1, 2}, kDefaultPrime);
    CHECK(hom_dim(m, m) == 1);
    CHECK(ext_dim(m, m) == 0);

    auto a3 = preset_context("a3");
    auto g = generic_rep(a3, {1, 1, 1}, kDefaultPrime);
    CHECK(is_exceptional(g));

    // d = alpha_i forces the simple module
    auto s = generic_rep(a3, {0, 1, 0}, kDefaultPrime);
    CHECK(s.dim_vector() == DimVec{0, 1, 0});
    CHECK(is_exceptional(s));

    CHECK_THROWS_AS(generic_rep(kron, {1, 1}, kDefaultPrime), std::invalid_argument);
}

TEST_CASE("injective and projective multiplicity decomposition") {
    auto ctx = preset_context("a3");
    DimVec dims(3, 0);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) dims[k] += (j + 1) * ctx->dim_injective[j][k];
    auto mult = injective_multiplicities(*ctx, dims);
    CHECK(mult == std::vector<int64_t>{1, 2, 3});

    DimVec pdims(3, 0);
    for (int k = 0; k < 3; ++k) pdims[k] += 2 * ctx->dim_projective[1][k] + ctx->dim_projective[2][k];
    auto pmult = projective_multiplicities(*ctx, pdims);
    CHECK(pmult == std::vector<int64_t>{0, 2, 1});

    CHECK_THROWS_AS(injective_multiplicities(*ctx, DimVec{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("representation serialization") {
    auto ctx = preset_context("kronecker");
    auto u2 = kronecker_module(ctx, KroneckerKind::U, 2, 7);
    auto back = rep_from_json(ctx, u2.to_json());
    CHECK(back.dims == u2.dims);
    CHECK(back.arrow_maps == u2.arrow_maps);
}
