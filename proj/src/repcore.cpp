#include "clusterforge/repcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace clusterforge {

namespace {

IntMatrix int_identity(int n) {
    IntMatrix m(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    int n = static_cast<int>(a.size());
    IntMatrix r(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IntMatrix int_transpose(const IntMatrix& a) {
    int n = static_cast<int>(a.size());
    IntMatrix r(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[j][i] = a[i][j];
    return r;
}

DimVec int_apply(const IntMatrix& a, const DimVec& v) {
    int n = static_cast<int>(a.size());
    DimVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
    return r;
}

void require_same_context(const QuiverRep& m, const QuiverRep& n) {
    if (m.ctx != n.ctx || m.p != n.p)
        throw std::invalid_argument("representations live over different contexts");
}

} // namespace

ContextPtr make_context(const QuiverSpec& q) {
    if (q.has_loops_or_two_cycles())
        throw std::invalid_argument("context requires a quiver without loops or 2-cycles");
    if (!q.is_acyclic())
        throw std::invalid_argument("context requires an acyclic quiver");
    auto ctx = std::make_shared<QuiverAlgebraContext>();
    ctx->quiver = q;
    ctx->n = q.n;
    ctx->arrows = q.expanded_arrows();

    IntMatrix adj(q.n, std::vector<int64_t>(q.n, 0));
    for (const auto& a : ctx->arrows) adj[a.source][a.target] += 1;
    ctx->euler = int_identity(q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) ctx->euler[i][j] -= adj[i][j];

    // E^{-1} = sum_k A^k counts paths; A is nilpotent on an acyclic quiver.
    ctx->euler_inverse = int_identity(q.n);
    IntMatrix power = adj;
    for (int k = 1; k < q.n; ++k) {
        for (int i = 0; i < q.n; ++i)
            for (int j = 0; j < q.n; ++j) ctx->euler_inverse[i][j] += power[i][j];
        power = int_mul(power, adj);
    }

    IntMatrix phi = int_mul(ctx->euler_inverse, int_transpose(ctx->euler));
    for (auto& row : phi)
        for (auto& v : row) v = -v;
    ctx->coxeter = std::move(phi);

    for (int i = 0; i < q.n; ++i) {
        DimVec p(q.n), inj(q.n);
        for (int j = 0; j < q.n; ++j) {
            p[j] = ctx->euler_inverse[i][j];
            inj[j] = ctx->euler_inverse[j][i];
        }
        ctx->dim_projective.push_back(std::move(p));
        ctx->dim_injective.push_back(std::move(inj));
    }

    for (int j = 0; j < q.n; ++j) {
        DimVec lhs = int_apply(ctx->coxeter, ctx->dim_projective[j]);
        for (int i = 0; i < q.n; ++i)
            if (lhs[i] != -ctx->dim_injective[j][i])
                throw std::logic_error("coxeter map fails tau(dim P_j) == -dim I_j");
    }
    return ctx;
}

ContextPtr preset_context(const std::string& name) { return make_context(preset_quiver(name)); }

int64_t euler_form(const QuiverAlgebraContext& ctx, const DimVec& d, const DimVec& e) {
    if (static_cast<int>(d.size()) != ctx.n || static_cast<int>(e.size()) != ctx.n)
        throw std::invalid_argument("euler_form: length mismatch");
    int64_t total = 0;
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) total += d[i] * ctx.euler[i][j] * e[j];
    return total;
}

DimVec coxeter_tau(const QuiverAlgebraContext& ctx, const DimVec& e) {
    return int_apply(ctx.coxeter, e);
}

DimVec coxeter_tau_inverse(const QuiverAlgebraContext& ctx, const DimVec& e) {
    // Phi^{-1} = -E^{-T} E.
    IntMatrix inv = int_mul(int_transpose(ctx.euler_inverse), ctx.euler);
    for (auto& row : inv)
        for (auto& v : row) v = -v;
    return int_apply(inv, e);
}

int64_t QuiverRep::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), int64_t{0});
}

void QuiverRep::validate() const {
    if (!ctx) throw std::invalid_argument("representation without context");
    if (static_cast<int>(dims.size()) != ctx->n)
        throw std::invalid_argument("dims length mismatch");
    if (arrow_maps.size() != ctx->arrows.size())
        throw std::invalid_argument("arrow map count mismatch");
    for (size_t a = 0; a < arrow_maps.size(); ++a) {
        const Arrow& ar = ctx->arrows[a];
        if (arrow_maps[a].rows != dims[ar.target] || arrow_maps[a].cols != dims[ar.source])
            throw std::invalid_argument("arrow map shape mismatch");
        if (arrow_maps[a].p != p) throw std::invalid_argument("arrow map modulus mismatch");
    }
}

nlohmann::json QuiverRep::to_json() const {
    nlohmann::json arrows = nlohmann::json::array();
    for (size_t a = 0; a < arrow_maps.size(); ++a) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < arrow_maps[a].rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < arrow_maps[a].cols; ++j) row.push_back(arrow_maps[a].at(i, j));
            rows.push_back(std::move(row));
        }
        arrows.push_back({{"source", ctx->arrows[a].source + 1},
                          {"target", ctx->arrows[a].target + 1},
                          {"matrix", std::move(rows)}});
    }
    nlohmann::json j;
    j["p"] = p;
    j["dims"] = dims;
    j["arrows"] = std::move(arrows);
    return j;
}

QuiverRep rep_from_json(const ContextPtr& ctx, const nlohmann::json& j) {
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = j.at("p").get<uint32_t>();
    rep.dims = j.at("dims").get<std::vector<int>>();
    const auto& arrows = j.at("arrows");
    if (arrows.size() != ctx->arrows.size())
        throw std::invalid_argument("rep_from_json: arrow count mismatch");
    for (size_t a = 0; a < ctx->arrows.size(); ++a) {
        const auto& item = arrows[a];
        if (item.at("source").get<int>() - 1 != ctx->arrows[a].source ||
            item.at("target").get<int>() - 1 != ctx->arrows[a].target)
            throw std::invalid_argument("rep_from_json: arrow order mismatch");
        fp::Matrix m(rep.dims[ctx->arrows[a].target], rep.dims[ctx->arrows[a].source], rep.p);
        const auto& rows = item.at("matrix");
        for (int i = 0; i < m.rows; ++i)
            for (int jj = 0; jj < m.cols; ++jj)
                m.at(i, jj) = rows.at(i).at(jj).get<uint32_t>() % rep.p;
        rep.arrow_maps.push_back(std::move(m));
    }
    rep.validate();
    return rep;
}

QuiverRep zero_rep(const ContextPtr& ctx, uint32_t p) {
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = p;
    rep.dims.assign(ctx->n, 0);
    for (const auto& a : ctx->arrows) rep.arrow_maps.emplace_back(0, 0, p), (void)a;
    return rep;
}

QuiverRep simple_rep(const ContextPtr& ctx, int i, uint32_t p) {
    QuiverRep rep = zero_rep(ctx, p);
    rep.dims[i] = 1;
    for (size_t a = 0; a < ctx->arrows.size(); ++a)
        rep.arrow_maps[a] = fp::Matrix(rep.dims[ctx->arrows[a].target],
                                       rep.dims[ctx->arrows[a].source], p);
    return rep;
}

namespace {

// All paths of the acyclic quiver, as arrow-index sequences, grouped by
// (start, end) and sorted for determinism.
using PathTable = std::map<std::pair<int, int>, std::vector<std::vector<int>>>;

PathTable all_paths(const QuiverAlgebraContext& ctx) {
    PathTable table;
    for (int v = 0; v < ctx.n; ++v) table[{v, v}].push_back({});
    // Repeatedly extend by one arrow; acyclicity bounds path length by n-1.
    for (int len = 1; len < ctx.n; ++len) {
        for (int start = 0; start < ctx.n; ++start) {
            for (size_t a = 0; a < ctx.arrows.size(); ++a) {
                auto it = table.find({start, ctx.arrows[a].source});
                if (it == table.end()) continue;
                for (const auto& path : it->second) {
                    if (static_cast<int>(path.size()) != len - 1) continue;
                    auto extended = path;
                    extended.push_back(static_cast<int>(a));
                    table[{start, ctx.arrows[a].target}].push_back(std::move(extended));
                }
            }
        }
    }
    for (auto& [key, paths] : table) std::sort(paths.begin(), paths.end());
    return table;
}

} // namespace

QuiverRep projective_rep(const ContextPtr& ctx, int i, uint32_t p) {
    PathTable paths = all_paths(*ctx);
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = p;
    rep.dims.resize(ctx->n);
    for (int j = 0; j < ctx->n; ++j)
        rep.dims[j] = static_cast<int>(paths[{i, j}].size());
    for (size_t a = 0; a < ctx->arrows.size(); ++a) {
        const Arrow& ar = ctx->arrows[a];
        const auto& src = paths[{i, ar.source}];
        const auto& tgt = paths[{i, ar.target}];
        fp::Matrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()), p);
        for (size_t c = 0; c < src.size(); ++c) {
            auto extended = src[c];
            extended.push_back(static_cast<int>(a));
            auto it = std::find(tgt.begin(), tgt.end(), extended);
            m.at(static_cast<int>(it - tgt.begin()), static_cast<int>(c)) = 1 % p;
        }
        rep.arrow_maps.push_back(std::move(m));
    }
    return rep;
}

QuiverRep injective_rep(const ContextPtr& ctx, int i, uint32_t p) {
    PathTable paths = all_paths(*ctx);
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = p;
    rep.dims.resize(ctx->n);
    for (int j = 0; j < ctx->n; ++j)
        rep.dims[j] = static_cast<int>(paths[{j, i}].size());
    for (size_t a = 0; a < ctx->arrows.size(); ++a) {
        const Arrow& ar = ctx->arrows[a];
        const auto& src = paths[{ar.source, i}];
        const auto& tgt = paths[{ar.target, i}];
        fp::Matrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()), p);
        // A path from source(a) to i maps to its tail if it starts with a.
        for (size_t c = 0; c < src.size(); ++c) {
            if (src[c].empty() || src[c].front() != static_cast<int>(a)) continue;
            std::vector<int> tail(src[c].begin() + 1, src[c].end());
            auto it = std::find(tgt.begin(), tgt.end(), tail);
            m.at(static_cast<int>(it - tgt.begin()), static_cast<int>(c)) = 1 % p;
        }
        rep.arrow_maps.push_back(std::move(m));
    }
    return rep;
}

QuiverRep interval_rep(const ContextPtr& ctx, int a, int b, uint32_t p) {
    for (size_t k = 0; k < ctx->arrows.size(); ++k)
        if (ctx->arrows[k].source != static_cast<int>(k) ||
            ctx->arrows[k].target != static_cast<int>(k) + 1)
            throw std::invalid_argument("interval_rep: quiver is not a linear A_n");
    if (a < 0 || b >= ctx->n || a > b) throw std::invalid_argument("interval_rep: bad interval");
    QuiverRep rep = zero_rep(ctx, p);
    for (int v = a; v <= b; ++v) rep.dims[v] = 1;
    for (size_t k = 0; k < ctx->arrows.size(); ++k) {
        const Arrow& ar = ctx->arrows[k];
        fp::Matrix m(rep.dims[ar.target], rep.dims[ar.source], p);
        if (m.rows == 1 && m.cols == 1) m.at(0, 0) = 1 % p;
        rep.arrow_maps[k] = std::move(m);
    }
    return rep;
}

QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n) {
    require_same_context(m, n);
    QuiverRep r;
    r.ctx = m.ctx;
    r.p = m.p;
    r.dims.resize(m.dims.size());
    for (size_t i = 0; i < m.dims.size(); ++i) r.dims[i] = m.dims[i] + n.dims[i];
    for (size_t a = 0; a < m.arrow_maps.size(); ++a) {
        const Arrow& ar = m.ctx->arrows[a];
        fp::Matrix blk(r.dims[ar.target], r.dims[ar.source], r.p);
        const fp::Matrix& ma = m.arrow_maps[a];
        const fp::Matrix& na = n.arrow_maps[a];
        for (int i = 0; i < ma.rows; ++i)
            for (int j = 0; j < ma.cols; ++j) blk.at(i, j) = ma.at(i, j);
        for (int i = 0; i < na.rows; ++i)
            for (int j = 0; j < na.cols; ++j) blk.at(ma.rows + i, ma.cols + j) = na.at(i, j);
        r.arrow_maps.push_back(std::move(blk));
    }
    return r;
}

QuiverRep kronecker_module(const ContextPtr& ctx, KroneckerKind kind, int n, uint32_t p,
                           std::pair<uint32_t, uint32_t> lambda) {
    if (ctx->n != 2 || ctx->arrows.size() != 2 || ctx->arrows[0].source != 0 ||
        ctx->arrows[0].target != 1 || ctx->arrows[1].source != 0 || ctx->arrows[1].target != 1)
        throw std::invalid_argument("kronecker_module: context is not the Kronecker quiver");
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = p;
    switch (kind) {
        case KroneckerKind::U: {
            if (n < 0) throw std::invalid_argument("kronecker_module: U^n needs n >= 0");
            rep.dims = {n, n + 1};
            fp::Matrix alpha(n + 1, n, p), beta(n + 1, n, p);
            for (int i = 0; i < n; ++i) {
                alpha.at(i, i) = 1 % p;
                beta.at(i + 1, i) = 1 % p;
            }
            rep.arrow_maps = {alpha, beta};
            break;
        }
        case KroneckerKind::V: {
            if (n < 0) throw std::invalid_argument("kronecker_module: V^n needs n >= 0");
            rep.dims = {n + 1, n};
            fp::Matrix alpha(n, n + 1, p), beta(n, n + 1, p);
            for (int i = 0; i < n; ++i) {
                alpha.at(i, i) = 1 % p;
                beta.at(i, i + 1) = 1 % p;
            }
            rep.arrow_maps = {alpha, beta};
            break;
        }
        case KroneckerKind::W: {
            if (n < 1) throw std::invalid_argument("kronecker_module: W^n needs n >= 1");
            rep.dims = {n, n};
            fp::Matrix alpha(n, n, p), beta(n, n, p);
            if (lambda.first != 0) {
                if (lambda.first % p == 0)
                    throw std::invalid_argument("kronecker_module: lambda degenerates mod p");
                uint32_t lam = static_cast<uint32_t>(
                    (static_cast<uint64_t>(lambda.second % p) * fp::inv_mod(lambda.first % p, p)) % p);
                for (int i = 0; i < n; ++i) {
                    alpha.at(i, i) = 1 % p;
                    beta.at(i, i) = lam;
                    if (i + 1 < n) beta.at(i, i + 1) = 1 % p;
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    beta.at(i, i) = 1 % p;
                    if (i + 1 < n) alpha.at(i, i + 1) = 1 % p;
                }
            }
            rep.arrow_maps = {alpha, beta};
            break;
        }
    }
    return rep;
}

namespace {

// Hom(M, N) is the kernel of the commuting-square constraint map
// (f_i) -> (N_a f_{s(a)} - f_{t(a)} M_a)_a. Variables are the entries of the
// f_i, equations come per arrow.
fp::Matrix hom_constraint_matrix(const QuiverRep& m, const QuiverRep& n) {
    const auto& arrows = m.ctx->arrows;
    std::vector<int> offset(m.dims.size() + 1, 0);
    for (size_t i = 0; i < m.dims.size(); ++i)
        offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
    int vars = offset.back();
    int rows = 0;
    for (const auto& a : arrows) rows += n.dims[a.target] * m.dims[a.source];
    fp::Matrix c(rows, vars, m.p);
    int row = 0;
    for (size_t a = 0; a < arrows.size(); ++a) {
        int s = arrows[a].source, t = arrows[a].target;
        const fp::Matrix& na = n.arrow_maps[a];
        const fp::Matrix& ma = m.arrow_maps[a];
        for (int r = 0; r < n.dims[t]; ++r) {
            for (int col = 0; col < m.dims[s]; ++col) {
                // + sum_k N_a[r,k] f_s[k,col]
                for (int k = 0; k < n.dims[s]; ++k) {
                    int var = offset[s] + k * m.dims[s] + col;
                    c.at(row, var) = (c.at(row, var) + na.at(r, k)) % m.p;
                }
                // - sum_k f_t[r,k] M_a[k,col]
                for (int k = 0; k < m.dims[t]; ++k) {
                    int var = offset[t] + r * m.dims[t] + k;
                    uint32_t v = ma.at(k, col) % m.p;
                    c.at(row, var) = (c.at(row, var) + (m.p - v)) % m.p;
                }
                ++row;
            }
        }
    }
    return c;
}

} // namespace

int64_t hom_dim(const QuiverRep& m, const QuiverRep& n) {
    require_same_context(m, n);
    fp::Matrix c = hom_constraint_matrix(m, n);
    return c.cols - fp::rank(c);
}

std::vector<RepMorphism> hom_basis(const QuiverRep& m, const QuiverRep& n) {
    require_same_context(m, n);
    fp::Matrix c = hom_constraint_matrix(m, n);
    fp::Matrix k = fp::kernel_basis(c);
    std::vector<int> offset(m.dims.size() + 1, 0);
    for (size_t i = 0; i < m.dims.size(); ++i)
        offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
    std::vector<RepMorphism> basis;
    for (int col = 0; col < k.cols; ++col) {
        RepMorphism f;
        f.source = m;
        f.target = n;
        for (size_t i = 0; i < m.dims.size(); ++i) {
            fp::Matrix comp(n.dims[i], m.dims[i], m.p);
            for (int r = 0; r < n.dims[i]; ++r)
                for (int cc = 0; cc < m.dims[i]; ++cc)
                    comp.at(r, cc) = k.at(offset[i] + r * m.dims[i] + cc, col);
            f.components.push_back(std::move(comp));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

int64_t ext_dim(const QuiverRep& m, const QuiverRep& n) {
    int64_t h = hom_dim(m, n);
    int64_t e = h - euler_form(*m.ctx, m.dim_vector(), n.dim_vector());
    if (e < 0) throw std::logic_error("ext_dim: negative value, internal inconsistency");
    return e;
}

int64_t ext_dim_via_cocycle(const QuiverRep& m, const QuiverRep& n) {
    require_same_context(m, n);
    fp::Matrix c = hom_constraint_matrix(m, n);
    return c.rows - fp::rank(c);
}

QuiverRep build_extension(const QuiverRep& n, const QuiverRep& m,
                          const std::vector<fp::Matrix>& cocycle) {
    require_same_context(n, m);
    if (cocycle.size() != m.arrow_maps.size())
        throw std::invalid_argument("build_extension: cocycle length mismatch");
    QuiverRep b;
    b.ctx = m.ctx;
    b.p = m.p;
    b.dims.resize(m.dims.size());
    for (size_t i = 0; i < m.dims.size(); ++i) b.dims[i] = m.dims[i] + n.dims[i];
    for (size_t a = 0; a < m.arrow_maps.size(); ++a) {
        const Arrow& ar = m.ctx->arrows[a];
        const fp::Matrix& ma = m.arrow_maps[a];
        const fp::Matrix& na = n.arrow_maps[a];
        const fp::Matrix& ca = cocycle[a];
        if (ca.rows != m.dims[ar.target] || ca.cols != n.dims[ar.source])
            throw std::invalid_argument("build_extension: cocycle shape mismatch");
        fp::Matrix blk(b.dims[ar.target], b.dims[ar.source], b.p);
        for (int i = 0; i < ma.rows; ++i)
            for (int j = 0; j < ma.cols; ++j) blk.at(i, j) = ma.at(i, j);
        for (int i = 0; i < ca.rows; ++i)
            for (int j = 0; j < ca.cols; ++j) blk.at(i, ma.cols + j) = ca.at(i, j);
        for (int i = 0; i < na.rows; ++i)
            for (int j = 0; j < na.cols; ++j) blk.at(ma.rows + i, ma.cols + j) = na.at(i, j);
        b.arrow_maps.push_back(std::move(blk));
    }
    return b;
}

std::vector<fp::Matrix> zero_cocycle(const QuiverRep& n, const QuiverRep& m) {
    std::vector<fp::Matrix> c;
    for (const auto& ar : m.ctx->arrows)
        c.emplace_back(m.dims[ar.target], n.dims[ar.source], m.p);
    return c;
}

std::vector<fp::Matrix> nonsplit_cocycle(const QuiverRep& n, const QuiverRep& m) {
    require_same_context(n, m);
    const auto& arrows = m.ctx->arrows;
    // Coboundary map (g_i: N_i -> M_i) -> (g_t N_a - M_a g_s)_a; a cocycle
    // yields a split extension iff it lies in the image.
    std::vector<int> goffset(m.dims.size() + 1, 0);
    for (size_t i = 0; i < m.dims.size(); ++i)
        goffset[i + 1] = goffset[i] + m.dims[i] * n.dims[i];
    std::vector<int> coffset(arrows.size() + 1, 0);
    for (size_t a = 0; a < arrows.size(); ++a)
        coffset[a + 1] = coffset[a] + m.dims[arrows[a].target] * n.dims[arrows[a].source];
    fp::Matrix d(coffset.back(), goffset.back(), m.p);
    for (size_t a = 0; a < arrows.size(); ++a) {
        int s = arrows[a].source, t = arrows[a].target;
        const fp::Matrix& na = n.arrow_maps[a];
        const fp::Matrix& ma = m.arrow_maps[a];
        for (int r = 0; r < m.dims[t]; ++r) {
            for (int col = 0; col < n.dims[s]; ++col) {
                int row = coffset[a] + r * n.dims[s] + col;
                for (int k = 0; k < n.dims[t]; ++k) {
                    int var = goffset[t] + r * n.dims[t] + k;
                    d.at(row, var) = (d.at(row, var) + na.at(k, col)) % m.p;
                }
                for (int k = 0; k < m.dims[s]; ++k) {
                    int var = goffset[s] + k * n.dims[s] + col;
                    uint32_t v = ma.at(r, k) % m.p;
                    d.at(row, var) = (d.at(row, var) + (m.p - v)) % m.p;
                }
            }
        }
    }
    fp::Matrix image = fp::row_space_basis(fp::transpose(d));
    fp::Matrix image_copy = image;
    std::vector<int> pivots = fp::rref(image_copy);
    for (int k = 0; k < coffset.back(); ++k) {
        fp::Matrix e(1, coffset.back(), m.p);
        e.at(0, k) = 1 % m.p;
        if (fp::rows_contained(image_copy, pivots, e)) continue;
        std::vector<fp::Matrix> cocycle = zero_cocycle(n, m);
        for (size_t a = 0; a < arrows.size(); ++a) {
            if (k < coffset[a] || k >= coffset[a + 1]) continue;
            int local = k - coffset[a];
            int r = local / n.dims[arrows[a].source];
            int col = local % n.dims[arrows[a].source];
            cocycle[a].at(r, col) = 1 % m.p;
        }
        return cocycle;
    }
    throw std::invalid_argument("nonsplit_cocycle: Ext^1(N, M) is zero");
}

QuiverRep kernel_rep(const RepMorphism& f) {
    const QuiverRep& m = f.source;
    QuiverRep k;
    k.ctx = m.ctx;
    k.p = m.p;
    k.dims.resize(m.dims.size());
    std::vector<fp::Matrix> bases;
    for (size_t i = 0; i < m.dims.size(); ++i) {
        fp::Matrix b = fp::kernel_basis(f.components[i]); // columns span ker f_i
        k.dims[i] = b.cols;
        bases.push_back(std::move(b));
    }
    for (size_t a = 0; a < m.arrow_maps.size(); ++a) {
        const Arrow& ar = m.ctx->arrows[a];
        fp::Matrix mapped = fp::mul(m.arrow_maps[a], bases[ar.source]);
        fp::Matrix coords;
        if (!fp::solve(bases[ar.target], mapped, coords))
            throw std::logic_error("kernel_rep: kernel not arrow-stable");
        k.arrow_maps.push_back(std::move(coords));
    }
    return k;
}

QuiverRep cokernel_rep(const RepMorphism& f) {
    const QuiverRep& n = f.target;
    QuiverRep c;
    c.ctx = n.ctx;
    c.p = n.p;
    c.dims.resize(n.dims.size());
    std::vector<fp::Matrix> proj;      // pi_i: N_i -> C_i
    std::vector<std::vector<int>> sections; // standard vectors giving a basis of C_i
    for (size_t i = 0; i < n.dims.size(); ++i) {
        fp::Matrix image = fp::transpose(f.components[i]);
        std::vector<int> pivots = fp::rref(image);
        std::vector<bool> is_pivot(n.dims[i], false);
        for (int col : pivots) is_pivot[col] = true;
        std::vector<int> free_cols;
        for (int col = 0; col < n.dims[i]; ++col)
            if (!is_pivot[col]) free_cols.push_back(col);
        c.dims[i] = static_cast<int>(free_cols.size());
        // pi(v): reduce v against the image rows, then read free coordinates.
        fp::Matrix pi(c.dims[i], n.dims[i], n.p);
        for (int col = 0; col < n.dims[i]; ++col) {
            std::vector<uint32_t> v(n.dims[i], 0);
            v[col] = 1 % n.p;
            for (size_t r = 0; r < pivots.size(); ++r) {
                uint64_t fcoef = v[pivots[r]];
                if (fcoef == 0) continue;
                uint64_t mf = n.p - fcoef;
                for (int j = 0; j < n.dims[i]; ++j)
                    v[j] = static_cast<uint32_t>((v[j] + mf * image.at(static_cast<int>(r), j)) % n.p);
            }
            for (size_t idx = 0; idx < free_cols.size(); ++idx)
                pi.at(static_cast<int>(idx), col) = v[free_cols[idx]];
        }
        proj.push_back(std::move(pi));
        sections.push_back(std::move(free_cols));
    }
    for (size_t a = 0; a < n.arrow_maps.size(); ++a) {
        const Arrow& ar = n.ctx->arrows[a];
        fp::Matrix ca(c.dims[ar.target], c.dims[ar.source], c.p);
        for (size_t idx = 0; idx < sections[ar.source].size(); ++idx) {
            int col = sections[ar.source][idx];
            for (int r = 0; r < c.dims[ar.target]; ++r) {
                uint64_t acc = 0;
                for (int k = 0; k < n.dims[ar.target]; ++k)
                    acc += static_cast<uint64_t>(proj[ar.target].at(r, k)) *
                           n.arrow_maps[a].at(k, col);
                ca.at(r, static_cast<int>(idx)) = static_cast<uint32_t>(acc % c.p);
            }
        }
        c.arrow_maps.push_back(std::move(ca));
    }
    return c;
}

bool is_rigid(const QuiverRep& m) { return ext_dim(m, m) == 0; }

bool is_exceptional(const QuiverRep& m) {
    return hom_dim(m, m) == 1 && ext_dim(m, m) == 0;
}

ClusterObject ClusterObject::module(QuiverRep m) {
    ClusterObject x;
    x.sp_multiplicity.assign(m.ctx->n, 0);
    x.module_part = std::move(m);
    return x;
}

ClusterObject ClusterObject::shifted_projective(const ContextPtr& ctx, int i, uint32_t p) {
    ClusterObject x;
    x.module_part = zero_rep(ctx, p);
    x.sp_multiplicity.assign(ctx->n, 0);
    x.sp_multiplicity.at(i) = 1;
    return x;
}

ClusterObject ClusterObject::zero(const ContextPtr& ctx, uint32_t p) {
    ClusterObject x;
    x.module_part = zero_rep(ctx, p);
    x.sp_multiplicity.assign(ctx->n, 0);
    return x;
}

ClusterObject ClusterObject::direct_sum(const ClusterObject& other) const {
    ClusterObject x;
    x.module_part = clusterforge::direct_sum(module_part, other.module_part);
    x.sp_multiplicity = sp_multiplicity;
    for (size_t i = 0; i < sp_multiplicity.size(); ++i)
        x.sp_multiplicity[i] += other.sp_multiplicity[i];
    return x;
}

bool ClusterObject::is_zero_object() const {
    if (!module_part.is_zero()) return false;
    for (int m : sp_multiplicity)
        if (m != 0) return false;
    return true;
}

std::string ClusterObject::describe() const {
    std::ostringstream os;
    bool first = true;
    if (!module_part.is_zero()) {
        os << "M(";
        for (size_t i = 0; i < module_part.dims.size(); ++i) {
            if (i) os << ",";
            os << module_part.dims[i];
        }
        os << ")";
        first = false;
    }
    for (size_t i = 0; i < sp_multiplicity.size(); ++i) {
        for (int k = 0; k < sp_multiplicity[i]; ++k) {
            if (!first) os << "+";
            os << "SP" << (i + 1);
            first = false;
        }
    }
    if (first) os << "0";
    return os.str();
}

DimVec ClusterObject::delta() const {
    DimVec d = module_part.dim_vector();
    for (size_t i = 0; i < sp_multiplicity.size(); ++i) d[i] -= sp_multiplicity[i];
    return d;
}

int64_t ext_dim_cluster(const QuiverRep& m, const QuiverRep& n) {
    return ext_dim(m, n) + ext_dim(n, m);
}

int64_t ext_dim_cluster(const ClusterObject& x, const ClusterObject& y) {
    int64_t total = ext_dim_cluster(x.module_part, y.module_part);
    for (size_t i = 0; i < x.sp_multiplicity.size(); ++i) {
        total += x.sp_multiplicity[i] * y.module_part.dims[i];
        total += y.sp_multiplicity[i] * x.module_part.dims[i];
    }
    return total;
}

bool is_rigid(const ClusterObject& x) { return ext_dim_cluster(x, x) == 0; }

bool is_exceptional(const ClusterObject& x) {
    int sp_total = 0;
    for (int m : x.sp_multiplicity) sp_total += m;
    if (x.module_part.is_zero()) return sp_total == 1;
    return sp_total == 0 && is_exceptional(x.module_part);
}

std::vector<DimVec> positive_roots(const QuiverAlgebraContext& ctx, int64_t bound) {
    std::vector<DimVec> roots;
    DimVec d(ctx.n, 0);
    for (;;) {
        int i = 0;
        while (i < ctx.n && d[i] == bound) d[i++] = 0;
        if (i == ctx.n) break;
        ++d[i];
        if (euler_form(ctx, d, d) == 1) roots.push_back(d);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

QuiverRep generic_rep(const ContextPtr& ctx, const DimVec& d, uint32_t p, int attempts,
                      uint64_t seed) {
    if (euler_form(*ctx, d, d) != 1)
        throw std::invalid_argument("generic_rep: <d,d> must be 1");
    uint64_t mix = seed * 0x9e3779b97f4a7c15ULL + p;
    for (int64_t v : d) mix = mix * 31 + static_cast<uint64_t>(v + 7);
    std::mt19937_64 rng(mix);
    QuiverRep rep;
    rep.ctx = ctx;
    rep.p = p;
    rep.dims.assign(d.begin(), d.end());
    for (int attempt = 0; attempt < attempts; ++attempt) {
        rep.arrow_maps.clear();
        for (const auto& ar : ctx->arrows)
            rep.arrow_maps.push_back(
                fp::Matrix::random(rep.dims[ar.target], rep.dims[ar.source], p, rng));
        if (hom_dim(rep, rep) == 1 && ext_dim(rep, rep) == 0) return rep;
    }
    throw std::runtime_error("generic_rep: attempts exhausted, try a larger prime");
}

namespace {

std::vector<int64_t> peel_multiplicities(const QuiverAlgebraContext& ctx, DimVec remaining,
                                         const std::vector<DimVec>& basis,
                                         const std::vector<int>& order) {
    std::vector<int64_t> mult(ctx.n, 0);
    for (int v : order) {
        int64_t c = remaining[v];
        if (c < 0) throw std::invalid_argument("dimension vector is not a nonnegative combination");
        mult[v] = c;
        for (int j = 0; j < ctx.n; ++j) remaining[j] -= c * basis[v][j];
    }
    for (int64_t r : remaining)
        if (r != 0) throw std::invalid_argument("dimension vector is not a nonnegative combination");
    return mult;
}

} // namespace

std::vector<int64_t> injective_multiplicities(const QuiverAlgebraContext& ctx, const DimVec& dims) {
    std::vector<int> order = ctx.quiver.topological_order();
    std::reverse(order.begin(), order.end());
    return peel_multiplicities(ctx, dims, ctx.dim_injective, order);
}

std::vector<int64_t> projective_multiplicities(const QuiverAlgebraContext& ctx, const DimVec& dims) {
    std::vector<int> order = ctx.quiver.topological_order();
    return peel_multiplicities(ctx, dims, ctx.dim_projective, order);
}

} // namespace clusterforge
