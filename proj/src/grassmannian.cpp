#include "clusterforge/grassmannian.hpp"

#include "clusterforge/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace clusterforge {

Int gaussian_binomial(int m, int e, uint64_t q) {
    if (e < 0 || e > m) return 0;
    // [m,e]_q = [m-1,e-1]_q + q^e [m-1,e]_q
    std::vector<std::vector<Int>> table(m + 1, std::vector<Int>(e + 1, 0));
    for (int i = 0; i <= m; ++i) table[i][0] = 1;
    Int qi(q);
    for (int i = 1; i <= m; ++i) {
        Int qe = 1;
        for (int j = 1; j <= std::min(i, e); ++j) {
            qe *= qi;
            table[i][j] = table[i - 1][j - 1] + qe * table[i - 1][j];
        }
    }
    return table[m][e];
}

SubspaceEnumerator::SubspaceEnumerator(uint32_t p, int m, int e) : p_(p), m_(m), e_(e) {
    if (e < 0 || e > m) throw std::invalid_argument("SubspaceEnumerator: need 0 <= e <= m");
    reset();
}

void SubspaceEnumerator::reset() {
    fresh_ = true;
    done_ = false;
    pivots_.resize(e_);
    for (int i = 0; i < e_; ++i) pivots_[i] = i;
    std::vector<bool> is_pivot(m_, false);
    for (int c : pivots_) is_pivot[c] = true;
    free_positions_.clear();
    for (int r = 0; r < e_; ++r)
        for (int c = pivots_[r] + 1; c < m_; ++c)
            if (!is_pivot[c]) free_positions_.push_back({r, c});
    free_values_.assign(free_positions_.size(), 0);
}

bool SubspaceEnumerator::advance_free_values() {
    for (size_t i = 0; i < free_values_.size(); ++i) {
        if (++free_values_[i] < p_) return true;
        free_values_[i] = 0;
    }
    return false;
}

bool SubspaceEnumerator::advance_pivots() {
    // next e-combination of {0..m-1} in lexicographic order
    int i = e_ - 1;
    while (i >= 0 && pivots_[i] == m_ - e_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j < e_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    std::vector<bool> is_pivot(m_, false);
    for (int c : pivots_) is_pivot[c] = true;
    free_positions_.clear();
    for (int r = 0; r < e_; ++r)
        for (int c = pivots_[r] + 1; c < m_; ++c)
            if (!is_pivot[c]) free_positions_.push_back({r, c});
    free_values_.assign(free_positions_.size(), 0);
    return true;
}

void SubspaceEnumerator::rebuild(fp::Matrix& out) const {
    if (out.rows != e_ || out.cols != m_ || out.p != p_) {
        out = fp::Matrix(e_, m_, p_);
    } else {
        std::fill(out.a.begin(), out.a.end(), 0u);
    }
    for (int r = 0; r < e_; ++r) out.at(r, pivots_[r]) = 1 % p_;
    for (size_t k = 0; k < free_positions_.size(); ++k)
        out.at(free_positions_[k].first, free_positions_[k].second) = free_values_[k];
}

bool SubspaceEnumerator::next(fp::Matrix& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        rebuild(out);
        return true;
    }
    if (advance_free_values() || advance_pivots()) {
        rebuild(out);
        return true;
    }
    done_ = true;
    return false;
}

namespace {

// Fixed-buffer row elimination for the enumeration hot path (at most 32
// columns and 32 rows). Rows are appended once and indexed by increasing
// lead column; every stored row is normalized and zero before its lead, so a
// forward pass in lead order fully decides membership.
struct EliminationWorkspace {
    static constexpr int kMax = 32;
    uint32_t rows[kMax * kMax];
    int order[kMax];
    int leads[kMax];
    int cols = 0;
    int count = 0;
    uint32_t p = 2;
    const uint32_t* inv = nullptr; // inverse table, index 1..p-1

    void reset(int cols_, uint32_t p_, const uint32_t* inv_) {
        cols = cols_;
        p = p_;
        inv = inv_;
        count = 0;
    }

    const uint32_t* row_ptr(int r) const { return rows + r * cols; }
    uint32_t* row_ptr(int r) { return rows + r * cols; }

    // Delayed-modulus reduction: accumulate in 64 bits, one mod pass at the
    // end. Row count and p are small enough that entries cannot overflow.
    void reduce(uint32_t* v) const {
        uint64_t buf[kMax];
        for (int j = 0; j < cols; ++j) buf[j] = v[j];
        for (int k = 0; k < count; ++k) {
            int r = order[k];
            int lead = leads[r];
            uint64_t f = buf[lead] % p;
            if (f == 0) continue;
            uint64_t mf = p - f;
            const uint32_t* row = row_ptr(r);
            for (int j = lead; j < cols; ++j) buf[j] += mf * row[j];
        }
        for (int j = 0; j < cols; ++j) v[j] = static_cast<uint32_t>(buf[j] % p);
    }

    // Reduces v against the stored rows; appends the remainder if nonzero.
    bool add_row(uint32_t* v) {
        reduce(v);
        int lead = -1;
        for (int j = 0; j < cols; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return false;
        uint64_t scale = inv[v[lead]];
        uint32_t* dst = row_ptr(count);
        for (int j = 0; j < lead; ++j) dst[j] = 0;
        for (int j = lead; j < cols; ++j)
            dst[j] = static_cast<uint32_t>(v[j] * scale % p);
        int pos = 0;
        while (pos < count && leads[order[pos]] < lead) ++pos;
        for (int k = count; k > pos; --k) order[k] = order[k - 1];
        order[pos] = count;
        leads[count] = lead;
        ++count;
        return true;
    }
};

struct VertexConstraint {
    int vertex = 0;
    std::vector<std::pair<int, int>> in;  // (arrow index, enumerated source)
    std::vector<std::pair<int, int>> out; // (arrow index, enumerated target)
};

struct CountPlan {
    std::vector<int> enumerated;
    std::vector<VertexConstraint> closed;
    std::vector<std::pair<int, std::pair<int, int>>> internal; // (arrow, (source, target)), both enumerated
    Int predicted_cost = 1;
};

bool arrow_active(const QuiverRep& m, const DimVec& e, const Arrow& a) {
    return e[a.source] > 0 && e[a.target] < m.dims[a.target];
}

// Enumerate subspaces on a cheapest vertex cover of the active arrows; every
// remaining vertex is counted in closed form between the span of its
// incoming images and the intersection of its outgoing preimages.
CountPlan choose_plan(const QuiverRep& m, const DimVec& e, uint64_t budget) {
    const auto& ctx = *m.ctx;
    const int n = ctx.n;
    std::vector<std::pair<int, int>> active_pairs;
    for (const auto& a : ctx.arrows)
        if (arrow_active(m, e, a)) active_pairs.push_back({a.source, a.target});

    Int best_cost = -1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool valid = true;
        for (auto [s, t] : active_pairs)
            if (!((mask >> s) & 1) && !((mask >> t) & 1)) {
                valid = false;
                break;
            }
        if (!valid) continue;
        Int cost = 1;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                cost *= gaussian_binomial(m.dims[v], static_cast<int>(e[v]), m.p);
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_mask = mask;
        }
    }

    if (best_cost > budget) {
        std::ostringstream os;
        os << "count_subreps: enumerating " << best_cost.str() << " subspace tuples (p=" << m.p
           << ", e=(";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << ")) exceeds the budget " << budget;
        throw BudgetExceededError(os.str());
    }

    CountPlan plan;
    plan.predicted_cost = best_cost;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) plan.enumerated.push_back(v);
    for (size_t a = 0; a < ctx.arrows.size(); ++a) {
        const Arrow& ar = ctx.arrows[a];
        if (!arrow_active(m, e, ar)) continue;
        if (((best_mask >> ar.source) & 1) && ((best_mask >> ar.target) & 1))
            plan.internal.push_back({static_cast<int>(a), {ar.source, ar.target}});
    }
    for (int v = 0; v < n; ++v) {
        if ((best_mask >> v) & 1) continue;
        VertexConstraint c;
        c.vertex = v;
        for (size_t a = 0; a < ctx.arrows.size(); ++a) {
            const Arrow& ar = ctx.arrows[a];
            if (!arrow_active(m, e, ar)) continue;
            if (ar.target == v) c.in.push_back({static_cast<int>(a), ar.source});
            if (ar.source == v) c.out.push_back({static_cast<int>(a), ar.target});
        }
        plan.closed.push_back(std::move(c));
    }
    return plan;
}

} // namespace

namespace {

// One enumeration sweep serving several strata that share the enumerated
// vertex set, its dimensions, and the active-arrow pattern. Per assignment
// the subspace data of the closed vertices is computed once; each member
// stratum then contributes a product of Gaussian-binomial factors.
struct SweepGroup {
    CountPlan plan;
    std::vector<size_t> members;          // indices into the caller's strata
    std::vector<const DimVec*> member_e;  // their dimension vectors
};

void run_sweep(const QuiverRep& m, SweepGroup& group, std::vector<Int>& totals) {
    const auto& ctx = *m.ctx;
    const uint32_t p = m.p;
    const CountPlan& plan = group.plan;
    const size_t member_count = group.members.size();

    int max_dim = 0;
    for (int d : m.dims) max_dim = std::max(max_dim, d);
    std::vector<std::vector<Int>> gb(max_dim + 1);
    for (int mm = 0; mm <= max_dim; ++mm) {
        gb[mm].resize(mm + 1);
        for (int ee = 0; ee <= mm; ++ee) gb[mm][ee] = gaussian_binomial(mm, ee, p);
    }
    bool fits_u64 = true;
    std::vector<std::vector<uint64_t>> gb64(max_dim + 1);
    for (int mm = 0; mm <= max_dim && fits_u64; ++mm) {
        gb64[mm].resize(mm + 1, 0);
        for (int ee = 0; ee <= mm; ++ee) {
            if (gb[mm][ee] > Int(UINT64_MAX)) {
                fits_u64 = false;
                break;
            }
            gb64[mm][ee] = static_cast<uint64_t>(gb[mm][ee]);
        }
    }
    const unsigned __int128 flush_limit = (static_cast<unsigned __int128>(1) << 120);
    std::vector<unsigned __int128> chunks(member_count, 0);
    std::vector<Int> partial(member_count, 0);
    auto flush_chunk = [](Int& total, unsigned __int128& value) {
        uint64_t lo = static_cast<uint64_t>(value);
        uint64_t hi = static_cast<uint64_t>(value >> 64);
        total += Int(hi) * (Int(1) << 64) + lo;
        value = 0;
    };

    std::vector<uint32_t> inv_table(p, 0);
    for (uint32_t x = 1; x < p; ++x) inv_table[x] = fp::inv_mod(x, p);

    std::vector<fp::Matrix> basis(ctx.n);
    std::vector<EliminationWorkspace> checks(ctx.n);
    std::vector<SubspaceEnumerator> enums;
    for (int v : plan.enumerated) {
        const DimVec& e0 = *group.member_e.front();
        enums.emplace_back(p, m.dims[v], static_cast<int>(e0[v]));
    }

    std::vector<bool> needs_checks(ctx.n, false);
    for (const auto& c : plan.closed)
        for (auto [a, u] : c.out) needs_checks[u] = true;
    for (const auto& [a, st] : plan.internal) needs_checks[st.second] = true;

    auto load_vertex = [&](size_t idx) {
        int v = plan.enumerated[idx];
        if (!needs_checks[v]) return;
        // Row-space checks: x lies in the row space of B iff z . x = 0 for
        // every kernel vector z of B. The enumerator emits B in reduced row
        // echelon form, so the kernel rows can be read off directly.
        const fp::Matrix& b = basis[v];
        const int mv = m.dims[v];
        auto& ws = checks[v];
        ws.reset(mv, p, inv_table.data());
        ws.count = mv - b.rows;
        int pivot_of_row[32];
        bool is_pivot[32] = {false};
        for (int r = 0; r < b.rows; ++r) {
            int lead = 0;
            while (lead < mv && b.at(r, lead) == 0) ++lead;
            pivot_of_row[r] = lead;
            is_pivot[lead] = true;
        }
        int idx_out = 0;
        for (int col = 0; col < mv; ++col) {
            if (is_pivot[col]) continue;
            uint32_t* z = ws.row_ptr(idx_out);
            for (int j = 0; j < mv; ++j) z[j] = 0;
            z[col] = 1 % p;
            for (int r = 0; r < b.rows; ++r) {
                uint32_t val = b.at(r, col);
                if (val != 0) z[pivot_of_row[r]] = p - val;
            }
            ++idx_out;
        }
    };

    EliminationWorkspace w_space, y_constraints;
    uint32_t scratch[EliminationWorkspace::kMax];
    const size_t closed_count = plan.closed.size();
    std::vector<int> dims_w(closed_count), dims_y(closed_count);

    for (size_t k = 0; k < enums.size(); ++k) {
        if (!enums[k].next(basis[plan.enumerated[k]]))
            throw std::logic_error("count_subreps: empty enumerator");
        load_vertex(k);
    }
    for (;;) {
        bool zero = false;
        // Containment along arrows internal to the enumerated set.
        for (const auto& [a, st] : plan.internal) {
            const fp::Matrix& map = m.arrow_maps[a];
            const fp::Matrix& src = basis[st.first];
            const EliminationWorkspace& tgt = checks[st.second];
            bool inside = true;
            for (int r = 0; r < src.rows && inside; ++r) {
                for (int j = 0; j < map.rows; ++j) {
                    uint64_t img = 0;
                    for (int kk = 0; kk < map.cols; ++kk)
                        img += static_cast<uint64_t>(map.at(j, kk)) * src.at(r, kk);
                    scratch[j] = static_cast<uint32_t>(img % p);
                }
                for (int cr = 0; cr < tgt.count && inside; ++cr) {
                    const uint32_t* z = tgt.row_ptr(cr);
                    uint64_t acc = 0;
                    for (int j = 0; j < map.rows; ++j)
                        acc += static_cast<uint64_t>(z[j]) * scratch[j];
                    if (acc % p != 0) inside = false;
                }
            }
            if (!inside) {
                zero = true;
                break;
            }
        }
        // Subspace data of the closed vertices, shared by every member.
        for (size_t ci = 0; ci < closed_count && !zero; ++ci) {
            const auto& c = plan.closed[ci];
            int v = c.vertex;
            int mv = m.dims[v];

            w_space.reset(mv, p, inv_table.data());
            for (auto [a, u] : c.in) {
                const fp::Matrix& map = m.arrow_maps[a];
                for (int r = 0; r < basis[u].rows; ++r) {
                    for (int j = 0; j < mv; ++j) {
                        uint64_t acc = 0;
                        for (int kk = 0; kk < map.cols; ++kk)
                            acc += static_cast<uint64_t>(map.at(j, kk)) * basis[u].at(r, kk);
                        scratch[j] = static_cast<uint32_t>(acc % p);
                    }
                    w_space.add_row(scratch);
                }
            }
            y_constraints.reset(mv, p, inv_table.data());
            for (auto [a, u] : c.out) {
                const fp::Matrix& map = m.arrow_maps[a];
                for (int cr = 0; cr < checks[u].count; ++cr) {
                    const uint32_t* z = checks[u].row_ptr(cr);
                    for (int j = 0; j < mv; ++j) {
                        uint64_t acc = 0;
                        for (int kk = 0; kk < map.rows; ++kk)
                            acc += static_cast<uint64_t>(z[kk]) * map.at(kk, j);
                        scratch[j] = static_cast<uint32_t>(acc % p);
                    }
                    y_constraints.add_row(scratch);
                }
            }
            dims_w[ci] = w_space.count;
            dims_y[ci] = mv - y_constraints.count;
            if (dims_w[ci] > dims_y[ci]) {
                zero = true;
                break;
            }
            // W must land inside Y.
            bool inside = true;
            for (int r = 0; r < w_space.count && inside; ++r) {
                const uint32_t* wrow = w_space.row_ptr(r);
                for (int cr = 0; cr < y_constraints.count && inside; ++cr) {
                    const uint32_t* yrow = y_constraints.row_ptr(cr);
                    uint64_t acc = 0;
                    for (int j = 0; j < mv; ++j)
                        acc += static_cast<uint64_t>(yrow[j]) * wrow[j];
                    if (acc % p != 0) inside = false;
                }
            }
            if (!inside) zero = true;
        }
        if (!zero) {
            for (size_t mi = 0; mi < member_count; ++mi) {
                const DimVec& e = *group.member_e[mi];
                bool member_zero = false;
                if (fits_u64) {
                    unsigned __int128 prod = 1;
                    for (size_t ci = 0; ci < closed_count; ++ci) {
                        int ev = static_cast<int>(e[plan.closed[ci].vertex]);
                        if (ev < dims_w[ci] || ev > dims_y[ci]) {
                            member_zero = true;
                            break;
                        }
                        uint64_t f = gb64[dims_y[ci] - dims_w[ci]][ev - dims_w[ci]];
                        if (prod > flush_limit / f) {
                            member_zero = true; // fall through to the slow path
                            prod = 0;
                            break;
                        }
                        prod *= f;
                    }
                    if (!member_zero) {
                        chunks[mi] += prod;
                        if (chunks[mi] >= flush_limit) flush_chunk(partial[mi], chunks[mi]);
                        continue;
                    }
                    if (prod != 0) continue; // genuinely zero contribution
                }
                // Exact big-integer path.
                Int contribution = 1;
                member_zero = false;
                for (size_t ci = 0; ci < closed_count; ++ci) {
                    int ev = static_cast<int>(e[plan.closed[ci].vertex]);
                    if (ev < dims_w[ci] || ev > dims_y[ci]) {
                        member_zero = true;
                        break;
                    }
                    contribution *= gb[dims_y[ci] - dims_w[ci]][ev - dims_w[ci]];
                }
                if (!member_zero) {
                    flush_chunk(partial[mi], chunks[mi]);
                    partial[mi] += contribution;
                }
            }
        }

        size_t idx = 0;
        for (; idx < enums.size(); ++idx) {
            if (enums[idx].next(basis[plan.enumerated[idx]])) {
                load_vertex(idx);
                break;
            }
            enums[idx].reset();
            enums[idx].next(basis[plan.enumerated[idx]]);
            load_vertex(idx);
        }
        if (idx == enums.size()) break;
    }
    for (size_t mi = 0; mi < member_count; ++mi) {
        flush_chunk(partial[mi], chunks[mi]);
        totals[group.members[mi]] = std::move(partial[mi]);
    }
}

} // namespace

std::vector<Int> count_subreps_multi(const QuiverRep& m, const std::vector<DimVec>& strata,
                                     uint64_t budget, int threads) {
    m.validate();
    for (int d : m.dims)
        if (d > 32) throw std::invalid_argument("count_subreps: vertex dimension above 32");
    for (const auto& e : strata) {
        if (static_cast<int>(e.size()) != m.ctx->n)
            throw std::invalid_argument("count_subreps: dimension vector length mismatch");
        for (int v = 0; v < m.ctx->n; ++v)
            if (e[v] < 0 || e[v] > m.dims[v])
                throw std::invalid_argument("count_subreps: dimension overflow");
    }

    // Group strata sharing the enumerated vertices, their dimensions, and
    // the active-arrow pattern; each group costs one sweep.
    std::map<std::string, SweepGroup> groups;
    for (size_t i = 0; i < strata.size(); ++i) {
        const DimVec& e = strata[i];
        CountPlan plan = choose_plan(m, e, budget);
        std::ostringstream key;
        for (size_t a = 0; a < m.ctx->arrows.size(); ++a)
            key << (arrow_active(m, e, m.ctx->arrows[a]) ? '1' : '0');
        key << '/';
        for (int v : plan.enumerated) key << v << ':' << e[v] << ',';
        auto [it, fresh] = groups.try_emplace(key.str());
        if (fresh) it->second.plan = std::move(plan);
        it->second.members.push_back(i);
        it->second.member_e.push_back(&strata[i]);
    }

    std::vector<Int> totals(strata.size(), 0);
    std::vector<SweepGroup*> ordered;
    for (auto& [key, group] : groups) ordered.push_back(&group);
    parallel_for(static_cast<int64_t>(ordered.size()), threads,
                 [&](int64_t gi) { run_sweep(m, *ordered[gi], totals); });
    return totals;
}

Int count_subreps(const QuiverRep& m, const DimVec& e, uint64_t budget) {
    return count_subreps_multi(m, {e}, budget, 1).front();
}

int CountingPolynomial::degree() const {
    for (int d = static_cast<int>(coefficients.size()) - 1; d >= 0; --d)
        if (coefficients[d] != 0) return d;
    return -1;
}

Int CountingPolynomial::eval(const Int& q) const {
    Int acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Int CountingPolynomial::at_one() const {
    Int acc = 0;
    for (const auto& c : coefficients) acc += c;
    return acc;
}

uint32_t nth_prime(int index) {
    static std::vector<uint32_t> primes{2, 3};
    while (static_cast<int>(primes.size()) <= index) {
        uint32_t candidate = primes.back() + 2;
        for (;; candidate += 2) {
            bool ok = true;
            for (uint32_t d : primes) {
                if (d * d > candidate) break;
                if (candidate % d == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        primes.push_back(candidate);
    }
    return primes[index];
}

int64_t default_degree_bound(const DimVec& dims, const DimVec& e) {
    int64_t total = 0;
    for (size_t i = 0; i < dims.size(); ++i) total += e[i] * (dims[i] - e[i]);
    return total;
}

namespace {

// Divided-difference (Newton) form of the interpolating polynomial through
// the sampled (prime, count) points, extended one point at a time.
struct NewtonSeries {
    std::vector<uint32_t> primes;
    std::vector<Int> counts;
    std::vector<Rat> coeffs;
    int zero_tail = 0;

    void add_point(uint32_t p, Int count) {
        Rat acc = Rat(count);
        Rat prod = 1;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            acc -= coeffs[j] * prod;
            prod *= Rat(Int(p) - Int(primes[j]));
        }
        coeffs.push_back(acc / prod);
        primes.push_back(p);
        counts.push_back(std::move(count));
        zero_tail = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend() && *it == 0; ++it) ++zero_tail;
    }

    bool stabilized(int verify_points) const {
        return coeffs.size() >= 2 && zero_tail >= verify_points;
    }

    CountingPolynomial expand() const {
        std::vector<Rat> monomial(coeffs.size(), Rat(0));
        std::vector<Rat> basis_poly{Rat(1)};
        for (size_t k = 0; k < coeffs.size(); ++k) {
            for (size_t j = 0; j < basis_poly.size(); ++j)
                monomial[j] += coeffs[k] * basis_poly[j];
            std::vector<Rat> next(basis_poly.size() + 1, Rat(0));
            for (size_t j = 0; j < basis_poly.size(); ++j) {
                next[j + 1] += basis_poly[j];
                next[j] -= basis_poly[j] * Rat(Int(primes[k]));
            }
            basis_poly = std::move(next);
        }
        CountingPolynomial poly;
        for (const Rat& c : monomial) {
            if (boost::multiprecision::denominator(c) != 1)
                throw NonIntegralInterpolationError(
                    "euler_char: interpolated polynomial has non-integer coefficients");
            poly.coefficients.push_back(boost::multiprecision::numerator(c));
        }
        return poly;
    }

    ChiCertificate certify(int64_t degree_bound) const {
        ChiCertificate cert;
        cert.polynomial = expand();
        cert.primes = primes;
        cert.counts = counts;
        if (cert.polynomial.degree() > degree_bound)
            throw NonIntegralInterpolationError("euler_char: degree exceeds the stated bound");
        cert.chi = static_cast<int64_t>(cert.polynomial.at_one());
        return cert;
    }
};

} // namespace

ChiCertificate euler_char_certified(const ModuleFamily& family, const DimVec& e,
                                    int64_t degree_bound, const ChiOptions& opts) {
    if (degree_bound < 0) throw std::invalid_argument("euler_char: negative degree bound");
    if (opts.verify_points < 1) throw std::invalid_argument("euler_char: verify_points < 1");
    NewtonSeries series;
    std::vector<int> dims_seen;
    for (int k = 0; static_cast<int64_t>(k) <= degree_bound; ++k) {
        uint32_t p = nth_prime(opts.skip_primes + k);
        QuiverRep rep = family(p);
        if (rep.p != p)
            throw std::invalid_argument("euler_char: family returned wrong characteristic");
        if (k == 0) {
            dims_seen = rep.dims;
        } else if (rep.dims != dims_seen) {
            throw NonIntegralInterpolationError(
                "euler_char: family changes dimension vector across primes");
        }
        series.add_point(p, count_subreps(rep, e, opts.budget));
        if (series.stabilized(opts.verify_points)) break;
    }
    return series.certify(degree_bound);
}

ChiTable chi_table_for_family(const ModuleFamily& family, const DimVec& dims,
                              const ChiOptions& opts) {
    if (opts.verify_points < 1) throw std::invalid_argument("euler_char: verify_points < 1");
    ChiTable table;
    DimVec e(dims.size(), 0);
    for (;;) {
        table.strata.push_back(e);
        int i = static_cast<int>(dims.size()) - 1;
        while (i >= 0 && e[i] == dims[i]) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }

    std::vector<int64_t> bounds;
    for (const auto& stratum : table.strata) bounds.push_back(default_degree_bound(dims, stratum));
    std::vector<NewtonSeries> series(table.strata.size());
    std::vector<bool> done(table.strata.size(), false);
    std::vector<int> dims_seen;

    for (int k = 0;; ++k) {
        std::vector<size_t> pending;
        for (size_t i = 0; i < table.strata.size(); ++i)
            if (!done[i]) pending.push_back(i);
        if (pending.empty()) break;

        uint32_t p = nth_prime(opts.skip_primes + k);
        QuiverRep rep = family(p);
        if (rep.p != p)
            throw std::invalid_argument("euler_char: family returned wrong characteristic");
        if (k == 0) {
            dims_seen = rep.dims;
        } else if (rep.dims != dims_seen) {
            throw NonIntegralInterpolationError(
                "euler_char: family changes dimension vector across primes");
        }

        std::vector<DimVec> wanted;
        for (size_t i : pending) wanted.push_back(table.strata[i]);
        std::vector<Int> counts =
            count_subreps_multi(rep, wanted, opts.budget, opts.parallel ? opts.threads : 1);
        for (size_t idx = 0; idx < pending.size(); ++idx) {
            size_t i = pending[idx];
            series[i].add_point(p, std::move(counts[idx]));
            if (series[i].stabilized(opts.verify_points) ||
                static_cast<int64_t>(series[i].primes.size()) == bounds[i] + 1)
                done[i] = true;
        }
    }
    for (size_t i = 0; i < table.strata.size(); ++i)
        table.certificates.push_back(series[i].certify(bounds[i]));
    return table;
}

int64_t euler_char(const ModuleFamily& family, const DimVec& e, int64_t degree_bound,
                   const ChiOptions& opts) {
    return euler_char_certified(family, e, degree_bound, opts).chi;
}

} // namespace clusterforge
