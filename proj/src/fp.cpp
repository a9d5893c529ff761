#include "clusterforge/fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterforge::fp {

Matrix Matrix::identity(int n, uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Matrix Matrix::random(int r, int c, uint32_t p, std::mt19937_64& rng) {
    Matrix m(r, c, p);
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    for (auto& v : m.a) v = dist(rng);
    return m;
}

uint32_t inv_mod(uint32_t x, uint32_t p) {
    // Extended Euclid; p prime and x != 0 mod p.
    int64_t a = x % p, b = p, u = 1, v = 0;
    while (b != 0) {
        int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    if (a != 1) throw std::invalid_argument("inv_mod: not invertible");
    int64_t r = u % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows || a.p != b.p) throw std::invalid_argument("mul: shape mismatch");
    Matrix r(a.rows, b.cols, a.p);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = static_cast<uint32_t>((r.at(i, j) + aik * b.at(k, j)) % a.p);
        }
    }
    return r;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.p != b.p)
        throw std::invalid_argument("add: shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + b.a[i]) % a.p;
    return r;
}

Matrix neg(const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.a) v = v == 0 ? 0 : a.p - v;
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.p != b.p) throw std::invalid_argument("hstack: shape mismatch");
    Matrix r(a.rows, a.cols + b.cols, a.p);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols || a.p != b.p) throw std::invalid_argument("vstack: shape mismatch");
    Matrix r(a.rows + b.rows, a.cols, a.p);
    std::copy(a.a.begin(), a.a.end(), r.a.begin());
    std::copy(b.a.begin(), b.a.end(), r.a.begin() + static_cast<long>(a.a.size()));
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.cols, a.rows, a.p);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        uint64_t inv = inv_mod(m.at(row, col), m.p);
        for (int j = col; j < m.cols; ++j)
            m.at(row, j) = static_cast<uint32_t>(m.at(row, j) * inv % m.p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            uint64_t f = m.at(i, col);
            if (f == 0) continue;
            uint64_t mf = m.p - f;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = static_cast<uint32_t>((m.at(i, j) + mf * m.at(row, j)) % m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int nullity = m.cols - static_cast<int>(pivots.size());
    Matrix k(m.cols, nullity, m.p);
    int idx = 0;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        k.at(free_col, idx) = 1;
        for (size_t row = 0; row < pivots.size(); ++row) {
            uint32_t v = r.at(static_cast<int>(row), free_col);
            k.at(pivots[row], idx) = v == 0 ? 0 : m.p - v;
        }
        ++idx;
    }
    return k;
}

Matrix row_space_basis(Matrix m) {
    std::vector<int> pivots = rref(m);
    Matrix r(static_cast<int>(pivots.size()), m.cols, m.p);
    for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

bool solve(const Matrix& m, const Matrix& rhs, Matrix& out) {
    if (m.rows != rhs.rows || m.p != rhs.p) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug = hstack(m, rhs);
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c >= m.cols) return false;
    out = Matrix(m.cols, rhs.cols, m.p);
    for (size_t row = 0; row < pivots.size(); ++row)
        for (int j = 0; j < rhs.cols; ++j)
            out.at(pivots[row], j) = aug.at(static_cast<int>(row), m.cols + j);
    return true;
}

bool rows_contained(const Matrix& space, const std::vector<int>& pivots, const Matrix& sub) {
    if (space.cols != sub.cols || space.p != sub.p)
        throw std::invalid_argument("rows_contained: shape mismatch");
    std::vector<uint32_t> v(sub.cols);
    for (int i = 0; i < sub.rows; ++i) {
        for (int j = 0; j < sub.cols; ++j) v[j] = sub.at(i, j);
        for (size_t r = 0; r < pivots.size(); ++r) {
            uint64_t f = v[pivots[r]];
            if (f == 0) continue;
            uint64_t mf = space.p - f;
            for (int j = 0; j < sub.cols; ++j)
                v[j] = static_cast<uint32_t>(
                    (v[j] + mf * space.at(static_cast<int>(r), j)) % space.p);
        }
        for (uint32_t x : v)
            if (x != 0) return false;
    }
    return true;
}

} // namespace clusterforge::fp
