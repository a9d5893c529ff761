#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace clusterforge::fp {

/// Dense matrix over the prime field F_p (p small, not validated as prime).
struct Matrix {
    int rows = 0;
    int cols = 0;
    uint32_t p = 2;
    std::vector<uint32_t> a; // row major

    Matrix() = default;
    Matrix(int r, int c, uint32_t p_) : rows(r), cols(c), p(p_), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n, uint32_t p);
    static Matrix random(int r, int c, uint32_t p, std::mt19937_64& rng);

    bool operator==(const Matrix& rhs) const = default;
};

uint32_t inv_mod(uint32_t x, uint32_t p);

Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix neg(const Matrix& a);
/// [a | b] side by side.
Matrix hstack(const Matrix& a, const Matrix& b);
/// a above b.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);

/// Basis of the right kernel {x : m x = 0}, columns of the result.
Matrix kernel_basis(const Matrix& m);
/// Basis of the row space, rows of the result (in rref).
Matrix row_space_basis(Matrix m);

/// Solves m x = rhs column by column; returns false if inconsistent.
bool solve(const Matrix& m, const Matrix& rhs, Matrix& out);

/// True if every row of sub lies in the row space of the rref matrix `space`
/// (space must be in rref with the given pivot columns).
bool rows_contained(const Matrix& space, const std::vector<int>& pivots, const Matrix& sub);

} // namespace clusterforge::fp
