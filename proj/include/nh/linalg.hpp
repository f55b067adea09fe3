#pragma once

#include "nh/exactpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nh {

/// Dense matrix over a Field (rationals or Z/p), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = {})
        : r_(rows), c_(cols), f_(field), d_(rows * cols, Coeff(0)) {}

    static Matrix identity(std::size_t n, Field field = {});

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const Field& field() const { return f_; }

    Coeff& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const Coeff& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    void set(std::size_t i, std::size_t j, const Coeff& v);

    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    /// Rows of *this followed by the rows of o.
    Matrix stack(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

private:
    std::size_t r_ = 0, c_ = 0;
    Field f_;
    std::vector<Coeff> d_;
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per row of the result.
Matrix nullspace(const Matrix& m);
Coeff determinant(Matrix m);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rank of a dense matrix over Z/p with machine-word entries.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square polynomial matrix (row expansion over column subsets).
Polynomial poly_determinant(const PolyMatrix& m, const RingPtr& ring);
/// Minor on the given rows and columns (0-based, same count).
Polynomial poly_minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols, const RingPtr& ring);

}  // namespace nh
