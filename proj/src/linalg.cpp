#include "nh/linalg.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace nh {

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Coeff& v)
{
    Coeff c = v;
    f_.normalize(c);
    (*this)(i, j) = c;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (c_ != o.r_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(r_, o.c_, f_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Coeff& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                m(i, j) += a * o(k, j);
        }
    if (!f_.is_rational())
        for (auto& x : m.d_)
            f_.normalize(x);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix m(c_, r_, f_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::stack(const Matrix& o) const
{
    if (c_ != o.c_)
        throw std::invalid_argument("stack: column mismatch");
    Matrix m(r_ + o.r_, c_, f_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            m(r_ + i, j) = o(i, j);
    return m;
}

Echelon rref(Matrix m)
{
    const Field& F = m.field();
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
        Coeff inv = F.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) = F.mul(m(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Coeff c = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0)
                    m(i, j) = F.sub(m(i, j), F.mul(c, m(row, j)));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    const Field& F = m.field();
    std::vector<char> is_piv(m.cols(), 0);
    for (auto c : e.pivots)
        is_piv[c] = 1;
    std::size_t nfree = m.cols() - e.pivots.size();
    Matrix ns(nfree, m.cols(), F);
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        ns(k, f) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            ns(k, e.pivots[r]) = F.neg(e.reduced(r, f));
        ++k;
    }
    return ns;
}

Coeff determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Field& F = m.field();
    Coeff det = 1;
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(piv, j), m(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, m(col, col));
        Coeff inv = F.inv(m(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Coeff c = F.mul(m(i, col), inv);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) = F.sub(m(i, j), F.mul(c, m(col, j)));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p)
{
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    auto inv = [&](std::uint64_t a) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    if (rows.empty())
        return 0;
    std::size_t ncols = rows[0].size();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < ncols && rk < rows.size(); ++col) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][col] % p == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rk]);
        std::uint64_t iv = inv(rows[rk][col] % p);
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            std::uint64_t c = mulmod(rows[i][col] % p, iv);
            if (c == 0)
                continue;
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = (rows[i][j] % p + p - mulmod(c, rows[rk][j] % p)) % p;
        }
        ++rk;
    }
    return rk;
}

Polynomial poly_minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols, const RingPtr& ring)
{
    std::size_t k = rows.size();
    if (cols.size() != k)
        throw std::invalid_argument("poly_minor: non-square selection");
    if (k > 30)
        throw std::invalid_argument("poly_minor: too large");
    if (k == 0)
        return Polynomial::constant(ring, 1);
    // dp[mask] = signed sum over assignments of the first popcount(mask) rows to columns in mask
    std::unordered_map<std::uint32_t, Polynomial> dp;
    dp.emplace(0u, Polynomial::constant(ring, 1));
    for (std::size_t r = 0; r < k; ++r) {
        std::unordered_map<std::uint32_t, Polynomial> next;
        for (const auto& [mask, val] : dp) {
            if (val.is_zero())
                continue;
            int above = 0;  // columns already used to the right change the sign
            for (int c = static_cast<int>(k) - 1; c >= 0; --c) {
                std::uint32_t bit = 1u << c;
                if (mask & bit) {
                    ++above;
                    continue;
                }
                const Polynomial& e = m[rows[r]][cols[static_cast<std::size_t>(c)]];
                if (e.is_zero())
                    continue;
                Polynomial t = val * e;
                if (above % 2)
                    t = -t;
                auto it = next.find(mask | bit);
                if (it == next.end())
                    next.emplace(mask | bit, std::move(t));
                else
                    it->second += t;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find((k == 32 ? 0u : (1u << k)) - 1u);
    return it == dp.end() ? Polynomial(ring) : it->second;
}

Polynomial poly_determinant(const PolyMatrix& m, const RingPtr& ring)
{
    std::vector<std::size_t> idx(m.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("poly_determinant: non-square matrix");
    return poly_minor(m, idx, idx, ring);
}

}  // namespace nh
