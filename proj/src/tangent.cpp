#include "nh/nestcore.hpp"

#include <map>

namespace nh {

namespace {

// Polynomials of k[x, y] truncated below total degree D, as dense coordinate vectors.
class Truncation {
public:
    explicit Truncation(int D) : D_(D)
    {
        for (int d = 0; d < D; ++d)
            for (int a = d; a >= 0; --a) {
                index_[{a, d - a}] = mons_.size();
                mons_.push_back({a, d - a});
            }
    }

    std::size_t size() const { return mons_.size(); }
    int bound() const { return D_; }
    const std::pair<int, int>& mon(std::size_t k) const { return mons_[k]; }

    std::vector<Coeff> vec(const Polynomial& f, int sx = 0, int sy = 0) const
    {
        std::vector<Coeff> v(size(), Coeff(0));
        for (const auto& t : f.terms()) {
            int a = t.m[0] + sx, b = t.m[1] + sy;
            if (a + b < D_)
                v[index_.at({a, b})] += t.c;
        }
        return v;
    }

    std::vector<Coeff> shift(const std::vector<Coeff>& v, int sx, int sy) const
    {
        std::vector<Coeff> out(size(), Coeff(0));
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0)
                continue;
            int a = mons_[k].first + sx, b = mons_[k].second + sy;
            if (a + b < D_)
                out[index_.at({a, b})] = v[k];
        }
        return out;
    }

private:
    int D_;
    std::vector<std::pair<int, int>> mons_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

Matrix rows_to_matrix(const std::vector<std::vector<Coeff>>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

// Nonzero rows of the reduced echelon form, with their pivots.
struct RowBasis {
    std::vector<std::vector<Coeff>> rows;
    std::vector<std::size_t> pivots;
};

RowBasis row_basis(const std::vector<std::vector<Coeff>>& rows, std::size_t cols)
{
    RowBasis b;
    if (rows.empty())
        return b;
    Echelon e = rref(rows_to_matrix(rows, cols));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::vector<Coeff> v(cols);
        for (std::size_t j = 0; j < cols; ++j)
            v[j] = e.reduced(r, j);
        b.rows.push_back(std::move(v));
        b.pivots.push_back(e.pivots[r]);
    }
    return b;
}

void reduce_by(std::vector<Coeff>& v, const RowBasis& b)
{
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
        Coeff c = v[b.pivots[r]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (b.rows[r][j] != 0)
                v[j] -= c * b.rows[r][j];
    }
}

// V = I / m^N I inside k[x,y]/m^D, with multiplication by x and y.
struct QuotientModule {
    RowBasis sub;    // m^N I
    RowBasis basis;  // complement, reduced against sub
    Matrix mx, my;   // action on coordinates (column k = image of basis k)

    std::vector<Coeff> coords(std::vector<Coeff> v) const
    {
        reduce_by(v, sub);
        std::vector<Coeff> c(basis.rows.size());
        for (std::size_t k = 0; k < basis.rows.size(); ++k)
            c[k] = v[basis.pivots[k]];
        return c;
    }
    std::size_t dim() const { return basis.rows.size(); }
};

QuotientModule quotient_module(const std::vector<Polynomial>& I, int N, const Truncation& tr)
{
    const int D = tr.bound();
    std::vector<std::vector<Coeff>> all, deep;
    for (const auto& g : I)
        for (int d = 0; d < D; ++d)
            for (int a = d; a >= 0; --a) {
                auto v = tr.vec(g, a, d - a);
                (d >= N ? deep : all).push_back(v);
                if (d >= N)
                    all.push_back(std::move(v));
            }
    QuotientModule q;
    q.sub = row_basis(deep, tr.size());
    for (auto& v : all)
        reduce_by(v, q.sub);
    q.basis = row_basis(all, tr.size());
    const std::size_t d = q.dim();
    q.mx = Matrix(d, d);
    q.my = Matrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto cx = q.coords(tr.shift(q.basis.rows[k], 1, 0));
        auto cy = q.coords(tr.shift(q.basis.rows[k], 0, 1));
        for (std::size_t r = 0; r < d; ++r) {
            q.mx(r, k) = cx[r];
            q.my(r, k) = cy[r];
        }
    }
    return q;
}

// R / J on its standard monomials, with multiplication matrices.
struct QuotientRing {
    std::vector<Polynomial> gb;
    TermOrder order;
    std::vector<Monomial> standard;
    std::map<std::vector<int>, std::size_t> index;
    Matrix mx, my;

    std::vector<Coeff> coords(const Polynomial& f) const
    {
        Polynomial r = normal_form(f, gb, order);
        std::vector<Coeff> c(standard.size(), Coeff(0));
        for (const auto& t : r.terms())
            c[index.at(t.m.exps())] = t.c;
        return c;
    }
    std::size_t dim() const { return standard.size(); }
};

QuotientRing quotient_ring(const std::vector<Polynomial>& J, const RingPtr& R)
{
    QuotientRing q;
    q.order = TermOrder::grevlex(R->nvars());
    GbResult gb = buchberger(J, q.order);
    q.gb = gb.basis;
    std::vector<Monomial> lms;
    for (const auto& g : q.gb)
        lms.push_back(g.leading_monomial(q.order));
    if (!colength_monomial(lms, R->nvars()))
        throw PairError("ideal has infinite colength");
    q.standard = standard_monomials(lms, R->nvars());
    for (std::size_t k = 0; k < q.standard.size(); ++k)
        q.index[q.standard[k].exps()] = k;
    const std::size_t d = q.dim();
    q.mx = Matrix(d, d);
    q.my = Matrix(d, d);
    Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
    for (std::size_t k = 0; k < d; ++k) {
        Polynomial s = Polynomial::term(R, q.standard[k], 1);
        auto cx = q.coords(x * s), cy = q.coords(y * s);
        for (std::size_t r = 0; r < d; ++r) {
            q.mx(r, k) = cx[r];
            q.my(r, k) = cy[r];
        }
    }
    return q;
}

// Equations Phi * MV = MJ * Phi for Phi (dJ x dV) stored at `offset` in an unknown vector.
void commute_equations(std::vector<std::vector<Coeff>>& eqs, std::size_t nunk, std::size_t offset,
                       const Matrix& MV, const Matrix& MJ)
{
    const std::size_t dV = MV.rows(), dJ = MJ.rows();
    for (std::size_t r = 0; r < dJ; ++r)
        for (std::size_t c = 0; c < dV; ++c) {
            std::vector<Coeff> e(nunk, Coeff(0));
            for (std::size_t k = 0; k < dV; ++k)
                if (MV(k, c) != 0)
                    e[offset + r * dV + k] += MV(k, c);
            for (std::size_t k = 0; k < dJ; ++k)
                if (MJ(r, k) != 0)
                    e[offset + k * dV + c] -= MJ(r, k);
            eqs.push_back(std::move(e));
        }
}

long solution_dim(const std::vector<std::vector<Coeff>>& eqs, std::size_t nunk)
{
    if (eqs.empty())
        return static_cast<long>(nunk);
    return static_cast<long>(nunk) - static_cast<long>(rank(rows_to_matrix(eqs, nunk)));
}

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& v)
{
    std::vector<Polynomial> out;
    for (const auto& f : v)
        if (!f.is_zero())
            out.push_back(f);
    return out;
}

void check_ring(const std::vector<Polynomial>& I)
{
    if (I.empty())
        throw PairError("empty generator list");
    if (I.front().ring()->nvars() != 2)
        throw PairError("tangent spaces need ideals of k[x, y]");
    if (!I.front().field().is_rational())
        throw PairError("tangent spaces are computed over the rationals");
}

}  // namespace

long hilb_tangent_dim(const std::vector<Polynomial>& gens)
{
    auto I = nonzero(gens);
    check_ring(I);
    const RingPtr& R = I.front().ring();
    QuotientRing Q = quotient_ring(I, R);
    const int c = static_cast<int>(Q.dim());
    if (c == 0)
        return 0;
    Truncation tr(2 * c);
    QuotientModule V = quotient_module(I, c, tr);
    const std::size_t nunk = Q.dim() * V.dim();
    std::vector<std::vector<Coeff>> eqs;
    commute_equations(eqs, nunk, 0, V.mx, Q.mx);
    commute_equations(eqs, nunk, 0, V.my, Q.my);
    return solution_dim(eqs, nunk);
}

TangentReport tangent_space(const PairPoint& p)
{
    auto I1 = nonzero(p.I1), I2 = nonzero(p.I2);
    check_ring(I1);
    check_ring(I2);
    const RingPtr& R = I1.front().ring();
    QuotientRing Q1 = quotient_ring(I1, R), Q2 = quotient_ring(I2, R);
    for (const auto& g : I1)
        if (!normal_form(g, Q2.gb, Q2.order).is_zero())
            throw PairError("first ideal is not contained in the second");

    TangentReport rep;
    rep.colength1 = static_cast<long>(Q1.dim());
    rep.colength2 = static_cast<long>(Q2.dim());
    rep.hom1 = hilb_tangent_dim(I1);
    rep.hom2 = rep.colength2 == 0 ? 0 : hilb_tangent_dim(I2);
    if (rep.colength1 == 0) {
        rep.dim = 0;
        return rep;
    }
    // m^N kills both quotients once N >= colength(I1); m^(2N) lies in m^N I for either ideal.
    const int N = static_cast<int>(rep.colength1);
    Truncation tr(2 * N);
    QuotientModule V1 = quotient_module(I1, N, tr);
    QuotientModule V2 = quotient_module(I2, N, tr);
    const std::size_t d1 = Q1.dim(), d2 = Q2.dim();
    const std::size_t n1 = d1 * V1.dim(), n2 = d2 * V2.dim();
    const std::size_t nunk = n1 + n2;
    std::vector<std::vector<Coeff>> eqs;
    commute_equations(eqs, nunk, 0, V1.mx, Q1.mx);
    commute_equations(eqs, nunk, 0, V1.my, Q1.my);
    if (d2 > 0) {
        commute_equations(eqs, nunk, n1, V2.mx, Q2.mx);
        commute_equations(eqs, nunk, n1, V2.my, Q2.my);
        // iota: V1 -> V2 induced by inclusion; P: R/I1 -> R/I2.
        Matrix iota(V2.dim(), V1.dim()), P(d2, d1);
        for (std::size_t k = 0; k < V1.dim(); ++k) {
            auto c = V2.coords(V1.basis.rows[k]);
            for (std::size_t r = 0; r < V2.dim(); ++r)
                iota(r, k) = c[r];
        }
        for (std::size_t k = 0; k < d1; ++k) {
            auto c = Q2.coords(Polynomial::term(R, Q1.standard[k], 1));
            for (std::size_t r = 0; r < d2; ++r)
                P(r, k) = c[r];
        }
        const std::size_t dV1 = V1.dim(), dV2 = V2.dim();
        for (std::size_t r = 0; r < d2; ++r)
            for (std::size_t c = 0; c < dV1; ++c) {
                std::vector<Coeff> e(nunk, Coeff(0));
                for (std::size_t k = 0; k < d1; ++k)
                    if (P(r, k) != 0)
                        e[k * dV1 + c] += P(r, k);
                for (std::size_t k = 0; k < dV2; ++k)
                    if (iota(k, c) != 0)
                        e[n1 + r * dV2 + k] -= iota(k, c);
                eqs.push_back(std::move(e));
            }
    }
    rep.dim = solution_dim(eqs, nunk);
    return rep;
}

long tangent_dim(const PairPoint& p) { return tangent_space(p).dim; }

}  // namespace nh
