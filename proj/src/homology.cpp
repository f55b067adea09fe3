#include "nh/srcomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nh {

std::string Coefficients::describe() const
{
    switch (kind) {
    case CoeffKind::Rational:
        return "QQ";
    case CoeffKind::Prime:
        return "ZZ/" + std::to_string(p);
    case CoeffKind::Integer:
        return "ZZ";
    }
    return "?";
}

namespace {

using Col = std::uint32_t;

// Boundary matrix of faces of size k (rows) into faces of size k-1 (columns),
// as sparse rows with +-1 entries.
std::vector<std::vector<std::pair<Col, int>>> boundary(const std::vector<VertexSet>& top,
                                                       const std::vector<VertexSet>& bottom, std::size_t nverts)
{
    std::unordered_map<VertexSet, Col> index;
    index.reserve(bottom.size() * 2);
    for (Col c = 0; c < bottom.size(); ++c)
        index.emplace(bottom[c], c);
    std::vector<std::vector<std::pair<Col, int>>> rows;
    rows.reserve(top.size());
    for (auto& f : top) {
        std::vector<std::pair<Col, int>> row;
        int pos = 0;
        for (std::size_t v = 0; v < nverts; ++v) {
            if (!f.test(v))
                continue;
            VertexSet g = f;
            g.reset(v);
            row.push_back({index.at(g), (pos % 2 == 0) ? 1 : -1});
            ++pos;
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_p_sparse(const std::vector<std::vector<std::pair<Col, int>>>& m, std::uint64_t p)
{
    using Row = std::vector<std::pair<Col, std::uint64_t>>;
    std::unordered_map<Col, Row> piv;
    for (auto& src : m) {
        Row r;
        for (auto& [c, v] : src) {
            std::uint64_t x = static_cast<std::uint64_t>((v % static_cast<long>(p) + static_cast<long>(p)) %
                                                         static_cast<long>(p));
            if (x)
                r.push_back({c, x});
        }
        while (!r.empty()) {
            auto it = piv.find(r[0].first);
            if (it == piv.end()) {
                std::uint64_t iv = invmod(r[0].second, p);
                for (auto& e : r)
                    e.second = mulmod(e.second, iv, p);
                piv.emplace(r[0].first, std::move(r));
                break;
            }
            const Row& q = it->second;
            std::uint64_t c = r[0].second;
            Row out;
            std::size_t a = 1, b = 1;
            while (a < r.size() || b < q.size()) {
                if (b >= q.size() || (a < r.size() && r[a].first < q[b].first)) {
                    out.push_back(r[a++]);
                } else if (a >= r.size() || q[b].first < r[a].first) {
                    out.push_back({q[b].first, (p - mulmod(c, q[b].second, p)) % p});
                    ++b;
                } else {
                    std::uint64_t v = (r[a].second + p - mulmod(c, q[b].second, p)) % p;
                    if (v)
                        out.push_back({r[a].first, v});
                    ++a;
                    ++b;
                }
            }
            r = std::move(out);
        }
    }
    return piv.size();
}

std::size_t rank_rational_sparse(const std::vector<std::vector<std::pair<Col, int>>>& m)
{
    using Row = std::vector<std::pair<Col, mpq_class>>;
    std::unordered_map<Col, Row> piv;
    for (auto& src : m) {
        Row r;
        for (auto& [c, v] : src)
            r.push_back({c, mpq_class(v)});
        while (!r.empty()) {
            auto it = piv.find(r[0].first);
            if (it == piv.end()) {
                mpq_class iv = 1 / r[0].second;
                for (auto& e : r)
                    e.second *= iv;
                piv.emplace(r[0].first, std::move(r));
                break;
            }
            const Row& q = it->second;
            mpq_class c = r[0].second;
            Row out;
            std::size_t a = 1, b = 1;
            while (a < r.size() || b < q.size()) {
                if (b >= q.size() || (a < r.size() && r[a].first < q[b].first)) {
                    out.push_back(r[a++]);
                } else if (a >= r.size() || q[b].first < r[a].first) {
                    out.push_back({q[b].first, -c * q[b].second});
                    ++b;
                } else {
                    mpq_class v = r[a].second - c * q[b].second;
                    if (sgn(v) != 0)
                        out.push_back({r[a].first, v});
                    ++a;
                    ++b;
                }
            }
            r = std::move(out);
        }
    }
    return piv.size();
}

// Smith normal form of a dense integer matrix: returns the nonzero diagonal.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a)
{
    std::vector<mpz_class> diag;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pick the nonzero entry of least absolute value in the remaining block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        std::swap(a[t], a[pi]);
        for (auto& row : a)
            std::swap(row[t], row[pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility: the pivot must divide every remaining entry.
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k)
                                a[t][k] += a[i][k];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

struct IntegerRank {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;  // elementary divisors > 1
};

// Unit pivots are eliminated sparsely; the residual goes to dense SNF.
IntegerRank integer_smith(const std::vector<std::vector<std::pair<Col, int>>>& m)
{
    using Row = std::map<Col, mpz_class>;
    std::vector<Row> rows;
    for (auto& src : m) {
        Row r;
        for (auto& [c, v] : src)
            r[c] = v;
        rows.push_back(std::move(r));
    }
    std::vector<char> alive(rows.size(), 1);
    std::unordered_map<Col, std::vector<std::size_t>> col_rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i])
            col_rows[c].push_back(i);
    IntegerRank out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i])
                continue;
            Col pc = 0;
            bool found = false;
            for (auto& [c, v] : rows[i])
                if (v == 1 || v == -1) {
                    pc = c;
                    found = true;
                    break;
                }
            if (!found)
                continue;
            mpz_class u = rows[i][pc];
            for (std::size_t k : col_rows[pc]) {
                if (k == i || !alive[k])
                    continue;
                auto it = rows[k].find(pc);
                if (it == rows[k].end())
                    continue;
                mpz_class f = it->second * u;  // u = +-1, so u^{-1} = u
                for (auto& [c, v] : rows[i]) {
                    mpz_class& dst = rows[k][c];
                    bool fresh = dst == 0;
                    dst -= f * v;
                    if (dst == 0)
                        rows[k].erase(c);
                    else if (fresh)
                        col_rows[c].push_back(k);
                }
            }
            alive[i] = 0;
            ++out.rank;
            progress = true;
        }
    }
    std::vector<std::size_t> left;
    std::map<Col, std::size_t> cols;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (alive[i] && !rows[i].empty()) {
            left.push_back(i);
            for (auto& [c, v] : rows[i])
                cols.emplace(c, 0);
        }
    std::size_t k = 0;
    for (auto& [c, idx] : cols)
        idx = k++;
    std::vector<std::vector<mpz_class>> dense(left.size(), std::vector<mpz_class>(cols.size(), 0));
    for (std::size_t r = 0; r < left.size(); ++r)
        for (auto& [c, v] : rows[left[r]])
            dense[r][cols[c]] = v;
    for (auto& d : smith_diagonal(std::move(dense))) {
        ++out.rank;
        if (d > 1)
            out.torsion.push_back(d);
    }
    return out;
}

}  // namespace

HomologyReport reduced_homology(const SimplicialComplex& K, Coefficients coeffs, std::size_t max_faces)
{
    HomologyReport rep;
    rep.coeffs = coeffs;
    auto faces = K.faces_by_size();
    std::size_t total = 0;
    for (auto& f : faces)
        total += f.size();
    if (total > max_faces)
        throw std::length_error("complex has " + std::to_string(total) + " faces, over the budget");
    int top = static_cast<int>(faces.size()) - 1;  // largest face size
    // rank of boundary from size s to size s-1, s = 1..top
    std::vector<std::size_t> rk(faces.size() + 1, 0);
    std::vector<std::vector<mpz_class>> tors(faces.size() + 1);
    for (int s = 1; s <= top; ++s) {
        auto m = boundary(faces[s], faces[s - 1], K.nverts());
        switch (coeffs.kind) {
        case CoeffKind::Prime:
            rk[s] = rank_mod_p_sparse(m, coeffs.p);
            break;
        case CoeffKind::Rational:
            rk[s] = rank_rational_sparse(m);
            break;
        case CoeffKind::Integer: {
            auto ir = integer_smith(m);
            rk[s] = ir.rank;
            tors[s] = ir.torsion;
            break;
        }
        }
    }
    long euler_faces = 0, euler_betti = 0;
    for (int s = 0; s <= top; ++s) {
        int dim = s - 1;
        long cs = static_cast<long>(faces[s].size());
        rep.f_vector.push_back(cs);
        long b = cs - static_cast<long>(rk[s]) - static_cast<long>(s + 1 <= top ? rk[s + 1] : 0);
        rep.betti[dim] = b;
        if (coeffs.kind == CoeffKind::Integer && s + 1 <= top && !tors[s + 1].empty())
            rep.torsion[dim] = tors[s + 1];
        long sign = (dim % 2 == 0) ? 1 : -1;
        euler_faces += sign * cs;
        euler_betti += sign * b;
    }
    rep.euler_faces = euler_faces;
    rep.euler_betti = euler_betti;
    return rep;
}

ReisnerReport reisner_check(const SimplicialComplex& K, Coefficients coeffs)
{
    ReisnerReport rep;
    auto faces = K.faces_by_size();
    for (auto& level : faces)
        for (auto& f : level) {
            SimplicialComplex L = K.link(f);
            int top = L.dimension();
            auto h = reduced_homology(L, coeffs);
            ++rep.faces_checked;
            for (auto& [d, b] : h.betti) {
                bool below = d < top;
                bool torsion = coeffs.kind == CoeffKind::Integer && h.torsion.count(d) && d < top;
                if ((below && b != 0) || torsion) {
                    rep.cohen_macaulay = false;
                    std::string w = "link of face {";
                    for (std::size_t v = 0; v < K.nverts(); ++v)
                        if (f.test(v))
                            w += std::to_string(v) + ",";
                    w += "} has homology in dimension " + std::to_string(d);
                    rep.witness = w;
                    return rep;
                }
            }
        }
    return rep;
}

}  // namespace nh
