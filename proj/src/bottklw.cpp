#include "nh/bottklw.hpp"
#include "nh/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nh {

namespace {

mpz_class binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Summands of one block; the block determines how (i, j) shift into (a, b).
std::vector<BundleSummand> block_summands(int n, int p, Block block)
{
    int offset = block == Block::Eta ? 0 : block == Block::Wedge ? 2 : 1;
    int da = (block == Block::R2Sub || block == Block::Wedge) ? 1 : 0;
    int db = (block == Block::R2Quot || block == Block::Wedge) ? 1 : 0;
    std::vector<BundleSummand> out;
    int r = p - offset;
    if (r < 0)
        return out;
    for (int i = 0; i <= n && i <= r; ++i) {
        int j = r - i;
        if (j > n - 1)
            continue;
        BundleSummand s;
        s.block = block;
        s.i = i;
        s.a = i + da;
        s.j = j;
        s.b = j + db;
        s.e = binom(n, i).get_si();
        out.push_back(s);
    }
    return out;
}

}  // namespace

bool is_dominant(const GLWeight& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i])
            return false;
    return true;
}

std::string to_string(const GLWeight& w)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

std::optional<BottResult> bott_step(const GLWeight& w)
{
    const long k = static_cast<long>(w.size());
    std::vector<long> v(w.size());
    for (long i = 0; i < k; ++i)
        v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] + (k - 1 - i);
    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j])
                return std::nullopt;
            if (v[i] < v[j])
                ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<>());
    BottResult r;
    r.shift = inversions;
    r.dominant.resize(v.size());
    for (long i = 0; i < k; ++i)
        r.dominant[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - (k - 1 - i);
    return r;
}

mpz_class schur_dim(const GLWeight& w)
{
    if (!is_dominant(w))
        throw std::invalid_argument("schur_dim: weight " + to_string(w) + " is not dominant");
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            num *= w[i] - w[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    return num / den;
}

std::vector<GLWeight> pieri_column(const GLWeight& mu, int j)
{
    std::vector<GLWeight> out;
    const int k = static_cast<int>(mu.size());
    if (j < 0 || j > k)
        return out;
    std::vector<char> pick(static_cast<std::size_t>(k), 0);
    std::fill(pick.begin(), pick.begin() + j, 1);
    do {
        GLWeight w = mu;
        for (int r = 0; r < k; ++r)
            w[static_cast<std::size_t>(r)] += pick[static_cast<std::size_t>(r)];
        if (is_dominant(w))
            out.push_back(std::move(w));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

mpz_class count_ssyt(const std::vector<int>& lambda, int k)
{
    std::vector<int> shape;
    for (int x : lambda)
        if (x > 0)
            shape.push_back(x);
    if (shape.empty())
        return 1;
    if (k <= 0 || static_cast<int>(shape.size()) > k)
        return 0;
    // Remove the horizontal strip filled with k: mu_i in [lambda_{i+1}, lambda_i].
    mpz_class total = 0;
    std::vector<int> mu(shape.size());
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == shape.size()) {
            total += count_ssyt(mu, k - 1);
            return;
        }
        int lo = r + 1 < shape.size() ? shape[r + 1] : 0;
        for (int m = lo; m <= shape[r]; ++m) {
            mu[r] = m;
            rec(r + 1);
        }
    };
    rec(0);
    return total;
}

std::map<int, std::vector<GLPiece>> cohomology_F(int a, int j, int b, int n)
{
    std::map<int, std::vector<GLPiece>> out;
    if (n < 2 || j < 0 || j > n - 1)
        return out;
    // Relative Bott on Gr(1, Q_{n-1}): weight (-b | 0^{n-2}).
    GLWeight rel(static_cast<std::size_t>(n - 1), 0);
    rel[0] = -b;
    auto r = bott_step(rel);
    if (!r)
        return out;
    for (const auto& lam : pieri_column(r->dominant, j)) {
        GLWeight full;
        full.reserve(static_cast<std::size_t>(n));
        full.push_back(-a);
        full.insert(full.end(), lam.begin(), lam.end());
        auto g = bott_step(full);
        if (!g)
            continue;
        auto& pieces = out[r->shift + g->shift];
        auto it = std::find_if(pieces.begin(), pieces.end(),
                               [&](const GLPiece& p) { return p.weight == g->dominant; });
        if (it == pieces.end())
            pieces.push_back({g->dominant, 1});
        else
            ++it->multiplicity;
    }
    return out;
}

std::string to_string(Block b)
{
    switch (b) {
    case Block::Eta: return "eta";
    case Block::R2Sub: return "R1";
    case Block::R2Quot: return "R2/R1";
    case Block::Wedge: return "wedge2R2";
    }
    return "?";
}

std::vector<BundleSummand> xi_prime_decomposition(int n, int p)
{
    std::vector<BundleSummand> out;
    for (Block b : {Block::Eta, Block::R2Sub, Block::R2Quot, Block::Wedge}) {
        auto part = block_summands(n, p, b);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::map<int, mpz_class> block_cohomology(int n, int p, Block block)
{
    std::map<int, mpz_class> out;
    for (const auto& s : block_summands(n, p, block))
        for (const auto& [q, pieces] : cohomology_F(s.a, s.j, s.b, n))
            for (const auto& piece : pieces)
                out[q] += s.e * piece.multiplicity * schur_dim(piece.weight);
    return out;
}

mpz_class CohomologyTable::at(int p, int q) const
{
    auto it = entries.find({p, q});
    return it == entries.end() ? mpz_class(0) : it->second.dim;
}

bool CohomologyTable::tagged(int p, int q) const
{
    auto it = entries.find({p, q});
    return it != entries.end() && it->second.tag == EntryTag::CancellingPair;
}

CohomologyTable cohomology_tables(int n)
{
    CohomologyTable t;
    t.n = n;
    const int pmax = 2 * n + 1;
    for (int p = 0; p <= pmax; ++p) {
        for (const auto& s : xi_prime_decomposition(n, p)) {
            auto h = cohomology_F(s.a, s.j, s.b, n);
            if (h.size() > 1)
                t.bott_unique = false;
        }
        auto eta = block_cohomology(n, p, Block::Eta);
        auto sub = block_cohomology(n, p, Block::R2Sub);
        auto quot = block_cohomology(n, p, Block::R2Quot);
        auto wedge = block_cohomology(n, p, Block::Wedge);

        // Connecting maps H^q(R2/R1 part) -> H^{q+1}(R1 part) have unknown rank;
        // the largest possible cancellation is subtracted and the pair is tagged.
        auto get = [](const std::map<int, mpz_class>& m, int q) {
            auto it = m.find(q);
            return it == m.end() ? mpz_class(0) : it->second;
        };
        std::map<int, mpz_class> bound;
        for (const auto& [q, d] : quot) {
            mpz_class up = get(sub, q + 1);
            if (d > 0 && up > 0)
                bound[q] = std::min<mpz_class>(d, up);
        }
        std::vector<int> qs;
        for (const auto* m : {&eta, &sub, &quot, &wedge})
            for (const auto& [q, d] : *m)
                if (d != 0)
                    qs.push_back(q);
        std::sort(qs.begin(), qs.end());
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        for (int q : qs) {
            TableEntry e;
            e.eta = get(eta, q);
            e.wedge = get(wedge, q);
            e.r2 = get(sub, q) + get(quot, q) - get(bound, q) - get(bound, q - 1);
            e.dim = e.eta + e.r2 + e.wedge;
            mpz_class pb = std::max(get(bound, q), get(bound, q - 1));
            if (pb > 0) {
                e.tag = EntryTag::CancellingPair;
                e.pair_bound = pb;
            }
            if (e.dim != 0 || e.tag == EntryTag::CancellingPair)
                t.entries[{p, q}] = e;
        }
    }
    return t;
}

mpq_class klw_degree(const CohomologyTable& t)
{
    mpq_class sum = 0;
    for (const auto& [pq, e] : t.entries) {
        auto [p, q] = pq;
        mpz_class p4 = p;
        p4 = p4 * p4 * p4 * p4;
        mpq_class term(p4 * e.dim, 24);
        term.canonicalize();
        if ((p - q) % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

mpq_class klw_degree(int n) { return klw_degree(cohomology_tables(n)); }

mpz_class degree_formula(long n)
{
    mpz_class v = n - 1;
    v *= n;
    v *= n + 1;
    v *= 3 * n - 2;
    return v / 12;
}

std::map<std::pair<int, int>, ExpectedEntry> expected_table(int n)
{
    const mpz_class c2 = binom(n, 2);
    std::map<std::pair<int, int>, ExpectedEntry> e;
    e[{0, 0}] = {1, false};
    e[{n - 1, n - 2}] = {1 + n, false};
    e[{n, n - 2}] = {0, true};
    e[{n, n - 1}] = {1, true};
    e[{n + 1, n - 1}] = {n, false};
    e[{2 * n - 2, 2 * n - 4}] = {n + c2, false};
    e[{2 * n - 1, 2 * n - 4}] = {c2, true};
    e[{2 * n - 1, 2 * n - 3}] = {1, true};
    e[{2 * n, 2 * n - 3}] = {n + c2, false};
    e[{2 * n + 1, 2 * n - 3}] = {c2, false};
    return e;
}

bool table_matches_expected(const CohomologyTable& t, std::string* witness)
{
    const auto want = expected_table(t.n);
    auto fail = [&](int p, int q, const std::string& what) {
        if (witness)
            *witness = "(" + std::to_string(p) + "," + std::to_string(q) + "): " + what;
        return false;
    };
    for (const auto& [pq, w] : want) {
        auto it = t.entries.find(pq);
        mpz_class got = it == t.entries.end() ? mpz_class(0) : it->second.dim;
        bool tag = it != t.entries.end() && it->second.tag == EntryTag::CancellingPair;
        if (got != w.dim)
            return fail(pq.first, pq.second, "dim " + got.get_str() + " expected " + w.dim.get_str());
        if (tag != w.tagged)
            return fail(pq.first, pq.second, tag ? "unexpected tag" : "missing tag");
    }
    for (const auto& [pq, e] : t.entries)
        if (!want.count(pq) && (e.dim != 0 || e.tag == EntryTag::CancellingPair))
            return fail(pq.first, pq.second, "unexpected entry " + e.dim.get_str());
    return true;
}

RingPtr jordan_ring(int l, Field field)
{
    std::vector<std::string> names{"y"};
    for (int i = 1; i <= l; ++i)
        names.push_back("a" + std::to_string(i));
    return make_ring(std::move(names), field);
}

Polynomial jordan_minor_expansion(int l, int i, const RingPtr& ring)
{
    if (i < 1 || i > l)
        throw std::invalid_argument("jordan_minor_expansion: need 1 <= i <= l");
    Polynomial y = Polynomial::variable(ring, "y");
    Polynomial inner(ring);
    // a_i y^{i-1} - a_{i-1} y^{i-2} + ... + (-1)^{i+1} a_1
    for (int k = i; k >= 1; --k) {
        Polynomial t = Polynomial::variable(ring, "a" + std::to_string(k)) * y.pow(static_cast<unsigned>(k - 1));
        if ((i - k) % 2)
            inner -= t;
        else
            inner += t;
    }
    return (-y).pow(static_cast<unsigned>(l - i)) * inner;
}

Polynomial jordan_minor_direct(int l, int i, const RingPtr& ring)
{
    if (i < 1 || i > l + 1)
        throw std::invalid_argument("jordan_minor_direct: row out of range");
    Polynomial zero(ring);
    PolyMatrix m(static_cast<std::size_t>(l + 1), std::vector<Polynomial>(static_cast<std::size_t>(l), zero));
    for (int r = 0; r < l; ++r) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = Polynomial::variable(ring, "y");
        if (r + 1 < l)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + 1)] = Polynomial::constant(ring, 1);
    }
    for (int c = 0; c < l; ++c)
        m[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] =
            Polynomial::variable(ring, "a" + std::to_string(c + 1));
    std::vector<std::size_t> rows, cols;
    for (int r = 0; r <= l; ++r)
        if (r != i - 1)
            rows.push_back(static_cast<std::size_t>(r));
    for (int c = 0; c < l; ++c)
        cols.push_back(static_cast<std::size_t>(c));
    return poly_minor(m, rows, cols, ring);
}

}  // namespace nh
