#include "nh/groebner.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace nh {

namespace {

using Num = std::vector<mpz_class>;

void trim(Num& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Num add(const Num& a, const Num& b, int shift)
{
    Num r(std::max(a.size(), b.size() + shift));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i + shift] += b[i];
    trim(r);
    return r;
}

Num mul_one_minus_tpow(const Num& a, int e)
{
    Num r(a.size() + e);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + e] -= a[i];
    }
    trim(r);
    return r;
}

// Removes redundant generators; keeps degree-ascending order for cheap checks.
std::vector<Monomial> minimal(std::vector<Monomial> g)
{
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (auto& m : g) {
        bool red = false;
        for (auto& o : out)
            if (o.divides(m)) {
                red = true;
                break;
            }
        if (!red)
            out.push_back(m);
    }
    return out;
}

Num numerator(std::vector<Monomial> gens, std::size_t nvars)
{
    if (gens.empty())
        return Num{1};
    for (auto& g : gens)
        if (g.is_one())
            return Num{};
    std::vector<int> count(nvars, 0);
    for (auto& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] > 0)
                ++count[v];
    std::size_t piv = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (count[v] > count[piv])
            piv = v;
    if (count[piv] <= 1) {
        // Pairwise coprime generators form a regular sequence.
        Num r{1};
        for (auto& g : gens)
            r = mul_one_minus_tpow(r, g.degree());
        return r;
    }
    std::vector<int> exps;
    for (auto& g : gens) {
        if (g[piv] == 0)
            continue;
        bool pure = g.degree() == g[piv];
        if (!pure)
            exps.push_back(g[piv]);
    }
    std::sort(exps.begin(), exps.end());
    int e = exps[exps.size() / 2];
    Monomial p(nvars);
    p[piv] = e;

    std::vector<Monomial> sum = gens;
    sum.push_back(p);
    std::vector<Monomial> quot;
    for (auto& g : gens) {
        Monomial q = g;
        q[piv] = std::max(0, g[piv] - e);
        quot.push_back(q);
    }
    Num a = numerator(minimal(std::move(sum)), nvars);
    Num b = numerator(minimal(std::move(quot)), nvars);
    return add(a, b, e);
}

mpz_class binom(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars)
{
    return numerator(minimal(gens), nvars);
}

HilbertData hilbert_from_monomials(const std::vector<Monomial>& gens, std::size_t nvars, int cutoff)
{
    HilbertData h;
    h.nvars = nvars;
    h.numerator = hilbert_numerator(gens, nvars);
    Num q = h.numerator;
    int c = 0;
    if (q.empty()) {
        h.dimension = -1;
        h.codimension = static_cast<int>(nvars) + 1;
        h.multiplicity = 0;
    } else {
        while (true) {
            mpz_class at1 = 0;
            for (auto& x : q)
                at1 += x;
            if (at1 != 0 || c == static_cast<int>(nvars))
                break;
            // Divide by (1 - t): prefix sums.
            Num r(q.size() - 1);
            mpz_class s = 0;
            for (std::size_t i = 0; i + 1 < q.size(); ++i) {
                s += q[i];
                r[i] = s;
            }
            trim(r);
            q = r;
            ++c;
        }
        h.codimension = c;
        h.dimension = static_cast<int>(nvars) - c;
        h.multiplicity = 0;
        for (auto& x : q)
            h.multiplicity += x;
    }
    h.reduced = q;
    long k = static_cast<long>(nvars);
    for (int d = 0; d <= cutoff; ++d) {
        mpz_class v = 0;
        for (std::size_t j = 0; j < h.numerator.size() && static_cast<int>(j) <= d; ++j) {
            if (k == 0)
                v += (static_cast<int>(j) == d) ? h.numerator[j] : mpz_class(0);
            else
                v += h.numerator[j] * binom(d - static_cast<long>(j) + k - 1, k - 1);
        }
        h.function.push_back(v);
    }
    return h;
}

HilbertResult hilbert(const std::vector<Polynomial>& gens, const TermOrder& order, int cutoff, const Budget& budget)
{
    std::size_t nv = order.nvars();
    std::vector<int> ones(nv, 1);
    for (auto& g : gens)
        if (!g.is_homogeneous(ones))
            throw std::invalid_argument("hilbert: generator is not homogeneous: " + to_string(g));
    HilbertResult res;
    auto in = initial_ideal(gens, order, budget);
    res.status = in.status;
    if (in.status != Status::Ok)
        return res;
    res.data = hilbert_from_monomials(in.gens, nv, cutoff);
    return res;
}

// ---------------------------------------------------------------- linear-algebra oracle

namespace {

using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;  // ascending column

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void monomials_of_degree(std::size_t nvars, int d, std::vector<Monomial>& out)
{
    Monomial m(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
        if (v + 1 == nvars) {
            m[v] = left;
            out.push_back(m);
            m[v] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[v] = e;
            rec(v + 1, left - e);
        }
        m[v] = 0;
    };
    if (nvars == 0) {
        if (d == 0)
            out.push_back(m);
        return;
    }
    rec(0, d);
}

}  // namespace

std::vector<long> hilbert_function_linear(const std::vector<Polynomial>& gens, int cutoff, unsigned long p)
{
    if (gens.empty())
        throw std::invalid_argument("hilbert_function_linear needs a ring");
    Field F = Field::prime(p);
    std::size_t nv = gens[0].ring()->nvars();
    std::vector<int> ones(nv, 1);
    struct G {
        int deg;
        std::vector<std::pair<Monomial, std::uint64_t>> terms;
    };
    std::vector<G> gs;
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        if (!g.is_homogeneous(ones))
            throw std::invalid_argument("hilbert_function_linear: inhomogeneous generator");
        G x;
        x.deg = g.total_degree();
        for (auto& t : g.terms()) {
            Coeff c = t.c;
            F.normalize(c);
            if (c != 0)
                x.terms.push_back({t.m, c.get_num().get_ui()});
        }
        if (!x.terms.empty())
            gs.push_back(std::move(x));
    }
    std::vector<long> out;
    for (int d = 0; d <= cutoff; ++d) {
        std::vector<Monomial> cols;
        monomials_of_degree(nv, d, cols);
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
        for (std::uint32_t i = 0; i < cols.size(); ++i)
            index.emplace(cols[i], i);
        std::unordered_map<std::uint32_t, Row> pivots;
        for (auto& g : gs) {
            if (g.deg > d)
                continue;
            std::vector<Monomial> mults;
            monomials_of_degree(nv, d - g.deg, mults);
            for (auto& m : mults) {
                Row r;
                for (auto& [gm, gc] : g.terms)
                    r.push_back({index.at(gm * m), gc});
                std::sort(r.begin(), r.end());
                while (!r.empty()) {
                    auto it = pivots.find(r[0].first);
                    if (it == pivots.end()) {
                        std::uint64_t inv = powmod(r[0].second, p - 2, p);
                        for (auto& e : r)
                            e.second = mulmod(e.second, inv, p);
                        pivots.emplace(r[0].first, std::move(r));
                        break;
                    }
                    const Row& pr = it->second;
                    std::uint64_t c = r[0].second;
                    Row nr;
                    nr.reserve(r.size() + pr.size());
                    std::size_t a = 1, b = 1;
                    while (a < r.size() || b < pr.size()) {
                        if (b >= pr.size() || (a < r.size() && r[a].first < pr[b].first)) {
                            nr.push_back(r[a++]);
                        } else if (a >= r.size() || pr[b].first < r[a].first) {
                            nr.push_back({pr[b].first, (p - mulmod(c, pr[b].second, p)) % p});
                            ++b;
                        } else {
                            std::uint64_t v = (r[a].second + p - mulmod(c, pr[b].second, p)) % p;
                            if (v)
                                nr.push_back({r[a].first, v});
                            ++a;
                            ++b;
                        }
                    }
                    r = std::move(nr);
                }
            }
        }
        out.push_back(static_cast<long>(cols.size()) - static_cast<long>(pivots.size()));
    }
    return out;
}

}  // namespace nh
