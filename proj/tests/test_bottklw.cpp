#include "gen.hpp"

#include "nh/bottklw.hpp"
#include "nh/srcomplex.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace nh;

namespace {

mpz_class binom(long n, long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Oracle for Bott's algorithm: try every permutation of w + rho.
std::optional<BottResult> bott_brute(const GLWeight& w)
{
    const std::size_t k = w.size();
    GLWeight shifted(k);
    for (std::size_t i = 0; i < k; ++i)
        shifted[i] = w[i] + static_cast<long>(k - 1 - i);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<BottResult> found;
    do {
        GLWeight v(k);
        for (std::size_t i = 0; i < k; ++i)
            v[i] = shifted[perm[i]];
        bool strict = true;
        for (std::size_t i = 0; i + 1 < k; ++i)
            strict = strict && v[i] > v[i + 1];
        if (!strict)
            continue;
        int inv = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                inv += perm[i] > perm[j];
        for (std::size_t i = 0; i < k; ++i)
            v[i] -= static_cast<long>(k - 1 - i);
        REQUIRE_FALSE(found.has_value());
        found = BottResult{inv, v};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

GLWeight ones(int count, long value)
{
    return GLWeight(static_cast<std::size_t>(count), value);
}

GLWeight cat(GLWeight a, const GLWeight& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("Schur dimensions")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(schur_dim(cat(ones(2, 1), ones(n - 2, 0))) == binom(n, 2));
    CHECK(schur_dim({2, 1, 0}) == 8);
    CHECK(count_ssyt({2, 1}, 3) == 8);
    CHECK_THROWS_AS(schur_dim({0, 1}), std::invalid_argument);
}

TEST_CASE("anchor bundles")
{
    // S_{0^{n-1},-1} E^dual = E and S_{(-1)^n} E^dual = wedge^n E.
    for (int n = 2; n <= 6; ++n) {
        CHECK(schur_dim(cat(ones(n - 1, 0), {-1})) == n);
        CHECK(schur_dim(ones(n, -1)) == 1);
    }
}

TEST_CASE("relative Bott on the line bundle weight")
{
    for (int n = 3; n <= 8; ++n)
        for (int j = 0; j <= n + 2; ++j) {
            auto r = bott_step(cat({-j - 1}, ones(n - 2, 0)));
            CHECK(r.has_value() == (j >= n - 2));
            if (r)
                CHECK(r->shift == n - 2);
        }
}

TEST_CASE("Pieri column contains the expected summand")
{
    for (int n = 3; n <= 7; ++n) {
        auto pieces = pieri_column(ones(n - 1, 1), n - 2);
        GLWeight want = cat(ones(n - 2, 2), {1});
        CHECK(std::find(pieces.begin(), pieces.end(), want) != pieces.end());
        for (const auto& p : pieces)
            CHECK(is_dominant(p));
    }
}

TEST_CASE("cohomology of the flag bundles")
{
    for (int n = 4; n <= 7; ++n) {
        auto e = cohomology_F(0, n - 2, n - 1, n);
        REQUIRE(e.size() == 1);
        REQUIRE(e.count(n - 2));
        REQUIRE(e[n - 2].size() == 1);
        CHECK(e[n - 2][0].weight == cat(ones(n - 1, 0), {-1}));

        auto r1 = cohomology_F(n + 1, 0, 0, n);
        REQUIRE(r1.count(n - 1));
        CHECK(r1[n - 1][0].weight == cat(ones(n - 1, -1), {-2}));
    }
}

TEST_CASE("wedge block uses the R1 (x) R2/R1 rewriting")
{
    for (int n = 4; n <= 6; ++n)
        for (int p = 2; p <= 2 * n + 1; ++p)
            for (const auto& s : xi_prime_decomposition(n, p))
                if (s.block == Block::Wedge) {
                    CHECK(s.a == s.i + 1);
                    CHECK(s.b == s.j + 1);
                    CHECK(s.i + s.j == p - 2);
                }
}

TEST_CASE("cohomology table rows")
{
    for (int n = 4; n <= 8; ++n) {
        auto t = cohomology_tables(n);
        CHECK(t.bott_unique);
        CHECK(t.at(0, 0) == 1);
        CHECK(t.at(n - 1, n - 2) == 1 + n);
        CHECK(t.at(2 * n - 2, 2 * n - 4) == n + binom(n, 2));
        CHECK(t.at(2 * n, 2 * n - 3) == n + binom(n, 2));
        CHECK(t.at(2 * n + 1, 2 * n - 3) == binom(n, 2));
        for (const auto& [pq, e] : t.entries)
            if (pq.first < pq.second)
                CHECK(e.dim == 0);
        std::string why;
        CHECK_MESSAGE(table_matches_expected(t, &why), why);
        for (auto [p, q] : {std::pair{n, n - 2}, {n, n - 1}, {2 * n - 1, 2 * n - 4}, {2 * n - 1, 2 * n - 3}})
            CHECK(t.tagged(p, q));
    }
}

TEST_CASE("degree from the table")
{
    CHECK(klw_degree(4) == 50);
    CHECK(klw_degree(5) == 130);
    for (int n = 4; n <= 8; ++n)
        CHECK(klw_degree(n) == mpq_class(static_cast<long>(c_facets(n).size())));
    for (int n = 4; n <= 50; ++n)
        CHECK(klw_degree(n) == mpq_class(degree_formula(n)));
}

TEST_CASE("Jordan minors")
{
    auto R = jordan_ring(3);
    CHECK(jordan_minor_expansion(3, 3, R) == parse_polynomial(R, "a3*y^2 - a2*y + a1"));
    for (int l = 1; l <= 4; ++l) {
        auto Rl = jordan_ring(l);
        for (int i = 1; i <= l; ++i)
            CHECK(jordan_minor_expansion(l, i, Rl) == jordan_minor_direct(l, i, Rl));
    }
}

TEST_CASE("property: Bott's algorithm against brute force")
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 600; ++trial) {
        int k = static_cast<int>(gen::uniform(rng, 1, 6));
        GLWeight w(static_cast<std::size_t>(k));
        for (auto& x : w)
            x = gen::uniform(rng, -5, 5);
        auto got = bott_step(w);
        auto want = bott_brute(w);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->shift == want->shift);
            CHECK(got->dominant == want->dominant);
            CHECK(is_dominant(got->dominant));
        }
    }
}

TEST_CASE("property: Weyl dimension equals tableau count")
{
    // Every partition with at most 6 boxes and at most k rows, k <= 4.
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& lam, int left, int maxpart) {
        for (int k = 1; k <= 4; ++k) {
            if (static_cast<int>(lam.size()) > k)
                continue;
            GLWeight w(static_cast<std::size_t>(k), 0);
            for (std::size_t i = 0; i < lam.size(); ++i)
                w[i] = lam[i];
            CHECK(schur_dim(w) == count_ssyt(lam, k));
        }
        for (int part = std::min(left, maxpart); part >= 1; --part) {
            lam.push_back(part);
            rec(lam, left - part, part);
            lam.pop_back();
        }
    };
    std::vector<int> lam;
    rec(lam, 6, 6);
}

TEST_CASE("property: Pieri column adds exactly j boxes, at most one per row")
{
    gen::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int k = static_cast<int>(gen::uniform(rng, 1, 6));
        GLWeight mu(static_cast<std::size_t>(k));
        long cur = gen::uniform(rng, -2, 4);
        for (auto& x : mu) {
            x = cur;
            cur -= gen::uniform(rng, 0, 2);
        }
        int j = static_cast<int>(gen::uniform(rng, 0, k));
        auto out = pieri_column(mu, j);
        // Oracle: every 0/1 increment with j ones whose result stays dominant.
        std::size_t expected = 0;
        std::vector<int> pick(static_cast<std::size_t>(k), 0);
        std::fill(pick.end() - j, pick.end(), 1);
        do {
            GLWeight v = mu;
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += pick[i];
            expected += is_dominant(v);
        } while (std::next_permutation(pick.begin(), pick.end()));
        CHECK(out.size() == expected);
        for (const auto& v : out) {
            long added = 0;
            for (int i = 0; i < k; ++i) {
                long d = v[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
                CHECK((d == 0 || d == 1));
                added += d;
            }
            CHECK(added == j);
        }
    }
}
