#pragma once

// Small random generators for property tests.

#include "nh/exactpoly.hpp"

#include <random>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline nh::Monomial monomial(Rng& rng, std::size_t nvars, int max_exp)
{
    std::vector<int> e(nvars);
    for (auto& x : e)
        x = static_cast<int>(uniform(rng, 0, max_exp));
    return nh::Monomial(e);
}

inline nh::Coeff coeff(Rng& rng, const nh::Field& F)
{
    if (F.is_rational()) {
        long num = uniform(rng, -9, 9);
        long den = uniform(rng, 1, 4);
        nh::Coeff c(num, den);
        c.canonicalize();
        return c;
    }
    return F.from_int(uniform(rng, 0, static_cast<long>(F.characteristic()) - 1));
}

inline nh::Polynomial polynomial(Rng& rng, const nh::RingPtr& R, int terms, int max_exp)
{
    std::vector<nh::Term> ts;
    for (int i = 0; i < terms; ++i)
        ts.push_back({monomial(rng, R->nvars(), max_exp), coeff(rng, R->field())});
    return nh::Polynomial::from_terms(R, ts);
}

/// Homogeneous polynomial of degree d.
inline nh::Polynomial homogeneous(Rng& rng, const nh::RingPtr& R, int d, int terms)
{
    std::vector<nh::Term> ts;
    const std::size_t n = R->nvars();
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e(n, 0);
        for (int k = 0; k < d; ++k)
            ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))];
        ts.push_back({nh::Monomial(e), coeff(rng, R->field())});
    }
    return nh::Polynomial::from_terms(R, ts);
}

/// An m-primary ideal of k[x, y]: x^a, y^b and a few polynomials without constant term.
inline std::vector<nh::Polynomial> m_primary(Rng& rng, const nh::RingPtr& R, int max_power = 4, int extra = 2)
{
    std::vector<nh::Polynomial> I;
    I.push_back(nh::Polynomial::variable(R, 0).pow(static_cast<unsigned>(uniform(rng, 1, max_power))));
    I.push_back(nh::Polynomial::variable(R, 1).pow(static_cast<unsigned>(uniform(rng, 1, max_power))));
    for (int i = 0; i < extra; ++i) {
        std::vector<nh::Term> ts;
        for (int k = 0; k < 3; ++k) {
            nh::Monomial m = monomial(rng, 2, 3);
            if (m.is_one())
                m[0] = 1;
            ts.push_back({m, coeff(rng, R->field())});
        }
        auto f = nh::Polynomial::from_terms(R, ts);
        if (!f.is_zero())
            I.push_back(f);
    }
    return I;
}

/// Staircase monomial ideal of k[x, y]: column heights h_0 >= h_1 >= ... >= h_{k-1} > 0.
inline std::vector<nh::Monomial> staircase(const std::vector<int>& heights)
{
    std::vector<nh::Monomial> gens;
    const int k = static_cast<int>(heights.size());
    gens.push_back(nh::Monomial(std::vector<int>{k, 0}));
    for (int i = 0; i < k; ++i)
        gens.push_back(nh::Monomial(std::vector<int>{i, heights[static_cast<std::size_t>(i)]}));
    return gens;
}

inline std::vector<int> random_partition(Rng& rng, int max_cols, int max_height)
{
    int k = static_cast<int>(uniform(rng, 1, max_cols));
    std::vector<int> h(static_cast<std::size_t>(k));
    int cur = static_cast<int>(uniform(rng, 1, max_height));
    for (auto& v : h) {
        v = cur;
        cur = static_cast<int>(uniform(rng, 1, cur));
    }
    return h;
}

inline std::vector<nh::Polynomial> as_polys(const std::vector<nh::Monomial>& ms, const nh::RingPtr& R)
{
    std::vector<nh::Polynomial> out;
    for (const auto& m : ms)
        out.push_back(nh::Polynomial::term(R, m, nh::Coeff(1)));
    return out;
}

}  // namespace gen
