#include "gen.hpp"

#include "nh/groebner.hpp"
#include "nh/nestcore.hpp"
#include "nh/srcomplex.hpp"

#include <doctest.h>

#include <set>

using namespace nh;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

std::vector<Polynomial> Ps(const RingPtr& R, std::initializer_list<const char*> ss)
{
    std::vector<Polynomial> v;
    for (auto s : ss)
        v.push_back(P(R, s));
    return v;
}

// Reduces any reducible term until none is left; independent of the library's division loop.
Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& G, const TermOrder& order)
{
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : f.terms()) {
            for (const auto& g : G) {
                auto lt = g.leading_term(order);
                if (!lt.m.divides(t.m))
                    continue;
                f = f - g.shifted(t.m / lt.m, t.c / lt.c);
                changed = true;
                break;
            }
            if (changed)
                break;
        }
    }
    return f;
}

}  // namespace

TEST_CASE("division against a hand-run reduction")
{
    auto R = ring_xy();
    auto order = TermOrder::lex(2);
    auto G = Ps(R, {"x^2 - y", "y^2 - 1"});
    auto f = P(R, "x^2*y");
    auto d = divide(f, G, order);
    CHECK(d.remainder == naive_reduce(f, G, order));
    CHECK(d.remainder == P(R, "1"));
    Polynomial back = d.remainder;
    for (std::size_t i = 0; i < G.size(); ++i)
        back += d.quotients[i] * G[i];
    CHECK(back == f);
}

TEST_CASE("Buchberger on small inputs")
{
    auto R = ring_xy();
    auto gb = buchberger(Ps(R, {"x", "y^2"}), TermOrder::grevlex(2));
    REQUIRE(gb.ok());
    CHECK(gb.basis.size() == 2);
    auto lex = buchberger(Ps(R, {"x^2 - y", "y^2 - 1"}), TermOrder::lex(2));
    REQUIRE(lex.ok());
    bool has = false;
    for (const auto& g : lex.basis)
        has = has || g == P(R, "y^2 - 1");
    CHECK(has);
}

TEST_CASE("S-pair certificate")
{
    auto R = ring_xy();
    auto s = build_setup(2);
    CHECK(is_groebner({s.gamma1, s.gamma2}, bigraded_lex_order(*s.T)).is_basis);
    // S(x + y, x) = y, which no leading monomial divides.
    auto c = is_groebner(Ps(R, {"x + y", "x"}), TermOrder::grevlex(2));
    CHECK_FALSE(c.is_basis);
    CHECK(c.remainder.monic(TermOrder::grevlex(2)) == P(R, "y"));
}

TEST_CASE("budget exhaustion is reported as a status")
{
    auto R = make_ring({"x", "y", "z"});
    Budget tiny{1, 60};
    auto r = buchberger(Ps(R, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y", "x*y*z - 1"}), TermOrder::grevlex(3), tiny);
    CHECK(r.status == Status::BudgetExceeded);
}

TEST_CASE("colon and intersection in k[x,y]")
{
    auto R = ring_xy();
    auto order = TermOrder::grevlex(2);
    for (int r = 2; r <= 6; ++r) {
        auto I = std::vector<Polynomial>{P(R, "x"), P(R, "y").pow(static_cast<unsigned>(r))};
        auto q = colon(I, P(R, "y"), order);
        REQUIRE(q.status == Status::Ok);
        CHECK(ideals_equal(q.gens, {P(R, "x"), P(R, "y").pow(static_cast<unsigned>(r - 1))}, order));
    }
    auto cap = intersect(Ps(R, {"x", "y^2"}), Ps(R, {"x^2", "y"}), order);
    REQUIRE(cap.status == Status::Ok);
    CHECK(ideals_equal(cap.gens, Ps(R, {"x^2", "x*y", "y^2"}), order));
    // Oracle: a monomial lies in an intersection of monomial ideals iff it lies in both.
    auto in = initial_ideal(cap.gens, order);
    std::vector<Monomial> A = {Monomial(std::vector<int>{1, 0}), Monomial(std::vector<int>{0, 2})};
    std::vector<Monomial> B = {Monomial(std::vector<int>{2, 0}), Monomial(std::vector<int>{0, 1})};
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b) {
            Monomial m(std::vector<int>{a, b});
            CHECK(in_monomial_ideal(m, in.gens) == (in_monomial_ideal(m, A) && in_monomial_ideal(m, B)));
        }
}

TEST_CASE("colength of powers of the maximal ideal")
{
    auto R = ring_xy();
    for (int n = 1; n <= 7; ++n) {
        std::vector<Polynomial> gens;
        for (int i = 0; i <= n; ++i)
            gens.push_back(P(R, "x").pow(static_cast<unsigned>(i)) * P(R, "y").pow(static_cast<unsigned>(n - i)));
        CHECK(colength(gens, TermOrder::grevlex(2)) == n * (n + 1) / 2);
    }
    CHECK_FALSE(colength(Ps(R, {"x"}), TermOrder::grevlex(2)).has_value());
    CHECK(colength(Ps(R, {"1"}), TermOrder::grevlex(2)) == 0);
}

TEST_CASE("Hilbert data of K for n = 2 and n = 4")
{
    auto s2 = build_setup(2);
    auto K2 = k_monomials(s2).all();
    auto h2 = hilbert_from_monomials(K2, s2.A->nvars(), 6);
    CHECK(h2.codimension == 4);
    CHECK(h2.multiplicity == 2);
    // Oracle: minimal primes of a squarefree ideal are its minimal vertex covers.
    const std::size_t nv = s2.A->nvars();
    std::size_t min_size = nv, count = 0;
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
        bool cover = true;
        for (const auto& g : K2) {
            bool hit = false;
            for (std::size_t v = 0; v < nv; ++v)
                hit = hit || (g[v] && (mask >> v & 1u));
            cover = cover && hit;
        }
        if (!cover)
            continue;
        std::size_t sz = static_cast<std::size_t>(__builtin_popcount(mask));
        if (sz < min_size) {
            min_size = sz;
            count = 0;
        }
        if (sz == min_size)
            ++count;
    }
    CHECK(min_size == 4);
    CHECK(count == 2);

    auto s4 = build_setup(4);
    CHECK(hilbert_from_monomials(k_monomials(s4).all(), s4.A->nvars(), 0).multiplicity == 50);
}

TEST_CASE("initial ideal of J at n = 2 is K")
{
    auto s = build_setup(2);
    auto in = initial_ideal(ideal_I_closed_form(s).gens(), antidiagonal_order(*s.A));
    REQUIRE(in.status == Status::Ok);
    CHECK(same_monomial_ideal(in.gens, k_monomials(s).all()));
}

TEST_CASE("property: Hilbert function agrees with direct linear algebra")
{
    const unsigned long p = 32003;
    auto R = make_ring({"x", "y", "z"}, Field::prime(p));
    gen::Rng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> I;
        int k = static_cast<int>(gen::uniform(rng, 1, 3));
        for (int i = 0; i < k; ++i)
            I.push_back(gen::homogeneous(rng, R, static_cast<int>(gen::uniform(rng, 1, 3)), 3));
        auto h = hilbert(I, TermOrder::grevlex(3), 6);
        REQUIRE(h.status == Status::Ok);
        auto direct = hilbert_function_linear(I, 6, p);
        for (int d = 0; d <= 6; ++d)
            CHECK(h.data.function[static_cast<std::size_t>(d)] == direct[static_cast<std::size_t>(d)]);
        // The same numbers from the initial ideal alone.
        auto in = initial_ideal(I, TermOrder::grevlex(3));
        auto hm = hilbert_from_monomials(in.gens, 3, 6);
        CHECK(hm.function == h.data.function);
    }
}

TEST_CASE("property: division is deterministic and normal forms are linear")
{
    auto R = make_ring({"x", "y", "z"});
    auto order = TermOrder::grevlex(3);
    gen::Rng rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> I = {gen::polynomial(rng, R, 3, 2), gen::polynomial(rng, R, 3, 2)};
        auto gb = buchberger(I, order, Budget{20000, 30});
        if (!gb.ok())
            continue;
        auto f = gen::polynomial(rng, R, 4, 3), g = gen::polynomial(rng, R, 4, 3);
        auto d1 = divide(f, I, order), d2 = divide(f, I, order);
        CHECK(d1.remainder == d2.remainder);
        CHECK(d1.quotients == d2.quotients);
        auto nf = [&](const Polynomial& h) { return normal_form(h, gb.basis, order); };
        CHECK(nf(f + g) == nf(f) + nf(g));
        CHECK(nf(f.scaled(Coeff(3, 7))) == nf(f).scaled(Coeff(3, 7)));
    }
}

TEST_CASE("property: colon and intersection containments")
{
    auto R = ring_xy();
    auto order = TermOrder::grevlex(2);
    gen::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto I = gen::m_primary(rng, R);
        auto J = gen::m_primary(rng, R);
        auto f = gen::polynomial(rng, R, 2, 2);
        if (f.is_zero())
            continue;
        auto GI = buchberger(I, order).basis, GJ = buchberger(J, order).basis;
        auto q = colon(I, f, order);
        REQUIRE(q.status == Status::Ok);
        for (const auto& g : q.gens)
            CHECK(reduces_to_zero(f * g, GI, order));
        auto cap = intersect(I, J, order);
        REQUIRE(cap.status == Status::Ok);
        for (const auto& g : cap.gens) {
            CHECK(reduces_to_zero(g, GI, order));
            CHECK(reduces_to_zero(g, GJ, order));
        }
        // I J lies in the intersection.
        auto Gcap = buchberger(cap.gens, order).basis;
        CHECK(reduces_to_zero(I[0] * J[0], Gcap, order));
    }
}

TEST_CASE("property: initial ideal and colength are consistent")
{
    auto R = ring_xy();
    auto order = TermOrder::grevlex(2);
    gen::Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        auto I = gen::m_primary(rng, R);
        auto in = initial_ideal(I, order);
        auto c = colength(I, order);
        REQUIRE(c.has_value());
        CHECK(colength_monomial(in.gens, 2) == c);
        CHECK(static_cast<long>(standard_monomials(in.gens, 2).size()) == *c);
    }
}
