#include "gen.hpp"

#include "nh/nestcore.hpp"

#include <doctest.h>

using namespace nh;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

// Kernel dimensions computed straight from ranks.
std::pair<std::size_t, std::size_t> kernel_dims(const Matrix& A, const Matrix& a)
{
    const std::size_t n = A.cols();
    std::size_t k1 = n - rank(A.stack(a));
    std::size_t k2 = n - rank((A * A).stack(a * A).stack(a));
    return {k1, k2};
}

}  // namespace

TEST_CASE("Hilbert-Burch matrix at n = 2")
{
    auto s = build_setup(2);
    REQUIRE(s.X.size() == 3);
    REQUIRE(s.X[0].size() == 2);
    const char* want[3][2] = {{"y", "0"}, {"-x", "y"}, {"0", "-x"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(s.X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == P(s.T, want[i][j]));
    for (const auto& e : s.Y.back())
        CHECK(e.is_zero());
}

TEST_CASE("minors at n = 1")
{
    auto s = build_setup(1);
    auto d = delta_minors(s);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == P(s.T, "-x + z*w_2_1"));
    CHECK(d[1] == P(s.T, "y + z*w_1_1"));
    auto L = ideal_L(s);
    auto g = natural_bigrading(*s.B);
    for (const auto& f : L.gens()) {
        auto b = bidegree(f, g);
        CHECK(b.homogeneous);
        CHECK((b.d2 == 0 || b.d2 == 1));
    }
    // Both routes agree at n = 1; one f_i is the constant 1, so the ideal is the unit ideal.
    auto div = ideal_I_division(s), closed = ideal_I_closed_form(s);
    CHECK(div.f == closed.f);
    CHECK(div.F == closed.F);
    CHECK(colength(closed.gens(), antidiagonal_order(*s.A)) == 0);
}

TEST_CASE("division remainders have the expected shape")
{
    for (int n = 2; n <= 4; ++n) {
        auto s = build_setup(n);
        CHECK_NOTHROW(ideal_L(s));
        auto L = ideal_L(s);
        auto g = natural_bigrading(*s.B);
        for (const auto& f : L.gens())
            CHECK(bidegree(f, g).homogeneous);
    }
}

TEST_CASE("generators of J at n = 2")
{
    auto s = build_setup(2);
    auto I = ideal_I_division(s);
    CHECK(I.f[0] == P(s.A, "-w_3_1"));
    CHECK(I.F[2] == P(s.A, "w_1_1*w_2_2 - w_1_2*w_2_1"));
}

TEST_CASE("degrees of f_i and F_i")
{
    for (int n = 2; n <= 5; ++n) {
        auto s = build_setup(n);
        auto I = ideal_I_closed_form(s);
        for (const auto& f : I.f)
            if (!f.is_zero()) {
                CHECK(f.is_homogeneous(std::vector<int>(s.A->nvars(), 1)));
                CHECK(f.total_degree() == n - 1);
            }
        for (const auto& F : I.F)
            if (!F.is_zero())
                CHECK(F.total_degree() == n);
    }
}

TEST_CASE("division route equals closed form for n = 2..5")
{
    for (int n = 2; n <= 5; ++n) {
        auto s = build_setup(n);
        auto a = ideal_I_division(s), b = ideal_I_closed_form(s);
        CHECK(a.f == b.f);
        CHECK(a.F == b.F);
    }
}

TEST_CASE("setting v = 0 in L recovers J")
{
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto r = retract_to_A(s, ideal_L(s));
        auto c = ideal_I_closed_form(s);
        CHECK(r.f == c.f);
        CHECK(r.F == c.F);
    }
}

TEST_CASE("leading monomials at n = 5")
{
    auto s = build_setup(5);
    auto k = k_monomials(s);
    CHECK(to_string(k.x[0], *s.A) == "w_3_5*w_4_4*w_5_3*w_6_2");
    CHECK(to_string(k.z.back(), *s.A) == "w_3_5*w_4_4*w_5_3*w_6_1");
    auto rep = check_leading_monomials(s, ideal_I_closed_form(s));
    CHECK_MESSAGE(rep.ok, (rep.mismatches.empty() ? "" : rep.mismatches[0]));
}

TEST_CASE("claimed basis and initial ideal")
{
    for (int n = 2; n <= 4; ++n) {
        auto s = build_setup(n);
        auto rep = claimed_gb(s, ideal_I_closed_form(s));
        CHECK(rep.ok());
    }
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto in = initial_equals_K(s, ideal_I_closed_form(s));
        CHECK(in.status == Status::Ok);
        CHECK(in.equal);
        // K is contained in in(J).
        for (const auto& m : k_monomials(s).all())
            CHECK(in_monomial_ideal(m, in.initial));
    }
}

TEST_CASE("Hilbert functions of J and K agree up to degree 2n")
{
    const unsigned long p = 32003;
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto J = ideal_I_closed_form(s).gens();
        auto K = k_monomials(s).all();
        auto hk = hilbert_from_monomials(K, s.A->nvars(), 2 * n);
        auto hj = hilbert(J, antidiagonal_order(*s.A), 2 * n);
        REQUIRE(hj.status == Status::Ok);
        // Independent of any Groebner basis: ranks of multiplication spans over Z/p.
        std::vector<Polynomial> Jp;
        auto Ap = ring_A(n, Field::prime(p));
        for (const auto& f : J)
            Jp.push_back(f.to_ring(Ap));
        auto direct = hilbert_function_linear(Jp, 2 * n, p);
        for (int d = 0; d <= 2 * n; ++d) {
            auto i = static_cast<std::size_t>(d);
            CHECK(hj.data.function[i] == hk.function[i]);
            CHECK(direct[i] == hk.function[i]);
        }
    }
}

TEST_CASE("a smaller generating set")
{
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto I = ideal_I_closed_form(s);
        std::vector<Polynomial> small = I.f;
        small.push_back(I.F.back());
        CHECK(ideals_equal(small, I.gens(), antidiagonal_order(*s.A)));
    }
}

TEST_CASE("intermediate ideals at n = 2")
{
    auto s = build_setup(2);
    auto L = ideal_L(s);
    for (int j = 1; j <= 4; ++j) {
        auto rep = intermediate_initial_check(s, L, j);
        CHECK(rep.status == Status::Ok);
        CHECK(rep.equal);
        RingPtr Rj;
        auto gens = intermediate_ideal(s, L, j, &Rj);
        auto g = natural_bigrading(*Rj);
        for (const auto& f : gens)
            CHECK(bidegree(f, g).homogeneous);
    }
}

TEST_CASE("fiber oracle on special matrices")
{
    Field F = Field::prime(32003);
    for (int n = 2; n <= 5; ++n) {
        auto N = static_cast<std::size_t>(n);
        Matrix B = Matrix::identity(N, F).stack(Matrix(1, N, F));
        CHECK_FALSE(fiber_membership(B));

        // One nilpotent Jordan block with a = 0.
        Matrix A = jordan_matrix({n}, {}, 0, F);
        Matrix a(1, N, F);
        auto [k1, k2] = kernel_dims(A, a);
        CHECK(k1 == 1);
        CHECK(k2 == (n >= 2 ? 2u : 1u));
        CHECK(rank_conditions(A, a));
        CHECK(fiber_membership(stack_rows(A, a)));
    }
}

TEST_CASE("oracle agreement on Jordan types")
{
    CHECK(oracle_jordan_f2(3).ok());
    auto r = oracle_jordan_random(4, 32003, 3, 9);
    CHECK(r.ok());
    CHECK(r.members > 0);
    CHECK(r.members < r.samples);
}

TEST_CASE("property: fiber membership equals the rank conditions")
{
    for (int n = 2; n <= 4; ++n) {
        auto rep = oracle_random(n, 32003, 150, 77 + static_cast<std::uint64_t>(n));
        CHECK_MESSAGE(rep.ok(), rep.witness);
        CHECK(rep.members > 0);
        auto small = oracle_random(n, 3, 150, 5);
        CHECK_MESSAGE(small.ok(), small.witness);
    }
}

TEST_CASE("sampling is reproducible across thread counts")
{
    auto a = oracle_random(3, 101, 90, 4, 1);
    auto b = oracle_random(3, 101, 90, 4, 3);
    CHECK(a.members == b.members);
    CHECK(a.samples == b.samples);
}

TEST_CASE("tangent dimensions")
{
    auto R = ring_xy();
    auto ideal = [&](std::initializer_list<const char*> ss) {
        std::vector<Polynomial> v;
        for (auto s : ss)
            v.push_back(P(R, s));
        return v;
    };
    CHECK(tangent_dim({ideal({"x^2", "y^2"}), ideal({"x", "y^2"})}) == 8);
    CHECK(tangent_dim({ideal({"x", "y^3"}), ideal({"x", "y^2"})}) == 6);
    CHECK(tangent_dim({ideal({"x", "y^4"}), ideal({"x", "y^2"})}) == 8);
    CHECK(tangent_dim({ideal({"x", "y^5"}), ideal({"x", "y^2"})}) == 10);
    CHECK(tangent_dim({ideal({"x^2", "x*y", "y^2"}), ideal({"x", "y"})}) > 6);
    CHECK(hilb_tangent_dim(ideal({"x^2", "x*y", "y^2"})) == 6);
    CHECK_THROWS_AS(tangent_dim({ideal({"x"}), ideal({"x", "y"})}), PairError);
    CHECK_THROWS_AS(tangent_dim({ideal({"x", "y"}), ideal({"x", "y^2"})}), PairError);
}

TEST_CASE("property: tangent spaces are at least as large as the component")
{
    // The nested scheme is irreducible of dimension 2m, so every tangent space has dimension >= 2m.
    gen::Rng rng(51);
    auto R = ring_xy();
    const std::vector<std::vector<Monomial>> small = {
        gen::staircase({1}), gen::staircase({2}), gen::staircase({1, 1})};
    for (int trial = 0; trial < 25; ++trial) {
        auto heights = gen::random_partition(rng, 3, 3);
        auto I1m = gen::staircase(heights);
        auto I1 = gen::as_polys(I1m, R);
        long m = 0;
        for (int h : heights)
            m += h;
        for (const auto& I2m : small) {
            bool inside = true;
            for (const auto& g : I1m)
                inside = inside && in_monomial_ideal(g, I2m);
            if (!inside || m < 2)
                continue;
            auto rep = tangent_space({I1, gen::as_polys(I2m, R)});
            CHECK(rep.colength1 == m);
            CHECK(rep.dim >= 2 * m);
            CHECK(rep.hom1 >= 2 * m);
        }
    }
}
