#include "gen.hpp"

#include "nh/deform.hpp"

#include <doctest.h>

using namespace nh;

namespace {

Polynomial P(const char* s) { return parse_polynomial(ring_xy(), s); }

std::vector<Polynomial> Ps(std::initializer_list<const char*> ss)
{
    std::vector<Polynomial> v;
    for (auto s : ss)
        v.push_back(P(s));
    return v;
}

Monomial M(int a, int b) { return Monomial(std::vector<int>{a, b}); }

std::vector<Monomial> power_of_m(int n)
{
    std::vector<Monomial> out;
    for (int i = 0; i <= n; ++i)
        out.push_back(M(i, n - i));
    return out;
}

std::vector<Polynomial> plus_power_of_m(std::vector<Polynomial> I, int d)
{
    for (const auto& m : power_of_m(d))
        I.push_back(Polynomial::term(ring_xy(), m, Coeff(1)));
    return I;
}

long colength_of(const std::vector<Polynomial>& I)
{
    auto c = colength(I, TermOrder::grevlex(2));
    REQUIRE(c.has_value());
    return *c;
}

// floor(k^2 / 4) summed over the d Grassmannians, with r searched from scratch.
std::pair<int, long> brute_reducible(int d)
{
    for (int r = 1;; ++r) {
        if (r < d)
            continue;
        long s = 0;
        for (int i = 1; i <= d; ++i) {
            long k = r + 1 - i;
            s += k * k / 4;
        }
        if (s > static_cast<long>(r) * r)
            return {r, s};
    }
}

}  // namespace

TEST_CASE("order and initial form")
{
    CHECK(poly_order(P("y - x^2")) == 1);
    CHECK(initial_form(P("y - x^2")) == P("y"));
    CHECK(poly_order(P("x^3*y + x^2*y^2 + y^5")) == 4);
    CHECK(poly_order(Polynomial(ring_xy())) == -1);
}

TEST_CASE("local data of small ideals")
{
    auto L = ord_and_initial_forms(Ps({"y - x^2", "x^3"}));
    CHECK(L.colength == 3);
    CHECK(L.ord == 1);
    REQUIRE(L.forms[1].size() == 1);
    CHECK(L.forms[1][0] == P("y"));

    auto m2 = ord_and_initial_forms(Ps({"x^2", "x*y", "y^2"}));
    CHECK(m2.ord == 2);
    CHECK(m2.forms[2].size() == 3);
    CHECK(m2.codim_sum() == 3);

    CHECK_FALSE(is_m_primary(Ps({"x"})));
    CHECK_THROWS_AS(ord_and_initial_forms(Ps({"x*y"})), DeformError);
}

TEST_CASE("property: codimensions of the initial forms match colength jumps")
{
    gen::Rng rng(61);
    auto R = ring_xy();
    for (int trial = 0; trial < 25; ++trial) {
        auto I = gen::m_primary(rng, R, 4, 2);
        auto L = ord_and_initial_forms(I);
        CHECK(L.colength == colength_of(I));
        CHECK(L.codim_sum() == L.colength);
        for (int d = 0; d <= 5; ++d) {
            long jump = colength_of(plus_power_of_m(I, d + 1)) - (d == 0 ? 0 : colength_of(plus_power_of_m(I, d)));
            auto it = L.forms.find(d);
            long dim = it == L.forms.end() ? d + 1 : static_cast<long>(it->second.size());
            CHECK(jump == d + 1 - dim);
        }
        // Lifts have the recorded initial forms.
        for (const auto& [d, lifts] : L.lifts) {
            REQUIRE(lifts.size() == L.forms[d].size());
            for (const auto& f : lifts)
                CHECK(poly_order(f) == d);
        }
    }
}

TEST_CASE("cleaving (x, y^r) along y")
{
    auto y = P("y");
    for (int r = 2; r <= 5; ++r) {
        std::string yr = "y^" + std::to_string(r), yr1 = "y^" + std::to_string(r - 1);
        auto I = Ps({"x", yr.c_str()});
        auto fam = cleave_family(I, I[0], y);
        CHECK(fam.ok());
        CHECK(fam.special_fiber_ok);
        for (long t = 1; t <= 3; ++t) {
            // Oracle: the fiber is (x, y^{r-1}(y - t)).
            auto want = Ps({"x"});
            want.push_back(P(yr.c_str()) - P(yr1.c_str()).scaled(Coeff(t)));
            CHECK(ideals_equal(fam.family.at(t), want, TermOrder::grevlex(2)));
        }
        for (const auto& s : fam.samples)
            CHECK(s.colength == r);
    }
}

TEST_CASE("cleaved fibers meet the line only away from the origin")
{
    auto I = Ps({"x^2", "x*y", "y^3"});
    auto fam = cleave_family(I, I[0], P("y"));
    REQUIRE(fam.ok());
    for (long t = 1; t <= 3; ++t) {
        // (f, l - t) + m is the unit ideal, so the extra point is not at the origin.
        auto gens = Ps({"x^2", "x", "y"});
        gens.push_back(P("y") - P("1").scaled(Coeff(t)));
        CHECK(colength_of(gens) == 0);
    }
}

TEST_CASE("pairs with colength(J) = 2")
{
    auto pr = cleave_pair(Ps({"x", "y^4"}), Ps({"x", "y^2"}));
    CHECK(pr.ok());
    CHECK_FALSE(pr.trace.empty());
    auto J1 = pr.J_family.family.at(1);
    CHECK(ideals_equal(J1, Ps({"x", "y^2 - y"}), TermOrder::grevlex(2)));

    auto m2 = cleave_pair(Ps({"x^2", "x*y", "y^2"}), Ps({"x", "y^2"}));
    CHECK(m2.ok());
    auto I1 = m2.I_family.family.at(1);
    // (x^2) + (y - 1)(I : y) with I : y = (x, y).
    CHECK(ideals_equal(I1, Ps({"x^2", "x*y - x", "y^2 - y"}), TermOrder::grevlex(2)));

    for (auto [I, J] : std::vector<std::pair<std::vector<Polynomial>, std::vector<Polynomial>>>{
             {Ps({"x^2", "x*y", "y^3"}), Ps({"x", "y^2"})},
             {Ps({"x^2", "x*y", "y^3"}), Ps({"x", "y"})},
             {Ps({"x^3", "x^2*y", "x*y^2", "y^3"}), Ps({"x", "y^2"})},
             {Ps({"x*y", "x^2 - y^3"}), Ps({"y", "x^2"})},
             {Ps({"x*y", "x^2 - y^3"}), Ps({"x", "y^2"})},
             {Ps({"x*y", "x^2 - y^2"}), Ps({"x + y", "x^2"})},
             {Ps({"x*y", "x^2 - y^2"}), Ps({"x", "y^2"})},
             {Ps({"x^2 + y^3", "x*y^2", "y^4"}), Ps({"x", "y^2"})}}) {
        auto r = cleave_pair(I, J);
        CHECK_MESSAGE(r.ok(), r.case_label);
        CHECK(r.inclusion_ok);
    }
    CHECK_THROWS_AS(cleave_pair(Ps({"x^2", "y^2"}), Ps({"x", "y^2"})), DeformError);
}

TEST_CASE("generic initial ideals")
{
    CHECK(same_monomial_ideal(gin(Ps({"y - x^2", "x^3"}), 1).gens, power_of_m(2)));
    auto R = ring_xy();
    gen::Rng rng(62);
    const std::vector<Monomial> line_pair = {M(1, 0), M(0, 2)};
    for (int trial = 0; trial < 6; ++trial) {
        // Two distinct points.
        long a = gen::uniform(rng, -5, 5), b = gen::uniform(rng, -5, 5);
        if (a == 0 && b == 0)
            b = 1;
        auto xa = P("x") - P("1").scaled(Coeff(a)), yb = P("y") - P("1").scaled(Coeff(b));
        auto two = intersect(Ps({"x", "y"}), {xa, yb}, TermOrder::grevlex(2));
        REQUIRE(two.status == Status::Ok);
        CHECK(same_monomial_ideal(gin(two.gens, 10 + static_cast<std::uint64_t>(trial)).gens, line_pair));
        // A tangent vector: a linear form plus m^2.
        auto l = P("x").scaled(Coeff(gen::uniform(rng, 1, 4))) + P("y").scaled(Coeff(gen::uniform(rng, -4, 4)));
        auto I = plus_power_of_m({l}, 2);
        CHECK(same_monomial_ideal(gin(I, 20 + static_cast<std::uint64_t>(trial)).gens, line_pair));
    }
}

TEST_CASE("property: Borel-fixed ideals are their own gin")
{
    gen::Rng rng(63);
    auto R = ring_xy();
    int seen = 0;
    for (int trial = 0; trial < 40 && seen < 8; ++trial) {
        auto B = gen::staircase(gen::random_partition(rng, 4, 4));
        if (!is_borel_fixed(B))
            continue;
        ++seen;
        CHECK(same_monomial_ideal(gin(gen::as_polys(B, R), 30 + static_cast<std::uint64_t>(trial)).gens, B));
    }
    CHECK(seen > 0);
    CHECK(is_borel_fixed(power_of_m(3)));
    CHECK_FALSE(is_borel_fixed({M(0, 1), M(3, 0)}));
}

TEST_CASE("adding a point to a Borel-fixed ideal")
{
    auto r = add_point_initial(power_of_m(2), 7);
    CHECK(same_monomial_ideal(r.predicted, {M(2, 0), M(1, 1), M(0, 3)}));
    CHECK(r.verified_monomial);
    CHECK(r.verified_generic);
    CHECK(lowest_monomial(power_of_m(2)) == M(0, 2));

    // From (x, y^4), colength grows by one per step and reaches m^4.
    std::vector<Monomial> B = {M(1, 0), M(0, 4)};
    long c = colength_monomial(B, 2).value();
    for (int step = 0; step < 6; ++step) {
        auto s = add_point_initial(B, static_cast<std::uint64_t>(step));
        CHECK(s.verified_monomial);
        CHECK(is_borel_fixed(s.predicted));
        CHECK(colength_monomial(s.predicted, 2).value() == c + 1);
        B = s.predicted;
        ++c;
    }
    CHECK(same_monomial_ideal(B, power_of_m(4)));
}

TEST_CASE("reducible search")
{
    auto r5 = reducible_search(5);
    CHECK(r5.r == 19);
    CHECK(r5.dim_G == 363);
    CHECK(r5.bound == 361);
    CHECK(r5.f_dr == mpq_class(685, 2));
    CHECK(r5.lambda == std::vector<long>{180, 162, 144, 128, 112});
    CHECK_THROWS_AS(reducible_search(4), DeformError);
}

TEST_CASE("property: reducible search against a direct count")
{
    int prev_r = 0;
    for (int d = 5; d <= 14; ++d) {
        auto got = reducible_search(d);
        auto [r, dim] = brute_reducible(d);
        CHECK(got.r == r);
        CHECK(got.dim_G == dim);
        CHECK(got.dim_G > got.bound);
        // Minimal r >= d; larger d adds Grassmannians, so r does not grow until it meets d.
        CHECK((got.r == d || grassmannian_dim(d, got.r - 1) <= static_cast<long>(got.r - 1) * (got.r - 1)));
        CHECK((prev_r == 0 || got.r <= prev_r || got.r == d));
        prev_r = got.r;
        REQUIRE(got.lambda.size() == static_cast<std::size_t>(d));
        for (std::size_t i = 0; i + 1 < got.lambda.size(); ++i)
            CHECK(got.lambda[i] > got.lambda[i + 1]);
    }
}
