// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "nh/bottklw.hpp"
#include "nh/deform.hpp"
#include "nh/groebner.hpp"
#include "nh/nestcore.hpp"
#include "nh/srcomplex.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace nh;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

long facet_formula(long n) { return (n - 1) * n * (n + 1) * (3 * n - 2) / 12; }

std::vector<Polynomial> xy_ideal(std::initializer_list<const char*> ss)
{
    std::vector<Polynomial> v;
    for (auto s : ss)
        v.push_back(parse_polynomial(ring_xy(), s));
    return v;
}

Outcome facets()
{
    std::ostringstream os;
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        auto r = verify_counts(n);
        bool here = r.ok && r.all_size_four && static_cast<long>(r.total) == facet_formula(n) &&
                    static_cast<long>(r.last_column) == static_cast<long>((n - 1) * (n - 1) * n);
        ok = ok && here;
        os << (n > 2 ? " " : "") << r.total;
    }
    os << " (n=8 gives 924 from the closed formula)";
    return {ok, os.str()};
}

Outcome groebner()
{
    std::ostringstream os;
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto in = initial_equals_K(s, ideal_I_closed_form(s));
        ok = ok && in.status == Status::Ok && in.equal;
        os << "n=" << n << " in(J)=K " << (in.equal ? "yes" : "no") << "; ";
    }
    auto s4 = build_setup(4);
    auto rep = claimed_gb(s4, ideal_I_closed_form(s4));
    ok = ok && rep.ok();
    os << "n=4 S-pairs " << (rep.check.is_basis ? "reduce to 0" : "fail") << ", LMs generate K "
       << (rep.lm_generate_K ? "yes" : "no");
    return {ok, os.str()};
}

Outcome routes()
{
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
        auto s = build_setup(n);
        auto a = ideal_I_division(s), b = ideal_I_closed_form(s);
        ok = ok && a.f == b.f && a.F == b.F;
    }
    return {ok, "n=2..6 generator-by-generator"};
}

Outcome degrees()
{
    std::ostringstream os;
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        auto s = build_setup(n);
        mpz_class mult = hilbert_from_monomials(k_monomials(s).all(), s.A->nvars(), 0).multiplicity;
        long count = static_cast<long>(c_facets(n).size());
        mpq_class klw = klw_degree(n);
        bool here = klw == mpq_class(mult) && mult == count && count == facet_formula(n);
        ok = ok && here;
        os << (n > 4 ? " " : "") << count;
    }
    return {ok, os.str()};
}

Outcome tables()
{
    bool ok = true;
    std::string witness;
    for (int n = 4; n <= 8 && ok; ++n) {
        auto t = cohomology_tables(n);
        ok = t.bott_unique && table_matches_expected(t, &witness);
    }
    return {ok, ok ? "n=4..8; top row sits at q=2n-3" : witness};
}

Outcome oracle()
{
    std::ostringstream os;
    bool ok = true;
    for (int n = 4; n <= 5; ++n) {
        auto r = oracle_random(n, 32003, 1000, 2024 + static_cast<std::uint64_t>(n));
        ok = ok && r.ok() && r.samples == 1000;
        os << "n=" << n << " " << r.mismatches << "/" << r.samples << " mismatches; ";
    }
    auto f2 = oracle_jordan_f2(4);
    auto jr = oracle_jordan_random(4, 32003, 5, 7);
    ok = ok && f2.ok() && jr.ok();
    os << "Jordan sweep " << f2.samples + jr.samples << " cases, " << f2.mismatches + jr.mismatches << " mismatches";
    return {ok, os.str()};
}

Outcome tangents()
{
    std::ostringstream os;
    bool ok = tangent_dim({xy_ideal({"x^2", "y^2"}), xy_ideal({"x", "y^2"})}) == 8;
    for (int r : {3, 4, 5}) {
        std::string yr = "y^" + std::to_string(r);
        long d = tangent_dim({xy_ideal({"x", yr.c_str()}), xy_ideal({"x", "y^2"})});
        ok = ok && d == 2 * r;
        os << d << " ";
    }
    long sing = tangent_dim({xy_ideal({"x^2", "x*y", "y^2"}), xy_ideal({"x", "y"})});
    ok = ok && sing > 6;
    os << "singular " << sing;
    return {ok, "8; " + os.str()};
}

Outcome hilbert_proxy()
{
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto hj = hilbert(ideal_I_closed_form(s).gens(), antidiagonal_order(*s.A), 2 * n);
        auto hk = hilbert_from_monomials(k_monomials(s).all(), s.A->nvars(), 2 * n);
        ok = ok && hj.status == Status::Ok;
        for (int d = 0; d <= 2 * n && ok; ++d)
            ok = hj.data.function[static_cast<std::size_t>(d)] == hk.function[static_cast<std::size_t>(d)];
    }
    return {ok, "n=2,3 to degree 2n"};
}

Outcome intermediate()
{
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
        auto s = build_setup(n);
        auto L = ideal_L(s);
        for (int j = 1; j <= 4; ++j) {
            auto r = intermediate_initial_check(s, L, j);
            ok = ok && r.status == Status::Ok && r.equal;
        }
    }
    return {ok, "n=2,3, j=1..4"};
}

Outcome cleaving()
{
    bool ok = true;
    auto y = parse_polynomial(ring_xy(), "y");
    for (int r = 2; r <= 5; ++r) {
        std::string yr = "y^" + std::to_string(r);
        auto I = xy_ideal({"x", yr.c_str()});
        ok = ok && cleave_family(I, I[0], y).ok();
    }
    auto a = cleave_pair(xy_ideal({"x", "y^4"}), xy_ideal({"x", "y^2"}));
    auto b = cleave_pair(xy_ideal({"x^2", "x*y", "y^2"}), xy_ideal({"x", "y^2"}));
    ok = ok && a.ok() && b.ok();
    return {ok, "(x,y^r) r=2..5; pinned pairs: " + a.case_label + " / " + b.case_label};
}

Outcome reducible()
{
    auto r = reducible_search(5);
    bool ok = r.r == 19 && r.dim_G == 363 && r.bound == 361;
    return {ok, "r=" + std::to_string(r.r) + ", dim " + std::to_string(r.dim_G) + " > " + std::to_string(r.bound)};
}

Outcome homology()
{
    std::ostringstream os;
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
        auto K = delta_complex(n);
        auto q = reisner_check(K, Coefficients::rationals());
        ok = ok && q.cohen_macaulay;
        os << "n=" << n << " Q: " << (q.cohen_macaulay ? "CM" : "not CM");
        for (unsigned long p : {2ul, 3ul}) {
            auto rp = reisner_check(K, Coefficients::prime(p));
            os << ", char " << p << ": " << (rp.cohen_macaulay ? "CM" : "not CM") << " (reported)";
        }
        os << "; ";
    }
    return {ok, os.str()};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, 60, facets},        {2, 600, groebner}, {3, 60, routes},         {4, 300, degrees},
        {5, 300, tables},       {6, 120, oracle},   {7, 30, tangents},       {8, 300, hilbert_proxy},
        {9, 300, intermediate}, {10, 300, cleaving}, {11, 1, reducible},     {12, 300, homology},
    };
    int failures = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass && secs <= c.limit_s;
        if (o.pass && !pass)
            o.detail += "; over time limit";
        failures += !pass;
        std::printf("%s %2d  %.2fs  %s\n", pass ? "PASS" : "FAIL", c.id, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
