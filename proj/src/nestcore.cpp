#include "nh/nestcore.hpp"
#include "nh/srcomplex.hpp"

#include <algorithm>

namespace nh {

namespace {

std::vector<std::size_t> range0(std::size_t k)
{
    std::vector<std::size_t> v(k);
    for (std::size_t i = 0; i < k; ++i)
        v[i] = i;
    return v;
}

std::vector<std::size_t> minus_one(const std::vector<int>& v)
{
    std::vector<std::size_t> out;
    out.reserve(v.size());
    for (int x : v)
        out.push_back(static_cast<std::size_t>(x - 1));
    return out;
}

// Splits a remainder into g (coefficient of y z^(n-1)) and G (coefficient of z^n),
// both returned in the ring `target`.
std::pair<Polynomial, Polynomial> split_remainder(const Polynomial& r, int n, const RingPtr& T,
                                                  const RingPtr& target, int which)
{
    const std::size_t ix = T->at("x"), iy = T->at("y"), iz = T->at("z");
    std::vector<Term> gt, Gt;
    for (const auto& t : r.terms()) {
        const Monomial& m = t.m;
        Monomial rest = m;
        rest[ix] = rest[iy] = rest[iz] = 0;
        if (m[ix] == 0 && m[iy] == 1 && m[iz] == n - 1)
            gt.push_back({rest, t.c});
        else if (m[ix] == 0 && m[iy] == 0 && m[iz] == n)
            Gt.push_back({rest, t.c});
        else
            throw RemainderShapeError("remainder of Delta_" + std::to_string(which) + " has unexpected term " +
                                      to_string(m, *T));
    }
    return {Polynomial::from_terms(T, std::move(gt)).to_ring(target),
            Polynomial::from_terms(T, std::move(Gt)).to_ring(target)};
}

Monomial monomial_from_vertices(const RingPtr& ring, const std::vector<Vertex>& vs)
{
    Monomial m(ring->nvars());
    for (const auto& v : vs)
        m[ring->at(w_name(v.i, v.j))] += 1;
    return m;
}

Monomial move_monomial(const Monomial& m, const Ring& from, const Ring& to)
{
    Monomial out(to.nvars());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0)
            out[to.at(from.name(i))] = m[i];
    return out;
}

}  // namespace

GenericSetup build_setup(int n, Field field)
{
    if (n < 1)
        throw std::invalid_argument("build_setup: n must be at least 1");
    GenericSetup s;
    s.n = n;
    s.A = ring_A(n, field);
    s.B = ring_B(n, field);
    s.T = ring_T(n, field);
    const auto N = static_cast<std::size_t>(n);
    Polynomial zero(s.T);
    Polynomial x = Polynomial::variable(s.T, "x"), y = Polynomial::variable(s.T, "y");
    s.X.assign(N + 1, std::vector<Polynomial>(N, zero));
    s.Y.assign(N + 1, std::vector<Polynomial>(N, zero));
    for (std::size_t i = 0; i < N; ++i) {
        s.X[i][i] = y;
        s.Y[i][i] = y;
        s.X[i + 1][i] = -x;
    }
    s.W.assign(N + 1, std::vector<Polynomial>(N, Polynomial(s.A)));
    s.WT.assign(N + 1, std::vector<Polynomial>(N, zero));
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j) {
            s.W[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Polynomial::variable(s.A, w_name(i, j));
            s.WT[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Polynomial::variable(s.T, w_name(i, j));
        }
    auto v = [&](int h) { return Polynomial::variable(s.T, v_name(h)); };
    Polynomial z = Polynomial::variable(s.T, "z");
    s.gamma1 = x + v(1) * y + v(2) * z;
    s.gamma2 = y * y + v(3) * y * z + v(4) * z * z;
    return s;
}

std::vector<Polynomial> delta_minors(const GenericSetup& s)
{
    const auto N = static_cast<std::size_t>(s.n);
    Polynomial z = Polynomial::variable(s.T, "z");
    PolyMatrix M = s.X;
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            M[i][j] += z * s.WT[i][j];
    std::vector<Polynomial> out;
    for (std::size_t del = 0; del <= N; ++del) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i <= N; ++i)
            if (i != del)
                rows.push_back(i);
        out.push_back(poly_minor(M, rows, range0(N), s.T));
    }
    return out;
}

std::vector<Polynomial> IdealL::gens() const
{
    std::vector<Polynomial> out = g;
    out.insert(out.end(), G.begin(), G.end());
    return out;
}

std::vector<Polynomial> IdealI::gens() const
{
    std::vector<Polynomial> out = f;
    out.insert(out.end(), F.begin(), F.end());
    return out;
}

IdealL ideal_L(const GenericSetup& s, const std::vector<Polynomial>& deltas)
{
    TermOrder order = bigraded_lex_order(*s.T);
    IdealL L;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        Polynomial r = normal_form(deltas[i], {s.gamma1, s.gamma2}, order);
        auto [g, G] = split_remainder(r, s.n, s.T, s.B, static_cast<int>(i + 1));
        L.g.push_back(std::move(g));
        L.G.push_back(std::move(G));
    }
    return L;
}

IdealL ideal_L(const GenericSetup& s) { return ideal_L(s, delta_minors(s)); }

IdealI ideal_I_division(const GenericSetup& s, const std::vector<Polynomial>& deltas)
{
    TermOrder order = bigraded_lex_order(*s.T);
    Polynomial x = Polynomial::variable(s.T, "x"), y = Polynomial::variable(s.T, "y");
    IdealI I;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        Polynomial r = normal_form(deltas[i], {x, y * y}, order);
        auto [f, F] = split_remainder(r, s.n, s.T, s.A, static_cast<int>(i + 1));
        I.f.push_back(std::move(f));
        I.F.push_back(std::move(F));
    }
    return I;
}

IdealI ideal_I_division(const GenericSetup& s) { return ideal_I_division(s, delta_minors(s)); }

Polynomial w_minor(const GenericSetup& s, const std::vector<int>& rows, const std::vector<int>& cols)
{
    return poly_minor(s.W, minus_one(rows), minus_one(cols), s.A);
}

IdealI ideal_I_closed_form(const GenericSetup& s)
{
    const int n = s.n;
    IdealI I;
    std::vector<int> all_cols;
    for (int j = 1; j <= n; ++j)
        all_cols.push_back(j);
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<int> rows;
        for (int r = 1; r <= n + 1; ++r)
            if (r != i)
                rows.push_back(r);
        I.F.push_back(w_minor(s, rows, all_cols));

        Polynomial f(s.A);
        for (int h = 1; h <= n; ++h) {
            if (h == i)
                continue;  // det W^{(i,i),k} = 0
            std::vector<int> rr, cc;
            for (int r = 1; r <= n + 1; ++r)
                if (r != h && r != i)
                    rr.push_back(r);
            for (int c = 1; c <= n; ++c)
                if (c != h)
                    cc.push_back(c);
            Polynomial d = w_minor(s, rr, cc);
            // det W^{(h,i),h} is the minor itself for h < i and its negative for h > i
            f += h < i ? d : -d;
        }
        I.f.push_back(std::move(f));
    }
    return I;
}

IdealI retract_to_A(const GenericSetup& s, const IdealL& L)
{
    std::vector<std::size_t> vs;
    for (int h = 1; h <= 4; ++h)
        vs.push_back(s.B->at(v_name(h)));
    IdealI I;
    for (const auto& g : L.g)
        I.f.push_back(g.zero_out(vs).to_ring(s.A));
    for (const auto& G : L.G)
        I.F.push_back(G.zero_out(vs).to_ring(s.A));
    return I;
}

std::vector<Monomial> KMonomials::all() const
{
    std::vector<Monomial> out = x;
    out.insert(out.end(), y.begin(), y.end());
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

KMonomials k_monomials(const GenericSetup& s)
{
    KGenerators k = k_generators(s.n);
    KMonomials out;
    for (const auto& g : k.x)
        out.x.push_back(monomial_from_vertices(s.A, g));
    for (const auto& g : k.y)
        out.y.push_back(monomial_from_vertices(s.A, g));
    for (const auto& g : k.z)
        out.z.push_back(monomial_from_vertices(s.A, g));
    return out;
}

std::vector<Polynomial> combination_polynomials(const GenericSetup& s, const IdealI& I)
{
    const int n = s.n;
    std::vector<Polynomial> out;
    for (int h = 3; h <= n; ++h) {
        std::vector<int> rows, c1, c2{1};
        for (int r = h + 1; r <= n + 1; ++r)
            rows.push_back(r);
        for (int c = 2; c <= n - h + 2; ++c)
            c1.push_back(c);
        for (int c = 3; c <= n - h + 2; ++c)
            c2.push_back(c);
        out.push_back(I.f[0] * w_minor(s, rows, c1) + I.f[1] * w_minor(s, rows, c2));
    }
    return out;
}

LeadingMonomialReport check_leading_monomials(const GenericSetup& s, const IdealI& I)
{
    LeadingMonomialReport rep;
    if (s.n < 2) {
        rep.ok = false;
        rep.mismatches.push_back("n must be at least 2");
        return rep;
    }
    TermOrder order = antidiagonal_order(*s.A);
    KMonomials K = k_monomials(s);
    auto expect = [&](const Polynomial& f, const Monomial& m, const std::string& what) {
        if (f.is_zero()) {
            rep.ok = false;
            rep.mismatches.push_back(what + ": polynomial is zero");
            return;
        }
        Monomial lm = f.leading_monomial(order);
        if (lm != m) {
            rep.ok = false;
            rep.mismatches.push_back(what + ": got " + to_string(lm, *s.A) + ", expected " + to_string(m, *s.A));
        }
    };
    const int n = s.n;
    for (int h = 2; h <= n + 1; ++h) {
        expect(I.f[static_cast<std::size_t>(h - 1)], K.x[static_cast<std::size_t>(h - 2)], "LM(f_" + std::to_string(h) + ")");
        expect(I.F[static_cast<std::size_t>(h - 1)], K.y[static_cast<std::size_t>(h - 2)], "LM(F_" + std::to_string(h) + ")");
    }
    expect(I.f[0], K.z.back(), "LM(f_1)");
    auto comb = combination_polynomials(s, I);
    for (int h = 3; h <= n; ++h)
        expect(comb[static_cast<std::size_t>(h - 3)], K.z[static_cast<std::size_t>(h - 3)],
               "LM(combination " + std::to_string(h) + ")");
    return rep;
}

ClaimedGbReport claimed_gb(const GenericSetup& s, const IdealI& I, const Budget& budget)
{
    TermOrder order = antidiagonal_order(*s.A);
    ClaimedGbReport rep;
    rep.basis = I.f;
    rep.basis.insert(rep.basis.end(), I.F.begin() + 1, I.F.end());
    auto comb = combination_polynomials(s, I);
    rep.basis.insert(rep.basis.end(), comb.begin(), comb.end());
    rep.check = is_groebner(rep.basis, order, budget);
    std::vector<Monomial> lms;
    for (const auto& f : rep.basis)
        if (!f.is_zero())
            lms.push_back(f.leading_monomial(order));
    rep.lm_generate_K = same_monomial_ideal(lms, k_monomials(s).all());
    return rep;
}

InitialCheck initial_equals_K(const GenericSetup& s, const IdealI& I, const Budget& budget)
{
    InitialCheck out;
    InitialIdeal in = initial_ideal(I.gens(), antidiagonal_order(*s.A), budget);
    out.status = in.status;
    out.gb_size = in.gb.basis.size();
    if (in.status != Status::Ok)
        return out;
    out.initial = in.gens;
    out.equal = same_monomial_ideal(in.gens, k_monomials(s).all());
    return out;
}

std::vector<Polynomial> intermediate_ideal(const GenericSetup& s, const IdealL& L, int j, RingPtr* ring_out)
{
    if (j < 0 || j > 4)
        throw std::invalid_argument("intermediate_ideal: j must be in 0..4");
    RingPtr R = ring_B(s.n, s.B->field(), j + 1);
    std::vector<std::size_t> kill;
    for (int h = 1; h <= j; ++h)
        kill.push_back(s.B->at(v_name(h)));
    std::vector<Polynomial> out;
    for (const auto& g : L.gens()) {
        Polynomial h = g.zero_out(kill).to_ring(R);
        if (!h.is_zero())
            out.push_back(std::move(h));
    }
    if (ring_out)
        *ring_out = R;
    return out;
}

InitialCheck intermediate_initial_check(const GenericSetup& s, const IdealL& L, int j, const Budget& budget)
{
    RingPtr R;
    auto gens = intermediate_ideal(s, L, j, &R);
    InitialCheck out;
    InitialIdeal in = initial_ideal(gens, intermediate_order(*R), budget);
    out.status = in.status;
    out.gb_size = in.gb.basis.size();
    if (in.status != Status::Ok)
        return out;
    out.initial = in.gens;
    std::vector<Monomial> K;
    for (const auto& m : k_monomials(s).all())
        K.push_back(move_monomial(m, *s.A, *R));
    out.equal = same_monomial_ideal(in.gens, K);
    return out;
}

}  // namespace nh
