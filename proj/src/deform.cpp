#include "nh/deform.hpp"

#include "nh/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nh {

namespace {

const TermOrder& grevlex_xy()
{
    static const TermOrder order = TermOrder::grevlex(2);
    return order;
}

const RingPtr& xy()
{
    static const RingPtr r = ring_xy();
    return r;
}

Polynomial var_x() { return Polynomial::variable(xy(), 0); }
Polynomial var_y() { return Polynomial::variable(xy(), 1); }

Polynomial konst(long c) { return Polynomial::constant(xy(), Coeff(c)); }

std::vector<Polynomial> into_xy(const std::vector<Polynomial>& I)
{
    std::vector<Polynomial> out;
    out.reserve(I.size());
    for (const auto& f : I)
        out.push_back(f.ring()->same_as(*xy()) ? f : f.to_ring(xy()));
    return out;
}

long must_colength(const std::vector<Polynomial>& I, const char* what)
{
    auto c = colength(I, grevlex_xy());
    if (!c)
        throw DeformError(std::string(what) + ": infinite colength");
    return *c;
}

bool is_linear_form(const Polynomial& l)
{
    if (l.is_zero())
        return false;
    for (const auto& t : l.terms())
        if (t.m.degree() != 1)
            return false;
    return true;
}

// Value of a binary form at (x, y) = (a, b).
Coeff eval_at(const Polynomial& f, const Coeff& a, const Coeff& b)
{
    Coeff s = 0;
    for (const auto& t : f.terms()) {
        Coeff v = t.c;
        for (int i = 0; i < t.m[0]; ++i)
            v *= a;
        for (int i = 0; i < t.m[1]; ++i)
            v *= b;
        s += v;
    }
    return s;
}

// A homogeneous form h and a linear form l = a x + b y are coprime iff h(b, -a) != 0.
bool coprime_with_linear(const Polynomial& h, const Polynomial& l)
{
    Coeff a = l.coefficient(Monomial(std::vector<int>{1, 0}));
    Coeff b = l.coefficient(Monomial(std::vector<int>{0, 1}));
    return eval_at(h, b, -a) != 0;
}

bool proportional(const Polynomial& l1, const Polynomial& l2) { return !coprime_with_linear(l1, l2); }

std::vector<Polynomial> general_linear_forms()
{
    const long table[][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, 3}, {3, -1}, {2, 5}, {5, -3}};
    std::vector<Polynomial> out;
    for (const auto& ab : table)
        out.push_back(var_x().scaled(Coeff(ab[0])) + var_y().scaled(Coeff(ab[1])));
    return out;
}

Polynomial lift_xyt(const Polynomial& f) { return f.to_ring(ring_xyt()); }

bool member(const Polynomial& f, const std::vector<Polynomial>& gb)
{
    return normal_form(f, gb, grevlex_xy()).is_zero();
}

std::vector<Polynomial> gb_of(const std::vector<Polynomial>& I)
{
    auto r = buchberger(I, grevlex_xy());
    if (!r.ok())
        throw DeformError("Groebner basis budget exceeded");
    return r.basis;
}

FamilyReport constant_family(const std::vector<Polynomial>& J, const std::vector<long>& samples)
{
    FamilyReport rep;
    for (const auto& g : J)
        rep.family.gens.push_back(lift_xyt(g));
    rep.family.description = "constant";
    long c = must_colength(J, "constant family");
    for (long t : samples)
        rep.samples.push_back({t, c, true});
    rep.special_fiber_ok = rep.colength_constant = rep.intersection_ok = true;
    return rep;
}

// Checks the special fibre and colength constancy of an arbitrary family.
FamilyReport verify_family(FlatFamily fam, const std::vector<Polynomial>& base, const std::vector<long>& samples)
{
    FamilyReport rep;
    rep.family = std::move(fam);
    long c = must_colength(base, "family base");
    rep.special_fiber_ok = ideals_equal(rep.family.at(0), base, grevlex_xy());
    rep.colength_constant = true;
    rep.intersection_ok = true;
    for (long t : samples) {
        auto ct = colength(rep.family.at(t), grevlex_xy());
        SampleCheck s{t, ct ? *ct : -1, true};
        if (!ct || *ct != c)
            rep.colength_constant = false;
        rep.samples.push_back(s);
    }
    return rep;
}

}  // namespace

int poly_order(const Polynomial& f)
{
    if (f.is_zero())
        return -1;
    int d = f.terms().front().m.degree();
    for (const auto& t : f.terms())
        d = std::min(d, t.m.degree());
    return d;
}

Polynomial initial_form(const Polynomial& f)
{
    const int d = poly_order(f);
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (t.m.degree() == d)
            out.push_back(t);
    return Polynomial::from_terms(f.ring(), std::move(out));
}

std::vector<Polynomial> LocalData::initial_ideal_gens() const
{
    std::vector<Polynomial> out;
    for (const auto& [d, basis] : forms)
        out.insert(out.end(), basis.begin(), basis.end());
    return out;
}

long LocalData::codim_sum() const
{
    long s = 0;
    for (const auto& [d, basis] : forms)
        s += d + 1 - static_cast<long>(basis.size());
    return s;
}

bool is_m_primary(const std::vector<Polynomial>& I0)
{
    auto I = into_xy(I0);
    auto c = colength(I, grevlex_xy());
    if (!c || *c == 0)
        return false;
    auto G = gb_of(I);
    const auto e = static_cast<unsigned>(*c);
    return member(var_x().pow(e), G) && member(var_y().pow(e), G);
}

LocalData ord_and_initial_forms(const std::vector<Polynomial>& I0)
{
    auto I = into_xy(I0);
    if (!is_m_primary(I))
        throw DeformError("ord_and_initial_forms: ideal is not m-primary");
    LocalData out;
    out.colength = must_colength(I, "ord_and_initial_forms");
    auto G = gb_of(I);

    // m^c lies in I, so I + m^D with D = c + 1 is spanned by truncated multiples of G.
    const int D = static_cast<int>(out.colength) + 1;
    std::vector<Monomial> cols;
    std::map<std::vector<int>, std::size_t> index;
    for (int d = 0; d < D; ++d)
        for (int i = d; i >= 0; --i) {
            Monomial m(std::vector<int>{i, d - i});
            index[m.exps()] = cols.size();
            cols.push_back(m);
        }

    std::vector<std::vector<Coeff>> rows;
    for (const auto& g : G)
        for (const auto& u : cols) {
            std::vector<Coeff> row(cols.size(), Coeff(0));
            bool any = false;
            for (const auto& t : g.terms()) {
                Monomial m = t.m * u;
                if (m.degree() >= D)
                    continue;
                row[index.at(m.exps())] += t.c;
                any = true;
            }
            if (any)
                rows.push_back(std::move(row));
        }
    Matrix M(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            M(i, j) = rows[i][j];
    Echelon E = rref(M);

    for (int d = 0; d <= static_cast<int>(out.colength); ++d)
        out.forms[d];
    for (std::size_t r = 0; r < E.pivots.size(); ++r) {
        std::vector<Term> all;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (E.reduced(r, j) != 0)
                all.push_back({cols[j], E.reduced(r, j)});
        Polynomial lift = Polynomial::from_terms(xy(), all);
        int d = cols[E.pivots[r]].degree();
        out.forms[d].push_back(initial_form(lift));
        out.lifts[d].push_back(lift);
    }
    out.ord = -1;
    for (const auto& [d, basis] : out.forms)
        if (!basis.empty()) {
            out.ord = d;
            break;
        }
    if (out.codim_sum() != out.colength)
        throw DeformError("ord_and_initial_forms: codimension sum disagrees with colength");
    return out;
}

std::vector<Polynomial> FlatFamily::at(long t0) const
{
    std::vector<Polynomial> out;
    const auto T = ring_xyt();
    const std::size_t ti = T->at("t");
    for (const auto& g : gens) {
        Polynomial s = g.substitute(ti, Polynomial::constant(T, Coeff(t0))).to_ring(xy());
        if (!s.is_zero())
            out.push_back(s);
    }
    return out;
}

FamilyReport cleave_family(const std::vector<Polynomial>& I0, const Polynomial& f0, const Polynomial& l0,
                           const std::vector<long>& samples)
{
    auto I = into_xy(I0);
    Polynomial f = f0.to_ring(xy()), l = l0.to_ring(xy());
    LocalData data = ord_and_initial_forms(I);
    auto G = gb_of(I);
    if (!member(f, G))
        throw DeformError("cleave_family: f is not in I");
    if (poly_order(f) != data.ord)
        throw DeformError("cleave_family: ord(f) = " + std::to_string(poly_order(f)) + " differs from ord(I) = " +
                          std::to_string(data.ord));
    if (!is_linear_form(l))
        throw DeformError("cleave_family: l is not a linear form");
    if (!coprime_with_linear(initial_form(f), l))
        throw DeformError("cleave_family: initial forms of f and l are not coprime");

    auto Q = colon(I, l, grevlex_xy());
    if (Q.status != Status::Ok)
        throw DeformError("cleave_family: colon budget exceeded");
    const auto T = ring_xyt();
    Polynomial lt = lift_xyt(l) - Polynomial::variable(T, "t");
    FlatFamily fam;
    fam.gens.push_back(lift_xyt(f));
    for (const auto& q : Q.gens)
        fam.gens.push_back(lt * lift_xyt(q));
    fam.description = "(" + to_string(f) + ") + (" + to_string(lt) + ")(I : " + to_string(l) + ")";

    FamilyReport rep = verify_family(std::move(fam), I, samples);
    for (auto& s : rep.samples) {
        if (s.t == 0)
            continue;
        auto lhs = intersect({f, l - konst(s.t)}, Q.gens, grevlex_xy());
        s.intersection_identity =
            lhs.status == Status::Ok && ideals_equal(rep.family.at(s.t), lhs.gens, grevlex_xy());
        if (!s.intersection_identity)
            rep.intersection_ok = false;
    }
    return rep;
}

bool PairFamilies::ok() const { return inclusion_ok && I_family.ok() && J_family.ok(); }

PairFamilies cleave_pair(const std::vector<Polynomial>& I0, const std::vector<Polynomial>& J0,
                         const std::vector<long>& samples)
{
    auto I = into_xy(I0), J = into_xy(J0);
    PairFamilies out;
    auto& trace = out.trace;
    auto reject = [&](const std::string& why) -> DeformError {
        std::string msg = "cleave_pair: " + why;
        for (const auto& s : trace)
            msg += "; " + s;
        return DeformError(msg);
    };

    if (!is_m_primary(I) || !is_m_primary(J))
        throw reject("ideals must be m-primary");
    if (!ideal_contains(J, I, grevlex_xy()))
        throw reject("I is not contained in J");
    const long cI = must_colength(I, "cleave_pair"), cJ = must_colength(J, "cleave_pair");
    trace.push_back("colength(I)=" + std::to_string(cI));
    trace.push_back("colength(J)=" + std::to_string(cJ));
    if (cJ > 2 || cI < 2)
        throw reject("need colength(J) in {1,2} and colength(I) >= 2");

    const LocalData LI = ord_and_initial_forms(I), LJ = ord_and_initial_forms(J);
    const auto GI = gb_of(I);
    trace.push_back("ord(I)=" + std::to_string(LI.ord));
    const auto lines = general_linear_forms();

    // First candidate f (from `fs`) and general l with f* coprime to l and l avoiding `avoid`.
    auto choose = [&](const std::vector<Polynomial>& fs, const std::vector<Polynomial>& avoid)
        -> std::pair<Polynomial, Polynomial> {
        for (const auto& l : lines) {
            bool bad = false;
            for (const auto& a : avoid)
                bad = bad || proportional(a, l);
            if (bad)
                continue;
            for (const auto& f : fs)
                if (coprime_with_linear(initial_form(f), l))
                    return {f, l};
        }
        throw reject("no general linear form found");
    };
    auto hartshorne = [&](const std::vector<Polynomial>& base, const Polynomial& f, const Polynomial& l) {
        return cleave_family(base, f, l, samples);
    };
    auto ord_lifts = [](const LocalData& L) {
        std::vector<Polynomial> fs = L.lifts.at(L.ord);
        const std::size_t k = fs.size();
        for (std::size_t i = 1; i < k; ++i)
            fs.push_back(fs[0] + fs[i]);
        return fs;
    };

    if (cJ == 1) {
        out.case_label = "colength(J)=1";
        auto [f, l] = choose(ord_lifts(LI), {});
        out.I_family = hartshorne(I, f, l);
        out.J_family = constant_family(J, samples);
    } else if (LI.ord == 1) {
        out.case_label = "ord(I)=1";
        auto [f, l] = choose(ord_lifts(LI), {});
        out.I_family = hartshorne(I, f, l);
        out.J_family = hartshorne(J, f, l);
    } else if (LI.ord >= 3) {
        out.case_label = "ord(I)>=3";
        auto [f, l] = choose(ord_lifts(LI), {});
        out.I_family = hartshorne(I, f, l);
        out.J_family = constant_family(J, samples);
    } else {
        const auto& quad = LI.forms.at(2);
        trace.push_back("dim[I*]_2=" + std::to_string(quad.size()));
        // J = (w) + m^2 with w a linear form.
        const Polynomial w = LJ.forms.at(1).at(0);
        if (quad.size() == 3) {
            out.case_label = "ord(I)=2, dim[I*]_2=3";
            auto [f, l] = choose({w * w}, {});
            out.I_family = hartshorne(I, f, l);
            out.J_family = hartshorne(J, w, l);
        } else if (quad.size() == 1) {
            out.case_label = "ord(I)=2, dim[I*]_2=1";
            auto [f, l] = choose(LI.lifts.at(2), {});
            out.I_family = hartshorne(I, f, l);
            out.J_family = constant_family(J, samples);
        } else {
            // Annihilator (c0, c1, c2) of span(q1*, q2*) on the basis x^2, xy, y^2.
            Matrix C(2, 3);
            const Monomial basis[3] = {Monomial(std::vector<int>{2, 0}), Monomial(std::vector<int>{1, 1}),
                                       Monomial(std::vector<int>{0, 2})};
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    C(i, j) = quad[i].coefficient(basis[j]);
            Matrix N = nullspace(C);
            Coeff c0 = N(0, 0), c1 = N(0, 1), c2 = N(0, 2);
            const bool shared = c0 * c2 == c1 * c1;
            trace.push_back(std::string("initial quadrics ") + (shared ? "share a linear factor" : "coprime"));
            if (shared) {
                // L m lies in span(q1*, q2*) for L = alpha x + beta y.
                Coeff alpha = c1, beta = -c0;
                if (alpha == 0 && beta == 0) {
                    alpha = c2;
                    beta = -c1;
                }
                Polynomial L = var_x().scaled(alpha) + var_y().scaled(beta);
                if (member(L * var_x(), GI) && member(L * var_y(), GI)) {
                    out.case_label = "ord(I)=2, dim[I*]_2=2, common factor";
                    auto [f, l] = choose({L * w}, {});
                    out.I_family = hartshorne(I, f, l);
                    out.J_family = hartshorne(J, w, l);
                } else if (!proportional(L, w)) {
                    out.case_label = "ord(I)=2, normal form (xy, ux^2-y^p), p>=3, gcd(x,w)=1";
                    // q in I with q* = L^2, as a combination of the two quadratic lifts.
                    Polynomial q;
                    {
                        const auto& lf = LI.lifts.at(2);
                        Matrix R(2, 3);
                        for (std::size_t i = 0; i < 2; ++i)
                            for (std::size_t j = 0; j < 3; ++j)
                                R(i, j) = initial_form(lf[i]).coefficient(basis[j]);
                        Polynomial L2 = L * L;
                        // Solve s0 R0 + s1 R1 = L^2 on coefficients.
                        Matrix aug(3, 3);
                        for (std::size_t j = 0; j < 3; ++j) {
                            aug(j, 0) = R(0, j);
                            aug(j, 1) = R(1, j);
                            aug(j, 2) = -L2.coefficient(basis[j]);
                        }
                        Matrix K = nullspace(aug);
                        if (K.rows() == 0 || K(0, 2) == 0)
                            throw reject("no q in I with q* = L^2");
                        Coeff s0 = K(0, 0) / K(0, 2), s1 = K(0, 1) / K(0, 2);
                        q = lf[0].scaled(s0) + lf[1].scaled(s1);
                    }
                    out.I_family = hartshorne(I, q, w);
                    auto qt = lift_xyt(q);
                    FlatFamily fam;
                    fam.gens = {qt, lift_xyt(w) - Polynomial::variable(ring_xyt(), "t")};
                    fam.description = "(q, w - t)";
                    out.J_family = verify_family(std::move(fam), J, samples);
                } else {
                    out.case_label = "ord(I)=2, normal form (xy, ux^2-y^p), p>=3, w=x";
                    std::vector<Polynomial> fs;
                    const auto GW = gb_of({w});
                    for (const auto& cand : {L * var_y(), L * var_x(), L * (var_x() + var_y())})
                        if (member(cand, GI) && member(cand, GW))
                            fs.push_back(cand);
                    if (fs.empty())
                        throw reject("input outside the normal form (no L*m element of I)");
                    auto [f, l] = choose(fs, {});
                    out.I_family = hartshorne(I, f, l);
                    out.J_family = hartshorne(J, w, l);
                }
            } else {
                Polynomial xyp = var_x() * var_y();
                if (!member(xyp, GI))
                    throw reject("coprime quadratic part not in the normal form (xy, ux^2-y^2)");
                if (!proportional(w, var_x()) && !proportional(w, var_y())) {
                    out.case_label = "ord(I)=2, normal form (xy, ux^2-y^2), gcd(xy,w)=1";
                    out.I_family = hartshorne(I, xyp, w);
                    FlatFamily fam;
                    fam.gens = {lift_xyt(xyp), lift_xyt(w) - Polynomial::variable(ring_xyt(), "t")};
                    fam.description = "(xy, w - t)";
                    out.J_family = verify_family(std::move(fam), J, samples);
                } else {
                    out.case_label = "ord(I)=2, normal form (xy, ux^2-y^2), w in {x, y}";
                    auto [f, l] = choose({xyp}, {});
                    out.I_family = hartshorne(I, f, l);
                    out.J_family = hartshorne(J, w, l);
                }
            }
        }
    }

    out.inclusion_ok = true;
    for (long t : samples)
        if (!ideal_contains(out.J_family.family.at(t), out.I_family.family.at(t), grevlex_xy()))
            out.inclusion_ok = false;
    trace.push_back("case: " + out.case_label);
    return out;
}

std::vector<Polynomial> linear_change(const std::vector<Polynomial>& I0, const Coeff& a, const Coeff& b,
                                      const Coeff& c, const Coeff& d)
{
    auto I = into_xy(I0);
    std::vector<Polynomial> vals = {var_x().scaled(a) + var_y().scaled(b), var_x().scaled(c) + var_y().scaled(d)};
    std::vector<Polynomial> out;
    for (const auto& f : I)
        out.push_back(f.evaluate(vals, xy()));
    return out;
}

namespace {

std::vector<Monomial> initial_after_change(const std::vector<Polynomial>& I, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (;;) {
        Coeff a(dist(rng)), b(dist(rng)), c(dist(rng)), d(dist(rng));
        if (a * d - b * c == 0)
            continue;
        auto in = initial_ideal(linear_change(I, a, b, c, d), grevlex_xy());
        if (in.status != Status::Ok)
            throw DeformError("gin: Groebner budget exceeded");
        return in.gens;
    }
}

}  // namespace

GinResult gin(const std::vector<Polynomial>& I0, std::uint64_t seed, int max_rounds)
{
    auto I = into_xy(I0);
    must_colength(I, "gin");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Monomial>> seen;
    for (int k = 0; k < std::max(2, max_rounds); ++k) {
        auto g = initial_after_change(I, rng);
        for (const auto& s : seen)
            if (same_monomial_ideal(s, g))
                return {minimize_monomials(g), k + 1};
        seen.push_back(std::move(g));
    }
    throw DeformError("gin: independent draws disagree after " + std::to_string(max_rounds) + " rounds");
}

bool is_borel_fixed(const std::vector<Monomial>& gens)
{
    for (const auto& m : gens)
        if (m[1] > 0) {
            Monomial up(std::vector<int>{m[0] + 1, m[1] - 1});
            if (!in_monomial_ideal(up, gens))
                return false;
        }
    return true;
}

Monomial lowest_monomial(const std::vector<Monomial>& gens)
{
    if (gens.empty())
        throw DeformError("lowest_monomial: zero ideal");
    int d0 = gens.front().degree();
    for (const auto& m : gens)
        d0 = std::min(d0, m.degree());
    for (int j = d0; j >= 0; --j) {
        Monomial m(std::vector<int>{d0 - j, j});
        if (in_monomial_ideal(m, gens))
            return m;
    }
    throw DeformError("lowest_monomial: unreachable");
}

AddPointResult add_point_initial(const std::vector<Monomial>& B0, std::uint64_t seed, bool verify)
{
    auto B = minimize_monomials(B0);
    if (!colength_monomial(B, 2))
        throw DeformError("add_point_initial: infinite colength");
    if (!is_borel_fixed(B))
        throw DeformError("add_point_initial: not Borel-fixed");
    const Monomial u = lowest_monomial(B);
    std::vector<Monomial> next;
    for (const auto& m : B)
        if (m != u)
            next.push_back(m);
    next.push_back(u * Monomial(std::vector<int>{1, 0}));
    next.push_back(u * Monomial(std::vector<int>{0, 1}));
    AddPointResult out;
    out.predicted = minimize_monomials(next);
    if (!verify)
        return out;

    std::vector<Polynomial> I;
    for (const auto& m : B)
        I.push_back(Polynomial::term(xy(), m, Coeff(1)));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    auto nonzero = [&] {
        for (;;)
            if (long v = dist(rng))
                return Coeff(v);
    };
    auto check = [&](const std::vector<Polynomial>& ideal) {
        Coeff a = nonzero(), b = nonzero();
        std::vector<Polynomial> IQ = {var_x() - Polynomial::constant(xy(), a),
                                      var_y() - Polynomial::constant(xy(), b)};
        auto cap = intersect(ideal, IQ, grevlex_xy());
        if (cap.status != Status::Ok)
            return false;
        auto in = initial_ideal(cap.gens, grevlex_xy());
        return in.status == Status::Ok && same_monomial_ideal(in.gens, out.predicted);
    };
    out.verified_monomial = check(I);
    for (int attempt = 0; attempt < 4 && !out.verified_generic; ++attempt) {
        Coeff a = nonzero(), b = nonzero(), c = nonzero(), d = nonzero();
        if (a * d == b * c)
            continue;
        auto moved = linear_change(I, a, b, c, d);
        auto in = initial_ideal(moved, grevlex_xy());
        if (in.status != Status::Ok || !same_monomial_ideal(in.gens, B))
            continue;
        out.verified_generic = check(moved);
    }
    return out;
}

long grassmannian_dim(int d, int r)
{
    long s = 0;
    for (int i = 1; i <= d; ++i) {
        long k = r + 1 - i;
        s += ((k + 1) / 2) * (k / 2);
    }
    return s;
}

ReducibleResult reducible_search(int d)
{
    if (d < 5)
        throw DeformError("reducible_search: need d >= 5");
    ReducibleResult out;
    out.d = d;
    for (int r = d;; ++r)
        if (grassmannian_dim(d, r) > static_cast<long>(r) * r) {
            out.r = r;
            break;
        }
    const long r = out.r;
    out.dim_G = grassmannian_dim(d, out.r);
    out.bound = r * r;
    out.f_dr = 0;
    for (long i = 1; i <= d; ++i) {
        long k = r + 1 - i;
        out.lambda.push_back(k * (k - 1) / 2 + k / 2);
        mpq_class term(k * (k - 1), 4);
        term.canonicalize();
        out.f_dr += term;
    }
    return out;
}

}  // namespace nh
