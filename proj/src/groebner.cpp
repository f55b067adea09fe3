#include "gb_engine.hpp"

#include <numeric>

namespace nh {

namespace detail {

Encoder::Encoder(const TermOrder& o)
    : n_(o.nvars()), r_(o.weights().size()), s_(o.tiebreak() == TermOrder::Tiebreak::RevLex ? -1 : 1)
{
    const auto& pr = o.priority();
    var_at_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k)
        var_at_[k] = s_ < 0 ? pr[n_ - 1 - k] : pr[k];
    wt_.assign(r_, std::vector<int>(n_, 0));
    for (std::size_t row = 0; row < r_; ++row)
        for (std::size_t k = 0; k < n_; ++k)
            wt_[row][k] = o.weights()[row][var_at_[k]];
}

void Encoder::set_weights(IMon& a) const
{
    for (std::size_t row = 0; row < r_; ++row) {
        int d = 0;
        for (std::size_t k = 0; k < n_; ++k)
            d += wt_[row][k] * s_ * a[r_ + k];
        a[row] = d;
    }
}

IMon Encoder::encode(const Monomial& m) const
{
    IMon a(r_ + n_, 0);
    for (std::size_t k = 0; k < n_; ++k)
        a[r_ + k] = s_ * m[var_at_[k]];
    set_weights(a);
    return a;
}

Monomial Encoder::decode(const IMon& a) const
{
    Monomial m(n_);
    for (std::size_t k = 0; k < n_; ++k)
        m[var_at_[k]] = s_ * a[r_ + k];
    return m;
}

IMon Encoder::lcm(const IMon& a, const IMon& b) const
{
    IMon c(r_ + n_, 0);
    for (std::size_t k = 0; k < n_; ++k)
        c[r_ + k] = s_ * std::max(s_ * a[r_ + k], s_ * b[r_ + k]);
    set_weights(c);
    return c;
}

}  // namespace detail

namespace {

using namespace detail;

template <class K>
class Engine {
public:
    using T = typename K::T;
    using Poly = IPoly<K>;

    Engine(const Encoder& enc, const K& k) : enc_(enc), k_(k) {}

    struct Entry {
        Poly p;
        std::uint64_t sdv = 0;
        int sugar = 0;
    };

    void make_monic(Poly& f) const
    {
        if (f.empty())
            return;
        T inv = k_.inv(f[0].c);
        for (auto& t : f)
            t.c = k_.mul(t.c, inv);
    }

    // f[0..i) kept, f[i] cancelled, f(i..) - c * m * g(1..).
    void sub_mul(Poly& f, std::size_t i, const T& c, const IMon& m, const Poly& g) const
    {
        Poly tail;
        tail.reserve(f.size() - i + g.size());
        std::size_t a = i + 1, b = 1;
        while (a < f.size() || b < g.size()) {
            if (b >= g.size()) {
                tail.push_back(std::move(f[a++]));
                continue;
            }
            IMon gm = enc_.mul(g[b].m, m);
            if (a < f.size() && f[a].m == gm) {
                T v = k_.sub(f[a].c, k_.mul(c, g[b].c));
                if (!K::zero(v))
                    tail.push_back({std::move(gm), std::move(v)});
                ++a;
                ++b;
            } else if (a < f.size() && gm < f[a].m) {
                tail.push_back(std::move(f[a++]));
            } else {
                tail.push_back({std::move(gm), k_.neg(k_.mul(c, g[b].c))});
                ++b;
            }
        }
        f.resize(i);
        for (auto& t : tail)
            f.push_back(std::move(t));
    }

    const Entry* find_divisor(const IMon& m, std::uint64_t sd, const std::vector<const Entry*>& basis) const
    {
        for (const Entry* e : basis)
            if ((e->sdv & ~sd) == 0 && enc_.divides(e->p[0].m, m))
                return e;
        return nullptr;
    }

    /// Full reduction; basis entries are monic. If `top_only`, stops at the first irreducible term.
    void reduce(Poly& f, const std::vector<const Entry*>& basis, bool top_only = false) const
    {
        std::size_t i = 0;
        while (i < f.size()) {
            const Entry* e = find_divisor(f[i].m, enc_.sdv(f[i].m), basis);
            if (!e) {
                if (top_only)
                    return;
                ++i;
                continue;
            }
            T c = f[i].c;
            IMon m = enc_.div(f[i].m, e->p[0].m);
            sub_mul(f, i, c, m, e->p);
        }
    }

    Poly spoly(const Poly& f, const Poly& g) const
    {
        IMon l = enc_.lcm(f[0].m, g[0].m);
        IMon mf = enc_.div(l, f[0].m);
        IMon mg = enc_.div(l, g[0].m);
        T cf = k_.inv(f[0].c), cg = k_.inv(g[0].c);
        Poly a;
        a.reserve(f.size());
        for (std::size_t i = 1; i < f.size(); ++i)
            a.push_back({enc_.mul(f[i].m, mf), k_.mul(f[i].c, cf)});
        // a - cg * mg * g, with g's lead already cancelled: prepend a dummy lead.
        Poly out;
        out.push_back({l, k_.one()});
        for (auto& t : a)
            out.push_back(std::move(t));
        sub_mul(out, 0, cg, mg, g);
        return out;
    }

    struct Pair {
        std::size_t i, j;
        IMon lcm;
        int sugar;
    };

    int pair_sugar(std::size_t i, std::size_t j, const IMon& l) const
    {
        const Entry& a = store_[i];
        const Entry& b = store_[j];
        int da = a.sugar + enc_.degree(l) - enc_.degree(a.p[0].m);
        int db = b.sugar + enc_.degree(l) - enc_.degree(b.p[0].m);
        return std::max(da, db);
    }

    void update(std::size_t h)
    {
        const IMon& lh = store_[h].p[0].m;
        std::vector<Pair> C;
        for (std::size_t g : active_) {
            IMon l = enc_.lcm(lh, store_[g].p[0].m);
            C.push_back({h, g, l, pair_sugar(h, g, l)});
        }
        std::vector<Pair> D;
        for (std::size_t c = 0; c < C.size(); ++c) {
            const Pair& p = C[c];
            bool keep = enc_.coprime(lh, store_[p.j].p[0].m);
            if (!keep) {
                keep = true;
                for (std::size_t c2 = c + 1; c2 < C.size() && keep; ++c2)
                    if (enc_.divides(C[c2].lcm, p.lcm))
                        keep = false;
                for (std::size_t d = 0; d < D.size() && keep; ++d)
                    if (enc_.divides(D[d].lcm, p.lcm))
                        keep = false;
            }
            if (keep)
                D.push_back(p);
        }
        std::vector<Pair> B;
        for (auto& p : pairs_) {
            bool drop = enc_.divides(lh, p.lcm) && enc_.lcm(store_[p.i].p[0].m, lh) != p.lcm &&
                        enc_.lcm(lh, store_[p.j].p[0].m) != p.lcm;
            if (!drop)
                B.push_back(std::move(p));
        }
        for (auto& p : D)
            if (!enc_.coprime(lh, store_[p.j].p[0].m))
                B.push_back(std::move(p));
        pairs_ = std::move(B);
        std::vector<std::size_t> act;
        for (std::size_t g : active_)
            if (!enc_.divides(lh, store_[g].p[0].m))
                act.push_back(g);
        act.push_back(h);
        active_ = std::move(act);
    }

    std::vector<const Entry*> active_entries() const
    {
        std::vector<const Entry*> out;
        for (std::size_t g : active_)
            out.push_back(&store_[g]);
        return out;
    }

    std::size_t add(Poly f, int sugar)
    {
        make_monic(f);
        Entry e;
        e.sdv = enc_.sdv(f[0].m);
        e.p = std::move(f);
        e.sugar = sugar;
        store_.push_back(std::move(e));
        return store_.size() - 1;
    }

    Status run(std::vector<Poly> gens, const Budget& budget, std::size_t& pairs_done, std::string& detail)
    {
        std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a[0].m < b[0].m; });
        for (auto& g : gens) {
            auto basis = active_entries();
            reduce(g, basis);
            if (g.empty())
                continue;
            int sug = 0;
            for (auto& t : g)
                sug = std::max(sug, enc_.degree(t.m));
            update(add(std::move(g), sug));
        }
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t q = 1; q < pairs_.size(); ++q) {
                const Pair& a = pairs_[q];
                const Pair& b = pairs_[best];
                if (a.sugar < b.sugar || (a.sugar == b.sugar && a.lcm < b.lcm))
                    best = q;
            }
            Pair p = std::move(pairs_[best]);
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();
            if (enc_.degree(p.lcm) > budget.max_degree) {
                detail = "pair degree " + std::to_string(enc_.degree(p.lcm)) + " exceeds cap";
                return Status::BudgetExceeded;
            }
            if (++pairs_done > budget.max_pairs) {
                detail = "pair count exceeds cap";
                return Status::BudgetExceeded;
            }
            Poly s = spoly(store_[p.i].p, store_[p.j].p);
            reduce(s, active_entries());
            if (s.empty())
                continue;
            update(add(std::move(s), p.sugar));
        }
        return Status::Ok;
    }

    std::vector<Poly> reduced_basis()
    {
        std::vector<std::size_t> idx = active_;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return store_[b].p[0].m < store_[a].p[0].m; });
        std::vector<Poly> out;
        for (std::size_t a : idx) {
            std::vector<const Entry*> others;
            for (std::size_t b : idx)
                if (b != a)
                    others.push_back(&store_[b]);
            Poly f = store_[a].p;
            // Lead is irreducible by construction; reduce the tail only.
            Poly tail(f.begin() + 1, f.end());
            reduce(tail, others);
            Poly g;
            g.push_back(std::move(f[0]));
            for (auto& t : tail)
                g.push_back(std::move(t));
            make_monic(g);
            out.push_back(std::move(g));
        }
        return out;
    }

    const Encoder& enc_;
    K k_;
    std::vector<Entry> store_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

template <class K>
std::vector<IPoly<K>> internal_list(const std::vector<Polynomial>& G, const Encoder& enc, const K& k)
{
    std::vector<IPoly<K>> out;
    for (auto& g : G)
        if (!g.is_zero())
            out.push_back(to_internal(g, enc, k));
    return out;
}

void check_ring(const std::vector<Polynomial>& G, const TermOrder& order)
{
    for (auto& g : G) {
        if (!g.ring())
            throw std::invalid_argument("polynomial without a ring");
        if (g.ring()->nvars() != order.nvars())
            throw std::invalid_argument("term order and ring have different variable counts");
    }
}

}  // namespace

GbResult buchberger(const std::vector<Polynomial>& gens, const TermOrder& order, const Budget& budget)
{
    check_ring(gens, order);
    GbResult res;
    if (gens.empty())
        return res;
    RingPtr ring = gens[0].ring();
    Encoder enc(order);
    return with_field(ring->field(), [&](auto k) {
        using K = decltype(k);
        Engine<K> eng(enc, k);
        res.status = eng.run(internal_list(gens, enc, k), budget, res.pairs_reduced, res.detail);
        if (res.status != Status::Ok)
            return res;
        for (auto& g : eng.reduced_basis())
            res.basis.push_back(to_external(g, enc, k, ring));
        return res;
    });
}

GbCheck is_groebner(const std::vector<Polynomial>& G, const TermOrder& order, const Budget& budget)
{
    check_ring(G, order);
    GbCheck res;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!G[i].is_zero())
            pos.push_back(i);
    if (pos.size() < 2)
        return res;
    RingPtr ring = G[pos[0]].ring();
    Encoder enc(order);
    return with_field(ring->field(), [&](auto k) {
        using K = decltype(k);
        Engine<K> eng(enc, k);
        for (std::size_t i : pos) {
            auto f = to_internal(G[i], enc, k);
            eng.add(std::move(f), 0);
        }
        auto basis = [&] {
            std::vector<const typename Engine<K>::Entry*> b;
            for (auto& e : eng.store_)
                b.push_back(&e);
            return b;
        }();
        for (std::size_t a = 0; a < pos.size(); ++a)
            for (std::size_t b = a + 1; b < pos.size(); ++b) {
                const auto& fa = eng.store_[a].p;
                const auto& fb = eng.store_[b].p;
                if (enc.coprime(fa[0].m, fb[0].m))
                    continue;
                if (enc.degree(enc.lcm(fa[0].m, fb[0].m)) > budget.max_degree ||
                    res.pairs_checked >= budget.max_pairs) {
                    res.status = Status::BudgetExceeded;
                    return res;
                }
                ++res.pairs_checked;
                auto s = eng.spoly(fa, fb);
                eng.reduce(s, basis);
                if (!s.empty()) {
                    res.is_basis = false;
                    res.i = pos[a];
                    res.j = pos[b];
                    res.remainder = to_external(s, enc, k, ring);
                    return res;
                }
            }
        return res;
    });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order)
{
    Encoder enc(order);
    return with_field(f.field(), [&](auto k) {
        using K = decltype(k);
        Engine<K> eng(enc, k);
        return to_external(eng.spoly(to_internal(f, enc, k), to_internal(g, enc, k)), enc, k, f.ring());
    });
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order)
{
    if (f.is_zero())
        return f;
    Encoder enc(order);
    return with_field(f.field(), [&](auto k) {
        using K = decltype(k);
        Engine<K> eng(enc, k);
        for (auto& g : G)
            if (!g.is_zero())
                eng.add(to_internal(g, enc, k), 0);
        std::vector<const typename Engine<K>::Entry*> basis;
        for (auto& e : eng.store_)
            basis.push_back(&e);
        auto r = to_internal(f, enc, k);
        eng.reduce(r, basis);
        return to_external(r, enc, k, f.ring());
    });
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order)
{
    return normal_form(f, G, order).is_zero();
}

// Division with quotients keeps an order-keyed accumulator so that each
// subtraction costs O(|g| log |f|) instead of a full merge.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order)
{
    for (auto& g : G)
        if (g.is_zero())
            throw std::invalid_argument("division by the zero polynomial");
    RingPtr ring = f.ring() ? f.ring() : (G.empty() ? RingPtr() : G[0].ring());
    DivisionResult res;
    res.remainder = Polynomial(ring);
    res.quotients.assign(G.size(), Polynomial(ring));
    if (f.is_zero())
        return res;
    Encoder enc(order);
    return with_field(ring->field(), [&](auto k) {
        using K = decltype(k);
        using T = typename K::T;
        std::vector<IPoly<K>> g;
        std::vector<T> lcinv;
        for (auto& x : G) {
            g.push_back(to_internal(x, enc, k));
            lcinv.push_back(k.inv(g.back()[0].c));
        }
        std::map<IMon, T, std::greater<IMon>> acc;
        for (auto& t : to_internal(f, enc, k))
            acc.emplace(std::move(t.m), std::move(t.c));
        std::vector<IPoly<K>> q(G.size());
        IPoly<K> r;
        while (!acc.empty()) {
            auto it = acc.begin();
            IMon m = it->first;
            T c = it->second;
            acc.erase(it);
            std::size_t hit = G.size();
            for (std::size_t i = 0; i < g.size(); ++i)
                if (enc.divides(g[i][0].m, m)) {
                    hit = i;
                    break;
                }
            if (hit == G.size()) {
                r.push_back({std::move(m), std::move(c)});
                continue;
            }
            T qc = k.mul(c, lcinv[hit]);
            IMon qm = enc.div(m, g[hit][0].m);
            for (std::size_t j = 1; j < g[hit].size(); ++j) {
                IMon mm = enc.mul(g[hit][j].m, qm);
                T d = k.neg(k.mul(qc, g[hit][j].c));
                auto [jt, fresh] = acc.try_emplace(std::move(mm), d);
                if (!fresh) {
                    jt->second = k.add(jt->second, d);
                    if (K::zero(jt->second))
                        acc.erase(jt);
                }
            }
            q[hit].push_back({std::move(qm), std::move(qc)});
        }
        res.remainder = to_external(r, enc, k, ring);
        for (std::size_t i = 0; i < G.size(); ++i)
            res.quotients[i] = to_external(q[i], enc, k, ring);
        return res;
    });
}

// ---------------------------------------------------------------- monomial ideals

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        return da != db ? da < db : a.lex_less(b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (auto& o : out)
            if (o.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.lex_less(b); });
    return out;
}

bool same_monomial_ideal(const std::vector<Monomial>& a, const std::vector<Monomial>& b)
{
    return minimize_monomials(a) == minimize_monomials(b);
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens)
{
    for (auto& g : gens)
        if (g.divides(m))
            return true;
    return false;
}

InitialIdeal initial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order, const Budget& budget)
{
    InitialIdeal out;
    out.gb = buchberger(gens, order, budget);
    out.status = out.gb.status;
    if (!out.gb.ok())
        return out;
    std::vector<Monomial> lms;
    for (auto& g : out.gb.basis)
        lms.push_back(g.leading_monomial(order));
    out.gens = minimize_monomials(std::move(lms));
    return out;
}

}  // namespace nh
