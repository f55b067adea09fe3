#include "nh/exactpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nh {

// ---------------------------------------------------------------- Field

Field Field::prime(unsigned long p)
{
    if (p < 2)
        throw std::invalid_argument("prime field needs p >= 2");
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

void Field::normalize(Coeff& a) const
{
    if (p_ == 0) {
        a.canonicalize();
        return;
    }
    mpz_class num = a.get_num();
    mpz_class den = a.get_den();
    mpz_class pp(p_);
    num %= pp;
    if (num < 0)
        num += pp;
    if (den != 1) {
        den %= pp;
        if (den < 0)
            den += pp;
        if (den == 0)
            throw std::domain_error("denominator divisible by the characteristic");
        mpz_class di;
        mpz_invert(di.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        num = (num * di) % pp;
    }
    a = Coeff(num);
}

Coeff Field::from_int(long v) const
{
    Coeff c(v);
    normalize(c);
    return c;
}

Coeff Field::from_mpz(const mpz_class& v) const
{
    Coeff c(v);
    normalize(c);
    return c;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const
{
    Coeff r = a + b;
    if (p_ != 0)
        normalize(r);
    return r;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const
{
    Coeff r = a - b;
    if (p_ != 0)
        normalize(r);
    return r;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const
{
    Coeff r = a * b;
    if (p_ != 0)
        normalize(r);
    return r;
}

Coeff Field::neg(const Coeff& a) const
{
    Coeff r = -a;
    if (p_ != 0)
        normalize(r);
    return r;
}

Coeff Field::inv(const Coeff& a) const
{
    if (a == 0)
        throw std::domain_error("division by zero");
    if (p_ == 0)
        return Coeff(1) / a;
    mpz_class r;
    mpz_class pp(p_);
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), pp.get_mpz_t());
    return Coeff(r);
}

std::string Field::describe() const
{
    return p_ == 0 ? std::string("QQ") : "ZZ/" + std::to_string(p_);
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, Field field) : names_(std::move(names)), field_(field)
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!lookup_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name " + names_[i]);
    }
}

std::optional<std::size_t> Ring::index(std::string_view name) const
{
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Ring::at(std::string_view name) const
{
    auto i = index(name);
    if (!i)
        throw std::out_of_range("unknown variable " + std::string(name));
    return *i;
}

RingPtr make_ring(std::vector<std::string> names, Field field)
{
    return std::make_shared<const Ring>(std::move(names), field);
}

std::string w_name(int i, int j) { return "w_" + std::to_string(i) + "_" + std::to_string(j); }
std::string v_name(int h) { return "v" + std::to_string(h); }

static std::vector<std::string> w_names(int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
            out.push_back(w_name(i, j));
    return out;
}

RingPtr ring_A(int n, Field field) { return make_ring(w_names(n), field); }

RingPtr ring_B(int n, Field field, int first_v)
{
    auto names = w_names(n);
    for (int h = first_v; h <= 4; ++h)
        names.push_back(v_name(h));
    return make_ring(names, field);
}

RingPtr ring_T(int n, Field field)
{
    std::vector<std::string> names{"x", "y", "z"};
    for (auto& s : w_names(n))
        names.push_back(s);
    for (int h = 1; h <= 4; ++h)
        names.push_back(v_name(h));
    return make_ring(names, field);
}

RingPtr ring_xy(Field field) { return make_ring({"x", "y"}, field); }
RingPtr ring_xyt(Field field) { return make_ring({"x", "y", "t"}, field); }

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int Monomial::weighted_degree(const std::vector<int>& w) const
{
    int d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        d += w[i] * e_[i];
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](int a) { return a == 0; });
}

bool Monomial::is_squarefree() const
{
    return std::all_of(e_.begin(), e_.end(), [](int a) { return a <= 1; });
}

bool Monomial::divides(const Monomial& o) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] += o.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] -= o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = std::min(e_[i], o.e_[i]);
    return r;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (int a : e_) {
        h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(std::vector<std::vector<int>> weights, Tiebreak tb, std::vector<std::size_t> priority,
                     std::string label)
    : weights_(std::move(weights)), tb_(tb), priority_(std::move(priority)), label_(std::move(label))
{
    std::vector<char> seen(priority_.size(), 0);
    for (auto v : priority_) {
        if (v >= priority_.size() || seen[v])
            throw std::invalid_argument("variable priority is not a permutation");
        seen[v] = 1;
    }
    for (auto& w : weights_)
        if (w.size() != priority_.size())
            throw std::invalid_argument("weight row has wrong length");
}

static std::vector<std::size_t> identity_priority(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority)
{
    return TermOrder({}, Tiebreak::Lex, std::move(priority), "lex");
}

TermOrder TermOrder::lex(std::size_t nvars) { return lex(identity_priority(nvars)); }

TermOrder TermOrder::grevlex(std::vector<std::size_t> priority)
{
    std::vector<int> ones(priority.size(), 1);
    return TermOrder({ones}, Tiebreak::RevLex, std::move(priority), "grevlex");
}

TermOrder TermOrder::grevlex(std::size_t nvars) { return grevlex(identity_priority(nvars)); }

TermOrder TermOrder::weighted_revlex(std::vector<int> weights, std::vector<std::size_t> priority)
{
    return TermOrder({std::move(weights)}, Tiebreak::RevLex, std::move(priority), "weighted-grevlex");
}

TermOrder TermOrder::weighted_lex(std::vector<std::vector<int>> weights, std::vector<std::size_t> priority)
{
    return TermOrder(std::move(weights), Tiebreak::Lex, std::move(priority), "weighted-lex");
}

TermOrder TermOrder::eliminate_prefix(std::size_t ntags, const TermOrder& rest)
{
    std::size_t n = ntags + rest.nvars();
    std::vector<std::vector<int>> w;
    std::vector<int> tag(n, 0);
    for (std::size_t i = 0; i < ntags; ++i)
        tag[i] = 1;
    w.push_back(tag);
    for (auto& row : rest.weights_) {
        std::vector<int> r(ntags, 0);
        r.insert(r.end(), row.begin(), row.end());
        w.push_back(r);
    }
    std::vector<std::size_t> pr;
    for (std::size_t i = 0; i < ntags; ++i)
        pr.push_back(i);
    for (auto v : rest.priority_)
        pr.push_back(v + ntags);
    return TermOrder(std::move(w), rest.tb_, std::move(pr), "elim(" + rest.label_ + ")");
}

int TermOrder::compare(const Monomial& u, const Monomial& v) const
{
    for (auto& w : weights_) {
        long du = 0, dv = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            du += static_cast<long>(w[i]) * u[i];
            dv += static_cast<long>(w[i]) * v[i];
        }
        if (du != dv)
            return du > dv ? 1 : -1;
    }
    if (tb_ == Tiebreak::Lex) {
        for (auto i : priority_)
            if (u[i] != v[i])
                return u[i] > v[i] ? 1 : -1;
    } else {
        for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
            auto i = *it;
            if (u[i] != v[i])
                return u[i] < v[i] ? 1 : -1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- Polynomial

static bool canon_greater(const Term& a, const Term& b) { return b.m.lex_less(a.m); }

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c)
{
    Polynomial p(ring);
    Coeff cc = c;
    ring->field().normalize(cc);
    if (cc != 0)
        p.terms_.push_back({Monomial(ring->nvars()), cc});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i)
{
    Monomial m(ring->nvars());
    m[i] = 1;
    return term(ring, m, Coeff(1));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name)
{
    std::size_t i = ring->at(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Coeff& c)
{
    Polynomial p(ring);
    Coeff cc = c;
    ring->field().normalize(cc);
    if (cc != 0)
        p.terms_.push_back({std::move(m), cc});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    Polynomial p(ring);
    const Field& F = ring->field();
    std::sort(terms.begin(), terms.end(), canon_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
        } else {
            if (!p.terms_.empty()) {
                F.normalize(p.terms_.back().c);
                if (p.terms_.back().c == 0)
                    p.terms_.pop_back();
            }
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty()) {
        F.normalize(p.terms_.back().c);
        if (p.terms_.back().c == 0)
            p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    const Field& F = field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = o.terms_[j];
        if (a.m == b.m) {
            Coeff c = F.add(a.c, b.c);
            if (c != 0)
                r.terms_.push_back({a.m, c});
            ++i;
            ++j;
        } else if (b.m.lex_less(a.m)) {
            r.terms_.push_back(a);
            ++i;
        } else {
            r.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.c = field().neg(t.c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (is_zero() || o.is_zero())
        return Polynomial(ring_ ? ring_ : o.ring_);
    const Field& F = field();
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            auto [it, fresh] = acc.try_emplace(a.m * b.m, a.c * b.c);
            if (!fresh)
                it->second += a.c * b.c;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc) {
        Coeff cc = c;
        F.normalize(cc);
        if (cc != 0)
            ts.push_back({m, cc});
    }
    std::sort(ts.begin(), ts.end(), canon_greater);
    Polynomial r(ring_);
    r.terms_ = std::move(ts);
    return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const
{
    Polynomial r(ring_);
    Coeff cc = c;
    field().normalize(cc);
    if (cc == 0)
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.c = field().mul(t.c, cc);
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m, const Coeff& c) const
{
    Polynomial r = scaled(c);
    for (auto& t : r.terms_)
        t.m = t.m * m;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial r = constant(ring_, Coeff(1));
    Polynomial b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Term Polynomial::leading_term(const TermOrder& order) const
{
    if (is_zero())
        throw std::domain_error("leading term of the zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (order.compare(terms_[i].m, terms_[best].m) > 0)
            best = i;
    return terms_[best];
}

Polynomial Polynomial::monic(const TermOrder& order) const
{
    if (is_zero())
        return *this;
    return scaled(field().inv(leading_term(order).c));
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (auto& t : terms_)
        d = std::max(d, t.m.degree());
    return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights) const
{
    if (terms_.empty())
        return true;
    int d = terms_[0].m.weighted_degree(weights);
    for (auto& t : terms_)
        if (t.m.weighted_degree(weights) != d)
            return false;
    return true;
}

Coeff Polynomial::coefficient(const Monomial& m) const
{
    for (auto& t : terms_)
        if (t.m == m)
            return t.c;
    return Coeff(0);
}

Polynomial Polynomial::substitute(std::size_t i, const Polynomial& value) const
{
    std::map<int, Polynomial> powers;
    std::vector<Term> rest;
    Polynomial result(ring_);
    // Group terms by exponent of variable i.
    std::map<int, std::vector<Term>> groups;
    for (auto& t : terms_) {
        Term u = t;
        int e = u.m[i];
        u.m[i] = 0;
        groups[e].push_back(std::move(u));
    }
    Polynomial pw = constant(ring_, Coeff(1));
    int cur = 0;
    for (auto& [e, ts] : groups) {
        while (cur < e) {
            pw = pw * value;
            ++cur;
        }
        result += from_terms(ring_, ts) * pw;
    }
    return result;
}

Polynomial Polynomial::evaluate(const std::vector<Polynomial>& values, const RingPtr& target) const
{
    Polynomial result(target);
    std::vector<std::vector<Polynomial>> cache(values.size());
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
        auto& c = cache[v];
        if (c.empty())
            c.push_back(Polynomial::constant(target, Coeff(1)));
        while (static_cast<int>(c.size()) <= e)
            c.push_back(c.back() * values[v]);
        return c[e];
    };
    for (auto& t : terms_) {
        Polynomial p = Polynomial::constant(target, t.c);
        for (std::size_t v = 0; v < t.m.size(); ++v)
            if (t.m[v] > 0)
                p = p * power(v, t.m[v]);
        result += p;
    }
    return result;
}

Polynomial Polynomial::zero_out(const std::vector<std::size_t>& vars) const
{
    Polynomial r(ring_);
    for (auto& t : terms_) {
        bool keep = true;
        for (auto v : vars)
            if (t.m[v] > 0)
                keep = false;
        if (keep)
            r.terms_.push_back(t);
    }
    return r;
}

Polynomial Polynomial::to_ring(const RingPtr& target) const
{
    std::vector<std::ptrdiff_t> map(ring_->nvars(), -1);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        auto j = target->index(ring_->name(i));
        if (j)
            map[i] = static_cast<std::ptrdiff_t>(*j);
    }
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0)
                continue;
            if (map[i] < 0)
                throw std::invalid_argument("variable " + ring_->name(i) + " missing from target ring");
            m[map[i]] = t.m[i];
        }
        ts.push_back({std::move(m), t.c});
    }
    return from_terms(target, std::move(ts));
}

// ---------------------------------------------------------------- gradings and orders

Bigrading natural_bigrading(const Ring& ring)
{
    Bigrading g;
    g.deg1.assign(ring.nvars(), 0);
    g.deg2.assign(ring.nvars(), 0);
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        const std::string& s = ring.name(i);
        if (s == "x" || s == "y") {
            g.deg1[i] = 1;
            g.deg2[i] = 1;
        } else if (s == "z") {
            g.deg1[i] = 1;
        } else if (s.rfind("w_", 0) == 0 || s == "v2" || s == "v3") {
            g.deg2[i] = 1;
        } else if (s == "v4") {
            g.deg2[i] = 2;
        }
    }
    return g;
}

Bidegree bidegree(const Polynomial& f, const Bigrading& g)
{
    Bidegree b;
    if (f.is_zero()) {
        b.zero = true;
        b.homogeneous = true;
        return b;
    }
    b.d1 = f.terms()[0].m.weighted_degree(g.deg1);
    b.d2 = f.terms()[0].m.weighted_degree(g.deg2);
    b.homogeneous = true;
    for (auto& t : f.terms())
        if (t.m.weighted_degree(g.deg1) != b.d1 || t.m.weighted_degree(g.deg2) != b.d2)
            b.homogeneous = false;
    return b;
}

// Variables of the form w_i_j, sorted by (i, j).
static std::vector<std::size_t> w_vars_rowmajor(const Ring& ring)
{
    std::vector<std::pair<std::pair<int, int>, std::size_t>> ws;
    for (std::size_t k = 0; k < ring.nvars(); ++k) {
        const std::string& s = ring.name(k);
        if (s.rfind("w_", 0) != 0)
            continue;
        auto us = s.find('_', 2);
        int i = std::stoi(s.substr(2, us - 2));
        int j = std::stoi(s.substr(us + 1));
        ws.push_back({{i, j}, k});
    }
    std::sort(ws.begin(), ws.end());
    std::vector<std::size_t> out;
    for (auto& p : ws)
        out.push_back(p.second);
    return out;
}

TermOrder bigraded_lex_order(const Ring& ring)
{
    Bigrading g = natural_bigrading(ring);
    std::vector<std::size_t> pr;
    for (const char* s : {"x", "y", "z", "v1", "v2", "v3", "v4"}) {
        if (auto i = ring.index(s))
            pr.push_back(*i);
    }
    for (auto k : w_vars_rowmajor(ring))
        pr.push_back(k);
    if (pr.size() != ring.nvars())
        throw std::invalid_argument("bigraded order: ring has unexpected variables");
    return TermOrder({g.deg1, g.deg2}, TermOrder::Tiebreak::Lex, pr, "bigraded-lex");
}

TermOrder antidiagonal_order(const Ring& ring)
{
    auto ws = w_vars_rowmajor(ring);
    if (ws.size() != ring.nvars())
        throw std::invalid_argument("antidiagonal order needs a ring of w variables");
    std::reverse(ws.begin(), ws.end());
    auto o = TermOrder::grevlex(ws);
    return TermOrder(o.weights(), o.tiebreak(), o.priority(), "grevlex-antidiagonal");
}

TermOrder intermediate_order(const Ring& ring)
{
    auto ws = w_vars_rowmajor(ring);
    std::reverse(ws.begin(), ws.end());
    for (const char* s : {"v4", "v3", "v2", "v1"})
        if (auto i = ring.index(s))
            ws.push_back(*i);
    if (ws.size() != ring.nvars())
        throw std::invalid_argument("intermediate order: ring has unexpected variables");
    Bigrading g = natural_bigrading(ring);
    return TermOrder({g.deg2}, TermOrder::Tiebreak::RevLex, ws, "deg2-grevlex");
}

}  // namespace nh
