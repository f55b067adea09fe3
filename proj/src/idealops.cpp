#include "nh/groebner.hpp"

#include <functional>

namespace nh {

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& order,
                  const Budget& budget)
{
    auto gb = buchberger(gens, order, budget);
    if (!gb.ok())
        throw std::runtime_error("ideal_member: budget exceeded (" + gb.detail + ")");
    return reduces_to_zero(f, gb.basis, order);
}

bool ideal_contains(const std::vector<Polynomial>& big, const std::vector<Polynomial>& small,
                    const TermOrder& order, const Budget& budget)
{
    auto gb = buchberger(big, order, budget);
    if (!gb.ok())
        throw std::runtime_error("ideal_contains: budget exceeded (" + gb.detail + ")");
    for (auto& f : small)
        if (!reduces_to_zero(f, gb.basis, order))
            return false;
    return true;
}

bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const TermOrder& order,
                  const Budget& budget)
{
    auto ga = buchberger(a, order, budget);
    auto gb = buchberger(b, order, budget);
    if (!ga.ok() || !gb.ok())
        throw std::runtime_error("ideals_equal: budget exceeded");
    // Reduced Gröbner bases are unique.
    return ga.basis == gb.basis;
}

IdealResult intersect(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J, const TermOrder& order,
                      const Budget& budget)
{
    IdealResult res;
    RingPtr base;
    for (auto* L : {&I, &J})
        for (auto& f : *L)
            if (f.ring())
                base = f.ring();
    if (!base)
        return res;
    std::vector<std::string> names{"_tag"};
    for (auto& s : base->names())
        names.push_back(s);
    RingPtr ext = make_ring(names, base->field());
    Polynomial t = Polynomial::variable(ext, std::size_t(0));
    Polynomial one = Polynomial::constant(ext, Coeff(1));
    std::vector<Polynomial> gens;
    for (auto& f : I)
        if (!f.is_zero())
            gens.push_back(t * f.to_ring(ext));
    for (auto& g : J)
        if (!g.is_zero())
            gens.push_back((one - t) * g.to_ring(ext));
    auto gb = buchberger(gens, TermOrder::eliminate_prefix(1, order), budget);
    res.status = gb.status;
    if (!gb.ok())
        return res;
    for (auto& g : gb.basis) {
        bool free = true;
        for (auto& term : g.terms())
            if (term.m[0] != 0)
                free = false;
        if (free)
            res.gens.push_back(g.to_ring(base));
    }
    return res;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g, const TermOrder& order)
{
    auto d = divide(f, {g}, order);
    if (!d.remainder.is_zero())
        throw std::domain_error("exact_quotient: divisor does not divide");
    return d.quotients[0];
}

IdealResult colon(const std::vector<Polynomial>& I, const Polynomial& f, const TermOrder& order,
                  const Budget& budget)
{
    if (f.is_zero())
        throw std::invalid_argument("colon by the zero polynomial");
    IdealResult inter = intersect(I, {f}, order, budget);
    IdealResult res;
    res.status = inter.status;
    if (inter.status != Status::Ok)
        return res;
    for (auto& h : inter.gens)
        res.gens.push_back(exact_quotient(h, f, order));
    auto gb = buchberger(res.gens, order, budget);
    res.status = gb.status;
    if (gb.ok())
        res.gens = gb.basis;
    return res;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars)
{
    std::vector<Monomial> out;
    Monomial m(nvars);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == nvars) {
            out.push_back(m);
            return;
        }
        while (!in_monomial_ideal(m, gens)) {
            rec(v + 1);
            ++m[v];
            if (m[v] > 100000)
                throw std::domain_error("standard_monomials: ideal is not zero-dimensional");
        }
        m[v] = 0;
    };
    rec(0);
    return out;
}

std::optional<long> colength_monomial(const std::vector<Monomial>& gens, std::size_t nvars)
{
    for (auto& g : gens)
        if (g.is_one())
            return 0;
    for (std::size_t v = 0; v < nvars; ++v) {
        bool pure = false;
        for (auto& g : gens)
            if (g[v] > 0 && g.degree() == g[v])
                pure = true;
        if (!pure)
            return std::nullopt;
    }
    return static_cast<long>(standard_monomials(gens, nvars).size());
}

std::optional<long> colength(const std::vector<Polynomial>& gens, const TermOrder& order, const Budget& budget)
{
    auto in = initial_ideal(gens, order, budget);
    if (in.status != Status::Ok)
        throw std::runtime_error("colength: budget exceeded");
    return colength_monomial(in.gens, order.nvars());
}

}  // namespace nh
