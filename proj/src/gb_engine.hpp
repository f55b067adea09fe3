#pragma once

// Internal Gröbner machinery shared by the groebner translation units.
// Monomials are re-encoded so that the term order becomes plain
// lexicographic comparison of int vectors: weight values first, then the
// exponents in priority order (negated and reversed for revlex tie-breaks).

#include "nh/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace nh::detail {

using IMon = std::vector<int>;

class Encoder {
public:
    explicit Encoder(const TermOrder& o);

    std::size_t nvars() const { return n_; }
    IMon encode(const Monomial& m) const;
    Monomial decode(const IMon& a) const;
    int exp_at(const IMon& a, std::size_t k) const { return s_ * a[r_ + k]; }
    bool divides(const IMon& a, const IMon& b) const
    {
        for (std::size_t k = 0; k < n_; ++k)
            if (s_ * a[r_ + k] > s_ * b[r_ + k])
                return false;
        return true;
    }
    bool coprime(const IMon& a, const IMon& b) const
    {
        for (std::size_t k = 0; k < n_; ++k)
            if (a[r_ + k] != 0 && b[r_ + k] != 0)
                return false;
        return true;
    }
    IMon lcm(const IMon& a, const IMon& b) const;
    IMon mul(const IMon& a, const IMon& b) const
    {
        IMon c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            c[k] = a[k] + b[k];
        return c;
    }
    IMon div(const IMon& a, const IMon& b) const
    {
        IMon c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            c[k] = a[k] - b[k];
        return c;
    }
    int degree(const IMon& a) const
    {
        int d = 0;
        for (std::size_t k = 0; k < n_; ++k)
            d += a[r_ + k];
        return s_ * d;
    }
    std::uint64_t sdv(const IMon& a) const
    {
        std::uint64_t m = 0;
        for (std::size_t k = 0; k < n_; ++k)
            if (a[r_ + k] != 0)
                m |= std::uint64_t(1) << (k & 63);
        return m;
    }

private:
    void set_weights(IMon& a) const;

    std::size_t n_ = 0, r_ = 0;
    int s_ = 1;
    std::vector<std::size_t> var_at_;
    std::vector<std::vector<int>> wt_;
};

struct QK {
    using T = mpq_class;
    T from(const Coeff& c) const { return c; }
    Coeff to(const T& c) const { return c; }
    static bool zero(const T& a) { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return T(1) / a; }
    T one() const { return T(1); }
};

struct PK {
    using T = std::uint64_t;
    Field field;
    std::uint64_t p;
    explicit PK(const Field& f) : field(f), p(f.characteristic()) {}
    T from(const Coeff& c) const
    {
        Coeff x = c;
        field.normalize(x);
        return x.get_num().get_ui();
    }
    Coeff to(const T& c) const { return Coeff(static_cast<unsigned long>(c)); }
    static bool zero(const T& a) { return a == 0; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return (a + p - b) % p; }
    T mul(T a, T b) const { return static_cast<T>((static_cast<unsigned __int128>(a) * b) % p); }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const
    {
        T r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    T one() const { return 1; }
};

template <class K>
struct ITerm {
    IMon m;
    typename K::T c;
};

template <class K>
using IPoly = std::vector<ITerm<K>>;  // strictly descending in the order

template <class K>
IPoly<K> to_internal(const Polynomial& f, const Encoder& enc, const K& k)
{
    IPoly<K> out;
    out.reserve(f.size());
    for (auto& t : f.terms())
        out.push_back({enc.encode(t.m), k.from(t.c)});
    std::sort(out.begin(), out.end(), [](const ITerm<K>& a, const ITerm<K>& b) { return b.m < a.m; });
    return out;
}

template <class K>
Polynomial to_external(const IPoly<K>& f, const Encoder& enc, const K& k, const RingPtr& ring)
{
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (auto& t : f)
        ts.push_back({enc.decode(t.m), k.to(t.c)});
    return Polynomial::from_terms(ring, std::move(ts));
}

/// Runs `fn(k)` with the coefficient policy matching the field.
template <class Fn>
auto with_field(const Field& F, Fn&& fn)
{
    if (F.is_rational())
        return fn(QK{});
    return fn(PK(F));
}

}  // namespace nh::detail
