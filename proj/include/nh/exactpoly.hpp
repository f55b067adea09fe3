#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nh {

using Coeff = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or Z/p.
/// Residues are stored as integral mpq values in [0, p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(unsigned long p);

    unsigned long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    void normalize(Coeff& a) const;
    Coeff from_int(long v) const;
    Coeff from_mpz(const mpz_class& v) const;
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }
    std::string describe() const;

private:
    unsigned long p_ = 0;
};

/// Ordered list of variable names together with a coefficient field.
class Ring {
public:
    Ring(std::vector<std::string> names, Field field = {});

    std::size_t nvars() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(std::string_view name) const;
    std::size_t at(std::string_view name) const;
    const Field& field() const { return field_; }

    bool same_as(const Ring& o) const { return names_ == o.names_ && field_ == o.field_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> lookup_;
    Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, Field field = {});

std::string w_name(int i, int j);
std::string v_name(int h);

// Rings of the construction. Variable layout:
//   A: w_1_1 .. w_{n+1}_n (row-major)
//   B: A's variables, then v_first .. v4
//   T: x, y, z, then B's variables
RingPtr ring_A(int n, Field field = {});
RingPtr ring_B(int n, Field field = {}, int first_v = 1);
RingPtr ring_T(int n, Field field = {});
RingPtr ring_xy(Field field = {});
RingPtr ring_xyt(Field field = {});

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }

    int degree() const;
    int weighted_degree(const std::vector<int>& w) const;
    bool is_one() const;
    bool is_squarefree() const;
    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    Monomial operator*(const Monomial& o) const;
    /// Requires o | *this.
    Monomial operator/(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Canonical storage order: lexicographic on exponent vectors.
    bool lex_less(const Monomial& o) const { return e_ < o.e_; }

    std::size_t hash() const;

private:
    std::vector<int> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial order: a sequence of integer weight rows, then a lexicographic or
/// reverse-lexicographic tie-break over a variable priority list
/// (priority[0] is the largest variable).
class TermOrder {
public:
    enum class Tiebreak { Lex, RevLex };

    TermOrder() = default;
    TermOrder(std::vector<std::vector<int>> weights, Tiebreak tb, std::vector<std::size_t> priority,
              std::string label);

    static TermOrder lex(std::vector<std::size_t> priority);
    static TermOrder lex(std::size_t nvars);
    static TermOrder grevlex(std::vector<std::size_t> priority);
    static TermOrder grevlex(std::size_t nvars);
    static TermOrder weighted_revlex(std::vector<int> weights, std::vector<std::size_t> priority);
    static TermOrder weighted_lex(std::vector<std::vector<int>> weights, std::vector<std::size_t> priority);
    /// Elimination order on `ntags` new leading variables followed by the
    /// variables of `rest`: total tag degree first, then `rest`.
    static TermOrder eliminate_prefix(std::size_t ntags, const TermOrder& rest);

    /// -1, 0, 1 for u <, =, > v.
    int compare(const Monomial& u, const Monomial& v) const;
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

    std::size_t nvars() const { return priority_.size(); }
    const std::string& label() const { return label_; }
    const std::vector<std::vector<int>>& weights() const { return weights_; }
    const std::vector<std::size_t>& priority() const { return priority_; }
    Tiebreak tiebreak() const { return tb_; }

private:
    std::vector<std::vector<int>> weights_;
    Tiebreak tb_ = Tiebreak::Lex;
    std::vector<std::size_t> priority_;
    std::string label_;
};

struct Term {
    Monomial m;
    Coeff c;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Coeff& c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial term(RingPtr ring, Monomial m, const Coeff& c);
    /// Builds from arbitrary (unsorted, possibly repeated) terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    /// Terms in canonical (descending lexicographic exponent) order.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial shifted(const Monomial& m, const Coeff& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Term leading_term(const TermOrder& order) const;
    Monomial leading_monomial(const TermOrder& order) const { return leading_term(order).m; }
    /// Scales so the leading coefficient is 1.
    Polynomial monic(const TermOrder& order) const;

    int total_degree() const;
    bool is_homogeneous(const std::vector<int>& weights) const;
    /// Coefficient of a given monomial (zero if absent).
    Coeff coefficient(const Monomial& m) const;

    /// Replace variable i by a polynomial in the same ring.
    Polynomial substitute(std::size_t i, const Polynomial& value) const;
    /// Simultaneous substitution of every variable (values in `target` ring).
    Polynomial evaluate(const std::vector<Polynomial>& values, const RingPtr& target) const;
    /// Set the listed variables to zero.
    Polynomial zero_out(const std::vector<std::size_t>& vars) const;
    /// Move into another ring by variable name; variables absent from the
    /// target must not occur with positive exponent.
    Polynomial to_ring(const RingPtr& target) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Two integer gradings given by per-variable weights.
struct Bigrading {
    std::vector<int> deg1;
    std::vector<int> deg2;
};

/// The bigrading of T (or of any ring containing a subset of its variables).
Bigrading natural_bigrading(const Ring& ring);

struct Bidegree {
    bool zero = false;        // the zero polynomial: bihomogeneous of every bidegree
    bool homogeneous = false;
    int d1 = 0;
    int d2 = 0;
};

Bidegree bidegree(const Polynomial& f, const Bigrading& g);

/// Bigraded-lex order: deg1, then deg2, then pure lex with
/// x > y > z > v1 > .. > v4 > w_1_1 > .. > w_{n+1}_n.
TermOrder bigraded_lex_order(const Ring& ring);
/// Grevlex on A with w_1_1 < w_1_2 < ... < w_{n+1}_n (antidiagonal).
TermOrder antidiagonal_order(const Ring& ring);
/// deg2-weighted grevlex on B^(j) with v1 < .. < v4 < w_1_1 < .. < w_{n+1}_n.
TermOrder intermediate_order(const Ring& ring);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
std::string to_string(const Polynomial& f);
std::string to_string(const Coeff& c);
std::string to_string(const Monomial& m, const Ring& ring);
Coeff parse_coeff(std::string_view text);

}  // namespace nh
