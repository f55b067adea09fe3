#pragma once

#include "nh/exactpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nh {

/// Resource caps for Buchberger runs. Exceeding either is reported as
/// Status::BudgetExceeded, never as a wrong answer.
struct Budget {
    std::size_t max_pairs = 1000000;
    int max_degree = 60;
};

enum class Status { Ok, BudgetExceeded };

struct GbResult {
    Status status = Status::Ok;
    /// Reduced, monic, sorted by leading monomial (descending).
    std::vector<Polynomial> basis;
    std::size_t pairs_reduced = 0;
    std::string detail;

    bool ok() const { return status == Status::Ok; }
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

struct GbCheck {
    Status status = Status::Ok;
    bool is_basis = true;
    /// Indices of a failing pair, with the nonzero remainder of its S-polynomial.
    std::size_t i = 0, j = 0;
    Polynomial remainder;
    std::size_t pairs_checked = 0;
};

/// Multivariate division with quotients. Reduces every term, not only the lead.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);
/// Remainder only.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);

GbResult buchberger(const std::vector<Polynomial>& gens, const TermOrder& order, const Budget& budget = {});
GbCheck is_groebner(const std::vector<Polynomial>& G, const TermOrder& order, const Budget& budget = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

// ---------------------------------------------------------------- monomial ideals

/// Drops zero and redundant generators; result sorted by lex_less.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens);
bool same_monomial_ideal(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens);

struct InitialIdeal {
    Status status = Status::Ok;
    std::vector<Monomial> gens;  // minimal generators
    GbResult gb;
};

InitialIdeal initial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order, const Budget& budget = {});

// ---------------------------------------------------------------- Hilbert series

/// Hilbert series of R/I = numerator(t) / (1 - t)^nvars for the standard grading.
struct HilbertData {
    std::size_t nvars = 0;
    std::vector<mpz_class> numerator;     // coefficients of t^0, t^1, ...
    std::vector<mpz_class> reduced;       // numerator with all (1 - t) factors removed
    int dimension = 0;                    // Krull dimension of R/I
    int codimension = 0;
    mpz_class multiplicity;
    std::vector<mpz_class> function;      // dim (R/I)_d for d = 0..cutoff
};

/// Numerator of the Hilbert series of R/(monomial ideal), by pivot recursion.
std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);
HilbertData hilbert_from_monomials(const std::vector<Monomial>& gens, std::size_t nvars, int cutoff);

struct HilbertResult {
    Status status = Status::Ok;
    HilbertData data;
};

/// Throws std::invalid_argument on inhomogeneous input.
HilbertResult hilbert(const std::vector<Polynomial>& gens, const TermOrder& order, int cutoff,
                      const Budget& budget = {});

/// dim (R/I)_d computed directly by linear algebra over Z/p on the span of
/// multiples of the generators in degree d. Independent of Gröbner bases.
std::vector<long> hilbert_function_linear(const std::vector<Polynomial>& gens, int cutoff, unsigned long p);

// ---------------------------------------------------------------- ideal operations

/// f in <G> where G is a Gröbner basis for `order`.
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);
/// Membership via a fresh Gröbner basis of gens.
bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& order,
                  const Budget& budget = {});
bool ideal_contains(const std::vector<Polynomial>& big, const std::vector<Polynomial>& small,
                    const TermOrder& order, const Budget& budget = {});
bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const TermOrder& order,
                  const Budget& budget = {});

struct IdealResult {
    Status status = Status::Ok;
    std::vector<Polynomial> gens;
};

IdealResult intersect(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J, const TermOrder& order,
                      const Budget& budget = {});
IdealResult colon(const std::vector<Polynomial>& I, const Polynomial& f, const TermOrder& order,
                  const Budget& budget = {});
/// Exact quotient f / g; throws if g does not divide f.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// dim_k R/I; nullopt when infinite.
std::optional<long> colength(const std::vector<Polynomial>& gens, const TermOrder& order,
                             const Budget& budget = {});
std::optional<long> colength_monomial(const std::vector<Monomial>& gens, std::size_t nvars);
/// Standard monomials of a zero-dimensional monomial ideal.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars);

}  // namespace nh
