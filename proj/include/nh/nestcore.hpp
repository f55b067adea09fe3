#pragma once

#include "nh/exactpoly.hpp"
#include "nh/groebner.hpp"
#include "nh/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nh {

/// Rings and matrices of the local construction around the compressed pair.
/// X has y on the diagonal and -x on the subdiagonal; Y is X at x = 0.
struct GenericSetup {
    int n = 0;
    RingPtr A, B, T;
    PolyMatrix X, Y;  // entries in T
    PolyMatrix W;     // entries in A
    PolyMatrix WT;    // W with entries in T
    Polynomial gamma1, gamma2;  // x + v1 y + v2 z,  y^2 + v3 y z + v4 z^2
};

GenericSetup build_setup(int n, Field field = {});

/// Maximal minors of X + zW, deleting row i = 1..n+1 (index i-1).
std::vector<Polynomial> delta_minors(const GenericSetup& s);

/// Thrown when a remainder is not of the form g y z^(n-1) + G z^n.
class RemainderShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IdealL {
    std::vector<Polynomial> g, G;  // in B
    std::vector<Polynomial> gens() const;
};

struct IdealI {
    std::vector<Polynomial> f, F;  // in A
    std::vector<Polynomial> gens() const;
};

IdealL ideal_L(const GenericSetup& s, const std::vector<Polynomial>& deltas);
IdealL ideal_L(const GenericSetup& s);
IdealI ideal_I_division(const GenericSetup& s, const std::vector<Polynomial>& deltas);
IdealI ideal_I_division(const GenericSetup& s);
IdealI ideal_I_closed_form(const GenericSetup& s);
/// Images of g_i, G_i at v = 0.
IdealI retract_to_A(const GenericSetup& s, const IdealL& L);

/// Submatrix determinant of W on 1-based rows and columns.
Polynomial w_minor(const GenericSetup& s, const std::vector<int>& rows, const std::vector<int>& cols);

/// Squarefree generators x_h, y_h, z_h of the monomial ideal K, as monomials of A.
struct KMonomials {
    std::vector<Monomial> x, y, z;  // x_2..x_{n+1}, y_2..y_{n+1}, z_3..z_{n+1}
    std::vector<Monomial> all() const;
};
KMonomials k_monomials(const GenericSetup& s);

/// f1 det W_{(h+1..n+1),(2..n-h+2)} + f2 det W_{(h+1..n+1),(1,3..n-h+2)} for h = 3..n.
std::vector<Polynomial> combination_polynomials(const GenericSetup& s, const IdealI& I);

struct LeadingMonomialReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};
LeadingMonomialReport check_leading_monomials(const GenericSetup& s, const IdealI& I);

struct ClaimedGbReport {
    std::vector<Polynomial> basis;
    GbCheck check;
    bool lm_generate_K = false;
    bool ok() const { return check.status == Status::Ok && check.is_basis && lm_generate_K; }
};
ClaimedGbReport claimed_gb(const GenericSetup& s, const IdealI& I, const Budget& budget = {});

struct InitialCheck {
    Status status = Status::Ok;
    bool equal = false;
    std::vector<Monomial> initial;  // minimal generators of in(ideal)
    std::size_t gb_size = 0;
};

/// Full Buchberger on the generators of I; compares in(I) with K.
InitialCheck initial_equals_K(const GenericSetup& s, const IdealI& I, const Budget& budget = {});

/// Image of L modulo v_1..v_j in B^(j), initial ideal under the deg2-graded revlex order,
/// compared with K extended to B^(j).
InitialCheck intermediate_initial_check(const GenericSetup& s, const IdealL& L, int j, const Budget& budget = {});
std::vector<Polynomial> intermediate_ideal(const GenericSetup& s, const IdealL& L, int j, RingPtr* ring_out = nullptr);

// ---------------------------------------------------------------- set-theoretic oracles

/// True iff every maximal minor of Y + B has vanishing constant and linear coefficient in y.
/// B is (n+1) x n over a field.
bool fiber_membership(const Matrix& B);
/// True iff dim(ker A cap ker a) >= 1 and dim(ker A^2 cap ker aA cap ker a) >= 2.
bool rank_conditions(const Matrix& A, const Matrix& a);
Matrix stack_rows(const Matrix& A, const Matrix& a);

struct OracleReport {
    int n = 0;
    unsigned long p = 0;
    std::size_t samples = 0;
    std::size_t mismatches = 0;
    std::size_t members = 0;  // samples lying on the variety
    std::string witness;
    bool ok() const { return mismatches == 0; }
};

/// Random samples over F_p: a third uniform, a third planted on the variety,
/// a third planted and then perturbed. Sample k uses a generator seeded by (seed, k).
OracleReport oracle_random(int n, unsigned long p, std::size_t samples, std::uint64_t seed, unsigned threads = 1);

/// All Jordan forms over F_2 with eigenvalues in {0, 1} and every a in F_2^n.
OracleReport oracle_jordan_f2(int n);
/// Jordan forms with eigenvalues {0, lambda} over F_p, lambda and a random, conjugated randomly.
OracleReport oracle_jordan_random(int n, unsigned long p, std::size_t per_type, std::uint64_t seed);

/// Jordan matrix with nilpotent blocks `zero_blocks` followed by blocks with eigenvalue lambda.
Matrix jordan_matrix(const std::vector<int>& zero_blocks, const std::vector<int>& lambda_blocks,
                     const Coeff& lambda, Field field);
std::vector<std::vector<int>> partitions(int k);

/// Runs body(k) for k in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

// ---------------------------------------------------------------- tangent spaces

/// Nested pair V(I1) contains V(I2), i.e. I1 inside I2, ideals of k[x, y].
struct PairPoint {
    std::vector<Polynomial> I1, I2;
};

/// Thrown for infinite colength or a failed inclusion.
class PairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TangentReport {
    long dim = 0;
    long colength1 = 0, colength2 = 0;
    long hom1 = 0, hom2 = 0;  // dim Hom(I1, R/I1), dim Hom(I2, R/I2)
};

TangentReport tangent_space(const PairPoint& p);
long tangent_dim(const PairPoint& p);
/// dim Hom_R(I, R/I) for an m-primary ideal of k[x, y] (tangent space of Hilb at V(I)).
long hilb_tangent_dim(const std::vector<Polynomial>& I);

}  // namespace nh
