#pragma once

#include "nh/exactpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nh {

// Weights are integer tuples for GL_k. Bundles are written as Schur functors
// of the duals of tautological bundles; a weight on a Grassmannian is the
// concatenation (sub-bundle dual | quotient dual).

using GLWeight = std::vector<long>;

bool is_dominant(const GLWeight& w);
std::string to_string(const GLWeight& w);

struct BottResult {
    int shift = 0;      // cohomological degree
    GLWeight dominant;  // resulting weight
};

/// Bott's algorithm with rho = (k-1, ..., 0). Empty when the rho-shifted weight has a repeat.
std::optional<BottResult> bott_step(const GLWeight& w);

/// Weyl dimension formula; throws std::invalid_argument on non-dominant input.
mpz_class schur_dim(const GLWeight& w);

/// Dominant weights obtained from mu by adding a vertical strip of j boxes.
std::vector<GLWeight> pieri_column(const GLWeight& mu, int j);

/// Semistandard tableau count of shape lambda (a partition) with entries in 1..k.
/// Slow; used as an independent check of schur_dim.
mpz_class count_ssyt(const std::vector<int>& lambda, int k);

struct GLPiece {
    GLWeight weight;  // dominant weight of GL(E) (dual convention: S_weight E^dual)
    long multiplicity = 1;
};

/// H^q(Flag(1,2;E), S_a R1 (x) wedge^j Q^dual (x) S_b(R2/R1)) as q -> pieces, rank E = n.
std::map<int, std::vector<GLPiece>> cohomology_F(int a, int j, int b, int n);

enum class Block { Eta, R2Sub, R2Quot, Wedge };
std::string to_string(Block b);

/// A summand wedge^i E^dual (x) S_a R1 (x) wedge^j Q^dual (x) S_b(R2/R1) of wedge^p xi'.
/// R2Sub and R2Quot are the two pieces of the R2 block (via 0 -> R1 -> R2 -> R2/R1 -> 0);
/// the Wedge block uses wedge^2 R2 = R1 (x) R2/R1.
struct BundleSummand {
    Block block = Block::Eta;
    int i = 0;
    int a = 0;
    int j = 0;
    int b = 0;
    long e = 1;  // binomial(n, i)
};

std::vector<BundleSummand> xi_prime_decomposition(int n, int p);

enum class EntryTag { Certified, CancellingPair };

/// q -> h^q of the summands of one block of wedge^p xi'.
std::map<int, mpz_class> block_cohomology(int n, int p, Block block);

struct TableEntry {
    mpz_class dim;         // certified part of h^q
    EntryTag tag = EntryTag::Certified;
    mpz_class pair_bound;  // bound on the undetermined part shared with the partner entry
    mpz_class eta, r2, wedge;  // certified contributions by block
};

struct CohomologyTable {
    int n = 0;
    std::map<std::pair<int, int>, TableEntry> entries;  // (p, q)
    /// Per-summand Bott uniqueness held throughout.
    bool bott_unique = true;
    mpz_class at(int p, int q) const;
    bool tagged(int p, int q) const;
};

CohomologyTable cohomology_tables(int n);

/// Sum of (-1)^(p-q) p^4 / 24 * h over certified parts of the table.
mpq_class klw_degree(int n);
mpq_class klw_degree(const CohomologyTable& t);
/// (n-1) n (n+1) (3n-2) / 12.
mpz_class degree_formula(long n);

struct ExpectedEntry {
    mpz_class dim;
    bool tagged = false;
};

/// Nonzero and tagged positions of the table in closed form (n >= 4).
std::map<std::pair<int, int>, ExpectedEntry> expected_table(int n);
/// Compares support, values and tags; the first difference goes to `witness`.
bool table_matches_expected(const CohomologyTable& t, std::string* witness = nullptr);

/// Ring with variables y, a_1..a_l.
RingPtr jordan_ring(int l, Field field = {});
/// Closed form (-y)^(l-i) (a_i y^(i-1) - a_(i-1) y^(i-2) + ... ).
Polynomial jordan_minor_expansion(int l, int i, const RingPtr& ring);
/// The same minor computed as a determinant of the (l+1) x l matrix with row i removed.
Polynomial jordan_minor_direct(int l, int i, const RingPtr& ring);

}  // namespace nh
