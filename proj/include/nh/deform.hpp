#pragma once

#include "nh/exactpoly.hpp"
#include "nh/groebner.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nh {

// Ideals of k[x, y] (ring_xy) over the rationals; families live in k[x, y, t] (ring_xyt).

class DeformError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lowest total degree of a term; -1 for the zero polynomial.
int poly_order(const Polynomial& f);
/// Lowest-degree homogeneous component.
Polynomial initial_form(const Polynomial& f);

struct LocalData {
    long colength = 0;
    int ord = 0;
    /// Degree d -> basis of [I*]_d (homogeneous forms), for d = 0 .. colength.
    std::map<int, std::vector<Polynomial>> forms;
    /// Degree d -> elements of I whose initial forms are the basis above.
    std::map<int, std::vector<Polynomial>> lifts;
    std::vector<Polynomial> initial_ideal_gens() const;
    long codim_sum() const;  // sum over d of (d + 1 - dim [I*]_d)
};

bool is_m_primary(const std::vector<Polynomial>& I);
/// Throws DeformError when I is not m-primary.
LocalData ord_and_initial_forms(const std::vector<Polynomial>& I);

struct FlatFamily {
    std::vector<Polynomial> gens;  // in k[x, y, t]
    std::string description;
    std::vector<Polynomial> at(long t0) const;
};

struct SampleCheck {
    long t = 0;
    long colength = -1;
    bool intersection_identity = true;  // only meaningful for t != 0
};

struct FamilyReport {
    FlatFamily family;
    bool special_fiber_ok = false;  // I^(0) = I
    bool colength_constant = false;
    bool intersection_ok = false;
    std::vector<SampleCheck> samples;
    bool ok() const { return special_fiber_ok && colength_constant && intersection_ok; }
};

/// (f) + (l - t)(I : l), checked at t = 0..4.
FamilyReport cleave_family(const std::vector<Polynomial>& I, const Polynomial& f, const Polynomial& l,
                           const std::vector<long>& samples = {0, 1, 2, 3, 4});

struct PairFamilies {
    std::string case_label;
    std::vector<std::string> trace;
    FamilyReport I_family, J_family;
    bool inclusion_ok = false;
    bool ok() const;
};

/// Cleaves an irreducible pair V(I) containing V(J), supported at the origin, colength(J) in {1, 2}.
/// Throws DeformError when the input matches none of the handled normal forms.
PairFamilies cleave_pair(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                         const std::vector<long>& samples = {0, 1, 2});

/// Linear substitution x -> a x + b y, y -> c x + d y.
std::vector<Polynomial> linear_change(const std::vector<Polynomial>& I, const Coeff& a, const Coeff& b,
                                      const Coeff& c, const Coeff& d);

struct GinResult {
    std::vector<Monomial> gens;
    int draws = 0;
};

/// Generic initial ideal under grevlex (x > y) by the two-draw agreement protocol.
GinResult gin(const std::vector<Polynomial>& I, std::uint64_t seed, int max_rounds = 6);

bool is_borel_fixed(const std::vector<Monomial>& gens);
/// Grevlex-lowest monomial lying in the monomial ideal.
Monomial lowest_monomial(const std::vector<Monomial>& gens);

struct AddPointResult {
    std::vector<Monomial> predicted;   // B minus its lowest monomial
    bool verified_monomial = false;     // in(B cap I_Q) = predicted
    bool verified_generic = false;      // in(g.B cap I_Q) = predicted for a random coordinate change g
};

AddPointResult add_point_initial(const std::vector<Monomial>& B, std::uint64_t seed, bool verify = true);

struct ReducibleResult {
    int d = 0;
    int r = 0;
    std::vector<long> lambda;  // m_1 > ... > m_d
    long dim_G = 0;
    long bound = 0;            // r^2
    mpq_class f_dr;            // sum (r+1-i)(r-i)/4
};

ReducibleResult reducible_search(int d);
/// dim of the Grassmannian product for given (d, r).
long grassmannian_dim(int d, int r);

}  // namespace nh
