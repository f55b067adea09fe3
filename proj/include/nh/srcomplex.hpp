#pragma once

#include <bitset>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nh {

constexpr std::size_t kMaxVertices = 128;
using VertexSet = std::bitset<kMaxVertices>;

struct Vertex {
    int i = 0;  // row, 1-based
    int j = 0;  // column, 1-based
    bool operator==(const Vertex& o) const { return i == o.i && j == o.j; }
    bool operator<(const Vertex& o) const { return i != o.i ? i < o.i : j < o.j; }
};

/// The vertex set [n+1] x [n], indexed row-major (same layout as ring A).
class VertexGrid {
public:
    explicit VertexGrid(int n);
    int n() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>((n_ + 1) * n_); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
    Vertex vertex(std::size_t k) const { return {static_cast<int>(k) / n_ + 1, static_cast<int>(k) % n_ + 1}; }
    VertexSet make(const std::vector<Vertex>& vs) const;
    std::vector<Vertex> vertices(const VertexSet& s) const;

private:
    int n_;
};

bool vertex_set_less(const VertexSet& a, const VertexSet& b);

/// Supports of the generators x_h (h = 2..n+1), y_h (h = 2..n+1), z_h (h = 3..n+1).
struct KGenerators {
    int n = 0;
    std::vector<std::vector<Vertex>> x, y, z;
    /// x's, then y's, then z's.
    std::vector<std::vector<Vertex>> all() const;
};

KGenerators k_generators(int n);

/// Minimal transversals of a hypergraph restricted to `allowed` vertices.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges, const VertexSet& allowed);

/// c-facets of the complex, sorted canonically (lexicographic on sorted vertex lists).
/// `prune` restricts the search to the antidiagonals n+1 <= i+j <= n+4.
std::vector<VertexSet> c_facets(int n, bool prune = true);

bool is_c_face(const VertexSet& c, const std::vector<VertexSet>& gens);

struct CountReport {
    int n = 0;
    std::size_t total = 0;
    std::size_t expected_total = 0;
    std::size_t last_column = 0;
    std::size_t expected_last_column = 0;
    std::size_t rectangle = 0;
    std::size_t previous_total = 0;  // count at n-1 (0 when n = 2)
    bool all_size_four = true;
    bool rectangle_inside = true;
    bool antidiagonal_rules = true;  // one vertex on i+j=n+1, 1-2 on n+2 and n+3, <=1 on n+4
    bool ok = false;
    std::string witness;
};

CountReport verify_counts(int n);

struct SdReport {
    int n = 0;
    std::size_t lower = 0;   // c-facets at n-1
    std::size_t image = 0;   // c-facets at n inside the shifted rectangle
    bool bijection = false;
    bool generators_shift = false;  // both statements about generators
    bool random_faces = false;      // transversal test agrees on sampled subsets
    bool ok = false;
    std::string witness;
};

SdReport sd_bijection_check(int n, std::uint64_t seed = 0, std::size_t samples = 2000);

// ---------------------------------------------------------------- simplicial complexes

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::size_t nverts, std::vector<VertexSet> facets);

    std::size_t nverts() const { return nverts_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    int dimension() const;
    bool is_pure() const;
    bool contains(const VertexSet& face) const;
    /// Faces grouped by dimension (index 0 is the empty face, dimension -1).
    std::vector<std::vector<VertexSet>> faces_by_size() const;
    SimplicialComplex link(const VertexSet& face) const;

private:
    std::size_t nverts_ = 0;
    std::vector<VertexSet> facets_;
};

/// Complex whose faces are the sets A with w_A outside the squarefree ideal
/// generated by `gens`; facets are complements of the minimal transversals.
SimplicialComplex complex_from_squarefree(const std::vector<VertexSet>& gens, std::size_t nverts);
/// The Stanley-Reisner complex of K on the (n+1) x n grid.
SimplicialComplex delta_complex(int n);

enum class CoeffKind { Rational, Prime, Integer };

struct Coefficients {
    CoeffKind kind = CoeffKind::Rational;
    unsigned long p = 0;
    static Coefficients rationals() { return {}; }
    static Coefficients prime(unsigned long p) { return {CoeffKind::Prime, p}; }
    static Coefficients integers() { return {CoeffKind::Integer, 0}; }
    std::string describe() const;
};

struct HomologyReport {
    Coefficients coeffs;
    /// Reduced Betti numbers (free rank) by dimension, -1 .. dim.
    std::map<int, long> betti;
    /// Integer coefficients only: torsion coefficients by dimension.
    std::map<int, std::vector<mpz_class>> torsion;
    std::vector<long> f_vector;  // faces by size 0..dim+1
    /// Reduced Euler characteristic from faces and from Betti numbers.
    long euler_faces = 0;
    long euler_betti = 0;
};

/// Throws std::length_error when the face count exceeds `max_faces`.
HomologyReport reduced_homology(const SimplicialComplex& K, Coefficients coeffs, std::size_t max_faces = 4000000);

struct ReisnerReport {
    bool cohen_macaulay = true;
    std::size_t faces_checked = 0;
    std::string witness;  // a face whose link has homology below the top
};

ReisnerReport reisner_check(const SimplicialComplex& K, Coefficients coeffs);

}  // namespace nh
