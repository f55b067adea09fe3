#include "nh/srcomplex.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace nh {

VertexGrid::VertexGrid(int n) : n_(n)
{
    if (n < 1 || static_cast<std::size_t>((n + 1) * n) > kMaxVertices)
        throw std::invalid_argument("vertex grid size out of range");
}

VertexSet VertexGrid::make(const std::vector<Vertex>& vs) const
{
    VertexSet s;
    for (auto& v : vs) {
        if (v.i < 1 || v.i > n_ + 1 || v.j < 1 || v.j > n_)
            throw std::out_of_range("vertex outside the grid");
        s.set(index(v.i, v.j));
    }
    return s;
}

std::vector<Vertex> VertexGrid::vertices(const VertexSet& s) const
{
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < size(); ++k)
        if (s.test(k))
            out.push_back(vertex(k));
    return out;
}

bool vertex_set_less(const VertexSet& a, const VertexSet& b)
{
    // Lexicographic on ascending index lists.
    for (std::size_t k = 0; k < kMaxVertices; ++k) {
        bool x = a.test(k), y = b.test(k);
        if (x != y)
            return x;  // the set containing the smaller first differing index comes first
    }
    return false;
}

std::vector<std::vector<Vertex>> KGenerators::all() const
{
    std::vector<std::vector<Vertex>> out = x;
    out.insert(out.end(), y.begin(), y.end());
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

KGenerators k_generators(int n)
{
    if (n < 2)
        throw std::invalid_argument("k_generators needs n >= 2");
    KGenerators k;
    k.n = n;
    for (int h = 2; h <= n + 1; ++h) {
        std::vector<Vertex> g;
        for (int i = 2; i <= h - 1; ++i)
            g.push_back({i, n + 2 - i});
        for (int i = h + 1; i <= n + 1; ++i)
            g.push_back({i, n + 3 - i});
        k.x.push_back(g);
    }
    for (int h = 2; h <= n + 1; ++h) {
        std::vector<Vertex> g;
        for (int i = 1; i <= h - 1; ++i)
            g.push_back({i, n + 1 - i});
        for (int i = h + 1; i <= n + 1; ++i)
            g.push_back({i, n + 2 - i});
        k.y.push_back(g);
    }
    for (int h = 3; h <= n + 1; ++h) {
        std::vector<Vertex> g;
        for (int i = 3; i <= h - 1; ++i)
            g.push_back({i, n + 3 - i});
        for (int i = h; i <= n + 1; ++i)
            g.push_back({i, n + 2 - i});
        for (int i = h + 1; i <= n + 1; ++i)
            g.push_back({i, n + 4 - i});
        std::sort(g.begin(), g.end());
        k.z.push_back(g);
    }
    return k;
}

namespace {

struct TransversalSearch {
    const std::vector<VertexSet>& edges;
    std::vector<VertexSet> found;

    bool has_private_edges(const VertexSet& s) const
    {
        for (std::size_t v = 0; v < kMaxVertices; ++v) {
            if (!s.test(v))
                continue;
            bool priv = false;
            for (auto& e : edges)
                if (e.test(v) && (e & s).count() == 1) {
                    priv = true;
                    break;
                }
            if (!priv)
                return false;
        }
        return true;
    }

    void run(VertexSet s, VertexSet excluded)
    {
        if (!has_private_edges(s))
            return;
        const VertexSet* open = nullptr;
        for (auto& e : edges)
            if ((e & s).none()) {
                open = &e;
                break;
            }
        if (!open) {
            found.push_back(s);
            return;
        }
        VertexSet cand = *open & ~excluded;
        for (std::size_t v = 0; v < kMaxVertices; ++v) {
            if (!cand.test(v))
                continue;
            VertexSet t = s;
            t.set(v);
            run(t, excluded);
            excluded.set(v);
        }
    }
};

}  // namespace

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges, const VertexSet& allowed)
{
    std::vector<VertexSet> restricted;
    for (auto& e : edges) {
        VertexSet r = e & allowed;
        if (r.none())
            return {};  // an edge cannot be hit
        restricted.push_back(r);
    }
    TransversalSearch ts{restricted, {}};
    ts.run(VertexSet(), ~allowed);
    std::sort(ts.found.begin(), ts.found.end(), vertex_set_less);
    ts.found.erase(std::unique(ts.found.begin(), ts.found.end()), ts.found.end());
    return ts.found;
}

static std::vector<VertexSet> generator_sets(int n)
{
    VertexGrid grid(n);
    std::vector<VertexSet> out;
    for (auto& g : k_generators(n).all())
        out.push_back(grid.make(g));
    return out;
}

std::vector<VertexSet> c_facets(int n, bool prune)
{
    VertexGrid grid(n);
    VertexSet allowed;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        Vertex v = grid.vertex(k);
        int p = v.i + v.j;
        if (!prune || (p >= n + 1 && p <= n + 4))
            allowed.set(k);
    }
    return minimal_transversals(generator_sets(n), allowed);
}

bool is_c_face(const VertexSet& c, const std::vector<VertexSet>& gens)
{
    for (auto& g : gens)
        if ((g & c).none())
            return false;
    return true;
}

CountReport verify_counts(int n)
{
    CountReport r;
    r.n = n;
    VertexGrid grid(n);
    auto cf = c_facets(n);
    r.total = cf.size();
    r.expected_total = static_cast<std::size_t>((n - 1) * n * (n + 1) * (3 * n - 2) / 12);
    r.expected_last_column = static_cast<std::size_t>((n - 1) * (n - 1) * n);
    for (auto& c : cf) {
        auto vs = grid.vertices(c);
        if (vs.size() != 4 && r.all_size_four) {
            r.all_size_four = false;
            r.witness = "c-facet of size " + std::to_string(vs.size());
        }
        bool last = false, rect = true;
        int per[4] = {0, 0, 0, 0};
        for (auto& v : vs) {
            if (v.j == n)
                last = true;
            if (v.i < 2 || v.j > n - 1)
                rect = false;
            int p = v.i + v.j - (n + 1);
            if (p < 0 || p > 3)
                r.antidiagonal_rules = false;
            else
                ++per[p];
        }
        if (per[0] != 1 || per[1] < 1 || per[1] > 2 || per[2] < 1 || per[2] > 2 || per[3] > 1)
            r.antidiagonal_rules = false;
        if (last)
            ++r.last_column;
        else if (rect)
            ++r.rectangle;
        else
            r.rectangle_inside = false;
    }
    r.previous_total = n > 2 ? c_facets(n - 1).size() : 0;
    bool recursion = n == 2 || r.rectangle == r.previous_total;
    r.ok = r.all_size_four && r.total == r.expected_total && r.last_column == r.expected_last_column &&
           r.rectangle_inside && r.antidiagonal_rules && recursion;
    if (!r.ok && r.witness.empty())
        r.witness = "total " + std::to_string(r.total) + ", last column " + std::to_string(r.last_column) +
                    ", rectangle " + std::to_string(r.rectangle);
    return r;
}

SdReport sd_bijection_check(int n, std::uint64_t seed, std::size_t samples)
{
    if (n < 3)
        throw std::invalid_argument("sd_bijection_check needs n >= 3");
    SdReport r;
    r.n = n;
    VertexGrid lo(n - 1), hi(n);
    auto shift = [&](const VertexSet& s) {
        VertexSet t;
        for (auto& v : lo.vertices(s))
            t.set(hi.index(v.i + 1, v.j));
        return t;
    };
    VertexSet rect;
    for (int i = 2; i <= n + 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            rect.set(hi.index(i, j));

    auto lower = c_facets(n - 1);
    std::vector<VertexSet> image;
    for (auto& c : c_facets(n))
        if ((c & ~rect).none())
            image.push_back(c);
    std::vector<VertexSet> shifted;
    for (auto& c : lower)
        shifted.push_back(shift(c));
    std::sort(shifted.begin(), shifted.end(), vertex_set_less);
    r.lower = lower.size();
    r.image = image.size();
    r.bijection = shifted == image;
    if (!r.bijection)
        r.witness = "shifted c-facets differ from the rectangle c-facets";

    auto g_lo = generator_sets(n - 1);
    auto g_hi = generator_sets(n);
    bool first = true, second = true;
    for (auto& u : g_hi) {
        bool any = false;
        for (auto& v : g_lo)
            if ((shift(v) & ~u).none())
                any = true;
        first = first && any;
    }
    for (auto& v : g_lo) {
        VertexSet sv = shift(v);
        bool any = false;
        for (auto& u : g_hi) {
            if ((sv & ~u).any())
                continue;
            VertexSet extra = u & ~sv;
            if (extra.count() == 1) {
                auto ex = hi.vertices(extra);
                if (ex[0].j == n)
                    any = true;
            }
        }
        second = second && any;
    }
    r.generators_shift = first && second;
    if (!r.generators_shift && r.witness.empty())
        r.witness = first ? "second shifting statement fails" : "first shifting statement fails";

    std::mt19937_64 rng(seed);
    r.random_faces = true;
    for (std::size_t s = 0; s < samples; ++s) {
        VertexSet sub_lo;
        for (std::size_t k = 0; k < lo.size(); ++k)
            if (rng() % 3 == 0)
                sub_lo.set(k);
        bool a = is_c_face(sub_lo, g_lo);
        bool b = is_c_face(shift(sub_lo), g_hi);
        if (a != b) {
            r.random_faces = false;
            if (r.witness.empty())
                r.witness = "c-face test disagrees on a shifted subset";
            break;
        }
    }
    r.ok = r.bijection && r.generators_shift && r.random_faces;
    return r;
}

// ---------------------------------------------------------------- complexes

SimplicialComplex::SimplicialComplex(std::size_t nverts, std::vector<VertexSet> facets) : nverts_(nverts)
{
    // Keep only maximal sets.
    std::sort(facets.begin(), facets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
    for (auto& f : facets) {
        bool contained = false;
        for (auto& g : facets_)
            if ((f & ~g).none()) {
                contained = true;
                break;
            }
        if (!contained)
            facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), vertex_set_less);
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (auto& f : facets_)
        d = std::max(d, static_cast<int>(f.count()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const
{
    for (auto& f : facets_)
        if (static_cast<int>(f.count()) - 1 != dimension())
            return false;
    return true;
}

bool SimplicialComplex::contains(const VertexSet& face) const
{
    for (auto& f : facets_)
        if ((face & ~f).none())
            return true;
    return false;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const
{
    std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(dimension() + 2));
    if (facets_.empty())
        return out;
    std::vector<std::size_t> all(facets_.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::function<void(VertexSet&, std::size_t, std::size_t, const std::vector<std::size_t>&)> rec =
        [&](VertexSet& cur, std::size_t size, std::size_t start, const std::vector<std::size_t>& live) {
            out[size].push_back(cur);
            for (std::size_t v = start; v < nverts_; ++v) {
                std::vector<std::size_t> next;
                for (auto f : live)
                    if (facets_[f].test(v))
                        next.push_back(f);
                if (next.empty())
                    continue;
                cur.set(v);
                rec(cur, size + 1, v + 1, next);
                cur.reset(v);
            }
        };
    VertexSet empty;
    rec(empty, 0, 0, all);
    return out;
}

SimplicialComplex SimplicialComplex::link(const VertexSet& face) const
{
    std::vector<VertexSet> lf;
    for (auto& f : facets_)
        if ((face & ~f).none())
            lf.push_back(f & ~face);
    return SimplicialComplex(nverts_, std::move(lf));
}

SimplicialComplex complex_from_squarefree(const std::vector<VertexSet>& gens, std::size_t nverts)
{
    VertexSet allowed;
    for (std::size_t k = 0; k < nverts; ++k)
        allowed.set(k);
    std::vector<VertexSet> facets;
    for (auto& c : minimal_transversals(gens, allowed))
        facets.push_back(allowed & ~c);
    return SimplicialComplex(nverts, std::move(facets));
}

SimplicialComplex delta_complex(int n)
{
    return complex_from_squarefree(generator_sets(n), VertexGrid(n).size());
}

}  // namespace nh
