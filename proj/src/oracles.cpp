#include "nh/nestcore.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace nh {

namespace {

// Elements c0 + c1 y of k[y]/(y^2).
struct Dual {
    Coeff c0 = 0, c1 = 0;
};

Dual dual_mul(const Dual& a, const Dual& b, const Field& F)
{
    return {F.mul(a.c0, b.c0), F.add(F.mul(a.c0, b.c1), F.mul(a.c1, b.c0))};
}

std::string describe(const Matrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", " : "") << '[';
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Coeff random_element(std::mt19937_64& rng, unsigned long p)
{
    std::uniform_int_distribution<unsigned long> d(0, p - 1);
    return Coeff(d(rng));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& F)
{
    Matrix m(r, c, F);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = random_element(rng, F.characteristic());
    return m;
}

std::pair<Matrix, Matrix> random_invertible(std::mt19937_64& rng, std::size_t n, const Field& F)
{
    for (;;) {
        Matrix S = random_matrix(rng, n, n, F);
        if (auto inv = inverse(S))
            return {S, *inv};
    }
}

// A point on the variety: in a basis (u1, u2, ...) we take A u1 = 0, A u2 = c u1, a u1 = a u2 = 0,
// then change basis randomly.
std::pair<Matrix, Matrix> planted(std::mt19937_64& rng, std::size_t n, const Field& F)
{
    Matrix A0 = random_matrix(rng, n, n, F);
    Matrix a0 = random_matrix(rng, 1, n, F);
    for (std::size_t i = 0; i < n; ++i) {
        A0(i, 0) = 0;
        A0(i, 1) = 0;
    }
    A0(0, 1) = random_element(rng, F.characteristic());
    a0(0, 0) = 0;
    a0(0, 1) = 0;
    auto [S, Sinv] = random_invertible(rng, n, F);
    return {S * A0 * Sinv, a0 * Sinv};
}

void record(OracleReport& rep, const Matrix& A, const Matrix& a, std::mutex* mu)
{
    bool f = fiber_membership(stack_rows(A, a));
    bool r = rank_conditions(A, a);
    std::unique_lock<std::mutex> lock;
    if (mu)
        lock = std::unique_lock<std::mutex>(*mu);
    ++rep.samples;
    if (r)
        ++rep.members;
    if (f != r) {
        ++rep.mismatches;
        if (rep.witness.empty())
            rep.witness = "A=" + describe(A) + " a=" + describe(a) + " fiber=" + (f ? "1" : "0") +
                          " rank=" + (r ? "1" : "0");
    }
}

}  // namespace

Matrix stack_rows(const Matrix& A, const Matrix& a) { return A.stack(a); }

bool fiber_membership(const Matrix& B)
{
    const std::size_t n = B.cols();
    if (B.rows() != n + 1)
        throw std::invalid_argument("fiber_membership: expected an (n+1) x n matrix");
    if (n > 30)
        throw std::invalid_argument("fiber_membership: n too large");
    const Field& F = B.field();
    for (std::size_t del = 0; del <= n; ++del) {
        // Row expansion over column subsets with entries of Y + B in k[y]/(y^2).
        std::unordered_map<std::uint32_t, Dual> dp{{0u, Dual{1, 0}}};
        for (std::size_t r = 0; r <= n; ++r) {
            if (r == del)
                continue;
            std::unordered_map<std::uint32_t, Dual> next;
            for (const auto& [mask, val] : dp) {
                int above = 0;
                for (std::size_t c = n; c-- > 0;) {
                    std::uint32_t bit = 1u << c;
                    if (mask & bit) {
                        ++above;
                        continue;
                    }
                    Dual e{B(r, c), r == c ? Coeff(1) : Coeff(0)};
                    if (e.c0 == 0 && e.c1 == 0)
                        continue;
                    Dual t = dual_mul(val, e, F);
                    if (above % 2) {
                        t.c0 = F.neg(t.c0);
                        t.c1 = F.neg(t.c1);
                    }
                    Dual& slot = next[mask | bit];
                    slot.c0 = F.add(slot.c0, t.c0);
                    slot.c1 = F.add(slot.c1, t.c1);
                }
            }
            dp = std::move(next);
        }
        auto it = dp.find((1u << n) - 1u);
        if (it != dp.end() && (it->second.c0 != 0 || it->second.c1 != 0))
            return false;
    }
    return true;
}

bool rank_conditions(const Matrix& A, const Matrix& a)
{
    const std::size_t n = A.cols();
    if (A.rows() != n || a.rows() != 1 || a.cols() != n)
        throw std::invalid_argument("rank_conditions: expected n x n and 1 x n matrices");
    Matrix M1 = A.stack(a);
    if (n - rank(M1) < 1)
        return false;
    Matrix A2 = A * A;
    Matrix M2 = A2.stack(a * A).stack(a);
    return n - rank(M2) >= 2;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++)
                body(k);
        });
    for (auto& th : pool)
        th.join();
}

OracleReport oracle_random(int n, unsigned long p, std::size_t samples, std::uint64_t seed, unsigned threads)
{
    OracleReport rep;
    rep.n = n;
    rep.p = p;
    Field F = Field::prime(p);
    const auto N = static_cast<std::size_t>(n);
    std::mutex mu;
    parallel_for(samples, threads, [&](std::size_t k) {
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
        std::mt19937_64 rng(sq);
        Matrix A, a;
        switch (k % 3) {
        case 0:
            A = random_matrix(rng, N, N, F);
            a = random_matrix(rng, 1, N, F);
            break;
        case 1:
            std::tie(A, a) = planted(rng, N, F);
            break;
        default: {
            std::tie(A, a) = planted(rng, N, F);
            std::uniform_int_distribution<std::size_t> pos(0, N * N + N - 1);
            std::size_t e = pos(rng);
            if (e < N * N)
                A(e / N, e % N) = F.add(A(e / N, e % N), random_element(rng, p));
            else
                a(0, e - N * N) = F.add(a(0, e - N * N), random_element(rng, p));
            break;
        }
        }
        record(rep, A, a, &mu);
    });
    return rep;
}

std::vector<std::vector<int>> partitions(int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

Matrix jordan_matrix(const std::vector<int>& zero_blocks, const std::vector<int>& lambda_blocks,
                     const Coeff& lambda, Field field)
{
    int n = 0;
    for (int b : zero_blocks)
        n += b;
    for (int b : lambda_blocks)
        n += b;
    Matrix J(static_cast<std::size_t>(n), static_cast<std::size_t>(n), field);
    std::size_t pos = 0;
    auto place = [&](int size, const Coeff& ev) {
        for (int i = 0; i < size; ++i) {
            J.set(pos + static_cast<std::size_t>(i), pos + static_cast<std::size_t>(i), ev);
            if (i + 1 < size)
                J(pos + static_cast<std::size_t>(i), pos + static_cast<std::size_t>(i + 1)) = 1;
        }
        pos += static_cast<std::size_t>(size);
    };
    for (int b : zero_blocks)
        place(b, 0);
    for (int b : lambda_blocks)
        place(b, lambda);
    return J;
}

OracleReport oracle_jordan_f2(int n)
{
    OracleReport rep;
    rep.n = n;
    rep.p = 2;
    Field F = Field::prime(2);
    const auto N = static_cast<std::size_t>(n);
    for (int k = 0; k <= n; ++k)
        for (const auto& zp : partitions(k))
            for (const auto& lp : partitions(n - k)) {
                Matrix A = jordan_matrix(zp, lp, 1, F);
                for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                    Matrix a(1, N, F);
                    for (std::size_t j = 0; j < N; ++j)
                        a(0, j) = (bits >> j) & 1u;
                    record(rep, A, a, nullptr);
                }
            }
    return rep;
}

OracleReport oracle_jordan_random(int n, unsigned long p, std::size_t per_type, std::uint64_t seed)
{
    OracleReport rep;
    rep.n = n;
    rep.p = p;
    Field F = Field::prime(p);
    const auto N = static_cast<std::size_t>(n);
    std::mt19937_64 rng(seed);
    for (int k = 0; k <= n; ++k)
        for (const auto& zp : partitions(k))
            for (const auto& lp : partitions(n - k))
                for (std::size_t s = 0; s < per_type; ++s) {
                    Coeff lambda = 1 + random_element(rng, p - 1);
                    Matrix A = jordan_matrix(zp, lp, lambda, F);
                    Matrix a(1, N, F);
                    // a = 0, a supported on a random set, or a dense random row
                    switch (s % 3) {
                    case 0: break;
                    case 1:
                        for (std::size_t j = 0; j < N; ++j)
                            if (rng() & 1u)
                                a(0, j) = random_element(rng, p);
                        break;
                    default: a = random_matrix(rng, 1, N, F); break;
                    }
                    if (s % 2) {
                        auto [S, Sinv] = random_invertible(rng, N, F);
                        A = S * A * Sinv;
                        a = a * Sinv;
                    }
                    record(rep, A, a, nullptr);
                }
    return rep;
}

}  // namespace nh
