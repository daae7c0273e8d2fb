// Shared test helpers: independent brute-force oracles and small generators.
// Everything here is deliberately naive and kept free of the library's
// reduction machinery so it can serve as a second route.
#ifndef UVH_TESTS_SUPPORT_HPP
#define UVH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "uvh/linalg.hpp"

namespace oracle {

// Dense rank over Z/p by plain Gaussian elimination.
inline int gfp_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    auto canon = [&](std::int64_t v) { return ((v % p) + p) % p; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t srow = r;
        while (srow < rows && canon(m[srow][c]) == 0) ++srow;
        if (srow == rows) continue;
        std::swap(m[r], m[srow]);
        // scale pivot row to 1
        std::int64_t piv = canon(m[r][c]);
        std::int64_t inv = 1;
        for (std::int64_t x = 1; x < p; ++x)
            if (canon(piv * x) == 1) { inv = x; break; }
        for (auto& v : m[r]) v = canon(v * inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = canon(m[i][c]);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = canon(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return static_cast<int>(r);
}

// k-minor gcd route to invariant factors: d_1*...*d_k = gcd of all k x k
// minors. Exponential; fine for the small matrices used in tests.
inline uvh::BigInt det_int(const std::vector<std::vector<uvh::BigInt>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    uvh::BigInt acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<uvh::BigInt>> sub(n - 1, std::vector<uvh::BigInt>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[i - 1][cc++] = m[i][c];
            }
        }
        uvh::BigInt term = m[0][j] * det_int(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// gcd of all k x k minors of A (0 when all vanish)
inline uvh::BigInt minor_gcd(const uvh::ZMat& A, int k) {
    std::vector<int> rsel(k), csel(k);
    std::vector<int> rows(A.rows), cols(A.cols);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    uvh::BigInt g = 0;

    std::vector<int> rc(k), cc(k);
    // enumerate k-subsets of rows and cols
    std::vector<std::vector<int>> rsets, csets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int n, int start, std::vector<std::vector<int>>& out) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, n, i + 1, out);
            cur.pop_back();
        }
    };
    gen(gen, static_cast<int>(A.rows), 0, rsets);
    cur.clear();
    gen(gen, static_cast<int>(A.cols), 0, csets);

    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            std::vector<std::vector<uvh::BigInt>> sub(k, std::vector<uvh::BigInt>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = A.at(rs[i], cs[j]);
            uvh::BigInt d = det_int(sub);
            if (d != 0) g = gcd(g, abs(d));
        }
    return g;
}

// invariant factors via minor gcds (independent of the SNF implementation)
inline std::vector<uvh::BigInt> invariant_factors_by_minors(const uvh::ZMat& A) {
    std::vector<uvh::BigInt> out;
    uvh::BigInt prev = 1;
    int kmax = static_cast<int>(std::min(A.rows, A.cols));
    for (int k = 1; k <= kmax; ++k) {
        uvh::BigInt g = minor_gcd(A, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Brute-force Vietoris membership: subset enumeration, no witness-set
// machinery shared with the library.
inline std::vector<std::vector<std::vector<int>>> brute_vietoris(
    const std::vector<int>& points, std::size_t witness_count,
    const std::function<bool(int, std::size_t)>& related, int max_dim) {
    std::vector<std::vector<std::vector<int>>> by_dim(max_dim + 1);
    int n = static_cast<int>(points.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) verts.push_back(points[i]);
        int p = static_cast<int>(verts.size()) - 1;
        if (p > max_dim) continue;
        bool witnessed = false;
        for (std::size_t b = 0; b < witness_count && !witnessed; ++b) {
            bool all = true;
            for (int v : verts)
                if (!related(v, b)) {
                    all = false;
                    break;
                }
            witnessed = all;
        }
        if (witnessed) by_dim[p].push_back(verts);
    }
    for (auto& v : by_dim) std::sort(v.begin(), v.end());
    return by_dim;
}

// The 6-vertex triangulation of the projective plane: complete 1-skeleton,
// ten triangles, every edge in exactly two of them.
inline std::vector<std::vector<int>> projective_plane_faces() {
    return {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
}

} // namespace oracle

#endif
