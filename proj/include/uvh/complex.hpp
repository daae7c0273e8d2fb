#ifndef UVH_COMPLEX_HPP
#define UVH_COMPLEX_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "uvh/bitvec.hpp"
#include "uvh/errors.hpp"
#include "uvh/space.hpp"

namespace uvh {

// ---------------------------------------------------------------------------
// SimplicialComplex: downward-closed sets of sorted vertex lists, one flat
// array per dimension (stride p+1, lexicographic). Immutable once built.
//
// dim_cap is the construction cap: dimensions <= dim_cap are fully
// enumerated. When simplices exist at the cap dimension, higher-dimensional
// simplices may have been cut off and `complete()` is false.
// ---------------------------------------------------------------------------

class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, int dim_cap)
        : vertex_count_(vertex_count), dim_cap_(dim_cap), simplices_(dim_cap + 1) {
        if (vertex_count < 0 || dim_cap < 0) throw input_error("bad complex shape");
    }

    int vertex_count() const { return vertex_count_; }
    int dim_cap() const { return dim_cap_; }

    int top_dim() const {
        for (int p = dim_cap_; p >= 0; --p)
            if (!simplices_[p].empty()) return p;
        return -1;
    }

    /// All dimensions up to dim_cap are fully enumerated; true when the stored
    /// data provably equals the whole (uncapped) complex.
    bool complete() const { return top_dim() < dim_cap_; }

    std::size_t count(int p) const {
        if (p < 0 || p > dim_cap_) return 0;
        return simplices_[p].size() / (p + 1);
    }

    std::size_t count_all() const {
        std::size_t n = 0;
        for (int p = 0; p <= dim_cap_; ++p) n += count(p);
        return n;
    }

    std::span<const int> simplex(int p, std::size_t i) const {
        return std::span<const int>(simplices_[p].data() + i * (p + 1), p + 1);
    }

    /// Lexicographic index of a sorted vertex list among the p-simplices.
    std::optional<std::size_t> index_of(int p, std::span<const int> verts) const {
        if (p < 0 || p > dim_cap_ || static_cast<int>(verts.size()) != p + 1) return std::nullopt;
        const auto& flat = simplices_[p];
        std::size_t lo = 0, hi = flat.size() / (p + 1);
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            const int* s = flat.data() + mid * (p + 1);
            int cmp = 0;
            for (int k = 0; k <= p; ++k) {
                if (s[k] != verts[k]) {
                    cmp = s[k] < verts[k] ? -1 : 1;
                    break;
                }
            }
            if (cmp == 0) return mid;
            if (cmp < 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return std::nullopt;
    }

    /// Membership of a sorted vertex set of any size. Throws when the query
    /// dimension exceeds the cap on an incomplete complex (the answer would
    /// be unknown, never a silent false).
    bool contains(std::span<const int> verts) const {
        int p = static_cast<int>(verts.size()) - 1;
        if (p < 0) return false;
        if (p > dim_cap_) {
            if (!complete())
                throw input_error("membership query above the complex's construction cap");
            return false;
        }
        return index_of(p, verts).has_value();
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const {
        for (int p = 0; p <= dim_cap_; ++p)
            for (std::size_t i = 0; i < count(p); ++i) {
                auto s = simplex(p, i);
                if (p > other.dim_cap_ || !other.index_of(p, s).has_value()) return false;
            }
        return true;
    }

    bool same_simplices(const SimplicialComplex& other) const {
        int t = std::max(top_dim(), other.top_dim());
        for (int p = 0; p <= t; ++p) {
            if (count(p) != other.count(p)) return false;
            if (p <= dim_cap_ && p <= other.dim_cap_ && simplices_[p] != other.simplices_[p]) return false;
        }
        return true;
    }

    /// Maximal simplices (not a face of any stored simplex), lexicographic
    /// within each dimension, top dimension first omitted - ordered by
    /// dimension ascending then lexicographic.
    std::vector<std::vector<int>> maximal_simplices() const {
        std::vector<std::vector<int>> out;
        for (int p = 0; p <= top_dim(); ++p) {
            std::vector<char> covered(count(p), 0);
            if (p + 1 <= dim_cap_) {
                std::vector<int> face(p + 1);
                for (std::size_t i = 0; i < count(p + 1); ++i) {
                    auto s = simplex(p + 1, i);
                    for (int drop = 0; drop <= p + 1; ++drop) {
                        int k = 0;
                        for (int j = 0; j <= p + 1; ++j)
                            if (j != drop) face[k++] = s[j];
                        auto idx = index_of(p, face);
                        if (idx) covered[*idx] = 1;
                    }
                }
            }
            for (std::size_t i = 0; i < count(p); ++i)
                if (!covered[i]) {
                    auto s = simplex(p, i);
                    out.emplace_back(s.begin(), s.end());
                }
        }
        return out;
    }

    // Internal filling helpers used by the builders below.
    void push_simplex(int p, std::span<const int> verts) {
        simplices_[p].insert(simplices_[p].end(), verts.begin(), verts.end());
    }
    void sort_dimension(int p) {
        const int w = p + 1;
        auto& flat = simplices_[p];
        std::size_t n = flat.size() / w;
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w,
                                                flat.begin() + b * w, flat.begin() + (b + 1) * w);
        });
        std::vector<int> out;
        out.reserve(flat.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && std::equal(flat.begin() + order[i] * w, flat.begin() + (order[i] + 1) * w,
                                    out.end() - w))
                continue; // duplicate
            out.insert(out.end(), flat.begin() + order[i] * w, flat.begin() + (order[i] + 1) * w);
        }
        flat = std::move(out);
    }

private:
    int vertex_count_;
    int dim_cap_;
    std::vector<std::vector<int>> simplices_; // simplices_[p], stride p+1
};

struct SimplicialComplexPair {
    SimplicialComplex total;
    SimplicialComplex sub;

    SimplicialComplexPair(SimplicialComplex t, SimplicialComplex s)
        : total(std::move(t)), sub(std::move(s)) {
        if (sub.vertex_count() != total.vertex_count())
            throw input_error("pair components live on different vertex sets");
        if (!sub.is_subcomplex_of(total)) throw internal_error("sub is not a subcomplex of total");
    }

    static SimplicialComplexPair absolute(SimplicialComplex t) {
        SimplicialComplex empty(t.vertex_count(), t.dim_cap());
        return SimplicialComplexPair(std::move(t), std::move(empty));
    }
};

// ---------------------------------------------------------------------------
// Vietoris complexes. A candidate vertex set is a simplex exactly when one
// witness is related to all of its vertices, so sets are grown by
// intersecting per-vertex witness sets; edges alone do not decide
// membership.
// ---------------------------------------------------------------------------

namespace detail {

inline SimplicialComplex vietoris_from_witness_sets(int vertex_count, const std::vector<int>& points,
                                                    const std::vector<BitVec>& witness_sets,
                                                    int max_dim) {
    if (max_dim < 0) throw input_error("max_dim must be non-negative");
    SimplicialComplex cx(vertex_count, max_dim);
    const int n = static_cast<int>(points.size());
    std::vector<int> verts;
    verts.reserve(max_dim + 1);

    // depth-first growth in ascending vertex order; emission order is
    // lexicographic per dimension, so no post-sort is needed
    std::vector<BitVec> stack;
    auto extend = [&](auto&& self, int start, const BitVec& wit) -> void {
        for (int i = start; i < n; ++i) {
            BitVec w = wit;
            w.and_with(witness_sets[i]);
            if (!w.any()) continue;
            verts.push_back(points[i]);
            cx.push_simplex(static_cast<int>(verts.size()) - 1, verts);
            if (static_cast<int>(verts.size()) <= max_dim) self(self, i + 1, w);
            verts.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        if (!witness_sets[i].any()) continue;
        verts.assign(1, points[i]);
        cx.push_simplex(0, verts);
        if (max_dim >= 1) extend(extend, i + 1, witness_sets[i]);
    }
    return cx;
}

} // namespace detail

/// V(points, witnesses, related): a set {a_0..a_p} with p <= max_dim is a
/// simplex iff some witness b has related(a_i, b) for all i. `points` are
/// global vertex ids (strictly increasing); `related(point, w)` takes the
/// witness index 0 <= w < witness_count.
inline SimplicialComplex vietoris_complex(int vertex_count, std::vector<int> points,
                                          std::size_t witness_count,
                                          const std::function<bool(int, std::size_t)>& related,
                                          int max_dim) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0 || points[i] >= vertex_count) throw input_error("point id out of range");
        if (i > 0 && points[i] <= points[i - 1]) throw input_error("points must be strictly increasing");
    }
    std::vector<BitVec> ws(points.size(), BitVec(static_cast<int>(witness_count)));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t b = 0; b < witness_count; ++b)
            if (related(points[i], b)) ws[i].set(static_cast<int>(b));
    return detail::vietoris_from_witness_sets(vertex_count, points, ws, max_dim);
}

/// V(points, witnesses, U) for an entourage U: witnesses are the given point
/// ids of the same carrier.
inline SimplicialComplex vietoris_entourage_complex(const Entourage& U, std::vector<int> points,
                                                    const std::vector<int>& witnesses, int max_dim) {
    const int n = U.carrier_size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0 || points[i] >= n) throw input_error("point id out of range");
        if (i > 0 && points[i] <= points[i - 1]) throw input_error("points must be strictly increasing");
    }
    std::vector<BitVec> ws(points.size(), BitVec(static_cast<int>(witnesses.size())));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const BitVec& row = U.row(points[i]);
        for (std::size_t b = 0; b < witnesses.size(); ++b)
            if (row.get(witnesses[b])) ws[i].set(static_cast<int>(b));
    }
    return detail::vietoris_from_witness_sets(n, points, ws, max_dim);
}

inline std::vector<int> all_points(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// X_U = V(X, X, U).
inline SimplicialComplex vietoris_complex(const Entourage& U, int max_dim) {
    auto pts = all_points(U.carrier_size());
    return vietoris_entourage_complex(U, pts, pts, max_dim);
}

/// The pair (X_U, A_U) with A_U = V(A, X, U n (A x X)): witnesses for the
/// subcomplex stay ambient.
inline SimplicialComplexPair vietoris_pair(const Entourage& U, const std::vector<int>& A, int max_dim) {
    const int n = U.carrier_size();
    std::vector<int> a = A;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (int v : a)
        if (v < 0 || v >= n) throw input_error("subset is not a subset of the carrier");
    auto pts = all_points(n);
    SimplicialComplex total = vietoris_entourage_complex(U, pts, pts, max_dim);
    SimplicialComplex sub = vietoris_entourage_complex(U, a, pts, max_dim);
    return SimplicialComplexPair(std::move(total), std::move(sub));
}

/// Relative pair of a subspace decomposition: total = V(S, S, U|S),
/// sub = V(T, S, U n (T x S)) for T subseteq S. Used by the excision
/// verifier for the pair (A, A n B) viewed inside the ambient carrier.
inline SimplicialComplexPair vietoris_pair_relative(const Entourage& U, const std::vector<int>& S,
                                                    const std::vector<int>& T, int max_dim) {
    std::vector<int> s = S, t = T;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (!std::includes(s.begin(), s.end(), t.begin(), t.end()))
        throw input_error("T must be a subset of S");
    SimplicialComplex total = vietoris_entourage_complex(U, s, s, max_dim);
    SimplicialComplex sub = vietoris_entourage_complex(U, t, s, max_dim);
    return SimplicialComplexPair(std::move(total), std::move(sub));
}

/// X_cov = V(X, cov, membership).
inline SimplicialComplex cover_vietoris_complex(int vertex_count, const Cover& cov, int max_dim) {
    if (cov.carrier_size() != vertex_count) throw input_error("cover carrier mismatch");
    auto pts = all_points(vertex_count);
    std::vector<BitVec> ws(pts.size(), BitVec(static_cast<int>(cov.members().size())));
    for (std::size_t b = 0; b < cov.members().size(); ++b)
        for (int v : cov.members()[b]) ws[v].set(static_cast<int>(b));
    return detail::vietoris_from_witness_sets(vertex_count, pts, ws, max_dim);
}

/// Downward closure of explicit maximal simplices. The result is complete
/// (nothing truncated), so any degree may be queried.
inline SimplicialComplex load_complex(const std::vector<std::vector<int>>& maximal, int vertex_count) {
    int dim = 0;
    for (const auto& s : maximal) dim = std::max(dim, static_cast<int>(s.size()) - 1);
    SimplicialComplex cx(vertex_count, dim + 1); // one above top keeps complete() true
    std::vector<std::vector<std::vector<int>>> per_dim(dim + 1);
    for (const auto& s : maximal) {
        std::vector<int> v = s;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (v.empty()) throw input_error("empty simplex");
        for (int x : v)
            if (x < 0 || x >= vertex_count) throw input_error("vertex index out of range");
        // enumerate all non-empty subsets
        int k = static_cast<int>(v.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(v[b]);
            per_dim[face.size() - 1].push_back(std::move(face));
        }
    }
    for (int p = 0; p <= dim; ++p) {
        for (const auto& f : per_dim[p]) cx.push_simplex(p, f);
        cx.sort_dimension(p);
    }
    return cx;
}

} // namespace uvh

#endif
