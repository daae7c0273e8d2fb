#ifndef UVH_SPACE_HPP
#define UVH_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "uvh/bitvec.hpp"
#include "uvh/errors.hpp"

namespace uvh {

// ---------------------------------------------------------------------------
// MetricCloud: a finite point set with a distance function. Points are the
// indices 0..n-1; geometry is either a coordinate list or an explicit
// symmetric distance matrix. Immutable after construction.
// ---------------------------------------------------------------------------

class MetricCloud {
public:
    static MetricCloud from_coords(std::vector<std::vector<double>> coords) {
        MetricCloud c;
        c.n_ = static_cast<int>(coords.size());
        if (c.n_ == 0) throw input_error("point cloud is empty");
        std::size_t arity = coords[0].size();
        for (const auto& p : coords) {
            if (p.size() != arity) throw input_error("point cloud rows have mixed arity");
            for (double v : p)
                if (!std::isfinite(v)) throw input_error("non-finite coordinate");
        }
        c.dist_.assign(static_cast<std::size_t>(c.n_) * c.n_, 0.0);
        for (int i = 0; i < c.n_; ++i)
            for (int j = i + 1; j < c.n_; ++j) {
                double s = 0;
                for (std::size_t k = 0; k < arity; ++k) {
                    double d = coords[i][k] - coords[j][k];
                    s += d * d;
                }
                double d = std::sqrt(s);
                c.dist_[static_cast<std::size_t>(i) * c.n_ + j] = d;
                c.dist_[static_cast<std::size_t>(j) * c.n_ + i] = d;
            }
        c.coords_ = std::move(coords);
        return c;
    }

    static MetricCloud from_distances(std::vector<std::vector<double>> m) {
        MetricCloud c;
        c.n_ = static_cast<int>(m.size());
        if (c.n_ == 0) throw input_error("distance matrix is empty");
        c.dist_.assign(static_cast<std::size_t>(c.n_) * c.n_, 0.0);
        for (int i = 0; i < c.n_; ++i) {
            if (static_cast<int>(m[i].size()) != c.n_)
                throw input_error("distance matrix is not square");
            for (int j = 0; j < c.n_; ++j) {
                double v = m[i][j];
                if (!std::isfinite(v) || v < 0) throw input_error("distances must be finite and non-negative");
                if (i == j && v != 0) throw input_error("distance matrix diagonal must be zero");
                if (m[j][i] != v) throw input_error("distance matrix is not symmetric");
                c.dist_[static_cast<std::size_t>(i) * c.n_ + j] = v;
            }
        }
        return c;
    }

    int size() const { return n_; }
    double distance(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::optional<std::vector<std::vector<double>>>& coords() const { return coords_; }

    double diameter() const {
        double d = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) d = std::max(d, distance(i, j));
        return d;
    }

    /// Smallest nonzero pairwise distance; 0 for a single point.
    double min_positive_distance() const {
        double d = 0;
        bool seen = false;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                double v = distance(i, j);
                if (v > 0 && (!seen || v < d)) {
                    d = v;
                    seen = true;
                }
            }
        return seen ? d : 0.0;
    }

    /// Subcloud on the given (sorted, distinct) point indices.
    MetricCloud restrict_to(const std::vector<int>& pts) const {
        std::vector<std::vector<double>> m(pts.size(), std::vector<double>(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i] < 0 || pts[i] >= n_) throw input_error("subset index out of range");
            for (std::size_t j = 0; j < pts.size(); ++j) m[i][j] = distance(pts[i], pts[j]);
        }
        return from_distances(std::move(m));
    }

private:
    MetricCloud() = default;
    int n_ = 0;
    std::optional<std::vector<std::vector<double>>> coords_;
    std::vector<double> dist_;
};

// ---------------------------------------------------------------------------
// Entourage: a reflexive symmetric relation on 0..n-1, stored densely.
// ---------------------------------------------------------------------------

class Entourage {
public:
    Entourage(int n, std::vector<BitVec> rows) : n_(n), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != n_) throw input_error("entourage row count mismatch");
        for (int i = 0; i < n_; ++i) {
            if (rows_[i].size() != n_) throw input_error("entourage row width mismatch");
            if (!rows_[i].get(i)) throw input_error("entourage must be reflexive");
        }
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (rows_[i].get(j) != rows_[j].get(i))
                    throw input_error("entourage must be symmetric");
    }

    static Entourage identity(int n) {
        std::vector<BitVec> rows(n, BitVec(n));
        for (int i = 0; i < n; ++i) rows[i].set(i);
        return Entourage(n, std::move(rows));
    }

    static Entourage complete(int n) {
        std::vector<BitVec> rows(n, BitVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows[i].set(j);
        return Entourage(n, std::move(rows));
    }

    /// Symmetrized relation from unordered pairs; diagonal implicit.
    /// Sets *symmetrized when the input listed some pair in one order only.
    static Entourage from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                                bool* symmetrized = nullptr) {
        std::vector<BitVec> rows(n, BitVec(n));
        for (int i = 0; i < n; ++i) rows[i].set(i);
        bool warn = false;
        for (auto [a, b] : pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n) throw input_error("relation pair out of range");
            rows[a].set(b);
            rows[b].set(a);
        }
        // detect one-sided listings
        std::vector<BitVec> listed(n, BitVec(n));
        for (auto [a, b] : pairs) listed[a].set(b);
        for (auto [a, b] : pairs)
            if (a != b && !listed[b].get(a)) warn = true;
        if (symmetrized) *symmetrized = warn;
        return Entourage(n, std::move(rows));
    }

    int carrier_size() const { return n_; }
    bool related(int x, int y) const { return rows_[x].get(y); }
    const BitVec& row(int x) const { return rows_[x]; }

    bool subset_of(const Entourage& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (!rows_[i].subset_of(o.rows_[i])) return false;
        return true;
    }

    /// Is the relational self-composition U o U contained in V?
    bool square_subset_of(const Entourage& v) const {
        if (n_ != v.n_) return false;
        for (int x = 0; x < n_; ++x) {
            BitVec sq(n_);
            rows_[x].for_each([&](int y) { sq.or_with(rows_[y]); });
            if (!sq.subset_of(v.rows_[x])) return false;
        }
        return true;
    }

    bool operator==(const Entourage& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_;
    std::vector<BitVec> rows_;
};

/// Basic entourage of a metric uniformity: (x,y) related iff d(x,y) <= eps.
/// Ties at eps are included (closed entourages).
inline Entourage entourage_from_metric(const MetricCloud& cloud, double eps) {
    if (!(eps > 0) || !std::isfinite(eps)) throw input_error("entourage scale must be a finite positive real");
    int n = cloud.size();
    std::vector<BitVec> rows(n, BitVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cloud.distance(i, j) <= eps) rows[i].set(j);
    return Entourage(n, std::move(rows));
}

/// U[x] = { y | (x,y) in U }.
inline std::vector<int> ball(const Entourage& U, int x) {
    if (x < 0 || x >= U.carrier_size()) throw input_error("ball center out of range");
    return U.row(x).to_indices();
}

// ---------------------------------------------------------------------------
// EntourageLadder: a finite strictly-decreasing chain of scales with one
// entourage per scale; the finite surrogate of "for all entourages".
// ---------------------------------------------------------------------------

class EntourageLadder {
public:
    EntourageLadder(std::vector<double> scales, std::vector<Entourage> entourages)
        : scales_(std::move(scales)), entourages_(std::move(entourages)) {
        if (scales_.empty() || scales_.size() != entourages_.size())
            throw input_error("ladder needs one entourage per scale");
        for (std::size_t i = 0; i < scales_.size(); ++i) {
            if (!(scales_[i] > 0) || !std::isfinite(scales_[i]))
                throw input_error("ladder scales must be positive reals");
            if (i > 0 && !(scales_[i] < scales_[i - 1]))
                throw input_error("ladder scales must be strictly decreasing");
        }
        int n = entourages_[0].carrier_size();
        for (std::size_t i = 1; i < entourages_.size(); ++i) {
            if (entourages_[i].carrier_size() != n) throw input_error("ladder carrier mismatch");
            if (!entourages_[i].subset_of(entourages_[i - 1]))
                throw input_error("ladder entourages must be monotone in scale");
        }
    }

    static EntourageLadder from_metric(const MetricCloud& cloud, std::vector<double> scales) {
        std::vector<Entourage> es;
        es.reserve(scales.size());
        for (double s : scales) es.push_back(entourage_from_metric(cloud, s));
        return EntourageLadder(std::move(scales), std::move(es));
    }

    static std::vector<double> geometric_scales(double start, double ratio, int count) {
        if (!(start > 0) || !(ratio > 0) || !(ratio < 1) || count < 1)
            throw input_error("geometric ladder needs start > 0, 0 < ratio < 1, count >= 1");
        std::vector<double> s(count);
        double v = start;
        for (int i = 0; i < count; ++i, v *= ratio) s[i] = v;
        return s;
    }

    int size() const { return static_cast<int>(scales_.size()); }
    int carrier_size() const { return entourages_[0].carrier_size(); }
    double scale(int i) const { return scales_.at(i); }
    const std::vector<double>& scales() const { return scales_; }
    const Entourage& rung(int i) const { return entourages_.at(i); }

private:
    std::vector<double> scales_;
    std::vector<Entourage> entourages_;
};

// ---------------------------------------------------------------------------
// Cover: list of non-empty subsets whose union is the carrier. Members are
// stored sorted and deduplicated so reports are canonical.
// ---------------------------------------------------------------------------

class Cover {
public:
    Cover(int carrier, std::vector<std::vector<int>> members) : carrier_(carrier) {
        BitVec covered(carrier);
        for (auto& m : members) {
            if (m.empty()) throw input_error("cover members must be non-empty");
            std::sort(m.begin(), m.end());
            m.erase(std::unique(m.begin(), m.end()), m.end());
            for (int v : m) {
                if (v < 0 || v >= carrier) throw input_error("cover member index out of range");
                covered.set(v);
            }
        }
        if (covered.count() != carrier) throw input_error("members do not cover the carrier");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }

    int carrier_size() const { return carrier_; }
    const std::vector<std::vector<int>>& members() const { return members_; }

    bool operator==(const Cover& o) const { return carrier_ == o.carrier_ && members_ == o.members_; }

private:
    int carrier_;
    std::vector<std::vector<int>> members_;
};

namespace detail {
inline bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
} // namespace detail

/// True iff every member of `fine` is contained in some member of `coarse`
/// (coarse <= fine in the refinement order).
inline bool is_refinement(const Cover& coarse, const Cover& fine) {
    if (coarse.carrier_size() != fine.carrier_size()) throw input_error("covers live on different carriers");
    for (const auto& v : fine.members()) {
        bool hit = false;
        for (const auto& u : coarse.members())
            if (detail::sorted_subset(v, u)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

/// Common refinement u v v: the non-empty pairwise intersections, with
/// members redundant inside another member dropped (keeps the join
/// idempotent; stars and refinement tests are unaffected by the drop).
inline Cover join_cover(const Cover& u, const Cover& v) {
    if (u.carrier_size() != v.carrier_size()) throw input_error("covers live on different carriers");
    std::vector<std::vector<int>> members;
    for (const auto& a : u.members())
        for (const auto& b : v.members()) {
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            if (!inter.empty()) members.push_back(std::move(inter));
        }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::vector<int>> maximal;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < members.size() && !redundant; ++j)
            if (i != j && detail::sorted_subset(members[i], members[j]) && members[i] != members[j])
                redundant = true;
        if (!redundant) maximal.push_back(members[i]);
    }
    return Cover(u.carrier_size(), std::move(maximal));
}

/// The cover { U[x] : x in carrier }, duplicates removed.
inline Cover ball_cover(const Entourage& U) {
    std::vector<std::vector<int>> members;
    members.reserve(U.carrier_size());
    for (int x = 0; x < U.carrier_size(); ++x) members.push_back(U.row(x).to_indices());
    return Cover(U.carrier_size(), std::move(members));
}

/// A cover is uniform for U when the ball cover of U refines it.
inline bool is_uniform_cover(const Cover& cov, const Entourage& U) {
    if (cov.carrier_size() != U.carrier_size()) throw input_error("cover and entourage carrier mismatch");
    return is_refinement(cov, ball_cover(U));
}

/// St(A, cov) = union of the members meeting A.
inline std::vector<int> star(const std::vector<int>& A, const Cover& cov) {
    BitVec in_a(cov.carrier_size());
    for (int v : A) {
        if (v < 0 || v >= cov.carrier_size()) throw input_error("subset index out of range");
        in_a.set(v);
    }
    BitVec out(cov.carrier_size());
    for (const auto& m : cov.members()) {
        bool meets = false;
        for (int v : m)
            if (in_a.get(v)) {
                meets = true;
                break;
            }
        if (meets)
            for (int v : m) out.set(v);
    }
    return out.to_indices();
}

/// coarse <=* fine: every member star of `fine` fits inside a member of
/// `coarse`.
inline bool is_star_refinement(const Cover& coarse, const Cover& fine) {
    if (coarse.carrier_size() != fine.carrier_size()) throw input_error("covers live on different carriers");
    std::vector<std::vector<int>> stars;
    stars.reserve(fine.members().size());
    for (const auto& v : fine.members()) stars.push_back(star(v, fine));
    return is_refinement(coarse, Cover(coarse.carrier_size(), std::move(stars)));
}

/// Finite prefix of a normal sequence: consecutive star-refinements.
inline bool is_normal_ladder(const std::vector<Cover>& covers) {
    if (covers.empty()) throw input_error("normal ladder check needs at least one cover");
    for (std::size_t i = 0; i + 1 < covers.size(); ++i)
        if (!is_star_refinement(covers[i], covers[i + 1])) return false;
    return true;
}

/// Largest ladder scale whose ball-cover star of A stays inside B
/// (A strongly contained in B), or nullopt. Monotone: containment at a scale
/// persists at all finer scales.
inline std::optional<double> strong_containment(const std::vector<int>& A, const std::vector<int>& B,
                                                const EntourageLadder& ladder) {
    BitVec in_b(ladder.carrier_size());
    for (int v : B) {
        if (v < 0 || v >= ladder.carrier_size()) throw input_error("subset index out of range");
        in_b.set(v);
    }
    for (int r = 0; r < ladder.size(); ++r) {
        std::vector<int> st = star(A, ball_cover(ladder.rung(r)));
        bool inside = true;
        for (int v : st)
            if (!in_b.get(v)) {
                inside = false;
                break;
            }
        if (inside) return ladder.scale(r);
    }
    return std::nullopt;
}

} // namespace uvh

#endif
