#ifndef UVH_LINALG_HPP
#define UVH_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uvh/errors.hpp"

namespace uvh {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Prime fields Z/p with a runtime modulus. p = 2 is the default ring of the
// homology engine; products of two canonical representatives fit in int64.
// ---------------------------------------------------------------------------

class PrimeField {
public:
    explicit PrimeField(std::int64_t p) : p_(p) {
        if (p < 2) throw input_error("field modulus must be a prime >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw input_error("field modulus must be prime, got " + std::to_string(p));
    }

    std::int64_t p() const { return p_; }

    std::int64_t canon(std::int64_t v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return canon(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::int64_t inv(std::int64_t a) const {
        a = canon(a);
        if (a == 0) throw internal_error("division by zero in prime field");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return canon(t);
    }

private:
    std::int64_t p_;
};

// ---------------------------------------------------------------------------
// Sparse columns over a prime field: (row, coeff) entries sorted by row,
// coefficients canonical and nonzero. The pivot is the largest row index.
// ---------------------------------------------------------------------------

using SparseCol = std::vector<std::pair<int, std::int64_t>>;

inline int col_low(const SparseCol& c) { return c.empty() ? -1 : c.back().first; }

/// dst <- dst + s * src  (mod p)
inline void col_axpy(SparseCol& dst, const SparseCol& src, std::int64_t s, const PrimeField& F) {
    s = F.canon(s);
    if (s == 0) return;
    SparseCol out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, F.mul(s, src[j].second));
            ++j;
        } else {
            std::int64_t v = F.add(dst[i].second, F.mul(s, src[j].second));
            if (v != 0) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

/// Echelon family of columns with distinct pivot rows; supports reducing
/// further vectors against the family.
class ColumnEchelon {
public:
    explicit ColumnEchelon(const PrimeField& F) : F_(F) {}

    int rank() const { return static_cast<int>(cols_.size()); }
    const std::vector<SparseCol>& columns() const { return cols_; }
    const PrimeField& field() const { return F_; }

    bool has_pivot(int row) const { return pivot_.count(row) > 0; }

    /// Reduces c in place against the stored columns until its low row is
    /// unclaimed or c is zero.
    void reduce(SparseCol& c) const {
        while (!c.empty()) {
            auto it = pivot_.find(col_low(c));
            if (it == pivot_.end()) return;
            const SparseCol& piv = cols_[it->second];
            std::int64_t s = F_.neg(F_.mul(c.back().second, F_.inv(piv.back().second)));
            col_axpy(c, piv, s, F_);
        }
    }

    /// Reduces c; if nonzero, inserts it as a new pivot column and returns
    /// true (c was independent).
    bool reduce_and_insert(SparseCol& c) {
        reduce(c);
        if (c.empty()) return false;
        pivot_.emplace(col_low(c), static_cast<int>(cols_.size()));
        cols_.push_back(c);
        return true;
    }

private:
    PrimeField F_;
    std::vector<SparseCol> cols_;
    std::unordered_map<int, int> pivot_;
};

// ---------------------------------------------------------------------------
// Dense integer matrices (arbitrary precision) and Smith normal form.
// ---------------------------------------------------------------------------

struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> a; // row-major

    ZMat() = default;
    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ZMat identity(std::size_t n) {
        ZMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    ZMat mul(const ZMat& o) const {
        if (cols != o.rows) throw internal_error("ZMat::mul dimension mismatch");
        ZMat r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const BigInt& v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
/// diagonal entries non-negative. Transform tracking is opt-in.
struct SmithForm {
    ZMat D;
    std::optional<ZMat> U, Uinv, V, Vinv;
    int rank = 0;
    std::vector<BigInt> diag; // the nonzero invariant factors d_1..d_r
};

struct SnfOptions {
    bool want_U = false, want_Uinv = false, want_V = false, want_Vinv = false;
};

namespace detail {

inline void snf_swap_rows(SmithForm& s, std::size_t i, std::size_t j) {
    ZMat& D = s.D;
    for (std::size_t c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
    if (s.U)
        for (std::size_t c = 0; c < s.U->cols; ++c) std::swap(s.U->at(i, c), s.U->at(j, c));
    if (s.Uinv)
        for (std::size_t r = 0; r < s.Uinv->rows; ++r) std::swap(s.Uinv->at(r, i), s.Uinv->at(r, j));
}

inline void snf_swap_cols(SmithForm& s, std::size_t i, std::size_t j) {
    ZMat& D = s.D;
    for (std::size_t r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
    if (s.V)
        for (std::size_t r = 0; r < s.V->rows; ++r) std::swap(s.V->at(r, i), s.V->at(r, j));
    if (s.Vinv)
        for (std::size_t c = 0; c < s.Vinv->cols; ++c) std::swap(s.Vinv->at(i, c), s.Vinv->at(j, c));
}

/// row_i -= q * row_j
inline void snf_row_sub(SmithForm& s, std::size_t i, std::size_t j, const BigInt& q) {
    ZMat& D = s.D;
    for (std::size_t c = 0; c < D.cols; ++c) D.at(i, c) -= q * D.at(j, c);
    if (s.U)
        for (std::size_t c = 0; c < s.U->cols; ++c) s.U->at(i, c) -= q * s.U->at(j, c);
    if (s.Uinv)
        for (std::size_t r = 0; r < s.Uinv->rows; ++r) s.Uinv->at(r, j) += q * s.Uinv->at(r, i);
}

/// col_i -= q * col_j
inline void snf_col_sub(SmithForm& s, std::size_t i, std::size_t j, const BigInt& q) {
    ZMat& D = s.D;
    for (std::size_t r = 0; r < D.rows; ++r) D.at(r, i) -= q * D.at(r, j);
    if (s.V)
        for (std::size_t r = 0; r < s.V->rows; ++r) s.V->at(r, i) -= q * s.V->at(r, j);
    if (s.Vinv)
        for (std::size_t c = 0; c < s.Vinv->cols; ++c) s.Vinv->at(j, c) += q * s.Vinv->at(i, c);
}

inline void snf_negate_row(SmithForm& s, std::size_t i) {
    ZMat& D = s.D;
    for (std::size_t c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
    if (s.U)
        for (std::size_t c = 0; c < s.U->cols; ++c) s.U->at(i, c) = -s.U->at(i, c);
    if (s.Uinv)
        for (std::size_t r = 0; r < s.Uinv->rows; ++r) s.Uinv->at(r, i) = -s.Uinv->at(r, i);
}

} // namespace detail

/// Smith normal form; pivot selected by minimal absolute value.
inline SmithForm smith_normal_form(const ZMat& A, SnfOptions opt = {}) {
    SmithForm s;
    s.D = A;
    if (opt.want_U) s.U = ZMat::identity(A.rows);
    if (opt.want_Uinv) s.Uinv = ZMat::identity(A.rows);
    if (opt.want_V) s.V = ZMat::identity(A.cols);
    if (opt.want_Vinv) s.Vinv = ZMat::identity(A.cols);

    ZMat& D = s.D;
    std::size_t t = 0;
    const std::size_t tmax = std::min(A.rows, A.cols);
    while (t < tmax) {
        // locate the entry of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < D.rows; ++i)
            for (std::size_t j = t; j < D.cols; ++j) {
                const BigInt& v = D.at(i, j);
                if (v == 0) continue;
                BigInt av = abs(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) detail::snf_swap_rows(s, t, pi);
        if (pj != t) detail::snf_swap_cols(s, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (std::size_t i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                BigInt q = D.at(i, t) / D.at(t, t);
                detail::snf_row_sub(s, i, t, q);
                if (D.at(i, t) != 0) {
                    detail::snf_swap_rows(s, t, i); // strictly smaller remainder becomes pivot
                    dirty = true;
                }
            }
            if (dirty) continue;
            // clear row t
            for (std::size_t j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                BigInt q = D.at(t, j) / D.at(t, t);
                detail::snf_col_sub(s, j, t, q);
                if (D.at(t, j) != 0) {
                    detail::snf_swap_cols(s, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility: pivot must divide the trailing block
            for (std::size_t i = t + 1; i < D.rows && !dirty; ++i)
                for (std::size_t j = t + 1; j < D.cols && !dirty; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        detail::snf_row_sub(s, t, i, BigInt(-1)); // row_t += row_i
                        dirty = true;
                    }
        }
        if (D.at(t, t) < 0) detail::snf_negate_row(s, t);
        ++t;
    }
    s.rank = static_cast<int>(t);
    for (std::size_t i = 0; i < t; ++i) s.diag.push_back(D.at(i, i));
    return s;
}

/// Exact integer determinant (Bareiss fraction-free elimination).
inline BigInt z_det(const ZMat& A) {
    if (A.rows != A.cols) throw internal_error("determinant of non-square matrix");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    ZMat M = A;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && M.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(M.at(k, c), M.at(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

/// Rank over Q of an integer matrix (via fraction-free elimination).
inline int z_rank(const ZMat& A) {
    ZMat M = A;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t p = r;
        while (p < M.rows && M.at(p, c) == 0) ++p;
        if (p == M.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(r, j), M.at(p, j));
        for (std::size_t i = r + 1; i < M.rows; ++i) {
            if (M.at(i, c) == 0) continue;
            BigInt g = gcd(M.at(i, c), M.at(r, c));
            BigInt fi = M.at(r, c) / g, fr = M.at(i, c) / g;
            for (std::size_t j = c; j < M.cols; ++j) M.at(i, j) = M.at(i, j) * fi - M.at(r, j) * fr;
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Solver for A x = b over Z backed by a Smith form of A (requires U and V).
class ZSolver {
public:
    explicit ZSolver(const ZMat& A)
        : rows_(A.rows), cols_(A.cols), snf_(smith_normal_form(A, {.want_U = true, .want_V = true})) {}

    /// Returns x with A x = b, or nullopt when no integer solution exists.
    std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& b) const {
        if (b.size() != rows_) throw internal_error("ZSolver: rhs size mismatch");
        // y solves D y = U b; x = V y
        std::vector<BigInt> ub(rows_, 0);
        const ZMat& U = *snf_.U;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j)
                if (U.at(i, j) != 0) ub[i] += U.at(i, j) * b[j];
        std::vector<BigInt> y(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i < static_cast<std::size_t>(snf_.rank)) {
                const BigInt& d = snf_.D.at(i, i);
                if (ub[i] % d != 0) return std::nullopt;
                y[i] = ub[i] / d;
            } else if (ub[i] != 0) {
                return std::nullopt;
            }
        }
        const ZMat& V = *snf_.V;
        std::vector<BigInt> x(cols_, 0);
        for (std::size_t i = 0; i < cols_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (V.at(i, j) != 0) x[i] += V.at(i, j) * y[j];
        return x;
    }

    int rank() const { return snf_.rank; }

    /// Basis of the integer kernel of A (columns of V past the rank).
    std::vector<std::vector<BigInt>> kernel_basis() const {
        const ZMat& V = *snf_.V;
        std::vector<std::vector<BigInt>> out;
        for (std::size_t j = snf_.rank; j < cols_; ++j) {
            std::vector<BigInt> v(cols_);
            for (std::size_t i = 0; i < cols_; ++i) v[i] = V.at(i, j);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    SmithForm snf_;
};

} // namespace uvh

#endif
