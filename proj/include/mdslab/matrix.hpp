#pragma once

// Dense square matrices over GF(2^m) with value semantics, plus the
// linear-algebra kernels the enumeration engines rest on: determinant,
// inverse, and the MDS tests.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdslab/errors.hpp"
#include "mdslab/field.hpp"

namespace mdslab {

class SquareMatrix {
public:
    SquareMatrix(const FieldContext& ctx, std::size_t n)
        : ctx_(&ctx), n_(n), entries_(n * n, 0) {
        if (n_ == 0) throw std::invalid_argument("matrix order must be at least 1");
    }

    SquareMatrix(const FieldContext& ctx, std::size_t n, std::vector<FieldElement> entries)
        : ctx_(&ctx), n_(n), entries_(std::move(entries)) {
        if (n_ == 0) throw std::invalid_argument("matrix order must be at least 1");
        if (entries_.size() != n_ * n_) {
            throw std::invalid_argument("expected " + std::to_string(n_ * n_) +
                                        " entries, got " + std::to_string(entries_.size()));
        }
        for (FieldElement e : entries_) {
            if (e >= ctx.order()) {
                throw std::invalid_argument("entry " + std::to_string(e) +
                                            " out of range for GF(2^" +
                                            std::to_string(ctx.degree()) + ")");
            }
        }
    }

    static SquareMatrix identity(const FieldContext& ctx, std::size_t n) {
        SquareMatrix mat(ctx, n);
        for (std::size_t i = 0; i < n; ++i) mat(i, i) = 1;
        return mat;
    }

    static SquareMatrix from_rows(const FieldContext& ctx,
                                  std::initializer_list<std::initializer_list<FieldElement>> rows) {
        std::vector<FieldElement> flat;
        const std::size_t n = rows.size();
        flat.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw std::invalid_argument("ragged row in matrix literal");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return SquareMatrix(ctx, n, std::move(flat));
    }

    std::size_t order() const { return n_; }
    const FieldContext& field() const { return *ctx_; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    std::span<const FieldElement> entries() const { return entries_; }

    bool operator==(const SquareMatrix& o) const {
        return *ctx_ == *o.ctx_ && n_ == o.n_ && entries_ == o.entries_;
    }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    SquareMatrix operator*(const SquareMatrix& o) const {
        const auto& f = *ctx_;
        SquareMatrix out(f, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                const FieldElement a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    out(i, j) ^= f.mul(a, o(k, j));
                }
            }
        }
        return out;
    }

    SquareMatrix transpose() const {
        SquareMatrix out(*ctx_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

private:
    const FieldContext* ctx_;
    std::size_t n_;
    std::vector<FieldElement> entries_;
};

class DiagonalMatrix {
public:
    DiagonalMatrix(const FieldContext& ctx, std::vector<FieldElement> diag)
        : ctx_(&ctx), diag_(std::move(diag)) {
        if (diag_.empty()) throw std::invalid_argument("diagonal must be non-empty");
        for (FieldElement e : diag_) {
            if (e >= ctx.order()) {
                throw std::invalid_argument("diagonal entry out of range for GF(2^" +
                                            std::to_string(ctx.degree()) + ")");
            }
        }
    }

    static DiagonalMatrix identity(const FieldContext& ctx, std::size_t n) {
        return DiagonalMatrix(ctx, std::vector<FieldElement>(n, 1));
    }

    std::size_t order() const { return diag_.size(); }
    const FieldContext& field() const { return *ctx_; }
    FieldElement operator[](std::size_t i) const { return diag_[i]; }
    std::span<const FieldElement> diagonal() const { return diag_; }

    bool is_nonsingular() const {
        for (FieldElement e : diag_)
            if (e == 0) return false;
        return true;
    }

    DiagonalMatrix inverse() const {
        std::vector<FieldElement> inv(diag_.size());
        for (std::size_t i = 0; i < diag_.size(); ++i) inv[i] = ctx_->inv(diag_[i]);
        return DiagonalMatrix(*ctx_, std::move(inv));
    }

    SquareMatrix to_matrix() const {
        SquareMatrix mat(*ctx_, diag_.size());
        for (std::size_t i = 0; i < diag_.size(); ++i) mat(i, i) = diag_[i];
        return mat;
    }

    bool operator==(const DiagonalMatrix& o) const {
        return *ctx_ == *o.ctx_ && diag_ == o.diag_;
    }

private:
    const FieldContext* ctx_;
    std::vector<FieldElement> diag_;
};

// D1 * M * D2, computed entrywise as d1_i * m_ij * d2_j.
inline SquareMatrix sandwich(const DiagonalMatrix& d1, const SquareMatrix& m,
                             const DiagonalMatrix& d2) {
    const auto& f = m.field();
    const std::size_t n = m.order();
    if (d1.order() != n || d2.order() != n) {
        throw std::invalid_argument("diagonal order mismatch in sandwich product");
    }
    SquareMatrix out(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = f.mul(f.mul(d1[i], m(i, j)), d2[j]);
    return out;
}

namespace detail {

// Determinant of the k x k matrix in `buf` (row-major, stride k), by
// Gaussian elimination. Destroys buf. Row swaps need no sign fix in
// characteristic 2.
inline FieldElement det_in_place(const FieldContext& f, FieldElement* buf, std::size_t k) {
    FieldElement det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && buf[pivot * k + c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            for (std::size_t j = c; j < k; ++j) std::swap(buf[c * k + j], buf[pivot * k + j]);
        }
        const FieldElement p = buf[c * k + c];
        det = f.mul(det, p);
        const FieldElement pinv = f.inv(p);
        for (std::size_t r = c + 1; r < k; ++r) {
            const FieldElement factor = f.mul(buf[r * k + c], pinv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < k; ++j) {
                buf[r * k + j] ^= f.mul(factor, buf[c * k + j]);
            }
        }
    }
    return det;
}

}  // namespace detail

inline FieldElement determinant(const SquareMatrix& m) {
    const std::size_t n = m.order();
    std::vector<FieldElement> buf(m.entries().begin(), m.entries().end());
    return detail::det_in_place(m.field(), buf.data(), n);
}

inline SquareMatrix inverse(const SquareMatrix& m) {
    const auto& f = m.field();
    const std::size_t n = m.order();
    // Gauss-Jordan on [A | I].
    std::vector<FieldElement> a(m.entries().begin(), m.entries().end());
    SquareMatrix out = SquareMatrix::identity(f, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot * n + c] == 0) ++pivot;
        if (pivot == n) throw MathDomainError("matrix is singular");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[c * n + j], a[pivot * n + j]);
                std::swap(out(c, j), out(pivot, j));
            }
        }
        const FieldElement pinv = f.inv(a[c * n + c]);
        for (std::size_t j = 0; j < n; ++j) {
            a[c * n + j] = f.mul(a[c * n + j], pinv);
            out(c, j) = f.mul(out(c, j), pinv);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const FieldElement factor = a[r * n + c];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] ^= f.mul(factor, a[c * n + j]);
                out(r, j) ^= f.mul(factor, out(c, j));
            }
        }
    }
    return out;
}

namespace detail {

// Advance a strictly increasing index combination; false once exhausted.
inline bool next_combination(std::size_t* idx, std::size_t k, std::size_t n) {
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// True iff every square sub-matrix of every order is non-singular.
// Minors are visited smallest order first so that cheap rejections
// (zero entries, 2x2 minors) dominate in search loops.
inline bool is_mds(const SquareMatrix& m) {
    const auto& f = m.field();
    const std::size_t n = m.order();
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t rows[8], cols[8];
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                FieldElement buf[64];
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = m(rows[i], cols[j]);
                if (detail::det_in_place(f, buf, k) == 0) return false;
            } while (detail::next_combination(cols, k, n));
        } while (detail::next_combination(rows, k, n));
    }
    return true;
}

// MDS shortcut for orthogonal matrices: the inverse is the transpose, so
// the top-order minors are forced once the small ones hold. For n = 3 it
// suffices that every entry is nonzero; for n = 4, entries plus all 2x2
// minors. Callers must only pass orthogonal matrices.
inline bool is_mds_orthogonal_fast(const SquareMatrix& m) {
    const std::size_t n = m.order();
    if (n != 3 && n != 4) {
        throw std::invalid_argument("fast orthogonal MDS test supports orders 3 and 4, got " +
                                    std::to_string(n));
    }
    for (FieldElement e : m.entries())
        if (e == 0) return false;
    if (n == 4) {
        const auto& f = m.field();
        for (std::size_t r1 = 0; r1 < 4; ++r1)
            for (std::size_t r2 = r1 + 1; r2 < 4; ++r2)
                for (std::size_t c1 = 0; c1 < 4; ++c1)
                    for (std::size_t c2 = c1 + 1; c2 < 4; ++c2)
                        if (f.mul(m(r1, c1), m(r2, c2)) == f.mul(m(r1, c2), m(r2, c1)))
                            return false;
    }
    return true;
}

}  // namespace mdslab
