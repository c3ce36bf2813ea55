#pragma once

// Exhaustive enumeration engines and closed-form counting for the MDS
// matrix classes. Counts use arbitrary-precision integers throughout;
// the derived totals reach 255^7-scale products that overflow 64 bits.
//
// Enumerators shard their outermost loop across threads; per-shard
// results are merged in shard order, so counts and emitted streams are
// deterministic (lexicographic by parameters) regardless of thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdslab/matrix.hpp"
#include "mdslab/properties.hpp"

namespace mdslab {

using BigInt = boost::multiprecision::cpp_int;

using MatrixSink = std::function<void(const SquareMatrix&)>;

enum class MatrixClass {
    mds,
    involutory_mds,
    semi_involutory_mds,
    orthogonal_mds,
    semi_orthogonal_mds,
    si_and_so_mds,
    representative_semi_involutory_mds,
    representative_semi_orthogonal_mds,
};

enum class CountMethod {
    exhaustive,
    parametrized,
    derived_by_theorem,
};

struct CountReport {
    MatrixClass matrix_class;
    std::size_t n = 0;
    unsigned m = 0;
    std::optional<BigInt> enumerated;
    std::optional<BigInt> closed_form;
    bool match = true;  // enumerated == closed_form when both are present
    CountMethod method = CountMethod::exhaustive;
};

inline CountReport make_count_report(MatrixClass cls, std::size_t n, unsigned m,
                                     std::optional<BigInt> enumerated,
                                     std::optional<BigInt> closed_form, CountMethod method) {
    CountReport r{cls, n, m, std::move(enumerated), std::move(closed_form), true, method};
    if (r.enumerated && r.closed_form) r.match = (*r.enumerated == *r.closed_form);
    return r;
}

inline const char* matrix_class_name(MatrixClass cls) {
    switch (cls) {
        case MatrixClass::mds: return "mds";
        case MatrixClass::involutory_mds: return "involutory-mds";
        case MatrixClass::semi_involutory_mds: return "semi-involutory-mds";
        case MatrixClass::orthogonal_mds: return "orthogonal-mds";
        case MatrixClass::semi_orthogonal_mds: return "semi-orthogonal-mds";
        case MatrixClass::si_and_so_mds: return "si-so-mds";
        case MatrixClass::representative_semi_involutory_mds:
            return "representative-semi-involutory";
        case MatrixClass::representative_semi_orthogonal_mds:
            return "representative-semi-orthogonal";
    }
    return "?";
}

inline std::optional<MatrixClass> parse_matrix_class(const std::string& name) {
    for (MatrixClass cls :
         {MatrixClass::mds, MatrixClass::involutory_mds, MatrixClass::semi_involutory_mds,
          MatrixClass::orthogonal_mds, MatrixClass::semi_orthogonal_mds, MatrixClass::si_and_so_mds,
          MatrixClass::representative_semi_involutory_mds,
          MatrixClass::representative_semi_orthogonal_mds}) {
        if (name == matrix_class_name(cls)) return cls;
    }
    return std::nullopt;
}

// Raised when a search would exceed the candidate budget and no override
// was given. Carries the raw candidate-count estimate.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& msg, BigInt estimate)
        : std::runtime_error(msg), estimate_(std::move(estimate)) {}
    const BigInt& candidate_estimate() const { return estimate_; }

private:
    BigInt estimate_;
};

struct EnumerateOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    bool override_budget = false;
};

// Raw size of the representative search space, (2^m - 1)^((n-1)^2).
inline BigInt representative_search_space(const FieldContext& f, std::size_t n) {
    return boost::multiprecision::pow(BigInt(f.unit_count()),
                                      static_cast<unsigned>((n - 1) * (n - 1)));
}

// ---------------------------------------------------------------------------
// Closed-form counts
// ---------------------------------------------------------------------------

// Exact closed-form count where a formula exists (order 3, m >= 3).
inline BigInt count_closed_form(MatrixClass cls, std::size_t n, unsigned m) {
    const auto unsupported = [&]() {
        throw std::invalid_argument(std::string("no closed-form count for class ") +
                                    matrix_class_name(cls) + " at n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m));
    };
    if (n != 3) unsupported();
    if (m < 3) throw std::invalid_argument("order-3 closed forms require m >= 3");
    const BigInt q = BigInt(1) << m;
    switch (cls) {
        case MatrixClass::involutory_mds:
            return (q - 1) * (q - 1) * (q - 2) * (q - 4);
        case MatrixClass::semi_involutory_mds:
        case MatrixClass::si_and_so_mds:
            return boost::multiprecision::pow(q - 1, 5) * (q - 2) * (q - 4);
        case MatrixClass::orthogonal_mds:
        case MatrixClass::representative_semi_orthogonal_mds:
            return (q - 2) * (q - 3) * (q - 4);
        case MatrixClass::semi_orthogonal_mds:
            return boost::multiprecision::pow(q - 1, 5) * (q - 2) * (q - 3) * (q - 4);
        case MatrixClass::representative_semi_involutory_mds:
            return (q - 2) * (q - 4);
        default:
            unsupported();
    }
    return 0;  // unreachable
}

// Scaling laws from a representative pivot count N:
//   involutory        = (2^m - 1)^(n-1)  * N   (N = semi-involutory representatives)
//   semi-involutory   = (2^m - 1)^(2n-1) * N
//   both-semi         = (2^m - 1)^(2n-1) * N   (N = representatives with both properties)
//   semi-orthogonal   = (2^m - 1)^(2n-1) * N   (N = semi-orthogonal representatives)
//   orthogonal        = N                      (equal to its representative count)
inline BigInt count_closed_form(MatrixClass cls, std::size_t n, unsigned m,
                                const BigInt& representative_count) {
    const BigInt units = (BigInt(1) << m) - 1;
    switch (cls) {
        case MatrixClass::involutory_mds:
            return boost::multiprecision::pow(units, static_cast<unsigned>(n - 1)) *
                   representative_count;
        case MatrixClass::semi_involutory_mds:
        case MatrixClass::semi_orthogonal_mds:
        case MatrixClass::si_and_so_mds:
            return boost::multiprecision::pow(units, static_cast<unsigned>(2 * n - 1)) *
                   representative_count;
        case MatrixClass::orthogonal_mds:
            return representative_count;
        default:
            throw std::invalid_argument(std::string("no representative scaling law for class ") +
                                        matrix_class_name(cls));
    }
}

// ---------------------------------------------------------------------------
// Shared enumeration plumbing
// ---------------------------------------------------------------------------

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(shard, acc[shard]) for shard in [0, shards) across worker
// threads. Accumulators are per-shard, so merging them in index order
// keeps results deterministic.
template <typename Acc, typename ShardFn>
std::vector<Acc> run_sharded(std::size_t shards, unsigned threads, const ShardFn& fn) {
    std::vector<Acc> accs(shards);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), shards));
    if (workers <= 1) {
        for (std::size_t s = 0; s < shards; ++s) fn(s, accs[s]);
        return accs;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t s = next.fetch_add(1);
                if (s >= shards) return;
                fn(s, accs[s]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return accs;
}

// Per-shard accumulator: counters plus optionally buffered entry blocks
// for deterministic emission after the parallel phase.
struct ShardAcc {
    std::uint64_t count = 0;
    std::uint64_t symmetric = 0;
    std::vector<FieldElement> emitted;  // flattened n*n blocks, in visit order
};

inline void flush_emitted(const FieldContext& f, std::size_t n, const std::vector<ShardAcc>& accs,
                          const MatrixSink& sink) {
    if (!sink) return;
    for (const auto& acc : accs) {
        for (std::size_t off = 0; off + n * n <= acc.emitted.size(); off += n * n) {
            sink(SquareMatrix(
                f, n,
                std::vector<FieldElement>(acc.emitted.begin() + static_cast<std::ptrdiff_t>(off),
                                          acc.emitted.begin() +
                                              static_cast<std::ptrdiff_t>(off + n * n))));
        }
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Orthogonal MDS matrices of order 3
// ---------------------------------------------------------------------------

// Every 3x3 orthogonal matrix has its third row/column determined by the
// top-left 2x2 block, whose entries satisfy a single quadratic relation;
// the matrix is MDS exactly when all nine entries are nonzero. Iterates
// (m11, m12, m21) and solves for m22 (free when m11 = 1).
inline std::uint64_t enumerate_orthogonal_mds_3(const FieldContext& f,
                                                const MatrixSink& sink = {}) {
    const unsigned q = f.order();
    std::uint64_t count = 0;
    const auto emit = [&](FieldElement m11, FieldElement m12, FieldElement m21,
                          FieldElement m22) {
        const FieldElement m13 = m11 ^ m12 ^ 1;
        const FieldElement m23 = m21 ^ m22 ^ 1;
        const FieldElement m31 = m11 ^ m21 ^ 1;
        const FieldElement m32 = m12 ^ m22 ^ 1;
        const FieldElement m33 = m11 ^ m12 ^ m21 ^ m22 ^ 1;
        if (m13 == 0 || m23 == 0 || m31 == 0 || m32 == 0 || m33 == 0) return;
        ++count;
        if (sink) sink(SquareMatrix(f, 3, {m11, m12, m13, m21, m22, m23, m31, m32, m33}));
    };
    for (unsigned m11 = 1; m11 < q; ++m11) {
        for (unsigned m12 = 1; m12 < q; ++m12) {
            for (unsigned m21 = 1; m21 < q; ++m21) {
                const FieldElement a = static_cast<FieldElement>(m11);
                const FieldElement b = static_cast<FieldElement>(m12);
                const FieldElement c = static_cast<FieldElement>(m21);
                if (m11 != 1) {
                    const FieldElement rhs =
                        static_cast<FieldElement>(f.mul(b, c) ^ a ^ b ^ c ^ 1);
                    const FieldElement m22 = f.mul(f.inv(a ^ 1), rhs);
                    if (m22 != 0) emit(a, b, c, m22);
                } else {
                    if ((f.mul(b, c) ^ b ^ c) != 0) continue;
                    for (unsigned m22 = 1; m22 < q; ++m22) {
                        emit(a, b, c, static_cast<FieldElement>(m22));
                    }
                }
            }
        }
    }
    return count;
}

// ---------------------------------------------------------------------------
// Orthogonal MDS matrices of order 4
// ---------------------------------------------------------------------------

namespace detail {

// Orthogonality constraint between two length-3 block rows u, v:
//   (sum u)(sum v) + u.v + sum u + sum v = 1.
inline bool block_rows_orthogonal(const FieldContext& f, const FieldElement* u,
                                  const FieldElement* v) {
    const FieldElement su = u[0] ^ u[1] ^ u[2];
    const FieldElement sv = v[0] ^ v[1] ^ v[2];
    const FieldElement dot =
        f.mul(u[0], v[0]) ^ f.mul(u[1], v[1]) ^ f.mul(u[2], v[2]);
    return (f.mul(su, sv) ^ dot ^ su ^ sv) == 1;
}

// Solve a k x 3 linear system over the field and invoke fn once per
// solution vector (all q^dim of them when underdetermined).
template <typename Fn>
void solve_linear_3(const FieldContext& f, FieldElement eq[][4], std::size_t k, const Fn& fn) {
    // Row echelon with column pivot order 0,1,2.
    std::size_t pivot_row[3];
    bool has_pivot[3] = {false, false, false};
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 3 && rank < k; ++col) {
        std::size_t r = rank;
        while (r < k && eq[r][col] == 0) ++r;
        if (r == k) continue;
        for (std::size_t j = 0; j < 4; ++j) std::swap(eq[rank][j], eq[r][j]);
        const FieldElement pinv = f.inv(eq[rank][col]);
        for (std::size_t j = col; j < 4; ++j) eq[rank][j] = f.mul(eq[rank][j], pinv);
        for (std::size_t rr = 0; rr < k; ++rr) {
            if (rr == rank || eq[rr][col] == 0) continue;
            const FieldElement factor = eq[rr][col];
            for (std::size_t j = col; j < 4; ++j) eq[rr][j] ^= f.mul(factor, eq[rank][j]);
        }
        pivot_row[col] = rank;
        has_pivot[col] = true;
        ++rank;
    }
    for (std::size_t r = rank; r < k; ++r) {
        if (eq[r][3] != 0) return;  // inconsistent
    }
    std::size_t free_cols[3];
    std::size_t free_count = 0;
    for (std::size_t col = 0; col < 3; ++col) {
        if (!has_pivot[col]) free_cols[free_count++] = col;
    }
    const unsigned q = f.order();
    std::uint32_t assignment = 0;
    std::uint32_t total = 1;
    for (std::size_t i = 0; i < free_count; ++i) total *= q;
    FieldElement x[3];
    for (assignment = 0; assignment < total; ++assignment) {
        std::uint32_t tmp = assignment;
        for (std::size_t i = 0; i < 3; ++i) x[i] = 0;
        for (std::size_t i = 0; i < free_count; ++i) {
            x[free_cols[i]] = static_cast<FieldElement>(tmp % q);
            tmp /= q;
        }
        for (std::size_t col = 0; col < 3; ++col) {
            if (!has_pivot[col]) continue;
            const std::size_t r = pivot_row[col];
            FieldElement v = eq[r][3];
            for (std::size_t j = col + 1; j < 3; ++j) v ^= f.mul(eq[r][j], x[j]);
            x[col] = v;
        }
        fn(x);
    }
}

// Border a 3x3 block into the 4x4 orthogonal form: last column holds the
// block row sums plus one, last row the column sums plus one, corner the
// sum of the row sums.
inline void border_orthogonal_block(const FieldElement block[9], FieldElement m[4][4]) {
    FieldElement b[3], c[3];
    for (std::size_t i = 0; i < 3; ++i) {
        b[i] = block[3 * i] ^ block[3 * i + 1] ^ block[3 * i + 2];
        c[i] = block[i] ^ block[i + 3] ^ block[i + 6];
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = block[3 * i + j];
    for (std::size_t i = 0; i < 3; ++i) {
        m[i][3] = b[i] ^ 1;
        m[3][i] = c[i] ^ 1;
    }
    m[3][3] = b[0] ^ b[1] ^ b[2];
}

// All-entries-nonzero plus all 2x2 minors nonzero; with orthogonality this
// is the full 4x4 MDS condition.
inline bool bordered_block_is_mds(const FieldContext& f, const FieldElement m[4][4]) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (m[i][j] == 0) return false;
    for (std::size_t r1 = 0; r1 < 4; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 4; ++r2)
            for (std::size_t c1 = 0; c1 < 4; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < 4; ++c2)
                    if (f.mul(m[r1][c1], m[r2][c2]) == f.mul(m[r1][c2], m[r2][c1])) return false;
    return true;
}

}  // namespace detail

// Enumerates 4x4 orthogonal MDS matrices through the bordered general
// form: the free 3x3 block is scanned two rows at a time, the pair
// constraint filters them, and the remaining five orthogonality
// constraints are linear in the third row and solved exactly.
inline std::uint64_t enumerate_orthogonal_mds_4(const FieldContext& f,
                                                const EnumerateOptions& opts = {},
                                                const MatrixSink& sink = {}) {
    if (f.degree() != 3 && f.degree() != 4) {
        throw std::invalid_argument("order-4 orthogonal enumeration supports m = 3 and m = 4");
    }
    const unsigned units = f.unit_count();

    const auto shard_fn = [&](std::size_t shard, detail::ShardAcc& acc) {
        FieldElement r1[3], r2[3];
        r1[0] = static_cast<FieldElement>(shard + 1);
        for (unsigned e1 = 1; e1 <= units; ++e1) {
            r1[1] = static_cast<FieldElement>(e1);
            for (unsigned e2 = 1; e2 <= units; ++e2) {
                r1[2] = static_cast<FieldElement>(e2);
                const FieldElement s1 = r1[0] ^ r1[1] ^ r1[2];
                for (unsigned e3 = 1; e3 <= units; ++e3) {
                    r2[0] = static_cast<FieldElement>(e3);
                    for (unsigned e4 = 1; e4 <= units; ++e4) {
                        r2[1] = static_cast<FieldElement>(e4);
                        for (unsigned e5 = 1; e5 <= units; ++e5) {
                            r2[2] = static_cast<FieldElement>(e5);
                            if (!detail::block_rows_orthogonal(f, r1, r2)) continue;
                            const FieldElement s2 = r2[0] ^ r2[1] ^ r2[2];
                            // Five constraints, all linear in row 3.
                            FieldElement eq[5][4];
                            for (std::size_t i = 0; i < 3; ++i) {
                                eq[0][i] = s1 ^ r1[i] ^ 1;
                                eq[1][i] = s2 ^ r2[i] ^ 1;
                            }
                            eq[0][3] = s1 ^ 1;
                            eq[1][3] = s2 ^ 1;
                            std::size_t row = 2;
                            for (std::size_t kk = 0; kk < 3; ++kk) {
                                for (std::size_t ll = kk + 1; ll < 3; ++ll) {
                                    const FieldElement ak = r1[kk] ^ r2[kk];
                                    const FieldElement al = r1[ll] ^ r2[ll];
                                    eq[row][0] = eq[row][1] = eq[row][2] = 0;
                                    eq[row][kk] = al ^ 1;
                                    eq[row][ll] = ak ^ 1;
                                    eq[row][3] = 1 ^ f.mul(ak, al) ^ f.mul(r1[kk], r1[ll]) ^
                                                 f.mul(r2[kk], r2[ll]) ^ ak ^ al;
                                    ++row;
                                }
                            }
                            detail::solve_linear_3(f, eq, 5, [&](const FieldElement* x) {
                                const FieldElement block[9] = {r1[0], r1[1], r1[2], r2[0], r2[1],
                                                               r2[2], x[0],  x[1],  x[2]};
                                FieldElement m[4][4];
                                detail::border_orthogonal_block(block, m);
                                if (!detail::bordered_block_is_mds(f, m)) return;
                                ++acc.count;
                                if (sink) {
                                    for (std::size_t i = 0; i < 4; ++i)
                                        for (std::size_t j = 0; j < 4; ++j)
                                            acc.emitted.push_back(m[i][j]);
                                }
                            });
                        }
                    }
                }
            }
        }
    };

    const auto accs = detail::run_sharded<detail::ShardAcc>(units, opts.threads, shard_fn);
    std::uint64_t count = 0;
    for (const auto& acc : accs) count += acc.count;
    detail::flush_emitted(f, 4, accs, sink);
    return count;
}

// ---------------------------------------------------------------------------
// Representative-form searches
// ---------------------------------------------------------------------------

namespace detail {

// 2x2 minors of the bordered 3x3 representative [[1,1,1],[1,a,b],[1,c,d]],
// needed as the adjugate entries of its inverse. minor[i][j] deletes row i
// and column j (no cofactor signs in characteristic 2).
inline void rep3_minors(const FieldContext& f, FieldElement a, FieldElement b, FieldElement c,
                        FieldElement d, FieldElement minor[3][3]) {
    minor[0][0] = f.mul(a, d) ^ f.mul(b, c);
    minor[0][1] = d ^ b;
    minor[0][2] = c ^ a;
    minor[1][0] = d ^ c;
    minor[1][1] = d ^ 1;
    minor[1][2] = c ^ 1;
    minor[2][0] = b ^ a;
    minor[2][1] = b ^ 1;
    minor[2][2] = a ^ 1;
}

// Rank-1 consistency of the ratio grid between a matrix and its inverse,
// expressed through minors so no divisions are needed. With all minors
// nonzero (guaranteed for an MDS input), this decides the semi-involutory
// property of the bordered representative.
inline bool rep_semi_involutory(const FieldContext& f, const FieldElement* m1, std::size_t n,
                                const FieldElement* minor) {
    // N = M1^-1 has N[i][j] proportional to minor[j][i]; the witness exists
    // iff minor[j][i]*minor[0][0] == m1[i][j]*minor[0][i]*minor[j][0] on the
    // interior.
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            const FieldElement lhs = f.mul(minor[j * n + i], minor[0]);
            const FieldElement rhs =
                f.mul(m1[i * n + j], f.mul(minor[i], minor[j * n]));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

inline bool rep_semi_orthogonal(const FieldContext& f, const FieldElement* m1, std::size_t n,
                                const FieldElement* minor) {
    // Same test against N^T: minor[i][j]*minor[0][0] == m1[i][j]*minor[i][0]*minor[0][j].
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            const FieldElement lhs = f.mul(minor[i * n + j], minor[0]);
            const FieldElement rhs =
                f.mul(m1[i * n + j], f.mul(minor[i * n], minor[j]));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// det of the 3x3 submatrix of a 4x4 deleting row di and column dj.
inline FieldElement minor3_of_4(const FieldContext& f, const FieldElement m[4][4], std::size_t di,
                                std::size_t dj) {
    std::size_t r[3], c[3], ri = 0, ci = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != di) r[ri++] = i;
    for (std::size_t j = 0; j < 4; ++j)
        if (j != dj) c[ci++] = j;
    const FieldElement a = m[r[0]][c[0]], b = m[r[0]][c[1]], cc = m[r[0]][c[2]];
    const FieldElement d = m[r[1]][c[0]], e = m[r[1]][c[1]], g = m[r[1]][c[2]];
    const FieldElement h = m[r[2]][c[0]], i2 = m[r[2]][c[1]], j2 = m[r[2]][c[2]];
    return f.mul(a, f.mul(e, j2) ^ f.mul(g, i2)) ^ f.mul(b, f.mul(d, j2) ^ f.mul(g, h)) ^
           f.mul(cc, f.mul(d, i2) ^ f.mul(e, h));
}

struct RepSearchTallies {
    std::uint64_t matches = 0;    // candidates with the requested semi-property
    std::uint64_t symmetric = 0;  // of those, symmetric ones
};

}  // namespace detail

namespace detail {

// Pruned scan of 3x3 representatives: R = (a b; c d), M1 bordered by ones.
template <typename LeafFn>
void scan_representatives_3(const FieldContext& f, unsigned threads,
                            std::vector<ShardAcc>& out_accs, const LeafFn& leaf) {
    const unsigned units = f.unit_count();
    const auto shard_fn = [&](std::size_t shard, ShardAcc& acc) {
        const FieldElement a = static_cast<FieldElement>(shard + 1);
        if (a == 1) return;  // 2x2 minor with the border
        for (unsigned vb = 2; vb <= units; ++vb) {
            const FieldElement b = static_cast<FieldElement>(vb);
            if (b == a) continue;
            for (unsigned vc = 2; vc <= units; ++vc) {
                const FieldElement c = static_cast<FieldElement>(vc);
                if (c == a) continue;
                for (unsigned vd = 2; vd <= units; ++vd) {
                    const FieldElement d = static_cast<FieldElement>(vd);
                    if (d == b || d == c) continue;
                    if (f.mul(a, d) == f.mul(b, c)) continue;  // interior 2x2
                    const FieldElement det =
                        f.mul(static_cast<FieldElement>(a ^ 1), static_cast<FieldElement>(d ^ 1)) ^
                        f.mul(static_cast<FieldElement>(b ^ 1), static_cast<FieldElement>(c ^ 1));
                    if (det == 0) continue;
                    leaf(acc, a, b, c, d);
                }
            }
        }
    };
    out_accs = run_sharded<ShardAcc>(units, threads, shard_fn);
}

// Innermost level of the order-4 scan: R's third row, with every minor
// that completes at each cell checked before descending further.
template <typename LeafFn>
inline void scan_row3(const FieldContext& f, unsigned units, FieldElement r[3][3],
                      FieldElement m[4][4], ShardAcc& acc, const LeafFn& leaf);

// Pruned depth-first scan of 4x4 representatives. Every 2x2 and 3x3 minor
// of the bordered matrix is checked as soon as its last cell is placed, so
// subtrees die early; leaf() only sees MDS representatives.
template <typename LeafFn>
void scan_representatives_4(const FieldContext& f, unsigned threads,
                            std::vector<ShardAcc>& out_accs, const LeafFn& leaf) {
    const unsigned units = f.unit_count();

    const auto shard_fn = [&](std::size_t shard, ShardAcc& acc) {
        FieldElement r[3][3];
        r[0][0] = static_cast<FieldElement>(shard + 1);
        if (r[0][0] == 1) return;
        FieldElement m[4][4];
        for (std::size_t i = 0; i < 4; ++i) m[0][i] = m[i][0] = 1;

        for (unsigned v01 = 2; v01 <= units; ++v01) {
            r[0][1] = static_cast<FieldElement>(v01);
            if (r[0][1] == r[0][0]) continue;
            for (unsigned v02 = 2; v02 <= units; ++v02) {
                r[0][2] = static_cast<FieldElement>(v02);
                if (r[0][2] == r[0][0] || r[0][2] == r[0][1]) continue;

                for (unsigned v10 = 2; v10 <= units; ++v10) {
                    r[1][0] = static_cast<FieldElement>(v10);
                    if (r[1][0] == r[0][0]) continue;
                    for (unsigned v11 = 2; v11 <= units; ++v11) {
                        r[1][1] = static_cast<FieldElement>(v11);
                        if (r[1][1] == r[0][1] || r[1][1] == r[1][0]) continue;
                        if (f.mul(r[0][0], r[1][1]) == f.mul(r[0][1], r[1][0])) continue;
                        // bordered 3x3, rows {0,1,2}, cols {0,1,2} of M1
                        if ((f.mul(static_cast<FieldElement>(r[0][0] ^ 1),
                                   static_cast<FieldElement>(r[1][1] ^ 1)) ^
                             f.mul(static_cast<FieldElement>(r[0][1] ^ 1),
                                   static_cast<FieldElement>(r[1][0] ^ 1))) == 0)
                            continue;
                        for (unsigned v12 = 2; v12 <= units; ++v12) {
                            r[1][2] = static_cast<FieldElement>(v12);
                            if (r[1][2] == r[0][2] || r[1][2] == r[1][0] || r[1][2] == r[1][1])
                                continue;
                            if (f.mul(r[0][0], r[1][2]) == f.mul(r[0][2], r[1][0])) continue;
                            if (f.mul(r[0][1], r[1][2]) == f.mul(r[0][2], r[1][1])) continue;
                            if ((f.mul(static_cast<FieldElement>(r[0][0] ^ 1),
                                       static_cast<FieldElement>(r[1][2] ^ 1)) ^
                                 f.mul(static_cast<FieldElement>(r[0][2] ^ 1),
                                       static_cast<FieldElement>(r[1][0] ^ 1))) == 0)
                                continue;
                            if ((f.mul(static_cast<FieldElement>(r[0][1] ^ 1),
                                       static_cast<FieldElement>(r[1][2] ^ 1)) ^
                                 f.mul(static_cast<FieldElement>(r[0][2] ^ 1),
                                       static_cast<FieldElement>(r[1][1] ^ 1))) == 0)
                                continue;
                            // bordered 3x3, rows {0,1,2}, cols {1,2,3}
                            if ((f.mul(r[0][1], r[1][2]) ^ f.mul(r[0][2], r[1][1]) ^
                                 f.mul(r[0][0], r[1][2]) ^ f.mul(r[0][2], r[1][0]) ^
                                 f.mul(r[0][0], r[1][1]) ^ f.mul(r[0][1], r[1][0])) == 0)
                                continue;

                            scan_row3(f, units, r, m, acc, leaf);
                        }
                    }
                }
            }
        }
    };
    out_accs = run_sharded<ShardAcc>(units, threads, shard_fn);
}

template <typename LeafFn>
inline void scan_row3(const FieldContext& f, unsigned units, FieldElement r[3][3],
                      FieldElement m[4][4], ShardAcc& acc, const LeafFn& leaf) {
    for (unsigned v20 = 2; v20 <= units; ++v20) {
        r[2][0] = static_cast<FieldElement>(v20);
        if (r[2][0] == r[0][0] || r[2][0] == r[1][0]) continue;
        for (unsigned v21 = 2; v21 <= units; ++v21) {
            r[2][1] = static_cast<FieldElement>(v21);
            if (r[2][1] == r[0][1] || r[2][1] == r[1][1] || r[2][1] == r[2][0]) continue;
            if (f.mul(r[0][0], r[2][1]) == f.mul(r[0][1], r[2][0])) continue;
            if (f.mul(r[1][0], r[2][1]) == f.mul(r[1][1], r[2][0])) continue;
            if ((f.mul(static_cast<FieldElement>(r[0][0] ^ 1),
                       static_cast<FieldElement>(r[2][1] ^ 1)) ^
                 f.mul(static_cast<FieldElement>(r[0][1] ^ 1),
                       static_cast<FieldElement>(r[2][0] ^ 1))) == 0)
                continue;
            if ((f.mul(static_cast<FieldElement>(r[1][0] ^ 1),
                       static_cast<FieldElement>(r[2][1] ^ 1)) ^
                 f.mul(static_cast<FieldElement>(r[1][1] ^ 1),
                       static_cast<FieldElement>(r[2][0] ^ 1))) == 0)
                continue;
            // rows {1,2,3} of M1, cols {0,1,2}
            if ((f.mul(r[1][0], r[2][1]) ^ f.mul(r[1][1], r[2][0]) ^ f.mul(r[0][0], r[2][1]) ^
                 f.mul(r[0][1], r[2][0]) ^ f.mul(r[0][0], r[1][1]) ^ f.mul(r[0][1], r[1][0])) == 0)
                continue;
            for (unsigned v22 = 2; v22 <= units; ++v22) {
                r[2][2] = static_cast<FieldElement>(v22);
                if (r[2][2] == r[0][2] || r[2][2] == r[1][2] || r[2][2] == r[2][0] ||
                    r[2][2] == r[2][1])
                    continue;
                if (f.mul(r[0][0], r[2][2]) == f.mul(r[0][2], r[2][0])) continue;
                if (f.mul(r[0][1], r[2][2]) == f.mul(r[0][2], r[2][1])) continue;
                if (f.mul(r[1][0], r[2][2]) == f.mul(r[1][2], r[2][0])) continue;
                if (f.mul(r[1][1], r[2][2]) == f.mul(r[1][2], r[2][1])) continue;
                if ((f.mul(static_cast<FieldElement>(r[0][0] ^ 1),
                           static_cast<FieldElement>(r[2][2] ^ 1)) ^
                     f.mul(static_cast<FieldElement>(r[0][2] ^ 1),
                           static_cast<FieldElement>(r[2][0] ^ 1))) == 0)
                    continue;
                if ((f.mul(static_cast<FieldElement>(r[0][1] ^ 1),
                           static_cast<FieldElement>(r[2][2] ^ 1)) ^
                     f.mul(static_cast<FieldElement>(r[0][2] ^ 1),
                           static_cast<FieldElement>(r[2][1] ^ 1))) == 0)
                    continue;
                if ((f.mul(static_cast<FieldElement>(r[1][1] ^ 1),
                           static_cast<FieldElement>(r[2][2] ^ 1)) ^
                     f.mul(static_cast<FieldElement>(r[1][2] ^ 1),
                           static_cast<FieldElement>(r[2][1] ^ 1))) == 0)
                    continue;
                if ((f.mul(static_cast<FieldElement>(r[1][0] ^ 1),
                           static_cast<FieldElement>(r[2][2] ^ 1)) ^
                     f.mul(static_cast<FieldElement>(r[1][2] ^ 1),
                           static_cast<FieldElement>(r[2][0] ^ 1))) == 0)
                    continue;
                // rows {0,1,3} and {0,2,3} of M1, cols {1,2,3}
                if ((f.mul(r[0][1], r[2][2]) ^ f.mul(r[0][2], r[2][1]) ^ f.mul(r[0][0], r[2][2]) ^
                     f.mul(r[0][2], r[2][0]) ^ f.mul(r[0][0], r[2][1]) ^ f.mul(r[0][1], r[2][0])) ==
                    0)
                    continue;
                if ((f.mul(r[1][1], r[2][2]) ^ f.mul(r[1][2], r[2][1]) ^ f.mul(r[1][0], r[2][2]) ^
                     f.mul(r[1][2], r[2][0]) ^ f.mul(r[1][0], r[2][1]) ^ f.mul(r[1][1], r[2][0])) ==
                    0)
                    continue;
                // rows {1,2,3} of M1, cols {0,1,3} and {0,2,3}
                if ((f.mul(r[1][0], r[2][2]) ^ f.mul(r[1][2], r[2][0]) ^ f.mul(r[0][0], r[2][2]) ^
                     f.mul(r[0][2], r[2][0]) ^ f.mul(r[0][0], r[1][2]) ^ f.mul(r[0][2], r[1][0])) ==
                    0)
                    continue;
                if ((f.mul(r[1][1], r[2][2]) ^ f.mul(r[1][2], r[2][1]) ^ f.mul(r[0][1], r[2][2]) ^
                     f.mul(r[0][2], r[2][1]) ^ f.mul(r[0][1], r[1][2]) ^ f.mul(r[0][2], r[1][1])) ==
                    0)
                    continue;
                // det(R)
                const FieldElement det_r =
                    f.mul(r[0][0], f.mul(r[1][1], r[2][2]) ^ f.mul(r[1][2], r[2][1])) ^
                    f.mul(r[0][1], f.mul(r[1][0], r[2][2]) ^ f.mul(r[1][2], r[2][0])) ^
                    f.mul(r[0][2], f.mul(r[1][0], r[2][1]) ^ f.mul(r[1][1], r[2][0]));
                if (det_r == 0) continue;
                // det(M1) = det of (R + all-ones)
                const FieldElement s00 = r[0][0] ^ 1, s01 = r[0][1] ^ 1, s02 = r[0][2] ^ 1;
                const FieldElement s10 = r[1][0] ^ 1, s11 = r[1][1] ^ 1, s12 = r[1][2] ^ 1;
                const FieldElement s20 = r[2][0] ^ 1, s21 = r[2][1] ^ 1, s22 = r[2][2] ^ 1;
                const FieldElement det_m1 = f.mul(s00, f.mul(s11, s22) ^ f.mul(s12, s21)) ^
                                            f.mul(s01, f.mul(s10, s22) ^ f.mul(s12, s20)) ^
                                            f.mul(s02, f.mul(s10, s21) ^ f.mul(s11, s20));
                if (det_m1 == 0) continue;

                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) m[i + 1][j + 1] = r[i][j];
                leaf(acc, m);
            }
        }
    }
}

}  // namespace detail

// Exhaustive count of representative-form semi-involutory or
// semi-orthogonal MDS matrices of order n in {3, 4}. Refuses when the raw
// space (2^m - 1)^((n-1)^2) exceeds 10^10 candidates, unless overridden.
inline std::uint64_t enumerate_representative_class(const FieldContext& f, std::size_t n,
                                                    MatrixClass cls,
                                                    const EnumerateOptions& opts = {},
                                                    const MatrixSink& sink = {}) {
    if (cls != MatrixClass::representative_semi_involutory_mds &&
        cls != MatrixClass::representative_semi_orthogonal_mds) {
        throw std::invalid_argument(std::string("not a representative class: ") +
                                    matrix_class_name(cls));
    }
    if (n != 3 && n != 4) {
        throw std::invalid_argument("representative search supports orders 3 and 4");
    }
    const BigInt space = representative_search_space(f, n);
    if (!opts.override_budget && space > BigInt(10'000'000'000LL)) {
        throw BudgetExceededError(
            "search space of " + space.str() +
                " candidates exceeds the 10^10 budget; pass the override to run anyway",
            space);
    }
    const bool want_si = (cls == MatrixClass::representative_semi_involutory_mds);

    std::vector<detail::ShardAcc> accs;
    if (n == 3) {
        detail::scan_representatives_3(
            f, opts.threads, accs,
            [&](detail::ShardAcc& acc, FieldElement a, FieldElement b, FieldElement c,
                FieldElement d) {
                FieldElement minor[3][3];
                detail::rep3_minors(f, a, b, c, d, minor);
                const FieldElement m1[9] = {1, 1, 1, 1, a, b, 1, c, d};
                const bool hit = want_si ? detail::rep_semi_involutory(f, m1, 3, &minor[0][0])
                                         : detail::rep_semi_orthogonal(f, m1, 3, &minor[0][0]);
                if (!hit) return;
                ++acc.count;
                if (b == c) ++acc.symmetric;
                if (sink) acc.emitted.insert(acc.emitted.end(), m1, m1 + 9);
            });
    } else {
        detail::scan_representatives_4(
            f, opts.threads, accs, [&](detail::ShardAcc& acc, const FieldElement m[4][4]) {
                FieldElement minor[4][4];
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        minor[i][j] = detail::minor3_of_4(f, m, i, j);
                const FieldElement* flat = &m[0][0];
                const bool hit = want_si ? detail::rep_semi_involutory(f, flat, 4, &minor[0][0])
                                         : detail::rep_semi_orthogonal(f, flat, 4, &minor[0][0]);
                if (!hit) return;
                ++acc.count;
                if (m[1][2] == m[2][1] && m[1][3] == m[3][1] && m[2][3] == m[3][2])
                    ++acc.symmetric;
                if (sink) acc.emitted.insert(acc.emitted.end(), flat, flat + 16);
            });
    }

    std::uint64_t count = 0;
    for (const auto& acc : accs) count += acc.count;
    detail::flush_emitted(f, n, accs, sink);
    return count;
}

struct SymmetricSplit {
    std::uint64_t symmetric = 0;
    std::uint64_t non_symmetric = 0;
};

// Splits the semi-involutory MDS representatives of order n by symmetry.
inline SymmetricSplit count_symmetric_representatives(const FieldContext& f, std::size_t n,
                                                      const EnumerateOptions& opts = {}) {
    if (n != 4 || (f.degree() != 3 && f.degree() != 4)) {
        throw std::invalid_argument("symmetric split supported for n = 4, m in {3, 4}");
    }
    const BigInt space = representative_search_space(f, n);
    if (!opts.override_budget && space > BigInt(10'000'000'000LL)) {
        throw BudgetExceededError(
            "search space of " + space.str() +
                " candidates exceeds the 10^10 budget; pass the override to run anyway",
            space);
    }
    std::vector<detail::ShardAcc> accs;
    detail::scan_representatives_4(
        f, opts.threads, accs, [&](detail::ShardAcc& acc, const FieldElement m[4][4]) {
            FieldElement minor[4][4];
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) minor[i][j] = detail::minor3_of_4(f, m, i, j);
            if (!detail::rep_semi_involutory(f, &m[0][0], 4, &minor[0][0])) return;
            ++acc.count;
            if (m[1][2] == m[2][1] && m[1][3] == m[3][1] && m[2][3] == m[3][2]) ++acc.symmetric;
        });
    SymmetricSplit split;
    for (const auto& acc : accs) {
        split.symmetric += acc.symmetric;
        split.non_symmetric += acc.count - acc.symmetric;
    }
    return split;
}

// ---------------------------------------------------------------------------
// Full-space brute force for order 3
// ---------------------------------------------------------------------------

// Independent oracle over every all-nonzero 3x3 matrix. Only m = 3 is
// admitted: the space is (2^3 - 1)^9, about 4.0e7 candidates.
inline std::vector<CountReport> brute_force_counts_3x3(const FieldContext& f,
                                                       const EnumerateOptions& opts = {}) {
    if (f.degree() != 3) {
        throw std::invalid_argument("full 3x3 brute force is restricted to m = 3");
    }
    const unsigned units = f.unit_count();

    struct Tallies {
        std::uint64_t mds = 0, inv = 0, si = 0, orth = 0, so = 0, siso = 0;
    };

    const auto classify = [&f](Tallies& t, const FieldElement e[3][3]) {
        // 2x2 minors, reused as the inverse's adjugate entries.
        FieldElement minor[3][3];
        for (std::size_t i = 0; i < 3; ++i) {
            const std::size_t i1 = (i == 0) ? 1 : 0, i2 = (i == 2) ? 1 : 2;
            for (std::size_t j = 0; j < 3; ++j) {
                const std::size_t j1 = (j == 0) ? 1 : 0, j2 = (j == 2) ? 1 : 2;
                minor[i][j] = f.mul(e[i1][j1], e[i2][j2]) ^ f.mul(e[i1][j2], e[i2][j1]);
            }
        }
        const FieldElement det =
            f.mul(e[0][0], minor[0][0]) ^ f.mul(e[0][1], minor[0][1]) ^ f.mul(e[0][2], minor[0][2]);
        if (det == 0) return;
        ++t.mds;

        bool inv = true;
        for (std::size_t i = 0; i < 3 && inv; ++i) {
            for (std::size_t j = 0; j < 3 && inv; ++j) {
                const FieldElement cell = f.mul(e[i][0], e[0][j]) ^ f.mul(e[i][1], e[1][j]) ^
                                          f.mul(e[i][2], e[2][j]);
                if (cell != (i == j ? 1 : 0)) inv = false;
            }
        }
        if (inv) ++t.inv;

        bool orth = true;
        for (std::size_t i = 0; i < 3 && orth; ++i) {
            for (std::size_t j = 0; j < 3 && orth; ++j) {
                const FieldElement cell = f.mul(e[i][0], e[j][0]) ^ f.mul(e[i][1], e[j][1]) ^
                                          f.mul(e[i][2], e[j][2]);
                if (cell != (i == j ? 1 : 0)) orth = false;
            }
        }
        if (orth) ++t.orth;

        // Semi-properties: with N = M^-1, need rank-1 ratios. Cross-multiplied
        // so the determinant cancels: for i, j >= 1,
        //   N[i][j]N[0][0]m[i][0]m[0][j] == N[i][0]N[0][j]m[i][j]m[0][0],
        // with N[i][j] proportional to minor[j][i].
        bool si = true;
        for (std::size_t i = 1; i < 3 && si; ++i)
            for (std::size_t j = 1; j < 3 && si; ++j)
                if (f.mul(f.mul(minor[j][i], minor[0][0]), f.mul(e[i][0], e[0][j])) !=
                    f.mul(f.mul(minor[0][i], minor[j][0]), f.mul(e[i][j], e[0][0])))
                    si = false;
        if (si) ++t.si;

        bool so = true;
        for (std::size_t i = 1; i < 3 && so; ++i)
            for (std::size_t j = 1; j < 3 && so; ++j)
                if (f.mul(f.mul(minor[i][j], minor[0][0]), f.mul(e[i][0], e[0][j])) !=
                    f.mul(f.mul(minor[i][0], minor[0][j]), f.mul(e[i][j], e[0][0])))
                    so = false;
        if (so) ++t.so;
        if (si && so) ++t.siso;
    };

    const auto shard_fn = [&](std::size_t shard, Tallies& t) {
        FieldElement e[3][3];
        e[0][0] = static_cast<FieldElement>(shard / units + 1);
        e[0][1] = static_cast<FieldElement>(shard % units + 1);
        for (unsigned v02 = 1; v02 <= units; ++v02) {
            e[0][2] = static_cast<FieldElement>(v02);
            for (unsigned v10 = 1; v10 <= units; ++v10) {
                e[1][0] = static_cast<FieldElement>(v10);
                for (unsigned v11 = 1; v11 <= units; ++v11) {
                    e[1][1] = static_cast<FieldElement>(v11);
                    if (f.mul(e[0][0], e[1][1]) == f.mul(e[0][1], e[1][0])) continue;
                    for (unsigned v12 = 1; v12 <= units; ++v12) {
                        e[1][2] = static_cast<FieldElement>(v12);
                        if (f.mul(e[0][0], e[1][2]) == f.mul(e[0][2], e[1][0])) continue;
                        if (f.mul(e[0][1], e[1][2]) == f.mul(e[0][2], e[1][1])) continue;
                        for (unsigned v20 = 1; v20 <= units; ++v20) {
                            e[2][0] = static_cast<FieldElement>(v20);
                            for (unsigned v21 = 1; v21 <= units; ++v21) {
                                e[2][1] = static_cast<FieldElement>(v21);
                                if (f.mul(e[0][0], e[2][1]) == f.mul(e[0][1], e[2][0])) continue;
                                if (f.mul(e[1][0], e[2][1]) == f.mul(e[1][1], e[2][0])) continue;
                                for (unsigned v22 = 1; v22 <= units; ++v22) {
                                    e[2][2] = static_cast<FieldElement>(v22);
                                    if (f.mul(e[0][0], e[2][2]) == f.mul(e[0][2], e[2][0]))
                                        continue;
                                    if (f.mul(e[0][1], e[2][2]) == f.mul(e[0][2], e[2][1]))
                                        continue;
                                    if (f.mul(e[1][0], e[2][2]) == f.mul(e[1][2], e[2][0]))
                                        continue;
                                    if (f.mul(e[1][1], e[2][2]) == f.mul(e[1][2], e[2][1]))
                                        continue;
                                    classify(t, e);
                                }
                            }
                        }
                    }
                }
            }
        }
    };

    const auto tallies =
        detail::run_sharded<Tallies>(static_cast<std::size_t>(units) * units, opts.threads,
                                     shard_fn);
    Tallies total;
    for (const auto& t : tallies) {
        total.mds += t.mds;
        total.inv += t.inv;
        total.si += t.si;
        total.orth += t.orth;
        total.so += t.so;
        total.siso += t.siso;
    }

    const unsigned m = f.degree();
    std::vector<CountReport> reports;
    reports.push_back(make_count_report(MatrixClass::mds, 3, m, BigInt(total.mds), std::nullopt,
                                        CountMethod::exhaustive));
    reports.push_back(make_count_report(MatrixClass::involutory_mds, 3, m, BigInt(total.inv),
                                        count_closed_form(MatrixClass::involutory_mds, 3, m),
                                        CountMethod::exhaustive));
    reports.push_back(make_count_report(MatrixClass::semi_involutory_mds, 3, m, BigInt(total.si),
                                        count_closed_form(MatrixClass::semi_involutory_mds, 3, m),
                                        CountMethod::exhaustive));
    reports.push_back(make_count_report(MatrixClass::orthogonal_mds, 3, m, BigInt(total.orth),
                                        count_closed_form(MatrixClass::orthogonal_mds, 3, m),
                                        CountMethod::exhaustive));
    reports.push_back(make_count_report(MatrixClass::semi_orthogonal_mds, 3, m, BigInt(total.so),
                                        count_closed_form(MatrixClass::semi_orthogonal_mds, 3, m),
                                        CountMethod::exhaustive));
    reports.push_back(make_count_report(MatrixClass::si_and_so_mds, 3, m, BigInt(total.siso),
                                        count_closed_form(MatrixClass::si_and_so_mds, 3, m),
                                        CountMethod::exhaustive));
    return reports;
}

}  // namespace mdslab
