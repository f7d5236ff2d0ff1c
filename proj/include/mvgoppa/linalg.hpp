#ifndef MVGOPPA_LINALG_HPP
#define MVGOPPA_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace mvgoppa {

/// Dense matrix over a runtime finite field, row-major. Value semantics;
/// all free operations below are pure.
class MatrixGF {
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> d_;

public:
    MatrixGF() = default;
    MatrixGF(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

    static MatrixGF identity(const Field& f, std::size_t n) {
        MatrixGF I(f, n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
        return I;
    }
    static MatrixGF from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows,
                              std::size_t cols) {
        MatrixGF M(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeMismatch("row length");
            std::copy(rows[i].begin(), rows[i].end(), M.d_.begin() + i * cols);
        }
        return M;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
    std::span<const Elem> row(std::size_t i) const {
        return {d_.data() + i * cols_, cols_};
    }
    std::span<Elem> row(std::size_t i) { return {d_.data() + i * cols_, cols_}; }

    bool operator==(const MatrixGF& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

    MatrixGF transpose() const {
        MatrixGF T(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
        return T;
    }

    MatrixGF operator*(const MatrixGF& o) const {
        if (f_ != o.f_) throw FieldMismatch();
        if (cols_ != o.rows_) throw ShapeMismatch("inner dimensions");
        MatrixGF R(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    R(i, j) = f_.add(R(i, j), f_.mul(a, o(k, j)));
            }
        return R;
    }

    static MatrixGF vstack(const MatrixGF& a, const MatrixGF& b) {
        if (a.f_ != b.f_) throw FieldMismatch();
        if (a.cols_ != b.cols_) throw ShapeMismatch("column counts");
        MatrixGF R(a.f_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.d_.begin(), a.d_.end(), R.d_.begin());
        std::copy(b.d_.begin(), b.d_.end(), R.d_.begin() + a.d_.size());
        return R;
    }

    /// Drops all-zero rows.
    MatrixGF without_zero_rows() const {
        std::vector<std::vector<Elem>> keep;
        for (std::size_t i = 0; i < rows_; ++i) {
            auto r = row(i);
            if (std::any_of(r.begin(), r.end(), [](Elem x) { return x != 0; }))
                keep.emplace_back(r.begin(), r.end());
        }
        return from_rows(f_, keep, cols_);
    }
};

struct RrefResult {
    MatrixGF R;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; rank = pivots.size(); row space preserved.
inline RrefResult rref(const MatrixGF& M) {
    const Field& F = M.field();
    MatrixGF R = M;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
        std::size_t pr = r;
        while (pr < R.rows() && R(pr, c) == 0) ++pr;
        if (pr == R.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R(pr, j), R(r, j));
        const Elem iv = F.inv(R(r, c));
        for (std::size_t j = 0; j < R.cols(); ++j) R(r, j) = F.mul(iv, R(r, j));
        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (i == r || R(i, c) == 0) continue;
            const Elem fct = R(i, c);
            for (std::size_t j = 0; j < R.cols(); ++j)
                R(i, j) = F.sub(R(i, j), F.mul(fct, R(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(R), std::move(pivots)};
}

inline std::size_t rank(const MatrixGF& M) { return rref(M).pivots.size(); }

/// Basis of the right null space {x : M x^T = 0}, returned as rows of a
/// (cols - rank) x cols matrix in RREF-derived canonical order.
inline MatrixGF kernel(const MatrixGF& M) {
    const Field& F = M.field();
    auto [R, piv] = rref(M);
    const std::size_t n = M.cols();
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Elem> v(n, 0);
        v[fc] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(R(r, fc));
        basis.push_back(std::move(v));
    }
    return MatrixGF::from_rows(F, basis, n);
}

/// Block Kronecker product, dimensions (r_a r_b) x (c_a c_b).
inline MatrixGF kronecker(const MatrixGF& A, const MatrixGF& B) {
    if (A.field() != B.field()) throw FieldMismatch();
    const Field& F = A.field();
    MatrixGF R(F, A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const Elem a = A(i, j);
            if (a == 0) continue;
            for (std::size_t k = 0; k < B.rows(); ++k)
                for (std::size_t l = 0; l < B.cols(); ++l)
                    R(i * B.rows() + k, j * B.cols() + l) = F.mul(a, B(k, l));
        }
    return R;
}

/// Canonical row-space form: RREF with zero rows stripped.
inline MatrixGF rowspace_canonical(const MatrixGF& M) {
    return rref(M).R.without_zero_rows();
}

inline bool rowspace_equal(const MatrixGF& A, const MatrixGF& B) {
    if (A.field() != B.field()) throw FieldMismatch();
    if (A.cols() != B.cols()) throw ShapeMismatch("ambient lengths");
    return rowspace_canonical(A) == rowspace_canonical(B);
}

/// rowspace(B) subseteq rowspace(A)?
inline bool rowspace_contains(const MatrixGF& A, const MatrixGF& B) {
    if (A.field() != B.field()) throw FieldMismatch();
    if (A.cols() != B.cols()) throw ShapeMismatch("ambient lengths");
    return rank(A) == rank(MatrixGF::vstack(A, B));
}

/// Basis of rowspace(A) cap rowspace(B): the kernel of the two stacked dual
/// (parity) descriptions.
inline MatrixGF rowspace_intersect(const MatrixGF& A, const MatrixGF& B) {
    if (A.field() != B.field()) throw FieldMismatch();
    if (A.cols() != B.cols()) throw ShapeMismatch("ambient lengths");
    return kernel(MatrixGF::vstack(kernel(A), kernel(B)));
}

struct DistanceResult {
    unsigned d = 0;
    bool exact = false;
};

namespace detail {

// Rank of the column subset `cols` of H, early-exiting when full.
inline bool columns_independent(const MatrixGF& H, std::span<const std::size_t> cols,
                                std::vector<std::vector<Elem>>& scratch) {
    const Field& F = H.field();
    const std::size_t m = H.rows();
    scratch.clear();
    for (std::size_t c : cols) {
        std::vector<Elem> v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = H(i, c);
        // eliminate against the accumulated reduced rows
        for (const auto& b : scratch) {
            std::size_t lead = 0;
            while (lead < m && b[lead] == 0) ++lead;
            if (lead < m && v[lead] != 0) {
                const Elem fct = v[lead];
                for (std::size_t i = lead; i < m; ++i)
                    v[i] = F.sub(v[i], F.mul(fct, b[i]));
            }
        }
        std::size_t lead = 0;
        while (lead < m && v[lead] == 0) ++lead;
        if (lead == m) return false;  // dependent
        const Elem iv = F.inv(v[lead]);
        for (std::size_t i = lead; i < m; ++i) v[i] = F.mul(iv, v[i]);
        scratch.push_back(std::move(v));
    }
    return true;
}

// Exhaustive minimum weight over all nonzero codewords, enumerated through a
// mixed-radix counter over message coordinates with incremental row updates.
inline unsigned enumerate_min_weight(const MatrixGF& G) {
    const Field& F = G.field();
    const std::size_t k = G.rows(), n = G.cols();
    const std::uint64_t q = F.q();
    std::vector<Elem> digits(k, 0);
    std::vector<Elem> word(n, 0);
    unsigned best = static_cast<unsigned>(n) + 1;
    while (true) {
        bool overflow = true;
        for (std::size_t i = 0; i < k; ++i) {
            const Elem oldc = digits[i];
            const Elem newc = (oldc + 1 < q) ? oldc + 1 : 0;
            const Elem delta = F.sub(newc, oldc);
            for (std::size_t j = 0; j < n; ++j)
                word[j] = F.add(word[j], F.mul(delta, G(i, j)));
            digits[i] = newc;
            if (newc != 0) {
                overflow = false;
                break;
            }
        }
        if (overflow) break;
        unsigned w = 0;
        for (std::size_t j = 0; j < n; ++j) w += (word[j] != 0);
        if (w > 0 && w < best) {
            best = w;
            if (best == 1) break;
        }
    }
    return best;
}

}  // namespace detail

constexpr std::uint64_t kEnumerationMaxWords = 1ull << 22;

/// Exact minimum distance of the code spanned by G, or a verified lower bound
/// (d >= returned value) with exact = false when `cap` stops the search.
///
/// Column-dependency search on a parity check H: d > w iff every w columns of
/// H are independent; w ascends and the search always terminates by
/// w = n - k + 1. When the remaining subset work at some level exceeds the
/// cost of enumerating all q^k codewords (and that is feasible), the
/// enumeration fallback finishes the job.
inline DistanceResult min_distance(const MatrixGF& G,
                                   std::optional<unsigned> cap = std::nullopt) {
    const std::size_t n = G.cols();
    const MatrixGF Gc = rowspace_canonical(G);
    const std::size_t k = Gc.rows();
    if (k == 0) throw ZeroCode();
    if (k == n) return {1, true};

    const MatrixGF H = rref(kernel(Gc)).R;
    const unsigned dmax = static_cast<unsigned>(n - k + 1);

    // q^k, saturated
    long double words = 1.0L;
    for (std::size_t i = 0; i < k; ++i) words *= static_cast<long double>(G.field().q());
    const bool can_enumerate = words <= static_cast<long double>(kEnumerationMaxWords);

    std::vector<std::size_t> comb;
    std::vector<std::vector<Elem>> scratch;
    for (unsigned w = 1; w <= dmax; ++w) {
        if (cap && w > *cap) return {*cap + 1, false};
        // C(n, w) vs enumeration cost
        if (can_enumerate) {
            long double subsets = 1.0L;
            for (unsigned i = 0; i < w; ++i)
                subsets = subsets * static_cast<long double>(n - i) / (i + 1);
            if (subsets * w * static_cast<long double>(H.rows()) > words * n) {
                unsigned d = detail::enumerate_min_weight(Gc);
                if (cap && d > *cap) return {*cap + 1, false};
                return {d, true};
            }
        }
        comb.resize(w);
        for (unsigned i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            if (!detail::columns_independent(H, comb, scratch)) return {w, true};
            bool advanced = false;
            for (std::size_t i = w; i-- > 0;) {
                if (comb[i] < n - w + i) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return {dmax, true};  // every (n-k+1)-subset of an (n-k)-row H is dependent
}

}  // namespace mvgoppa

#endif
