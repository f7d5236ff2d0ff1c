#ifndef MVGOPPA_CODES_HPP
#define MVGOPPA_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace mvgoppa {

/// A linear code held in canonical form: the RREF of any generator matrix,
/// zero rows stripped. Code equality is literal matrix equality of this form.
class LinearCode {
    Field f_;
    MatrixGF gen_;

public:
    explicit LinearCode(const MatrixGF& any_gen)
        : f_(any_gen.field()), gen_(rowspace_canonical(any_gen)) {}

    static LinearCode zero(const Field& f, std::size_t n) {
        return LinearCode(MatrixGF(f, 0, n));
    }
    static LinearCode full(const Field& f, std::size_t n) {
        return LinearCode(MatrixGF::identity(f, n));
    }

    const Field& field() const { return f_; }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const MatrixGF& gen() const { return gen_; }

    bool operator==(const LinearCode& o) const { return f_ == o.f_ && gen_ == o.gen_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }
};

inline LinearCode dual(const LinearCode& C) { return LinearCode(kernel(C.gen())); }

/// inner subseteq outer?
inline bool contains(const LinearCode& outer, const LinearCode& inner) {
    return rowspace_contains(outer.gen(), inner.gen());
}

inline LinearCode intersect(const LinearCode& A, const LinearCode& B) {
    return LinearCode(rowspace_intersect(A.gen(), B.gen()));
}

/// Hull(C) = C cap C^perp.
inline LinearCode hull(const LinearCode& C) { return intersect(C, dual(C)); }

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    unsigned d = 0;  // 0 for the zero code (undefined)
    bool d_exact = true;
};

/// n, k and the minimum distance (via min_distance, honoring `cap`).
inline CodeParams code_params(const LinearCode& C,
                              std::optional<unsigned> cap = std::nullopt) {
    CodeParams p;
    p.n = C.n();
    p.k = C.k();
    if (C.k() == 0) return p;
    auto r = min_distance(C.gen(), cap);
    p.d = r.d;
    p.d_exact = r.exact;
    return p;
}

/// A set of exponent tuples inside the reduced footprint prod {0..n_j-1}.
class ExponentSet {
    std::vector<std::size_t> shape_;
    std::vector<std::vector<std::size_t>> members_;  // sorted, unique

public:
    ExponentSet(std::vector<std::size_t> shape,
                std::vector<std::vector<std::size_t>> members)
        : shape_(std::move(shape)), members_(std::move(members)) {
        for (const auto& a : members_) {
            if (a.size() != shape_.size()) throw ShapeMismatch("exponent arity");
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[j] >= shape_[j])
                    throw ExponentOutOfFootprint(
                        "a_" + std::to_string(j + 1) + " = " + std::to_string(a[j]) +
                        " >= " + std::to_string(shape_[j]));
        }
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    /// prod_j {0, ..., k_j - 1}.
    static ExponentSet box(const std::vector<std::size_t>& shape,
                           const std::vector<std::size_t>& kvec) {
        if (kvec.size() != shape.size()) throw ShapeMismatch("kvec arity");
        std::vector<std::vector<std::size_t>> mem;
        std::vector<std::size_t> cur(shape.size(), 0);
        const bool empty = std::any_of(kvec.begin(), kvec.end(),
                                       [](std::size_t k) { return k == 0; });
        if (!empty) {
            while (true) {
                mem.push_back(cur);
                std::size_t j = shape.size();
                while (j-- > 0) {
                    if (++cur[j] < kvec[j]) break;
                    cur[j] = 0;
                    if (j == 0) return ExponentSet(shape, std::move(mem));
                }
            }
        }
        return ExponentSet(shape, std::move(mem));
    }

    static ExponentSet full(const std::vector<std::size_t>& shape) {
        return box(shape, shape);
    }

    /// The augmented-Cartesian set: the full footprint minus the top corner
    /// box prod_j {k_j, ..., n_j - 1}.
    static ExponentSet acar(const std::vector<std::size_t>& shape,
                            const std::vector<std::size_t>& kvec) {
        if (kvec.size() != shape.size()) throw ShapeMismatch("kvec arity");
        for (std::size_t j = 0; j < shape.size(); ++j)
            if (kvec[j] > shape[j]) throw BadDimension("k_j exceeds n_j");
        std::vector<std::vector<std::size_t>> mem;
        std::vector<std::size_t> cur(shape.size(), 0);
        while (true) {
            bool in_corner = true;
            for (std::size_t j = 0; j < shape.size(); ++j)
                if (cur[j] < kvec[j]) {
                    in_corner = false;
                    break;
                }
            if (!in_corner) mem.push_back(cur);
            std::size_t j = shape.size();
            bool done = false;
            while (j-- > 0) {
                if (++cur[j] < shape[j]) break;
                cur[j] = 0;
                if (j == 0) done = true;
            }
            if (done) break;
        }
        return ExponentSet(shape, std::move(mem));
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    const std::vector<std::vector<std::size_t>>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
};

/// GRS(S, k, g): rows (g(s_i)^{-1} s_i^a), 0 <= a < k. An [n, k, n-k+1] code.
inline LinearCode grs(const Field& F, std::span<const Elem> pts, std::size_t k,
                      const UniPoly& g) {
    if (g.field() != F) throw FieldMismatch();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw DuplicatePoints();
    if (k > pts.size()) throw BadDimension("k exceeds the number of points");
    std::vector<Elem> w(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Elem v = g(pts[i]);
        if (v == 0) throw GeneratorVanishes(std::to_string(pts[i]));
        w[i] = F.inv(v);
    }
    MatrixGF G(F, k, pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Elem mono = 1;
        for (std::size_t a = 0; a < k; ++a) {
            G(a, i) = F.mul(w[i], mono);
            mono = F.mul(mono, pts[i]);
        }
    }
    return LinearCode(G);
}

namespace detail {

inline void check_nonvanishing(const ProductPoly& g, const CartesianSet& S) {
    std::string where;
    if (g.vanishes_somewhere_on(S, &where)) throw GeneratorVanishes(where);
}

// Evaluation-form generator of T(S, kvec, g): rows (g(s_i)^{-1} s_i^a) over
// the exponent box; identical to the Kronecker product of the factor GRS
// generators under the shared column enumeration.
inline MatrixGF tensor_eval_gen(const CartesianSet& S,
                                std::span<const std::size_t> kvec,
                                const ProductPoly& g) {
    const Field& F = S.field();
    const auto wvals = values_on_grid(S, g);
    std::vector<Elem> winv(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) winv[i] = F.inv(wvals[i]);
    // per-variable power tables
    std::vector<std::vector<std::vector<Elem>>> pw(S.m());
    for (std::size_t j = 0; j < S.m(); ++j) {
        pw[j].resize(S.size(j));
        for (std::size_t u = 0; u < S.size(j); ++u) {
            pw[j][u].resize(std::max<std::size_t>(kvec[j], 1));
            pw[j][u][0] = 1;
            for (std::size_t e = 1; e < pw[j][u].size(); ++e)
                pw[j][u][e] = F.mul(pw[j][u][e - 1], S.component(j)[u]);
        }
    }
    std::size_t krows = 1;
    for (auto kj : kvec) krows *= kj;
    MatrixGF G(F, krows, S.n());
    std::vector<std::size_t> aexp(S.m(), 0), ptidx(S.m(), 0);
    const auto shape = S.sizes();
    for (std::size_t r = 0; r < krows; ++r) {
        std::size_t rem = r;
        for (std::size_t j = S.m(); j-- > 0;) {
            aexp[j] = rem % kvec[j];
            rem /= kvec[j];
        }
        for (std::size_t i = 0; i < S.n(); ++i) {
            MultiPoly::decode_all(i, shape, ptidx);
            Elem v = winv[i];
            for (std::size_t j = 0; j < S.m(); ++j) v = F.mul(v, pw[j][ptidx[j]][aexp[j]]);
            G(r, i) = v;
        }
    }
    return G;
}

}  // namespace detail

/// T(S, kvec, g) = tensor of the factor GRS(S_j, k_j, g_j) codes, column
/// order bound to the S enumeration. [n, prod k_j, prod (n_j - k_j + 1)].
inline LinearCode tensor_grs(const CartesianSet& S, std::span<const std::size_t> kvec,
                             const ProductPoly& g) {
    if (g.field() != S.field()) throw FieldMismatch();
    if (kvec.size() != S.m() || g.m() != S.m()) throw ShapeMismatch("arity");
    for (std::size_t j = 0; j < S.m(); ++j)
        if (kvec[j] > S.size(j)) throw BadDimension("k_j exceeds n_j");
    detail::check_nonvanishing(g, S);
    for (auto kj : kvec)
        if (kj == 0) return LinearCode::zero(S.field(), S.n());
    return LinearCode(detail::tensor_eval_gen(S, kvec, g));
}

/// T(S, g): the tensor of GRS codes via Goppa polynomials, k_j = deg(g_j).
/// Degrees above n_j saturate at the full factor space, matching the
/// evaluation semantics; the code then coincides with T(S, min(deg g_j, n_j), g).
inline LinearCode tensor_goppa(const CartesianSet& S, const ProductPoly& g) {
    if (g.field() != S.field()) throw FieldMismatch();
    if (g.m() != S.m()) throw ShapeMismatch("arity");
    detail::check_nonvanishing(g, S);
    std::vector<std::size_t> kvec(S.m());
    for (std::size_t j = 0; j < S.m(); ++j)
        kvec[j] = std::min<std::size_t>(static_cast<std::size_t>(g.degree_in(j)),
                                         S.size(j));
    return tensor_grs(S, kvec, g);
}

/// Generalized monomial-Cartesian code C(S, A, h) with explicit weight values
/// h(s_i); rows (h(s_i)^{-1} s_i^a) for a in A. Dimension |A|.
inline LinearCode monomial_cartesian(const CartesianSet& S, const ExponentSet& A,
                                     std::span<const Elem> hvals) {
    const Field& F = S.field();
    if (A.shape() != S.sizes()) throw ShapeMismatch("exponent footprint vs grid");
    if (hvals.size() != S.n()) throw ShapeMismatch("weight count");
    std::vector<Elem> winv(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) {
        if (hvals[i] == 0) throw DenominatorVanishes("s_" + std::to_string(i + 1));
        winv[i] = F.inv(hvals[i]);
    }
    MatrixGF G(F, A.size(), S.n());
    const auto shape = S.sizes();
    std::vector<std::size_t> ptidx(S.m());
    for (std::size_t r = 0; r < A.size(); ++r) {
        const auto& a = A.members()[r];
        for (std::size_t i = 0; i < S.n(); ++i) {
            MultiPoly::decode_all(i, shape, ptidx);
            Elem v = winv[i];
            for (std::size_t j = 0; j < S.m(); ++j)
                v = F.mul(v, F.pow(S.component(j)[ptidx[j]],
                                   static_cast<long long>(a[j])));
            G(r, i) = v;
        }
    }
    return LinearCode(G);
}

inline LinearCode monomial_cartesian(const CartesianSet& S, const ExponentSet& A,
                                     const ProductPoly& h) {
    detail::check_nonvanishing(h, S);
    return monomial_cartesian(S, A, values_on_grid(S, h));
}

inline LinearCode monomial_cartesian(const CartesianSet& S, const ExponentSet& A,
                                     const MultiPoly& h) {
    return monomial_cartesian(S, A, values_on_grid(S, h));
}

/// ACar(S, kvec, h): exponent set = full footprint minus prod {k_j..n_j-1}.
/// [n, prod n_j - prod (n_j - k_j), min (n_j - k_j + 1)] when nontrivial.
template <class Weight>
inline LinearCode acar(const CartesianSet& S, std::span<const std::size_t> kvec,
                       const Weight& h) {
    std::vector<std::size_t> kv(kvec.begin(), kvec.end());
    return monomial_cartesian(S, ExponentSet::acar(S.sizes(), kv), h);
}

/// ACar(S, g) = ACar(S, (n_j - deg g_j), L/g), the dual of T(S, g). Degrees
/// above n_j floor the corresponding k_j at zero (see tensor_goppa).
inline LinearCode acar_g(const CartesianSet& S, const ProductPoly& g) {
    if (g.field() != S.field()) throw FieldMismatch();
    if (g.m() != S.m()) throw ShapeMismatch("arity");
    detail::check_nonvanishing(g, S);
    std::vector<std::size_t> kvec(S.m());
    for (std::size_t j = 0; j < S.m(); ++j) {
        const auto d = static_cast<std::size_t>(g.degree_in(j));
        kvec[j] = d >= S.size(j) ? 0 : S.size(j) - d;
    }
    // weights are the pointwise values of L/g; the interpolated representative
    // itself is not needed here
    const Field& F = S.field();
    const auto Lvals = values_on_grid(S, S.big_L());
    const auto gvals = values_on_grid(S, g);
    std::vector<Elem> w(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) w[i] = F.div(Lvals[i], gvals[i]);
    return monomial_cartesian(S, ExponentSet::acar(S.sizes(), kvec), w);
}

namespace detail {

// Each extension row becomes t base-field rows through basis coordinates:
// sum_i r_i c_i = 0 over F_{q^t} with c in F_q^n iff every basis coordinate
// of the syndrome vanishes.
inline MatrixGF expand_rows_over_base(const FieldTower& tower, const MatrixGF& M) {
    const std::uint32_t t = tower.t();
    MatrixGF out(tower.base(), M.rows() * t, M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) {
            const auto coords = tower.basis_expand(M(r, c));
            for (std::uint32_t l = 0; l < t; ++l) out(r * t + l, c) = coords[l];
        }
    return out;
}

}  // namespace detail

/// The multivariate Goppa code Gamma(S, g) as the F_q-kernel of a generator
/// matrix of T(S, g), computed by basis expansion of the rows.
inline LinearCode goppa_parity(const FieldTower& tower, const CartesianSet& S,
                               const ProductPoly& g) {
    if (S.field() != tower.ext()) throw FieldMismatch();
    if (g.field() != tower.ext()) throw FieldMismatch();
    detail::check_nonvanishing(g, S);
    std::vector<std::size_t> kvec(S.m());
    for (std::size_t j = 0; j < S.m(); ++j) {
        const int d = g.degree_in(j);
        kvec[j] = std::min<std::size_t>(static_cast<std::size_t>(d), S.size(j));
        if (kvec[j] == 0) return LinearCode::full(tower.base(), S.n());
    }
    const MatrixGF T = detail::tensor_eval_gen(S, kvec, g);
    return LinearCode(kernel(detail::expand_rows_over_base(tower, T)));
}

/// C_q = {c in C : c in F_q^n}: kernel of the basis-expanded parity check.
inline LinearCode subfield_subcode(const FieldTower& tower, const LinearCode& C) {
    if (C.field() != tower.ext()) throw FieldMismatch();
    const MatrixGF H = kernel(C.gen());
    return LinearCode(kernel(detail::expand_rows_over_base(tower, H)));
}

/// Gamma(S, g) through the other route: the subfield subcode of ACar(S, g).
/// Row-space equal to goppa_parity on every instance.
inline LinearCode goppa_subfield(const FieldTower& tower, const CartesianSet& S,
                                 const ProductPoly& g) {
    if (S.field() != tower.ext()) throw FieldMismatch();
    return subfield_subcode(tower, acar_g(S, g));
}

/// tr(C) = {(tr(c_1), ..., tr(c_n)) : c in C}, spanned over F_q by the
/// entrywise traces of basis multiples of the generator rows.
inline LinearCode trace_code(const FieldTower& tower, const LinearCode& C) {
    if (C.field() != tower.ext()) throw FieldMismatch();
    const Field& E = tower.ext();
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < C.k(); ++r)
        for (Elem b : tower.basis()) {
            std::vector<Elem> out(C.n());
            for (std::size_t i = 0; i < C.n(); ++i)
                out[i] = tower.trace(E.mul(b, C.gen()(r, i)));
            rows.push_back(std::move(out));
        }
    return LinearCode(MatrixGF::from_rows(tower.base(), rows, C.n()));
}

}  // namespace mvgoppa

#endif
