#ifndef MVGOPPA_POLY_HPP
#define MVGOPPA_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace mvgoppa {

/// Univariate polynomial over a runtime field. Coefficients low-to-high with
/// trailing zeros stripped; the zero polynomial has an empty coefficient list
/// and degree() == kDegreeOfZero.
class UniPoly {
    Field f_;
    std::vector<Elem> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

public:
    static constexpr int kDegreeOfZero = -1;

    UniPoly() = default;
    explicit UniPoly(Field f) : f_(std::move(f)) {}
    UniPoly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const Field& f) { return UniPoly(f); }
    static UniPoly constant(const Field& f, Elem c) { return UniPoly(f, {c}); }
    static UniPoly one(const Field& f) { return constant(f, 1); }
    static UniPoly x(const Field& f) { return UniPoly(f, {0, 1}); }
    static UniPoly monomial(const Field& f, std::size_t k, Elem c = 1) {
        std::vector<Elem> v(k + 1, 0);
        v[k] = c;
        return UniPoly(f, std::move(v));
    }

    const Field& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const UniPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Elem operator()(Elem s) const {
        Elem v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = f_.add(f_.mul(v, s), c_[i]);
        return v;
    }

    UniPoly operator+(const UniPoly& o) const {
        check_field(o);
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
        return UniPoly(f_, std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_.neg(c_[i]);
        return UniPoly(f_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        check_field(o);
        if (is_zero() || o.is_zero()) return zero(f_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
        }
        return UniPoly(f_, std::move(r));
    }
    UniPoly scaled(Elem c) const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_.mul(c, c_[i]);
        return UniPoly(f_, std::move(r));
    }

    /// Quotient and remainder; deg r < deg divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const {
        check_field(g);
        if (g.is_zero()) throw MathError("polynomial division by zero");
        if (degree() < g.degree()) return {zero(f_), *this};
        std::vector<Elem> rem = c_;
        std::vector<Elem> quo(c_.size() - g.c_.size() + 1, 0);
        const Elem ilg = f_.inv(g.leading());
        for (std::size_t d = rem.size(); d-- > 0 && d + 1 >= g.c_.size();) {
            const Elem c = f_.mul(rem[d], ilg);
            if (c == 0) continue;
            const std::size_t shift = d - (g.c_.size() - 1);
            quo[shift] = c;
            for (std::size_t i = 0; i < g.c_.size(); ++i)
                rem[shift + i] = f_.sub(rem[shift + i], f_.mul(c, g.c_[i]));
        }
        return {UniPoly(f_, std::move(quo)), UniPoly(f_, std::move(rem))};
    }
    UniPoly operator%(const UniPoly& g) const { return divmod(g).second; }
    UniPoly operator/(const UniPoly& g) const { return divmod(g).first; }

    bool divides(const UniPoly& f) const { return !is_zero() && (f % *this).is_zero(); }

    UniPoly monic() const {
        if (is_zero() || leading() == 1) return *this;
        return scaled(f_.inv(leading()));
    }

    /// Term-by-term formal derivative in characteristic p.
    UniPoly derivative() const {
        if (c_.size() <= 1) return zero(f_);
        std::vector<Elem> r(c_.size() - 1, 0);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            Elem acc = 0;
            for (std::uint32_t rep = 0; rep < i % f_.p(); ++rep) acc = f_.add(acc, c_[i]);
            r[i - 1] = acc;
        }
        return UniPoly(f_, std::move(r));
    }

private:
    void check_field(const UniPoly& o) const {
        if (f_ != o.f_) throw FieldMismatch();
    }
};

/// Monic gcd; gcd(0,0) = 0.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    if (a.field() != b.field()) throw FieldMismatch();
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic lcm with lcm * gcd associate to f * g. Zero if either input is zero;
/// both zero is undefined.
inline UniPoly uni_lcm(const UniPoly& a, const UniPoly& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (a.is_zero() && b.is_zero()) throw BothZero();
    if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.field());
    return ((a / uni_gcd(a, b)) * b).monic();
}

/// Unique polynomial of degree < |pts| through the given values (Lagrange).
inline UniPoly uni_interpolate(const Field& F, std::span<const Elem> pts,
                               std::span<const Elem> values) {
    if (pts.size() != values.size()) throw ShapeMismatch("value count");
    UniPoly r = UniPoly::zero(F);
    for (std::size_t u = 0; u < pts.size(); ++u) {
        if (values[u] == 0) continue;
        UniPoly num = UniPoly::one(F);
        Elem den = 1;
        for (std::size_t v = 0; v < pts.size(); ++v) {
            if (v == u) continue;
            num = num * UniPoly(F, {F.neg(pts[v]), 1});
            den = F.mul(den, F.sub(pts[u], pts[v]));
        }
        r = r + num.scaled(F.div(values[u], den));
    }
    return r;
}

/// L(x) = prod (x - s) over the given distinct points; monic of degree |pts|.
inline UniPoly vanishing_poly(const Field& f, std::span<const Elem> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw DuplicatePoints();
    UniPoly L = UniPoly::one(f);
    for (Elem s : pts) L = L * UniPoly(f, {f.neg(s), 1});
    return L;
}

class ProductPoly;

/// An ordered grid S = S_1 x ... x S_m inside F_{q^t}^m, with the fixed
/// lexicographic point enumeration (last coordinate fastest) that every
/// generator matrix column order in this library is bound to.
class CartesianSet {
    Field f_;
    std::vector<std::vector<Elem>> comps_;
    std::size_t n_ = 1;

public:
    CartesianSet(Field f, std::vector<std::vector<Elem>> components)
        : f_(std::move(f)), comps_(std::move(components)) {
        if (comps_.empty()) throw BadDimension("at least one coordinate required");
        for (const auto& S : comps_) {
            if (S.empty()) throw BadDimension("empty coordinate set");
            for (std::size_t i = 0; i < S.size(); ++i) {
                if (!f_.is_valid_elem(S[i])) throw BadIndex("point code out of field");
                for (std::size_t j = i + 1; j < S.size(); ++j)
                    if (S[i] == S[j]) throw DuplicatePoints();
            }
            n_ *= S.size();
        }
    }

    const Field& field() const { return f_; }
    std::size_t m() const { return comps_.size(); }
    std::size_t n() const { return n_; }
    std::size_t size(std::size_t j) const { return comps_[j].size(); }
    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> s;
        s.reserve(comps_.size());
        for (const auto& c : comps_) s.push_back(c.size());
        return s;
    }
    const std::vector<Elem>& component(std::size_t j) const {
        if (j >= comps_.size()) throw BadIndex("coordinate index");
        return comps_[j];
    }

    /// i-th point of the enumeration s_1..s_n.
    std::vector<Elem> point(std::size_t i) const {
        std::vector<Elem> pt(comps_.size());
        for (std::size_t j = comps_.size(); j-- > 0;) {
            pt[j] = comps_[j][i % comps_[j].size()];
            i /= comps_[j].size();
        }
        return pt;
    }

    /// L_j(x_j) = prod_{s in S_j} (x_j - s).
    UniPoly vanishing(std::size_t j) const {
        return vanishing_poly(f_, component(j));
    }
    UniPoly vanishing_derivative(std::size_t j) const {
        return vanishing(j).derivative();
    }

    ProductPoly big_L() const;
};

/// Product-form multivariate polynomial g = g_1(x_1) ... g_m(x_m).
class ProductPoly {
    std::vector<UniPoly> factors_;

public:
    explicit ProductPoly(std::vector<UniPoly> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw BadDimension("product polynomial needs m >= 1");
        for (const auto& f : factors_)
            if (f.field() != factors_.front().field()) throw FieldMismatch();
    }
    static ProductPoly constant(const Field& f, std::size_t m, Elem c) {
        std::vector<UniPoly> fs(m, UniPoly::one(f));
        fs[0] = UniPoly::constant(f, c);
        return ProductPoly(std::move(fs));
    }

    const Field& field() const { return factors_.front().field(); }
    std::size_t m() const { return factors_.size(); }
    const UniPoly& factor(std::size_t j) const {
        if (j >= factors_.size()) throw BadIndex("variable index");
        return factors_[j];
    }
    const std::vector<UniPoly>& factors() const { return factors_; }

    int degree_in(std::size_t j) const { return factor(j).degree(); }

    /// Standard total degree, sum of the factor degrees.
    int total_degree() const {
        int s = 0;
        for (const auto& f : factors_) {
            if (f.is_zero()) return UniPoly::kDegreeOfZero;
            s += f.degree();
        }
        return s;
    }

    /// Product of the factor degrees: the dimension of the tensor code this
    /// polynomial induces, and the quantity every parameter formula uses.
    long long degree_product() const {
        long long r = 1;
        for (const auto& f : factors_) {
            if (f.is_zero()) throw MathError("degree product of a zero factor");
            r *= f.degree();
        }
        return r;
    }

    Elem eval(std::span<const Elem> pt) const {
        if (pt.size() != factors_.size()) throw ShapeMismatch("point arity");
        Elem v = 1;
        const Field& F = field();
        for (std::size_t j = 0; j < factors_.size(); ++j) v = F.mul(v, factors_[j](pt[j]));
        return v;
    }

    ProductPoly operator*(const ProductPoly& o) const {
        if (m() != o.m()) throw ShapeMismatch("variable count");
        std::vector<UniPoly> fs;
        fs.reserve(m());
        for (std::size_t j = 0; j < m(); ++j) fs.push_back(factors_[j] * o.factors_[j]);
        return ProductPoly(std::move(fs));
    }

    bool operator==(const ProductPoly& o) const { return factors_ == o.factors_; }

    bool vanishes_somewhere_on(const CartesianSet& S, std::string* where = nullptr) const {
        if (S.m() != m()) throw ShapeMismatch("grid arity");
        for (std::size_t j = 0; j < m(); ++j)
            for (Elem s : S.component(j))
                if (factors_[j](s) == 0) {
                    if (where)
                        *where = "x_" + std::to_string(j + 1) + " = " + std::to_string(s);
                    return true;
                }
        return false;
    }
};

inline ProductPoly CartesianSet::big_L() const {
    std::vector<UniPoly> fs;
    fs.reserve(m());
    for (std::size_t j = 0; j < m(); ++j) fs.push_back(vanishing_derivative(j));
    return ProductPoly(std::move(fs));
}

/// Factor-wise monic gcd of two product polynomials.
inline ProductPoly factorwise_gcd(const ProductPoly& a, const ProductPoly& b) {
    if (a.m() != b.m()) throw ShapeMismatch("variable count");
    std::vector<UniPoly> fs;
    for (std::size_t j = 0; j < a.m(); ++j) fs.push_back(uni_gcd(a.factor(j), b.factor(j)));
    return ProductPoly(std::move(fs));
}

/// Factor-wise monic lcm of two product polynomials.
inline ProductPoly factorwise_lcm(const ProductPoly& a, const ProductPoly& b) {
    if (a.m() != b.m()) throw ShapeMismatch("variable count");
    std::vector<UniPoly> fs;
    for (std::size_t j = 0; j < a.m(); ++j) fs.push_back(uni_lcm(a.factor(j), b.factor(j)));
    return ProductPoly(std::move(fs));
}

/// Dense multivariate polynomial with a rectangular coefficient tensor,
/// exponent tuples indexed last-axis-fastest (matching CartesianSet).
class MultiPoly {
    Field f_;
    std::vector<std::size_t> shape_;
    std::vector<Elem> c_;

    static std::size_t total(const std::vector<std::size_t>& shape) {
        std::size_t t = 1;
        for (auto s : shape) t *= s;
        return t;
    }

public:
    MultiPoly(Field f, std::vector<std::size_t> shape)
        : f_(std::move(f)), shape_(std::move(shape)), c_(total(shape_), 0) {
        if (shape_.empty()) throw BadDimension("multivariate polynomial needs m >= 1");
        for (auto s : shape_)
            if (s == 0) throw BadDimension("zero-extent coefficient axis");
    }

    static MultiPoly constant(const Field& f, std::size_t m, Elem c) {
        MultiPoly r(f, std::vector<std::size_t>(m, 1));
        r.c_[0] = c;
        return r;
    }

    /// Lift a univariate polynomial into variable j of an m-variable tensor.
    static MultiPoly from_unipoly(const UniPoly& u, std::size_t m, std::size_t j) {
        if (j >= m) throw BadIndex("variable index");
        std::vector<std::size_t> shape(m, 1);
        shape[j] = static_cast<std::size_t>(std::max(u.degree(), 0)) + 1;
        MultiPoly r(u.field(), shape);
        for (std::size_t i = 0; i < shape[j]; ++i) r.c_[i] = u.coeff(i);
        return r;
    }

    static MultiPoly from_product(const ProductPoly& g) {
        MultiPoly r = from_unipoly(g.factor(0), g.m(), 0);
        for (std::size_t j = 1; j < g.m(); ++j)
            r = r * from_unipoly(g.factor(j), g.m(), j);
        return r;
    }

    const Field& field() const { return f_; }
    std::size_t m() const { return shape_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    Elem coeff(std::span<const std::size_t> expo) const {
        return c_[flat(expo)];
    }
    void set_coeff(std::span<const std::size_t> expo, Elem v) { c_[flat(expo)] = v; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](Elem x) { return x == 0; });
    }

    /// Max exponent of x_j carrying a nonzero coefficient; kDegreeOfZero for 0.
    int degree_in(std::size_t j) const {
        if (j >= shape_.size()) throw BadIndex("variable index");
        int best = UniPoly::kDegreeOfZero;
        for (std::size_t idx = 0; idx < c_.size(); ++idx)
            if (c_[idx] != 0) best = std::max(best, static_cast<int>(decode(idx, j)));
        return best;
    }

    Elem eval(std::span<const Elem> pt) const {
        if (pt.size() != shape_.size()) throw ShapeMismatch("point arity");
        // power tables per variable
        std::vector<std::vector<Elem>> pw(shape_.size());
        for (std::size_t j = 0; j < shape_.size(); ++j) {
            pw[j].resize(shape_[j]);
            pw[j][0] = 1;
            for (std::size_t i = 1; i < shape_[j]; ++i) pw[j][i] = f_.mul(pw[j][i - 1], pt[j]);
        }
        Elem acc = 0;
        std::vector<std::size_t> expo(shape_.size(), 0);
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            if (c_[idx] != 0) {
                Elem term = c_[idx];
                std::size_t rem = idx;
                for (std::size_t j = shape_.size(); j-- > 0;) {
                    term = f_.mul(term, pw[j][rem % shape_[j]]);
                    rem /= shape_[j];
                }
                acc = f_.add(acc, term);
            }
        }
        return acc;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check(o);
        std::vector<std::size_t> shape(shape_.size());
        for (std::size_t j = 0; j < shape.size(); ++j)
            shape[j] = std::max(shape_[j], o.shape_[j]);
        MultiPoly r(f_, shape);
        accumulate_into(r, *this, 1);
        accumulate_into(r, o, 1);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check(o);
        std::vector<std::size_t> shape(shape_.size());
        for (std::size_t j = 0; j < shape.size(); ++j)
            shape[j] = std::max(shape_[j], o.shape_[j]);
        MultiPoly r(f_, shape);
        accumulate_into(r, *this, 1);
        accumulate_into(r, o, f_.neg(1));
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check(o);
        std::vector<std::size_t> shape(shape_.size());
        for (std::size_t j = 0; j < shape.size(); ++j)
            shape[j] = shape_[j] + o.shape_[j] - 1;
        MultiPoly r(f_, shape);
        std::vector<std::size_t> ea(shape_.size()), eb(shape_.size()), ec(shape_.size());
        for (std::size_t ia = 0; ia < c_.size(); ++ia) {
            if (c_[ia] == 0) continue;
            decode_all(ia, shape_, ea);
            for (std::size_t ib = 0; ib < o.c_.size(); ++ib) {
                if (o.c_[ib] == 0) continue;
                decode_all(ib, o.shape_, eb);
                for (std::size_t j = 0; j < ec.size(); ++j) ec[j] = ea[j] + eb[j];
                const std::size_t idx = r.flat(ec);
                r.c_[idx] = f_.add(r.c_[idx], f_.mul(c_[ia], o.c_[ib]));
            }
        }
        return r;
    }
    MultiPoly scaled(Elem c) const {
        MultiPoly r = *this;
        for (auto& x : r.c_) x = f_.mul(c, x);
        return r;
    }

    /// Copy with the minimal bounding shape; canonical form for equality.
    MultiPoly trimmed() const {
        std::vector<std::size_t> shape(shape_.size(), 1);
        std::vector<std::size_t> expo(shape_.size());
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            if (c_[idx] == 0) continue;
            decode_all(idx, shape_, expo);
            for (std::size_t j = 0; j < shape.size(); ++j)
                shape[j] = std::max(shape[j], expo[j] + 1);
        }
        MultiPoly r(f_, shape);
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            if (c_[idx] == 0) continue;
            decode_all(idx, shape_, expo);
            r.c_[r.flat(expo)] = c_[idx];
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (f_ != o.f_ || shape_.size() != o.shape_.size()) return false;
        MultiPoly a = trimmed(), b = o.trimmed();
        return a.shape_ == b.shape_ && a.c_ == b.c_;
    }

    std::size_t flat(std::span<const std::size_t> expo) const {
        if (expo.size() != shape_.size()) throw ShapeMismatch("exponent arity");
        std::size_t idx = 0;
        for (std::size_t j = 0; j < shape_.size(); ++j) {
            if (expo[j] >= shape_[j]) throw BadIndex("exponent outside tensor");
            idx = idx * shape_[j] + expo[j];
        }
        return idx;
    }

    static void decode_all(std::size_t idx, const std::vector<std::size_t>& shape,
                           std::vector<std::size_t>& out) {
        for (std::size_t j = shape.size(); j-- > 0;) {
            out[j] = idx % shape[j];
            idx /= shape[j];
        }
    }

private:
    std::size_t decode(std::size_t idx, std::size_t j) const {
        for (std::size_t k = shape_.size(); k-- > j + 1;) idx /= shape_[k];
        return idx % shape_[j];
    }

    void check(const MultiPoly& o) const {
        if (f_ != o.f_) throw FieldMismatch();
        if (shape_.size() != o.shape_.size()) throw ShapeMismatch("variable count");
    }

    static void accumulate_into(MultiPoly& r, const MultiPoly& src, Elem scale) {
        std::vector<std::size_t> expo(src.shape_.size());
        for (std::size_t idx = 0; idx < src.c_.size(); ++idx) {
            if (src.c_[idx] == 0) continue;
            decode_all(idx, src.shape_, expo);
            const std::size_t ridx = r.flat(expo);
            r.c_[ridx] = r.f_.add(r.c_[ridx], r.f_.mul(scale, src.c_[idx]));
        }
    }
};

/// Unique remainder modulo I(S) = (L_1, ..., L_m): every deg_{x_j} < n_j and
/// the result agrees with the input on all of S. The per-variable vanishing
/// polynomials form a Groebner basis, so the axis reduction order does not
/// matter; tests assert this.
inline MultiPoly reduce_mod_ideal(const MultiPoly& f, const CartesianSet& S) {
    if (f.m() != S.m()) throw ShapeMismatch("grid arity");
    if (f.field() != S.field()) throw FieldMismatch();
    MultiPoly cur = f;
    for (std::size_t j = 0; j < S.m(); ++j) {
        const std::size_t nj = S.size(j);
        if (cur.shape()[j] <= nj) continue;
        const UniPoly L = S.vanishing(j);
        // x_j^a = x_j^{a-nj} * x_j^{nj} == -sum_{i<nj} L[i] x_j^{a-nj+i}
        MultiPoly next = cur;
        std::vector<std::size_t> expo(S.m());
        for (std::size_t a = next.shape()[j]; a-- > nj;) {
            for (std::size_t idx = 0; idx < next.coeffs().size(); ++idx) {
                MultiPoly::decode_all(idx, next.shape(), expo);
                if (expo[j] != a) continue;
                const Elem c = next.coeffs()[idx];
                if (c == 0) continue;
                next.set_coeff(expo, 0);
                for (std::size_t i = 0; i < nj; ++i) {
                    if (L.coeff(i) == 0) continue;
                    auto e2 = expo;
                    e2[j] = a - nj + i;
                    const Elem delta = next.field().neg(next.field().mul(L.coeff(i), c));
                    next.set_coeff(e2, next.field().add(next.coeff(e2), delta));
                }
            }
        }
        // shrink axis j to nj
        std::vector<std::size_t> shape = next.shape();
        shape[j] = nj;
        MultiPoly shrunk(next.field(), shape);
        for (std::size_t idx = 0; idx < next.coeffs().size(); ++idx) {
            if (next.coeffs()[idx] == 0) continue;
            MultiPoly::decode_all(idx, next.shape(), expo);
            if (expo[j] >= nj) throw MathError("reduction left a high exponent");
            shrunk.set_coeff(expo, next.coeffs()[idx]);
        }
        cur = std::move(shrunk);
    }
    return cur;
}

inline MultiPoly reduce_mod_ideal(const ProductPoly& g, const CartesianSet& S) {
    if (g.m() != S.m()) throw ShapeMismatch("grid arity");
    if (g.field() != S.field()) throw FieldMismatch();
    // remainder of a per-variable product is the product of the univariate
    // remainders, each already inside the footprint
    std::vector<UniPoly> fs;
    fs.reserve(g.m());
    for (std::size_t j = 0; j < g.m(); ++j) fs.push_back(g.factor(j) % S.vanishing(j));
    for (const auto& f : fs)
        if (f.is_zero()) return MultiPoly::constant(S.field(), S.m(), 0);
    return MultiPoly::from_product(ProductPoly(std::move(fs)));
}

inline std::vector<Elem> values_on_grid(const CartesianSet& S, const ProductPoly& g) {
    if (g.m() != S.m()) throw ShapeMismatch("grid arity");
    if (g.field() != S.field()) throw FieldMismatch();
    // per-variable value tables, combined in enumeration order
    std::vector<std::vector<Elem>> tab(S.m());
    for (std::size_t j = 0; j < S.m(); ++j) {
        tab[j].reserve(S.size(j));
        for (Elem s : S.component(j)) tab[j].push_back(g.factor(j)(s));
    }
    std::vector<Elem> out(S.n());
    const Field& F = S.field();
    for (std::size_t i = 0; i < S.n(); ++i) {
        Elem v = 1;
        std::size_t rem = i;
        for (std::size_t j = S.m(); j-- > 0;) {
            v = F.mul(v, tab[j][rem % S.size(j)]);
            rem /= S.size(j);
        }
        out[i] = v;
    }
    return out;
}

inline std::vector<Elem> values_on_grid(const CartesianSet& S, const MultiPoly& g) {
    if (g.m() != S.m()) throw ShapeMismatch("grid arity");
    if (g.field() != S.field()) throw FieldMismatch();
    std::vector<Elem> out(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) {
        auto pt = S.point(i);
        out[i] = g.eval(pt);
    }
    return out;
}

/// Unique polynomial with deg_{x_j} < n_j matching the given values on the
/// grid; multivariate Lagrange interpolation.
inline MultiPoly interpolate(const CartesianSet& S, std::span<const Elem> values) {
    if (values.size() != S.n()) throw ShapeMismatch("value count");
    const Field& F = S.field();
    // univariate Lagrange basis per variable
    std::vector<std::vector<UniPoly>> basis(S.m());
    for (std::size_t j = 0; j < S.m(); ++j) {
        const auto& pts = S.component(j);
        for (std::size_t u = 0; u < pts.size(); ++u) {
            UniPoly num = UniPoly::one(F);
            Elem den = 1;
            for (std::size_t v = 0; v < pts.size(); ++v) {
                if (v == u) continue;
                num = num * UniPoly(F, {F.neg(pts[v]), 1});
                den = F.mul(den, F.sub(pts[u], pts[v]));
            }
            basis[j].push_back(num.scaled(F.inv(den)));
        }
    }
    MultiPoly r(F, S.sizes());
    std::vector<std::size_t> ptidx(S.m()), expo(S.m());
    const auto shape = S.sizes();
    for (std::size_t i = 0; i < S.n(); ++i) {
        if (values[i] == 0) continue;
        MultiPoly::decode_all(i, shape, ptidx);
        // accumulate values[i] * prod_j basis[j][ptidx[j]]
        std::size_t cnt = 1;
        for (auto s : shape) cnt *= s;
        for (std::size_t idx = 0; idx < cnt; ++idx) {
            MultiPoly::decode_all(idx, shape, expo);
            Elem term = values[i];
            for (std::size_t j = 0; j < S.m() && term != 0; ++j)
                term = F.mul(term, basis[j][ptidx[j]].coeff(expo[j]));
            if (term != 0) r.set_coeff(expo, F.add(r.coeff(expo), term));
        }
    }
    return r;
}

/// The paper's f1/f2 on S: the unique reduced polynomial whose value at every
/// grid point s is f1(s)/f2(s).
inline MultiPoly ratio_representative(const CartesianSet& S,
                                      std::span<const Elem> num_values,
                                      std::span<const Elem> den_values) {
    if (num_values.size() != S.n() || den_values.size() != S.n())
        throw ShapeMismatch("value count");
    const Field& F = S.field();
    std::vector<Elem> q(S.n());
    for (std::size_t i = 0; i < S.n(); ++i) {
        if (den_values[i] == 0) {
            auto pt = S.point(i);
            std::string ps = "(";
            for (std::size_t j = 0; j < pt.size(); ++j)
                ps += (j ? "," : "") + std::to_string(pt[j]);
            throw DenominatorVanishes(ps + ")");
        }
        q[i] = F.div(num_values[i], den_values[i]);
    }
    return interpolate(S, q);
}

template <class P1, class P2>
inline MultiPoly ratio_representative(const P1& f1, const P2& f2, const CartesianSet& S) {
    const auto nv = values_on_grid(S, f1);
    const auto dv = values_on_grid(S, f2);
    return ratio_representative(S, nv, dv);
}

/// Degree probe used by the dual-partner test.
inline int degree_in_variable(const MultiPoly& f, std::size_t j) { return f.degree_in(j); }
inline int degree_in_variable(const ProductPoly& f, std::size_t j) { return f.degree_in(j); }

}  // namespace mvgoppa

#endif
