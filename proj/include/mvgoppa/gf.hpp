#ifndef MVGOPPA_GF_HPP
#define MVGOPPA_GF_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mvgoppa {

/// A field element, encoded as the base-p packed integer of its polynomial
/// representation: x = sum c_i a^i  <->  code = sum c_i p^i, 0 <= code < p^e.
using Elem = std::uint32_t;

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomials over GF(p) as coefficient vectors, low-to-high, not trimmed
// unless stated. Only what field construction needs lives here; the full
// polynomial layer (over arbitrary fields) is in poly.hpp.
using PVec = std::vector<Elem>;

inline void pv_trim(PVec& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

inline bool pv_is_zero(const PVec& f) {
    return std::all_of(f.begin(), f.end(), [](Elem c) { return c == 0; });
}

inline PVec pv_mul(std::uint32_t p, const PVec& a, const PVec& b) {
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<Elem>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    pv_trim(r);
    return r;
}

// Remainder of f by monic g.
inline PVec pv_mod(std::uint32_t p, PVec f, const PVec& g) {
    pv_trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg && !(f.size() == 1 && f[0] == 0)) {
        const Elem c = f.back();
        if (c != 0) {
            const std::size_t shift = f.size() - 1 - dg;
            for (std::size_t i = 0; i < dg; ++i)
                f[shift + i] = static_cast<Elem>(
                    (f[shift + i] + std::uint64_t(p - 1) * c % p * g[i]) % p);
        }
        f.pop_back();
        pv_trim(f);
        if (f.size() <= dg) break;
    }
    pv_trim(f);
    return f;
}

inline PVec pv_mulmod(std::uint32_t p, const PVec& a, const PVec& b, const PVec& mod) {
    return pv_mod(p, pv_mul(p, a, b), mod);
}

inline PVec pv_powmod(std::uint32_t p, PVec base, std::uint64_t n, const PVec& mod) {
    PVec r{1};
    base = pv_mod(p, std::move(base), mod);
    while (n) {
        if (n & 1) r = pv_mulmod(p, r, base, mod);
        base = pv_mulmod(p, base, base, mod);
        n >>= 1;
    }
    return r;
}

// Exhaustive trial division by all monic polynomials of degree 1..deg/2.
inline bool pv_irreducible(std::uint32_t p, const PVec& f) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    std::uint64_t q = 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        q *= p;
        for (std::uint64_t v = 0; v < q; ++v) {
            PVec g(d + 1, 0);
            std::uint64_t w = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<Elem>(w % p);
                w /= p;
            }
            g[d] = 1;
            if (pv_is_zero(pv_mod(p, f, g))) return false;
        }
    }
    return true;
}

}  // namespace detail

/// GF(p^e) with elements encoded as packed integers in [0, p^e). Immutable
/// after construction; handles share the backing tables, so copies are cheap
/// and all operations are safe to call concurrently.
class Field {
    struct Data {
        std::uint32_t p = 0;
        std::uint32_t e = 0;
        std::uint64_t q = 0;
        std::vector<Elem> modulus;  // length e+1, low-to-high, over GF(p), monic
        Elem generator = 0;
        std::vector<Elem> exp_tab;  // exp_tab[i] = generator^i, i in [0, q-1)
        std::vector<std::uint32_t> log_tab;  // log_tab[x] for x != 0
        std::vector<Elem> add_tab;           // q*q, only for small q
        bool use_tables = false;
        bool use_add_tab = false;

        Elem raw_add(Elem x, Elem y) const {
            Elem r = 0, mult = 1;
            for (std::uint32_t i = 0; i < e; ++i) {
                r += mult * ((x % p + y % p) % p);
                x /= p;
                y /= p;
                mult *= p;
            }
            return r;
        }
        Elem raw_neg(Elem x) const {
            Elem r = 0, mult = 1;
            for (std::uint32_t i = 0; i < e; ++i) {
                r += mult * ((p - x % p) % p);
                x /= p;
                mult *= p;
            }
            return r;
        }
        Elem raw_mul(Elem x, Elem y) const {
            // schoolbook product of digit vectors, reduced by the modulus
            std::vector<std::uint32_t> xd(e), yd(e), prod(2 * e - 1, 0);
            for (std::uint32_t i = 0; i < e; ++i) { xd[i] = x % p; x /= p; }
            for (std::uint32_t i = 0; i < e; ++i) { yd[i] = y % p; y /= p; }
            for (std::uint32_t i = 0; i < e; ++i) {
                if (xd[i] == 0) continue;
                for (std::uint32_t j = 0; j < e; ++j)
                    prod[i + j] = static_cast<std::uint32_t>(
                        (prod[i + j] + std::uint64_t(xd[i]) * yd[j]) % p);
            }
            for (std::uint32_t i = 2 * e - 2; i + 1 > e; --i) {
                const std::uint32_t c = prod[i];
                if (c == 0) continue;
                prod[i] = 0;
                for (std::uint32_t j = 0; j < e; ++j)
                    prod[i - e + j] = static_cast<std::uint32_t>(
                        (prod[i - e + j] + std::uint64_t(p - 1) * c % p * modulus[j]) % p);
            }
            Elem r = 0, mult = 1;
            for (std::uint32_t i = 0; i < e; ++i) {
                r += mult * prod[i];
                mult *= p;
            }
            return r;
        }
        Elem raw_pow(Elem x, std::uint64_t n) const {
            if (x == 0) return n == 0 ? 1 : 0;
            Elem r = 1;
            while (n) {
                if (n & 1) r = raw_mul(r, x);
                x = raw_mul(x, x);
                n >>= 1;
            }
            return r;
        }
        std::uint64_t raw_order(Elem x) const {
            std::uint64_t order = q - 1;
            for (auto r : detail::prime_factors(q - 1))
                while (order % r == 0 && raw_pow(x, order / r) == 1) order /= r;
            return order;
        }
    };

    std::shared_ptr<const Data> d_;
    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    static constexpr std::uint64_t kMaxQ = 1u << 20;
    static constexpr std::uint64_t kLogTableMaxQ = 1u << 16;
    static constexpr std::uint64_t kAddTableMaxQ = 1u << 10;

public:
    Field() = default;

    /// Builds GF(p^e). Without an explicit modulus, scans monic irreducible
    /// polynomials in ascending packed-coefficient order and picks the first
    /// whose root is a primitive element; that root becomes the pinned
    /// generator `a`. With an explicit modulus, the root is used as generator
    /// when primitive; otherwise the smallest primitive element is pinned
    /// (or NonPrimitiveModulusRoot is raised if require_primitive_root).
    static Field make(std::uint32_t p, std::uint32_t e,
                      std::optional<std::vector<Elem>> modulus = std::nullopt,
                      bool require_primitive_root = false) {
        if (!detail::is_prime_u64(p)) throw NotPrime(p);
        if (e < 1) throw BadDimension("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > kMaxQ) throw BadDimension("field larger than 2^20 elements");
        }

        auto data = std::make_shared<Data>();
        data->p = p;
        data->e = e;
        data->q = q;

        if (modulus) {
            auto& m = *modulus;
            if (m.size() != e + 1 || m.back() != 1)
                throw ReducibleModulus("modulus must be monic of degree e");
            for (Elem c : m)
                if (c >= p) throw SpecError("modulus coefficient out of range");
            if (!detail::pv_irreducible(p, m))
                throw ReducibleModulus("fails exhaustive factor check");
            data->modulus = m;
        } else {
            data->modulus = scan_default_modulus(p, e, q);
        }

        finalize(*data, require_primitive_root && modulus.has_value());
        return Field(std::move(data));
    }

    std::uint32_t p() const { return d_->p; }
    std::uint32_t e() const { return d_->e; }
    std::uint64_t q() const { return d_->q; }
    const std::vector<Elem>& modulus() const { return d_->modulus; }
    Elem generator() const { return d_->generator; }
    bool valid() const { return d_ != nullptr; }

    bool operator==(const Field& o) const {
        if (d_ == o.d_) return true;
        if (!d_ || !o.d_) return false;
        return d_->p == o.d_->p && d_->e == o.d_->e && d_->modulus == o.d_->modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Elem add(Elem x, Elem y) const {
        return d_->use_add_tab ? d_->add_tab[std::size_t(x) * d_->q + y]
                               : d_->raw_add(x, y);
    }
    Elem neg(Elem x) const { return d_->raw_neg(x); }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) return 0;
        if (d_->use_tables) {
            std::uint64_t l = d_->log_tab[x] + d_->log_tab[y];
            if (l >= d_->q - 1) l -= d_->q - 1;
            return d_->exp_tab[l];
        }
        return d_->raw_mul(x, y);
    }
    Elem inv(Elem x) const {
        if (x == 0) throw MathError("inverse of zero");
        if (d_->use_tables)
            return d_->exp_tab[(d_->q - 1 - d_->log_tab[x]) % (d_->q - 1)];
        return d_->raw_pow(x, d_->q - 2);
    }
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    Elem pow(Elem x, long long n) const {
        if (x == 0) {
            if (n < 0) throw MathError("negative power of zero");
            return n == 0 ? 1 : 0;
        }
        const long long m = static_cast<long long>(d_->q - 1);
        long long r = n % m;
        if (r < 0) r += m;
        if (d_->use_tables)
            return d_->exp_tab[(std::uint64_t(d_->log_tab[x]) * r) % (d_->q - 1)];
        return d_->raw_pow(x, static_cast<std::uint64_t>(r));
    }

    /// a^k for the pinned generator a.
    Elem gen_pow(long long k) const { return pow(d_->generator, k); }

    std::uint64_t elem_order(Elem x) const {
        if (x == 0) throw MathError("order of zero");
        return d_->raw_order(x);
    }

    bool is_valid_elem(Elem x) const { return x < d_->q; }

private:
    static std::vector<Elem> scan_default_modulus(std::uint32_t p, std::uint32_t e,
                                                  std::uint64_t q) {
        for (std::uint64_t v = 0; v < q; ++v) {
            std::vector<Elem> m(e + 1, 0);
            std::uint64_t w = v;
            for (std::uint32_t i = 0; i < e; ++i) {
                m[i] = static_cast<Elem>(w % p);
                w /= p;
            }
            m[e] = 1;
            if (m[0] == 0) continue;  // x divides it; also keeps the e=1 root nonzero
            if (!detail::pv_irreducible(p, m)) continue;
            // primitivity of the residue class of x
            detail::PVec x{0, 1};
            std::uint64_t order = q - 1;
            bool primitive = true;
            for (auto r : detail::prime_factors(order)) {
                auto pw = detail::pv_powmod(p, x, order / r, m);
                detail::pv_trim(pw);
                if (pw.size() == 1 && pw[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return m;
        }
        throw ReducibleModulus("no primitive-root modulus found");  // unreachable
    }

    static void finalize(Data& d, bool require_primitive_root) {
        // generator: the residue class of x (code p) when e >= 2, the root of
        // the linear modulus when e == 1
        Elem root = d.e >= 2 ? static_cast<Elem>(d.p)
                             : static_cast<Elem>((d.p - d.modulus[0]) % d.p);
        Elem gen = root;
        if (root == 0 || d.raw_order(root) != d.q - 1) {
            if (require_primitive_root) throw NonPrimitiveModulusRoot();
            gen = 0;
            for (Elem x = 2; x < d.q; ++x) {
                if (d.raw_order(x) == d.q - 1) {
                    gen = x;
                    break;
                }
            }
            if (gen == 0) throw MathError("no primitive element found");
        }
        d.generator = gen;

        if (d.q <= kLogTableMaxQ) {
            d.exp_tab.assign(d.q - 1, 0);
            d.log_tab.assign(d.q, 0);
            Elem cur = 1;
            for (std::uint64_t i = 0; i + 1 < d.q; ++i) {
                d.exp_tab[i] = cur;
                d.log_tab[cur] = static_cast<std::uint32_t>(i);
                cur = d.raw_mul(cur, d.generator);
            }
            if (cur != 1) throw MathError("generator order check failed");
            d.use_tables = true;
        }
        if (d.q <= kAddTableMaxQ) {
            d.add_tab.assign(d.q * d.q, 0);
            for (std::uint64_t x = 0; x < d.q; ++x)
                for (std::uint64_t y = 0; y < d.q; ++y)
                    d.add_tab[x * d.q + y] =
                        d.raw_add(static_cast<Elem>(x), static_cast<Elem>(y));
            d.use_add_tab = true;
        }
    }
};

/// The subfield pair F_q c F_{q^t} with q = p^{e/t}. Carries the embedding
/// F_q -> F_{q^t}, the field trace, and expansion over the pinned F_q-basis
/// (1, a, ..., a^{t-1}) of F_{q^t}, where a is the extension generator.
/// Immutable; safe for concurrent use.
class FieldTower {
    struct Data {
        Field base, ext;
        std::uint32_t t = 1;
        std::vector<Elem> embed_tab;   // size base.q
        std::vector<std::int64_t> to_base_tab;  // size ext.q, -1 outside subfield
        std::vector<Elem> basis;       // t elements of ext
        std::vector<Elem> expand_inv;  // e x e matrix over GF(p), row-major
    };
    std::shared_ptr<const Data> d_;
    explicit FieldTower(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

public:
    FieldTower() = default;

    /// Tower of degree t over the base implied by ext: base = GF(p^{e/t})
    /// with its default modulus. t = 1 reuses ext itself as the base.
    static FieldTower make(const Field& ext, std::uint32_t t) {
        if (t < 1 || ext.e() % t != 0)
            throw BadDimension("tower degree must divide the extension degree");
        auto data = std::make_shared<Data>();
        data->ext = ext;
        data->t = t;
        if (t == 1) {
            data->base = ext;
            data->embed_tab.resize(ext.q());
            data->to_base_tab.resize(ext.q());
            for (std::uint64_t x = 0; x < ext.q(); ++x) {
                data->embed_tab[x] = static_cast<Elem>(x);
                data->to_base_tab[x] = static_cast<std::int64_t>(x);
            }
            data->basis = {1};
            return FieldTower(std::move(data));
        }
        data->base = Field::make(ext.p(), ext.e() / t);
        build(*data);
        return FieldTower(std::move(data));
    }

    const Field& base() const { return d_->base; }
    const Field& ext() const { return d_->ext; }
    std::uint32_t t() const { return d_->t; }
    const std::vector<Elem>& basis() const { return d_->basis; }

    Elem embed(Elem x) const { return d_->embed_tab[x]; }

    bool is_in_subfield(Elem x) const { return d_->to_base_tab[x] >= 0; }

    Elem to_base(Elem x) const {
        auto v = d_->to_base_tab[x];
        if (v < 0) throw MathError("element is not in the subfield");
        return static_cast<Elem>(v);
    }

    /// tr(x) = x^{q^0} + x^{q^1} + ... + x^{q^{t-1}}, returned in the base field.
    Elem trace(Elem x) const {
        const Field& E = d_->ext;
        const std::uint64_t qb = d_->base.q();
        Elem acc = 0;
        std::uint64_t power = 1;
        for (std::uint32_t i = 0; i < d_->t; ++i) {
            acc = E.add(acc, E.pow(x, static_cast<long long>(power)));
            power *= qb;
        }
        return to_base(acc);
    }

    /// Coordinates c_1..c_t of x over the basis, x = sum embed(c_i) * b_i.
    std::vector<Elem> basis_expand(Elem x) const {
        if (d_->t == 1) return {x};
        const std::uint32_t p = d_->ext.p();
        const std::uint32_t e = d_->ext.e();
        const std::uint32_t eb = d_->base.e();
        std::vector<std::uint32_t> digits(e);
        Elem v = x;
        for (std::uint32_t i = 0; i < e; ++i) {
            digits[i] = v % p;
            v /= p;
        }
        std::vector<Elem> out(d_->t, 0);
        for (std::uint32_t r = 0; r < e; ++r) {
            std::uint64_t acc = 0;
            for (std::uint32_t c = 0; c < e; ++c)
                acc += std::uint64_t(d_->expand_inv[r * e + c]) * digits[c];
            const auto coord = static_cast<std::uint32_t>(acc % p);
            const std::uint32_t group = r / eb, pos = r % eb;
            Elem mult = 1;
            for (std::uint32_t i = 0; i < pos; ++i) mult *= p;
            out[group] += mult * coord;
        }
        return out;
    }

    Elem basis_combine(std::span<const Elem> coords) const {
        if (coords.size() != d_->t) throw ShapeMismatch("basis coordinate count");
        const Field& E = d_->ext;
        Elem acc = 0;
        for (std::uint32_t i = 0; i < d_->t; ++i)
            acc = E.add(acc, E.mul(embed(coords[i]), d_->basis[i]));
        return acc;
    }

private:
    static void build(Data& d) {
        const Field& B = d.base;
        const Field& E = d.ext;
        const std::uint32_t p = E.p();
        const std::uint32_t e = E.e();
        const std::uint32_t eb = B.e();
        const std::uint32_t t = d.t;

        // smallest root of the base modulus inside ext; GF(p) constants have
        // the same codes 0..p-1 in both fields
        Elem root = 0;
        bool found = false;
        for (std::uint64_t x = 0; x < E.q() && !found; ++x) {
            Elem acc = 0;
            for (std::size_t i = B.modulus().size(); i-- > 0;)
                acc = E.add(E.mul(acc, static_cast<Elem>(x)), B.modulus()[i]);
            if (acc == 0) {
                root = static_cast<Elem>(x);
                found = true;
            }
        }
        if (!found) throw MathError("base modulus has no root in the extension");

        d.embed_tab.assign(B.q(), 0);
        for (std::uint64_t y = 0; y < B.q(); ++y) {
            Elem acc = 0, rp = 1;
            std::uint64_t w = y;
            for (std::uint32_t i = 0; i < eb; ++i) {
                acc = E.add(acc, E.mul(static_cast<Elem>(w % p), rp));
                w /= p;
                rp = E.mul(rp, root);
            }
            d.embed_tab[y] = acc;
        }
        d.to_base_tab.assign(E.q(), -1);
        for (std::uint64_t y = 0; y < B.q(); ++y)
            d.to_base_tab[d.embed_tab[y]] = static_cast<std::int64_t>(y);

        d.basis.assign(t, 0);
        Elem bp = 1;
        for (std::uint32_t i = 0; i < t; ++i) {
            d.basis[i] = bp;
            bp = E.mul(bp, E.generator());
        }

        // GF(p)-linear map (c_1..c_t digit blocks) -> digits of sum embed(c_i) b_i,
        // as an e x e matrix; invert it once for basis_expand
        std::vector<Elem> M(std::size_t(e) * e, 0);
        for (std::uint32_t i = 0; i < t; ++i) {
            Elem unit = 1;
            for (std::uint32_t l = 0; l < eb; ++l) {
                const std::uint32_t col = i * eb + l;
                Elem img = E.mul(d.embed_tab[unit], d.basis[i]);
                for (std::uint32_t r = 0; r < e; ++r) {
                    M[std::size_t(r) * e + col] = img % p;
                    img /= p;
                }
                unit *= p;
            }
        }
        d.expand_inv = invert_gfp(p, e, M);
    }

    static std::vector<Elem> invert_gfp(std::uint32_t p, std::uint32_t n,
                                        std::vector<Elem> M) {
        std::vector<Elem> I(std::size_t(n) * n, 0);
        for (std::uint32_t i = 0; i < n; ++i) I[std::size_t(i) * n + i] = 1;
        auto inv_mod_p = [p](std::uint64_t a) {
            std::uint64_t r = 1, b = a % p, k = p - 2;
            while (k) {
                if (k & 1) r = r * b % p;
                b = b * b % p;
                k >>= 1;
            }
            return r;
        };
        for (std::uint32_t col = 0, row = 0; col < n && row < n; ++col) {
            std::uint32_t piv = row;
            while (piv < n && M[std::size_t(piv) * n + col] == 0) ++piv;
            if (piv == n) throw MathError("basis map not invertible");
            if (piv != row) {
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::swap(M[std::size_t(piv) * n + j], M[std::size_t(row) * n + j]);
                    std::swap(I[std::size_t(piv) * n + j], I[std::size_t(row) * n + j]);
                }
            }
            const std::uint64_t iv = inv_mod_p(M[std::size_t(row) * n + col]);
            for (std::uint32_t j = 0; j < n; ++j) {
                M[std::size_t(row) * n + j] =
                    static_cast<Elem>(M[std::size_t(row) * n + j] * iv % p);
                I[std::size_t(row) * n + j] =
                    static_cast<Elem>(I[std::size_t(row) * n + j] * iv % p);
            }
            for (std::uint32_t i = 0; i < n; ++i) {
                if (i == row) continue;
                const std::uint64_t f = M[std::size_t(i) * n + col];
                if (f == 0) continue;
                for (std::uint32_t j = 0; j < n; ++j) {
                    M[std::size_t(i) * n + j] = static_cast<Elem>(
                        (M[std::size_t(i) * n + j] +
                         (p - 1) * f % p * M[std::size_t(row) * n + j]) % p);
                    I[std::size_t(i) * n + j] = static_cast<Elem>(
                        (I[std::size_t(i) * n + j] +
                         (p - 1) * f % p * I[std::size_t(row) * n + j]) % p);
                }
            }
            ++row;
        }
        return I;
    }
};

}  // namespace mvgoppa

#endif
