// Brute-force oracles and random-instance generators shared by the unit and
// acceptance suites. Everything here stays independent of the library's
// construction paths: enumeration only.
#ifndef MVGOPPA_TESTS_ORACLES_HPP
#define MVGOPPA_TESTS_ORACLES_HPP

#include <mvgoppa/mvgoppa.hpp>

#include <random>
#include <vector>

namespace oracle {

using namespace mvgoppa;

/// All words of F_q^n lying in C, found by enumerating F_q^n and testing the
/// parity conditions over the extension field.
inline LinearCode subfield_subcode_bruteforce(const FieldTower& T, const LinearCode& C) {
    const Field& E = T.ext();
    const Field& B = T.base();
    const std::size_t n = C.n();
    const MatrixGF H = kernel(C.gen());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= B.q();
    std::vector<std::vector<Elem>> words;
    for (std::uint64_t v = 0; v < total; ++v) {
        std::vector<Elem> c(n);
        std::uint64_t w = v;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = static_cast<Elem>(w % B.q());
            w /= B.q();
        }
        bool ok = true;
        for (std::size_t r = 0; r < H.rows() && ok; ++r) {
            Elem s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s = E.add(s, E.mul(H(r, i), T.embed(c[i])));
            ok = (s == 0);
        }
        if (ok) words.push_back(std::move(c));
    }
    return LinearCode(MatrixGF::from_rows(B, words, n));
}

/// Span of the entrywise traces of all codewords of C.
inline LinearCode trace_code_bruteforce(const FieldTower& T, const LinearCode& C) {
    const Field& E = T.ext();
    const std::size_t n = C.n(), k = C.k();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= E.q();
    std::vector<std::vector<Elem>> rows;
    for (std::uint64_t v = 0; v < total; ++v) {
        std::vector<Elem> word(n, 0);
        std::uint64_t w = v;
        for (std::size_t i = 0; i < k; ++i) {
            const Elem c = static_cast<Elem>(w % E.q());
            w /= E.q();
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = E.add(word[j], E.mul(c, C.gen()(i, j)));
        }
        for (std::size_t j = 0; j < n; ++j) word[j] = T.trace(word[j]);
        rows.push_back(std::move(word));
    }
    return LinearCode(MatrixGF::from_rows(T.base(), rows, n));
}

/// Exhaustive minimum weight by plain message enumeration.
inline unsigned min_weight_bruteforce(const LinearCode& C) {
    const Field& F = C.field();
    const std::size_t n = C.n(), k = C.k();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= F.q();
    unsigned best = static_cast<unsigned>(n) + 1;
    for (std::uint64_t v = 1; v < total; ++v) {
        std::vector<Elem> word(n, 0);
        std::uint64_t w = v;
        for (std::size_t i = 0; i < k; ++i) {
            const Elem c = static_cast<Elem>(w % F.q());
            w /= F.q();
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = F.add(word[j], F.mul(c, C.gen()(i, j)));
        }
        unsigned wt = 0;
        for (Elem x : word) wt += (x != 0);
        if (wt < best) best = wt;
    }
    return best;
}

inline std::vector<Elem> random_subset(const Field& F, std::size_t n, std::mt19937& rng) {
    std::vector<Elem> all(F.q());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    return all;
}

/// Random polynomial of exact degree d that does not vanish on pts.
inline UniPoly random_nonvanishing(const Field& F, std::span<const Elem> pts, int d,
                                   std::mt19937& rng) {
    std::uniform_int_distribution<Elem> dc(0, static_cast<Elem>(F.q() - 1));
    std::uniform_int_distribution<Elem> dl(1, static_cast<Elem>(F.q() - 1));
    for (;;) {
        std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = dc(rng);
        c.back() = dl(rng);
        UniPoly f(F, std::move(c));
        bool ok = true;
        for (Elem s : pts)
            if (f(s) == 0) {
                ok = false;
                break;
            }
        if (ok) return f;
    }
}

inline MatrixGF random_matrix(const Field& F, std::size_t r, std::size_t c,
                              std::mt19937& rng) {
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(F.q() - 1));
    MatrixGF M(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = d(rng);
    return M;
}

}  // namespace oracle

#endif
