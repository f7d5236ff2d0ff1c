#include <catch2/catch_amalgamated.hpp>

#include <mvgoppa/codes.hpp>

#include <array>
#include <random>
#include <vector>

#include "oracles.hpp"

using namespace mvgoppa;

namespace {

const std::vector<Elem> kPinnedF9Modulus{2, 2, 1};

Field pinned_f9() { return Field::make(3, 2, kPinnedF9Modulus); }

}  // namespace

TEST_CASE("grs basics") {
    auto F5 = Field::make(5, 1);
    std::vector<Elem> S{1, 2, 3};

    REQUIRE(grs(F5, S, 0, UniPoly::one(F5)) == LinearCode::zero(F5, 3));
    REQUIRE(grs(F5, S, 3, UniPoly::one(F5)) == LinearCode::full(F5, 3));

    auto C = grs(F5, S, 2, UniPoly::one(F5));
    REQUIRE(C.n() == 3);
    REQUIRE(C.k() == 2);
    MatrixGF expect(F5, 2, 3);
    expect(0, 0) = 1; expect(0, 1) = 1; expect(0, 2) = 1;
    expect(1, 0) = 1; expect(1, 1) = 2; expect(1, 2) = 3;
    REQUIRE(rowspace_equal(C.gen(), expect));
    REQUIRE(min_distance(C.gen()).d == 2);  // MDS

    REQUIRE_THROWS_AS(grs(F5, S, 4, UniPoly::one(F5)), BadDimension);
    REQUIRE_THROWS_AS(grs(F5, S, 2, UniPoly(F5, {4, 1})), GeneratorVanishes);  // root 1
    std::vector<Elem> dup{1, 1, 2};
    REQUIRE_THROWS_AS(grs(F5, dup, 1, UniPoly::one(F5)), DuplicatePoints);
}

TEST_CASE("tensor product of GRS codes") {
    auto F5 = Field::make(5, 1);
    CartesianSet S(F5, {{1, 2, 3}, {1, 2, 3}});
    ProductPoly one({UniPoly::one(F5), UniPoly::one(F5)});

    std::vector<std::size_t> kz{2, 0};
    REQUIRE(tensor_grs(S, kz, one) == LinearCode::zero(F5, 9));
    std::vector<std::size_t> kf{3, 3};
    REQUIRE(tensor_grs(S, kf, one) == LinearCode::full(F5, 9));

    std::vector<std::size_t> kv{2, 2};
    auto C = tensor_grs(S, kv, one);
    REQUIRE(C.n() == 9);
    REQUIRE(C.k() == 4);
    // exhaustive oracle over 5^4 codewords gives d = prod (n_j - k_j + 1)
    REQUIRE(oracle::min_weight_bruteforce(C) == 4);
    REQUIRE(min_distance(C.gen()).d == 4);

    // the Kronecker product of the factor generators spans the same code
    auto G1 = grs(F5, S.component(0), 2, UniPoly::one(F5));
    auto G2 = grs(F5, S.component(1), 2, UniPoly::one(F5));
    REQUIRE(LinearCode(kronecker(G1.gen(), G2.gen())) == C);
}

TEST_CASE("tensor via Goppa polynomials") {
    auto F9 = pinned_f9();
    const Elem a = F9.generator();

    // all factors degree 1: dimension 1
    CartesianSet S(F9, {{0, 1, a}, {1, a}});
    ProductPoly g1({UniPoly(F9, {1, 1}), UniPoly(F9, {a, 1})});
    std::string where;
    REQUIRE_FALSE(g1.vanishes_somewhere_on(S, &where));
    REQUIRE(tensor_goppa(S, g1).k() == 1);

    // the [64, 56, 4] construction's tensor side: n = 64, k = 4
    std::vector<Elem> units;
    for (int i = 1; i <= 8; ++i) units.push_back(F9.pow(a, i));
    CartesianSet Su(F9, {units, units});
    ProductPoly g({UniPoly(F9, {a, 0, 1}), UniPoly(F9, {a, 0, 1})});
    auto T = tensor_goppa(Su, g);
    REQUIRE(T.n() == 64);
    REQUIRE(T.k() == 4);

    // m = 1 reduces to GRS(S, deg g, g)
    CartesianSet S1(F9, {units});
    ProductPoly gg({UniPoly(F9, {a, 0, 1})});
    REQUIRE(tensor_goppa(S1, gg) == grs(F9, units, 2, gg.factor(0)));
}

TEST_CASE("monomial-Cartesian codes") {
    auto F5 = Field::make(5, 1);
    CartesianSet S(F5, {{1, 2, 3}, {0, 1}});
    ProductPoly one({UniPoly::one(F5), UniPoly::one(F5)});

    auto rep = monomial_cartesian(S, ExponentSet::box(S.sizes(), {1, 1}), one);
    REQUIRE(rep.k() == 1);

    auto full = monomial_cartesian(S, ExponentSet::full(S.sizes()), one);
    REQUIRE(full == LinearCode::full(F5, 6));

    // m = 1 with a box exponent set is exactly GRS
    CartesianSet S1(F5, {{1, 2, 4}});
    UniPoly h(F5, {2, 1});
    for (Elem s : S1.component(0)) REQUIRE(h(s) != 0);
    auto A = ExponentSet::box(S1.sizes(), {2});
    REQUIRE(monomial_cartesian(S1, A, ProductPoly({h})) ==
            grs(F5, S1.component(0), 2, h));

    REQUIRE_THROWS_AS(ExponentSet(S.sizes(), {{3, 0}}), ExponentOutOfFootprint);
}

TEST_CASE("augmented Cartesian codes") {
    auto F7 = Field::make(7, 1);
    CartesianSet S(F7, {{0, 1, 2}, {0, 1, 2, 3}});
    ProductPoly one({UniPoly::one(F7), UniPoly::one(F7)});

    std::vector<std::size_t> kz{0, 0};
    REQUIRE(acar(S, kz, one) == LinearCode::zero(F7, 12));
    std::vector<std::size_t> kf{3, 1};
    REQUIRE(acar(S, kf, one) == LinearCode::full(F7, 12));

    // Lemma parameters on a desk instance: k = 12 - 2*2 = 8, d = min(3, 3) = 3
    std::vector<std::size_t> kv{1, 2};
    auto C = acar(S, kv, one);
    REQUIRE(C.k() == 8);
    auto dr = min_distance(C.gen());
    REQUIRE(dr.exact);
    REQUIRE(dr.d == 3);
}

TEST_CASE("ACar(S, g) and its parameters") {
    auto F7 = Field::make(7, 1);

    // deg g_j = 0 everywhere: the full space
    CartesianSet S(F7, {{0, 1, 2}, {3, 4}});
    ProductPoly c2({UniPoly::constant(F7, 2), UniPoly::one(F7)});
    REQUIRE(acar_g(S, c2) == LinearCode::full(F7, 6));

    // m = 1: ACar(S, g) is the dual of GRS(S, deg g, g)
    std::vector<Elem> pts{0, 1, 2, 3, 5};
    CartesianSet S1(F7, {pts});
    UniPoly g(F7, {2, 0, 1});  // x^2 + 2 has no roots among pts
    for (Elem s : pts) REQUIRE(g(s) != 0);
    REQUIRE(acar_g(S1, ProductPoly({g})) == dual(grs(F7, pts, 2, g)));

    // the [64, 60, 3] side of the Section 2 example
    auto F9 = pinned_f9();
    const Elem a = F9.generator();
    std::vector<Elem> units;
    for (int i = 1; i <= 8; ++i) units.push_back(F9.pow(a, i));
    CartesianSet Su(F9, {units, units});
    ProductPoly gg({UniPoly(F9, {a, 0, 1}), UniPoly(F9, {a, 0, 1})});
    auto A = acar_g(Su, gg);
    REQUIRE(A.n() == 64);
    REQUIRE(A.k() == 60);
    auto dr = min_distance(A.gen());
    REQUIRE(dr.exact);
    REQUIRE(dr.d == 3);  // min deg(g_j) + 1
}

TEST_CASE("goppa constructions") {
    auto F9 = pinned_f9();
    const Elem a = F9.generator();
    auto T2 = FieldTower::make(F9, 2);

    // t = 1: Gamma(S, g) is exactly the dual of the tensor code
    auto T1 = FieldTower::make(F9, 1);
    CartesianSet S(F9, {{0, 1, a}, {1, a, F9.pow(a, 2)}});
    ProductPoly g({UniPoly(F9, {1, 1}), UniPoly(F9, {a, 0, 1})});
    std::string where;
    REQUIRE_FALSE(g.vanishes_somewhere_on(S, &where));
    REQUIRE(goppa_parity(T1, S, g) == dual(tensor_goppa(S, g)));

    // the Section 2 example without the distance part (acceptance covers d)
    std::vector<Elem> units;
    for (int i = 1; i <= 8; ++i) units.push_back(F9.pow(a, i));
    CartesianSet Su(F9, {units, units});
    ProductPoly g2({UniPoly(F9, {a, 0, 1}), UniPoly(F9, {a, 0, 1})});
    auto Gam = goppa_parity(T2, Su, g2);
    REQUIRE(Gam.field() == T2.base());
    REQUIRE(Gam.n() == 64);
    REQUIRE(Gam.k() == 56);

    // m = 1, t = 2 classical Goppa: dimension within [n - t deg g, n - deg g]
    CartesianSet Sc(F9, {units});
    ProductPoly gc({UniPoly(F9, {a, 0, 1})});
    auto classical = goppa_parity(T2, Sc, gc);
    REQUIRE(classical.n() == 8);
    REQUIRE(classical.k() >= 8 - 2 * 2);
    REQUIRE(classical.k() <= 8 - 2);
}

TEST_CASE("both goppa routes agree") {
    auto F9 = pinned_f9();
    const Elem a = F9.generator();
    auto T2 = FieldTower::make(F9, 2);
    std::mt19937 rng(61);

    std::vector<Elem> units;
    for (int i = 1; i <= 8; ++i) units.push_back(F9.pow(a, i));
    CartesianSet Su(F9, {units, units});
    ProductPoly g2({UniPoly(F9, {a, 0, 1}), UniPoly(F9, {a, 0, 1})});
    REQUIRE(goppa_subfield(T2, Su, g2) == goppa_parity(T2, Su, g2));

    for (int it = 0; it < 25; ++it) {
        auto s1 = oracle::random_subset(F9, 4, rng);
        auto s2 = oracle::random_subset(F9, 3, rng);
        CartesianSet S2(F9, {s1, s2});
        ProductPoly g3({oracle::random_nonvanishing(F9, s1, 2, rng),
                        oracle::random_nonvanishing(F9, s2, 1, rng)});
        REQUIRE(goppa_subfield(T2, S2, g3) == goppa_parity(T2, S2, g3));
    }
}

TEST_CASE("dual and hull") {
    auto F2 = Field::make(2, 1);

    REQUIRE(dual(LinearCode::full(F2, 4)) == LinearCode::zero(F2, 4));
    REQUIRE(dual(LinearCode::zero(F2, 4)) == LinearCode::full(F2, 4));

    std::mt19937 rng(67);
    auto F9 = Field::make(3, 2);
    for (int it = 0; it < 50; ++it) {
        LinearCode C(oracle::random_matrix(F9, 3, 6, rng));
        REQUIRE(dual(dual(C)) == C);
        REQUIRE(C.k() + dual(C).k() == C.n());
    }

    // (1, 0) over GF(2): hull is trivial (LCD)
    MatrixGF G(F2, 1, 2);
    G(0, 0) = 1;
    REQUIRE(hull(LinearCode(G)).k() == 0);

    // (1, 1) over GF(2) is self-dual: the hull is the code itself
    MatrixGF G2(F2, 1, 2);
    G2(0, 0) = 1;
    G2(0, 1) = 1;
    LinearCode SD(G2);
    REQUIRE(hull(SD) == SD);
}

TEST_CASE("subfield subcode against brute force") {
    std::mt19937 rng(71);
    for (auto [p, e, t] : std::vector<std::array<unsigned, 3>>{{3, 2, 2}, {2, 2, 2}}) {
        auto E = Field::make(p, e);
        auto T = FieldTower::make(E, t);
        auto Tw1 = FieldTower::make(E, 1);
        for (int it = 0; it < 30; ++it) {
            std::uniform_int_distribution<std::size_t> dn(2, 6), dk(1, 4);
            const std::size_t n = dn(rng);
            const std::size_t k = std::min(dk(rng), n);
            LinearCode C(oracle::random_matrix(E, k, n, rng));
            REQUIRE(subfield_subcode(T, C) == oracle::subfield_subcode_bruteforce(T, C));
            REQUIRE(subfield_subcode(Tw1, C) == C);
        }
    }
    auto F9 = Field::make(3, 2);
    auto T = FieldTower::make(F9, 2);
    REQUIRE(subfield_subcode(T, LinearCode::full(F9, 5)) ==
            LinearCode::full(T.base(), 5));
    REQUIRE(subfield_subcode(T, LinearCode::zero(F9, 5)) ==
            LinearCode::zero(T.base(), 5));
}

TEST_CASE("trace code against brute force") {
    std::mt19937 rng(73);
    auto F9 = Field::make(3, 2);
    auto T = FieldTower::make(F9, 2);
    auto T1 = FieldTower::make(F9, 1);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<std::size_t> dn(2, 6), dk(1, 3);
        const std::size_t n = dn(rng);
        const std::size_t k = std::min(dk(rng), n);
        LinearCode C(oracle::random_matrix(F9, k, n, rng));
        auto tc = trace_code(T, C);
        REQUIRE(tc == oracle::trace_code_bruteforce(T, C));
        REQUIRE(tc.k() >= C.k());
        REQUIRE(tc.k() <= 2 * C.k());
        REQUIRE(trace_code(T1, C) == C);
        REQUIRE(trace_code(T, LinearCode::zero(F9, n)).k() == 0);
    }
}

TEST_CASE("Delsarte: dual of the subfield subcode is the trace of the dual") {
    std::mt19937 rng(79);
    auto F9 = Field::make(3, 2);
    auto T = FieldTower::make(F9, 2);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<std::size_t> dn(2, 7), dk(1, 5);
        const std::size_t n = dn(rng);
        const std::size_t k = std::min(dk(rng), n);
        LinearCode C(oracle::random_matrix(F9, k, n, rng));
        REQUIRE(dual(subfield_subcode(T, C)) == trace_code(T, dual(C)));
    }
}

TEST_CASE("goppa dual is the trace of the tensor code") {
    auto F9 = pinned_f9();
    auto T2 = FieldTower::make(F9, 2);
    std::mt19937 rng(83);
    for (int it = 0; it < 20; ++it) {
        auto s1 = oracle::random_subset(F9, 4, rng);
        CartesianSet S(F9, {s1});
        ProductPoly g({oracle::random_nonvanishing(F9, s1, 2, rng)});
        REQUIRE(dual(goppa_parity(T2, S, g)) == trace_code(T2, tensor_goppa(S, g)));
    }
}

TEST_CASE("code_params") {
    auto F5 = Field::make(5, 1);
    std::vector<Elem> S{1, 2, 3};
    auto C = grs(F5, S, 2, UniPoly::one(F5));
    auto p = code_params(C);
    REQUIRE(p.n == 3);
    REQUIRE(p.k == 2);
    REQUIRE(p.d == 2);
    REQUIRE(p.d_exact);

    auto z = code_params(LinearCode::zero(F5, 4));
    REQUIRE(z.k == 0);
    REQUIRE(z.d == 0);
}
