// Acceptance suite: every criterion below is checked end to end with exact
// arithmetic (tolerances are zero) and reported as one PASS/FAIL line.
// Exit status is the number of failed criteria.

#include <mvgoppa/mvgoppa.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace mvgoppa;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, double secs) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", idx,
                what.c_str(), secs);
    if (!ok) ++g_failures;
}

void run_criterion(int idx, const std::string& what, const std::function<bool()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, what + note, ok, secs);
}

const std::vector<Elem> kPinnedF9Modulus{2, 2, 1};

Field pinned_f9() { return Field::make(3, 2, kPinnedF9Modulus); }

struct FamilySpec {
    std::vector<Elem> s1, s2;
    UniPoly f1, g1, g2, p2;
    UniPoly code1;
    CodeClass expected;
};

FamilySpec family_spec(const Field& F, CodeClass which) {
    const Elem a = F.generator();
    auto ap = [&](int k) { return F.gen_pow(k); };
    FamilySpec d;
    d.s2 = {1, ap(5), ap(7)};
    d.g2 = UniPoly(F, {0, 2, a, 1});
    d.p2 = UniPoly(F, {ap(6), ap(2), ap(5), 1});
    d.expected = which;
    if (which == CodeClass::LCD) {
        d.s1 = {0, 1, a, ap(7)};
        d.f1 = UniPoly(F, {1, 1});
        d.g1 = UniPoly(F, {1, ap(5), ap(5), 2});
        d.code1 = d.f1;
    } else if (which == CodeClass::SelfOrthogonal) {
        d.s1 = {0, 1, 2, a};
        d.f1 = UniPoly(F, {a, ap(7), 2, a});
        d.g1 = UniPoly(F, {1, ap(2)});
        d.code1 = d.g1;
    } else {
        d.s1 = {ap(1), ap(2), ap(3), ap(5), ap(6), ap(7)};
        d.f1 = UniPoly(F, {2, 2, 0, 1});
        d.g1 = d.f1;
        d.code1 = d.g1;
    }
    return d;
}

bool family_criterion(CodeClass which, unsigned max_m) {
    Field F = pinned_f9();
    auto d = family_spec(F, which);

    UniPoly L1 = vanishing_poly(F, d.s1);
    UniPoly L2 = vanishing_poly(F, d.s2);
    bool ok = true;
    if (which == CodeClass::LCD) {
        ok = ok && d.f1 * d.g1 == L1.derivative().scaled(2) + L1.scaled(2);
        ok = ok && uni_gcd(d.f1, d.g1).degree() == 0;
    } else if (which == CodeClass::SelfOrthogonal) {
        ok = ok && d.f1 * d.g1 == L1.derivative() + L1.scaled(F.gen_pow(3));
        ok = ok && d.g1.divides(d.f1);
    } else {
        ok = ok && d.f1 * d.g1 == L1.derivative() + L1;
    }
    ok = ok && d.g2 * d.g2 == L2.derivative().scaled(F.gen_pow(2)) + d.p2 * L2;

    std::size_t pw = 1;
    for (unsigned m = 0; m <= max_m; ++m, pw *= 3) {
        std::vector<std::vector<Elem>> comps{d.s1};
        std::vector<UniPoly> factors{d.code1};
        for (unsigned i = 0; i < m; ++i) {
            comps.push_back(d.s2);
            factors.push_back(d.g2);
        }
        auto C = tensor_goppa(CartesianSet(F, comps), ProductPoly(factors));
        auto cls = classify(C);
        ok = ok && C.n() == d.s1.size() * pw;
        ok = ok && C.k() == static_cast<std::size_t>(d.code1.degree()) * pw;
        switch (which) {
            case CodeClass::LCD: ok = ok && cls.lcd; break;
            case CodeClass::SelfOrthogonal: ok = ok && cls.self_orthogonal; break;
            default: ok = ok && cls.self_dual;
        }
    }
    return ok;
}

struct TowerPool {
    std::vector<FieldTower> towers;  // q^t <= 9
    TowerPool() {
        towers.push_back(FieldTower::make(Field::make(2, 1), 1));
        towers.push_back(FieldTower::make(Field::make(3, 1), 1));
        towers.push_back(FieldTower::make(Field::make(2, 2), 1));
        towers.push_back(FieldTower::make(Field::make(2, 2), 2));
        towers.push_back(FieldTower::make(Field::make(5, 1), 1));
        towers.push_back(FieldTower::make(Field::make(7, 1), 1));
        towers.push_back(FieldTower::make(Field::make(2, 3), 1));
        towers.push_back(FieldTower::make(Field::make(2, 3), 3));
        towers.push_back(FieldTower::make(pinned_f9(), 1));
        towers.push_back(FieldTower::make(pinned_f9(), 2));
    }
};

// random grid with n <= max_n, m in {1, 2}
CartesianSet random_grid(const Field& F, std::size_t max_n, std::mt19937& rng,
                         std::size_t min_nj = 1) {
    std::uniform_int_distribution<int> dm(1, 2);
    const int m = dm(rng);
    for (;;) {
        std::vector<std::vector<Elem>> comps;
        std::size_t n = 1;
        for (int j = 0; j < m; ++j) {
            const std::size_t cap = std::min<std::size_t>(F.q(), max_n / n);
            if (cap < min_nj) break;
            std::uniform_int_distribution<std::size_t> dn(min_nj, cap);
            const std::size_t nj = dn(rng);
            comps.push_back(oracle::random_subset(F, nj, rng));
            n *= nj;
        }
        if (static_cast<int>(comps.size()) == m && n <= max_n)
            return CartesianSet(F, comps);
    }
}

// A degree-d polynomial without roots on pts exists unless pts covers the
// whole field and d = 1; the pickers below avoid that one infeasible case.
int feasible_degree(const Field& F, std::size_t npts, int lo, int hi,
                    std::mt19937& rng) {
    std::uniform_int_distribution<int> dd(lo, hi);
    for (;;) {
        const int d = dd(rng);
        if (!(npts == F.q() && d == 1)) return d;
    }
}

ProductPoly random_nonvanishing_product(const CartesianSet& S, std::mt19937& rng) {
    std::vector<UniPoly> fs;
    for (std::size_t j = 0; j < S.m(); ++j) {
        const int d = feasible_degree(S.field(), S.size(j), 0,
                                      static_cast<int>(S.size(j)), rng);
        fs.push_back(oracle::random_nonvanishing(S.field(), S.component(j), d, rng));
    }
    return ProductPoly(std::move(fs));
}

// 6a: dual(T(S, kvec, g)) = ACar(S, n - k, L/g)
bool suite_dual_acar() {
    TowerPool pool;
    std::mt19937 rng(20260809);
    int done = 0;
    while (done < 200) {
        for (const auto& tw : pool.towers) {
            const Field& F = tw.ext();
            CartesianSet S = random_grid(F, 12, rng);
            std::vector<std::size_t> kvec(S.m());
            for (std::size_t j = 0; j < S.m(); ++j) {
                std::uniform_int_distribution<std::size_t> dk(0, S.size(j));
                kvec[j] = dk(rng);
            }
            ProductPoly g = random_nonvanishing_product(S, rng);
            auto lhs = dual(tensor_grs(S, kvec, g));

            std::vector<std::size_t> kdual(S.m());
            for (std::size_t j = 0; j < S.m(); ++j) kdual[j] = S.size(j) - kvec[j];
            const auto Lv = values_on_grid(S, S.big_L());
            const auto gv = values_on_grid(S, g);
            std::vector<Elem> w(S.n());
            for (std::size_t i = 0; i < S.n(); ++i) w[i] = F.div(Lv[i], gv[i]);
            auto rhs = monomial_cartesian(S, ExponentSet::acar(S.sizes(), kdual), w);
            if (lhs != rhs) return false;
            ++done;
        }
    }
    return true;
}

// 6b: goppa_parity = goppa_subfield
bool suite_goppa_routes() {
    TowerPool pool;
    std::mt19937 rng(20260810);
    int done = 0;
    while (done < 200) {
        for (const auto& tw : pool.towers) {
            CartesianSet S = random_grid(tw.ext(), 12, rng);
            ProductPoly g = random_nonvanishing_product(S, rng);
            if (goppa_parity(tw, S, g) != goppa_subfield(tw, S, g)) return false;
            ++done;
        }
    }
    return true;
}

// 6c: Delsarte with the brute-force subfield subcode as oracle, n <= 8
bool suite_delsarte() {
    std::vector<FieldTower> towers{FieldTower::make(Field::make(2, 2), 2),
                                   FieldTower::make(Field::make(2, 3), 3),
                                   FieldTower::make(pinned_f9(), 2)};
    std::mt19937 rng(20260811);
    int done = 0;
    while (done < 200) {
        for (const auto& tw : towers) {
            const Field& E = tw.ext();
            std::uniform_int_distribution<std::size_t> dn(2, 8), dk(1, 5);
            const std::size_t n = dn(rng);
            const std::size_t k = std::min(dk(rng), n);
            LinearCode C(oracle::random_matrix(E, k, n, rng));
            if (subfield_subcode(tw, C) != oracle::subfield_subcode_bruteforce(tw, C))
                return false;
            if (dual(subfield_subcode(tw, C)) != trace_code(tw, dual(C))) return false;
            ++done;
        }
    }
    return true;
}

// 6d: intersection identities under the degree hypothesis
bool suite_intersections() {
    TowerPool pool;
    std::mt19937 rng(20260812);
    int done = 0;
    while (done < 200) {
        for (const auto& tw : pool.towers) {
            const Field& F = tw.ext();
            CartesianSet S = random_grid(F, 12, rng, 2);
            std::vector<UniPoly> gs, hs;
            for (std::size_t j = 0; j < S.m(); ++j) {
                const int dgj = feasible_degree(F, S.size(j), 1,
                                                static_cast<int>(S.size(j)) - 1, rng);
                const int dhj = feasible_degree(F, S.size(j), 1,
                                                static_cast<int>(S.size(j)) - dgj, rng);
                gs.push_back(oracle::random_nonvanishing(F, S.component(j), dgj, rng));
                hs.push_back(oracle::random_nonvanishing(F, S.component(j), dhj, rng));
            }
            ProductPoly g(gs), gp(hs);
            // both ops assert their theorem internally (MismatchDetected)
            intersect_tensor(S, g, gp);
            intersect_goppa(tw, S, g, gp);
            ++done;
        }
    }
    return true;
}

// certificate triples in the Section-5 shape: partner candidates at the
// distinguished coordinate, f_j = g_j at the full-degree ones
struct CertTriple {
    CartesianSet S;
    ProductPoly g, f;
};

std::optional<CertTriple> random_cert_triple(const Field& F, std::mt19937& rng,
                                             int force_m = 0) {
    if (F.q() < 4) return std::nullopt;  // no room for a proper point set
    std::uniform_int_distribution<int> dm(1, 2);
    const int m = force_m ? force_m : dm(rng);
    // keep s1 a proper subset so every degree in [1, n1-1] is feasible
    std::uniform_int_distribution<std::size_t> dn1(
        2, std::min<std::uint64_t>(6, F.q() - 1));
    const std::size_t n1 = dn1(rng);
    auto s1 = oracle::random_subset(F, n1, rng);
    std::uniform_int_distribution<int> ddeg(1, static_cast<int>(n1) - 1);
    UniPoly g1 = oracle::random_nonvanishing(F, s1, ddeg(rng), rng);
    auto cands = partner_candidates(F, s1, g1);
    if (cands.empty()) return std::nullopt;
    std::vector<std::vector<Elem>> comps{s1};
    std::vector<UniPoly> gfac{g1}, ffac{cands.front().f};
    if (m == 2) {
        std::uniform_int_distribution<std::size_t> dn2(
            1, std::min<std::uint64_t>(3, F.q() - 1));
        const std::size_t n2 = dn2(rng);
        auto s2 = oracle::random_subset(F, n2, rng);
        UniPoly g2 = oracle::random_nonvanishing(F, s2, static_cast<int>(n2), rng);
        comps.push_back(s2);
        gfac.push_back(g2);
        ffac.push_back(g2);  // proportional partner at the full coordinate
    }
    return CertTriple{CartesianSet(F, comps), ProductPoly(gfac), ProductPoly(ffac)};
}

// 6e: hull identities for certificate triples; Goppa hull containment with
// equality at t = 1
bool suite_hulls() {
    TowerPool pool;
    std::mt19937 rng(20260813);
    int done = 0;
    while (done < 200) {
        for (const auto& tw : pool.towers) {
            auto trip = random_cert_triple(tw.ext(), rng);
            if (!trip) continue;
            // asserts Hull(T) = T(gcd) = Hull(ACar) internally
            hull_tensor(trip->S, trip->g, trip->f);
            // asserts the containment, and equality at t = 1
            auto rep = hull_goppa_bound(tw, trip->S, trip->g, trip->f);
            if (tw.t() == 1 && !rep.equal) return false;
            ++done;
        }
    }
    return true;
}

// 6f: Remark / Lemma parameter formulas against exhaustive enumeration
bool suite_parameter_formulas() {
    TowerPool pool;
    std::mt19937 rng(20260814);
    int done = 0;
    while (done < 200) {
        for (const auto& tw : pool.towers) {
            const Field& F = tw.ext();
            CartesianSet S = random_grid(F, 12, rng);
            // keep q^k <= 2^18 for the enumeration oracle
            std::vector<std::size_t> kvec(S.m());
            double logq = std::log2(static_cast<double>(F.q()));
            for (std::size_t j = 0; j < S.m(); ++j) {
                std::uniform_int_distribution<std::size_t> dk(1, S.size(j));
                kvec[j] = dk(rng);
            }
            double kbits = 1.0;
            for (auto kj : kvec) kbits *= static_cast<double>(kj);
            if (kbits * logq > 18.0) continue;

            ProductPoly g = random_nonvanishing_product(S, rng);

            // tensor: [n, prod k_j, prod (n_j - k_j + 1)]
            auto T = tensor_grs(S, kvec, g);
            std::size_t expect_k = 1, expect_d = 1;
            bool full = true, zero = false;
            for (std::size_t j = 0; j < S.m(); ++j) {
                expect_k *= kvec[j];
                expect_d *= S.size(j) - kvec[j] + 1;
                if (kvec[j] != S.size(j)) full = false;
                if (kvec[j] == 0) zero = true;
            }
            if (T.k() != expect_k) return false;
            if (!zero && !full) {
                if (oracle::min_weight_bruteforce(T) != expect_d) return false;
                if (min_distance(T.gen()).d != expect_d) return false;
            }

            // ACar: k = prod n_j - prod (n_j - k_j), d = min (n_j - k_j + 1)
            auto A = acar(S, kvec, g);
            std::size_t prod_nk = 1, exp_d = SIZE_MAX;
            for (std::size_t j = 0; j < S.m(); ++j) {
                prod_nk *= S.size(j) - kvec[j];
                exp_d = std::min(exp_d, S.size(j) - kvec[j] + 1);
            }
            if (A.k() != S.n() - prod_nk) return false;
            if (A.k() > 0 && A.k() < S.n()) {
                double abits = static_cast<double>(A.k()) * logq;
                if (abits <= 18.0 &&
                    oracle::min_weight_bruteforce(A) != exp_d) return false;
                if (min_distance(A.gen()).d != exp_d) return false;
            }
            ++done;
        }
    }
    return true;
}

// 7: EAQECC parameters
bool suite_eaqecc() {
    std::mt19937 rng(20260815);
    // t = 1: >= 100 certificate instances, all MDS
    std::vector<Field> fields{Field::make(5, 1), Field::make(7, 1), pinned_f9(),
                              Field::make(2, 3)};
    int done = 0;
    while (done < 100) {
        for (const auto& F : fields) {
            auto trip = random_cert_triple(F, rng, 1);
            if (!trip) continue;
            auto Tg = tensor_goppa(trip->S, trip->g);
            if (Tg.k() == 0 || Tg.k() == Tg.n()) continue;
            auto [pa, pb] = eaqecc_tensor(trip->S, trip->g, trip->f);
            if (!is_mds_eaqecc(pa) || !is_mds_eaqecc(pb)) return false;
            // cross-check against the hull-based construction
            auto [ca, cb] = eaqecc_from_code(Tg, min_distance(Tg.gen()),
                                             min_distance(dual(Tg).gen()));
            if (pa.k != ca.k || pa.c != ca.c || pa.d != ca.d) return false;
            if (pb.k != cb.k || pb.c != cb.c) return false;
            ++done;
        }
    }
    // m = 2 instances satisfy the Singleton bound (equality needs trivial
    // extra coordinates, so it is not asserted here)
    int wide = 0;
    while (wide < 40) {
        for (const auto& F : fields) {
            auto trip = random_cert_triple(F, rng, 2);
            if (!trip) continue;
            auto [pa, pb] = eaqecc_tensor(trip->S, trip->g, trip->f);
            if (static_cast<long long>(pa.n) + pa.c - pa.k <
                2 * (static_cast<long long>(pa.d) - 1))
                return false;
            if (static_cast<long long>(pb.n) + pb.c - pb.k <
                2 * (static_cast<long long>(pb.d) - 1))
                return false;
            ++wide;
        }
    }
    // t = 2 toys: computed dimensions respect the Proposition bounds
    auto F9 = pinned_f9();
    auto T2 = FieldTower::make(F9, 2);
    int toys = 0;
    while (toys < 20) {
        auto trip = random_cert_triple(F9, rng);
        if (!trip) continue;
        auto C = goppa_parity(T2, trip->S, trip->g);
        if (C.k() == 0 || C.k() == C.n()) continue;
        auto rep = eaqecc_goppa(T2, trip->S, trip->g, trip->f);
        if (rep.computed_a.k > rep.bound_a.k) return false;
        if (rep.computed_a.c > rep.bound_a.c) return false;
        if (rep.computed_b.k > rep.bound_b.k) return false;
        if (rep.computed_b.c > rep.bound_b.c) return false;
        ++toys;
    }
    return true;
}

// 8: dimension and distance bounds on random Goppa instances
bool suite_goppa_bounds() {
    TowerPool pool;
    std::mt19937 rng(20260816);
    int done = 0;
    while (done < 500) {
        for (const auto& tw : pool.towers) {
            const Field& F = tw.ext();
            CartesianSet S = random_grid(F, 12, rng);
            std::vector<UniPoly> gs;
            long long D = 1;
            int min_deg = INT_MAX;
            for (std::size_t j = 0; j < S.m(); ++j) {
                const int d =
                    feasible_degree(F, S.size(j), 0, static_cast<int>(S.size(j)), rng);
                gs.push_back(oracle::random_nonvanishing(F, S.component(j), d, rng));
                D *= d;
                min_deg = std::min(min_deg, d);
            }
            ProductPoly g(gs);
            auto C = goppa_parity(tw, S, g);
            const auto n = static_cast<long long>(S.n());
            const auto k = static_cast<long long>(C.k());
            if (k < n - static_cast<long long>(tw.t()) * D) return false;
            if (k > n - D) return false;
            if (k >= 1) {
                auto d = min_distance(C.gen());
                if (!d.exact) return false;
                if (static_cast<int>(d.d) < min_deg + 1) return false;
            }
            ++done;
        }
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "[64, 56, 4] multivariate Goppa code over F_3", [] {
        Field F9 = pinned_f9();
        auto T = FieldTower::make(F9, 2);
        const Elem a = F9.generator();
        std::vector<Elem> units;
        for (int i = 1; i <= 8; ++i) units.push_back(F9.gen_pow(i));
        CartesianSet S(F9, {units, units});
        ProductPoly g({UniPoly(F9, {a, 0, 1}), UniPoly(F9, {a, 0, 1})});
        auto C = goppa_parity(T, S, g);
        auto d = min_distance(C.gen());
        return C.n() == 64 && C.k() == 56 && d.exact && d.d == 4;
    });

    run_criterion(2, "LCD family: identities and [4*3^m, 3^m] for m in {0,1,2}",
                  [] { return family_criterion(CodeClass::LCD, 2); });

    run_criterion(3, "self-orthogonal family: [4*3^m, 3^m] for m in {0,1,2}",
                  [] { return family_criterion(CodeClass::SelfOrthogonal, 2); });

    run_criterion(4, "self-dual family: [6*3^m, 3^(m+1)] for m in {0,1}",
                  [] { return family_criterion(CodeClass::SelfDual, 1); });

    run_criterion(5, "ACar over F_17 with n=(6,7), kvec=(2,2): [42, 22, 5]", [] {
        Field F17 = Field::make(17, 1);
        CartesianSet S(F17, {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5, 6}});
        std::vector<std::size_t> kvec{2, 2};
        auto C = acar(S, kvec, ProductPoly::constant(F17, 2, 1));
        auto d = min_distance(C.gen());
        return C.n() == 42 && C.k() == 22 && d.exact && d.d == 5;
    });

    run_criterion(6, "dual(T(S,kvec,g)) = ACar(S, n-k, L/g), 200+ instances",
                  suite_dual_acar);
    run_criterion(6, "goppa_parity = goppa_subfield, 200+ instances",
                  suite_goppa_routes);
    run_criterion(6, "Delsarte identity with brute-force oracle, 200+ instances",
                  suite_delsarte);
    run_criterion(6, "intersection identities T(gcd), Gamma(lcm), 200+ instances",
                  suite_intersections);
    run_criterion(6, "hull identities for certificate triples, 200+ instances",
                  suite_hulls);
    run_criterion(6, "parameter formulas vs exhaustive enumeration, 200+ instances",
                  suite_parameter_formulas);

    run_criterion(7, "EAQECC: 100+ t=1 m=1 MDS instances, m=2 Singleton; t=2 dim bounds",
                  suite_eaqecc);

    run_criterion(8, "Goppa dimension and distance bounds, 500+ instances",
                  suite_goppa_bounds);

    if (g_failures == 0) std::printf("all acceptance criteria passed\n");
    return g_failures;
}
