// mvgoppa: build multivariate Goppa / tensor-GRS / augmented Cartesian codes,
// compute duals, hulls and EAQECC parameters, run the family search, and
// reproduce the worked examples.
//
// Exit codes: 0 ok, 2 spec or parse error, 3 mathematical precondition
// violation, 4 theorem-assertion mismatch (an internal bug surfaced loudly).

#include <CLI11.hpp>

#include <mvgoppa/io.hpp>
#include <mvgoppa/mvgoppa.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace mvgoppa;

namespace {

std::size_t upow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

struct JobSpec {
    std::string field_str;
    unsigned tower = 1;
    std::vector<std::string> point_sets;  // --S1.. --S4, in order
    std::string g_str, f_str, h_str;
    std::string kvec_str;
    unsigned k = 0;
    std::string family = "goppa";
    std::optional<unsigned> dmax;
    std::string out_path;
    std::string in_path;
};

Field parse_field_spec(const std::string& s) {
    const auto colon = s.find(':');
    const std::string head = s.substr(0, colon);
    std::optional<std::vector<Elem>> modulus;
    if (colon != std::string::npos) {
        std::vector<Elem> m;
        for (const auto& tok : detail::split(s.substr(colon + 1), ',')) {
            try {
                m.push_back(static_cast<Elem>(std::stoul(detail::trim_ws(tok))));
            } catch (const std::exception&) {
                throw SpecError("--field: bad modulus coefficient '" + tok + "'");
            }
        }
        modulus = std::move(m);
    }
    std::uint32_t p = 0, e = 1;
    const auto caret = head.find('^');
    try {
        p = static_cast<std::uint32_t>(std::stoul(head.substr(0, caret)));
        if (caret != std::string::npos)
            e = static_cast<std::uint32_t>(std::stoul(head.substr(caret + 1)));
    } catch (const std::exception&) {
        throw SpecError("--field: expected p^e[:modulus], got '" + s + "'");
    }
    // an invalid field description is a spec error, not a math one
    try {
        return Field::make(p, e, modulus);
    } catch (const MathError& err) {
        throw SpecError("--field: " + std::string(err.what()));
    }
}

struct ResolvedJob {
    FieldTower tower;
    CartesianSet S;
    std::optional<ProductPoly> g, f, h;
    std::vector<std::size_t> kvec;
};

ResolvedJob resolve(const JobSpec& job) {
    Field ext = parse_field_spec(job.field_str);
    FieldTower tower = FieldTower::make(ext, job.tower);

    std::vector<std::vector<Elem>> comps;
    for (std::size_t j = 0; j < job.point_sets.size(); ++j) {
        if (job.point_sets[j].empty())
            throw SpecError("--S" + std::to_string(j + 1) +
                            " is missing (point sets must be contiguous)");
        comps.push_back(
            parse_point_set(ext, job.point_sets[j], "--S" + std::to_string(j + 1)));
    }
    if (comps.empty()) throw SpecError("at least --S1 is required");

    CartesianSet S(ext, std::move(comps));
    ResolvedJob r{std::move(tower), std::move(S), {}, {}, {}, {}};
    auto parse_prod = [&](const std::string& s, const char* flag) {
        ProductPoly p = parse_product_poly(ext, s, flag);
        if (p.m() != r.S.m())
            throw SpecError(std::string(flag) + ": expected " +
                            std::to_string(r.S.m()) + " factor(s), got " +
                            std::to_string(p.m()));
        return p;
    };
    if (!job.g_str.empty()) r.g = parse_prod(job.g_str, "--g");
    if (!job.f_str.empty()) r.f = parse_prod(job.f_str, "--f");
    if (!job.h_str.empty()) r.h = parse_prod(job.h_str, "--h");
    if (!job.kvec_str.empty()) {
        for (const auto& tok : detail::split(job.kvec_str, ',')) {
            try {
                r.kvec.push_back(std::stoul(detail::trim_ws(tok)));
            } catch (const std::exception&) {
                throw SpecError("--kvec: bad entry '" + tok + "'");
            }
        }
        if (r.kvec.size() != r.S.m())
            throw SpecError("--kvec: expected " + std::to_string(r.S.m()) + " entries");
    }
    return r;
}

LinearCode build_code(const JobSpec& job, const ResolvedJob& r) {
    const Field& ext = r.tower.ext();
    if (job.family == "grs") {
        if (r.S.m() != 1) throw SpecError("grs needs exactly --S1");
        UniPoly g = r.g ? r.g->factor(0) : UniPoly::one(ext);
        return grs(ext, r.S.component(0), job.k, g);
    }
    if (job.family == "tensor") {
        if (r.kvec.empty()) {
            if (!r.g) throw SpecError("tensor needs --kvec or --g");
            return tensor_goppa(r.S, *r.g);
        }
        ProductPoly g = r.g ? *r.g : ProductPoly::constant(ext, r.S.m(), 1);
        return tensor_grs(r.S, r.kvec, g);
    }
    if (job.family == "acar") {
        if (r.kvec.empty()) {
            if (!r.g) throw SpecError("acar needs --kvec or --g");
            return acar_g(r.S, *r.g);
        }
        ProductPoly h = r.h ? *r.h : ProductPoly::constant(ext, r.S.m(), 1);
        return acar(r.S, r.kvec, h);
    }
    if (job.family == "goppa") {
        if (!r.g) throw SpecError("goppa needs --g");
        return goppa_parity(r.tower, r.S, *r.g);
    }
    throw SpecError("unknown family '" + job.family + "'");
}

void write_out(const JobSpec& job, const std::string& text) {
    if (job.out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(job.out_path);
    if (!out) throw SpecError("cannot open --out file " + job.out_path);
    out << text << "\n";
}

int cmd_build(const JobSpec& job) {
    auto r = resolve(job);
    auto C = build_code(job, r);
    write_out(job, code_to_json(C).dump(2));
    return 0;
}

int cmd_export(const JobSpec& job, const std::string& what) {
    auto r = resolve(job);
    auto C = build_code(job, r);
    if (what != "gen" && what != "parity")
        throw SpecError("--what must be gen or parity");
    const MatrixGF M = what == "parity" ? kernel(C.gen()) : C.gen();
    write_out(job, matrix_to_json(M).dump(2));
    return 0;
}

LinearCode load_or_build(const JobSpec& job) {
    if (!job.in_path.empty()) {
        std::ifstream in(job.in_path);
        if (!in) throw SpecError("cannot open --in file " + job.in_path);
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw SpecError("--in: " + std::string(e.what()));
        }
        return code_from_json(j);
    }
    auto r = resolve(job);
    return build_code(job, r);
}

int cmd_params(const JobSpec& job) {
    auto C = load_or_build(job);
    auto p = code_params(C, job.dmax);
    if (p.k == 0)
        std::cout << p.n << " 0 - -\n";
    else if (p.d_exact)
        std::cout << p.n << " " << p.k << " " << p.d << " true\n";
    else
        std::cout << p.n << " " << p.k << " >=" << p.d << " false\n";
    return 0;
}

int cmd_report(const JobSpec& job) {
    auto C = load_or_build(job);
    auto cls = classify(C);
    auto p = code_params(C, job.dmax);

    std::cout << "code: [" << p.n << ", " << p.k;
    if (p.k > 0) std::cout << ", " << (p.d_exact ? "" : ">=") << p.d;
    std::cout << "] over GF(" << C.field().q() << ")\n";
    std::cout << "hull dimension: " << cls.hull_dim << "\n";
    std::cout << "classification: " << code_class_name(cls.label) << "\n";

    if (C.k() == 0 || C.k() == C.n()) {
        std::cout << "eaqecc: degenerate code (k = 0 or k = n), no parameters\n";
        return 0;
    }
    auto d = min_distance(C.gen(), job.dmax);
    auto dd = min_distance(dual(C).gen(), job.dmax);
    auto [pa, pb] = eaqecc_from_code(C, d, dd);
    auto print = [](const char* tag, const EaqeccParams& e) {
        std::cout << tag << " [[" << e.n << ", " << e.k << ", "
                  << (e.d_exact ? "" : ">=") << e.d << "; " << e.c << "]]_" << e.q_ary
                  << (e.d_exact && e.mds ? "  (MDS)" : "") << "\n";
    };
    print("eaqecc A:", pa);
    print("eaqecc B:", pb);
    return 0;
}

int cmd_search(const JobSpec& job, const std::string& kind_str, const std::string& sizes,
               std::uint64_t budget, unsigned jobs) {
    Field F = parse_field_spec(job.field_str);
    FamilyKind kind;
    if (kind_str == "lcd")
        kind = FamilyKind::LCD;
    else if (kind_str == "so")
        kind = FamilyKind::SelfOrthogonal;
    else if (kind_str == "sd")
        kind = FamilyKind::SelfDual;
    else
        throw SpecError("--kind must be lcd, so or sd");
    auto toks = detail::split(sizes, ',');
    if (toks.size() != 2) throw SpecError("--sizes must be n1,n2");
    std::size_t n1 = 0, n2 = 0;
    try {
        n1 = std::stoul(detail::trim_ws(toks[0]));
        n2 = std::stoul(detail::trim_ws(toks[1]));
    } catch (const std::exception&) {
        throw SpecError("--sizes must be n1,n2");
    }

    auto result = family_search(F, n1, n2, kind, budget, jobs);
    for (const auto& w : result.witnesses)
        std::cout << witness_to_json(F, w).dump() << "\n";
    json footer{{"type", "summary"},
                {"count", result.witnesses.size()},
                {"explored", result.explored},
                {"truncated", result.truncated}};
    std::cout << footer.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce: the worked examples, with the F_9 modulus pinned to x^2 + 2x + 2
// (the unique primitive-root quadratic validating the printed identities).
// ---------------------------------------------------------------------------

struct Checklist {
    bool all_ok = true;
    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        all_ok = all_ok && ok;
    }
};

const std::vector<Elem> kPinnedF9Modulus{2, 2, 1};

void reproduce_goppa(Checklist& cl) {
    Field F9 = Field::make(3, 2, kPinnedF9Modulus);
    auto T = FieldTower::make(F9, 2);
    const Elem a = F9.generator();
    std::vector<Elem> units;
    for (int i = 1; i <= 8; ++i) units.push_back(F9.gen_pow(i));
    CartesianSet S(F9, {units, units});
    ProductPoly g({UniPoly(F9, {a, 0, 1}), UniPoly(F9, {a, 0, 1})});

    auto C = goppa_parity(T, S, g);
    cl.check(C.n() == 64, "length 64");
    cl.check(C.k() == 56, "dimension 56");
    auto d = min_distance(C.gen());
    cl.check(d.exact && d.d == 4, "minimum distance exactly 4");
    cl.check(goppa_subfield(T, S, g) == C, "parity and subfield-subcode routes agree");
}

void reproduce_acar17(Checklist& cl) {
    Field F17 = Field::make(17, 1);
    CartesianSet S(F17, {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5, 6}});
    ProductPoly one = ProductPoly::constant(F17, 2, 1);
    std::vector<std::size_t> kvec{2, 2};
    auto C = acar(S, kvec, one);
    cl.check(C.n() == 42, "length 42");
    cl.check(C.k() == 22, "dimension 22 (= 42 - 4*5)");
    auto d = min_distance(C.gen());
    cl.check(d.exact && d.d == 5, "minimum distance exactly 5 (= min{5, 6})");
}

struct FamilyData {
    Field F;
    std::vector<Elem> s1, s2;
    UniPoly f1, g1, g2, p2;
    UniPoly code1;  // coordinate-1 polynomial of the constructed family
    CodeClass expected = CodeClass::None;
};

FamilyData family_data(const std::string& name) {
    FamilyData d;
    d.F = Field::make(3, 2, kPinnedF9Modulus);
    const Field& F = d.F;
    const Elem a = F.generator();
    auto ap = [&](int k) { return F.gen_pow(k); };
    d.s2 = {1, ap(5), ap(7)};
    d.g2 = UniPoly(F, {0, 2, a, 1});
    d.p2 = UniPoly(F, {ap(6), ap(2), ap(5), 1});
    if (name == "lcd-family") {
        d.s1 = {0, 1, a, ap(7)};
        d.f1 = UniPoly(F, {1, 1});
        d.g1 = UniPoly(F, {1, ap(5), ap(5), 2});
        d.code1 = d.f1;
        d.expected = CodeClass::LCD;
    } else if (name == "so-family") {
        d.s1 = {0, 1, 2, a};
        d.f1 = UniPoly(F, {a, ap(7), 2, a});
        d.g1 = UniPoly(F, {1, ap(2)});
        d.code1 = d.g1;
        d.expected = CodeClass::SelfOrthogonal;
    } else {  // sd-family
        d.s1 = {ap(1), ap(2), ap(3), ap(5), ap(6), ap(7)};
        d.f1 = UniPoly(F, {2, 2, 0, 1});
        d.g1 = d.f1;
        d.code1 = d.g1;
        d.expected = CodeClass::SelfDual;
    }
    return d;
}

void reproduce_family(Checklist& cl, const std::string& name, unsigned max_m) {
    auto d = family_data(name);
    const Field& F = d.F;

    UniPoly L1 = vanishing_poly(F, d.s1);
    UniPoly L2 = vanishing_poly(F, d.s2);
    if (name == "lcd-family") {
        cl.check(d.f1 * d.g1 == L1.derivative().scaled(2) + L1.scaled(2),
                 "f1 g1 = 2 L1' + 2 L1");
        cl.check(uni_gcd(d.f1, d.g1).degree() == 0, "gcd(f1, g1) is a unit");
    } else if (name == "so-family") {
        cl.check(d.f1 * d.g1 == L1.derivative() + L1.scaled(F.gen_pow(3)),
                 "f1 g1 = L1' + a^3 L1");
        cl.check(d.g1.divides(d.f1), "g1 divides f1");
    } else {
        cl.check(d.f1 * d.g1 == L1.derivative() + L1, "f1 g1 = L1' + L1");
    }
    cl.check(d.g2 * d.g2 == L2.derivative().scaled(F.gen_pow(2)) + d.p2 * L2,
             "f2 g2 = a^2 L2' + p L2 with p = x^3 + a^5 x^2 + a^2 x + a^6");

    for (unsigned m = 0; m <= max_m; ++m) {
        std::vector<std::vector<Elem>> comps{d.s1};
        std::vector<UniPoly> factors{d.code1};
        for (unsigned i = 0; i < m; ++i) {
            comps.push_back(d.s2);
            factors.push_back(d.g2);
        }
        CartesianSet S(F, comps);
        auto C = tensor_goppa(S, ProductPoly(factors));
        auto cls = classify(C);
        const std::size_t expect_n = d.s1.size() * upow(3, m);
        const std::size_t expect_k =
            static_cast<std::size_t>(d.code1.degree()) * upow(3, m);
        const std::string tag = "m = " + std::to_string(m) + ": [" +
                                std::to_string(expect_n) + ", " +
                                std::to_string(expect_k) + "] " +
                                code_class_name(d.expected);
        bool ok = C.n() == expect_n && C.k() == expect_k;
        switch (d.expected) {
            case CodeClass::LCD: ok = ok && cls.lcd; break;
            case CodeClass::SelfOrthogonal: ok = ok && cls.self_orthogonal; break;
            case CodeClass::SelfDual: ok = ok && cls.self_dual; break;
            default: ok = false;
        }
        cl.check(ok, tag);
    }
}

int cmd_reproduce(const std::string& name, std::optional<unsigned> m_opt) {
    Checklist cl;
    if (name == "goppa-64-56-4") {
        reproduce_goppa(cl);
    } else if (name == "acar-f17") {
        reproduce_acar17(cl);
    } else if (name == "lcd-family" || name == "so-family") {
        reproduce_family(cl, name, m_opt.value_or(2));
    } else if (name == "sd-family") {
        reproduce_family(cl, name, m_opt.value_or(1));
    } else {
        throw SpecError("unknown example '" + name +
                        "' (goppa-64-56-4, acar-f17, lcd-family, so-family, sd-family)");
    }
    if (!cl.all_ok) throw MismatchDetected("reproduction checklist failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions for multivariate Goppa codes, tensor products "
                 "of GRS codes, and augmented Cartesian codes"};
    app.require_subcommand(1);

    JobSpec job;
    job.point_sets.resize(4);
    std::string what = "gen", kind, sizes, repro_name;
    std::uint64_t budget = 10'000'000;
    unsigned jobs = 1;
    std::optional<unsigned> repro_m;
    unsigned dmax_raw = 0;

    auto add_common = [&](CLI::App* cmd, bool polys = true) {
        cmd->add_option("--field", job.field_str, "field spec p^e[:modulus coeffs]");
        cmd->add_option("--tower", job.tower, "tower degree t (t | e)");
        cmd->add_option("--S1", job.point_sets[0], "points for x_1: csv, 'all' or 'units'");
        cmd->add_option("--S2", job.point_sets[1], "points for x_2");
        cmd->add_option("--S3", job.point_sets[2], "points for x_3");
        cmd->add_option("--S4", job.point_sets[3], "points for x_4");
        if (polys) {
            cmd->add_option("--g", job.g_str, "product polynomial, ';'-separated factors");
            cmd->add_option("--f", job.f_str, "partner product polynomial");
            cmd->add_option("--weight", job.h_str, "weight polynomial for acar");
            cmd->add_option("--kvec", job.kvec_str, "per-variable dimensions k1,k2,...");
            cmd->add_option("--k", job.k, "dimension for grs");
            cmd->add_option("--family", job.family, "grs | tensor | acar | goppa");
        }
        cmd->add_option("--out", job.out_path, "write output to a file");
    };

    auto* build = app.add_subcommand("build", "construct a code and export it as JSON");
    add_common(build);

    auto* params = app.add_subcommand("params", "print 'n k d exact?' for a code");
    add_common(params);
    auto* params_dmax = params->add_option("--dmax", dmax_raw, "distance search cap");
    params->add_option("--in", job.in_path, "read a code JSON instead of building");

    auto* hullc = app.add_subcommand("hull", "hull, classification and EAQECC report");
    auto* eaq = app.add_subcommand("eaqecc", "hull, classification and EAQECC report");
    auto* clsf = app.add_subcommand("classify", "hull, classification and EAQECC report");
    std::vector<CLI::Option*> report_dmax;
    for (auto* cmd : {hullc, eaq, clsf}) {
        add_common(cmd);
        report_dmax.push_back(cmd->add_option("--dmax", dmax_raw, "distance search cap"));
    }

    auto* search = app.add_subcommand("search",
                                      "family search, one witness JSON per line");
    search->add_option("--field", job.field_str, "field spec p^e[:modulus]")->required();
    search->add_option("--kind", kind, "lcd | so | sd")->required();
    search->add_option("--sizes", sizes, "n1,n2")->required();
    search->add_option("--budget", budget, "enumeration budget");
    search->add_option("--jobs", jobs, "worker threads");

    auto* expo = app.add_subcommand("export", "export the generator or parity matrix");
    add_common(expo);
    expo->add_option("--what", what, "gen | parity");

    auto* repro = app.add_subcommand("reproduce", "run a named golden reproduction");
    repro->add_option("name", repro_name,
                      "goppa-64-56-4 | acar-f17 | lcd-family | so-family | sd-family")
        ->required();
    unsigned repro_m_raw = 0;
    auto* repro_m_opt = repro->add_option("--m", repro_m_raw,
                                          "tensor extension depth for the families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (params_dmax->count() > 0) job.dmax = dmax_raw;
    for (auto* opt : report_dmax)
        if (opt->count() > 0) job.dmax = dmax_raw;
    if (repro_m_opt->count() > 0) repro_m = repro_m_raw;

    // trim unset trailing point sets
    while (!job.point_sets.empty() && job.point_sets.back().empty())
        job.point_sets.pop_back();

    try {
        const bool needs_field = !app.got_subcommand(repro) &&
                                 !(app.got_subcommand(params) && !job.in_path.empty());
        if (needs_field && job.field_str.empty())
            throw SpecError("--field is required");
        if (app.got_subcommand(build)) return cmd_build(job);
        if (app.got_subcommand(params)) return cmd_params(job);
        if (app.got_subcommand(hullc) || app.got_subcommand(eaq) ||
            app.got_subcommand(clsf))
            return cmd_report(job);
        if (app.got_subcommand(search)) return cmd_search(job, kind, sizes, budget, jobs);
        if (app.got_subcommand(expo)) return cmd_export(job, what);
        if (app.got_subcommand(repro)) return cmd_reproduce(repro_name, repro_m);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MismatchDetected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
