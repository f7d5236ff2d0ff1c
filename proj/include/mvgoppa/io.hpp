#ifndef MVGOPPA_IO_HPP
#define MVGOPPA_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "poly.hpp"
#include "theory.hpp"

namespace mvgoppa {

using nlohmann::json;

inline json field_to_json(const Field& f) {
    return json{{"p", f.p()},
                {"e", f.e()},
                {"modulus", f.modulus()},
                {"generator", f.generator()}};
}

inline Field field_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("e")) throw SpecError("field: missing p or e");
    std::optional<std::vector<Elem>> mod;
    if (j.contains("modulus")) mod = j["modulus"].get<std::vector<Elem>>();
    Field f = Field::make(j["p"].get<std::uint32_t>(), j["e"].get<std::uint32_t>(), mod);
    if (j.contains("generator") && j["generator"].get<Elem>() != f.generator())
        throw SpecError("field: unsupported generator convention");
    return f;
}

inline json matrix_to_json(const MatrixGF& M) {
    std::vector<std::vector<Elem>> data(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        data[i].assign(M.row(i).begin(), M.row(i).end());
    return json{{"field", field_to_json(M.field())},
                {"rows", M.rows()},
                {"cols", M.cols()},
                {"data", data}};
}

inline MatrixGF matrix_from_json(const json& j) {
    const Field f = field_from_json(j.at("field"));
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto data = j.at("data").get<std::vector<std::vector<Elem>>>();
    if (data.size() != rows) throw SpecError("matrix: row count mismatch");
    MatrixGF M(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (data[i].size() != cols) throw SpecError("matrix: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!f.is_valid_elem(data[i][c])) throw SpecError("matrix: bad element code");
            M(i, c) = data[i][c];
        }
    }
    return M;
}

/// Code export: the generator matrix JSON plus n, k and the distance report
/// (d null when not computed).
inline json code_to_json(const LinearCode& C,
                         std::optional<CodeParams> params = std::nullopt) {
    json j = matrix_to_json(C.gen());
    j["n"] = C.n();
    j["k"] = C.k();
    if (params && params->k > 0) {
        j["d"] = params->d;
        j["d_exact"] = params->d_exact;
    } else {
        j["d"] = nullptr;
        j["d_exact"] = false;
    }
    return j;
}

inline LinearCode code_from_json(const json& j) {
    return LinearCode(matrix_from_json(j));
}

// ---------------------------------------------------------------------------
// Text notation: field elements as integer codes or a^k powers of the pinned
// generator; polynomials as comma-separated coefficient lists, low-to-high;
// product polynomials as semicolon-separated factor lists.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim_ws(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

inline Elem parse_elem(const Field& F, const std::string& raw,
                       const std::string& where = "") {
    const std::string tok = detail::trim_ws(raw);
    const std::string ctx = where.empty() ? "" : where + ": ";
    if (tok.empty()) throw SpecError(ctx + "empty element token");
    if (tok == "a") return F.generator();
    if (tok.rfind("a^", 0) == 0) {
        try {
            const long long k = std::stoll(tok.substr(2));
            return F.gen_pow(k);
        } catch (const std::exception&) {
            throw SpecError(ctx + "bad exponent in '" + tok + "'");
        }
    }
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0 || static_cast<std::uint64_t>(v) >= F.q())
            throw SpecError(ctx + "element code out of range: '" + tok + "'");
        return static_cast<Elem>(v);
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception&) {
        throw SpecError(ctx + "unrecognized element '" + tok + "'");
    }
}

inline std::string elem_to_string(const Field& F, Elem x) {
    if (F.e() == 1 || x < F.p()) return std::to_string(x);
    // power notation for proper extension elements
    for (std::uint64_t k = 1; k < F.q() - 1; ++k)
        if (F.gen_pow(static_cast<long long>(k)) == x)
            return "a^" + std::to_string(k);
    return std::to_string(x);
}

/// Comma-separated coefficient list, low-to-high. Column positions in error
/// messages are 1-based token indices.
inline UniPoly parse_unipoly(const Field& F, const std::string& s,
                             const std::string& where = "") {
    const auto toks = detail::split(s, ',');
    std::vector<Elem> coeffs;
    for (std::size_t i = 0; i < toks.size(); ++i)
        coeffs.push_back(
            parse_elem(F, toks[i], where + "[" + std::to_string(i + 1) + "]"));
    return UniPoly(F, std::move(coeffs));
}

/// Semicolon-separated per-variable coefficient lists.
inline ProductPoly parse_product_poly(const Field& F, const std::string& s,
                                      const std::string& where = "") {
    const auto parts = detail::split(s, ';');
    std::vector<UniPoly> factors;
    for (std::size_t j = 0; j < parts.size(); ++j)
        factors.push_back(
            parse_unipoly(F, parts[j], where + " factor " + std::to_string(j + 1)));
    return ProductPoly(std::move(factors));
}

/// Point set: "all", "units", or an explicit comma-separated element list.
inline std::vector<Elem> parse_point_set(const Field& F, const std::string& raw,
                                         const std::string& where = "") {
    const std::string s = detail::trim_ws(raw);
    std::vector<Elem> out;
    if (s == "all") {
        for (std::uint64_t x = 0; x < F.q(); ++x) out.push_back(static_cast<Elem>(x));
        return out;
    }
    if (s == "units") {
        for (std::uint64_t k = 0; k + 1 < F.q(); ++k)
            out.push_back(F.gen_pow(static_cast<long long>(k + 1)));
        return out;
    }
    const auto toks = detail::split(s, ',');
    for (std::size_t i = 0; i < toks.size(); ++i)
        out.push_back(parse_elem(F, toks[i], where + "[" + std::to_string(i + 1) + "]"));
    return out;
}

inline json unipoly_to_json(const UniPoly& f) { return json(f.coeffs()); }

inline json witness_to_json(const Field& F, const FamilyWitness& w) {
    json j;
    j["type"] = "witness";
    j["field"] = field_to_json(F);
    j["S1"] = w.s1;
    j["S2"] = w.s2;
    j["f1"] = unipoly_to_json(w.f1);
    j["g1"] = unipoly_to_json(w.g1);
    j["f2"] = unipoly_to_json(w.g2);  // f2 = g2 by construction
    j["g2"] = unipoly_to_json(w.g2);
    j["p"] = unipoly_to_json(w.p2);
    j["lambda1"] = w.lambda1;
    j["beta1"] = w.beta1;
    j["lambda2"] = w.lambda2;
    j["classification"] = code_class_name(w.label);
    j["m0"] = {{"n", w.params_m0.n}, {"k", w.params_m0.k}, {"d", w.params_m0.d}};
    j["m1"] = {{"n", w.params_m1.n}, {"k", w.params_m1.k}, {"d", w.params_m1.d}};
    return j;
}

}  // namespace mvgoppa

#endif
