#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "essalg/comm.hpp"
#include "essalg/findim.hpp"
#include "essalg/lie.hpp"
#include "essalg/nc.hpp"
#include "essalg/standardize.hpp"

namespace essalg::io {

using json = nlohmann::json;

inline json field_to_json(const Field& f) {
    if (f.is_rationals()) return json{{"type", "Q"}};
    return json{{"type", "Fp"}, {"p", f.p}};
}

inline Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InputError("base_field needs a \"type\" of \"Q\" or \"Fp\"");
    std::string t = j["type"].get<std::string>();
    if (t == "Q") return Field::rationals();
    if (t == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw InputError("field Fp needs a positive prime \"p\"");
        return Field::prime(j["p"].get<std::uint32_t>());
    }
    throw InputError("unknown field type \"" + t + "\"");
}

/// Scalars in files are integers or strings like "-2" and "1/3".
inline Scalar scalar_from_json(const json& j, const Field& f) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
    if (!j.is_string()) throw InputError("scalar must be an integer or a string");
    mpq_class q;
    try {
        q = mpq_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw InputError("cannot parse scalar \"" + j.get<std::string>() + "\"");
    }
    q.canonicalize();
    if (f.is_rationals()) return Scalar::rational(q);
    Scalar num = Scalar::from_mpz(f, q.get_num());
    Scalar den = Scalar::from_mpz(f, q.get_den());
    if (den.is_zero()) throw InputError("scalar denominator vanishes in the field");
    return num / den;
}

inline MonomialOrder order_from_json(const json& j) {
    if (!j.contains("order")) return MonomialOrder::grevlex();
    std::string o = j["order"].get<std::string>();
    if (o == "grevlex") return MonomialOrder::grevlex();
    if (o == "lex") return MonomialOrder::lex();
    throw InputError("unknown monomial order \"" + o + "\"");
}

namespace detail {

inline std::vector<std::string> string_list(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError("expected an array under \"" + key + "\"");
    std::vector<std::string> out;
    for (const auto& e : j[key]) {
        if (!e.is_string()) throw InputError("entries of \"" + key + "\" must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline const json& required(const json& j, const std::string& key) {
    if (!j.contains(key)) throw InputError("missing required key \"" + key + "\"");
    return j[key];
}

}  // namespace detail

inline CommPresentation comm_from_json(const json& j, const Budget& budget = {}) {
    Field f = field_from_json(detail::required(j, "base_field"));
    auto vars = detail::string_list(j, "variables");
    std::vector<std::string> rels;
    if (j.contains("relations")) rels = detail::string_list(j, "relations");
    return CommPresentation::parse(f, std::move(vars), rels, order_from_json(j), budget);
}

inline NCPresentation nc_from_json(const json& j) {
    Field f = field_from_json(detail::required(j, "base_field"));
    auto gens = detail::string_list(j, "generators");
    std::vector<std::string> rels;
    if (j.contains("relations")) rels = detail::string_list(j, "relations");
    bool unital = true;
    if (j.contains("unital")) unital = j["unital"].get<bool>();
    return NCPresentation::parse(f, std::move(gens), rels, unital);
}

inline LieAlgebra lie_from_json(const json& j) {
    Field f = field_from_json(detail::required(j, "base_field"));
    auto basis = detail::string_list(j, "basis");
    std::vector<BracketEntry> entries;
    if (j.contains("structure_constants")) {
        for (const auto& q : j["structure_constants"]) {
            if (!q.is_array() || q.size() != 4)
                throw InputError("structure constants are [i, j, k, value] quadruples");
            entries.push_back(BracketEntry{q[0].get<std::size_t>(), q[1].get<std::size_t>(),
                                           q[2].get<std::size_t>(), scalar_from_json(q[3], f)});
        }
    }
    return LieAlgebra::make(f, std::move(basis), entries);
}

inline FinDimAlgebra findim_from_json(const json& j) {
    Field f = field_from_json(detail::required(j, "base_field"));
    auto basis = detail::string_list(j, "basis");
    std::vector<MultEntry> entries;
    if (j.contains("structure_constants")) {
        for (const auto& q : j["structure_constants"]) {
            if (!q.is_array() || q.size() != 4)
                throw InputError("structure constants are [i, j, k, value] quadruples");
            entries.push_back(MultEntry{q[0].get<std::size_t>(), q[1].get<std::size_t>(),
                                        q[2].get<std::size_t>(), scalar_from_json(q[3], f)});
        }
    }
    const json& u = detail::required(j, "unit");
    std::vector<Scalar> unit;
    for (const auto& e : u) unit.push_back(scalar_from_json(e, f));
    return FinDimAlgebra::make(f, std::move(basis), entries, std::move(unit));
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f) {
    if (!j.is_array() || j.size() != rows) throw InputError("action matrix has wrong row count");
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError("action matrix has wrong column count");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(j[r][c], f);
    }
    return m;
}

struct BimoduleFile {
    FinDimAlgebra algebra;
    Bimodule module;
};

inline BimoduleFile bimodule_from_json(const json& j) {
    FinDimAlgebra A = findim_from_json(detail::required(j, "algebra"));
    std::size_t m = detail::required(j, "dimension").get<std::size_t>();
    const json& lj = detail::required(j, "left");
    const json& rj = detail::required(j, "right");
    if (!lj.is_array() || lj.size() != A.dim() || !rj.is_array() || rj.size() != A.dim())
        throw InputError("need one left and one right action matrix per basis element");
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        left.push_back(matrix_from_json(lj[i], m, m, A.field));
        right.push_back(matrix_from_json(rj[i], m, m, A.field));
    }
    return BimoduleFile{A, Bimodule::make(A, m, std::move(left), std::move(right))};
}

inline AlgebraMorphism morphism_from_json(const json& j) {
    NCPresentation src = nc_from_json(detail::required(j, "source"));
    NCPresentation tgt = nc_from_json(detail::required(j, "target"));
    auto image_exprs = detail::string_list(j, "images");
    std::vector<NCPolynomial> images;
    for (const auto& s : image_exprs) images.push_back(tgt.parse_poly(s));
    return AlgebraMorphism::make(std::move(src), std::move(tgt), std::move(images));
}

/// A parsed input file; exactly the member matching `kind` is populated.
struct LoadedFile {
    std::string kind;
    json raw;
    std::optional<CommPresentation> comm;
    std::optional<NCPresentation> nc;
    std::optional<LieAlgebra> lie;
    std::optional<FinDimAlgebra> findim;
    std::optional<BimoduleFile> bimodule;
    std::optional<AlgebraMorphism> morphism;
};

inline LoadedFile load_from_json(const json& j, const Budget& budget = {}) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("input file needs a string \"kind\"");
    LoadedFile out;
    out.kind = j["kind"].get<std::string>();
    out.raw = j;
    if (out.kind == "comm_presentation")
        out.comm = comm_from_json(j, budget);
    else if (out.kind == "nc_presentation")
        out.nc = nc_from_json(j);
    else if (out.kind == "lie_algebra")
        out.lie = lie_from_json(j);
    else if (out.kind == "findim_algebra")
        out.findim = findim_from_json(j);
    else if (out.kind == "bimodule")
        out.bimodule = bimodule_from_json(j);
    else if (out.kind == "morphism")
        out.morphism = morphism_from_json(j);
    else
        throw InputError("unknown input kind \"" + out.kind + "\"");
    return out;
}

inline LoadedFile load_file(const std::string& path, const Budget& budget = {}) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in \"" + path + "\": " + e.what());
    }
    return load_from_json(j, budget);
}

inline json poly_to_json(const Polynomial& p, const std::vector<std::string>& vars) {
    return json(p.str(vars));
}

inline json poly_list_to_json(const std::vector<Polynomial>& ps,
                              const std::vector<std::string>& vars) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str(vars));
    return a;
}

inline json comm_to_json(const CommPresentation& A) {
    json j;
    j["kind"] = "comm_presentation";
    j["base_field"] = field_to_json(A.field);
    j["variables"] = A.vars;
    j["relations"] = poly_list_to_json(A.ideal.generators, A.vars);
    return j;
}

/// Report skeleton shared by every subcommand. Keys are emitted sorted, so
/// identical inputs give byte-identical output except for "timing_ms".
inline json make_report(std::vector<std::string> command, json input, json body,
                        long long timing_ms, const BudgetUsage* usage = nullptr) {
    json r = std::move(body);
    r["schema"] = 1;
    r["command"] = std::move(command);
    r["input"] = std::move(input);
    r["timing_ms"] = timing_ms;
    if (usage)
        r["budget_usage"] = json{{"max_degree_seen", usage->max_degree_seen},
                                 {"pairs_processed", usage->pairs_processed}};
    return r;
}

inline std::string dump_report(const json& r) { return r.dump(2) + "\n"; }

/// The comparison form of a report: everything that must be reproducible.
inline json report_comparable(json r) {
    r.erase("timing_ms");
    return r;
}

}  // namespace essalg::io
