#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "essalg/essalg.hpp"
#include "essalg/json_io.hpp"

namespace {

using namespace essalg;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

Budget budget_from_env() {
    Budget b;
    if (const char* d = std::getenv("ESSALG_BUDGET_DEGREE")) b.max_degree = std::stoul(d);
    if (const char* p = std::getenv("ESSALG_BUDGET_PAIRS")) b.max_pairs = std::stoull(p);
    return b;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& e : out) {
        std::size_t a = e.find_first_not_of(" \t");
        std::size_t b = e.find_last_not_of(" \t");
        e = (a == std::string::npos) ? "" : e.substr(a, b - a + 1);
        if (e.empty()) throw InputError("empty entry in comma-separated list");
    }
    return out;
}

json presentation_body(const CommPresentation& A) {
    json j;
    j["variables"] = A.vars;
    j["relations"] = io::poly_list_to_json(A.ideal.generators, A.vars);
    j["zero_ring"] = A.is_zero_ring();
    return j;
}

json usage_body(const BudgetUsage& u) {
    return json{{"max_degree_seen", u.max_degree_seen}, {"pairs_processed", u.pairs_processed}};
}

json smooth_body(const SmoothResult& r, const std::vector<std::string>& vars) {
    json j;
    j["smooth"] = r.smooth;
    j["dimension"] = r.dim;
    j["minor_size"] = r.minor_size;
    j["witness"] = io::poly_list_to_json(r.witness, vars);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json unramified_body(const UnramifiedResult& r, const std::vector<std::string>& vars) {
    json j;
    j["unramified"] = r.unramified;
    j["minor_size"] = r.minor_size;
    j["witness"] = io::poly_list_to_json(r.witness, vars);
    return j;
}

json sequence_body(const SequenceCheck& sc, const std::vector<std::string>& vars) {
    json j;
    j["regular"] = sc.regular;
    if (!sc.regular) {
        j["failing_index"] = sc.failing_index;
        j["reason"] = sc.reason;
    }
    json steps = json::array();
    for (const auto& st : sc.cert.steps)
        steps.push_back(json{{"element", st.element.str(vars)},
                             {"normal_form", st.normal_form.str(vars)}});
    j["steps"] = steps;
    return j;
}

/// Inputs that arrive embedded in a report instead of as files on disk.
struct EmbeddedInputs {
    std::optional<json> input;
    std::optional<json> target;
    std::optional<json> witness;
};

io::LoadedFile load_primary(const std::string& path, const EmbeddedInputs& emb,
                            const Budget& budget) {
    if (emb.input) return io::load_from_json(*emb.input, budget);
    return io::load_file(path, budget);
}

json load_raw(const std::string& path, const std::optional<json>& emb) {
    if (emb) return *emb;
    std::ifstream in(path);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

struct HandlerOut {
    json body;
    json input_echo;
    std::optional<json> target_echo;
    std::optional<json> witness_echo;
    std::optional<BudgetUsage> usage;
};

const CommPresentation& need_comm(const io::LoadedFile& lf, const std::string& command) {
    if (!lf.comm)
        throw InputError("\"" + command + "\" needs a comm_presentation input, got \"" + lf.kind +
                         "\"");
    return *lf.comm;
}

const NCPresentation& need_nc(const io::LoadedFile& lf, const std::string& command) {
    if (!lf.nc)
        throw InputError("\"" + command + "\" needs an nc_presentation input, got \"" + lf.kind +
                         "\"");
    return *lf.nc;
}

HandlerOut do_krull(const io::LoadedFile& lf) {
    const CommPresentation& A = need_comm(lf, "krull");
    KrullResult r = krull_dimension(A);
    HandlerOut h;
    h.body["krull_dimension"] = r.dim;
    h.body["zero_ring"] = r.zero_ring;
    h.input_echo = lf.raw;
    h.usage = A.ideal.gb.usage;
    return h;
}

HandlerOut do_degeneracy(const io::LoadedFile& lf, const std::string& sequence_csv) {
    const CommPresentation& A = need_comm(lf, "degeneracy");
    std::optional<std::vector<Polynomial>> seq;
    if (!sequence_csv.empty()) {
        std::vector<Polynomial> elems;
        for (const auto& e : split_csv(sequence_csv)) elems.push_back(A.parse_poly(e));
        seq = std::move(elems);
    }
    DegeneracyVerdict v = degeneracy_verdict(A, seq);
    HandlerOut h;
    h.body["verdict"] = v.not_quasi_free ? "not-quasi-free" : "inconclusive";
    if (!v.route.empty()) h.body["route"] = v.route;
    h.body["krull"] = json{{"dimension", v.krull.dim}, {"zero_ring", v.krull.zero_ring}};
    h.body["provenance"] = v.provenance;
    if (!v.report.empty()) h.body["report"] = v.report;
    if (v.sequence_check) {
        json sj = sequence_body(*v.sequence_check, A.vars);
        if (v.ledger) {
            sj["flat_dimension"] = v.ledger->flat_dimension;
            sj["koszul_confirmed"] = v.ledger->koszul_confirmed;
            sj["tor_dims"] = v.ledger->tor_dims;
        }
        h.body["sequence"] = sj;
    }
    if (v.smooth) h.body["smooth"] = smooth_body(*v.smooth, A.vars);
    h.input_echo = lf.raw;
    h.usage = A.ideal.gb.usage;
    return h;
}

HandlerOut do_hochschild(const io::LoadedFile& lf, const std::string& module_spec,
                         std::size_t bound, bool normalized, bool verdict, unsigned jobs,
                         const std::string& module_path_raw, const EmbeddedInputs& emb) {
    if (!lf.findim)
        throw InputError("\"hochschild\" needs a findim_algebra input, got \"" + lf.kind + "\"");
    const FinDimAlgebra& A = *lf.findim;
    HandlerOut h;
    h.input_echo = lf.raw;

    std::optional<io::BimoduleFile> custom;
    std::string module_name = module_spec;
    if (module_spec != "regular" && module_spec != "dual") {
        json raw = load_raw(module_path_raw.empty() ? module_spec : module_path_raw, emb.target);
        io::LoadedFile mf = io::load_from_json(raw);
        if (!mf.bimodule) throw InputError("the module file must have kind \"bimodule\"");
        custom = std::move(*mf.bimodule);
        module_name = "custom";
        h.target_echo = raw;
    }

    if (verdict) {
        std::vector<std::pair<std::string, Bimodule>> extras;
        if (custom) extras.emplace_back("custom", custom->module);
        QuasiFreeObstruction q = hochschild_lower_bound(A, bound, extras, jobs, normalized);
        h.body["verdict"] = q.not_quasi_free ? "not-quasi-free" : "inconclusive";
        if (q.not_quasi_free) {
            h.body["witness_degree"] = q.witness_degree;
            h.body["witness_module"] = q.witness_module;
            h.body["witness_dim"] = q.witness_dim;
        }
        json table;
        for (const auto& [name, dims] : q.table) table[name] = dims;
        h.body["table"] = table;
    } else {
        Bimodule M = custom              ? custom->module
                     : module_spec == "dual" ? Bimodule::dual(A)
                                             : Bimodule::regular(A);
        h.body["dims"] = hochschild_dims(A, M, bound, normalized, jobs);
        h.body["module"] = module_name;
    }
    h.body["normalized"] = normalized;
    h.body["bound"] = bound;
    return h;
}

HandlerOut do_lie(const io::LoadedFile& lf, const std::string& module_spec, long bound_opt,
                  bool verdict, unsigned jobs) {
    if (!lf.lie)
        throw InputError("\"lie-cohomology\" needs a lie_algebra input, got \"" + lf.kind + "\"");
    const LieAlgebra& g = *lf.lie;
    std::size_t bound = bound_opt < 0 ? g.dim() : static_cast<std::size_t>(bound_opt);
    HandlerOut h;
    h.input_echo = lf.raw;
    if (verdict) {
        LieVerdict v = lie_quasifree_verdict(g, bound, jobs);
        h.body["verdict"] = v.not_quasi_free ? "not-quasi-free" : "inconclusive";
        if (v.not_quasi_free) {
            h.body["witness_degree"] = v.witness_degree;
            h.body["witness_dim"] = v.witness_dim;
        }
        h.body["scanned_up_to"] = v.scanned_up_to;
        h.body["dims"] = v.dims;
    } else {
        LieModule M = module_spec == "adjoint" ? LieModule::adjoint(g) : LieModule::trivial(g);
        h.body["dims"] = chevalley_eilenberg_dims(g, M, bound, jobs);
        h.body["module"] = module_spec;
        h.body["bound"] = bound;
    }
    return h;
}

HandlerOut do_standardize(const io::LoadedFile& lf, const Budget& budget) {
    const NCPresentation& A = need_nc(lf, "standardize");
    StandardizedAlgebra S = standardize(A, budget);
    HandlerOut h;
    h.body["collapsed"] = S.collapsed;
    h.body["full"] = presentation_body(S.full);
    h.body["principal"] = presentation_body(S.principal);
    if (S.idempotent)
        h.body["idempotent"] = S.full.vars[*S.idempotent];
    else
        h.body["idempotent"] = nullptr;
    h.input_echo = lf.raw;
    h.usage = S.principal.ideal.gb.usage;
    return h;
}

EssMode mode_from_string(const std::string& s) {
    if (s == "smooth") return EssMode::Smooth;
    if (s == "unramified") return EssMode::Unramified;
    if (s == "etale") return EssMode::Etale;
    throw InputError("unknown mode \"" + s + "\" (expected smooth, unramified, or etale)");
}

HandlerOut do_smooth(const io::LoadedFile& lf, bool essential, const std::string& mode_str,
                     const Budget& budget) {
    EssMode mode = mode_from_string(mode_str);
    HandlerOut h;
    h.input_echo = lf.raw;
    h.body["mode"] = ess_mode_str(mode);
    if (lf.comm) {
        if (essential)
            throw InputError(
                "essential mode needs an nc_presentation or morphism input; for a commutative "
                "presentation drop --essential");
        const CommPresentation& A = *lf.comm;
        bool passed = true;
        if (mode == EssMode::Smooth || mode == EssMode::Etale) {
            SmoothResult r = jacobian_smooth(A);
            h.body["smooth"] = smooth_body(r, A.vars);
            passed = passed && r.smooth;
        }
        if (mode == EssMode::Unramified || mode == EssMode::Etale) {
            UnramifiedResult r = unramified_check(A);
            h.body["unramified"] = unramified_body(r, A.vars);
            passed = passed && r.unramified;
        }
        h.body["passed"] = passed;
        h.usage = A.ideal.gb.usage;
    } else if (lf.nc) {
        EssentialVerdict v = essential_check(*lf.nc, mode, budget);
        h.body["passed"] = v.passed;
        h.body["collapsed"] = v.collapsed;
        h.body["notes"] = v.notes;
        h.body["principal"] = presentation_body(v.standardization.principal);
        if (v.smooth) h.body["smooth"] = smooth_body(*v.smooth, v.standardization.principal.vars);
        if (v.unramified)
            h.body["unramified"] =
                unramified_body(*v.unramified, v.standardization.principal.vars);
    } else if (lf.morphism) {
        const AlgebraMorphism& m = *lf.morphism;
        SurjectionVerdict v = essential_surjection_check(m.source, m.target, mode, budget);
        h.body["supported"] = v.supported;
        h.body["passed"] = v.passed;
        json kg = json::array();
        StandardizedAlgebra S = standardize(m.source, budget);
        for (const auto& g : v.kernel_gens) kg.push_back(g.str(S.principal.vars));
        h.body["kernel_generators"] = kg;
        if (v.failing_index > 0) {
            h.body["failing_index"] = v.failing_index;
            h.body["failing_residue"] = v.failing_residue.str(S.principal.vars);
        }
        h.body["notes"] = v.notes;
    } else {
        throw InputError("\"smooth\" needs a comm_presentation, nc_presentation, or morphism");
    }
    return h;
}

HandlerOut do_cover(const io::LoadedFile& lf, const std::string& elements_csv,
                    const Budget& budget) {
    const NCPresentation& base = need_nc(lf, "cover");
    StandardizedAlgebra S = standardize(base, budget);
    if (S.collapsed) throw InputError("the base standardization is the zero ring; it has no covers");
    const CommPresentation& P = S.principal;
    std::vector<CoverChart> charts;
    for (const auto& e : split_csv(elements_csv))
        charts.push_back(CoverChart{P.parse_poly(e), std::nullopt, std::nullopt});
    CoverReport rep = cover_check(base, charts, 8, budget);
    HandlerOut h;
    h.body["verified"] = rep.verified;
    h.body["detail"] = rep.detail;
    json cj = json::array();
    for (const auto& c : rep.charts)
        cj.push_back(json{{"certified", c.certified}, {"detail", c.detail}});
    h.body["charts"] = cj;
    h.body["unity"] = io::poly_list_to_json(rep.unity, P.vars);
    if (!rep.failure_basis.empty())
        h.body["failure_basis"] = io::poly_list_to_json(rep.failure_basis, P.vars);
    h.input_echo = lf.raw;
    h.usage = P.ideal.gb.usage;
    return h;
}

HandlerOut do_localize(const io::LoadedFile& lf, const std::string& at_expr,
                       const std::string& witness_path, std::uint32_t degree_bound,
                       const Budget& budget, const EmbeddedInputs& emb) {
    if (!lf.morphism)
        throw InputError("\"localize\" needs a morphism input, got \"" + lf.kind + "\"");
    const AlgebraMorphism& nu = *lf.morphism;
    CommPresentation P = standardize(nu.source, budget).principal;
    Polynomial f = P.parse_poly(at_expr);

    HandlerOut h;
    h.input_echo = lf.raw;
    std::optional<LocalizationWitness> witness;
    if (!witness_path.empty() || emb.witness) {
        json wj = load_raw(witness_path, emb.witness);
        h.witness_echo = wj;
        CommPresentation T = standardize(nu.target, budget).principal;
        CommPresentation M = localization_model(P, f).ring;
        LocalizationWitness w;
        for (const auto& e : io::detail::string_list(wj, "to_model"))
            w.to_model.push_back(M.parse_poly(e));
        for (const auto& e : io::detail::string_list(wj, "to_target"))
            w.to_target.push_back(T.parse_poly(e));
        witness = std::move(w);
    }

    LocalizationVerdict v = verify_essential_localization(nu, f, witness, degree_bound, budget);
    h.body["certified"] = v.certified;
    h.body["detail"] = v.detail;
    h.body["morphism_status"] = morphism_status_str(v.morphism.status, v.morphism.degree_bound);
    h.body["model"] = presentation_body(v.model.ring);
    h.body["target_factor"] = presentation_body(v.target_factor);
    h.usage = v.source_factor.ideal.gb.usage;
    return h;
}

json point_set_body(const PointSet& ps) {
    json j;
    j["count"] = ps.homs.size();
    j["total_tuples"] = ps.total_tuples;
    j["unital_only"] = ps.flags.unital_only;
    j["commutative"] = ps.flags.commutative;
    j["has_unit_slot"] = ps.has_unit_slot;
    json homs = json::array();
    for (const auto& hom : ps.homs) {
        json slots = json::array();
        for (const auto& slot : hom) {
            json coords = json::array();
            for (const auto& s : slot) coords.push_back(s.fp_value());
            slots.push_back(coords);
        }
        homs.push_back(slots);
    }
    j["maps"] = homs;
    return j;
}

HandlerOut do_points(const io::LoadedFile& lf, const std::string& target_path, bool nonunital,
                     bool commutative, bool compare, std::uint64_t tuple_budget,
                     const EmbeddedInputs& emb) {
    const NCPresentation& A = need_nc(lf, "points");
    json traw = load_raw(target_path, emb.target);
    io::LoadedFile tf = io::load_from_json(traw);
    if (!tf.findim)
        throw InputError("\"points\" needs a findim_algebra target, got \"" + tf.kind + "\"");
    const FinDimAlgebra& B = *tf.findim;
    HandlerOut h;
    h.input_echo = lf.raw;
    h.target_echo = traw;
    if (compare) {
        PointComparison cmp = compare_point_sets(A, B, PointFlags{true, commutative},
                                                 PointFlags{false, commutative}, tuple_budget);
        h.body["relation"] = point_relation_str(cmp.relation);
        h.body["unital_count"] = cmp.first.homs.size();
        h.body["nonunital_count"] = cmp.second.homs.size();
        h.body["only_unital"] = cmp.only_first.size();
        h.body["only_nonunital"] = cmp.only_second.size();
        h.body["zero_map_in_difference"] = cmp.zero_map_in_difference;
    } else {
        PointSet ps = enumerate_homs(A, B, PointFlags{!nonunital, commutative}, tuple_budget);
        h.body = point_set_body(ps);
    }
    return h;
}

HandlerOut do_selftest(std::uint64_t seed, const Budget& budget) {
    SelfTestReport rep = run_selftest(seed, budget);
    HandlerOut h;
    h.body["ok"] = rep.ok;
    h.body["total_checks"] = rep.total_checks;
    h.body["total_failures"] = rep.total_failures;
    h.body["seed"] = seed;
    json suites = json::array();
    for (const auto& s : rep.suites)
        suites.push_back(
            json{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
    h.body["suites"] = suites;
    h.input_echo = nullptr;
    return h;
}

int run_command(const std::vector<std::string>& args, const EmbeddedInputs& emb,
                std::ostream& out) {
    Budget budget = budget_from_env();
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    CLI::App app{"verdict engine for standardized algebras"};
    app.require_subcommand(1);

    std::string file, sequence_csv, module_spec = "regular", lie_module = "trivial";
    std::string mode_str = "smooth", elements_csv, at_expr, witness_path, target_path;
    std::size_t hh_bound = 3;
    long lie_bound = -1;
    bool normalized = false, verdict = false, essential = false;
    bool nonunital = false, commutative = false, compare = false;
    unsigned jobs = 1;
    std::uint64_t seed = 20260818, tuple_budget = kPointTupleBudget;

    CLI::App* krull = app.add_subcommand("krull", "Krull dimension of a presented ring");
    krull->add_option("file", file)->required();

    CLI::App* degeneracy =
        app.add_subcommand("degeneracy", "dimension-based obstruction to quasi-freeness");
    degeneracy->add_option("file", file)->required();
    degeneracy->add_option("--sequence", sequence_csv,
                           "comma-separated candidate regular sequence");

    CLI::App* hochschild =
        app.add_subcommand("hochschild", "Hochschild cohomology of a finite-dimensional algebra");
    hochschild->add_option("file", file)->required();
    hochschild->add_option("--module", module_spec, "regular, dual, or a bimodule file");
    hochschild->add_option("--bound", hh_bound, "top cohomology degree");
    hochschild->add_flag("--normalized", normalized, "use the normalized complex");
    hochschild->add_flag("--verdict", verdict, "scan degrees >= 2 for an obstruction");
    hochschild->add_option("--jobs", jobs, "worker threads for rank computations");

    CLI::App* lie = app.add_subcommand("lie-cohomology", "Lie algebra cohomology");
    lie->add_option("file", file)->required();
    lie->add_option("--module", lie_module, "trivial or adjoint");
    lie->add_option("--bound", lie_bound, "top degree (default: the dimension)");
    lie->add_flag("--verdict", verdict, "scan trivial coefficients for an obstruction");
    lie->add_option("--jobs", jobs, "worker threads for rank computations");

    CLI::App* standardize_cmd =
        app.add_subcommand("standardize", "standardization of an associative presentation");
    standardize_cmd->add_option("file", file)->required();

    CLI::App* smooth = app.add_subcommand("smooth", "smoothness and unramifiedness checks");
    smooth->add_option("file", file)->required();
    smooth->add_flag("--essential", essential, "check the standardization of an nc input");
    smooth->add_option("--mode", mode_str, "smooth, unramified, or etale");

    CLI::App* cover = app.add_subcommand("cover", "essential Zariski cover check");
    cover->add_option("file", file)->required();
    cover->add_option("--elements", elements_csv, "comma-separated chart elements")->required();

    CLI::App* localize = app.add_subcommand("localize", "certify a localization arrow");
    localize->add_option("file", file)->required();
    localize->add_option("--at", at_expr, "the element to invert")->required();
    localize->add_option("--witness", witness_path, "isomorphism witness file");
    std::uint32_t loc_bound = 8;
    localize->add_option("--bound", loc_bound, "rewriting degree bound");

    CLI::App* points = app.add_subcommand("points", "finite-field point enumeration");
    points->add_option("file", file)->required();
    points->add_option("--target", target_path, "findim_algebra file")->required();
    points->add_flag("--nonunital", nonunital, "enumerate maps that need not preserve the unit");
    points->add_flag("--commutative", commutative, "require pairwise commuting images");
    points->add_flag("--compare", compare, "compare unital against nonunital enumeration");
    points->add_option("--tuple-budget", tuple_budget, "maximum tuples to scan");

    CLI::App* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--seed", seed, "random seed");

    std::vector<const char*> argv;
    argv.push_back("essalg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err;
        err["schema"] = 1;
        err["command"] = args;
        err["error"] = json{{"kind", "input"}, {"message", e.what()}};
        out << io::dump_report(err);
        return kExitInput;
    }

    json report;
    int code = kExitOk;
    try {
        HandlerOut h;
        if (*krull)
            h = do_krull(load_primary(file, emb, budget));
        else if (*degeneracy)
            h = do_degeneracy(load_primary(file, emb, budget), sequence_csv);
        else if (*hochschild)
            h = do_hochschild(load_primary(file, emb, budget), module_spec, hh_bound, normalized,
                              verdict, jobs, "", emb);
        else if (*lie)
            h = do_lie(load_primary(file, emb, budget), lie_module, lie_bound, verdict, jobs);
        else if (*standardize_cmd)
            h = do_standardize(load_primary(file, emb, budget), budget);
        else if (*smooth)
            h = do_smooth(load_primary(file, emb, budget), essential, mode_str, budget);
        else if (*cover)
            h = do_cover(load_primary(file, emb, budget), elements_csv, budget);
        else if (*localize)
            h = do_localize(load_primary(file, emb, budget), at_expr, witness_path, loc_bound,
                            budget, emb);
        else if (*points)
            h = do_points(load_primary(file, emb, budget), target_path, nonunital, commutative,
                          compare, tuple_budget, emb);
        else
            h = do_selftest(seed, budget);

        report = io::make_report(args, std::move(h.input_echo), std::move(h.body), elapsed_ms(),
                                 h.usage ? &*h.usage : nullptr);
        if (h.target_echo) report["target_input"] = *h.target_echo;
        if (h.witness_echo) report["witness_input"] = *h.witness_echo;
    } catch (const ResourceError& e) {
        report["schema"] = 1;
        report["command"] = args;
        report["error"] =
            json{{"kind", "resource"}, {"budget", e.budget}, {"message", e.what()}};
        report["timing_ms"] = elapsed_ms();
        code = kExitResource;
    } catch (const InputError& e) {
        report["schema"] = 1;
        report["command"] = args;
        report["error"] = json{{"kind", "input"}, {"message", e.what()}};
        report["timing_ms"] = elapsed_ms();
        code = kExitInput;
    } catch (const json::exception& e) {
        report["schema"] = 1;
        report["command"] = args;
        report["error"] = json{{"kind", "input"}, {"message", e.what()}};
        report["timing_ms"] = elapsed_ms();
        code = kExitInput;
    } catch (const MathError& e) {
        report["schema"] = 1;
        report["command"] = args;
        report["error"] = json{{"kind", "internal"}, {"message", e.what()}};
        report["timing_ms"] = elapsed_ms();
        code = kExitInput;
    }
    out << io::dump_report(report);
    return code;
}

int verify_report(const std::string& path) {
    json stored;
    {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open \"" << path << "\"\n";
            return kExitInput;
        }
        try {
            in >> stored;
        } catch (const json::exception& e) {
            std::cerr << "invalid JSON in \"" << path << "\": " << e.what() << "\n";
            return kExitInput;
        }
    }
    if (!stored.contains("command") || !stored["command"].is_array()) {
        std::cerr << "report has no command to replay\n";
        return kExitInput;
    }
    std::vector<std::string> args;
    for (const auto& a : stored["command"]) args.push_back(a.get<std::string>());
    EmbeddedInputs emb;
    if (stored.contains("input") && !stored["input"].is_null()) emb.input = stored["input"];
    if (stored.contains("target_input")) emb.target = stored["target_input"];
    if (stored.contains("witness_input")) emb.witness = stored["witness_input"];

    std::ostringstream replay_out;
    int code = run_command(args, emb, replay_out);
    json fresh;
    try {
        fresh = json::parse(replay_out.str());
    } catch (const json::exception&) {
        std::cerr << "replay did not produce a report\n";
        return kExitInput;
    }
    json result;
    result["schema"] = 1;
    result["replayed_command"] = args;
    bool match = io::report_comparable(stored) == io::report_comparable(fresh);
    result["replay"] = match ? "ok" : "mismatch";
    if (!match) {
        for (auto it = fresh.begin(); it != fresh.end(); ++it) {
            const std::string& k = it.key();
            if (k == "timing_ms") continue;
            if (!stored.contains(k) || stored[k] != it.value()) {
                result["first_differing_key"] = k;
                break;
            }
        }
    }
    std::cout << io::dump_report(result);
    if (!match) return kExitInput;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() == 2 && args[0] == "--verify-report") return verify_report(args[1]);
    return run_command(args, EmbeddedInputs{}, std::cout);
}
