#include "leonard/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "leonard/dagger.hpp"
#include "leonard/instances.hpp"

namespace leonard {

using nlohmann::json;

FieldSpec field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "rational")
        return FieldSpec::rational();
    if (j.is_object() && j.contains("gfp"))
        return FieldSpec::gfp(j.at("gfp").get<std::uint32_t>());
    throw io_error("field descriptor must be \"rational\" or {\"gfp\": p}");
}

json field_to_json(const FieldSpec& spec) {
    if (spec.kind() == FieldSpec::Kind::Rational) return "rational";
    return json{{"gfp", spec.p()}};
}

ExactMatrix matrix_from_json(const json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.empty())
        throw io_error("matrix must be a non-empty array of rows");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw io_error("matrix row must be an array");
        std::vector<std::string> row;
        for (const auto& e : r) {
            if (e.is_number_integer())
                row.push_back(std::to_string(e.get<long long>()));
            else if (e.is_string())
                row.push_back(e.get<std::string>());
            else
                throw io_error("matrix entry must be a string or integer");
        }
        rows.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(spec, rows);
}

json matrix_to_json(const ExactMatrix& X) {
    json rows = json::array();
    for (std::size_t i = 0; i < X.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < X.cols(); ++j)
            row.push_back(X.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FieldElement> elements_from_json(const json& j, const FieldSpec& spec) {
    if (!j.is_array()) throw io_error("element list must be an array");
    std::vector<FieldElement> out;
    for (const auto& e : j) {
        if (e.is_number_integer())
            out.push_back(FieldElement::from_integer(e.get<long long>(), spec));
        else if (e.is_string())
            out.push_back(FieldElement::parse(e.get<std::string>(), spec));
        else
            throw io_error("element must be a string or integer");
    }
    return out;
}

json elements_to_json(const std::vector<FieldElement>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

InstanceFile instance_from_json(const json& j) {
    if (!j.is_object()) throw io_error("instance must be a JSON object");
    if (j.value("schema", 0) != kSchemaVersion)
        throw io_error("unsupported or missing schema version");
    InstanceFile inst;
    inst.field = field_from_json(j.at("field"));
    if (!j.contains("A")) throw io_error("instance is missing \"A\"");
    inst.A = matrix_from_json(j.at("A"), inst.field);
    if (!inst.A->is_square()) throw io_error("A must be square");
    inst.d = inst.A->rows() - 1;
    if (j.contains("d") && j.at("d").get<std::size_t>() != inst.d)
        throw io_error("declared d does not match the size of A");

    bool has_ts = j.contains("theta_star"), has_as = j.contains("Astar");
    if (has_ts == has_as)
        throw io_error("instance needs exactly one of theta_star or Astar");
    if (has_ts) {
        inst.theta_star = elements_from_json(j.at("theta_star"), inst.field);
        if (inst.theta_star->size() != inst.d + 1)
            throw io_error("theta_star has wrong length");
    } else {
        inst.Astar = matrix_from_json(j.at("Astar"), inst.field);
        if (!inst.Astar->is_square() || inst.Astar->rows() != inst.d + 1)
            throw io_error("Astar dimension mismatch");
    }
    if (j.contains("eigen_order"))
        inst.eigen_order = elements_from_json(j.at("eigen_order"), inst.field);
    inst.name = j.value("name", "");
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
    return inst;
}

json instance_to_json(const InstanceFile& inst) {
    json j;
    j["schema"] = kSchemaVersion;
    j["field"] = field_to_json(inst.field);
    j["d"] = inst.d;
    j["A"] = matrix_to_json(*inst.A);
    if (inst.theta_star) j["theta_star"] = elements_to_json(*inst.theta_star);
    if (inst.Astar) j["Astar"] = matrix_to_json(*inst.Astar);
    if (inst.eigen_order) j["eigen_order"] = elements_to_json(*inst.eigen_order);
    if (!inst.name.empty()) j["name"] = inst.name;
    if (inst.seed) j["seed"] = *inst.seed;
    return j;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
}

Context context_from_instance(const InstanceFile& inst) {
    if (!inst.is_context_form())
        throw io_error("context form (theta_star) required for this command");
    return build_context(*inst.A, *inst.theta_star, inst.eigen_order);
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

namespace {

json report_header(const InstanceFile& inst) {
    json j;
    j["tool_version"] = kToolVersion;
    if (!inst.name.empty()) j["instance"] = inst.name;
    j["field"] = field_to_json(inst.field);
    j["d"] = inst.d;
    if (inst.field.characteristic() == 2)
        j["characteristic_two"] = true; // canonical beta = 2 degenerates here
    return j;
}

} // namespace

CommandResult cmd_verify(const InstanceFile& inst) {
    json rep = report_header(inst);
    rep["command"] = "verify";
    if (inst.is_context_form()) {
        rep["mode"] = "context";
        try {
            Context ctx = context_from_instance(inst);
            rep["context_valid"] = true;
            rep["theta"] = elements_to_json(ctx.eigen.eigenvalues);
            bool ts_distinct = true;
            for (std::size_t a = 0; a < ctx.theta_star.size(); ++a)
                for (std::size_t b = a + 1; b < ctx.theta_star.size(); ++b)
                    if (ctx.theta_star[a] == ctx.theta_star[b]) ts_distinct = false;
            rep["theta_star_distinct"] = ts_distinct;
            if (ts_distinct)
                rep["minimal_polynomial_ok"] = minimal_polynomial_check(ctx);
            LeonardVerdict pv = verify_leonard_pair(ctx.A, ctx.Astar);
            rep["leonard_pair"] = pv.is_pair;
            rep["leonard_pair_failure"] = to_string(pv.failure_reason);
            return {rep, pv.is_pair ? kExitPass : kExitNegativeVerdict};
        } catch (const spectral_error& e) {
            rep["context_valid"] = false;
            rep["reason"] = e.kind == SpectralError::NotSplit
                                ? "not_split"
                                : "not_multiplicity_free";
            return {rep, kExitNegativeVerdict};
        } catch (const shape_violation&) {
            rep["context_valid"] = false;
            rep["reason"] = "shape_violation";
            return {rep, kExitNegativeVerdict};
        }
    }
    rep["mode"] = "pair";
    LeonardVerdict v = verify_leonard_pair(*inst.A, *inst.Astar);
    rep["leonard_pair"] = v.is_pair;
    rep["failure_reason"] = to_string(v.failure_reason);
    if (v.witness_basis_A)
        rep["witness_basis_A"] = matrix_to_json(v.witness_basis_A->forward);
    if (v.witness_basis_Astar)
        rep["witness_basis_Astar"] = matrix_to_json(v.witness_basis_Astar->forward);
    return {rep, v.is_pair ? kExitPass : kExitNegativeVerdict};
}

CommandResult cmd_delta(const InstanceFile& inst) {
    json rep = report_header(inst);
    rep["command"] = "delta";
    Context ctx = context_from_instance(inst);
    DeltaGraph g = build_delta(ctx);
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
    rep["edges"] = edges;
    auto conn = connectivity(g);
    rep["connected"] = conn.connected;
    rep["components"] = conn.components;
    rep["is_path"] = is_path_graph(g);
    json tails = json::array();
    for (std::size_t i = 0; i <= ctx.d; ++i)
        for (std::size_t j = 0; j <= ctx.d; ++j) {
            if (i == j) continue;
            TailReport t = is_tail(g, i, j);
            if (!t.is_tail) continue;
            json e;
            e["pair"] = json::array({i, j});
            e["pair_adjacent"] = t.pair_adjacent;
            tails.push_back(std::move(e));
        }
    rep["tails"] = tails;
    json orderings = json::array();
    for (const auto& o : q_polynomial_orderings(g)) orderings.push_back(o);
    rep["q_polynomial_orderings"] = orderings;
    rep["dot"] = to_dot(g);
    return {rep, kExitPass};
}

namespace {

json verdict_to_json(const QPolyVerdict& v) {
    json j;
    j["pair"] = json::array({v.pair.first, v.pair.second});
    j["tail"] = v.tail.is_tail;
    j["tail_pair_adjacent"] = v.tail.pair_adjacent;
    j["beta"] = v.beta ? json(v.beta->to_string()) : json(to_string(v.beta_status));
    j["condition_iii"] = v.condition_iii;
    j["qpoly"] = v.qpoly;
    j["ordering"] = v.certificate ? json(*v.certificate) : json(nullptr);
    if (!v.failure_clause.empty()) j["failure"] = v.failure_clause;
    j["oracle_agrees"] = v.oracle_agrees;
    return j;
}

} // namespace

CommandResult cmd_decide(const InstanceFile& inst, std::size_t i, std::size_t j) {
    json rep = report_header(inst);
    rep["command"] = "decide";
    Context ctx = context_from_instance(inst);
    try {
        QPolyVerdict v = decide(ctx, i, j);
        rep["verdict"] = verdict_to_json(v);
        return {rep, v.qpoly ? kExitPass : kExitNegativeVerdict};
    } catch (const integrity_error& e) {
        rep["integrity_error"] = e.what();
        return {rep, kExitIntegrityViolation};
    }
}

CommandResult cmd_decide_all(const InstanceFile& inst) {
    json rep = report_header(inst);
    rep["command"] = "decide_all";
    Context ctx = context_from_instance(inst);
    try {
        SweepReport sweep = theorem_equivalence_sweep(ctx);
        json table = json::array();
        for (const auto& v : sweep.verdicts) table.push_back(verdict_to_json(v));
        rep["verdicts"] = table;
        rep["any_positive"] = sweep.any_positive;
        return {rep, sweep.any_positive ? kExitPass : kExitNegativeVerdict};
    } catch (const integrity_error& e) {
        rep["integrity_error"] = e.what();
        return {rep, kExitIntegrityViolation};
    }
}

CommandResult cmd_dagger(const InstanceFile& inst) {
    json rep = report_header(inst);
    rep["command"] = "dagger";
    Context ctx = context_from_instance(inst);
    rep["basis_certificate"] = basis_certificate(ctx);
    DaggerData dd = build_dagger(ctx);
    json diag = json::array();
    for (std::size_t i = 0; i <= ctx.d; ++i) diag.push_back(dd.D.at(i, i).to_string());
    rep["D_diagonal"] = diag;
    DaggerReport suite = dagger_property_suite(dd, 50, inst.seed.value_or(0));
    json checks;
    for (const auto& [name, ok] : suite.checks) checks[name] = ok;
    rep["identities"] = checks;
    bool ok = rep["basis_certificate"].get<bool>() && suite.all_ok();
    return {rep, ok ? kExitPass : kExitIntegrityViolation};
}

CommandResult cmd_suite(const std::string& dir) {
    namespace fs = std::filesystem;
    json rep;
    rep["tool_version"] = kToolVersion;
    rep["command"] = "suite";
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());

    int worst = kExitPass;
    json files;
    for (const auto& p : paths) {
        json frep;
        int code = kExitPass;
        try {
            InstanceFile inst = load_instance(p);
            auto ver = cmd_verify(inst);
            frep["verify"] = ver.report;
            code = std::max(code, ver.exit_code);
            if (inst.is_context_form() && ver.report.value("context_valid", false)) {
                auto del = cmd_delta(inst);
                frep["delta"] = del.report;
                auto dag = cmd_dagger(inst);
                frep["dagger"] = dag.report;
                code = std::max(code, dag.exit_code);
                auto dec = cmd_decide_all(inst);
                frep["decide_all"] = dec.report;
                code = std::max(code, dec.exit_code);
            }
        } catch (const io_error& e) {
            frep["error"] = e.what();
            code = kExitInputError;
        }
        frep["exit_code"] = code;
        files[fs::path(p).filename().string()] = frep;
        worst = std::max(worst, code);
    }
    rep["files"] = files;
    rep["exit_code"] = worst;
    return {rep, worst};
}

InstanceFile generate_instance(const std::string& family, std::size_t d,
                               const FieldSpec& field, std::uint64_t seed) {
    InstanceFile inst;
    inst.field = field;
    inst.d = d;
    if (family == "krawtchouk") {
        KrawtchoukInstance k = krawtchouk(d, field);
        inst.A = k.A;
        inst.theta_star = k.theta_star;
        inst.eigen_order = k.theta_star; // spectrum equals {d - 2i}
        inst.name = "krawtchouk_d" + std::to_string(d) + "_" + field.to_string();
        return inst;
    }
    if (field.kind() != FieldSpec::Kind::PrimeField)
        throw io_error("random families require a GF(p) field");
    Context ctx = family == "random"
                      ? random_context(d, field.p(), seed)
                      : family == "complete-delta"
                            ? non_example_complete_delta(d, field.p(), seed)
                            : throw io_error("unknown family: " + family);
    inst.A = ctx.A;
    inst.theta_star = ctx.theta_star;
    inst.seed = seed;
    inst.name = family + "_d" + std::to_string(d) + "_p" +
                std::to_string(field.p()) + "_s" + std::to_string(seed);
    return inst;
}

} // namespace leonard
