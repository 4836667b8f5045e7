#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>

#include "leonard/instances.hpp"
#include "leonard/io.hpp"

using namespace leonard;
using nlohmann::json;

namespace {
const FieldSpec Q = FieldSpec::rational();

json krawtchouk_json(std::size_t d) {
    InstanceFile inst = generate_instance("krawtchouk", d, Q, 0);
    return instance_to_json(inst);
}

struct TempDir {
    std::filesystem::path path;
    TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("leonard_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const json& j) {
        auto p = path / name;
        std::ofstream(p) << j.dump(2) << "\n";
        return p.string();
    }
};
} // namespace

TEST_CASE("field descriptors round trip") {
    CHECK(field_from_json(json("rational")) == Q);
    CHECK(field_from_json(json{{"gfp", 101}}) == FieldSpec::gfp(101));
    CHECK(field_to_json(Q) == json("rational"));
    CHECK(field_to_json(FieldSpec::gfp(7)) == json{{"gfp", 7}});
    CHECK_THROWS_AS(field_from_json(json("octonions")), io_error);
    CHECK_THROWS_AS(field_from_json(json{{"gfp", 100}}), field_error); // not prime
}

TEST_CASE("matrix and element json accept strings and integers") {
    json j = json::array({json::array({1, "1/2"}), json::array({"-3", 0})});
    ExactMatrix X = matrix_from_json(j, Q);
    CHECK(X.at(0, 1) == FieldElement::parse("1/2", Q));
    CHECK(X.at(1, 0) == FieldElement::from_integer(-3, Q));
    CHECK(matrix_from_json(matrix_to_json(X), Q) == X);
    auto v = elements_from_json(json::array({2, "5/3"}), Q);
    CHECK(elements_to_json(v) == json::array({"2", "5/3"}));
    CHECK_THROWS_AS(matrix_from_json(json::array(), Q), io_error);
    CHECK_THROWS_AS(matrix_from_json(json::array({json::array({true})}), Q), io_error);
}

TEST_CASE("instance parsing and validation") {
    json j = krawtchouk_json(2);
    InstanceFile inst = instance_from_json(j);
    CHECK(inst.d == 2);
    CHECK(inst.is_context_form());
    CHECK(instance_to_json(inst) == j);

    json missing_schema = j;
    missing_schema.erase("schema");
    CHECK_THROWS_AS(instance_from_json(missing_schema), io_error);

    json both = j;
    both["Astar"] = j["A"];
    CHECK_THROWS_AS(instance_from_json(both), io_error);

    json neither = j;
    neither.erase("theta_star");
    CHECK_THROWS_AS(instance_from_json(neither), io_error);

    json bad_d = j;
    bad_d["d"] = 5;
    CHECK_THROWS_AS(instance_from_json(bad_d), io_error);

    json short_ts = j;
    short_ts["theta_star"] = json::array({"1", "2"});
    CHECK_THROWS_AS(instance_from_json(short_ts), io_error);
}

TEST_CASE("load_instance from disk") {
    TempDir tmp("load");
    std::string good = tmp.file("k2.json", krawtchouk_json(2));
    InstanceFile inst = load_instance(good);
    CHECK(inst.name == "krawtchouk_d2_rational");
    CHECK_THROWS_AS(load_instance((tmp.path / "absent.json").string()), io_error);
    std::ofstream(tmp.path / "garbage.json") << "{not json";
    CHECK_THROWS_AS(load_instance((tmp.path / "garbage.json").string()), io_error);
}

TEST_CASE("cmd_verify exit codes") {
    InstanceFile good = instance_from_json(krawtchouk_json(3));
    CommandResult r = cmd_verify(good);
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["leonard_pair"] == true);
    CHECK(r.report["context_valid"] == true);
    CHECK(r.report["theta_star_distinct"] == true);
    CHECK(r.report["minimal_polynomial_ok"] == true);
    CHECK(r.report["tool_version"] == kToolVersion);

    // non-split spectrum: negative verdict, not an error
    json ns = krawtchouk_json(2);
    ns["A"] = json::array({json::array({0, 1, 0}), json::array({1, 0, 1}),
                           json::array({0, 1, 0})});
    CommandResult bad = cmd_verify(instance_from_json(ns));
    CHECK(bad.exit_code == kExitNegativeVerdict);
    CHECK(bad.report["context_valid"] == false);
    CHECK(bad.report["reason"] == "not_split");

    // raw-pair form
    json pairj = krawtchouk_json(2);
    pairj.erase("theta_star");
    pairj["Astar"] = json::array({json::array({2, 0, 0}), json::array({0, 0, 0}),
                                  json::array({0, 0, -2})});
    CommandResult pr = cmd_verify(instance_from_json(pairj));
    CHECK(pr.exit_code == kExitPass);
    CHECK(pr.report["mode"] == "pair");
    CHECK(pr.report.contains("witness_basis_A"));
}

TEST_CASE("cmd_delta report") {
    CommandResult r = cmd_delta(instance_from_json(krawtchouk_json(3)));
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["is_path"] == true);
    CHECK(r.report["connected"] == true);
    CHECK(r.report["edges"].size() == 3);
    CHECK(r.report["tails"].size() == 2);
    CHECK(r.report["q_polynomial_orderings"].size() == 2);
    CHECK(r.report["dot"].get<std::string>().find("--") != std::string::npos);
}

TEST_CASE("cmd_decide and cmd_decide_all") {
    InstanceFile k3 = instance_from_json(krawtchouk_json(3));
    CommandResult pos = cmd_decide(k3, 0, 1);
    CHECK(pos.exit_code == kExitPass);
    CHECK(pos.report["verdict"]["qpoly"] == true);
    CHECK(pos.report["verdict"]["oracle_agrees"] == true);
    CHECK(pos.report["verdict"]["ordering"] == json::array({0, 1, 2, 3}));

    CommandResult neg = cmd_decide(k3, 1, 2);
    CHECK(neg.exit_code == kExitNegativeVerdict);
    CHECK(neg.report["verdict"]["failure"] == "not_a_tail");

    CommandResult all = cmd_decide_all(k3);
    CHECK(all.exit_code == kExitPass);
    CHECK(all.report["any_positive"] == true);
    CHECK(all.report["verdicts"].size() == 12);

    InstanceFile nontail =
        generate_instance("complete-delta", 2, FieldSpec::gfp(101), 3);
    CommandResult none = cmd_decide_all(nontail);
    CHECK(none.exit_code == kExitNegativeVerdict);
    CHECK(none.report["any_positive"] == false);
}

TEST_CASE("cmd_dagger report") {
    CommandResult r = cmd_dagger(instance_from_json(krawtchouk_json(2)));
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["basis_certificate"] == true);
    CHECK(r.report["D_diagonal"] == json::array({"1", "2", "1"}));
    for (const auto& [name, ok] : r.report["identities"].items()) {
        INFO(name);
        CHECK(ok == true);
    }
}

TEST_CASE("cmd_suite aggregates and reports the worst exit code") {
    TempDir tmp("suite");
    tmp.file("a_k2.json", krawtchouk_json(2));
    tmp.file("b_k3.json", krawtchouk_json(3));
    CommandResult ok = cmd_suite(tmp.path.string());
    CHECK(ok.exit_code == kExitPass);
    CHECK(ok.report["files"].size() == 2);

    InstanceFile nontail =
        generate_instance("complete-delta", 2, FieldSpec::gfp(101), 3);
    tmp.file("c_neg.json", instance_to_json(nontail));
    CommandResult withneg = cmd_suite(tmp.path.string());
    CHECK(withneg.exit_code == kExitNegativeVerdict);

    std::ofstream(tmp.path / "d_bad.json") << "{\"schema\": 99}";
    CommandResult witherr = cmd_suite(tmp.path.string());
    CHECK(witherr.exit_code == kExitInputError);
    CHECK(witherr.report["files"]["d_bad.json"]["exit_code"] == kExitInputError);
}

TEST_CASE("generate_instance families") {
    InstanceFile r = generate_instance("random", 3, FieldSpec::gfp(101), 5);
    CHECK(r.name == "random_d3_p101_s5");
    CHECK(r.seed == 5);
    // regenerating is byte-identical
    InstanceFile r2 = generate_instance("random", 3, FieldSpec::gfp(101), 5);
    CHECK(instance_to_json(r) == instance_to_json(r2));
    CHECK_THROWS_AS(generate_instance("random", 3, Q, 5), io_error);
    CHECK_THROWS_AS(generate_instance("unknown", 3, FieldSpec::gfp(101), 5), io_error);
}

TEST_CASE("GF(2) instances are accepted and flagged") {
    // no valid context exists over GF(2) (two elements cannot host three
    // distinct eigenvalues, and d = 1 has no split multiplicity-free shape),
    // so the verdict is negative; the report still carries the flag
    json j;
    j["schema"] = kSchemaVersion;
    j["field"] = json{{"gfp", 2}};
    j["A"] = json::array({json::array({0, 1}), json::array({1, 0})});
    j["theta_star"] = json::array({0, 1});
    CommandResult v = cmd_verify(instance_from_json(j));
    CHECK(v.report["characteristic_two"] == true);
    CHECK(v.exit_code == kExitNegativeVerdict);
    CHECK(v.report["reason"] == "not_multiplicity_free");
}

TEST_CASE("reports render canonically") {
    CommandResult r = cmd_verify(instance_from_json(krawtchouk_json(2)));
    std::string a = render_report(r.report);
    std::string b = render_report(cmd_verify(instance_from_json(krawtchouk_json(2))).report);
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(a.find("tool_version") != std::string::npos);
}
