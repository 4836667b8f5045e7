// lspair: Leonard pair / Q-polynomial decision tool.
//
//   lspair verify  INSTANCE.json
//   lspair delta   INSTANCE.json [--dot out.dot]
//   lspair decide  INSTANCE.json (-i I -j J | --all)
//   lspair dagger  INSTANCE.json
//   lspair gen     --family F --d D [--field rational|gfp:P] [--seed N] --out PATH
//   lspair suite   DIR
//
// Exit codes: 0 checks pass, 1 negative mathematical verdict, 2 input error,
// 3 integrity violation (the theorem's two routes disagreed).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leonard/io.hpp"

using namespace leonard;

namespace {

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "rational") return FieldSpec::rational();
    if (s.rfind("gfp:", 0) == 0)
        return FieldSpec::gfp(static_cast<std::uint32_t>(std::stoul(s.substr(4))));
    throw io_error("--field must be rational or gfp:P");
}

int emit(const CommandResult& res, bool text_mode) {
    if (text_mode) {
        // compact human summary; the JSON body is the canonical artifact
        for (const auto& [k, v] : res.report.items())
            if (!v.is_structured())
                std::cout << k << ": " << v.dump() << "\n";
        std::cout << "exit: " << res.exit_code << "\n";
    } else {
        std::cout << render_report(res.report);
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leonard pairs, the graph Delta, and Q-polynomial decisions"};
    app.require_subcommand(1);
    app.fallthrough(); // accept --text/--json after the subcommand too
    bool text_mode = false, json_mode = false;
    app.add_flag("--text", text_mode, "human-readable summary instead of JSON");
    app.add_flag("--json", json_mode, "JSON output (default)");

    std::string path, dir, dot_out, family = "krawtchouk", field_flag = "rational",
                out_path;
    std::size_t d = 3, vi = 0, vj = 1;
    std::uint64_t seed = 0;
    bool all_pairs = false;

    auto* verify = app.add_subcommand("verify", "validate a context or raw pair");
    verify->add_option("path", path)->required();

    auto* delta = app.add_subcommand("delta", "the graph Delta: edges, tails, orderings");
    delta->add_option("path", path)->required();
    delta->add_option("--dot", dot_out, "also write DOT to this file");

    auto* decide = app.add_subcommand("decide", "Q-polynomial decision for a pair");
    decide->add_option("path", path)->required();
    decide->add_option("-i", vi);
    decide->add_option("-j", vj);
    decide->add_flag("--all", all_pairs, "sweep all ordered pairs");

    auto* dagger = app.add_subcommand("dagger", "basis certificate and dagger identities");
    dagger->add_option("path", path)->required();

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("--family", family, "krawtchouk | random | complete-delta");
    gen->add_option("--d", d)->required();
    gen->add_option("--field", field_flag, "rational | gfp:P");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path)->required();

    auto* suite = app.add_subcommand("suite", "batch run over a fixture directory");
    suite->add_option("dir", dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return emit(cmd_verify(load_instance(path)), text_mode);
        if (delta->parsed()) {
            auto res = cmd_delta(load_instance(path));
            if (!dot_out.empty()) {
                std::ofstream out(dot_out);
                out << res.report.at("dot").get<std::string>();
            }
            return emit(res, text_mode);
        }
        if (decide->parsed()) {
            InstanceFile inst = load_instance(path);
            return emit(all_pairs ? cmd_decide_all(inst) : cmd_decide(inst, vi, vj),
                        text_mode);
        }
        if (dagger->parsed()) return emit(cmd_dagger(load_instance(path)), text_mode);
        if (gen->parsed()) {
            InstanceFile inst = generate_instance(family, d, parse_field_flag(field_flag), seed);
            std::ofstream out(out_path);
            if (!out) throw io_error("cannot write " + out_path);
            out << instance_to_json(inst).dump(2) << "\n";
            std::cout << "wrote " << out_path << "\n";
            return kExitPass;
        }
        if (suite->parsed()) return emit(cmd_suite(dir), text_mode);
    } catch (const integrity_error& e) {
        std::cerr << "integrity violation: " << e.what() << "\n";
        return kExitIntegrityViolation;
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
