#ifndef LEONARD_IO_HPP
#define LEONARD_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "leonard/qpoly.hpp"

namespace leonard {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An instance file: field, dimension, A, and exactly one of theta_star
/// (context form) or Astar (raw-pair form).
struct InstanceFile {
    FieldSpec field = FieldSpec::rational();
    std::size_t d = 1;
    std::optional<ExactMatrix> A;
    std::optional<std::vector<FieldElement>> theta_star;
    std::optional<ExactMatrix> Astar;
    std::optional<std::vector<FieldElement>> eigen_order;
    std::string name;
    std::optional<std::uint64_t> seed;

    bool is_context_form() const { return theta_star.has_value(); }
};

// exit codes shared by the CLI and the suite runner
enum ExitCode : int {
    kExitPass = 0,
    kExitNegativeVerdict = 1,
    kExitInputError = 2,
    kExitIntegrityViolation = 3,
};

FieldSpec field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldSpec& spec);

ExactMatrix matrix_from_json(const nlohmann::json& j, const FieldSpec& spec);
nlohmann::json matrix_to_json(const ExactMatrix& X);

std::vector<FieldElement> elements_from_json(const nlohmann::json& j,
                                             const FieldSpec& spec);
nlohmann::json elements_to_json(const std::vector<FieldElement>& v);

InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceFile& inst);
InstanceFile load_instance(const std::string& path);

Context context_from_instance(const InstanceFile& inst);

struct CommandResult {
    nlohmann::json report;
    int exit_code = kExitPass;
};

// Reports are canonical: sorted keys, no timestamps, byte-stable.
CommandResult cmd_verify(const InstanceFile& inst);
CommandResult cmd_delta(const InstanceFile& inst);
CommandResult cmd_decide(const InstanceFile& inst, std::size_t i, std::size_t j);
CommandResult cmd_decide_all(const InstanceFile& inst);
CommandResult cmd_dagger(const InstanceFile& inst);
CommandResult cmd_suite(const std::string& dir);

// Instance synthesis for the gen subcommand; family is one of
// "krawtchouk", "random", "complete-delta".
InstanceFile generate_instance(const std::string& family, std::size_t d,
                               const FieldSpec& field, std::uint64_t seed);

std::string render_report(const nlohmann::json& report); // canonical JSON text

} // namespace leonard

#endif
