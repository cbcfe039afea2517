#ifndef TORICGM_COMMANDS_HPP
#define TORICGM_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace toricgm {

struct RunConfig {
    std::string command;
    std::string graph;  // fixture name or path to graph JSON
    int degree_bound = 3;
    int trials = 16;
    std::uint64_t seed = 0;  // 0: derived from the other inputs
    std::string output = "human";
    std::optional<int> max_c;
    std::string export_cas;  // path for a Macaulay2 script, empty for none
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSizeLimit = 3;

const std::vector<std::string>& command_names();

// FNV-1a over the canonical inputs; never returns 0.
std::uint64_t derive_seed(const RunConfig& cfg, const nlohmann::ordered_json& graph);

// Throws Error for invalid input or exceeded guards.
nlohmann::ordered_json run_command(const RunConfig& cfg);

// Indented key/value rendering that keeps every scalar of the payload.
std::string render_human(const nlohmann::ordered_json& report);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricgm

#endif  // TORICGM_COMMANDS_HPP
