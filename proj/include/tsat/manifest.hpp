#pragma once

#include <map>
#include <string>

namespace tsat {
namespace cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Everything needed to reproduce a run byte-for-byte: the subcommand, all
// flags, the seed, and a fingerprint of the input file content. Replaying a
// manifest re-runs the command and must print identical JSON.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> flags;
    uint64_t seed = 0;
    std::string input_path;    // empty when the command takes no file
    std::string input_fnv1a64; // empty when the command takes no file
    std::string tool_version = kToolVersion;
    std::map<std::string, std::string> outcome;  // deterministic summary only

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cli
}  // namespace tsat
