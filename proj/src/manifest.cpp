#include "tsat/manifest.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tsat/rational.hpp"

namespace tsat {
namespace cli {

using nlohmann::json;

std::string RunManifest::to_json() const {
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["flags"] = flags;
    j["seed"] = seed;
    j["input_path"] = input_path;
    j["input_fnv1a64"] = input_fnv1a64;
    j["tool_version"] = tool_version;
    j["outcome"] = outcome;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    json j = json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.flags = j.at("flags").get<std::map<std::string, std::string>>();
    m.seed = j.at("seed").get<uint64_t>();
    m.input_path = j.value("input_path", std::string{});
    m.input_fnv1a64 = j.value("input_fnv1a64", std::string{});
    m.tool_version = j.value("tool_version", std::string{});
    m.outcome = j.value("outcome", std::map<std::string, std::string>{});
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << content;
}

}  // namespace cli
}  // namespace tsat
