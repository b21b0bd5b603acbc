#include "dfam/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dfam {

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_digest(ss.str());
}

nlohmann::json manifest_json(const RunManifest& m) {
    nlohmann::json j;
    j["tool"] = TOOL_NAME;
    j["version"] = TOOL_VERSION;
    j["subcommand"] = m.subcommand;
    j["args"] = m.args;
    j["seed"] = m.seed;
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [path, digest] : m.inputs)
        inputs[path] = digest;
    j["inputs"] = inputs;
    j["wall_ms"] = m.wall_ms;
    return j;
}

} // namespace dfam
