#pragma once
// Run manifests: every JSON/CSV output embeds the subcommand, the full flag
// list, the seed, the tool version, input-file digests, and wall time, so a
// run can be reproduced bit-exactly from its own output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dfam {

inline constexpr const char* TOOL_NAME = "dfam";
inline constexpr const char* TOOL_VERSION = "0.1.0";

struct RunManifest {
    std::string subcommand;
    std::vector<std::string> args; // argv after the subcommand, verbatim
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> inputs; // path, digest
    long long wall_ms = 0;
};

// FNV-1a over a byte buffer, rendered as "fnv1a:%016x".
std::string fnv1a_digest(const std::string& bytes);

// Digest of a file's contents; throws if the file cannot be read.
std::string digest_file(const std::string& path);

nlohmann::json manifest_json(const RunManifest& m);

} // namespace dfam
