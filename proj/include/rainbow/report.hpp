#pragma once

#include <string>

#include <json.hpp>

namespace rainbow {

using ordered_json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so emitted artifacts are stable across
/// platforms and reruns.
double round_sig12(double x);

/// Wraps a result in the standard artifact envelope: meta (tool, seed,
/// timestamp), config echo, result. The timestamp is the only
/// non-deterministic field and stays confined to meta.
ordered_json make_artifact(const ordered_json& config, const ordered_json& result,
                           uint64_t seed);

void write_text_file(const std::string& path, const std::string& content);

} // namespace rainbow
