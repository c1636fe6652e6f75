#include "rainbow/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "rainbow/error.hpp"

namespace rainbow {

double round_sig12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json make_artifact(const ordered_json& config, const ordered_json& result,
                           uint64_t seed) {
    ordered_json j;
    char stamp[64];
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
    j["meta"] = {{"tool", "rainbow"}, {"seed", seed}, {"timestamp", stamp}};
    j["config"] = config;
    j["result"] = result;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << content;
}

} // namespace rainbow
