#include "sad/log.hpp"

#include <cstdlib>
#include <iostream>

namespace sad {

static LogLevel read_level() {
    const char* env = std::getenv("SAD_LOG");
    if (!env) return LogLevel::quiet;
    std::string value(env);
    if (value == "debug") return LogLevel::debug;
    if (value == "info") return LogLevel::info;
    return LogLevel::quiet;
}

LogLevel log_level() {
    static const LogLevel level = read_level();
    return level;
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::info) std::cerr << "[info] " << message << "\n";
}

void log_debug(const std::string& message) {
    if (log_level() >= LogLevel::debug) std::cerr << "[debug] " << message << "\n";
}

}  // namespace sad
