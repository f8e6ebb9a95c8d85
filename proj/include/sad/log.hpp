#pragma once

#include <string>

namespace sad {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

// Level is read once from the SAD_LOG environment variable
// ("info" or "debug"; anything else is quiet).
LogLevel log_level();

void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace sad
