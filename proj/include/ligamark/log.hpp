#pragma once

namespace ligamark {

enum class LogLevel { debug = 0, info = 1, warning = 2, error = 3 };

using LogCallback = void (*)(LogLevel, const char* message);

// Default sink prints "[WARN] ..." style lines to stderr.
void set_log_callback(LogCallback cb);
void set_log_level(LogLevel level);
LogLevel log_level();

void log(LogLevel level, const char* format, ...);

}  // namespace ligamark
