// Copyright 2026 The navfuse Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace navfuse::log {

enum class Level { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

// Level comes from the NAVFUSE_LOG env var (debug|info|warn|error), default info.
inline Level threshold() {
  static Level level = [] {
    const char* env = std::getenv("NAVFUSE_LOG");
    if (env == nullptr) return Level::kInfo;
    if (std::strcmp(env, "debug") == 0) return Level::kDebug;
    if (std::strcmp(env, "info") == 0) return Level::kInfo;
    if (std::strcmp(env, "warn") == 0) return Level::kWarn;
    if (std::strcmp(env, "error") == 0) return Level::kError;
    return Level::kInfo;
  }();
  return level;
}

inline void emit(Level level, const char* tag, const std::string& msg) {
  if (level < threshold()) return;
  std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

inline void debug(const std::string& msg) { emit(Level::kDebug, "debug", msg); }
inline void info(const std::string& msg) { emit(Level::kInfo, "info", msg); }
inline void warn(const std::string& msg) { emit(Level::kWarn, "warn", msg); }
inline void error(const std::string& msg) { emit(Level::kError, "error", msg); }

}  // namespace navfuse::log
