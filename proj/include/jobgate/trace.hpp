#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>

namespace jobgate {

/// Receives one complete trace line, newline included.
using TraceSink = std::function<void(std::string_view)>;

inline std::string trace_line(std::int32_t job, std::int32_t stage) {
  return "-> in gate.handle_jobs job=" + std::to_string(job) + " stage=" + std::to_string(stage) + "\n";
}

inline void trace(const TraceSink& sink, std::int32_t job, std::int32_t stage, std::int32_t verbose) {
  if (verbose == 0 || !sink) return;
  sink(trace_line(job, stage));
}

inline TraceSink stderr_sink() {
  return [](std::string_view line) {
    std::fwrite(line.data(), 1, line.size(), stderr);
    std::fflush(stderr);
  };
}

}  // namespace jobgate
