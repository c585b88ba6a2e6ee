#pragma once

#include <optional>

#include "jobgate/marshal.hpp"
#include "jobgate/status.hpp"

namespace jobgate {

enum class SessionStage { idle, initialized, computed };

/// Per-service slot between gate calls. `output` is non-empty only while
/// `stage == computed`.
struct Session {
  SessionStage stage = SessionStage::idle;
  Payload input;
  Payload output;

  void clear() {
    stage = SessionStage::idle;
    input.clear();
    output.clear();
  }
};

/// Stage after a successful call of `stage` from `from`, or nullopt when the
/// call violates the stage order. Legal moves:
///
///   initialize   idle -> initialized, computed -> initialized
///   compute      initialized -> computed
///   output_size  computed -> computed
///   retrieve     computed -> idle
///
/// A retrieve that reports buffer_too_small leaves the session computed, and
/// a compute whose handler fails drops the session back to idle.
constexpr std::optional<SessionStage> advance(SessionStage from, Stage stage) noexcept {
  switch (stage) {
    case Stage::initialize:
      if (from == SessionStage::initialized) return std::nullopt;
      return SessionStage::initialized;
    case Stage::compute:
      if (from != SessionStage::initialized) return std::nullopt;
      return SessionStage::computed;
    case Stage::output_size:
      if (from != SessionStage::computed) return std::nullopt;
      return SessionStage::computed;
    case Stage::retrieve:
      if (from != SessionStage::computed) return std::nullopt;
      return SessionStage::idle;
  }
  return std::nullopt;
}

}  // namespace jobgate
