#pragma once

// The dispatch core behind the exported entry points: a registry of
// services keyed by base job code, each with one session slot.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "jobgate/marshal.hpp"
#include "jobgate/names.hpp"
#include "jobgate/session.hpp"
#include "jobgate/status.hpp"
#include "jobgate/trace.hpp"

namespace jobgate {

/// Thrown by a compute handler to report a specific status, normally
/// malformed_payload or computation_failure.
class HandlerError : public std::runtime_error {
 public:
  HandlerError(GateStatus status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  GateStatus status() const noexcept { return status_; }

 private:
  GateStatus status_;
};

using ComputeHandler = std::function<Payload(PayloadView)>;

struct ServiceDescriptor {
  std::string name;
  std::int32_t base = 0;
  std::int32_t stages = kMaxStages;
  ComputeHandler compute;
};

/// Throws std::invalid_argument when the descriptor breaks a registry rule.
inline void validate(const ServiceDescriptor& d) {
  if (!is_lower_identifier(d.name)) {
    throw std::invalid_argument("service name must match [a-z][a-z0-9_]*: \"" + d.name + "\"");
  }
  if (d.base < 0 || d.base % kJobStride != 0) {
    throw std::invalid_argument("service " + d.name + ": base " + std::to_string(d.base) +
                                " is not a non-negative multiple of 10");
  }
  if (d.stages < 1 || d.stages > kMaxStages) {
    throw std::invalid_argument("service " + d.name + ": stage count " + std::to_string(d.stages) +
                                " outside [1, 4]");
  }
  if (!d.compute) {
    throw std::invalid_argument("service " + d.name + ": missing compute handler");
  }
}

class Gate {
 public:
  explicit Gate(TraceSink sink = stderr_sink()) : sink_(std::move(sink)) {}

  Gate(const Gate&) = delete;
  Gate& operator=(const Gate&) = delete;

  /// Construction-time only: throws std::logic_error once the gate has been
  /// initialized and std::invalid_argument for a bad or duplicate descriptor.
  void register_service(ServiceDescriptor descriptor) {
    std::lock_guard lock(mutex_);
    if (initialized_) throw std::logic_error("register_service after gate_init");
    validate(descriptor);
    if (services_.contains(descriptor.base)) {
      throw std::invalid_argument("service " + descriptor.name + ": base " +
                                  std::to_string(descriptor.base) + " already registered");
    }
    const std::int32_t base = descriptor.base;
    services_.emplace(base, Entry{std::move(descriptor), Session{}});
  }

  GateStatus init() {
    std::lock_guard lock(mutex_);
    if (!initialized_) {
      for (auto& [base, entry] : services_) entry.session.clear();
      initialized_ = true;
    }
    return GateStatus::ok;
  }

  GateStatus finalize() {
    std::lock_guard lock(mutex_);
    for (auto& [base, entry] : services_) entry.session.clear();
    initialized_ = false;
    return GateStatus::ok;
  }

  /// The raw entry point. `data` must address at least `size` elements; it is
  /// not retained past the call.
  GateStatus call(std::int32_t job, std::int32_t size, std::int32_t* data, std::int32_t verbose) {
    std::lock_guard lock(mutex_);
    const JobCode code(job);
    trace(sink_, job, code.stage(), verbose);

    if (!initialized_) return GateStatus::not_initialized;
    if (!code.valid()) return GateStatus::unknown_job;
    auto it = services_.find(code.base());
    if (it == services_.end() || code.stage() >= it->second.descriptor.stages) {
      return GateStatus::unknown_job;
    }
    if (size < 0 || (size > 0 && data == nullptr)) return GateStatus::malformed_payload;

    std::span<std::int32_t> buffer(data, static_cast<std::size_t>(size));
    return dispatch(it->second, static_cast<Stage>(code.stage()), buffer);
  }

  GateStatus call(JobCode job, std::span<std::int32_t> buffer, bool verbose = false) {
    return call(job.value(), static_cast<std::int32_t>(buffer.size()), buffer.data(), verbose ? 1 : 0);
  }

  bool initialized() const {
    std::lock_guard lock(mutex_);
    return initialized_;
  }

  /// Stage marker of the service at `base`, if registered.
  std::optional<SessionStage> session_stage(std::int32_t base) const {
    std::lock_guard lock(mutex_);
    auto it = services_.find(base);
    if (it == services_.end()) return std::nullopt;
    return it->second.session.stage;
  }

  bool has_service(std::int32_t base) const {
    std::lock_guard lock(mutex_);
    return services_.contains(base);
  }

 private:
  struct Entry {
    ServiceDescriptor descriptor;
    Session session;
  };

  static GateStatus dispatch(Entry& entry, Stage stage, std::span<std::int32_t> buffer) {
    Session& s = entry.session;
    const auto next = advance(s.stage, stage);
    if (!next) return GateStatus::stage_order;

    switch (stage) {
      case Stage::initialize:
        s.input.assign(buffer.begin(), buffer.end());
        s.output.clear();
        break;
      case Stage::compute: {
        const GateStatus st = run_handler(entry.descriptor.compute, s);
        if (st != GateStatus::ok) {
          s.clear();
          return st;
        }
        break;
      }
      case Stage::retrieve: {
        const std::size_t n = std::min(buffer.size(), s.output.size());
        std::copy_n(s.output.begin(), n, buffer.begin());
        if (buffer.size() < s.output.size()) return GateStatus::buffer_too_small;
        s.input.clear();
        s.output.clear();
        break;
      }
      case Stage::output_size:
        if (buffer.empty()) return GateStatus::buffer_too_small;
        buffer[0] = static_cast<std::int32_t>(s.output.size());
        break;
    }
    s.stage = *next;
    return GateStatus::ok;
  }

  static GateStatus run_handler(const ComputeHandler& handler, Session& s) {
    try {
      Payload out = handler(PayloadView(s.input));
      if (out.size() > static_cast<std::size_t>(INT32_MAX)) return GateStatus::computation_failure;
      s.output = std::move(out);
      return GateStatus::ok;
    } catch (const HandlerError& e) {
      return e.status() == GateStatus::ok ? GateStatus::computation_failure : e.status();
    } catch (const MarshalError&) {
      return GateStatus::malformed_payload;
    } catch (...) {
      return GateStatus::computation_failure;
    }
  }

  mutable std::mutex mutex_;
  TraceSink sink_;
  bool initialized_ = false;
  std::map<std::int32_t, Entry> services_;
};

}  // namespace jobgate
