#pragma once

#include <cstdint>
#include <string_view>

namespace jobgate {

/// Result code returned across the C boundary. Zero is success; negative
/// values are reserved and never produced.
enum class GateStatus : std::int32_t {
  ok = 0,
  unknown_job = 1,
  stage_order = 2,
  buffer_too_small = 3,
  malformed_payload = 4,
  not_initialized = 5,
  computation_failure = 6,
};

constexpr std::int32_t to_int(GateStatus s) noexcept {
  return static_cast<std::int32_t>(s);
}

constexpr std::string_view describe(GateStatus s) noexcept {
  switch (s) {
    case GateStatus::ok: return "success";
    case GateStatus::unknown_job: return "unknown job";
    case GateStatus::stage_order: return "stage-order violation";
    case GateStatus::buffer_too_small: return "buffer too small";
    case GateStatus::malformed_payload: return "malformed payload";
    case GateStatus::not_initialized: return "gate not initialized";
    case GateStatus::computation_failure: return "computation failure";
  }
  return "unrecognized status";
}

/// Stage offsets within a service's block of ten job codes.
enum class Stage : std::int32_t {
  initialize = 0,
  compute = 1,
  retrieve = 2,
  output_size = 3,
};

inline constexpr std::int32_t kJobStride = 10;
inline constexpr std::int32_t kMaxStages = 4;

/// A job number split into its service base and stage offset.
class JobCode {
 public:
  constexpr explicit JobCode(std::int32_t value) noexcept : value_(value) {}

  constexpr std::int32_t value() const noexcept { return value_; }
  constexpr bool valid() const noexcept { return value_ >= 0; }
  constexpr std::int32_t base() const noexcept { return (value_ / kJobStride) * kJobStride; }
  constexpr std::int32_t stage() const noexcept { return value_ % kJobStride; }

  static constexpr JobCode make(std::int32_t base, Stage stage) noexcept {
    return JobCode(base + static_cast<std::int32_t>(stage));
  }

  friend constexpr bool operator==(JobCode, JobCode) = default;

 private:
  std::int32_t value_;
};

}  // namespace jobgate
