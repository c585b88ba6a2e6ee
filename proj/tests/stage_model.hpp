#pragma once

// Reference model of the staged protocol, written as an explicit transition
// table, and an exhaustive driver that replays every stage sequence of a
// given maximum length against a gate and compares statuses.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

enum class Slot { idle, initialized, computed };

inline std::optional<Slot> expected_next(Slot from, int stage) {
  static const std::map<std::pair<Slot, int>, Slot> legal = {
      {{Slot::idle, 0}, Slot::initialized},
      {{Slot::computed, 0}, Slot::initialized},
      {{Slot::initialized, 1}, Slot::computed},
      {{Slot::computed, 2}, Slot::idle},
      {{Slot::computed, 3}, Slot::computed},
  };
  auto it = legal.find({from, stage});
  if (it == legal.end()) return std::nullopt;
  return it->second;
}

struct StageDriver {
  // (job, size, data) -> status
  std::function<std::int32_t(std::int32_t, std::int32_t, std::int32_t*)> call;
  // Brings the gate back to a freshly initialized state.
  std::function<void()> reset;
  // Optional: observed slot of the service after each step.
  std::function<std::optional<Slot>()> observe;
};

struct EnumerationResult {
  int sequences = 0;
  int steps = 0;
  std::vector<std::string> failures;
};

inline std::string describe(const std::vector<int>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
  return s + ")";
}

/// Every sequence over stages {0,1,2,3} of length 1..max_len on the service
/// at `base`, initialized with `input`.
inline EnumerationResult enumerate_stage_sequences(std::int32_t base, const std::vector<std::int32_t>& input,
                                                   const StageDriver& driver, int max_len = 4) {
  EnumerationResult result;
  for (int len = 1; len <= max_len; ++len) {
    int total = 1;
    for (int k = 0; k < len; ++k) total *= 4;
    for (int code = 0; code < total; ++code) {
      std::vector<int> seq;
      for (int k = 0, c = code; k < len; ++k, c /= 4) seq.push_back(c % 4);

      driver.reset();
      Slot model = Slot::idle;
      ++result.sequences;
      for (std::size_t step = 0; step < seq.size(); ++step) {
        const int stage = seq[step];
        std::vector<std::int32_t> buf;
        if (stage == 0) buf = input;
        else if (stage == 2) buf.assign(1024, 0);
        else buf.assign(1, 0);
        const std::int32_t status = driver.call(base + stage, static_cast<std::int32_t>(buf.size()), buf.data());
        const auto next = expected_next(model, stage);
        const std::int32_t expected = next ? 0 : 2;
        ++result.steps;
        if (status != expected) {
          result.failures.push_back("base " + std::to_string(base) + " sequence " + describe(seq) + " step " +
                                    std::to_string(step) + ": status " + std::to_string(status) + ", expected " +
                                    std::to_string(expected));
          break;
        }
        if (next) model = *next;
        if (driver.observe) {
          const auto seen = driver.observe();
          if (!seen || *seen != model) {
            result.failures.push_back("base " + std::to_string(base) + " sequence " + describe(seq) + " step " +
                                      std::to_string(step) + ": session state differs from model");
            break;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace oracle
