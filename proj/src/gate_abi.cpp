// Exported C entry points of libjobgate. Everything behind them lives in the
// header-only core; this translation unit owns the process-wide gate.

#include "jobgate.h"

#include "jobgate/gate.hpp"
#include "jobgate/services.hpp"

#if defined(_WIN32)
#define JOBGATE_EXPORT __declspec(dllexport)
#else
#define JOBGATE_EXPORT __attribute__((visibility("default")))
#endif

namespace {

struct ProcessGate {
  jobgate::Gate gate;
  ProcessGate() { jobgate::services::register_defaults(gate); }
};

jobgate::Gate& process_gate() {
  static ProcessGate instance;
  return instance.gate;
}

}  // namespace

extern "C" {

JOBGATE_EXPORT int32_t gate_init(void) {
  try {
    return jobgate::to_int(process_gate().init());
  } catch (...) {
    return jobgate::to_int(jobgate::GateStatus::computation_failure);
  }
}

JOBGATE_EXPORT int32_t gate_final(void) {
  try {
    return jobgate::to_int(process_gate().finalize());
  } catch (...) {
    return jobgate::to_int(jobgate::GateStatus::computation_failure);
  }
}

JOBGATE_EXPORT int32_t gate_call(int32_t job, int32_t size, int32_t* data, int32_t verbose) {
  try {
    return jobgate::to_int(process_gate().call(job, size, data, verbose));
  } catch (...) {
    return jobgate::to_int(jobgate::GateStatus::computation_failure);
  }
}

}  // extern "C"
