#pragma once

// Demonstration services reachable through the gate.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "jobgate/durand_kerner.hpp"
#include "jobgate/gate.hpp"
#include "jobgate/marshal.hpp"
#include "jobgate/version.hpp"

namespace jobgate::services {

inline constexpr std::int32_t kSwapBase = 0;
inline constexpr std::int32_t kVersionBase = 40;
inline constexpr std::int32_t kPolyrootsBase = 50;

/// Significant digits of each root component in the polyroots output.
inline constexpr int kRootDigits = 17;
inline constexpr double kResidualBound = 1e-8;

inline Payload swap(PayloadView input) { return Payload(input.rbegin(), input.rend()); }

inline Payload version(PayloadView /*input*/) { return encode_text(kVersionLine); }

/// Coefficients c_0..c_d, one decimal field each. Throws HandlerError with
/// malformed_payload on bad records, a degree below one or a zero leading
/// coefficient.
inline std::vector<double> parse_coefficients(PayloadView input) {
  std::vector<double> coefficients;
  try {
    for (const std::string& field : split_fields(input)) coefficients.push_back(parse_decimal(field));
  } catch (const MarshalError& e) {
    throw HandlerError(GateStatus::malformed_payload, e.what());
  }
  if (coefficients.size() < 2) {
    throw HandlerError(GateStatus::malformed_payload, "polynomial degree must be at least 1");
  }
  if (coefficients.back() == 0.0) {
    throw HandlerError(GateStatus::malformed_payload, "leading coefficient is zero");
  }
  return coefficients;
}

/// 2d fields: real and imaginary parts of each root, roots sorted.
inline Payload encode_root_list(const std::vector<std::complex<double>>& roots) {
  std::vector<std::string> fields;
  fields.reserve(2 * roots.size());
  for (const auto& z : roots) {
    fields.push_back(format_significant(z.real(), kRootDigits));
    fields.push_back(format_significant(z.imag(), kRootDigits));
  }
  return join_fields(fields);
}

inline std::vector<std::complex<double>> decode_root_list(PayloadView payload) {
  const std::vector<std::string> fields = split_fields(payload);
  if (fields.size() % 2 != 0) throw MarshalError("root list has an odd number of fields");
  std::vector<std::complex<double>> roots;
  for (std::size_t i = 0; i < fields.size(); i += 2) {
    roots.emplace_back(parse_decimal(fields[i]), parse_decimal(fields[i + 1]));
  }
  return roots;
}

inline Payload polyroots(PayloadView input) {
  const std::vector<double> coefficients = parse_coefficients(input);
  const std::span<const double> c(coefficients);
  auto result = durand_kerner(c);
  if (!result.converged) {
    throw HandlerError(GateStatus::computation_failure,
                       "root iteration did not converge after " + std::to_string(result.sweeps) + " sweeps");
  }
  for (const auto& z : result.roots) {
    if (!(normalized_residual(c, z) <= kResidualBound)) {
      throw HandlerError(GateStatus::computation_failure, "root residual above bound");
    }
  }
  sort_roots(result.roots);
  return encode_root_list(result.roots);
}

/// Registers swap (0), version (40) and polyroots (50), four stages each.
inline void register_defaults(Gate& gate) {
  gate.register_service({"swap", kSwapBase, kMaxStages, &swap});
  gate.register_service({"version", kVersionBase, kMaxStages, &version});
  gate.register_service({"polyroots", kPolyrootsBase, kMaxStages, &polyroots});
}

}  // namespace jobgate::services
