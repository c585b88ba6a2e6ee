#pragma once

// Simultaneous root finding for univariate polynomials (Durand-Kerner /
// Weierstrass iteration).

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace jobgate {

template <std::floating_point T>
struct DurandKernerOptions {
  T tolerance = T(1e-12);
  int max_sweeps = 1000;
};

template <std::floating_point T>
struct DurandKernerResult {
  std::vector<std::complex<T>> roots;
  int sweeps = 0;
  bool converged = false;
};

/// Horner evaluation of c[0] + c[1] z + ... + c[n-1] z^(n-1).
template <std::floating_point T>
std::complex<T> evaluate(std::span<const T> coefficients, std::complex<T> z) {
  std::complex<T> acc(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Horner rounding-error scale: sum_k |c_k| |z|^k.
template <std::floating_point T>
T evaluation_scale(std::span<const T> coefficients, std::complex<T> z) {
  const T r = std::abs(z);
  T acc(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

/// |p(z)| / max(1, max_k |c_k|).
template <std::floating_point T>
T normalized_residual(std::span<const T> coefficients, std::complex<T> z) {
  T scale(1);
  for (T c : coefficients) scale = std::max(scale, std::abs(c));
  return std::abs(evaluate(coefficients, z)) / scale;
}

/// Lexicographic by (real, imaginary).
template <std::floating_point T>
void sort_roots(std::vector<std::complex<T>>& roots) {
  std::sort(roots.begin(), roots.end(), [](const std::complex<T>& a, const std::complex<T>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

/// Coefficients are in ascending powers and the leading one must be nonzero.
/// Starts from z_k = (0.4 + 0.9i)^(k+1) on the monic normalization, updating
/// roots in place. A sweep's update for root k is measured relative to
/// max(1, |z_k|). The iteration stops once every update in a sweep is below
/// the tolerance, or once every root's residual is within the rounding error
/// of evaluating it (further sweeps only move clustered roots around by
/// noise). Roots are returned unsorted.
template <std::floating_point T>
DurandKernerResult<T> durand_kerner(std::span<const T> coefficients,
                                    const DurandKernerOptions<T>& options = {}) {
  if (coefficients.size() < 2) throw std::invalid_argument("polynomial degree must be at least 1");
  const T lead = coefficients.back();
  if (lead == T(0) || !std::isfinite(lead)) throw std::invalid_argument("leading coefficient must be nonzero");

  const std::size_t degree = coefficients.size() - 1;
  std::vector<T> monic(coefficients.begin(), coefficients.end());
  for (T& c : monic) c /= lead;

  DurandKernerResult<T> result;
  result.roots.resize(degree);
  const std::complex<T> seed(T(0.4), T(0.9));
  std::complex<T> power(1);
  for (std::size_t k = 0; k < degree; ++k) {
    power *= seed;
    result.roots[k] = power;
  }

  const std::span<const T> p(monic);
  const T noise_floor = T(4) * static_cast<T>(degree) * std::numeric_limits<T>::epsilon();
  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    T worst(0);
    bool at_noise = true;
    for (std::size_t k = 0; k < degree; ++k) {
      std::complex<T> denom(1);
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != k) denom *= result.roots[k] - result.roots[j];
      }
      const std::complex<T> num = evaluate(p, result.roots[k]);
      at_noise = at_noise && std::abs(num) <= noise_floor * evaluation_scale(p, result.roots[k]);
      std::complex<T> delta;
      if (denom == std::complex<T>(0)) {
        // Coincident iterates: nudge apart instead of dividing by zero.
        delta = std::complex<T>(T(1e-8), T(1e-8)) * std::max(T(1), std::abs(result.roots[k]));
      } else {
        delta = num / denom;
      }
      result.roots[k] -= delta;
      const T scaled = std::abs(delta) / std::max(T(1), std::abs(result.roots[k]));
      if (!std::isfinite(scaled)) {
        result.sweeps = sweep;
        return result;
      }
      worst = std::max(worst, scaled);
    }
    result.sweeps = sweep;
    if (worst < options.tolerance || at_noise) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

}  // namespace jobgate
