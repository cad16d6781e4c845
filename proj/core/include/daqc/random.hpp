#pragma once

#include <cstdint>
#include <random>

#include "daqc/state.hpp"

namespace daqc {

/// Deterministic random source built on std::mt19937_64, whose output
/// sequence is pinned by the standard. Gaussians come from an explicit
/// Box-Muller transform because std::normal_distribution is not
/// reproducible across standard libraries; with this class identical seeds
/// give identical bytes everywhere.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller (two uniforms per pair, cached).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random state: 2^N independent complex standard normals, normalized.
StateVector haar_random_state(int n_qubits, PortableRng& rng);

}  // namespace daqc
