#include "daqc/random.hpp"

#include <cmath>

#include "daqc/units.hpp"

namespace daqc {

double PortableRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double PortableRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

StateVector haar_random_state(int n_qubits, PortableRng& rng) {
  const auto dim = static_cast<Eigen::Index>(1) << n_qubits;
  DenseVector amps(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    amps[i] = Complex(re, im);
  }
  amps /= amps.norm();
  return StateVector(n_qubits, std::move(amps));
}

}  // namespace daqc
