#include "daqc/evolve.hpp"

#include <functional>

#include <Eigen/Eigenvalues>

#include "daqc/units.hpp"

namespace daqc {

namespace {

const Complex kImag(0.0, 1.0);

int qubits_from_dim(Eigen::Index dim) {
  int n = 0;
  while ((static_cast<Eigen::Index>(1) << n) < dim) ++n;
  if ((static_cast<Eigen::Index>(1) << n) != dim)
    throw ValidationError("operator dimension is not a power of two");
  return n;
}

}  // namespace

HermitianOperator::HermitianOperator(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw ValidationError("HermitianOperator: matrix must be square");
  n_qubits_ = qubits_from_dim(m_.rows());
  if (n_qubits_ > kMaxDenseQubits)
    throw ResourceError("HermitianOperator: dimension guard exceeded (n > 14)");
  const double scale = std::max(1.0, m_.norm());
  if ((m_ - m_.adjoint()).norm() > 1e-12 * scale)
    throw ValidationError("HermitianOperator: matrix is not Hermitian within 1e-12");
}

HermitianOperator HermitianOperator::zero(int n_qubits) {
  if (n_qubits > kMaxDenseQubits)
    throw ResourceError("HermitianOperator: dimension guard exceeded (n > 14)");
  const auto dim = static_cast<Eigen::Index>(1) << n_qubits;
  return HermitianOperator(DenseMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::from_terms(int n_qubits,
                                                const std::vector<PauliString>& terms) {
  return HermitianOperator(dense_sum(n_qubits, terms));
}

StateVector evolve_static(const HermitianOperator& h, double duration_ns,
                          const StateVector& psi) {
  if (duration_ns < 0.0) throw ValidationError("evolve_static: duration must be >= 0");
  return StaticPropagator(h).apply(duration_ns, psi);
}

StaticPropagator::StaticPropagator(const HermitianOperator& h) : n_qubits_(h.n_qubits()) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw ValidationError("StaticPropagator: eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

void StaticPropagator::apply_in_place(double duration_ns, DenseVector& amps) const {
  DenseVector modes = eigenvectors_.adjoint() * amps;
  for (Eigen::Index i = 0; i < modes.size(); ++i)
    modes[i] *= std::exp(-kImag * eigenvalues_[i] * duration_ns);
  amps = eigenvectors_ * modes;
}

StateVector StaticPropagator::apply(double duration_ns, const StateVector& psi) const {
  if (psi.n_qubits() != n_qubits_) throw ValidationError("StaticPropagator: qubit count mismatch");
  DenseVector amps = psi.amplitudes();
  apply_in_place(duration_ns, amps);
  StateVector out(psi.n_qubits(), std::move(amps));
  out.normalize();
  return out;
}

namespace {

// y = -i H(t) x
void rhs(const TimeDependentHamiltonian& h, double t, const DenseVector& x, DenseVector& y) {
  y.setZero();
  for (const auto& [p, coeff] : h.terms) {
    const double c = coeff(t);
    if (c == 0.0) continue;
    PauliString scaled = p;
    scaled.set_coefficient(p.coefficient() * c);
    scaled.apply_add(x, y);
  }
  y *= -kImag;
}

}  // namespace

void evolve_harmonic_observed(const TimeDependentHamiltonian& h, double t0_ns, double t1_ns,
                              const StateVector& psi, double dt_ns, int stride,
                              const std::function<void(double, const DenseVector&)>& observe) {
  if (h.n_qubits != psi.n_qubits())
    throw ValidationError("evolve_harmonic: qubit count mismatch");
  if (dt_ns <= 0.0) throw ValidationError("evolve_harmonic: dt must be positive");
  if (t1_ns < t0_ns) throw ValidationError("evolve_harmonic: t1 must be >= t0");
  if (h.max_angular_frequency > 0.0) {
    const double ceiling = (kTwoPi / h.max_angular_frequency) / 20.0;
    if (dt_ns > ceiling * (1.0 + 1e-12))
      throw ValidationError("evolve_harmonic: dt exceeds (2pi/nu_max)/20 ceiling");
  }

  DenseVector y = psi.amplitudes();
  const Eigen::Index dim = y.size();
  DenseVector k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  if (observe) observe(t0_ns, y);

  const double total = t1_ns - t0_ns;
  const auto n_steps = static_cast<long>(std::ceil(total / dt_ns - 1e-12));
  double t = t0_ns;
  for (long step = 0; step < n_steps; ++step) {
    const double step_dt = std::min(dt_ns, t1_ns - t);
    rhs(h, t, y, k1);
    tmp = y + 0.5 * step_dt * k1;
    rhs(h, t + 0.5 * step_dt, tmp, k2);
    tmp = y + 0.5 * step_dt * k2;
    rhs(h, t + 0.5 * step_dt, tmp, k3);
    tmp = y + step_dt * k3;
    rhs(h, t + step_dt, tmp, k4);
    y += (step_dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += step_dt;

    const double norm = y.norm();
    if (std::abs(norm - 1.0) >= 1e-6)
      throw StepSizeError("evolve_harmonic: norm drift >= 1e-6, use a smaller dt");
    y /= norm;

    if (observe && ((step + 1) % stride == 0 || step + 1 == n_steps)) observe(t, y);
  }
}

StateVector evolve_harmonic(const TimeDependentHamiltonian& h, double t0_ns, double t1_ns,
                            const StateVector& psi, double dt_ns) {
  if (t1_ns == t0_ns) return psi;
  DenseVector last;
  evolve_harmonic_observed(h, t0_ns, t1_ns, psi, dt_ns, 1 << 30,
                           [&](double, const DenseVector& y) { last = y; });
  return StateVector(psi.n_qubits(), std::move(last));
}

void TimeDependentHamiltonian::add_term(PauliString p, HarmonicCoefficient c) {
  if (p.n_qubits() != n_qubits)
    throw ValidationError("TimeDependentHamiltonian: qubit count mismatch");
  if (std::abs(p.coefficient().imag()) > 0.0)
    throw ValidationError("TimeDependentHamiltonian: term strings must have real coefficients");
  terms.emplace_back(std::move(p), std::move(c));
}

DenseMatrix two_local_unitary(Pauli axis_j, Pauli axis_k, double angle, int j, int k, int n) {
  if (j == k) throw ValidationError("two_local_unitary: sites must differ");
  const auto dim = static_cast<Eigen::Index>(1) << n;
  const PauliString p = PauliString::two(n, j, axis_j, k, axis_k);
  // (sigma sigma)^2 = I, so exp(-i a P) = cos(a) I - i sin(a) P exactly.
  DenseMatrix out = std::cos(angle) * DenseMatrix::Identity(dim, dim);
  out -= kImag * std::sin(angle) * p.dense();
  return out;
}

void apply_two_local_rotation(Eigen::Ref<DenseVector> amps, int n_qubits, int j, Pauli a, int k,
                              Pauli b, double angle) {
  if (j == k) throw ValidationError("apply_two_local_rotation: sites must differ");
  if (a == Pauli::I || b == Pauli::I)
    throw ValidationError("apply_two_local_rotation: identity letter");
  const double c = std::cos(angle);
  const Complex mis = -kImag * std::sin(angle);
  const std::uint64_t bit_j = 1ull << (n_qubits - j);
  const std::uint64_t bit_k = 1ull << (n_qubits - k);
  const auto dim = static_cast<std::uint64_t>(amps.size());
  Complex* data = amps.data();

  std::uint64_t flip = 0, zmask = 0;
  int y_count = 0;
  auto classify = [&](Pauli p, std::uint64_t bit) {
    if (p == Pauli::X) flip |= bit;
    if (p == Pauli::Y) { flip |= bit; zmask |= bit; ++y_count; }
    if (p == Pauli::Z) zmask |= bit;
  };
  classify(a, bit_j);
  classify(b, bit_k);
  Complex pref = 1.0;
  if (y_count == 1) pref = kImag;
  if (y_count == 2) pref = -1.0;

  if (flip == 0) {
    // Diagonal generator (ZZ): amps[i] *= exp(-i angle s_i).
    const Complex rot_plus = c + mis;    // s = +1
    const Complex rot_minus = c - mis;   // s = -1
    for (std::uint64_t i = 0; i < dim; ++i) {
      const bool minus = __builtin_popcountll(i & zmask) & 1;
      data[i] *= minus ? rot_minus : rot_plus;
    }
    return;
  }

  // Enumerate one representative per orbit {i, i^flip}: all indices with the
  // highest flipped bit clear.
  const int high_bit = 63 - __builtin_clzll(flip);
  const std::uint64_t low_mask = (1ull << high_bit) - 1;
  const Complex mis_pref = mis * pref;
  for (std::uint64_t r = 0; r < dim / 2; ++r) {
    const std::uint64_t i = ((r & ~low_mask) << 1) | (r & low_mask);
    const std::uint64_t p = i ^ flip;
    const bool si = __builtin_popcountll(i & zmask) & 1;
    const bool sp = __builtin_popcountll(p & zmask) & 1;
    const Complex ai = data[i];
    const Complex ap = data[p];
    // P|i> = (+-pref) |p>, P|p> = (+-pref) |i>
    data[i] = c * ai + (sp ? -mis_pref : mis_pref) * ap;
    data[p] = c * ap + (si ? -mis_pref : mis_pref) * ai;
  }
}

void apply_local_rotation(Eigen::Ref<DenseVector> amps, int n_qubits,
                          const std::vector<int>& sites, Pauli axis, double angle) {
  if (axis != Pauli::Z)
    throw ValidationError("apply_local_rotation: only z-axis rotations are emitted");
  std::uint64_t zmask = 0;
  for (int s : sites) {
    if (s < 1 || s > n_qubits) throw ValidationError("apply_local_rotation: site out of range");
    zmask |= 1ull << (n_qubits - s);
  }
  const int n_sites = static_cast<int>(sites.size());
  const auto dim = static_cast<std::uint64_t>(amps.size());
  // sum of z eigenvalues = n_sites - 2 * popcount(i & zmask)
  std::vector<Complex> rot(static_cast<std::size_t>(n_sites) + 1);
  for (int ones = 0; ones <= n_sites; ++ones) {
    const double zsum = n_sites - 2 * ones;
    rot[static_cast<std::size_t>(ones)] = std::exp(-kImag * angle * zsum);
  }
  for (std::uint64_t i = 0; i < dim; ++i)
    amps[static_cast<Eigen::Index>(i)] *= rot[static_cast<std::size_t>(
        __builtin_popcountll(i & zmask))];
}

NumberSectorPropagator::NumberSectorPropagator(int n_qubits,
                                               const std::vector<PauliString>& terms)
    : n_qubits_(n_qubits) {
  if (n_qubits > kMaxDenseQubits)
    throw ResourceError("NumberSectorPropagator: dimension guard exceeded (n > 14)");
  const auto dim = static_cast<Eigen::Index>(1) << n_qubits;

  // Bucket basis states by excitation number (= count of z=+1 bits, i.e.
  // zeros in the index).
  sectors_.assign(static_cast<std::size_t>(n_qubits) + 1, {});
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int excited = n_qubits - __builtin_popcountll(static_cast<std::uint64_t>(i));
    sectors_[static_cast<std::size_t>(excited)].indices.push_back(i);
  }

  DenseVector col = DenseVector::Zero(dim);
  DenseVector out = DenseVector::Zero(dim);
  for (auto& sector : sectors_) {
    const auto d = static_cast<Eigen::Index>(sector.indices.size());
    DenseMatrix h_sub(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      col.setZero();
      col[sector.indices[static_cast<std::size_t>(c)]] = 1.0;
      out.setZero();
      for (const auto& t : terms) t.apply_add(col, out);
      for (Eigen::Index r = 0; r < d; ++r)
        h_sub(r, c) = out[sector.indices[static_cast<std::size_t>(r)]];
      // The Hamiltonian must not leak outside the sector.
      double total = 0.0;
      for (Eigen::Index i = 0; i < dim; ++i) total += std::norm(out[i]);
      double kept = 0.0;
      for (Eigen::Index r = 0; r < d; ++r)
        kept += std::norm(out[sector.indices[static_cast<std::size_t>(r)]]);
      if (total - kept > 1e-18 * std::max(1.0, total))
        throw ValidationError(
            "NumberSectorPropagator: Hamiltonian does not conserve excitation number");
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h_sub);
    if (solver.info() != Eigen::Success)
      throw ValidationError("NumberSectorPropagator: eigendecomposition failed");
    sector.eigenvalues = solver.eigenvalues();
    sector.eigenvectors = solver.eigenvectors();
  }
}

void NumberSectorPropagator::apply_in_place(double duration_ns, DenseVector& amps) const {
  for (const auto& sector : sectors_) {
    const auto d = static_cast<Eigen::Index>(sector.indices.size());
    DenseVector sub(d);
    for (Eigen::Index i = 0; i < d; ++i) sub[i] = amps[sector.indices[static_cast<std::size_t>(i)]];
    DenseVector modes = sector.eigenvectors.adjoint() * sub;
    for (Eigen::Index i = 0; i < d; ++i)
      modes[i] *= std::exp(-kImag * sector.eigenvalues[i] * duration_ns);
    sub = sector.eigenvectors * modes;
    for (Eigen::Index i = 0; i < d; ++i) amps[sector.indices[static_cast<std::size_t>(i)]] = sub[i];
  }
}

void NumberSectorPropagator::apply_to_columns(double duration_ns, DenseMatrix& states) const {
  const auto cols = states.cols();
  for (const auto& sector : sectors_) {
    const auto d = static_cast<Eigen::Index>(sector.indices.size());
    DenseMatrix sub(d, cols);
    for (Eigen::Index i = 0; i < d; ++i)
      sub.row(i) = states.row(sector.indices[static_cast<std::size_t>(i)]);
    DenseMatrix modes = sector.eigenvectors.adjoint() * sub;
    for (Eigen::Index i = 0; i < d; ++i)
      modes.row(i) *= std::exp(-kImag * sector.eigenvalues[i] * duration_ns);
    sub = sector.eigenvectors * modes;
    for (Eigen::Index i = 0; i < d; ++i)
      states.row(sector.indices[static_cast<std::size_t>(i)]) = sub.row(i);
  }
}

StateVector NumberSectorPropagator::apply(double duration_ns, const StateVector& psi) const {
  if (psi.n_qubits() != n_qubits_)
    throw ValidationError("NumberSectorPropagator: qubit count mismatch");
  DenseVector amps = psi.amplitudes();
  apply_in_place(duration_ns, amps);
  StateVector out(psi.n_qubits(), std::move(amps));
  out.normalize();
  return out;
}

}  // namespace daqc
