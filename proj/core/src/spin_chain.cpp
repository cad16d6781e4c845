#include "daqc/spin_chain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "daqc/units.hpp"

namespace daqc {

void ChainSpec::validate() const {
  if (n_qubits < 2) throw ValidationError("ChainSpec: need at least two qubits");
  const auto links = static_cast<std::size_t>(n_qubits - 1);
  if (g0.size() != links || g1.size() != links)
    throw ValidationError("ChainSpec: need one (g0, g1) pair per link");
}

std::optional<std::string> ChainSpec::detuning_warning() const {
  const double detuning = std::abs(delta());
  for (double g : g0)
    if (detuning < 20.0 * std::abs(g))
      return "qubit detuning below 20*g0; the far-off-resonance premise is thin";
  return std::nullopt;
}

std::pair<RationalAngle, RationalAngle> phase_lookup(const TwoLocalTarget& target) {
  const bool even = target.link % 2 == 0;
  const auto pi = [](std::int64_t num, std::int64_t den = 1) {
    return RationalAngle::pi_times(num, den);
  };
  const Pauli a = target.axis_j;
  const Pauli b = target.axis_k;
  if ((a != Pauli::X && a != Pauli::Y) || (b != Pauli::X && b != Pauli::Y))
    throw ValidationError("phase_lookup: only X/Y two-local targets are reachable");
  if (target.sign != 1 && target.sign != -1)
    throw ValidationError("phase_lookup: sign must be +-1");

  if (a == Pauli::Y && b == Pauli::Y)
    return target.sign > 0 ? std::pair{pi(2), pi(2)} : std::pair{pi(1), pi(1)};
  if (a == Pauli::X && b == Pauli::X)
    return target.sign > 0 ? std::pair{pi(2), pi(1)} : std::pair{pi(1), pi(2)};
  if (a == Pauli::Y && b == Pauli::X) {
    if (target.sign > 0)  // phi1 = (1 + (-1)^j / 2) pi
      return {even ? pi(3, 2) : pi(1, 2), pi(3, 2)};
    return {even ? pi(1, 2) : pi(3, 2), pi(1, 2)};
  }
  // a == X, b == Y
  if (target.sign > 0)  // phi1 = (1 + (-1)^{j+1} / 2) pi
    return {even ? pi(1, 2) : pi(3, 2), pi(3, 2)};
  return {even ? pi(3, 2) : pi(1, 2), pi(1, 2)};
}

namespace {

void check_drives(const ChainSpec& chain, const std::vector<DriveSettings>& drives) {
  std::set<int> seen;
  for (const auto& d : drives) {
    if (d.link < 1 || d.link >= chain.n_qubits)
      throw ValidationError("drive on a link outside the chain");
    if (!seen.insert(d.link).second)
      throw ValidationError("duplicate drive on link " + std::to_string(d.link));
  }
}

}  // namespace

TimeDependentHamiltonian lab_frame_hamiltonian(const ChainSpec& chain,
                                               const std::vector<DriveSettings>& drives) {
  chain.validate();
  check_drives(chain, drives);

  TimeDependentHamiltonian h;
  h.n_qubits = chain.n_qubits;
  double nu_max = std::max(std::abs(chain.omega_odd), std::abs(chain.omega_even));

  for (int q = 1; q <= chain.n_qubits; ++q)
    h.add_term(PauliString::single(chain.n_qubits, q, Pauli::Z),
               HarmonicCoefficient{chain.omega(q) / 2.0, {}});

  for (int link = 1; link < chain.n_qubits; ++link) {
    HarmonicCoefficient coeff{chain.g0[static_cast<std::size_t>(link - 1)], {}};
    const double g1 = chain.g1[static_cast<std::size_t>(link - 1)];
    const auto drive = std::find_if(drives.begin(), drives.end(),
                                    [&](const DriveSettings& d) { return d.link == link; });
    if (drive != drives.end()) {
      if (drive->tone1_active()) {
        coeff.tones.push_back({drive->a1 * g1, drive->nu1, drive->phase1.radians()});
        nu_max = std::max(nu_max, std::abs(drive->nu1));
      }
      if (drive->tone2_active()) {
        coeff.tones.push_back({drive->a2 * g1, drive->nu2, drive->phase2.radians()});
        nu_max = std::max(nu_max, std::abs(drive->nu2));
      }
    }
    h.add_term(PauliString::two(chain.n_qubits, link, Pauli::Y, link + 1, Pauli::Y), coeff);
  }
  h.max_angular_frequency = nu_max;
  return h;
}

std::vector<RwaLinkTerms> rwa_link_terms(const ChainSpec& chain,
                                         const std::vector<DriveSettings>& drives) {
  chain.validate();
  check_drives(chain, drives);
  const double delta = chain.delta();
  const double mu = chain.mu();

  std::vector<RwaLinkTerms> out;
  for (const auto& d : drives) {
    const double g1 = chain.g1[static_cast<std::size_t>(d.link - 1)];
    const double rel = std::max({std::abs(delta), std::abs(mu), 1.0});
    if (d.tone1_active() && std::abs(d.nu1 - delta) > 1e-9 * rel)
      throw ValidationError("rwa_hamiltonian: tone 1 off the exchange resonance nu1 = Delta");
    if (d.tone2_active() && std::abs(d.nu2 - mu) > 1e-9 * rel)
      throw ValidationError(
          "rwa_hamiltonian: tone 2 off the double-excitation resonance nu2 = mu");

    const double a1 = d.tone1_active() ? d.a1 : 0.0;
    const double a2 = d.tone2_active() ? d.a2 : 0.0;
    const double c1 = d.phase1.cos(), s1 = d.phase1.sin();
    const double c2 = d.phase2.cos(), s2 = d.phase2.sin();
    const double parity = (d.link % 2 == 0) ? 1.0 : -1.0;  // (-1)^j

    RwaLinkTerms terms;
    terms.link = d.link;
    const double quarter = g1 / 4.0;
    terms.xx = quarter * (a1 * c1 - a2 * c2);
    terms.xy = quarter * (parity * a1 * s1 - a2 * s2);
    terms.yx = quarter * (-parity * a1 * s1 - a2 * s2);
    terms.yy = quarter * (a1 * c1 + a2 * c2);
    out.push_back(terms);
  }
  return out;
}

std::vector<PauliString> rwa_terms(const ChainSpec& chain,
                                   const std::vector<DriveSettings>& drives) {
  std::vector<PauliString> strings;
  for (const auto& t : rwa_link_terms(chain, drives)) {
    const int j = t.link;
    const int n = chain.n_qubits;
    if (t.xx != 0.0) strings.push_back(PauliString::two(n, j, Pauli::X, j + 1, Pauli::X, t.xx));
    if (t.xy != 0.0) strings.push_back(PauliString::two(n, j, Pauli::X, j + 1, Pauli::Y, t.xy));
    if (t.yx != 0.0) strings.push_back(PauliString::two(n, j, Pauli::Y, j + 1, Pauli::X, t.yx));
    if (t.yy != 0.0) strings.push_back(PauliString::two(n, j, Pauli::Y, j + 1, Pauli::Y, t.yy));
  }
  return strings;
}

HermitianOperator rwa_hamiltonian(const ChainSpec& chain,
                                  const std::vector<DriveSettings>& drives) {
  return HermitianOperator::from_terms(chain.n_qubits, rwa_terms(chain, drives));
}

RwaComparison rwa_deviation(const ChainSpec& chain, const std::vector<DriveSettings>& drives,
                            double t_max_ns, double dt_ns,
                            const std::vector<std::string>& observables, const StateVector& psi0,
                            bool allow_large) {
  if (chain.n_qubits > 3 && !allow_large)
    throw ResourceError(
        "rwa_deviation: lab-frame integration budget is 3 qubits (pass allow_large to "
        "override)");
  if (observables.empty()) throw ValidationError("rwa_deviation: no observables");

  std::vector<Eigen::Index> indices;
  indices.reserve(observables.size());
  for (const auto& label : observables) {
    if (static_cast<int>(label.size()) != chain.n_qubits)
      throw ValidationError("rwa_deviation: observable label length mismatch");
    indices.push_back(StateVector::basis_index(label));
  }

  const auto h_lab = lab_frame_hamiltonian(chain, drives);
  const StaticPropagator rwa_prop{rwa_hamiltonian(chain, drives)};

  RwaComparison cmp;
  const int stride = std::max(1, static_cast<int>(std::floor(t_max_ns / dt_ns / 800.0)));
  evolve_harmonic_observed(h_lab, 0.0, t_max_ns, psi0, dt_ns, stride,
                           [&](double t, const DenseVector& y) {
                             cmp.times_ns.push_back(t);
                             std::vector<double> pops;
                             pops.reserve(indices.size());
                             for (auto idx : indices) pops.push_back(std::norm(y[idx]));
                             cmp.full_populations.push_back(std::move(pops));
                           });

  DenseVector amps(psi0.dim());
  for (double t : cmp.times_ns) {
    amps = psi0.amplitudes();
    rwa_prop.apply_in_place(t, amps);
    std::vector<double> pops;
    pops.reserve(indices.size());
    for (auto idx : indices) pops.push_back(std::norm(amps[idx]));
    cmp.rwa_populations.push_back(std::move(pops));
  }

  for (std::size_t s = 0; s < cmp.times_ns.size(); ++s)
    for (std::size_t o = 0; o < indices.size(); ++o)
      cmp.max_deviation = std::max(
          cmp.max_deviation, std::abs(cmp.full_populations[s][o] - cmp.rwa_populations[s][o]));
  return cmp;
}

}  // namespace daqc
