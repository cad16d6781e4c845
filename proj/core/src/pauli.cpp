#include "daqc/pauli.hpp"

#include <array>
#include <cstdlib>

namespace daqc {

namespace {

const Complex kI(0.0, 1.0);

// product_table[a][b] = (phase, letter) with sigma_a * sigma_b = phase * sigma_letter.
struct LetterProduct {
  Complex phase;
  Pauli letter;
};

LetterProduct letter_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {1.0, b};
  if (b == Pauli::I) return {1.0, a};
  if (a == b) return {1.0, Pauli::I};
  // Cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order picks up a minus sign.
  static constexpr int idx[4] = {0, 1, 2, 3};
  const int ia = idx[static_cast<int>(a)];
  const int ib = idx[static_cast<int>(b)];
  const int ic = 6 - ia - ib;  // the remaining letter
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? kI : -kI, static_cast<Pauli>(ic)};
}

// 2x2 dense letters in the (|z=+1>, |z=-1>) basis order.
const std::array<Eigen::Matrix2cd, 4>& letter_matrices() {
  static const std::array<Eigen::Matrix2cd, 4> mats = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return mats;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    default: return 'Z';
  }
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: throw ValidationError(std::string("not a Pauli letter: ") + c);
  }
}

PauliString::PauliString(int n_qubits, std::vector<Pauli> letters, Complex coefficient)
    : n_qubits_(n_qubits), letters_(std::move(letters)), coefficient_(coefficient) {
  if (n_qubits_ < 1) throw ValidationError("PauliString: need at least one qubit");
  if (letters_.size() != static_cast<std::size_t>(n_qubits_))
    throw ValidationError("PauliString: letter count must equal qubit count");
}

PauliString PauliString::identity(int n_qubits, Complex coefficient) {
  return PauliString(n_qubits, std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I),
                     coefficient);
}

PauliString PauliString::single(int n_qubits, int site, Pauli p, Complex coefficient) {
  if (site < 1 || site > n_qubits) throw ValidationError("PauliString: site out of range");
  auto s = identity(n_qubits, coefficient);
  s.letters_[static_cast<std::size_t>(site - 1)] = p;
  return s;
}

PauliString PauliString::two(int n_qubits, int site_a, Pauli a, int site_b, Pauli b,
                             Complex coefficient) {
  if (site_a == site_b) throw ValidationError("PauliString: sites must differ");
  auto s = single(n_qubits, site_a, a, coefficient);
  if (site_b < 1 || site_b > n_qubits) throw ValidationError("PauliString: site out of range");
  s.letters_[static_cast<std::size_t>(site_b - 1)] = b;
  return s;
}

PauliString PauliString::from_label(const std::string& label, Complex coefficient) {
  std::vector<Pauli> letters;
  letters.reserve(label.size());
  for (char c : label) letters.push_back(pauli_from_char(c));
  return PauliString(static_cast<int>(label.size()), std::move(letters), coefficient);
}

std::string PauliString::label() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(pauli_char(p));
  return s;
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : letters_)
    if (p != Pauli::I) ++w;
  return w;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw ValidationError("PauliString: qubit count mismatch");
  std::vector<Pauli> letters(letters_.size());
  Complex coeff = coefficient_ * rhs.coefficient_;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    const auto prod = letter_product(letters_[q], rhs.letters_[q]);
    letters[q] = prod.letter;
    coeff *= prod.phase;
  }
  return PauliString(n_qubits_, std::move(letters), coeff);
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw ValidationError("PauliString: qubit count mismatch");
  int anticommuting_sites = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    const Pauli a = letters_[q];
    const Pauli b = rhs.letters_[q];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anticommuting_sites;
  }
  return anticommuting_sites % 2 == 0;
}

DenseMatrix PauliString::dense() const {
  if (n_qubits_ > kMaxDenseQubits)
    throw ResourceError("PauliString::dense: dimension guard exceeded (n > 14)");
  // Fold qubit N inward first so that qubit 1 ends up as the outermost
  // (most significant) Kronecker factor.
  DenseMatrix out = DenseMatrix::Constant(1, 1, coefficient_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    const auto& m = letter_matrices()[static_cast<int>(*it)];
    DenseMatrix next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = m(r, c) * out;
    out = std::move(next);
  }
  return out;
}

void PauliString::apply_add(const DenseVector& x, DenseVector& y) const {
  const auto dim = static_cast<Eigen::Index>(1) << n_qubits_;
  if (x.size() != dim || y.size() != dim)
    throw ValidationError("PauliString::apply_add: dimension mismatch");
  // Bit masks: qubit q (1-based) lives at bit (n - q).
  std::uint64_t flip = 0;
  std::uint64_t zmask = 0;   // sites contributing a bit-dependent sign (Y or Z)
  int y_count = 0;
  for (int q = 1; q <= n_qubits_; ++q) {
    const std::uint64_t bit = 1ull << (n_qubits_ - q);
    switch (letters_[static_cast<std::size_t>(q - 1)]) {
      case Pauli::I: break;
      case Pauli::X: flip |= bit; break;
      case Pauli::Y: flip |= bit; zmask |= bit; ++y_count; break;
      case Pauli::Z: zmask |= bit; break;
    }
  }
  // P|i> = prefactor * (-1)^{popcount(i & zmask)} |i ^ flip>, with the
  // convention bit=0 <-> z=+1, so Z contributes -1 on bits that are set.
  // Y = i X Z contributes an overall factor i^y_count together with its
  // X and Z parts.
  Complex prefactor = coefficient_;
  switch (y_count % 4) {
    case 1: prefactor *= Complex(0, 1); break;
    case 2: prefactor *= -1.0; break;
    case 3: prefactor *= Complex(0, -1); break;
    default: break;
  }
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
    const int sign_bits = __builtin_popcountll(i & zmask);
    const Complex v = (sign_bits & 1) ? -prefactor * x[static_cast<Eigen::Index>(i)]
                                      : prefactor * x[static_cast<Eigen::Index>(i)];
    y[static_cast<Eigen::Index>(i ^ flip)] += v;
  }
}

void accumulate_term(PauliTermMap& terms, const PauliString& p) {
  auto [it, inserted] = terms.emplace(p.label(), p.coefficient());
  if (!inserted) it->second += p.coefficient();
  if (std::abs(it->second) == 0.0) terms.erase(it);
}

double term_map_distance(const PauliTermMap& a, const PauliTermMap& b) {
  double worst = 0.0;
  for (const auto& [label, coeff] : a) {
    const auto it = b.find(label);
    const Complex other = (it == b.end()) ? Complex(0.0) : it->second;
    worst = std::max(worst, std::abs(coeff - other));
  }
  for (const auto& [label, coeff] : b) {
    if (a.find(label) == a.end()) worst = std::max(worst, std::abs(coeff));
  }
  return worst;
}

DenseMatrix dense_sum(int n_qubits, const std::vector<PauliString>& terms) {
  if (n_qubits > kMaxDenseQubits)
    throw ResourceError("dense_sum: dimension guard exceeded (n > 14)");
  const auto dim = static_cast<Eigen::Index>(1) << n_qubits;
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& t : terms) out += t.dense();
  return out;
}

}  // namespace daqc
