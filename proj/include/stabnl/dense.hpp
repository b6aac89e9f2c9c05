#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>

#include "stabnl/witness.hpp"

namespace stabnl {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Pure (amplitude vector) or mixed (density matrix) state of n qudits.
/// Basis index convention: site 1 is the most significant digit,
/// index = sum_s c_s * d^(n-s).
class DenseState {
 public:
  static DenseState pure(Vec psi, unsigned d, std::size_t n_sites);
  static DenseState mixed(Mat rho, unsigned d, std::size_t n_sites);

  bool is_pure() const { return pure_; }
  const Vec& amplitudes() const;
  Mat density() const;  // materializes |psi><psi| for pure states

  unsigned local_dim() const { return d_; }
  std::size_t n_sites() const { return n_; }

 private:
  DenseState() = default;
  bool pure_ = false;
  unsigned d_ = 2;
  std::size_t n_ = 0;
  Vec psi_;
  Mat rho_;
};

/// Full d^n x d^n matrix of a Pauli operator. Every generalized Pauli is a
/// phased permutation, so this is built column by column.
Mat dense_pauli_matrix(const PauliOperator& p);

/// Maximally mixed state on the stabilizer subspace: the projector
/// (1/2^k) sum_{s in S} s normalized to unit trace. Capped at N <= 10.
DenseState dense_projector(const StabilizerGroup& g);

struct ProtocolRun {
  Mat pair_state;      // 4x4 density matrix, site order (min, max) of the pair
  double probability;  // of the projected branch
};

/// Project every measured qubit of `state` onto the basis eigenvector picked
/// by its outcome bit, trace the measured qubits out, and normalize.
/// A branch of probability < 1e-12 raises ZeroProbabilityError.
ProtocolRun dense_run_protocol(const DenseState& state, const MeasurementProtocol& p,
                               const std::map<std::size_t, int>& outcomes);

/// 2x2 unitary realizing a Clifford descriptor: column 0 is the +1
/// eigenvector of the Z image, column 1 its X-image partner.
Mat clifford_unitary(const CliffordDescriptor& d);

/// <phi+|rho|phi+> with phi+ = (|00> + |11>)/sqrt(2).
double fidelity_with_phi_plus(const Mat& rho);

/// Apply the per-site correction unitaries to a 4x4 pair state.
Mat apply_correction(const CorrectionRule& rule, const Mat& rho);

/// Number of eigenvalues above `tol` (Hermitian input).
std::size_t dense_rank(const Mat& m, double tol = 1e-9);

}  // namespace stabnl
