#pragma once

#include <cstdint>
#include <vector>

#include "stabnl/bitmatrix.hpp"
#include "stabnl/pauli.hpp"

namespace stabnl {

class StabilizerGroup;

struct CanonicalizeResult {
  StabilizerGroup group;
  std::vector<std::size_t> dropped;  // 1-based indices of redundant inputs
};

/// An abelian group of Hermitian N-qubit Pauli operators with -1 excluded,
/// kept as an independent generating list. Immutable once built.
class StabilizerGroup {
 public:
  /// Full validation: every generator Hermitian (InvalidPhaseError), all
  /// pairs commuting (NotAbelianError), then symplectic Gaussian elimination
  /// with exact phase tracking. Dependent inputs are dropped and reported;
  /// a dependent product equal to -identity raises MinusIdentityError.
  /// The resulting generators are in reduced row echelon form over the
  /// symplectic columns (x_1..x_n, z_1..z_n).
  static CanonicalizeResult validate_and_canonicalize(std::vector<PauliOperator> generators);

  /// validate_and_canonicalize with the drop report discarded.
  static StabilizerGroup from_generators(std::vector<PauliOperator> generators);

  /// No validation; for internal construction of groups that are valid by
  /// construction (basis changes, test factories).
  static StabilizerGroup unchecked(std::vector<PauliOperator> generators, bool canonical);

  std::size_t n_qubits() const { return n_; }
  std::size_t k() const { return gens_.size(); }
  const std::vector<PauliOperator>& generators() const { return gens_; }
  bool canonical() const { return canonical_; }

  /// dim V = 2^(n_qubits - k).
  std::uint64_t subspace_dimension() const;

 private:
  StabilizerGroup(std::size_t n, std::vector<PauliOperator> gens, bool canonical)
      : n_(n), gens_(std::move(gens)), canonical_(canonical) {}

  std::size_t n_;
  std::vector<PauliOperator> gens_;
  bool canonical_;
};

/// All 2^k elements with exact phases. Element at index m is the product
/// over generators g_i with bit (i-1) of m set; index 0 is the identity.
/// Guarded at k <= 20.
std::vector<PauliOperator> enumerate_group(const StabilizerGroup& g);

/// Per-party k x k GF(2) matrices: (C^alpha)_{ij} is the commutation phase
/// ofg_i and g_j restricted to party alpha. Each is symmetric with zero
/// diagonal and the sum over parties vanishes.
std::vector<BitMatrix> commutation_matrices(const StabilizerGroup& g);

struct GmeResult {
  bool gme = false;
  std::vector<std::size_t> violating_bipartition;  // parties of Q; empty when gme
};

/// Genuine multipartite entanglement of the stabilizer subspace: true iff
/// for every bipartition Q|Q~ (party 1 kept in Q) the partial sum of
/// commutation matrices over Q is nonzero. Bipartitions are scanned in
/// binary-reflected Gray-code order over parties {2..N} with incremental
/// updates; the first violating Q is reported.
GmeResult is_gme(const StabilizerGroup& g);

/// Maximal dimension 2^(N-k(N)) of a GME stabilizer subspace on N qubits,
/// k(N) = ceil((1+sqrt(8N-7))/2). Defined for N >= 4.
std::uint64_t max_gme_dimension(std::size_t n_qubits);

/// Generating-set change g~_j = prod_m g_m^(A_{mj}) for invertible A over
/// GF(2); commutation matrices transform as A^T C^alpha A.
StabilizerGroup apply_basis_change(const StabilizerGroup& g, const BitMatrix& a);

}  // namespace stabnl
