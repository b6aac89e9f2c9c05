#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "stabnl/witness.hpp"

namespace stabnl {

/// Row-only stabilizer tableau. k <= N rows encode a (possibly mixed) state,
/// the uniform state on the stabilized subspace; no destabilizer rows are
/// kept since every measurement here is a single-site Pauli and outcomes can
/// be forced. Rows stay pairwise commuting, independent and free of -1.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(const StabilizerGroup& g, std::uint64_t seed = 0x57ab1e5eed);
  StabilizerTableau(std::size_t n_qubits, std::vector<PauliOperator> rows,
                    std::uint64_t seed = 0x57ab1e5eed);

  std::size_t n_qubits() const { return n_; }
  const std::vector<PauliOperator>& rows() const { return rows_; }

  /// Measure the single-site Pauli `basis` in {X,Y,Z} at `site` (1-based).
  /// Anticommuting rows make the outcome free (forced_outcome or PRNG) and
  /// are folded into the measured operator; a commuting operator inside the
  /// row span gives a deterministic outcome (ContradictionError if forced to
  /// the other value); a commuting operator outside the span is appended as
  /// a new row with a free outcome.
  int measure(std::size_t site, char basis, std::optional<int> forced_outcome = {});

 private:
  std::size_t n_;
  std::vector<PauliOperator> rows_;
  std::mt19937_64 rng_;
};

/// Run the full protocol on a fresh tableau for `g` with forced outcomes and
/// read back the two signed stabilizers of the post-measurement pair state
/// (site 1 = smaller party). The extraction clears measured-site support
/// with the measured single-site rows and then resolves the witness's
/// reduced symplectic patterns inside the leftover two-qubit group, so the
/// signs come from the tableau alone.
std::pair<PauliOperator, PauliOperator> tableau_run_protocol(
    const StabilizerGroup& g, const MeasurementProtocol& p,
    const std::map<std::size_t, int>& outcomes);

}  // namespace stabnl
