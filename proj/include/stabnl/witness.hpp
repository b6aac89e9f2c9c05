#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stabnl/stabilizer.hpp"

namespace stabnl {

/// A pair of stabilizer elements whose single-site letters anticommute at
/// exactly two chosen parties and commute everywhere else. u and v are the
/// generator exponent vectors: s_i = prod g_m^(u_m), s_j = prod g_m^(v_m).
struct WitnessPair {
  std::size_t alpha1 = 0, alpha2 = 0;
  BitVec u, v;
  PauliOperator s_i, s_j;
};

/// Local measurement plan derived from a witness: every party outside the
/// pair measures the eigenbasis of a single Pauli letter; the tau flags say
/// whether an outcome flips the sign of the corresponding reduced stabilizer
/// (they do exactly when the witness element is non-identity at that party).
struct MeasurementProtocol {
  std::size_t alpha1 = 0, alpha2 = 0;
  std::vector<std::size_t> measured;       // ascending party labels
  std::map<std::size_t, char> basis;       // party -> 'X' | 'Y' | 'Z'
  std::map<std::size_t, bool> tau_i, tau_j;
  WitnessPair witness;
};

/// A single-qubit Clifford given by its conjugation images of X and Z
/// (signed single-qubit Paulis, stored as 1-site operators).
struct CliffordDescriptor {
  PauliOperator x_image = parse_pauli("+X");
  PauliOperator z_image = parse_pauli("+Z");
};

/// Per-site Cliffords mapping a reduced stabilizer pair to exactly
/// (+X(x)X, +Z(x)Z). `first` acts on the smaller party of the pair.
struct CorrectionRule {
  CliffordDescriptor first, second;
};

/// Pure pattern search; nullopt when no witness exists for the pair.
/// Deterministic: lexicographically first v (v_1 most significant), then the
/// free-variables-zero GF(2) solve for u.
std::optional<WitnessPair> search_witness(const StabilizerGroup& g, std::size_t alpha1,
                                          std::size_t alpha2);

/// Witness for one pair of parties; requires a GME group (NotGMEError with
/// the violating bipartition otherwise). Success is then guaranteed.
WitnessPair find_witness(const StabilizerGroup& g, std::size_t alpha1, std::size_t alpha2);

/// Witnesses for all N(N-1)/2 pairs. Runs the raw search per pair and raises
/// NotGMEError naming the first failing pair, so total success is itself the
/// GME criterion.
std::map<std::pair<std::size_t, std::size_t>, WitnessPair> find_all_witnesses(
    const StabilizerGroup& g);

/// Measurement bases and tau sign tables for a witness. Parties where both
/// elements act as the identity default to the Z basis.
MeasurementProtocol synthesize_protocol(const WitnessPair& w);

/// The signed two-qubit stabilizers of the post-measurement state for the
/// given outcome bits (0 for the +1 eigenvector). Keys must be exactly the
/// measured parties. Site 1 of each result is the smaller party of the pair.
std::pair<PauliOperator, PauliOperator> post_measurement_stabilizers(
    const MeasurementProtocol& p, const std::map<std::size_t, int>& outcomes);

/// Single-qubit Cliffords taking (s_i~, s_j~) to exactly (+XX, +ZZ): letters
/// are mapped first, then the residual signs are fixed by appending I/X/Y/Z
/// on the first site.
CorrectionRule corrective_unitaries(const PauliOperator& si, const PauliOperator& sj);

/// Conjugate a 1-site operator by the descriptor (exact phases).
PauliOperator conjugate_1q(const CliffordDescriptor& d, const PauliOperator& p);

/// Conjugate a 2-site operator by the per-site descriptors of a rule.
PauliOperator conjugate_2q(const CorrectionRule& r, const PauliOperator& p);

}  // namespace stabnl
