#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabnl/errors.hpp"

namespace stabnl {

/// An N-site Pauli operator over local dimension d, kept in symplectic form
///
///   w^phase * (X^x1 Z^z1) (x) ... (x) (X^xn Z^zn),   w = exp(i*pi/d),
///
/// so w is the primitive 2d-th root of unity (w = i for qubits) and the phase
/// exponent lives in Z_{2d} uniformly for every d. X and Z are the shift and
/// clock matrices X|j> = |j+1 mod d>, Z|j> = exp(2*pi*i*j/d)|j>.
///
/// Y is not a primitive: it is stored as x = z = 1 with one unit of phase
/// (Y = i*XZ). Sites are addressed 1-based, matching party labels.
///
/// Values are immutable after construction apart from the builder setters;
/// all algebra returns new operators.
class PauliOperator {
 public:
  explicit PauliOperator(std::size_t n_sites, unsigned d = 2);

  static PauliOperator identity(std::size_t n_sites, unsigned d = 2) {
    return PauliOperator(n_sites, d);
  }

  std::size_t n_sites() const { return x_.size(); }
  unsigned dim() const { return d_; }
  unsigned phase() const { return phase_; }

  unsigned x(std::size_t site) const;  // 1-based
  unsigned z(std::size_t site) const;

  /// Builder access; exponents are reduced mod d, phase mod 2d.
  void set_site(std::size_t site, unsigned x, unsigned z);
  void add_phase(unsigned p);

  bool is_identity() const;

  /// Count of sites with x = z = 1 (qubit "Y" sites).
  std::size_t y_count() const;

  /// Qubit-only: phase parity must match the Y count.
  bool is_hermitian() const;

  /// Qubit-only, Hermitian operators: 0 for +, 1 for - in letter form
  /// (i.e. the sign once every x=z=1 site is read as Y).
  unsigned sign_bit() const;

  /// Qubit-only: the local letter at `site`, one of 'I','X','Y','Z',
  /// ignoring the global phase.
  char letter_at(std::size_t site) const;

  /// The (x,z) exponent pair at `site`, any d.
  std::pair<unsigned, unsigned> exponents_at(std::size_t site) const;

  bool operator==(const PauliOperator&) const = default;

 private:
  void check_site(std::size_t site) const;

  unsigned d_;
  unsigned phase_;  // exponent of w = exp(i*pi/d), reduced mod 2d
  std::vector<std::uint32_t> x_, z_;
};

/// Exact group product; exponent vectors add mod d and the phase picks up
/// the ZX reordering factor (ZX = w^2 XZ per site).
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

/// Exponent c in  b.a = w^{2c} a.b,  i.e.  sum_sites (x_a z_b - z_a x_b) mod d.
/// Zero iff the operators commute. For qubits this is the symplectic form.
unsigned commutation_phase(const PauliOperator& a, const PauliOperator& b);

/// Commutation phase of the single-site restrictions at `site` (1-based).
unsigned site_commutation_phase(const PauliOperator& a, const PauliOperator& b,
                                std::size_t site);

/// The |sites|-site sub-operator keeping the selected sites in ascending
/// order. The global phase is dropped (result phase 0); only the commutation
/// structure of restrictions is meaningful downstream.
PauliOperator restricted_to(const PauliOperator& a, std::vector<std::size_t> sites);

/// Parse the text form of an operator. For d = 2 the grammar is
///   [+-]? i? ( I | X | Y | Z | '(' [IXYZ]+ ')' )+
/// where a parenthesized group multiplies single-site letters left to right
/// (e.g. "(XZ)" is the X.Z product at one site). For d > 2:
///   [+-]? ( 'w' ('^' digits)? ' ' )? site ( '.' site )*
///   site := 'I' | 'X' ('^' digits)? ( 'Z' ('^' digits)? )? | 'Z' ('^' digits)?
/// with 'w' the primitive 2d-th root of unity.
PauliOperator parse_pauli(const std::string& text, unsigned d = 2);

/// Canonical text form; parse_pauli(to_string(p), p.dim()) == p.
std::string to_string(const PauliOperator& p);

}  // namespace stabnl
