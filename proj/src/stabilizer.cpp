#include "stabnl/stabilizer.hpp"

#include <algorithm>

namespace stabnl {

namespace {

// Symplectic row of a qubit operator, columns x_1..x_n then z_1..z_n.
BitVec symplectic_row(const PauliOperator& p) {
  const std::size_t n = p.n_sites();
  BitVec row(2 * n);
  for (std::size_t s = 1; s <= n; ++s) {
    const auto [x, z] = p.exponents_at(s);
    if (x & 1u) row.set(s - 1, true);
    if (z & 1u) row.set(n + s - 1, true);
  }
  return row;
}

bool symplectic_zero(const PauliOperator& p) {
  for (std::size_t s = 1; s <= p.n_sites(); ++s) {
    const auto [x, z] = p.exponents_at(s);
    if ((x | z) & 1u) return false;
  }
  return true;
}

std::size_t leading_col(const PauliOperator& p) {
  return *symplectic_row(p).first_set();
}

}  // namespace

CanonicalizeResult StabilizerGroup::validate_and_canonicalize(
    std::vector<PauliOperator> generators) {
  if (generators.empty()) throw DomainError("no generators given");
  const std::size_t n = generators[0].n_sites();
  for (const auto& g : generators) {
    if (g.dim() != 2) throw DomainError("stabilizer groups are qubit-only here");
    if (g.n_sites() != n) throw DimensionError("generators have mixed site counts");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!generators[i].is_hermitian()) throw InvalidPhaseError(i + 1);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (commutation_phase(generators[i], generators[j]) != 0)
        throw NotAbelianError(i + 1, j + 1);

  // Phase-exact reduced row echelon form; rows stay sorted by pivot column.
  std::vector<PauliOperator> rows;
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    PauliOperator cur = generators[i];
    for (const auto& r : rows) {
      const std::size_t c = leading_col(r);
      const std::size_t site = (c % n) + 1;
      const bool bit = c < n ? (cur.x(site) & 1u) : (cur.z(site) & 1u);
      if (bit) cur = cur * r;
    }
    if (symplectic_zero(cur)) {
      if (cur.phase() != 0) throw MinusIdentityError();
      dropped.push_back(i + 1);
      continue;
    }
    const std::size_t pc = leading_col(cur);
    for (auto& r : rows) {
      const std::size_t site = (pc % n) + 1;
      const bool bit = pc < n ? (r.x(site) & 1u) : (r.z(site) & 1u);
      if (bit) r = r * cur;
    }
    const auto pos = std::lower_bound(
        rows.begin(), rows.end(), pc,
        [](const PauliOperator& r, std::size_t col) { return leading_col(r) < col; });
    rows.insert(pos, cur);
  }
  if (rows.empty())
    throw DomainError("all generators are the identity; the group is trivial");
  return CanonicalizeResult{StabilizerGroup(n, std::move(rows), true), std::move(dropped)};
}

StabilizerGroup StabilizerGroup::from_generators(std::vector<PauliOperator> generators) {
  return validate_and_canonicalize(std::move(generators)).group;
}

StabilizerGroup StabilizerGroup::unchecked(std::vector<PauliOperator> generators,
                                           bool canonical) {
  if (generators.empty()) throw DomainError("no generators given");
  return StabilizerGroup(generators[0].n_sites(), std::move(generators), canonical);
}

std::uint64_t StabilizerGroup::subspace_dimension() const {
  const std::size_t exp = n_ - k();
  if (exp >= 63)
    throw CapacityError("subspace dimension 2^" + std::to_string(exp) +
                        " exceeds the 2^62 cap");
  return std::uint64_t{1} << exp;
}

std::vector<PauliOperator> enumerate_group(const StabilizerGroup& g) {
  const std::size_t k = g.k();
  if (k > 20)
    throw CapacityError("group enumeration is capped at k = 20 generators, got k = " +
                        std::to_string(k));
  std::vector<PauliOperator> out;
  out.reserve(std::size_t{1} << k);
  out.push_back(PauliOperator::identity(g.n_qubits()));
  for (std::size_t m = 1; m < (std::size_t{1} << k); ++m) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
    out.push_back(out[m & (m - 1)] * g.generators()[low]);
  }
  return out;
}

std::vector<BitMatrix> commutation_matrices(const StabilizerGroup& g) {
  const std::size_t k = g.k(), n = g.n_qubits();
  std::vector<BitMatrix> mats(n, BitMatrix(k, k));
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (site_commutation_phase(g.generators()[i], g.generators()[j], a) & 1u) {
          mats[a - 1].set(i, j, true);
          mats[a - 1].set(j, i, true);
        }
  return mats;
}

GmeResult is_gme(const StabilizerGroup& g) {
  const std::size_t n = g.n_qubits();
  if (n < 2) throw DomainError("GME needs at least two parties");
  const auto mats = commutation_matrices(g);

  // Party 1 stays in Q; subsets of {2..N} walk in Gray-code order so each
  // step XORs a single party matrix into the running sum.
  const std::uint64_t full = (n - 1 >= 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << (n - 1)) - 1;
  if (n - 1 >= 64) throw CapacityError("bipartition scan is capped at 64 parties");

  auto bipartition_of = [&](std::uint64_t bits) {
    std::vector<std::size_t> q{1};
    for (std::size_t t = 0; t < n - 1; ++t)
      if ((bits >> t) & 1u) q.push_back(t + 2);
    return q;
  };

  BitMatrix running = mats[0];
  if (running.is_zero()) return {false, bipartition_of(0)};
  std::uint64_t prev = 0;
  for (std::uint64_t m = 1; m <= full; ++m) {
    const std::uint64_t gray = m ^ (m >> 1);
    const std::uint64_t flipped = gray ^ prev;
    prev = gray;
    const std::size_t party = static_cast<std::size_t>(__builtin_ctzll(flipped)) + 2;
    running ^= mats[party - 1];
    if (gray == full) continue;  // Q = [N] is not a bipartition
    if (running.is_zero()) return {false, bipartition_of(gray)};
  }
  return {true, {}};
}

std::uint64_t max_gme_dimension(std::size_t n_qubits) {
  if (n_qubits < 4)
    throw DomainError("GME stabilizer subspaces of dimension >= 2 need N >= 4");
  // Smallest k with k(k-1)/2 >= N-1, which is ceil((1+sqrt(8N-7))/2) exactly.
  std::size_t k = 1;
  while (k * (k - 1) / 2 < n_qubits - 1) ++k;
  const std::size_t exp = n_qubits - k;
  if (exp >= 63)
    throw CapacityError("dimension 2^" + std::to_string(exp) + " exceeds the 2^62 cap");
  return std::uint64_t{1} << exp;
}

StabilizerGroup apply_basis_change(const StabilizerGroup& g, const BitMatrix& a) {
  const std::size_t k = g.k();
  if (a.rows() != k || a.cols() != k)
    throw DimensionError("basis change must be " + std::to_string(k) + "x" +
                         std::to_string(k));
  if (!a.invertible()) throw SingularMatrixError("basis change matrix is singular");
  std::vector<PauliOperator> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    PauliOperator prod = PauliOperator::identity(g.n_qubits());
    for (std::size_t m = 0; m < k; ++m)
      if (a.get(m, j)) prod = prod * g.generators()[m];
    out.push_back(std::move(prod));
  }
  return StabilizerGroup::unchecked(std::move(out), false);
}

}  // namespace stabnl
