#include "stabnl/tableau.hpp"

#include <algorithm>

namespace stabnl {

namespace {

PauliOperator single_site_pauli(std::size_t n, std::size_t site, char basis) {
  PauliOperator p(n, 2);
  switch (basis) {
    case 'X': p.set_site(site, 1, 0); break;
    case 'Z': p.set_site(site, 0, 1); break;
    case 'Y': p.set_site(site, 1, 1); p.add_phase(1); break;
    default: throw DomainError("measurement basis must be X, Y or Z");
  }
  return p;
}

BitVec symplectic_of(const PauliOperator& p) {
  const std::size_t n = p.n_sites();
  BitVec v(2 * n);
  for (std::size_t s = 1; s <= n; ++s) {
    const auto [x, z] = p.exponents_at(s);
    if (x & 1u) v.set(s - 1, true);
    if (z & 1u) v.set(n + s - 1, true);
  }
  return v;
}

}  // namespace

StabilizerTableau::StabilizerTableau(const StabilizerGroup& g, std::uint64_t seed)
    : n_(g.n_qubits()), rows_(g.generators()), rng_(seed) {}

StabilizerTableau::StabilizerTableau(std::size_t n_qubits,
                                     std::vector<PauliOperator> rows,
                                     std::uint64_t seed)
    : n_(n_qubits), rows_(std::move(rows)), rng_(seed) {
  for (const auto& r : rows_)
    if (r.n_sites() != n_ || r.dim() != 2)
      throw DimensionError("tableau rows must be n-qubit operators");
}

int StabilizerTableau::measure(std::size_t site, char basis,
                               std::optional<int> forced_outcome) {
  if (site < 1 || site > n_) throw DomainError("measured site out of range");
  if (forced_outcome && *forced_outcome != 0 && *forced_outcome != 1)
    throw DomainError("forced outcome must be a bit");
  const PauliOperator target = single_site_pauli(n_, site, basis);

  std::vector<std::size_t> anti;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (commutation_phase(rows_[i], target) != 0) anti.push_back(i);

  if (!anti.empty()) {
    const int r = forced_outcome ? *forced_outcome
                                 : static_cast<int>(rng_() & 1u);
    for (std::size_t t = 1; t < anti.size(); ++t)
      rows_[anti[t]] = rows_[anti[t]] * rows_[anti[0]];
    PauliOperator measured = target;
    measured.add_phase(2 * static_cast<unsigned>(r));
    rows_[anti[0]] = measured;
    return r;
  }

  // Commuting case: decide whether +-target is already in the row span.
  const std::size_t k = rows_.size();
  BitMatrix m(2 * n_, k);
  for (std::size_t i = 0; i < k; ++i) {
    const BitVec row = symplectic_of(rows_[i]);
    for (std::size_t c = 0; c < 2 * n_; ++c)
      if (row.get(c)) m.set(c, i, true);
  }
  const auto combo = solve_gf2(m, symplectic_of(target));
  if (combo) {
    PauliOperator prod = PauliOperator::identity(n_);
    for (std::size_t i = 0; i < k; ++i)
      if (combo->get(i)) prod = prod * rows_[i];
    const int det = static_cast<int>(((prod.phase() + 4 - target.phase()) % 4) / 2);
    if (forced_outcome && *forced_outcome != det)
      throw ContradictionError("forced outcome " + std::to_string(*forced_outcome) +
                               " contradicts the deterministic result " +
                               std::to_string(det));
    return det;
  }

  const int r = forced_outcome ? *forced_outcome : static_cast<int>(rng_() & 1u);
  PauliOperator measured = target;
  measured.add_phase(2 * static_cast<unsigned>(r));
  rows_.push_back(measured);
  return r;
}

std::pair<PauliOperator, PauliOperator> tableau_run_protocol(
    const StabilizerGroup& g, const MeasurementProtocol& p,
    const std::map<std::size_t, int>& outcomes) {
  StabilizerTableau t(g);
  for (std::size_t a : p.measured) {
    const auto it = outcomes.find(a);
    if (it == outcomes.end())
      throw DomainError("missing outcome for party " + std::to_string(a));
    t.measure(a, p.basis.at(a), it->second);
  }
  if (outcomes.size() != p.measured.size())
    throw DomainError("outcomes must cover exactly the measured parties");

  const std::size_t lo = std::min(p.alpha1, p.alpha2), hi = std::max(p.alpha1, p.alpha2);
  const std::size_t n = g.n_qubits();

  auto support = [n](const PauliOperator& op) {
    std::vector<std::size_t> s;
    for (std::size_t a = 1; a <= n; ++a) {
      const auto [x, z] = op.exponents_at(a);
      if (x | z) s.push_back(a);
    }
    return s;
  };

  // Measured single-site rows, one per measured party.
  std::map<std::size_t, PauliOperator> singles;
  std::vector<PauliOperator> rest;
  for (const auto& row : t.rows()) {
    const auto s = support(row);
    if (s.size() == 1 && p.basis.count(s[0])) {
      singles.emplace(s[0], row);
    } else {
      rest.push_back(row);
    }
  }
  for (std::size_t a : p.measured)
    if (!singles.count(a))
      throw CertificateFailure("tableau lost the measured row of party " +
                               std::to_string(a));

  std::vector<PauliOperator> cleared;
  for (auto row : rest) {
    for (std::size_t a : p.measured)
      if (row.letter_at(a) != 'I') row = row * singles.at(a);
    const auto s = support(row);
    for (std::size_t a : s)
      if (a != lo && a != hi)
        throw CertificateFailure("post-measurement stabilizer leaks outside the pair");
    cleared.push_back(std::move(row));
  }
  if (cleared.size() != 2)
    throw CertificateFailure("expected a rank-2 pair stabilizer, found rank " +
                             std::to_string(cleared.size()));

  auto reduce_pair = [&](const PauliOperator& op) {
    PauliOperator out(2, 2);
    const std::size_t parties[2] = {lo, hi};
    for (std::size_t i = 0; i < 2; ++i) {
      const auto [x, z] = op.exponents_at(parties[i]);
      out.set_site(i + 1, x, z);
    }
    out.add_phase(op.phase());
    return out;
  };
  const PauliOperator c1 = reduce_pair(cleared[0]);
  const PauliOperator c2 = reduce_pair(cleared[1]);
  const PauliOperator c12 = c1 * c2;

  auto match = [&](const PauliOperator& wanted_pattern) {
    for (const auto& cand : {c1, c2, c12}) {
      bool same = true;
      for (std::size_t site = 1; site <= 2; ++site)
        if (cand.exponents_at(site) != wanted_pattern.exponents_at(site)) same = false;
      if (same) return cand;
    }
    throw CertificateFailure("tableau pair group does not contain the witness pattern");
  };

  const std::vector<std::size_t> pair_sites{lo, hi};
  return {match(restricted_to(p.witness.s_i, pair_sites)),
          match(restricted_to(p.witness.s_j, pair_sites))};
}

}  // namespace stabnl
