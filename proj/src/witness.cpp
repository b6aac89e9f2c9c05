#include "stabnl/witness.hpp"

#include <algorithm>

namespace stabnl {

namespace {

PauliOperator product_from_exponents(const StabilizerGroup& g, const BitVec& e) {
  PauliOperator p = PauliOperator::identity(g.n_qubits());
  for (std::size_t m = 0; m < g.k(); ++m)
    if (e.get(m)) p = p * g.generators()[m];
  return p;
}

void check_pair(const StabilizerGroup& g, std::size_t a1, std::size_t a2) {
  if (a1 == a2) throw DomainError("the two parties must differ");
  if (a1 < 1 || a1 > g.n_qubits() || a2 < 1 || a2 > g.n_qubits())
    throw DomainError("party label out of range");
}

bool pattern_holds(const PauliOperator& si, const PauliOperator& sj, std::size_t a1,
                   std::size_t a2) {
  for (std::size_t s = 1; s <= si.n_sites(); ++s) {
    const bool anti = site_commutation_phase(si, sj, s) != 0;
    if (anti != (s == a1 || s == a2)) return false;
  }
  return true;
}

PauliOperator letter_op(char letter, unsigned sign_bit = 0) {
  PauliOperator p(1, 2);
  switch (letter) {
    case 'I': break;
    case 'X': p.set_site(1, 1, 0); break;
    case 'Z': p.set_site(1, 0, 1); break;
    case 'Y': p.set_site(1, 1, 1); p.add_phase(1); break;
    default: throw DomainError("unknown letter");
  }
  p.add_phase(2 * sign_bit);
  return p;
}

// The 24 single-qubit Cliffords as (image of X, image of Z) pairs.
std::vector<CliffordDescriptor> all_descriptors() {
  static const char letters[3] = {'X', 'Y', 'Z'};
  std::vector<CliffordDescriptor> out;
  for (char lx : letters)
    for (unsigned sx = 0; sx < 2; ++sx)
      for (char lz : letters) {
        if (lz == lx) continue;
        for (unsigned sz = 0; sz < 2; ++sz)
          out.push_back({letter_op(lx, sx), letter_op(lz, sz)});
      }
  return out;
}

CliffordDescriptor descriptor_mapping_to_xz(char p, char q) {
  static const std::vector<CliffordDescriptor> cands = all_descriptors();
  const PauliOperator from_p = letter_op(p), from_q = letter_op(q);
  const PauliOperator to_x = letter_op('X'), to_z = letter_op('Z');
  for (const auto& d : cands)
    if (conjugate_1q(d, from_p) == to_x && conjugate_1q(d, from_q) == to_z) return d;
  throw InvalidWitnessError("no Clifford maps the reduced letters to (X, Z)");
}

}  // namespace

PauliOperator conjugate_1q(const CliffordDescriptor& d, const PauliOperator& p) {
  if (p.n_sites() != 1 || p.dim() != 2)
    throw DomainError("conjugate_1q takes a single-qubit operator");
  const auto [x, z] = p.exponents_at(1);
  PauliOperator out = PauliOperator::identity(1);
  if (x) out = out * d.x_image;
  if (z) out = out * d.z_image;
  out.add_phase(p.phase());
  return out;
}

PauliOperator conjugate_2q(const CorrectionRule& r, const PauliOperator& p) {
  if (p.n_sites() != 2 || p.dim() != 2)
    throw DomainError("conjugate_2q takes a two-qubit operator");
  PauliOperator out(2, 2);
  unsigned phase = p.phase();
  const CliffordDescriptor* ds[2] = {&r.first, &r.second};
  for (std::size_t t = 1; t <= 2; ++t) {
    const auto [x, z] = p.exponents_at(t);
    PauliOperator f(1, 2);
    f.set_site(1, x, z);
    const PauliOperator c = conjugate_1q(*ds[t - 1], f);
    const auto [cx, cz] = c.exponents_at(1);
    out.set_site(t, cx, cz);
    phase += c.phase();
  }
  out.add_phase(phase % 4);
  return out;
}

std::optional<WitnessPair> search_witness(const StabilizerGroup& g, std::size_t alpha1,
                                          std::size_t alpha2) {
  check_pair(g, alpha1, alpha2);
  const std::size_t k = g.k(), n = g.n_qubits();
  if (k > 24)
    throw CapacityError("witness search is capped at k = 24 generators, got k = " +
                        std::to_string(k));
  const auto mats = commutation_matrices(g);

  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    // Lexicographic order on (v_1, ..., v_k): v_1 is the most significant bit.
    BitVec v(k);
    for (std::size_t i = 0; i < k; ++i)
      if ((bits >> (k - 1 - i)) & 1u) v.set(i, true);

    const BitVec y1 = mats[alpha1 - 1].mul_vec(v);
    std::vector<BitVec> others;
    others.reserve(n - 2);
    for (std::size_t a = 1; a <= n; ++a)
      if (a != alpha1 && a != alpha2) others.push_back(mats[a - 1].mul_vec(v));
    if (in_span(others, y1)) continue;

    // Basis of span{C^a v : a != alpha2} led by C^alpha1 v.
    std::vector<BitVec> basis{y1};
    for (const auto& y : others)
      if (!in_span(basis, y)) basis.push_back(y);

    BitMatrix m(basis.size(), k);
    for (std::size_t r = 0; r < basis.size(); ++r) m.row(r) = basis[r];
    BitVec rhs(basis.size());
    rhs.set(0, true);
    const auto u = solve_gf2(m, rhs);
    if (!u) continue;  // cannot happen for an independent basis

    WitnessPair w{alpha1, alpha2, *u, v, product_from_exponents(g, *u),
                  product_from_exponents(g, v)};
    if (!pattern_holds(w.s_i, w.s_j, alpha1, alpha2))
      throw InvalidWitnessError("internal: witness candidate violates the pattern");
    return w;
  }
  return std::nullopt;
}

WitnessPair find_witness(const StabilizerGroup& g, std::size_t alpha1, std::size_t alpha2) {
  check_pair(g, alpha1, alpha2);
  const GmeResult gme = is_gme(g);
  if (!gme.gme) throw NotGMEError(gme.violating_bipartition);
  auto w = search_witness(g, alpha1, alpha2);
  if (!w)
    throw InvalidWitnessError(
        "internal: witness search failed on a GME group, which contradicts the "
        "existence guarantee");
  return *w;
}

std::map<std::pair<std::size_t, std::size_t>, WitnessPair> find_all_witnesses(
    const StabilizerGroup& g) {
  std::map<std::pair<std::size_t, std::size_t>, WitnessPair> out;
  for (std::size_t a1 = 1; a1 <= g.n_qubits(); ++a1)
    for (std::size_t a2 = a1 + 1; a2 <= g.n_qubits(); ++a2) {
      auto w = search_witness(g, a1, a2);
      if (!w) throw NotGMEError(a1, a2);
      out.emplace(std::make_pair(a1, a2), std::move(*w));
    }
  return out;
}

MeasurementProtocol synthesize_protocol(const WitnessPair& w) {
  const std::size_t n = w.s_i.n_sites();
  if (!pattern_holds(w.s_i, w.s_j, w.alpha1, w.alpha2))
    throw InvalidWitnessError("witness does not satisfy the two-site pattern");
  MeasurementProtocol p;
  p.alpha1 = w.alpha1;
  p.alpha2 = w.alpha2;
  p.witness = w;
  for (std::size_t a = 1; a <= n; ++a) {
    if (a == w.alpha1 || a == w.alpha2) continue;
    const char li = w.s_i.letter_at(a), lj = w.s_j.letter_at(a);
    // Letters commute here by the pattern, so non-identity ones coincide.
    if (li != 'I' && lj != 'I' && li != lj)
      throw InvalidWitnessError("incompatible letters at a measured party");
    p.measured.push_back(a);
    p.basis[a] = li != 'I' ? li : (lj != 'I' ? lj : 'Z');
    p.tau_i[a] = li != 'I';
    p.tau_j[a] = lj != 'I';
  }
  return p;
}

std::pair<PauliOperator, PauliOperator> post_measurement_stabilizers(
    const MeasurementProtocol& p, const std::map<std::size_t, int>& outcomes) {
  if (outcomes.size() != p.measured.size())
    throw DomainError("outcomes must cover exactly the measured parties");
  for (std::size_t a : p.measured) {
    const auto it = outcomes.find(a);
    if (it == outcomes.end())
      throw DomainError("missing outcome for party " + std::to_string(a));
    if (it->second != 0 && it->second != 1)
      throw DomainError("outcomes are bits (0 = +1 eigenvector)");
  }
  const std::size_t lo = std::min(p.alpha1, p.alpha2), hi = std::max(p.alpha1, p.alpha2);

  auto reduce = [&](const PauliOperator& s, const std::map<std::size_t, bool>& tau) {
    unsigned sign = s.sign_bit();
    for (std::size_t a : p.measured)
      if (tau.at(a) && outcomes.at(a)) sign ^= 1u;
    PauliOperator out(2, 2);
    unsigned y_kept = 0;
    const std::size_t parties[2] = {lo, hi};
    for (std::size_t t = 0; t < 2; ++t) {
      const auto [x, z] = s.exponents_at(parties[t]);
      out.set_site(t + 1, x, z);
      if (x == 1 && z == 1) ++y_kept;
    }
    out.add_phase((2 * sign + y_kept) % 4);
    return out;
  };

  return {reduce(p.witness.s_i, p.tau_i), reduce(p.witness.s_j, p.tau_j)};
}

CorrectionRule corrective_unitaries(const PauliOperator& si, const PauliOperator& sj) {
  if (si.n_sites() != 2 || sj.n_sites() != 2 || si.dim() != 2 || sj.dim() != 2)
    throw DomainError("corrective_unitaries takes two-qubit operators");
  if (!si.is_hermitian() || !sj.is_hermitian())
    throw InvalidWitnessError("reduced stabilizers must be Hermitian");
  for (std::size_t t = 1; t <= 2; ++t) {
    const char a = si.letter_at(t), b = sj.letter_at(t);
    if (a == 'I' || b == 'I' || a == b)
      throw InvalidWitnessError("reduced stabilizers must anticommute at both sites");
  }
  CorrectionRule rule{descriptor_mapping_to_xz(si.letter_at(1), sj.letter_at(1)),
                      descriptor_mapping_to_xz(si.letter_at(2), sj.letter_at(2))};

  // Letter mapping preserves the overall signs; cancel them with a Pauli on
  // the first site (Z flips XX, X flips ZZ, Y flips both).
  const unsigned flip_xx = si.sign_bit(), flip_zz = sj.sign_bit();
  if (flip_xx || flip_zz) {
    const char append = flip_xx ? (flip_zz ? 'Y' : 'Z') : 'X';
    const PauliOperator a = letter_op(append);
    auto conj_by_append = [&](PauliOperator img) {
      img.add_phase(2 * commutation_phase(a, img));
      return img;
    };
    rule.first.x_image = conj_by_append(rule.first.x_image);
    rule.first.z_image = conj_by_append(rule.first.z_image);
  }

  if (!(conjugate_2q(rule, si) == parse_pauli("+XX")) ||
      !(conjugate_2q(rule, sj) == parse_pauli("+ZZ")))
    throw InvalidWitnessError("internal: correction rule failed its exactness check");
  return rule;
}

}  // namespace stabnl
