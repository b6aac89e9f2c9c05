#include "stabnl/pauli.hpp"

#include <algorithm>
#include <cctype>

namespace stabnl {

PauliOperator::PauliOperator(std::size_t n_sites, unsigned d)
    : d_(d), phase_(0), x_(n_sites, 0), z_(n_sites, 0) {
  if (n_sites == 0) throw DomainError("operator needs at least one site");
  if (d < 2) throw DomainError("local dimension must be at least 2");
}

void PauliOperator::check_site(std::size_t site) const {
  if (site < 1 || site > n_sites())
    throw DomainError("site " + std::to_string(site) + " out of range [1," +
                      std::to_string(n_sites()) + "]");
}

unsigned PauliOperator::x(std::size_t site) const {
  check_site(site);
  return x_[site - 1];
}

unsigned PauliOperator::z(std::size_t site) const {
  check_site(site);
  return z_[site - 1];
}

void PauliOperator::set_site(std::size_t site, unsigned x, unsigned z) {
  check_site(site);
  x_[site - 1] = x % d_;
  z_[site - 1] = z % d_;
}

void PauliOperator::add_phase(unsigned p) { phase_ = (phase_ + p) % (2 * d_); }

bool PauliOperator::is_identity() const {
  if (phase_ != 0) return false;
  for (std::size_t t = 0; t < x_.size(); ++t)
    if (x_[t] != 0 || z_[t] != 0) return false;
  return true;
}

std::size_t PauliOperator::y_count() const {
  std::size_t y = 0;
  for (std::size_t t = 0; t < x_.size(); ++t)
    if (x_[t] == 1 && z_[t] == 1) ++y;
  return y;
}

bool PauliOperator::is_hermitian() const {
  if (d_ != 2) throw DomainError("is_hermitian is defined for qubit operators");
  return ((phase_ ^ y_count()) & 1u) == 0;
}

unsigned PauliOperator::sign_bit() const {
  if (!is_hermitian()) throw DomainError("sign_bit needs a Hermitian operator");
  return ((phase_ + 4 - (y_count() % 4)) % 4) / 2;
}

char PauliOperator::letter_at(std::size_t site) const {
  if (d_ != 2) throw DomainError("letter_at is defined for qubit operators");
  check_site(site);
  const unsigned x = x_[site - 1], z = z_[site - 1];
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::pair<unsigned, unsigned> PauliOperator::exponents_at(std::size_t site) const {
  check_site(site);
  return {x_[site - 1], z_[site - 1]};
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_sites() != b.n_sites() || a.dim() != b.dim())
    throw DimensionError("operator shapes differ: " + std::to_string(a.n_sites()) +
                         "-site d=" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.n_sites()) + "-site d=" +
                         std::to_string(b.dim()));
  const unsigned d = a.dim();
  PauliOperator c(a.n_sites(), d);
  unsigned long long cross = 0;  // Z^za X^xb = w^{2 za xb} X^xb Z^za per site
  for (std::size_t s = 1; s <= a.n_sites(); ++s) {
    const auto [xa, za] = a.exponents_at(s);
    const auto [xb, zb] = b.exponents_at(s);
    cross += static_cast<unsigned long long>(za) * xb;
    c.set_site(s, xa + xb, za + zb);
  }
  c.add_phase((a.phase() + b.phase() + 2 * (cross % d)) % (2 * d));
  return c;
}

unsigned commutation_phase(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_sites() != b.n_sites() || a.dim() != b.dim())
    throw DimensionError("operator shapes differ");
  const unsigned d = a.dim();
  unsigned acc = 0;
  for (std::size_t s = 1; s <= a.n_sites(); ++s)
    acc = (acc + site_commutation_phase(a, b, s)) % d;
  return acc;
}

unsigned site_commutation_phase(const PauliOperator& a, const PauliOperator& b,
                                std::size_t site) {
  if (a.dim() != b.dim()) throw DimensionError("local dimensions differ");
  const unsigned d = a.dim();
  const auto [xa, za] = a.exponents_at(site);
  const auto [xb, zb] = b.exponents_at(site);
  return static_cast<unsigned>(
      ((static_cast<long long>(xa) * zb - static_cast<long long>(za) * xb) % d + d) % d);
}

PauliOperator restricted_to(const PauliOperator& a, std::vector<std::size_t> sites) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  if (sites.empty()) throw DomainError("restriction needs a nonempty site set");
  for (std::size_t s : sites)
    if (s < 1 || s > a.n_sites())
      throw DomainError("restriction site " + std::to_string(s) + " out of range");
  PauliOperator r(sites.size(), a.dim());
  for (std::size_t t = 0; t < sites.size(); ++t) {
    const auto [x, z] = a.exponents_at(sites[t]);
    r.set_site(t + 1, x, z);
  }
  return r;
}

namespace {

struct SiteExp {
  unsigned x = 0, z = 0, phase = 0;  // phase in units of i (qubit site algebra)
};

// Multiply single-qubit letters left to right with exact phase.
SiteExp site_mul(SiteExp a, SiteExp b) {
  SiteExp c;
  c.x = a.x ^ b.x;
  c.z = a.z ^ b.z;
  c.phase = (a.phase + b.phase + 2 * (a.z & b.x)) % 4;
  return c;
}

SiteExp letter_exp(char l) {
  switch (l) {
    case 'I': return {0, 0, 0};
    case 'X': return {1, 0, 0};
    case 'Z': return {0, 1, 0};
    case 'Y': return {1, 1, 1};  // Y = i XZ
    default: return {0, 0, 0};
  }
}

bool is_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

PauliOperator parse_qubit(const std::string& text) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  std::vector<SiteExp> sites;
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_letter(c)) {
      sites.push_back(letter_exp(c));
      ++pos;
    } else if (c == '(') {
      ++pos;
      SiteExp acc;
      bool any = false;
      while (pos < text.size() && text[pos] != ')') {
        if (!is_letter(text[pos]))
          throw ParseError(std::string("invalid letter '") + text[pos] + "'", pos + 1);
        acc = site_mul(acc, letter_exp(text[pos]));
        any = true;
        ++pos;
      }
      if (pos == text.size()) throw ParseError("unterminated '('", text.size() + 1);
      if (!any) throw ParseError("empty site group", pos + 1);
      ++pos;  // ')'
      sites.push_back(acc);
    } else {
      throw ParseError(std::string("invalid letter '") + c + "'", pos + 1);
    }
  }
  if (sites.empty()) throw ParseError("operator has no sites", pos + 1);
  PauliOperator p(sites.size(), 2);
  for (std::size_t t = 0; t < sites.size(); ++t) {
    p.set_site(t + 1, sites[t].x, sites[t].z);
    phase += sites[t].phase;
  }
  p.add_phase(phase % 4);
  return p;
}

unsigned parse_number(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected a number", pos + 1);
  unsigned v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + static_cast<unsigned>(text[pos] - '0');
    if (v > 1000000) throw ParseError("exponent too large", pos + 1);
    ++pos;
  }
  return v;
}

PauliOperator parse_qudit(const std::string& text, unsigned d) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += d;  // -1 = w^d
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'w') {
    ++pos;
    unsigned e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_number(text, pos);
    }
    phase += e;
    if (pos >= text.size() || text[pos] != ' ')
      throw ParseError("expected ' ' after the phase prefix", pos + 1);
    ++pos;
  }
  struct Exp {
    unsigned x = 0, z = 0;
  };
  std::vector<Exp> sites;
  bool expect_site = true;
  while (pos < text.size()) {
    if (!expect_site) {
      if (text[pos] != '.')
        throw ParseError(std::string("expected '.' before '") + text[pos] + "'", pos + 1);
      ++pos;
      expect_site = true;
      continue;
    }
    Exp e;
    if (pos < text.size() && text[pos] == 'I') {
      ++pos;
    } else {
      bool any = false;
      if (pos < text.size() && text[pos] == 'X') {
        ++pos;
        e.x = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e.x = parse_number(text, pos);
        }
        any = true;
      }
      if (pos < text.size() && text[pos] == 'Z') {
        ++pos;
        e.z = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e.z = parse_number(text, pos);
        }
        any = true;
      }
      if (!any)
        throw ParseError(pos < text.size()
                             ? std::string("invalid token '") + text[pos] + "'"
                             : std::string("missing site token"),
                         pos + 1);
    }
    sites.push_back(e);
    expect_site = false;
  }
  if (sites.empty() || expect_site)
    throw ParseError("operator has no sites", pos + 1);
  PauliOperator p(sites.size(), d);
  for (std::size_t t = 0; t < sites.size(); ++t) p.set_site(t + 1, sites[t].x, sites[t].z);
  p.add_phase(phase % (2 * d));
  return p;
}

}  // namespace

PauliOperator parse_pauli(const std::string& text, unsigned d) {
  if (d < 2) throw DomainError("local dimension must be at least 2");
  return d == 2 ? parse_qubit(text) : parse_qudit(text, d);
}

std::string to_string(const PauliOperator& p) {
  std::string out;
  if (p.dim() == 2) {
    const unsigned residual = (p.phase() + 4 - (p.y_count() % 4)) % 4;
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    out = prefix[residual];
    for (std::size_t s = 1; s <= p.n_sites(); ++s) out += p.letter_at(s);
    return out;
  }
  if (p.phase() != 0) out = "w^" + std::to_string(p.phase()) + " ";
  for (std::size_t s = 1; s <= p.n_sites(); ++s) {
    if (s > 1) out += '.';
    const auto [x, z] = p.exponents_at(s);
    if (x == 0 && z == 0) {
      out += 'I';
      continue;
    }
    if (x) {
      out += 'X';
      if (x > 1) out += "^" + std::to_string(x);
    }
    if (z) {
      out += 'Z';
      if (z > 1) out += "^" + std::to_string(z);
    }
  }
  return out;
}

}  // namespace stabnl
