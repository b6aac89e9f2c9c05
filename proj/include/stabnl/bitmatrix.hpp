#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabnl/errors.hpp"

namespace stabnl {

/// Fixed-length GF(2) vector packed into 64-bit words.
class BitVec {
 public:
  explicit BitVec(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t t = 0; t < w_.size(); ++t) w_[t] ^= o.w_[t];
    return *this;
  }

  bool is_zero() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  /// Parity of the AND with `o` (GF(2) inner product).
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < w_.size(); ++t) acc ^= w_[t] & o.w_[t];
    return __builtin_parityll(acc);
  }

  std::optional<std::size_t> first_set() const {
    for (std::size_t t = 0; t < w_.size(); ++t)
      if (w_[t]) return t * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[t]));
    return std::nullopt;
  }

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }
  const BitVec& row(std::size_t i) const { return r_[i]; }
  BitVec& row(std::size_t i) { return r_[i]; }

  BitMatrix& operator^=(const BitMatrix& o) {
    for (std::size_t i = 0; i < rows_; ++i) r_[i] ^= o.r_[i];
    return *this;
  }

  bool is_zero() const {
    for (const auto& r : r_)
      if (!r.is_zero()) return false;
    return true;
  }

  bool is_symmetric_zero_diag() const;
  BitMatrix transposed() const;
  BitMatrix operator*(const BitMatrix& o) const;
  BitVec mul_vec(const BitVec& v) const;

  std::size_t rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<BitVec> r_;
};

/// One solution of A x = b over GF(2) with all free variables set to zero,
/// or nullopt if the system is inconsistent.
std::optional<BitVec> solve_gf2(const BitMatrix& a, const BitVec& b);

/// Rank of the set of vectors (rows).
std::size_t gf2_rank(std::vector<BitVec> rows);

/// True iff v lies in the span of `basis`.
bool in_span(const std::vector<BitVec>& basis, const BitVec& v);

}  // namespace stabnl
