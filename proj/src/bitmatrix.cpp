#include "stabnl/bitmatrix.hpp"

namespace stabnl {

bool BitMatrix::is_symmetric_zero_diag() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (get(i, i)) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  }
  return true;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("bit matrix shapes do not chain");
  BitMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t t = 0; t < cols_; ++t)
      if (get(i, t)) out.row(i) ^= o.row(t);
  return out;
}

BitVec BitMatrix::mul_vec(const BitVec& v) const {
  if (v.size() != cols_) throw DimensionError("bit vector length mismatch");
  BitVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, r_[i].dot(v));
  return out;
}

std::size_t BitMatrix::rank() const {
  std::vector<BitVec> rows(r_);
  return gf2_rank(std::move(rows));
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<BitVec>& basis, const BitVec& v) {
  std::vector<BitVec> rows(basis);
  const std::size_t r0 = gf2_rank(rows);
  rows.push_back(v);
  return gf2_rank(rows) == r0;
}

std::optional<BitVec> solve_gf2(const BitMatrix& a, const BitVec& b) {
  if (b.size() != a.rows()) throw DimensionError("rhs length mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  // Augmented elimination; remember each pivot's column.
  std::vector<BitVec> m;
  m.reserve(rows);
  BitVec rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) m.push_back(a.row(i));
  rhs = b;

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && !m[pivot].get(col)) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const bool bp = rhs.get(rank), bq = rhs.get(pivot);
    rhs.set(rank, bq);
    rhs.set(pivot, bp);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != rank && m[i].get(col)) {
        m[i] ^= m[rank];
        rhs.set(i, rhs.get(i) ^ rhs.get(rank));
      }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (rhs.get(i)) return std::nullopt;  // 0 = 1 row
  BitVec x(cols);
  for (std::size_t i = 0; i < rank; ++i) x.set(pivot_col[i], rhs.get(i));
  return x;
}

}  // namespace stabnl
