#include "fig/fqmat.hpp"

#include <algorithm>

namespace fig {

FqMat FqMat::identity(std::size_t n) {
  FqMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMat FqMat::from_rows(const std::vector<std::vector<std::int64_t>>& rows, const Fq& f) {
  if (rows.empty()) return FqMat();
  FqMat m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) fail(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = f.reduce(rows[r][c]);
  }
  return m;
}

std::vector<std::int64_t> FqMat::row(std::size_t r) const {
  return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
}

void FqMat::set_row(std::size_t r, const std::vector<std::int64_t>& v) {
  std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

void FqMat::append_row(const std::vector<std::int64_t>& v) {
  if (cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "append_row width");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

FqMat FqMat::transposed() const {
  FqMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FqMat FqMat::mul(const FqMat& other, const Fq& f) const {
  if (cols_ != other.rows_) fail(Errc::DimensionMismatch, "matrix product");
  FqMat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, other.at(k, j)));
    }
  return out;
}

std::vector<std::int64_t> FqMat::mul_vec(const std::vector<std::int64_t>& v, const Fq& f) const {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "matrix-vector product");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = f.add(s, f.mul(at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

std::size_t FqMat::rref(const Fq& f) {
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows_ && lead < cols_; ++lead) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, lead) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(r, c));
    std::int64_t innv = f.inv(at(r, lead));
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = f.mul(at(r, c), innv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, lead) == 0) continue;
      std::int64_t m = at(i, lead);
      for (std::size_t c = 0; c < cols_; ++c)
        at(i, c) = f.sub(at(i, c), f.mul(m, at(r, c)));
    }
    ++r;
  }
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    bool nz = false;
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) { nz = true; break; }
    if (nz) ++rank;
  }
  return rank;
}

void FqMat::drop_zero_rows() {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    bool nz = false;
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) { nz = true; break; }
    if (!nz) continue;
    if (w != r)
      for (std::size_t c = 0; c < cols_; ++c) at(w, c) = at(r, c);
    ++w;
  }
  a_.resize(w * cols_);
  rows_ = w;
}

std::int64_t FqMat::det(const Fq& f) const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "det of nonsquare matrix");
  FqMat m = *this;
  std::int64_t d = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(c, c));
    std::int64_t innv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      std::int64_t k = f.mul(m.at(i, c), innv);
      if (k == 0) continue;
      for (std::size_t j = c; j < cols_; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(k, m.at(c, j)));
    }
  }
  return d;
}

FqMat FqMat::inverse(const Fq& f) const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "inverse of nonsquare matrix");
  FqMat aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  std::size_t rank = aug.rref(f);
  if (rank != rows_) fail(Errc::DomainError, "singular matrix");
  FqMat out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
  return out;
}

FqMat kernel_basis(const FqMat& m, const Fq& f) {
  FqMat r = m;
  r.rref(f);
  r.drop_zero_rows();
  std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col(r.rows());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < n && r.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  FqMat k(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows(); ++i)
      v[pivot_col[i]] = f.neg(r.at(i, free));
    k.append_row(v);
  }
  k.rref(f);  // canonical form for downstream hashing
  return k;
}

LinearSolution solve_linear(const FqMat& m, const std::vector<std::int64_t>& b, const Fq& f) {
  if (b.size() != m.rows()) fail(Errc::DimensionMismatch, "rhs length");
  LinearSolution sol;
  FqMat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = f.reduce(b[r]);
  }
  aug.rref(f);
  aug.drop_zero_rows();
  std::vector<std::int64_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    std::size_t c = 0;
    while (c < aug.cols() && aug.at(i, c) == 0) ++c;
    if (c == m.cols()) return sol;  // 0 = 1 row: inconsistent
    x[c] = aug.at(i, m.cols());
  }
  sol.consistent = true;
  sol.particular = std::move(x);
  sol.kernel = kernel_basis(m, f);
  return sol;
}

}  // namespace fig
