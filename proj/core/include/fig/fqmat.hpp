#pragma once

#include <cstdint>
#include <vector>

#include "fig/fq.hpp"

namespace fig {

/// Dense row-major matrix over F_q. Sizes in this library are tiny
/// (ambient dimensions <= 6), so no effort is spent on sparsity.
class FqMat {
 public:
  FqMat() : rows_(0), cols_(0) {}
  FqMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FqMat identity(std::size_t n);
  static FqMat from_rows(const std::vector<std::vector<std::int64_t>>& rows, const Fq& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<std::int64_t> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<std::int64_t>& v);
  void append_row(const std::vector<std::int64_t>& v);

  FqMat transposed() const;
  FqMat mul(const FqMat& other, const Fq& f) const;
  std::vector<std::int64_t> mul_vec(const std::vector<std::int64_t>& v, const Fq& f) const;

  /// In-place reduced row echelon form; returns the rank. Pivot columns come
  /// out strictly increasing, pivots are 1 with zeros above and below.
  std::size_t rref(const Fq& f);

  /// Drops all-zero rows (used after rref).
  void drop_zero_rows();

  std::int64_t det(const Fq& f) const;
  FqMat inverse(const Fq& f) const;

  bool operator==(const FqMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  const std::vector<std::int64_t>& data() const { return a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

/// Solution of M x = b: a particular solution plus an RREF kernel basis.
/// An empty solution set is signalled by consistent == false, not an error.
struct LinearSolution {
  bool consistent = false;
  std::vector<std::int64_t> particular;  // one solution when consistent
  FqMat kernel;                          // rows form an RREF basis of ker M
};

LinearSolution solve_linear(const FqMat& m, const std::vector<std::int64_t>& b, const Fq& f);

/// RREF basis of the right kernel {x : M x = 0}.
FqMat kernel_basis(const FqMat& m, const Fq& f);

}  // namespace fig
