#pragma once

#include <cstdint>
#include <vector>

#include "fig/error.hpp"

namespace fig {

/// Dense integer matrix for homology boundary maps (entries stay tiny; the
/// elimination guards every product against int64 overflow and raises
/// TooLarge rather than wrapping).
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form.
std::vector<std::int64_t> smith_diagonal(IntMat m);

/// Rank over Q (number of nonzero SNF entries).
std::size_t int_rank(const IntMat& m);

}  // namespace fig
