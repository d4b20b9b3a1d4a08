#include "fig/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fig {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN) fail(Errc::TooLarge, "integer overflow in SNF");
  return static_cast<std::int64_t>(p);
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  __int128 d = static_cast<__int128>(a) - b;
  if (d > INT64_MAX || d < INT64_MIN) fail(Errc::TooLarge, "integer overflow in SNF");
  return static_cast<std::int64_t>(d);
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(IntMat m) {
  std::vector<std::int64_t> diag;
  std::size_t top = 0;
  while (top < m.rows && top < m.cols) {
    // smallest nonzero pivot by absolute value keeps growth down
    std::size_t pr = m.rows, pc = m.cols;
    std::int64_t best = 0;
    for (std::size_t r = top; r < m.rows; ++r)
      for (std::size_t c = top; c < m.cols; ++c) {
        std::int64_t v = std::llabs(m.at(r, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (best == 0) break;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(top, c), m.at(pr, c));
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, top), m.at(r, pc));

    bool clean = true;
    std::int64_t p = m.at(top, top);
    for (std::size_t r = top + 1; r < m.rows && clean; ++r)
      if (m.at(r, top) % p != 0) clean = false;
    for (std::size_t c = top + 1; c < m.cols && clean; ++c)
      if (m.at(top, c) % p != 0) clean = false;

    // reduce column and row by the pivot
    bool changed = false;
    for (std::size_t r = top + 1; r < m.rows; ++r) {
      std::int64_t q = m.at(r, top) / p;
      if (q == 0) continue;
      changed = true;
      for (std::size_t c = top; c < m.cols; ++c)
        m.at(r, c) = checked_sub(m.at(r, c), checked_mul(q, m.at(top, c)));
    }
    for (std::size_t c = top + 1; c < m.cols; ++c) {
      std::int64_t q = m.at(top, c) / p;
      if (q == 0) continue;
      changed = true;
      for (std::size_t r = top; r < m.rows; ++r)
        m.at(r, c) = checked_sub(m.at(r, c), checked_mul(q, m.at(r, top)));
    }
    if (changed) continue;  // pick a pivot again; remainders may be smaller now

    bool zeroed = true;
    for (std::size_t r = top + 1; r < m.rows; ++r)
      if (m.at(r, top) != 0) zeroed = false;
    for (std::size_t c = top + 1; c < m.cols; ++c)
      if (m.at(top, c) != 0) zeroed = false;
    if (!zeroed) continue;

    if (!clean) {
      // ensure divisibility of the remaining block: fold an offending row in
      bool fixed = false;
      for (std::size_t r = top + 1; r < m.rows && !fixed; ++r)
        for (std::size_t c = top + 1; c < m.cols && !fixed; ++c)
          if (m.at(r, c) % p != 0) {
            for (std::size_t cc = top; cc < m.cols; ++cc)
              m.at(top, cc) = checked_sub(m.at(top, cc), checked_mul(-1, m.at(r, cc)));
            fixed = true;
          }
      if (fixed) continue;
    }
    diag.push_back(std::llabs(p));
    ++top;
  }
  return diag;
}

std::size_t int_rank(const IntMat& m) { return smith_diagonal(m).size(); }

}  // namespace fig
