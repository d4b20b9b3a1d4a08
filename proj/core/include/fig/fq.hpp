#pragma once

#include <cstdint>
#include <vector>

#include "fig/error.hpp"

namespace fig {

/// Prime field F_q of odd order. Elements are least nonnegative residues,
/// carried around as plain int64_t in [0, q); all canonical forms and hash
/// keys in the library depend on that choice of representative.
class Fq {
 public:
  explicit Fq(std::int64_t q);

  std::int64_t q() const { return q_; }

  std::int64_t reduce(std::int64_t a) const {
    std::int64_t r = a % q_;
    return r < 0 ? r + q_ : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % q_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % q_; }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : q_ - a; }

  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  std::int64_t inv(std::int64_t a) const;

  /// Euler criterion. The square class of 0 is undefined for the ±
  /// classification, so 0 is rejected.
  bool is_square(std::int64_t a) const;

  /// Some x with x*x == a, or -1 if a is a nonsquare. sqrt(0) == 0.
  std::int64_t sqrt(std::int64_t a) const;

  /// Least nonsquare (exists for every odd prime q).
  std::int64_t nonsquare() const;

  bool operator==(const Fq& o) const { return q_ == o.q_; }

 private:
  std::int64_t q_;
};

bool is_odd_prime(std::int64_t q);

}  // namespace fig
