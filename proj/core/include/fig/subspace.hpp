#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fig/fqmat.hpp"

namespace fig {

/// Subspace of F_q^n in canonical form: the basis matrix is the unique RREF
/// with independent rows and least-nonnegative-residue entries. Two Subspace
/// values describe the same subspace iff they compare equal, which makes
/// Subspace directly usable as a hash/map key (graphs, orbits, coset tables).
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  /// Canonicalizes the span of the given vectors.
  Subspace(const std::vector<std::vector<std::int64_t>>& vectors, std::size_t ambient_dim,
           const Fq& f);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace of_vector(const std::vector<std::int64_t>& v, const Fq& f);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  const FqMat& basis() const { return basis_; }
  std::vector<std::int64_t> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<std::int64_t>& v, const Fq& f) const;
  bool contains(const Subspace& other, const Fq& f) const;

  /// Symmetrized containment; the incidence relation of the orthogonal
  /// geometries (reflexive by construction).
  bool incident(const Subspace& other, const Fq& f) const;

  Subspace sum(const Subspace& other, const Fq& f) const;
  Subspace intersect(const Subspace& other, const Fq& f) const;

  /// Stable total order / equality on the canonical matrix.
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator<(const Subspace& o) const;

  /// "d:r1 r2 ..." with rows base-q encoded; parseable and strictly ordered.
  std::string key() const;
  static Subspace from_key(const std::string& key, std::size_t ambient_dim, const Fq& f);

  std::size_t hash() const;

 private:
  std::size_t ambient_;
  FqMat basis_;  // canonical RREF, no zero rows
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Spans of single vectors, one per projective point, in canonical order
/// (first nonzero coordinate scaled to 1, remaining coordinates counted up).
std::vector<std::vector<std::int64_t>> projective_points(std::size_t dim, const Fq& f);

/// As above but restricted to vectors inside the given subspace (coordinates
/// are combinations of its basis rows).
std::vector<std::vector<std::int64_t>> projective_points_in(const Subspace& s, const Fq& f);

}  // namespace fig
