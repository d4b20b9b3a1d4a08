#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fig/error.hpp"

namespace fig {

/// Permutation of 0..n-1 as an image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n) : img_(n) {
    for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<int>(i);
  }
  explicit Perm(std::vector<int> images);

  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return img_.size(); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm then(const Perm& second) const;  // x -> second(this(x))
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::size_t hash() const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

/// Orbit of a point with a transversal: for each orbit point, a group element
/// mapping the base point there.
struct OrbitData {
  std::vector<int> points;                       // BFS order from the base
  std::unordered_map<int, Perm> transversal;     // point -> u with u(base) = point
};

/// Group of permutations given by generators; orbit/stabilizer/membership
/// services via a deterministic Schreier-Sims stabilizer chain.
class PermGroup {
 public:
  PermGroup() : degree_(0) {}
  explicit PermGroup(std::size_t degree) : degree_(degree) {}
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  static PermGroup symmetric(std::size_t n);
  static PermGroup cyclic_from(const Perm& g);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_trivial_group() const { return gens_.empty(); }

  OrbitData orbit(int x) const;
  std::vector<std::vector<int>> orbits() const;  // partition of 0..degree-1

  /// Stabilizer of x generated by the Schreier generators of the orbit BFS.
  PermGroup stabilizer(int x) const;

  /// Setwise & pointwise stabilizers of a set of points (pointwise uses
  /// iterated Schreier generators).
  PermGroup pointwise_stabilizer(const std::vector<int>& xs) const;

  std::uint64_t order() const;
  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& big) const;
  bool same_group(const PermGroup& other) const;

  /// All elements, BFS over generators; CapExceeded beyond the cap.
  std::vector<Perm> elements(std::size_t cap = 2000000) const;

  /// Same group on a small greedy generating subset (Schreier generator
  /// sets get large; this keeps derived groups workable).
  PermGroup reduced() const;

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;

  struct Chain {
    std::vector<int> base;
    // transversal[i]: orbit map of base[i] under the group generated by
    // level_gens[i].
    std::vector<std::unordered_map<int, Perm>> transversal;
    std::vector<std::vector<Perm>> level_gens;
  };
  mutable std::optional<Chain> chain_;

  void build_chain() const;
  /// Strips g through the chain; returns residue (identity iff member).
  Perm sift(const Perm& g) const;
};

}  // namespace fig
