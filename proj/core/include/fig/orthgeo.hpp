#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fig/pregeo.hpp"
#include "fig/quadform.hpp"

namespace fig {

/// One entry of a hall description: all subspaces of this dimension and sign
/// belong to the restricted geometry.
struct HallEntry {
  std::size_t dim;
  TypeSign sign;
};

/// Which (dimension, sign) classes the geometry keeps. An empty filter for a
/// dimension means the dimension does not occur.
class HallSpec {
 public:
  HallSpec() = default;
  explicit HallSpec(std::vector<HallEntry> entries);

  /// Every proper dimension 1..n, both signs: the unrestricted geometry.
  static HallSpec all(std::size_t n);

  /// The paper's standard hall for ambient dimension >= 5: points of both
  /// signs, minus lines, plus-or-minus planes (configurable), plus 4-spaces,
  /// both signs in dimensions >= 5. For ambient dimension 4: points of both
  /// signs, minus lines, planes of both signs.
  static HallSpec standard(std::size_t n, TypeSign plane_sign = TypeSign::Plus);

  bool allows(std::size_t dim, TypeSign sign) const;
  bool has_dim(std::size_t dim) const;
  std::vector<std::size_t> dims() const;            // sorted, distinct
  std::vector<TypeSign> signs_at(std::size_t dim) const;
  const std::vector<HallEntry>& entries() const { return entries_; }

 private:
  std::vector<HallEntry> entries_;  // sorted by (dim, sign), deduplicated
};

/// The geometry of nondegenerate proper subspaces of (V, f) whose
/// (dimension, sign) matches the hall filter; incidence is symmetrized
/// containment and the type of an element is its dimension. Membership is
/// decided by the class label: Witt extension makes the isometry group
/// transitive on each (dim, sign) class, and for proper subspaces a
/// reflection in the perp fixes the subspace while adjusting the determinant,
/// so the label rule agrees with the SO-orbit rule (cross-checked against
/// explicit orbit enumeration in the tests).
class OrthGeometry {
 public:
  OrthGeometry(BilinearForm form, HallSpec hall);

  /// Unrestricted geometry on all nondegenerate proper subspaces.
  static OrthGeometry full(BilinearForm form);

  const BilinearForm& form() const { return form_; }
  const Fq& field() const { return form_.field(); }
  const HallSpec& hall() const { return hall_; }
  std::size_t n() const { return form_.dim() - 1; }  // geometry rank

  bool contains(const Subspace& s) const;
  bool incident(const Subspace& a, const Subspace& b) const;

  /// Canonical key for certificates and reports.
  static std::string key(const Subspace& s) { return s.key(); }

  /// Streaming enumeration of the elements of one dimension in canonical
  /// order; the visitor returns false to stop early.
  void for_each_element(std::size_t dim, const std::function<bool(const Subspace&)>& visit) const;

  std::vector<Subspace> elements(std::size_t dim) const;

  /// Points (dim 1 elements) on a given line/subspace, canonical order.
  std::vector<Subspace> points_on(const Subspace& s) const;

  bool collinear(const Subspace& p, const Subspace& r) const;

  /// Materializes the pregeometry (types = dimensions). Feasible for small
  /// parameters only; IndexTooLarge when the element count exceeds the cap.
  Pregeometry materialize(std::size_t cap = 2000000,
                          std::vector<Subspace>* elements_out = nullptr) const;

  /// Picks concrete pairwise-incident representatives realizing the hall
  /// (a hall in the pregeometry sense). UnrealizableHall when impossible.
  std::vector<Subspace> realize_hall() const;

 private:
  BilinearForm form_;
  HallSpec hall_;
};

/// Report of a counting verifier: per-instance exact counts plus the bound
/// they were checked against.
struct SweepReport {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::int64_t worst = 0;       // extremal observed value
  bool exhaustive = false;
  bool pass() const { return violations == 0; }
};

/// For point a and line l of the geometry with a not on l: at most two
/// points of the geometry on l are not collinear to a. Exhaustive or
/// seeded-sample sweep over valid (a, l) pairs.
SweepReport verify_pointline(const OrthGeometry& g, bool exhaustive, std::size_t samples,
                             std::uint64_t seed);

/// For p a point, l an elliptic line with <p,l> nondegenerate: at least
/// (q-1)/2 elliptic lines through p meet l in a point of the geometry; for m
/// hyperbolic with <p,m> nondegenerate: at least (q-5)/2 hyperbolic lines.
struct LineCountReport {
  SweepReport elliptic;
  SweepReport hyperbolic;
  bool pass() const { return elliptic.pass() && hyperbolic.pass(); }
};
LineCountReport verify_elliptic_line_counts(const OrthGeometry& g, std::size_t samples,
                                            std::uint64_t seed);

/// BFS diameter of the collinearity graph of the materialized geometry;
/// DisconnectedGraph if infinite.
int verify_diameter(const OrthGeometry& g, std::size_t cap = 2000000);

}  // namespace fig
