#pragma once

#include "fig/perm.hpp"
#include "fig/quadform.hpp"

namespace fig {

/// Group of invertible matrices over F_q given by generators, together with
/// its faithful permutation shadow: the action on the q^d - 1 nonzero
/// vectors of F_q^d. (The action on projective points is not faithful when
/// -I belongs to the group, e.g. for SO_4, so vectors are used instead.)
class MatGroup {
 public:
  MatGroup(std::vector<FqMat> gens, const Fq& f);

  const Fq& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FqMat>& generators() const { return gens_; }

  /// Index of a nonzero vector in the shadow domain (base-q digits).
  std::size_t vector_index(const std::vector<std::int64_t>& v) const;
  std::vector<std::int64_t> vector_at(std::size_t idx) const;

  Perm shadow_of(const FqMat& m) const;
  const PermGroup& shadow() const;

  std::uint64_t order() const { return shadow().order(); }
  bool contains(const FqMat& m) const { return shadow().contains(shadow_of(m)); }

  Subspace apply(const FqMat& m, const Subspace& s) const;

 private:
  Fq f_;
  std::size_t dim_;
  std::vector<FqMat> gens_;
  mutable std::optional<PermGroup> shadow_;
};

/// Reflection in a nondegenerate vector v: x -> x - 2 (x,v)/(v,v) v.
FqMat reflection(const BilinearForm& form, const std::vector<std::int64_t>& v);

/// Deterministic bireflection generators of SO(f) = SO_dim(F_q, f): products
/// r_{v0} r_{v} with v0 the first nondegenerate canonical vector and v
/// running over the next ones, extended until the known group order
///   |SO_{2k+1}(q)| = q^{k^2} prod_{i<=k} (q^{2i}-1)
///   |SO_{2k}^e(q)| = q^{k(k-1)} (q^k - e) prod_{i<k} (q^{2i}-1)
/// is reached (verified via the shadow's Schreier-Sims order).
MatGroup special_orthogonal_group(const BilinearForm& form);

/// The order the formula predicts for SO(f).
std::uint64_t so_order(const BilinearForm& form);

/// An isometry of (V, f) with determinant 1 mapping flag src onto flag dst
/// elementwise (src and dst nested ascending, entries nondegenerate, matching
/// dimensions and signs). Constructive Witt extension; TransporterNotFound if
/// the label vectors differ.
FqMat so_transporter(const BilinearForm& form, const std::vector<Subspace>& src,
                     const std::vector<Subspace>& dst);

}  // namespace fig
