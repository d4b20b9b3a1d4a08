#pragma once

#include <optional>

#include "fig/subspace.hpp"

namespace fig {

enum class TypeSign { Plus, Minus };

inline TypeSign flip(TypeSign s) { return s == TypeSign::Plus ? TypeSign::Minus : TypeSign::Plus; }
inline char sign_char(TypeSign s) { return s == TypeSign::Plus ? '+' : '-'; }

enum class LineClass { Hyperbolic, Elliptic };

/// Nondegenerate symmetric bilinear form on F_q^dim, q odd, dim >= 2.
class BilinearForm {
 public:
  BilinearForm(const FqMat& gram, const Fq& f);

  /// The fixed representative of the plus/minus isometry class used by the
  /// "plus"/"minus" config shorthand: diag(1,...,1) if that matrix already
  /// has the requested sign, else diag(1,...,1,n) with n the least nonsquare.
  static BilinearForm standard(std::size_t dim, TypeSign sign, const Fq& f);

  const Fq& field() const { return f_; }
  const FqMat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }

  std::int64_t eval(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) const;
  std::int64_t norm(const std::vector<std::int64_t>& v) const { return eval(v, v); }
  bool isotropic(const std::vector<std::int64_t>& v) const { return norm(v) == 0; }

  /// Gram matrix of the form restricted to the subspace's canonical basis.
  FqMat restrict_gram(const Subspace& s) const;

  Subspace perp(const Subspace& s) const;
  Subspace radical(const Subspace& s) const;  // s cap perp(s)
  bool nondegenerate(const Subspace& s) const;

  TypeSign sign() const { return classify(Subspace::full(dim())); }

 private:
  Fq f_;
  FqMat gram_;

 public:
  /// Plus/minus class of a nondegenerate subspace, decided by the
  /// discriminant: with D the determinant of the restricted Gram matrix,
  /// d the dimension and e = floor(d/2), the subspace is of plus type iff
  ///   is_square(D * (-1)^e)  ==  (d even or q = 1 mod 4).
  /// For d even this is the Witt-index characterization; for d odd and
  /// q = 1 mod 4 it reduces to "square values <=> plus".
  TypeSign classify(const Subspace& s) const;

  /// Hyperbolic iff the line carries a nonzero isotropic vector; agrees with
  /// classify() == Plus on nondegenerate 2-spaces.
  LineClass line_class(const Subspace& line) const;

  bool is_elliptic_line(const Subspace& s) const {
    return s.dim() == 2 && nondegenerate(s) && line_class(s) == LineClass::Elliptic;
  }
};

/// Sign of an orthogonal direct sum from the signs and dimensions of the
/// summands; pure table lookup keyed on q mod 4 and the dimension parities.
TypeSign compose_types(TypeSign s1, std::size_t d1, TypeSign s2, std::size_t d2, std::int64_t q);

}  // namespace fig
