#include "fig/quadform.hpp"

namespace fig {

BilinearForm::BilinearForm(const FqMat& gram, const Fq& f) : f_(f), gram_(gram) {
  if (gram.rows() != gram.cols()) fail(Errc::DimensionMismatch, "Gram matrix not square");
  if (gram.rows() < 2) fail(Errc::AmbientTooSmall, "form dimension < 2");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram.at(i, j) != gram.at(j, i)) fail(Errc::DomainError, "Gram matrix not symmetric");
  if (gram_.det(f_) == 0) fail(Errc::DegenerateSubspace, "ambient form is degenerate");
}

BilinearForm BilinearForm::standard(std::size_t dim, TypeSign sign, const Fq& f) {
  FqMat g = FqMat::identity(dim);
  BilinearForm b(g, f);
  if (b.sign() == sign) return b;
  g.at(dim - 1, dim - 1) = f.nonsquare();
  return BilinearForm(g, f);
}

std::int64_t BilinearForm::eval(const std::vector<std::int64_t>& u,
                                const std::vector<std::int64_t>& v) const {
  if (u.size() != dim() || v.size() != dim()) fail(Errc::DimensionMismatch, "form eval");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < dim(); ++j) row = f_.add(row, f_.mul(gram_.at(i, j), v[j]));
    s = f_.add(s, f_.mul(u[i], row));
  }
  return s;
}

FqMat BilinearForm::restrict_gram(const Subspace& s) const {
  FqMat bg = s.basis().mul(gram_, f_);
  return bg.mul(s.basis().transposed(), f_);
}

Subspace BilinearForm::perp(const Subspace& s) const {
  if (s.ambient_dim() != dim()) fail(Errc::DimensionMismatch, "perp ambient");
  if (s.dim() == 0) return Subspace::full(dim());
  FqMat bg = s.basis().mul(gram_, f_);
  FqMat k = kernel_basis(bg, f_);
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
  return Subspace(rows, dim(), f_);
}

Subspace BilinearForm::radical(const Subspace& s) const { return s.intersect(perp(s), f_); }

bool BilinearForm::nondegenerate(const Subspace& s) const {
  if (s.dim() == 0) return true;
  return restrict_gram(s).det(f_) != 0;
}

TypeSign BilinearForm::classify(const Subspace& s) const {
  if (s.dim() == 0) fail(Errc::DegenerateSubspace, "zero subspace has no sign");
  std::int64_t d = restrict_gram(s).det(f_);
  if (d == 0) fail(Errc::DegenerateSubspace, "classify on degenerate subspace");
  std::size_t e = s.dim() / 2;
  if (e % 2 == 1) d = f_.mul(d, f_.neg(1));  // D * (-1)^e
  bool s_bit = f_.is_square(d);
  bool plus_means_square = (s.dim() % 2 == 0) || (f_.q() % 4 == 1);
  return (s_bit == plus_means_square) ? TypeSign::Plus : TypeSign::Minus;
}

LineClass BilinearForm::line_class(const Subspace& line) const {
  if (line.dim() != 2) fail(Errc::DimensionMismatch, "line_class on non-line");
  FqMat g = restrict_gram(line);
  std::int64_t det = f_.sub(f_.mul(g.at(0, 0), g.at(1, 1)), f_.mul(g.at(0, 1), g.at(1, 0)));
  if (det == 0) fail(Errc::DegenerateSubspace, "line_class on degenerate line");
  // a x^2 + 2b xy + c y^2 has a nontrivial zero iff b^2 - ac is a square.
  return f_.is_square(f_.neg(det)) ? LineClass::Hyperbolic : LineClass::Elliptic;
}

TypeSign compose_types(TypeSign s1, std::size_t d1, TypeSign s2, std::size_t d2,
                       std::int64_t q) {
  bool both_odd = (d1 % 2 == 1) && (d2 % 2 == 1);
  TypeSign same_rule = (s1 == s2) ? TypeSign::Plus : TypeSign::Minus;
  if (q % 4 == 1 || !both_odd) return same_rule;
  return flip(same_rule);
}

}  // namespace fig
