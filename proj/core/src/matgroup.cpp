#include "fig/matgroup.hpp"

#include <algorithm>

namespace fig {

MatGroup::MatGroup(std::vector<FqMat> gens, const Fq& f) : f_(f) {
  if (gens.empty()) fail(Errc::DomainError, "matrix group needs generators");
  dim_ = gens[0].rows();
  for (const auto& g : gens) {
    if (g.rows() != dim_ || g.cols() != dim_) fail(Errc::DimensionMismatch, "generator shape");
    if (g.det(f_) == 0) fail(Errc::DomainError, "singular generator");
  }
  gens_ = std::move(gens);
}

std::size_t MatGroup::vector_index(const std::vector<std::int64_t>& v) const {
  std::size_t idx = 0;
  for (std::size_t i = dim_; i-- > 0;) idx = idx * static_cast<std::size_t>(f_.q()) + v[i];
  return idx - 1;  // skip the zero vector
}

std::vector<std::int64_t> MatGroup::vector_at(std::size_t idx) const {
  std::size_t x = idx + 1;
  std::vector<std::int64_t> v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = static_cast<std::int64_t>(x % f_.q());
    x /= f_.q();
  }
  return v;
}

Perm MatGroup::shadow_of(const FqMat& m) const {
  std::size_t deg = 1;
  for (std::size_t i = 0; i < dim_; ++i) deg *= static_cast<std::size_t>(f_.q());
  deg -= 1;
  std::vector<int> img(deg);
  for (std::size_t idx = 0; idx < deg; ++idx) {
    auto v = vector_at(idx);
    auto w = m.mul_vec(v, f_);
    img[idx] = static_cast<int>(vector_index(w));
  }
  return Perm(img);
}

const PermGroup& MatGroup::shadow() const {
  if (!shadow_) {
    std::size_t deg = 1;
    for (std::size_t i = 0; i < dim_; ++i) deg *= static_cast<std::size_t>(f_.q());
    deg -= 1;
    if (deg > 20000)
      fail(Errc::TooLarge, "vector shadow of degree " + std::to_string(deg) +
                               " exceeds the enumeration range");
    std::vector<Perm> sg;
    for (const auto& g : gens_) sg.push_back(shadow_of(g));
    shadow_ = PermGroup(deg, std::move(sg));
  }
  return *shadow_;
}

Subspace MatGroup::apply(const FqMat& m, const Subspace& s) const {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < s.dim(); ++r)
    rows.push_back(m.mul_vec(s.basis_vector(r), f_));
  return Subspace(rows, dim_, f_);
}

FqMat reflection(const BilinearForm& form, const std::vector<std::int64_t>& v) {
  const Fq& f = form.field();
  std::int64_t nv = form.norm(v);
  if (nv == 0) fail(Errc::DegenerateSubspace, "reflection in an isotropic vector");
  std::size_t d = form.dim();
  // R = I - (2/(v,v)) v (v^T G)
  std::int64_t c = f.mul(2 % f.q(), f.inv(nv));
  std::vector<std::int64_t> vg(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d; ++i) s = f.add(s, f.mul(v[i], form.gram().at(i, j)));
    vg[j] = s;
  }
  FqMat r = FqMat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      r.at(i, j) = f.sub(r.at(i, j), f.mul(c, f.mul(v[i], vg[j])));
  return r;
}

std::uint64_t so_order(const BilinearForm& form) {
  std::uint64_t q = static_cast<std::uint64_t>(form.field().q());
  std::size_t d = form.dim();
  auto qpow = [&](std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
  };
  if (d % 2 == 1) {
    std::size_t k = d / 2;
    std::uint64_t o = qpow(k * k);
    for (std::size_t i = 1; i <= k; ++i) o *= qpow(2 * i) - 1;
    return o;
  }
  std::size_t k = d / 2;
  std::int64_t eps = form.sign() == TypeSign::Plus ? 1 : -1;
  std::uint64_t o = qpow(k * (k - 1));
  o *= static_cast<std::uint64_t>(static_cast<std::int64_t>(qpow(k)) - eps);
  for (std::size_t i = 1; i + 1 <= k; ++i) o *= qpow(2 * i) - 1;
  return o;
}

MatGroup special_orthogonal_group(const BilinearForm& form) {
  const Fq& f = form.field();
  auto pts = projective_points(form.dim(), f);
  std::vector<std::vector<std::int64_t>> nondeg;
  for (const auto& v : pts)
    if (form.norm(v) != 0) nondeg.push_back(v);
  if (nondeg.size() < 2) fail(Errc::DomainError, "not enough nondegenerate vectors");

  FqMat r0 = reflection(form, nondeg[0]);
  std::uint64_t target = so_order(form);

  std::size_t deg = 1;
  for (std::size_t i = 0; i < form.dim(); ++i) deg *= static_cast<std::size_t>(f.q());
  deg -= 1;
  bool verify = deg <= 20000;

  // Grow the bireflection set until the verified order matches the classical
  // formula (small shadows), or take a fixed prefix when the shadow is out of
  // enumeration range; at that scale the group is only used through directly
  // constructed isometries, never through word enumeration.
  for (std::size_t count = 8; count <= nondeg.size() + 8; count *= 2) {
    std::vector<FqMat> gens;
    for (std::size_t i = 1; i < nondeg.size() && gens.size() < count; ++i)
      gens.push_back(r0.mul(reflection(form, nondeg[i]), f));
    MatGroup cand(gens, f);
    if (!verify) return cand;
    if (cand.order() == target) return cand;
    if (gens.size() < count) break;  // pool exhausted and still short
  }
  fail(Errc::DomainError, "bireflections did not reach the expected SO order");
}

namespace {

/// Orthogonal basis of a nondegenerate subspace: pairwise orthogonal vectors
/// of nonzero norm.
std::vector<std::vector<std::int64_t>> orthogonal_basis(const BilinearForm& form,
                                                        const Subspace& s) {
  const Fq& f = form.field();
  std::vector<std::vector<std::int64_t>> out;
  Subspace cur = s;
  while (cur.dim() > 0) {
    std::vector<std::int64_t> pick;
    for (const auto& v : projective_points_in(cur, f))
      if (form.norm(v) != 0) { pick = v; break; }
    if (pick.empty()) fail(Errc::DegenerateSubspace, "no anisotropic vector found");
    out.push_back(pick);
    Subspace vperp = form.perp(Subspace::of_vector(pick, f));
    cur = cur.intersect(vperp, f);
  }
  return out;
}

/// Rescales and pairs an orthogonal basis into the canonical value pattern
/// (1, ..., 1, delta) with delta in {1, nonsquare}.
std::vector<std::vector<std::int64_t>> normalize_basis(
    const BilinearForm& form, std::vector<std::vector<std::int64_t>> basis) {
  const Fq& f = form.field();
  std::int64_t nu = f.nonsquare();
  for (auto& v : basis) {
    std::int64_t a = form.norm(v);
    std::int64_t s = f.is_square(a) ? f.inv(f.sqrt(a)) : f.inv(f.sqrt(f.mul(a, f.inv(nu))));
    for (auto& x : v) x = f.mul(x, s);
  }
  while (true) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!f.is_square(form.norm(basis[i]))) bad.push_back(i);
    if (bad.size() < 2) {
      if (bad.size() == 1 && bad[0] != basis.size() - 1)
        std::swap(basis[bad[0]], basis[basis.size() - 1]);
      return basis;
    }
    auto& u = basis[bad[0]];
    auto& w = basis[bad[1]];
    // Binary nondegenerate forms over F_q represent every nonzero value, so
    // some xu + yw has norm 1; its complement in <u,w> then scales to 1 too.
    bool found = false;
    for (std::int64_t x = 0; x < f.q() && !found; ++x)
      for (std::int64_t y = 0; y < f.q() && !found; ++y) {
        if (x == 0 && y == 0) continue;
        std::vector<std::int64_t> cand(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
          cand[i] = f.add(f.mul(x, u[i]), f.mul(y, w[i]));
        if (form.norm(cand) != 1) continue;
        Subspace plane({u, w}, u.size(), f);
        Subspace comp = plane.intersect(form.perp(Subspace::of_vector(cand, f)), f);
        if (comp.dim() != 1) continue;
        auto wnew = comp.basis_vector(0);
        std::int64_t b = form.norm(wnew);
        if (b == 0 || !f.is_square(b)) continue;
        auto s = f.inv(f.sqrt(b));
        for (auto& t : wnew) t = f.mul(t, s);
        u = cand;
        w = wnew;
        found = true;
      }
    if (!found) fail(Errc::DomainError, "pair normalization failed");
  }
}

}  // namespace

FqMat so_transporter(const BilinearForm& form, const std::vector<Subspace>& src,
                     const std::vector<Subspace>& dst) {
  const Fq& f = form.field();
  std::size_t d = form.dim();
  if (src.size() != dst.size() || src.empty())
    fail(Errc::TransporterNotFound, "flag size mismatch");
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i].dim() != dst[i].dim()) fail(Errc::TransporterNotFound, "dimension mismatch");
    if (i > 0 && (!src[i].contains(src[i - 1], f) || !dst[i].contains(dst[i - 1], f)))
      fail(Errc::TransporterNotFound, "flags not nested");
    if (!form.nondegenerate(src[i]) || !form.nondegenerate(dst[i]))
      fail(Errc::TransporterNotFound, "degenerate flag member");
    if (form.classify(src[i]) != form.classify(dst[i]))
      fail(Errc::TransporterNotFound, "sign mismatch");
  }
  if (src.back().dim() >= d)
    fail(Errc::TransporterNotFound, "flag must consist of proper subspaces");

  // Orthogonal decomposition pieces: A1, A2 cap A1-perp, ..., V cap Ak-perp.
  auto pieces = [&](const std::vector<Subspace>& flag) {
    std::vector<Subspace> out;
    Subspace prev = Subspace::zero(d);
    for (const auto& a : flag) {
      Subspace piece = (prev.dim() == 0) ? a : a.intersect(form.perp(prev), f);
      out.push_back(piece);
      prev = a;
    }
    out.push_back(form.perp(prev));
    return out;
  };

  auto ps = pieces(src), pd = pieces(dst);
  std::vector<std::vector<std::int64_t>> ubasis, wbasis;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto bu = normalize_basis(form, orthogonal_basis(form, ps[i]));
    auto bw = normalize_basis(form, orthogonal_basis(form, pd[i]));
    if (bu.size() != bw.size()) fail(Errc::TransporterNotFound, "piece dimension mismatch");
    for (std::size_t k = 0; k < bu.size(); ++k) {
      if (form.norm(bu[k]) != form.norm(bw[k]))
        fail(Errc::TransporterNotFound, "piece normal forms differ");
      ubasis.push_back(bu[k]);
      wbasis.push_back(bw[k]);
    }
  }
  // M maps ubasis[j] -> wbasis[j]: M = W U^{-1} with the vectors as columns.
  FqMat u(d, d), w(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      u.at(i, j) = ubasis[j][i];
      w.at(i, j) = wbasis[j][i];
    }
  FqMat m = w.mul(u.inverse(f), f);
  if (m.det(f) != 1) {
    // Reflect in a nondegenerate vector of the top member's perp; that fixes
    // every dst flag member pointwise.
    Subspace top_perp = form.perp(dst.back());
    std::vector<std::int64_t> v;
    for (const auto& cand : projective_points_in(top_perp, f))
      if (form.norm(cand) != 0) { v = cand; break; }
    if (v.empty()) fail(Errc::TransporterNotFound, "no determinant fix available");
    m = reflection(form, v).mul(m, f);
  }
  return m;
}

}  // namespace fig
