#include "fig/subspace.hpp"

#include <sstream>

namespace fig {

Subspace::Subspace(const std::vector<std::vector<std::int64_t>>& vectors,
                   std::size_t ambient_dim, const Fq& f)
    : ambient_(ambient_dim) {
  basis_ = FqMat(0, ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) fail(Errc::DimensionMismatch, "span vector length");
    std::vector<std::int64_t> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.reduce(v[i]);
    basis_.append_row(r);
  }
  basis_.rref(f);
  basis_.drop_zero_rows();
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = FqMat(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = FqMat::identity(ambient_dim);
  return s;
}

Subspace Subspace::of_vector(const std::vector<std::int64_t>& v, const Fq& f) {
  return Subspace({v}, v.size(), f);
}

bool Subspace::contains(const std::vector<std::int64_t>& v, const Fq& f) const {
  // Reduce v against the RREF basis and check the residue vanishes.
  std::vector<std::int64_t> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = f.reduce(v[i]);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (c < ambient_ && basis_.at(r, c) == 0) ++c;
    if (c == ambient_) continue;
    std::int64_t k = w[c];
    if (k == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(k, basis_.at(r, j)));
  }
  for (auto x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other, const Fq& f) const {
  if (other.ambient_ != ambient_) fail(Errc::DimensionMismatch, "ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r), f)) return false;
  return true;
}

bool Subspace::incident(const Subspace& other, const Fq& f) const {
  return contains(other, f) || other.contains(*this, f);
}

Subspace Subspace::sum(const Subspace& other, const Fq& f) const {
  if (other.ambient_ != ambient_) fail(Errc::DimensionMismatch, "ambient mismatch");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) rows.push_back(other.basis_.row(r));
  return Subspace(rows, ambient_, f);
}

Subspace Subspace::intersect(const Subspace& other, const Fq& f) const {
  if (other.ambient_ != ambient_) fail(Errc::DimensionMismatch, "ambient mismatch");
  // x in A cap B  <=>  x = y^T A = z^T B; solve [A^T | -B^T] (y,z)^T = 0.
  std::size_t ra = basis_.rows(), rb = other.basis_.rows();
  if (ra == 0 || rb == 0) return Subspace::zero(ambient_);
  FqMat m(ambient_, ra + rb);
  for (std::size_t c = 0; c < ra; ++c)
    for (std::size_t i = 0; i < ambient_; ++i) m.at(i, c) = basis_.at(c, i);
  for (std::size_t c = 0; c < rb; ++c)
    for (std::size_t i = 0; i < ambient_; ++i)
      m.at(i, ra + c) = f.neg(other.basis_.at(c, i));
  FqMat k = kernel_basis(m, f);
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    std::vector<std::int64_t> v(ambient_, 0);
    for (std::size_t c = 0; c < ra; ++c) {
      std::int64_t y = k.at(r, c);
      if (y == 0) continue;
      for (std::size_t i = 0; i < ambient_; ++i)
        v[i] = f.add(v[i], f.mul(y, basis_.at(c, i)));
    }
    rows.push_back(v);
  }
  return Subspace(rows, ambient_, f);
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.data() < o.basis_.data();
}

std::string Subspace::key() const {
  std::ostringstream os;
  os << dim() << ':';
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    if (r) os << ' ';
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (c) os << ',';
      os << basis_.at(r, c);
    }
  }
  return os.str();
}

Subspace Subspace::from_key(const std::string& key, std::size_t ambient_dim, const Fq& f) {
  auto colon = key.find(':');
  if (colon == std::string::npos) fail(Errc::ConfigError, "bad subspace key");
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream is(key.substr(colon + 1));
  std::string rowtok;
  while (is >> rowtok) {
    std::vector<std::int64_t> row;
    std::istringstream rs(rowtok);
    std::string num;
    while (std::getline(rs, num, ',')) row.push_back(std::stoll(num));
    if (row.size() != ambient_dim) fail(Errc::ConfigError, "bad subspace key width");
    rows.push_back(row);
  }
  Subspace s(rows, ambient_dim, f);
  if (s.dim() != static_cast<std::size_t>(std::stoul(key.substr(0, colon))))
    fail(Errc::ConfigError, "subspace key dim mismatch");
  return s;
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient_ * 1315423911u + basis_.rows();
  for (auto v : basis_.data()) h = h * 1000003u + static_cast<std::size_t>(v) + 17;
  return h;
}

std::vector<std::vector<std::int64_t>> projective_points(std::size_t dim, const Fq& f) {
  std::vector<std::vector<std::int64_t>> out;
  std::int64_t q = f.q();
  // Representatives: first nonzero coordinate equals 1.
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::size_t tail = dim - lead - 1;
    std::vector<std::int64_t> v(dim, 0);
    v[lead] = 1;
    std::size_t count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= static_cast<std::size_t>(q);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t x = idx;
      for (std::size_t i = 0; i < tail; ++i) {
        v[dim - 1 - i] = static_cast<std::int64_t>(x % q);
        x /= q;
      }
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> projective_points_in(const Subspace& s, const Fq& f) {
  std::vector<std::vector<std::int64_t>> out;
  auto coeffs = projective_points(s.dim(), f);
  for (const auto& c : coeffs) {
    std::vector<std::int64_t> v(s.ambient_dim(), 0);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      if (c[r] == 0) continue;
      for (std::size_t j = 0; j < s.ambient_dim(); ++j)
        v[j] = f.add(v[j], f.mul(c[r], s.basis().at(r, j)));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace fig
