#include "fig/orthgeo.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fig {
namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Visits every r-dimensional subspace of F_q^c exactly once, as its
/// canonical RREF matrix, ordered by pivot-column choice then filling.
void for_each_rref(std::size_t r, std::size_t c, const Fq& f,
                   const std::function<bool(const FqMat&)>& visit) {
  if (r == 0 || r > c) {
    if (r == 0) visit(FqMat(0, c));
    return;
  }
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = i;
  std::int64_t q = f.q();
  while (true) {
    std::vector<bool> is_piv(c, false);
    for (auto p : piv) is_piv[p] = true;
    // Free positions: row i, non-pivot column j > piv[i].
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = piv[i] + 1; j < c; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    FqMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) m.at(i, piv[i]) = 1;
    std::vector<std::int64_t> fill(free_pos.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        m.at(free_pos[k].first, free_pos[k].second) = fill[k];
      if (!visit(m)) return;
      std::size_t k = 0;
      while (k < fill.size() && fill[k] == q - 1) fill[k++] = 0;
      if (k == fill.size()) break;
      ++fill[k];
    }
    // next pivot combination (lexicographic)
    std::size_t i = r;
    while (i-- > 0) {
      if (piv[i] + 1 <= c - (r - i)) {
        ++piv[i];
        for (std::size_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

Subspace subspace_from_rref(const FqMat& m, const Fq& f) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return Subspace(rows, m.cols(), f);
}

}  // namespace

HallSpec::HallSpec(std::vector<HallEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const HallEntry& a, const HallEntry& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return static_cast<int>(a.sign) < static_cast<int>(b.sign);
  });
  entries_.erase(std::unique(entries_.begin(), entries_.end(),
                             [](const HallEntry& a, const HallEntry& b) {
                               return a.dim == b.dim && a.sign == b.sign;
                             }),
                 entries_.end());
}

HallSpec HallSpec::all(std::size_t n) {
  std::vector<HallEntry> e;
  for (std::size_t d = 1; d <= n; ++d) {
    e.push_back({d, TypeSign::Plus});
    e.push_back({d, TypeSign::Minus});
  }
  return HallSpec(e);
}

HallSpec HallSpec::standard(std::size_t n, TypeSign plane_sign) {
  std::vector<HallEntry> e;
  e.push_back({1, TypeSign::Plus});
  e.push_back({1, TypeSign::Minus});
  e.push_back({2, TypeSign::Minus});
  if (n == 3) {
    e.push_back({3, TypeSign::Plus});
    e.push_back({3, TypeSign::Minus});
  } else if (n >= 4) {
    e.push_back({3, plane_sign});
    e.push_back({4, TypeSign::Plus});
    for (std::size_t d = 5; d <= n; ++d) {
      e.push_back({d, TypeSign::Plus});
      e.push_back({d, TypeSign::Minus});
    }
  } else {
    fail(Errc::AmbientTooSmall, "standard hall needs n >= 3");
  }
  return HallSpec(e);
}

bool HallSpec::allows(std::size_t dim, TypeSign sign) const {
  for (const auto& e : entries_)
    if (e.dim == dim && e.sign == sign) return true;
  return false;
}

bool HallSpec::has_dim(std::size_t dim) const {
  for (const auto& e : entries_)
    if (e.dim == dim) return true;
  return false;
}

std::vector<std::size_t> HallSpec::dims() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries_)
    if (out.empty() || out.back() != e.dim) out.push_back(e.dim);
  return out;
}

std::vector<TypeSign> HallSpec::signs_at(std::size_t dim) const {
  std::vector<TypeSign> out;
  for (const auto& e : entries_)
    if (e.dim == dim) out.push_back(e.sign);
  return out;
}

OrthGeometry::OrthGeometry(BilinearForm form, HallSpec hall)
    : form_(std::move(form)), hall_(std::move(hall)) {
  if (form_.dim() < 2) fail(Errc::AmbientTooSmall, "need ambient dimension >= 2");
  for (const auto& e : hall_.entries())
    if (e.dim == 0 || e.dim > n()) fail(Errc::ConfigError, "hall dimension out of range");
}

OrthGeometry OrthGeometry::full(BilinearForm form) {
  std::size_t n = form.dim() - 1;
  return OrthGeometry(std::move(form), HallSpec::all(n));
}

bool OrthGeometry::contains(const Subspace& s) const {
  if (s.ambient_dim() != form_.dim()) return false;
  std::size_t d = s.dim();
  if (d == 0 || d > n()) return false;
  if (!hall_.has_dim(d)) return false;
  if (!form_.nondegenerate(s)) return false;
  return hall_.allows(d, form_.classify(s));
}

bool OrthGeometry::incident(const Subspace& a, const Subspace& b) const {
  return a.incident(b, field());
}

void OrthGeometry::for_each_element(std::size_t dim,
                                    const std::function<bool(const Subspace&)>& visit) const {
  if (!hall_.has_dim(dim)) return;
  for_each_rref(dim, form_.dim(), field(), [&](const FqMat& m) {
    Subspace s = subspace_from_rref(m, field());
    if (contains(s)) return visit(s);
    return true;
  });
}

std::vector<Subspace> OrthGeometry::elements(std::size_t dim) const {
  std::vector<Subspace> out;
  for_each_element(dim, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subspace> OrthGeometry::points_on(const Subspace& s) const {
  std::vector<Subspace> out;
  for (const auto& v : projective_points_in(s, field())) {
    Subspace p = Subspace::of_vector(v, field());
    if (contains(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool OrthGeometry::collinear(const Subspace& p, const Subspace& r) const {
  if (p == r) return false;
  Subspace line = p.sum(r, field());
  if (line.dim() != 2) return false;
  return contains(line);
}

Pregeometry OrthGeometry::materialize(std::size_t cap,
                                      std::vector<Subspace>* elements_out) const {
  Pregeometry g;
  std::vector<Subspace> elems;
  for (std::size_t d : hall_.dims()) {
    for_each_element(d, [&](const Subspace& s) {
      if (elems.size() >= cap) fail(Errc::IndexTooLarge, "materialize cap exceeded");
      elems.push_back(s);
      g.add_element(static_cast<int>(d), s.key());
      return true;
    });
    if (elems.size() >= cap) fail(Errc::IndexTooLarge, "materialize cap exceeded");
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i].dim() == elems[j].dim()) continue;
      if (elems[i].incident(elems[j], field()))
        g.add_incidence(static_cast<int>(i), static_cast<int>(j));
    }
  if (elements_out) *elements_out = elems;
  return g;
}

std::vector<Subspace> OrthGeometry::realize_hall() const {
  struct Slot {
    std::size_t dim;
    TypeSign sign;
  };
  std::vector<Slot> slots;
  for (const auto& e : hall_.entries()) slots.push_back({e.dim, e.sign});
  // entries() is already sorted by dim.
  std::vector<Subspace> chosen;
  const Fq& f = field();

  // Candidates of dimension d containing base, depth-first point extension.
  std::function<void(const Subspace&, std::size_t, TypeSign, std::vector<Subspace>&, std::size_t)>
      extend = [&](const Subspace& base, std::size_t d, TypeSign sign,
                   std::vector<Subspace>& out, std::size_t pool_cap) {
        if (out.size() >= pool_cap) return;
        if (base.dim() == d) {
          if (form_.nondegenerate(base) && form_.classify(base) == sign) out.push_back(base);
          return;
        }
        for (const auto& v : projective_points(form_.dim(), f)) {
          if (out.size() >= pool_cap) return;
          if (base.contains(v, f)) continue;
          Subspace bigger = base.sum(Subspace::of_vector(v, f), f);
          extend(bigger, d, sign, out, pool_cap);
        }
      };

  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == slots.size()) return true;
    Subspace join = Subspace::zero(form_.dim());
    for (const auto& c : chosen) join = join.sum(c, f);
    if (join.dim() > slots[k].dim) return false;
    std::vector<Subspace> pool;
    extend(join, slots[k].dim, slots[k].sign, pool, 64);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (const auto& cand : pool) {
      chosen.push_back(cand);
      if (dfs(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0)) fail(Errc::UnrealizableHall, "no pairwise-incident representatives exist");
  return chosen;
}

SweepReport verify_pointline(const OrthGeometry& g, bool exhaustive, std::size_t samples,
                             std::uint64_t seed) {
  SweepReport rep;
  rep.exhaustive = exhaustive;
  const Fq& f = g.field();

  auto check_pair = [&](const Subspace& a, const Subspace& l) {
    auto pts = g.points_on(l);
    std::int64_t bad = 0;
    for (const auto& x : pts)
      if (!g.collinear(a, x)) ++bad;
    ++rep.instances;
    rep.worst = std::max(rep.worst, bad);
    if (bad > 2) ++rep.violations;
  };

  if (exhaustive) {
    auto points = g.elements(1);
    g.for_each_element(2, [&](const Subspace& l) {
      for (const auto& a : points)
        if (!l.contains(a, f)) check_pair(a, l);
      return true;
    });
  } else {
    auto points = g.elements(1);
    auto lines = g.elements(2);
    if (points.empty() || lines.empty()) return rep;
    std::uint64_t st = seed;
    std::size_t done = 0, guard = 0;
    while (done < samples && guard < samples * 100) {
      ++guard;
      const Subspace& a = points[splitmix64(st) % points.size()];
      const Subspace& l = lines[splitmix64(st) % lines.size()];
      if (l.contains(a, f)) continue;
      check_pair(a, l);
      ++done;
    }
  }
  return rep;
}

LineCountReport verify_elliptic_line_counts(const OrthGeometry& g, std::size_t samples,
                                            std::uint64_t seed) {
  LineCountReport rep;
  const Fq& f = g.field();
  const BilinearForm& form = g.form();
  std::int64_t q = f.q();
  std::uint64_t st = seed;

  auto random_vector = [&](void) {
    std::vector<std::int64_t> v(form.dim());
    bool nz = false;
    for (auto& x : v) {
      x = static_cast<std::int64_t>(splitmix64(st) % q);
      nz = nz || x != 0;
    }
    if (!nz) v[0] = 1;
    return v;
  };

  // One instance per line class; p a nondegenerate point, the line of the
  // requested class with <p, line> a nondegenerate plane.
  auto run = [&](LineClass cls, SweepReport& out, std::int64_t bound) {
    out.exhaustive = false;
    out.worst = q + 2;
    std::size_t guard = 0;
    while (out.instances < samples && guard < samples * 1000) {
      ++guard;
      auto pv = random_vector();
      if (form.norm(pv) == 0) continue;
      Subspace p = Subspace::of_vector(pv, f);
      Subspace line({random_vector(), random_vector()}, form.dim(), f);
      if (line.dim() != 2 || !form.nondegenerate(line)) continue;
      if (form.line_class(line) != cls) continue;
      if (line.contains(pv, f)) continue;
      Subspace plane = p.sum(line, f);
      if (plane.dim() != 3 || !form.nondegenerate(plane)) continue;
      std::int64_t count = 0;
      for (const auto& xv : projective_points_in(line, f)) {
        if (form.norm(xv) == 0) continue;
        Subspace through = p.sum(Subspace::of_vector(xv, f), f);
        if (!form.nondegenerate(through)) continue;
        if (form.line_class(through) == cls) ++count;
      }
      ++out.instances;
      out.worst = std::min(out.worst, count);
      if (count < bound) ++out.violations;
    }
  };

  run(LineClass::Elliptic, rep.elliptic, (q - 1) / 2);
  run(LineClass::Hyperbolic, rep.hyperbolic, (q - 5) / 2);
  return rep;
}

int verify_diameter(const OrthGeometry& g, std::size_t cap) {
  Pregeometry m = g.materialize(cap);
  auto diagram = m.basic_diagram();
  // Collinearity needs type 1 to have 2 as its only diagram neighbor.
  for (std::size_t i = 0; i < diagram.types.size(); ++i) {
    if (diagram.types[i] != 1) continue;
    for (int nb : diagram.graph.adj[i])
      if (diagram.types[nb] != 2)
        fail(Errc::DiagramPreconditionFailed, "type 1 has a non-line diagram neighbor");
  }
  Graph coll = m.collinearity_graph(1, 2);
  int d = coll.diameter();
  if (d < 0) fail(Errc::DisconnectedGraph, "collinearity graph disconnected");
  return d;
}

}  // namespace fig
