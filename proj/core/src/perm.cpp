#include "fig/perm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>

namespace fig {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[x])
      fail(Errc::DomainError, "not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(img);
}

Perm Perm::then(const Perm& second) const {
  if (degree() != second.degree()) fail(Errc::DomainError, "degree mismatch");
  std::vector<int> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[i] = second.img_[img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[img_[i]] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::size_t Perm::hash() const {
  std::size_t h = 146527 + degree();
  for (int x : img_) h = h * 1000003u + static_cast<std::size_t>(x) + 11;
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : degree_(degree) {
  for (auto& g : gens) {
    if (g.degree() != degree) fail(Errc::DomainError, "generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<int> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<int>(i);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, gens);
}

PermGroup PermGroup::cyclic_from(const Perm& g) { return PermGroup(g.degree(), {g}); }

OrbitData PermGroup::orbit(int x) const {
  OrbitData out;
  out.points.push_back(x);
  out.transversal.emplace(x, Perm(degree_));
  std::deque<int> work{x};
  while (!work.empty()) {
    int p = work.front();
    work.pop_front();
    const Perm up = out.transversal.at(p);
    for (const auto& g : gens_) {
      int q = g(p);
      if (!out.transversal.count(q)) {
        out.transversal.emplace(q, up.then(g));
        out.points.push_back(q);
        work.push_back(q);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree_, false);
  for (std::size_t x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(static_cast<int>(x));
    std::sort(orb.points.begin(), orb.points.end());
    for (int p : orb.points) seen[p] = true;
    out.push_back(std::move(orb.points));
  }
  return out;
}

PermGroup PermGroup::stabilizer(int x) const {
  OrbitData orb = orbit(x);
  std::set<Perm> sgens;
  for (int p : orb.points) {
    const Perm& up = orb.transversal.at(p);
    for (const auto& g : gens_) {
      const Perm& uq = orb.transversal.at(g(p));
      Perm schreier = up.then(g).then(uq.inverse());
      if (!schreier.is_identity()) sgens.insert(schreier);
    }
  }
  return PermGroup(degree_, {sgens.begin(), sgens.end()}).reduced();
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& xs) const {
  PermGroup cur = *this;
  for (int x : xs) cur = cur.stabilizer(x);
  return cur;
}

namespace {

int first_moved(const Perm& g) {
  for (std::size_t x = 0; x < g.degree(); ++x)
    if (g(static_cast<int>(x)) != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

}  // namespace

void PermGroup::build_chain() const {
  if (chain_) return;
  // Deterministic incremental Schreier-Sims: only sifted residues are added
  // as strong generators, which keeps the generator sets small.
  Chain ch;

  auto rebuild_transversal = [&](std::size_t lvl) {
    PermGroup level(degree_, ch.level_gens[lvl]);
    ch.transversal[lvl] = level.orbit(ch.base[lvl]).transversal;
  };

  // Strips g through levels >= from; returns the residue and the level where
  // stripping stopped.
  auto strip = [&](Perm g, std::size_t from) {
    std::size_t lvl = from;
    while (lvl < ch.base.size()) {
      int img = g(ch.base[lvl]);
      auto it = ch.transversal[lvl].find(img);
      if (it == ch.transversal[lvl].end()) break;
      g = g.then(it->second.inverse());
      ++lvl;
    }
    return std::make_pair(g, lvl);
  };

  // A call with fresh generators at level lvl rebuilds the transversal and
  // processes every Schreier generator once. Insertions land strictly deeper
  // (strip starts at lvl+1), so neither the generator list nor the
  // transversal of this level changes during the scan.
  std::function<void(std::size_t)> close_level = [&](std::size_t lvl) {
    rebuild_transversal(lvl);
    std::vector<int> pts;
    for (const auto& [p, u] : ch.transversal[lvl]) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    for (int p : pts) {
      const Perm up = ch.transversal[lvl].at(p);
      for (const auto& g : ch.level_gens[lvl]) {
        int q = g(p);
        Perm schreier = up.then(g).then(ch.transversal[lvl].at(q).inverse());
        if (schreier.is_identity()) continue;
        auto [res, stuck] = strip(schreier, lvl + 1);
        if (res.is_identity()) continue;
        if (stuck == ch.base.size()) {
          int b = first_moved(res);
          ch.base.push_back(b);
          ch.level_gens.emplace_back();
          ch.transversal.emplace_back();
        }
        ch.level_gens[stuck].push_back(res);
        close_level(stuck);
      }
    }
  };

  for (const auto& g : gens_) {
    auto [res, stuck] = strip(g, 0);
    if (res.is_identity()) continue;
    if (stuck == ch.base.size()) {
      int b = first_moved(res);
      ch.base.push_back(b);
      ch.level_gens.emplace_back();
      ch.transversal.emplace_back();
    }
    ch.level_gens[stuck].push_back(res);
    close_level(stuck);
  }
  chain_ = std::move(ch);
}

Perm PermGroup::sift(const Perm& g) const {
  build_chain();
  Perm cur = g;
  for (std::size_t i = 0; i < chain_->base.size(); ++i) {
    int img = cur(chain_->base[i]);
    auto it = chain_->transversal[i].find(img);
    if (it == chain_->transversal[i].end()) return cur;
    cur = cur.then(it->second.inverse());
  }
  return cur;
}

std::uint64_t PermGroup::order() const {
  build_chain();
  std::uint64_t o = 1;
  for (const auto& t : chain_->transversal) o *= t.size();
  return o;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& big) const {
  for (const auto& g : gens_)
    if (!big.contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return is_subgroup_of(other) && other.is_subgroup_of(*this);
}

PermGroup PermGroup::reduced() const {
  std::uint64_t target = order();
  std::vector<Perm> keep;
  PermGroup cur(degree_);
  for (const auto& g : gens_) {
    if (cur.contains(g)) continue;
    keep.push_back(g);
    cur = PermGroup(degree_, keep);
    if (cur.order() == target) break;
  }
  return cur;
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  std::vector<Perm> out{Perm(degree_)};
  std::unordered_set<Perm, PermHash> seen{Perm(degree_)};
  for (std::size_t head = 0; head < out.size(); ++head) {
    Perm cur = out[head];
    for (const auto& g : gens_) {
      Perm next = cur.then(g);
      if (seen.insert(next).second) {
        if (out.size() >= cap) fail(Errc::CapExceeded, "group enumeration cap");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace fig
