#include "fig/pregeo.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace fig {

void Graph::add_edge(int a, int b) {
  if (a == b) return;
  auto& va = adj[a];
  if (!std::binary_search(va.begin(), va.end(), b)) {
    va.insert(std::upper_bound(va.begin(), va.end(), b), b);
    auto& vb = adj[b];
    vb.insert(std::upper_bound(vb.begin(), vb.end(), a), a);
  }
}

bool Graph::has_edge(int a, int b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(size(), -1);
  int c = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    if (comp[s] != -1) continue;
    std::deque<int> work{static_cast<int>(s)};
    comp[s] = c;
    while (!work.empty()) {
      int v = work.front();
      work.pop_front();
      for (int w : adj[v])
        if (comp[w] == -1) {
          comp[w] = c;
          work.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

bool Graph::connected() const {
  if (size() == 0) return true;
  auto comp = components();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

int Graph::diameter() const {
  if (size() == 0) return 0;
  int diam = 0;
  std::vector<int> dist(size());
  for (std::size_t s = 0; s < size(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> work{static_cast<int>(s)};
    dist[s] = 0;
    while (!work.empty()) {
      int v = work.front();
      work.pop_front();
      for (int w : adj[v])
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          work.push_back(w);
        }
    }
    for (std::size_t v = 0; v < size(); ++v) {
      if (dist[v] == -1) return -1;
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

int Pregeometry::add_element(int typ, std::string label) {
  typ_.push_back(typ);
  labels_.push_back(std::move(label));
  adj_.emplace_back();
  return static_cast<int>(typ_.size()) - 1;
}

void Pregeometry::add_incidence(int a, int b) {
  if (a == b) return;
  if (typ_[a] == typ_[b])
    fail(Errc::TypeClash, "(Pre) violated: distinct incident elements of type " +
                              std::to_string(typ_[a]));
  auto& va = adj_[a];
  if (!std::binary_search(va.begin(), va.end(), b)) {
    va.insert(std::upper_bound(va.begin(), va.end(), b), b);
    auto& vb = adj_[b];
    vb.insert(std::upper_bound(vb.begin(), vb.end(), a), a);
  }
}

void Pregeometry::validate() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (int b : adj_[a]) {
      if (static_cast<std::size_t>(b) >= size()) fail(Errc::DomainError, "bad incidence id");
      if (typ_[a] == typ_[b] && static_cast<int>(a) != b)
        fail(Errc::TypeClash, "(Pre) violated");
      if (!std::binary_search(adj_[b].begin(), adj_[b].end(), static_cast<int>(a)))
        fail(Errc::DomainError, "incidence not symmetric");
    }
}

bool Pregeometry::incident(int a, int b) const {
  if (a == b) return true;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<int> Pregeometry::type_set() const {
  std::set<int> s(typ_.begin(), typ_.end());
  return {s.begin(), s.end()};
}

std::vector<int> Pregeometry::elements_of_type(int t) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (typ_[i] == t) out.push_back(static_cast<int>(i));
  return out;
}

bool Pregeometry::is_flag(const std::vector<int>& ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (typ_[ids[i]] == typ_[ids[j]]) return false;
      if (!incident(ids[i], ids[j])) return false;
    }
  return true;
}

bool Pregeometry::is_chamber(const std::vector<int>& ids) const {
  if (!is_flag(ids)) return false;
  std::set<int> t;
  for (int id : ids) t.insert(typ_[id]);
  auto all = type_set();
  return t.size() == all.size();
}

Pregeometry::GeoCheck Pregeometry::check_geometry() const {
  GeoCheck out;
  auto types = type_set();
  // A flag extends to a chamber iff greedily extending by every missing type
  // succeeds from the flag's common-neighbor sets. Checking all flags is
  // exponential in rank; ranks here are tiny, so enumerate flags directly.
  std::vector<std::vector<int>> work{{}};
  // Breadth over flags ordered by max id to avoid duplicates.
  for (std::size_t head = 0; head < work.size(); ++head) {
    std::vector<int> flag = work[head];
    std::set<int> have;
    for (int id : flag) have.insert(typ_[id]);
    bool extendable_somewhere = have.size() == types.size();
    int start = flag.empty() ? 0 : flag.back() + 1;
    for (int cand = start; cand < static_cast<int>(size()); ++cand) {
      if (have.count(typ_[cand])) continue;
      bool ok = true;
      for (int id : flag)
        if (!incident(id, cand)) { ok = false; break; }
      if (!ok) continue;
      extendable_somewhere = true;
      auto next = flag;
      next.push_back(cand);
      work.push_back(std::move(next));
    }
    if (!extendable_somewhere && !flag.empty()) {
      // flag (with ascending ids) cannot be extended by any higher id; it
      // might extend by a lower one, so re-check over all elements.
      bool extends = false;
      for (int cand = 0; cand < static_cast<int>(size()) && !extends; ++cand) {
        if (have.count(typ_[cand])) continue;
        bool ok = true;
        for (int id : flag)
          if (!incident(id, cand)) { ok = false; break; }
        extends = ok;
      }
      if (!extends) {
        out.is_geometry = false;
        out.witness = flag;
        return out;
      }
    }
  }
  out.is_geometry = true;
  return out;
}

Pregeometry Pregeometry::residue(const std::vector<int>& flag, std::vector<int>* back_map) const {
  if (!is_flag(flag)) fail(Errc::NotAFlag, "residue of a non-flag");
  std::set<int> flag_types;
  for (int id : flag) flag_types.insert(typ_[id]);
  std::vector<int> keep;
  for (std::size_t x = 0; x < size(); ++x) {
    if (flag_types.count(typ_[x])) continue;
    bool ok = true;
    for (int id : flag)
      if (!incident(id, static_cast<int>(x))) { ok = false; break; }
    if (ok) keep.push_back(static_cast<int>(x));
  }
  Pregeometry out;
  std::map<int, int> fwd;
  for (int x : keep) {
    fwd[x] = out.add_element(typ_[x], labels_[x]);
  }
  for (int x : keep)
    for (int y : adj_[x])
      if (y > x && fwd.count(y)) out.add_incidence(fwd[x], fwd[y]);
  if (back_map) *back_map = keep;
  return out;
}

Pregeometry Pregeometry::truncate(const std::vector<int>& types, std::vector<int>* back_map) const {
  std::set<int> keep_types(types.begin(), types.end());
  Pregeometry out;
  std::vector<int> keep;
  std::map<int, int> fwd;
  for (std::size_t x = 0; x < size(); ++x)
    if (keep_types.count(typ_[x])) {
      fwd[static_cast<int>(x)] = out.add_element(typ_[x], labels_[x]);
      keep.push_back(static_cast<int>(x));
    }
  for (int x : keep)
    for (int y : adj_[x])
      if (y > x && fwd.count(y)) out.add_incidence(fwd[x], fwd[y]);
  if (back_map) *back_map = keep;
  return out;
}

Pregeometry Pregeometry::direct_sum(const Pregeometry& a, const Pregeometry& b) {
  auto ta = a.type_set(), tb = b.type_set();
  for (int t : ta)
    if (std::binary_search(tb.begin(), tb.end(), t))
      fail(Errc::TypeClash, "direct_sum type sets not disjoint");
  Pregeometry out;
  for (std::size_t i = 0; i < a.size(); ++i) out.add_element(a.typ_[i], a.labels_[i]);
  int off = static_cast<int>(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) out.add_element(b.typ_[i], b.labels_[i]);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (int y : a.adj_[x])
      if (y > static_cast<int>(x)) out.add_incidence(static_cast<int>(x), y);
  for (std::size_t x = 0; x < b.size(); ++x)
    for (int y : b.adj_[x])
      if (y > static_cast<int>(x)) out.add_incidence(static_cast<int>(x) + off, y + off);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      out.add_incidence(static_cast<int>(x), static_cast<int>(y) + off);
  return out;
}

bool Pregeometry::is_connected() const {
  Graph g(size());
  for (std::size_t x = 0; x < size(); ++x)
    for (int y : adj_[x])
      if (y > static_cast<int>(x)) g.add_edge(static_cast<int>(x), y);
  return g.connected();
}

bool Pregeometry::is_lounge(const std::vector<int>& s) const {
  // Every type-injective subset is a flag <=> every type-injective PAIR is
  // incident (pairwise incidence is all a flag needs).
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (typ_[s[i]] != typ_[s[j]] && !incident(s[i], s[j])) return false;
  return true;
}

bool Pregeometry::is_hall(const std::vector<int>& s) const {
  if (!is_lounge(s)) return false;
  std::set<int> t;
  for (int id : s) t.insert(typ_[id]);
  auto all = type_set();
  return t.size() == all.size();
}

Pregeometry::Diagram Pregeometry::basic_diagram(std::size_t exhaustive_budget,
                                                std::size_t samples,
                                                std::uint64_t seed) const {
  Diagram out;
  out.types = type_set();
  std::size_t n_types = out.types.size();
  out.graph = Graph(n_types);
  std::map<int, int> tidx;
  for (std::size_t i = 0; i < n_types; ++i) tidx[out.types[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < n_types; ++i) {
    for (std::size_t j = i + 1; j < n_types; ++j) {
      std::vector<int> cotype;
      for (std::size_t k = 0; k < n_types; ++k)
        if (k != i && k != j) cotype.push_back(out.types[k]);
      // Count flags of that type vector before enumerating them all.
      auto flags = flags_with_types(cotype, exhaustive_budget);
      bool edge = false;
      if (flags.second) {
        for (const auto& fl : flags.first) {
          std::vector<int> bm;
          Pregeometry res = residue(fl, &bm);
          // two non-incident elements in the residue?
          for (std::size_t a = 0; a < res.size() && !edge; ++a)
            for (std::size_t b = a + 1; b < res.size(); ++b)
              if (!res.incident(static_cast<int>(a), static_cast<int>(b))) {
                edge = true;
                break;
              }
          if (edge) break;
        }
      } else {
        out.exhaustive = false;
        std::uint64_t rng = seed + i * 131 + j;
        for (std::size_t trial = 0; trial < samples && !edge; ++trial) {
          auto fl = sample_flag_with_types(cotype, rng);
          if (!fl) continue;
          std::vector<int> bm;
          Pregeometry res = residue(*fl, &bm);
          for (std::size_t a = 0; a < res.size() && !edge; ++a)
            for (std::size_t b = a + 1; b < res.size(); ++b)
              if (!res.incident(static_cast<int>(a), static_cast<int>(b))) {
                edge = true;
                break;
              }
        }
      }
      if (edge) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Graph Pregeometry::collinearity_graph(int point_type, int line_type) const {
  auto points = elements_of_type(point_type);
  std::map<int, int> pidx;
  for (std::size_t i = 0; i < points.size(); ++i) pidx[points[i]] = static_cast<int>(i);
  Graph g(points.size());
  for (int l : elements_of_type(line_type)) {
    std::vector<int> on_line;
    for (int nb : adj_[l])
      if (typ_[nb] == point_type) on_line.push_back(nb);
    for (std::size_t a = 0; a < on_line.size(); ++a)
      for (std::size_t b = a + 1; b < on_line.size(); ++b)
        g.add_edge(pidx[on_line[a]], pidx[on_line[b]]);
  }
  return g;
}

std::vector<std::array<int, 3>> Pregeometry::pennants() const {
  std::vector<std::array<int, 3>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (int b : adj_[a]) {
      if (b <= static_cast<int>(a)) continue;
      for (int c : adj_[b]) {
        if (c <= b) continue;
        if (incident(static_cast<int>(a), c))
          out.push_back({static_cast<int>(a), b, c});
      }
    }
  return out;
}

void Pregeometry::extend_flags(std::vector<std::vector<int>>& out, std::vector<int>& cur,
                               int start, std::size_t k, std::size_t cap) const {
  if (out.size() >= cap) return;
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (int cand = start; cand < static_cast<int>(size()); ++cand) {
    bool ok = true;
    for (int id : cur) {
      if (typ_[id] == typ_[cand] || !incident(id, cand)) { ok = false; break; }
    }
    if (!ok) continue;
    cur.push_back(cand);
    extend_flags(out, cur, cand + 1, k, cap);
    cur.pop_back();
    if (out.size() >= cap) return;
  }
}

std::vector<std::vector<int>> Pregeometry::flags_of_cardinality(std::size_t k,
                                                                std::size_t cap) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend_flags(out, cur, 0, k, cap);
  return out;
}

std::vector<std::vector<int>> Pregeometry::chambers(std::size_t cap) const {
  auto types = type_set();
  std::vector<std::vector<int>> out;
  for (auto& fl : flags_of_cardinality(types.size(), cap)) out.push_back(fl);
  return out;
}

std::pair<std::vector<std::vector<int>>, bool> Pregeometry::flags_with_types(
    const std::vector<int>& types, std::size_t budget) const {
  std::vector<std::vector<int>> out;
  if (types.empty()) {
    out.push_back({});
    return {out, true};
  }
  std::vector<std::vector<int>> pools;
  for (int t : types) pools.push_back(elements_of_type(t));
  std::vector<int> cur;
  bool complete = true;
  // Depth-first product with incidence pruning.
  std::vector<std::size_t> idx(types.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (out.size() >= budget) {
      complete = false;
      break;
    }
    if (depth == types.size()) {
      out.push_back(cur);
      --depth;
      cur.pop_back();
      ++idx[depth];
      continue;
    }
    if (idx[depth] >= pools[depth].size()) {
      if (depth == 0) break;
      idx[depth] = 0;
      --depth;
      cur.pop_back();
      ++idx[depth];
      continue;
    }
    int cand = pools[depth][idx[depth]];
    bool ok = true;
    for (int id : cur)
      if (!incident(id, cand)) { ok = false; break; }
    if (ok) {
      cur.push_back(cand);
      ++depth;
    } else {
      ++idx[depth];
    }
  }
  return {out, complete};
}

static std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::optional<std::vector<int>> Pregeometry::sample_flag_with_types(
    const std::vector<int>& types, std::uint64_t& state) const {
  std::vector<int> cur;
  for (int t : types) {
    std::vector<int> pool;
    for (int cand : elements_of_type(t)) {
      bool ok = true;
      for (int id : cur)
        if (!incident(id, cand)) { ok = false; break; }
      if (ok) pool.push_back(cand);
    }
    if (pool.empty()) return std::nullopt;
    cur.push_back(pool[splitmix64(state) % pool.size()]);
  }
  return cur;
}

}  // namespace fig
