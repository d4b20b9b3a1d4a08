#include "fig/cosetgeo.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace fig {

void verify_action(const Pregeometry& g, const std::vector<Perm>& gens) {
  for (const auto& p : gens) {
    if (p.degree() != g.size()) fail(Errc::NotAnAction, "degree != element count");
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g.typ(p(static_cast<int>(x))) != g.typ(static_cast<int>(x)))
        fail(Errc::NotAnAction, "generator does not preserve types");
      for (int y : g.neighbors(static_cast<int>(x)))
        if (!g.incident(p(static_cast<int>(x)), p(y)))
          fail(Errc::NotAnAction, "generator does not preserve incidence");
    }
  }
}

std::vector<Perm> action_from_matrices(const std::vector<Subspace>& elements,
                                       const MatGroup& mg) {
  std::unordered_map<Subspace, int, SubspaceHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<int>(i));
  std::vector<Perm> out;
  for (const auto& m : mg.generators()) {
    std::vector<int> img(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      Subspace moved = mg.apply(m, elements[i]);
      auto it = index.find(moved);
      if (it == index.end())
        fail(Errc::NotAnAction, "matrix moves an element outside the geometry");
      img[i] = it->second;
    }
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

CosetGeometryResult coset_pregeometry(const PermGroup& g, const std::vector<FamilyEntry>& family,
                                      std::size_t cap) {
  CosetGeometryResult out;
  auto elements = g.elements(cap);
  std::sort(elements.begin(), elements.end());
  std::unordered_map<Perm, int, PermHash> elem_index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    elem_index.emplace(elements[i], static_cast<int>(i));

  // coset label per element per family member
  std::vector<std::vector<int>> labels(family.size());
  std::vector<std::vector<int>> coset_min(family.size());  // coset -> min element index
  for (std::size_t j = 0; j < family.size(); ++j) {
    for (const auto& gen : family[j].subgroup.generators())
      if (!g.contains(gen)) fail(Errc::DomainError, "family member is not a subgroup");
    auto helems = family[j].subgroup.elements(cap);
    std::vector<int>& lab = labels[j];
    lab.assign(elements.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (lab[i] != -1) continue;
      int c = next++;
      coset_min[j].push_back(static_cast<int>(i));
      // left coset g H = { g . h } with "apply h first"? Composition here:
      // (a.then(b))(x) = b(a(x)), i.e. a.then(b) = b*a in the usual action
      // notation. The left coset of g is { h.then(g) : h in H }.
      for (const auto& h : helems) {
        auto it = elem_index.find(h.then(elements[i]));
        if (it == elem_index.end()) fail(Errc::DomainError, "subgroup not closed in G");
        if (lab[it->second] == -1) lab[it->second] = c;
      }
    }
  }

  // elements of the pregeometry: (family member j, coset c)
  std::vector<std::vector<int>> ids(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    ids[j].resize(coset_min[j].size());
    for (std::size_t c = 0; c < coset_min[j].size(); ++c) {
      std::string label = family[j].tag + "/" + std::to_string(c);
      ids[j][c] = out.geometry.add_element(family[j].type, label);
      out.cosets.emplace_back(j, elements[coset_min[j][c]]);
    }
  }
  // (Cos): sweep group elements once per ordered pair of family members.
  for (std::size_t j = 0; j < family.size(); ++j)
    for (std::size_t k = j + 1; k < family.size(); ++k) {
      if (family[j].type == family[k].type) continue;  // distinct classes: never incident
      std::set<std::pair<int, int>> seen;
      for (std::size_t i = 0; i < elements.size(); ++i)
        seen.insert({labels[j][i], labels[k][i]});
      for (const auto& [cj, ck] : seen)
        out.geometry.add_incidence(ids[j][cj], ids[k][ck]);
    }
  return out;
}

bool connectivity_criterion(const PermGroup& g, const std::vector<FamilyEntry>& family) {
  std::vector<Perm> all;
  for (const auto& fe : family)
    for (const auto& gen : fe.subgroup.generators()) all.push_back(gen);
  PermGroup generated(g.degree(), all);
  return generated.order() == g.order();
}

Sketch make_sketch(const Pregeometry& g, const PermGroup& aut, const std::vector<int>& reps,
                   std::size_t cap) {
  verify_action(g, aut.generators());
  auto orbits = aut.orbits();
  // reps must hit every orbit exactly once
  std::vector<int> orbit_of(g.size(), -1);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int x : orbits[o]) orbit_of[x] = static_cast<int>(o);
  std::vector<int> hit(orbits.size(), 0);
  for (int w : reps) hit[orbit_of[w]] += 1;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (hit[o] != 1)
      fail(Errc::NotRepresentatives,
           hit[o] ? "two representatives in one orbit" : "an orbit has no representative");

  Sketch out;
  out.reps = reps;
  // vertices: (w, x) for x in orbit(w); the coset aG_w corresponds to a.w = x
  std::map<std::pair<int, int>, int> vid;
  for (int w : reps) {
    for (int x : orbits[orbit_of[w]]) {
      int id = out.geometry.add_element(g.typ(w), g.label(w) + "->" + g.label(x));
      vid[{w, x}] = id;
      out.vertices.emplace_back(w, x);
    }
  }
  // (Cos) incidence: aG_w meets bG_w' iff some c has c.w = x and c.w' = x';
  // sweep the group once and record the pairs realized.
  auto elements = aut.elements(cap);
  std::set<std::pair<int, int>> incident;
  for (const auto& a : elements) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (g.typ(reps[i]) == g.typ(reps[j])) continue;
        int vi = vid.at({reps[i], a(reps[i])});
        int vj = vid.at({reps[j], a(reps[j])});
        incident.insert({std::min(vi, vj), std::max(vi, vj)});
      }
  }
  for (const auto& [a, b] : incident) out.geometry.add_incidence(a, b);
  return out;
}

StroppelReport stroppel_reconstruct(const Pregeometry& g, const PermGroup& aut,
                                    const std::vector<int>& reps, std::size_t cap) {
  StroppelReport rep;
  Sketch sk = make_sketch(g, aut, reps, cap);

  // hypotheses
  rep.hypothesis_hall = g.is_hall(reps);
  rep.hypothesis_incidence_transitive = true;
  // chambers inside W
  std::vector<std::vector<int>> rep_chambers;
  std::size_t k = g.type_set().size();
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (cur.size() == k) {
      rep_chambers.push_back(cur);
      return;
    }
    for (std::size_t i = idx; i < reps.size(); ++i) {
      bool ok = true;
      for (int c : cur)
        if (g.typ(c) == g.typ(reps[i]) || !g.incident(c, reps[i])) { ok = false; break; }
      if (ok) {
        cur.push_back(reps[i]);
        rec(i + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  for (const auto& ch : rep_chambers) {
    std::vector<int> back;
    Pregeometry og = orbit_geometry(g, aut, ch, &back);
    // restrict the action to the orbit geometry
    std::unordered_map<int, int> fwd;
    for (std::size_t i = 0; i < back.size(); ++i) fwd[back[i]] = static_cast<int>(i);
    std::vector<Perm> gens;
    for (const auto& p : aut.generators()) {
      std::vector<int> img(back.size());
      for (std::size_t i = 0; i < back.size(); ++i) img[i] = fwd.at(p(back[i]));
      gens.push_back(Perm(std::move(img)));
    }
    PermGroup restricted(back.size(), gens);
    auto tr = transitivity_check(og, restricted, TransitivityLevel::Incidence, cap);
    if (!tr.transitive) rep.hypothesis_incidence_transitive = false;
  }

  // Phi: (w, x) -> x. Bijectivity and type preservation.
  rep.bijective = sk.vertices.size() == g.size();
  std::vector<int> seen(g.size(), 0);
  rep.type_preserving = true;
  for (std::size_t v = 0; v < sk.vertices.size(); ++v) {
    auto [w, x] = sk.vertices[v];
    seen[x] += 1;
    if (sk.geometry.typ(static_cast<int>(v)) != g.typ(x)) rep.type_preserving = false;
  }
  for (int s : seen)
    if (s != 1) rep.bijective = false;

  // incidence both ways over all pairs
  std::map<int, int> to_target;  // sketch id -> target id
  for (std::size_t v = 0; v < sk.vertices.size(); ++v)
    to_target[static_cast<int>(v)] = sk.vertices[v].second;
  for (std::size_t a = 0; a < sk.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < sk.vertices.size(); ++b) {
      bool si = sk.geometry.incident(static_cast<int>(a), static_cast<int>(b));
      bool gi = g.incident(to_target[static_cast<int>(a)], to_target[static_cast<int>(b)]);
      // same-type pairs: the sketch never links distinct classes of the same
      // type; Phi being an isomorphism of pregeometries concerns the full
      // relation, and (Pre) forces distinct same-type elements non-incident
      // in g as well.
      ++rep.checked_pairs;
      if (si != gi) ++rep.incidence_mismatches;
    }
  return rep;
}

TransitivityReport transitivity_check(const Pregeometry& g, const PermGroup& aut,
                                      TransitivityLevel level, std::size_t cap) {
  verify_action(g, aut.generators());
  TransitivityReport rep;
  std::vector<std::size_t> cards;
  std::size_t rank = g.type_set().size();
  switch (level) {
    case TransitivityLevel::Vertex: cards = {1}; break;
    case TransitivityLevel::Incidence: cards = {2}; break;
    case TransitivityLevel::Pennant: cards = {3}; break;
    case TransitivityLevel::Chamber: cards = {rank}; break;
    case TransitivityLevel::Flag:
      for (std::size_t c = 1; c <= rank; ++c) cards.push_back(c);
      break;
  }
  for (std::size_t c : cards) {
    auto flags = g.flags_of_cardinality(c, cap);
    if (flags.size() >= cap) fail(Errc::CapExceeded, "flag enumeration cap");
    // orbit partition on flags (as sorted id vectors)
    std::map<std::vector<int>, int> index;
    for (auto& fl : flags) {
      std::sort(fl.begin(), fl.end());
      index.emplace(fl, static_cast<int>(index.size()));
    }
    std::vector<int> comp(index.size(), -1);
    int ncomp = 0;
    std::vector<const std::vector<int>*> by_id(index.size());
    for (auto& [fl, id] : index) by_id[id] = &fl;
    for (std::size_t s = 0; s < index.size(); ++s) {
      if (comp[s] != -1) continue;
      int cid = ncomp++;
      std::vector<int> work{static_cast<int>(s)};
      comp[s] = cid;
      while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        for (const auto& p : aut.generators()) {
          std::vector<int> img;
          for (int x : *by_id[v]) img.push_back(p(x));
          std::sort(img.begin(), img.end());
          int w = index.at(img);
          if (comp[w] == -1) {
            comp[w] = cid;
            work.push_back(w);
          }
        }
      }
    }
    // orbit counts per type vector
    std::map<std::vector<int>, std::set<int>> comps_per_tv;
    for (auto& [fl, id] : index) {
      std::vector<int> tv;
      for (int x : fl) tv.push_back(g.typ(x));
      std::sort(tv.begin(), tv.end());
      comps_per_tv[tv].insert(comp[id]);
    }
    for (auto& [tv, cs] : comps_per_tv) {
      rep.orbit_counts[tv] = cs.size();
      if (cs.size() > 1) rep.transitive = false;
    }
  }
  return rep;
}

Pregeometry orbit_geometry(const Pregeometry& g, const PermGroup& aut,
                           const std::vector<int>& chamber, std::vector<int>* back_map) {
  if (!g.is_flag(chamber) || chamber.empty()) fail(Errc::NotAChamber, "orbit_geometry");
  std::set<int> keep;
  for (int x : chamber)
    for (int y : aut.orbit(x).points) keep.insert(y);
  Pregeometry out;
  std::vector<int> back;
  std::map<int, int> fwd;
  for (int x : keep) {
    fwd[x] = out.add_element(g.typ(x), g.label(x));
    back.push_back(x);
  }
  for (int x : keep)
    for (int y : g.neighbors(x))
      if (y > x && keep.count(y)) out.add_incidence(fwd[x], fwd[y]);
  if (back_map) *back_map = back;
  return out;
}

}  // namespace fig
